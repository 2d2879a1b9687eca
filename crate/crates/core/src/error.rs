use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge {0} is not present in the graph")]
    MissingEdge(usize),

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("hyperedge must be a nonempty vertex subset")]
    EmptyHyperedge,

    #[error("invalid size {size} for {what}")]
    InvalidSize { what: &'static str, size: usize },

    #[error("{what}: limit {cap} exceeded (got {got})")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        got: usize,
    },

    #[error("operation requires a simple graph: {0}")]
    NotSimple(&'static str),

    #[error("operation requires a forest")]
    NotAForest,

    #[error("malformed graph6 input at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: &'static str },

    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("negative exponent in non-Laurent polynomial")]
    LaurentViolation,

    #[error("division by zero while evaluating a Laurent term")]
    DivisionByZero,

    #[error("Laurent terms did not cancel: {0}")]
    CancellationFailure(String),

    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(String),

    #[error("non-integral value in {0}")]
    NotDivisible(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("identity violated: {0}")]
    IdentityViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
