//! Covered components polynomial and edge elimination polynomial of
//! multigraphs and hypergraphs, with the polynomials and invariants that can
//! be read off from them.

pub mod atlas;
pub mod engine;
pub mod error;
pub mod forest;
pub mod graph;
pub mod invariants;
pub mod poly;
pub mod specializations;

pub use engine::{CoefficientTable, Engine, EngineConfig};
pub use error::{Error, Result};
pub use graph::{Edge, Hypergraph, Multigraph};
pub use poly::{BiPoly, TriPoly, UniPoly};
