//! Polynomials obtained from `C(G)` by evaluation, substitution or a
//! transform of the coefficient table, plus direct enumerations for
//! cross-checking them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::engine::{CoefficientTable, Engine};
use crate::error::{Error, Result};
use crate::graph::canon::matrix_key;
use crate::graph::{AdjacencyMatrix, CanonicalKey, Hypergraph, Multigraph, DEFAULT_CANONICAL_CAP};
use crate::poly::tri::{mono, x, y, z};
use crate::poly::{transform_counts, BiPoly, TriPoly, UniPoly};

fn sign(j: u32) -> BigInt {
    if j % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn uni_x() -> UniPoly {
    UniPoly::var(0)
}

fn uni(c: i64) -> UniPoly {
    UniPoly::constant(c)
}

/// `ξ = Σ c · x^{i−k} y^{j−k} (z + xy)^k`.
pub fn to_eep(table: &CoefficientTable) -> TriPoly {
    let shifted: Vec<([u32; 3], &BigInt)> = table.entries().map(|([i, j, k], c)| ([i - k, j - k, k], c)).collect();
    transform_counts(shifted, &x(), &y(), &(z() + mono(1, 1, 1, 0)))
}

/// `C = ξ(x, y, xyz − xy)`.
pub fn from_eep(xi: &TriPoly) -> TriPoly {
    xi.substitute(2, &(mono(1, 1, 1, 1) - mono(1, 1, 1, 0)))
        .expect("polynomial substitution into a polynomial")
}

/// Potts partition function `Z(x, y) = C(x, y, 1)`.
pub fn potts(c: &TriPoly) -> BiPoly {
    let mut out = BiPoly::zero();
    for (e, v) in c.terms() {
        out.add_term([e[0], e[1]], v.clone());
    }
    out
}

/// Chromatic polynomial `χ(x) = C(x, −1, 1)`.
pub fn chromatic(c: &TriPoly) -> UniPoly {
    let mut out = UniPoly::zero();
    for (e, v) in c.terms() {
        out.add_term([e[0]], v * sign(e[1] as u32));
    }
    out
}

/// `P(x, y) = Σ c · (−1)^j x^{i−k} y^k`. Also valid for hypergraph tables.
pub fn bivariate_chromatic(table: &CoefficientTable) -> BiPoly {
    let mut out = BiPoly::zero();
    for ([i, j, k], c) in table.entries() {
        out.add_term([(i - k) as i32, k as i32], c * sign(j));
    }
    out
}

fn uni_powers(base: UniPoly, max: u32) -> Vec<UniPoly> {
    let mut out = vec![UniPoly::one()];
    for k in 1..=max as usize {
        let next = &out[k - 1] * &base;
        out.push(next);
    }
    out
}

/// Vertex-cover polynomial `Ψ(x) = Σ c · (−1)^j (x+1)^{i−k}`.
pub fn vertex_cover(table: &CoefficientTable) -> UniPoly {
    let pw = uni_powers(&uni_x() + &uni(1), table.n as u32);
    let mut out = UniPoly::zero();
    for ([i, j, k], c) in table.entries() {
        out += &pw[(i - k) as usize].scale(&(c * sign(j)));
    }
    out
}

/// Independence polynomial `I(x) = Σ c · (−1)^j x^{n−(i−k)} (x+1)^{i−k}`.
pub fn independence(table: &CoefficientTable) -> UniPoly {
    let pw = uni_powers(&uni_x() + &uni(1), table.n as u32);
    let mut out = UniPoly::zero();
    for ([i, j, k], c) in table.entries() {
        let iso = (i - k) as usize;
        let term = &UniPoly::monomial([(table.n - iso) as i32], c * sign(j)) * &pw[iso];
        out += &term;
    }
    out
}

/// Number of independent sets, `Σ c · (−1)^j 2^{i−k}`.
pub fn sigma(table: &CoefficientTable) -> BigInt {
    table
        .entries()
        .map(|([i, j, k], c)| c * sign(j) * (BigInt::one() << (i - k) as usize))
        .sum()
}

/// Bivariate matching polynomial `M(x, y) = Σ_i c[n−i, i, i] · x^{n−2i} y^i`.
pub fn matching(table: &CoefficientTable) -> BiPoly {
    let n = table.n as u32;
    let mut out = BiPoly::zero();
    for i in 0..=n / 2 {
        out.add_term([(n - 2 * i) as i32, i as i32], table.get(n - i, i, i));
    }
    out
}

/// Clique polynomial `1 + n·x + Σ_{i≥2} c[n−i+1, binom(i,2), 1] · x^i` of a simple graph.
pub fn clique_polynomial(table: &CoefficientTable) -> Result<UniPoly> {
    if !crate::invariants::is_simple(&table.to_poly(), table.n) {
        return Err(Error::NotSimple("clique polynomial"));
    }
    let n = table.n as u32;
    let mut out = uni(1);
    out.add_term([1], BigInt::from(n));
    for i in 2..=n {
        out.add_term([i as i32], table.get(n - i + 1, i * (i - 1) / 2, 1));
    }
    Ok(out)
}

/// `C(1, x, y)`, the subgraph component polynomial of the line graph.
pub fn subgraph_component_line(c: &TriPoly) -> BiPoly {
    let mut out = BiPoly::zero();
    for (e, v) in c.terms() {
        out.add_term([e[1], e[2]], v.clone());
    }
    out
}

pub const SUBGRAPH_COMPONENT_VERTEX_CAP: usize = 16;

/// `Σ_W x^{|W|} y^{k(H[W])}` over vertex subsets `W`.
pub fn subgraph_component_bruteforce(h: &Multigraph) -> Result<BiPoly> {
    let n = h.n();
    if n > SUBGRAPH_COMPONENT_VERTEX_CAP {
        return Err(Error::CapExceeded {
            what: "subgraph component vertex count",
            cap: SUBGRAPH_COMPONENT_VERTEX_CAP,
            got: n,
        });
    }
    let mut out = BiPoly::zero();
    for mask in 0u32..1 << n {
        let keep: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        let k = h.induced(&keep).component_stats().k;
        out.add_term([mask.count_ones() as i32, k as i32], BigInt::one());
    }
    Ok(out)
}

/// Probability that no vertex is isolated when each edge survives with probability `p`:
/// `Σ_{i = k} c · p^j (1−p)^{m−j}`.
pub fn reliability_no_isolated(table: &CoefficientTable, p: &BigRational) -> BigRational {
    let q = BigRational::one() - p;
    let mut total = BigRational::zero();
    for ([i, j, k], c) in table.entries() {
        if i == k {
            let term = num_traits::pow(p.clone(), j as usize) * num_traits::pow(q.clone(), table.m - j as usize);
            total += BigRational::from_integer(c.clone()) * term;
        }
    }
    total
}

/// The same probability as a polynomial in `p`.
pub fn reliability_no_isolated_poly(table: &CoefficientTable) -> UniPoly {
    let q = &uni(1) - &uni_x();
    let qp = uni_powers(q, table.m as u32);
    let mut out = UniPoly::zero();
    for ([i, j, k], c) in table.entries() {
        if i == k {
            let term = &UniPoly::monomial([j as i32], c.clone()) * &qp[table.m - j as usize];
            out += &term;
        }
    }
    out
}

/// Vertex-cover polynomial by `Ψ(G) = Ψ(G₋ₑ) − Ψ(G/ₑ) + x·Ψ(G†ₑ)`, `Ψ(K₁) = x + 1`.
pub fn vertex_cover_recurrence(g: &Multigraph) -> UniPoly {
    let mut memo = HashMap::new();
    cover_rec(&AdjacencyMatrix::from_multigraph(g), &mut memo)
}

fn cover_rec(a: &AdjacencyMatrix, memo: &mut HashMap<CanonicalKey, UniPoly>) -> UniPoly {
    let n = a.n();
    let pair = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).find(|&(u, v)| a.get(u, v) > 0);
    let Some((u, v)) = pair else {
        return (&uni_x() + &uni(1)).pow(n as u32);
    };
    let key = matrix_key(a, DEFAULT_CANONICAL_CAP).ok();
    if let Some(p) = key.as_ref().and_then(|k| memo.get(k)) {
        return p.clone();
    }
    let mut minus = a.clone();
    minus.set(u, v, a.get(u, v) - 1);
    let p = if u == v {
        // contracting a loop deletes it, and the two terms cancel
        &uni_x() * &cover_rec(&a.without_vertex(v), memo)
    } else {
        let contracted = minus.merge(u, v);
        let extracted = a.without_vertices(u, v);
        &(&cover_rec(&minus, memo) - &cover_rec(&contracted, memo)) + &(&uni_x() * &cover_rec(&extracted, memo))
    };
    if let Some(k) = key {
        memo.insert(k, p.clone());
    }
    p
}

/// Counts via the definition: `(vertex covers by size, independent sets by size)`.
pub fn cover_and_independence_bruteforce(g: &Multigraph) -> (UniPoly, UniPoly) {
    let n = g.n();
    assert!(n <= 20, "enumeration over 2^n vertex subsets");
    let mut cover = UniPoly::zero();
    let mut indep = UniPoly::zero();
    for mask in 0u32..1 << n {
        let inside = |v: usize| mask >> v & 1 == 1;
        let size = mask.count_ones() as i32;
        if g.edges().iter().all(|e| inside(e.a) || inside(e.b)) {
            cover.add_term([size], BigInt::one());
        }
        if g.edges().iter().all(|e| !(inside(e.a) && inside(e.b))) {
            indep.add_term([size], BigInt::one());
        }
    }
    (cover, indep)
}

/// Proper colorings with `q` colors, by enumeration.
pub fn proper_colorings_bruteforce(g: &Multigraph, q: u32) -> BigInt {
    let n = g.n();
    let mut color = vec![0u32; n];
    let mut count = 0u64;
    if q == 0 {
        return BigInt::from((n == 0) as u32);
    }
    loop {
        if g.edges().iter().all(|e| color[e.a] != color[e.b]) {
            count += 1;
        }
        let mut i = 0;
        while i < n && color[i] == q - 1 {
            color[i] = 0;
            i += 1;
        }
        if i == n {
            return BigInt::from(count);
        }
        color[i] += 1;
    }
}

pub const COLORING_COUNT_VERTEX_CAP: usize = 8;

/// Colorings `V → {1..x}` in which every monochromatic hyperedge has color `> y`.
pub fn hypergraph_chromatic_count(h: &Hypergraph, x: u32, y: u32) -> Result<BigInt> {
    if y > x {
        return Err(Error::InvalidArgument(format!("need x >= y, got x = {x}, y = {y}")));
    }
    let n = h.n();
    if n > COLORING_COUNT_VERTEX_CAP {
        return Err(Error::CapExceeded {
            what: "coloring enumeration vertex count",
            cap: COLORING_COUNT_VERTEX_CAP,
            got: n,
        });
    }
    if x == 0 {
        return Ok(BigInt::from((n == 0) as u32));
    }
    let mut color = vec![1u32; n];
    let mut count = 0u64;
    loop {
        let ok = h.edges().iter().all(|e| {
            let c = color[e[0]];
            !e.iter().all(|&v| color[v] == c) || c > y
        });
        if ok {
            count += 1;
        }
        let mut i = 0;
        while i < n && color[i] == x {
            color[i] = 1;
            i += 1;
        }
        if i == n {
            return Ok(BigInt::from(count));
        }
        color[i] += 1;
    }
}

/// Hypergraph bivariate chromatic polynomial by
/// `P(G) = P(G₋ₑ) − P(G/ₑ) + (x − y)·P(G†ₑ)`, `P(K₁) = x`.
pub fn hypergraph_bivariate_chromatic_recurrence(h: &Hypergraph) -> BiPoly {
    if h.m() == 0 {
        return BiPoly::monomial([h.n() as i32, 0], 1);
    }
    let e = h.m() - 1;
    let minus = hypergraph_bivariate_chromatic_recurrence(&h.delete_edge(e).unwrap());
    let contracted = hypergraph_bivariate_chromatic_recurrence(&h.contract_edge(e).unwrap());
    let extracted = hypergraph_bivariate_chromatic_recurrence(&h.extract_edge(e).unwrap());
    let x_minus_y = &BiPoly::var(0) - &BiPoly::var(1);
    &(&minus - &contracted) + &(&x_minus_y * &extracted)
}

/// Lagrange basis for integer nodes, as dense rational coefficient vectors.
fn lagrange_basis(nodes: &[i64]) -> Vec<Vec<BigRational>> {
    nodes
        .iter()
        .enumerate()
        .map(|(a, &xa)| {
            let mut coeffs = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (b, &xb) in nodes.iter().enumerate() {
                if a == b {
                    continue;
                }
                let mut next = vec![BigRational::zero(); coeffs.len() + 1];
                for (d, c) in coeffs.iter().enumerate() {
                    next[d + 1] += c;
                    next[d] -= c * BigRational::from_integer(BigInt::from(xb));
                }
                coeffs = next;
                denom *= BigRational::from_integer(BigInt::from(xa - xb));
            }
            coeffs.into_iter().map(|c| c / &denom).collect()
        })
        .collect()
}

/// Recovers `P(x, y)` from coloring counts on an integer grid with `x >= y`.
pub fn hypergraph_bivariate_chromatic_interpolated(h: &Hypergraph) -> Result<BiPoly> {
    let dx = h.n() as i64;
    let dy = h.n().min(h.m()) as i64;
    let ys: Vec<i64> = (0..=dy).collect();
    let xs: Vec<i64> = (dy..=dy + dx).collect();
    let lx = lagrange_basis(&xs);
    let ly = lagrange_basis(&ys);
    let mut acc: HashMap<(usize, usize), BigRational> = HashMap::new();
    for (a, &xa) in xs.iter().enumerate() {
        for (b, &yb) in ys.iter().enumerate() {
            let v = hypergraph_chromatic_count(h, xa as u32, yb as u32)?;
            if v.is_zero() {
                continue;
            }
            let v = BigRational::from_integer(v);
            for (i, cx) in lx[a].iter().enumerate() {
                if cx.is_zero() {
                    continue;
                }
                for (j, cy) in ly[b].iter().enumerate() {
                    *acc.entry((i, j)).or_insert_with(BigRational::zero) += &v * cx * cy;
                }
            }
        }
    }
    let mut out = BiPoly::zero();
    for ((i, j), c) in acc {
        if !c.is_integer() {
            return Err(Error::NotDivisible("interpolated chromatic coefficient"));
        }
        out.add_term([i as i32, j as i32], c.to_integer());
    }
    Ok(out)
}

/// How the hypergraph bivariate chromatic polynomial is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChromaticMode {
    /// Coloring counts on a grid, then exact interpolation.
    Count,
    Recurrence,
    /// Coefficient transform of the hypergraph's covered components table.
    FromCcp,
}

pub fn hypergraph_bivariate_chromatic(h: &Hypergraph, mode: ChromaticMode, engine: &mut Engine) -> Result<BiPoly> {
    match mode {
        ChromaticMode::Count => hypergraph_bivariate_chromatic_interpolated(h),
        ChromaticMode::Recurrence => Ok(hypergraph_bivariate_chromatic_recurrence(h)),
        ChromaticMode::FromCcp => Ok(bivariate_chromatic(&engine.coefficient_table_hypergraph(h))),
    }
}

/// Named outputs of [`specialize`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Eep,
    Potts,
    Chromatic,
    BivariateChromatic,
    VertexCover,
    Independence,
    Sigma,
    Matching,
    Clique,
    LineComponent,
    Reliability,
}

impl Target {
    pub const ALL: [Target; 11] = [
        Target::Eep,
        Target::Potts,
        Target::Chromatic,
        Target::BivariateChromatic,
        Target::VertexCover,
        Target::Independence,
        Target::Sigma,
        Target::Matching,
        Target::Clique,
        Target::LineComponent,
        Target::Reliability,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Eep => "eep",
            Target::Potts => "potts",
            Target::Chromatic => "chromatic",
            Target::BivariateChromatic => "bivariate_chromatic",
            Target::VertexCover => "vertex_cover",
            Target::Independence => "independence",
            Target::Sigma => "sigma",
            Target::Matching => "matching",
            Target::Clique => "clique",
            Target::LineComponent => "line_component",
            Target::Reliability => "reliability",
        }
    }

    /// The relation applied, written as a formula.
    pub fn note(self) -> &'static str {
        match self {
            Target::Eep => "xi = sum c[i,j,k] x^(i-k) y^(j-k) (z+xy)^k",
            Target::Potts => "Z(x,y) = C(x,y,1)",
            Target::Chromatic => "chi(x) = C(x,-1,1)",
            Target::BivariateChromatic => "P(x,y) = C(x,-1,y/x) = sum c[i,j,k] (-1)^j x^(i-k) y^k",
            Target::VertexCover => "Psi(x) = sum c[i,j,k] (-1)^j (x+1)^(i-k)",
            Target::Independence => "I(x) = sum c[i,j,k] (-1)^j x^(n-i+k) (x+1)^(i-k)",
            Target::Sigma => "sigma = I(1) = sum c[i,j,k] (-1)^j 2^(i-k)",
            Target::Matching => "M(x,y) = sum_i c[n-i,i,i] x^(n-2i) y^i",
            Target::Clique => "1 + n x + sum_{i>=2} c[n-i+1,binom(i,2),1] x^i",
            Target::LineComponent => "Q(L(G),x,y) = C(1,x,y)",
            Target::Reliability => "P(no isolated vertex) = sum_{i=k} c[i,j,k] p^j (1-p)^(m-j)",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown specialization {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecValue {
    Tri(TriPoly),
    Bi(BiPoly),
    Uni(UniPoly),
    Integer(BigInt),
    Rational(BigRational),
}

impl SpecValue {
    pub fn vars(&self) -> &'static [&'static str] {
        match self {
            SpecValue::Tri(_) => &["x", "y", "z"],
            SpecValue::Bi(_) => &["x", "y"],
            SpecValue::Uni(_) => &["x"],
            _ => &[],
        }
    }

    /// JSON value: a polynomial object or a decimal string.
    pub fn to_json(&self) -> serde_json::Value {
        let parse = |s: String| serde_json::from_str(&s).expect("polynomial JSON is valid");
        match self {
            SpecValue::Tri(p) => parse(p.to_json()),
            SpecValue::Bi(p) => parse(p.to_json()),
            SpecValue::Uni(p) => parse(p.to_json()),
            SpecValue::Integer(v) => serde_json::Value::String(v.to_string()),
            SpecValue::Rational(v) => serde_json::Value::String(v.to_string()),
        }
    }
}

impl fmt::Display for SpecValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecValue::Tri(p) => write!(f, "{p}"),
            SpecValue::Bi(p) => write!(f, "{p}"),
            SpecValue::Uni(p) => write!(f, "{p}"),
            SpecValue::Integer(v) => write!(f, "{v}"),
            SpecValue::Rational(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationResult {
    pub target: Target,
    pub value: SpecValue,
    pub note: &'static str,
}

/// Evaluates `target` for `g`. `p` is the edge survival probability for
/// [`Target::Reliability`]; without it the result is the polynomial in `p`.
pub fn specialize(
    target: Target,
    g: &Multigraph,
    engine: &mut Engine,
    p: Option<&BigRational>,
) -> Result<SpecializationResult> {
    let table = engine.coefficient_table(g);
    let value = match target {
        Target::Eep => SpecValue::Tri(to_eep(&table)),
        Target::Potts => SpecValue::Bi(potts(&table.to_poly())),
        Target::Chromatic => SpecValue::Uni(chromatic(&table.to_poly())),
        Target::BivariateChromatic => SpecValue::Bi(bivariate_chromatic(&table)),
        Target::VertexCover => SpecValue::Uni(vertex_cover(&table)),
        Target::Independence => SpecValue::Uni(independence(&table)),
        Target::Sigma => SpecValue::Integer(sigma(&table)),
        Target::Matching => SpecValue::Bi(matching(&table)),
        Target::Clique => {
            if !g.is_simple() {
                return Err(Error::NotSimple("clique polynomial"));
            }
            SpecValue::Uni(clique_polynomial(&table)?)
        }
        Target::LineComponent => {
            if !g.is_simple() {
                return Err(Error::NotSimple("line graph relation"));
            }
            SpecValue::Bi(subgraph_component_line(&table.to_poly()))
        }
        Target::Reliability => match p {
            Some(p) => {
                if p.is_negative() || p > &BigRational::one() {
                    return Err(Error::InvalidArgument(format!("probability {p} outside [0, 1]")));
                }
                SpecValue::Rational(reliability_no_isolated(&table, p))
            }
            None => SpecValue::Uni(reliability_no_isolated_poly(&table)),
        },
    };
    Ok(SpecializationResult {
        target,
        value,
        note: target.note(),
    })
}
