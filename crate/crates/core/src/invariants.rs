//! Graph invariants read off the covered components polynomial, and the same
//! quantities computed directly from the graph.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::poly::TriPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BasicCounts {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub c: usize,
    pub i: usize,
}

fn co(p: &TriPoly, i: i64, j: i64, k: i64) -> BigInt {
    if i < 0 || j < 0 || k < 0 {
        return BigInt::zero();
    }
    p.coeff(&[i as i32, j as i32, k as i32])
}

fn small(v: BigInt) -> Result<u64> {
    v.to_u64()
        .ok_or_else(|| Error::MalformedPolynomial(format!("count {v} is negative or exceeds 64 bits")))
}

/// `n = deg_x C`, `m = deg_y C`; `k` and `c` are the x- and z-degrees of the `y^m` slice.
pub fn basic_counts(c: &TriPoly) -> Result<BasicCounts> {
    let n = c.degree(0).ok_or_else(|| Error::MalformedPolynomial("zero polynomial".into()))?;
    let m = c.degree(1).unwrap_or(0);
    let top = c.slice(1, m);
    if top.is_zero() {
        return Err(Error::MalformedPolynomial("empty top edge slice".into()));
    }
    let k = top.degree(0).unwrap_or(0);
    let cc = top.degree(2).unwrap_or(0);
    if n < 0 || m < 0 || cc > k {
        return Err(Error::MalformedPolynomial("exponents are not those of a covered components polynomial".into()));
    }
    Ok(BasicCounts {
        n: n as usize,
        m: m as usize,
        k: k as usize,
        c: cc as usize,
        i: (k - cc) as usize,
    })
}

/// `(g, #g)`, `g` the least `j` with `[x^{n−j+1} y^j z]C > 0`. `None` for forests.
pub fn girth_info(c: &TriPoly, n: usize) -> Option<(usize, BigInt)> {
    let m = c.degree(1).unwrap_or(0).max(0) as usize;
    (1..=m).find_map(|j| {
        let v = co(c, n as i64 - j as i64 + 1, j as i64, 1);
        v.is_positive().then_some((j, v))
    })
}

pub fn is_simple(c: &TriPoly, n: usize) -> bool {
    girth_info(c, n).is_none_or(|(g, _)| g > 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeInfo {
    pub min_degree: usize,
    pub min_degree_count: u64,
    pub deg1_count: u64,
}

/// Minimum degree, its multiplicity and the number of degree-one vertices of a simple graph.
///
/// `δ` is the least `j` such that deleting some `j` edges leaves an isolated
/// vertex. For `δ = 0` the multiplicity is `i(G)`, for `δ = 1` it is `#deg₁`.
pub fn degree_info(c: &TriPoly, counts: &BasicCounts) -> Result<DegreeInfo> {
    if !is_simple(c, counts.n) {
        return Err(Error::NotSimple("minimum degree extraction"));
    }
    let (m, k, cc) = (counts.m as i64, counts.k as i64, counts.c as i64);
    let deg1_count = small(co(c, k + 1, m - 1, cc) + BigInt::from(2) * co(c, k + 1, m - 1, cc - 1))?;
    let isolating = |j: i64| -> BigInt {
        c.terms()
            .filter(|(e, v)| e[1] as i64 == m - j && e[0] > e[2] && v.is_positive())
            .map(|(_, v)| v.clone())
            .sum()
    };
    let delta = (0..=m).find(|&j| isolating(j).is_positive()).unwrap_or(0);
    let min_degree_count = match delta {
        0 => counts.i as u64,
        1 => deg1_count,
        d => small(isolating(d))?,
    };
    Ok(DegreeInfo {
        min_degree: delta as usize,
        min_degree_count,
        deg1_count,
    })
}

/// Edge-induced subgraphs with `n′` vertices, `m′` edges and `k′` components:
/// `[x^{n−n′+k′} y^{m′} z^{k′}]C`.
pub fn subgraph_counts(c: &TriPoly, n: usize, n_sub: usize, m_sub: usize, k_sub: usize) -> BigInt {
    co(c, n as i64 - n_sub as i64 + k_sub as i64, m_sub as i64, k_sub as i64)
}

/// Largest `j` with a complete edge-induced subgraph on `j` vertices. Simple graphs only.
pub fn clique_number(c: &TriPoly, n: usize) -> Result<usize> {
    if !is_simple(c, n) {
        return Err(Error::NotSimple("clique number"));
    }
    if n == 0 {
        return Ok(0);
    }
    Ok((2..=n)
        .filter(|&j| subgraph_counts(c, n, j, j * (j - 1) / 2, 1).is_positive())
        .max()
        .unwrap_or(1))
}

/// `(#P₃, M₁)` with `M₁ = 2·#P₃ + 2m`. Simple graphs only.
pub fn p3_m1(c: &TriPoly, n: usize, m: usize) -> Result<(u64, u64)> {
    if !is_simple(c, n) {
        return Err(Error::NotSimple("M1 index"));
    }
    let p3 = small(subgraph_counts(c, n, 3, 2, 1))?;
    Ok((p3, 2 * p3 + 2 * m as u64))
}

/// Everything extractable from `C`. Fields that need a simple graph are `None` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub c: usize,
    pub i: usize,
    pub girth: Option<usize>,
    pub girth_count: Option<u64>,
    pub simple: bool,
    pub min_degree: Option<usize>,
    pub min_degree_count: Option<u64>,
    pub deg1_count: Option<u64>,
    pub clique_number: Option<usize>,
    pub p3_count: Option<u64>,
    pub m1_index: Option<u64>,
}

impl InvariantReport {
    pub fn from_polynomial(c: &TriPoly) -> Result<Self> {
        let b = basic_counts(c)?;
        let girth = girth_info(c, b.n);
        let simple = girth.as_ref().is_none_or(|(g, _)| *g > 2);
        let girth_count = girth.as_ref().map(|(_, v)| small(v.clone())).transpose()?;
        let (deg, clique, p3m1) = if simple {
            (
                Some(degree_info(c, &b)?),
                Some(clique_number(c, b.n)?),
                Some(p3_m1(c, b.n, b.m)?),
            )
        } else {
            (None, None, None)
        };
        Ok(Self {
            n: b.n,
            m: b.m,
            k: b.k,
            c: b.c,
            i: b.i,
            girth: girth.map(|(g, _)| g),
            girth_count,
            simple,
            min_degree: deg.as_ref().map(|d| d.min_degree),
            min_degree_count: deg.as_ref().map(|d| d.min_degree_count),
            deg1_count: deg.as_ref().map(|d| d.deg1_count),
            clique_number: clique,
            p3_count: p3m1.map(|p| p.0),
            m1_index: p3m1.map(|p| p.1),
        })
    }

    /// The same report computed from the graph itself.
    pub fn from_graph(g: &Multigraph) -> Self {
        let stats = g.component_stats();
        let (girth, girth_count) = match direct::girth(g) {
            Some((l, cnt)) => (Some(l), Some(cnt)),
            None => (None, None),
        };
        let simple = g.is_simple();
        let degrees = g.degrees();
        let (min_degree, min_degree_count, deg1_count, clique, p3, m1) = if simple {
            let delta = degrees.iter().copied().min().unwrap_or(0);
            let count = degrees.iter().filter(|&&d| d == delta).count() as u64;
            let deg1 = degrees.iter().filter(|&&d| d == 1).count() as u64;
            let p3: u64 = degrees.iter().map(|&d| (d * d.saturating_sub(1) / 2) as u64).sum();
            let m1: u64 = degrees.iter().map(|&d| (d * d) as u64).sum();
            (
                Some(delta),
                Some(count),
                Some(deg1),
                Some(direct::clique_number(g)),
                Some(p3),
                Some(m1),
            )
        } else {
            (None, None, None, None, None, None)
        };
        Self {
            n: g.n(),
            m: g.m(),
            k: stats.k,
            c: stats.c,
            i: stats.i,
            girth,
            girth_count,
            simple,
            min_degree,
            min_degree_count,
            deg1_count,
            clique_number: clique,
            p3_count: p3,
            m1_index: m1,
        }
    }
}

/// Graph-side computations used as oracles.
pub mod direct {
    use crate::graph::Multigraph;

    /// Length of a shortest cycle and the number of cycles of that length.
    /// Loops are 1-cycles and each pair of parallel edges is a 2-cycle.
    pub fn girth(g: &Multigraph) -> Option<(usize, u64)> {
        let loops = g.edges().iter().filter(|e| e.is_loop()).count() as u64;
        if loops > 0 {
            return Some((1, loops));
        }
        let mut pairs = 0u64;
        let edges = g.edges();
        let mut i = 0;
        while i < edges.len() {
            let mut j = i;
            while j < edges.len() && edges[j] == edges[i] {
                j += 1;
            }
            let mult = (j - i) as u64;
            pairs += mult * (mult - 1) / 2;
            i = j;
        }
        if pairs > 0 {
            return Some((2, pairs));
        }
        let n = g.n();
        let mut adj = vec![Vec::new(); n];
        for e in edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        for len in 3..=n {
            let count = cycles_of_length(&adj, len);
            if count > 0 {
                return Some((len, count));
            }
        }
        None
    }

    /// Simple cycles of exactly `len ≥ 3` vertices in a simple graph.
    pub fn cycles_of_length(adj: &[Vec<usize>], len: usize) -> u64 {
        fn walk(adj: &[Vec<usize>], s: usize, v: usize, depth: usize, len: usize, seen: &mut [bool]) -> u64 {
            if depth == len {
                return adj[v].contains(&s) as u64;
            }
            let mut total = 0;
            for &w in &adj[v] {
                if w > s && !seen[w] {
                    seen[w] = true;
                    total += walk(adj, s, w, depth + 1, len, seen);
                    seen[w] = false;
                }
            }
            total
        }
        let mut seen = vec![false; adj.len()];
        let mut total = 0;
        for s in 0..adj.len() {
            seen[s] = true;
            total += walk(adj, s, s, 1, len, &mut seen);
            seen[s] = false;
        }
        total / 2
    }

    /// Maximum clique size by exhaustive branching.
    pub fn clique_number(g: &Multigraph) -> usize {
        let n = g.n();
        let mut adj = vec![vec![false; n]; n];
        for e in g.edges() {
            adj[e.a][e.b] = true;
            adj[e.b][e.a] = true;
        }
        fn grow(adj: &[Vec<bool>], cand: &[usize], size: usize, best: &mut usize) {
            if size + cand.len() <= *best {
                return;
            }
            if cand.is_empty() {
                *best = size;
                return;
            }
            for (idx, &v) in cand.iter().enumerate() {
                let next: Vec<usize> = cand[idx + 1..].iter().copied().filter(|&w| adj[v][w]).collect();
                grow(adj, &next, size + 1, best);
            }
        }
        let mut best = 0;
        grow(&adj, &(0..n).collect::<Vec<_>>(), 0, &mut best);
        best
    }
}
