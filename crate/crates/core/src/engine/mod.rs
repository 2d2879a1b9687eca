//! Computation of `C(G)` and `ξ(G)`.
//!
//! The engine works on adjacency matrices. Parallel edges between the same
//! pair are handled as one bundle of multiplicity `k`; unrolling the
//! deletion/contraction/extraction recurrence over the bundle gives
//!
//! ```text
//! P(G) = P(G₀) + ((1+y)^k − 1)·P(G₀/uv) + F_k·P(G₀†uv)
//! ```
//!
//! where `G₀` lacks the bundle and `F_k` is `((1+y)^k − 1)(xz − x)` for `C`
//! and `((1+y)^k − 1)/y · z` for `ξ`. `k` loops at `v` give
//! `(1+y)^k·P(G₀) + F_k·P(G₀ − v)`.

mod families;
mod identities;
mod oracle;
mod table;

pub use families::{
    cnik, connected_counts, cycle_recurrence, family_formula, kmatching_coefficient, path_recurrence,
    star_recurrence, ConnectedCounts, StarTerm,
};
pub use identities::{articulation_join, bridge_reduction};
pub use oracle::{
    ccp_bruteforce, ccp_bruteforce_hypergraph, eep_expansion_oracle, DEFAULT_BRUTE_FORCE_EDGE_CAP,
    EXPANSION_EDGE_CAP,
};
pub use table::CoefficientTable;

use std::collections::HashMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::canon::matrix_key;
use crate::graph::{articulation_vertices, bridges, AdjacencyMatrix, CanonicalKey, Hypergraph, Multigraph};
use crate::graph::DEFAULT_CANONICAL_CAP;
use crate::poly::tri::{c, mono, x, y};
use crate::poly::TriPoly;

pub const CACHE_CAP_ENV: &str = "COVPOLY_CACHE_CAP";

/// Which bundle the general recurrence eliminates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeSelection {
    /// Largest endpoint-degree sum, ties to the first pair in index order.
    MaxDegreeSum,
    FirstEdge,
    /// Uniform choice from a seeded generator.
    Random(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Reductions {
    pub pendant: bool,
    /// Split at articulation vertices (`C` only).
    pub articulation: bool,
    /// Reduce across bridges (`C` only).
    pub bridge: bool,
    pub component_split: bool,
}

impl Default for Reductions {
    fn default() -> Self {
        Reductions {
            pendant: true,
            articulation: false,
            bridge: false,
            component_split: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    pub brute_force_edge_cap: usize,
    pub canonical_cache_cap: usize,
    pub edge_selection: EdgeSelection,
    pub reductions: Reductions,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            brute_force_edge_cap: DEFAULT_BRUTE_FORCE_EDGE_CAP,
            canonical_cache_cap: DEFAULT_CANONICAL_CAP,
            edge_selection: EdgeSelection::MaxDegreeSum,
            reductions: Reductions::default(),
        }
    }
}

impl EngineConfig {
    /// Defaults, with the cache cap taken from `COVPOLY_CACHE_CAP` when set.
    pub fn from_env() -> Self {
        let mut cfg = Self::default();
        if let Some(cap) = std::env::var(CACHE_CAP_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            if cap > 0 {
                cfg.canonical_cache_cap = cap;
            }
        }
        cfg
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub cache_hits: u64,
    pub cache_misses: u64,
    /// Subproblems above the cache cap.
    pub uncached: u64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Ccp,
    Eep,
}

/// Memoizing evaluator. One engine per thread; the cache is private.
pub struct Engine {
    cfg: EngineConfig,
    ccp_memo: HashMap<CanonicalKey, TriPoly>,
    eep_memo: HashMap<CanonicalKey, TriPoly>,
    rng: ChaCha8Rng,
    stats: EngineStats,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(EngineConfig::default())
    }
}

/// `((1+y)^k − 1)`
fn bundle_weight(k: u32) -> TriPoly {
    &(c(1) + y()).pow(k) - &c(1)
}

impl Engine {
    pub fn new(cfg: EngineConfig) -> Self {
        let seed = match cfg.edge_selection {
            EdgeSelection::Random(s) => s,
            _ => 0,
        };
        Engine {
            cfg,
            ccp_memo: HashMap::new(),
            eep_memo: HashMap::new(),
            rng: ChaCha8Rng::seed_from_u64(seed),
            stats: EngineStats::default(),
        }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.cfg
    }

    pub fn stats(&self) -> EngineStats {
        self.stats
    }

    pub fn cache_len(&self) -> usize {
        self.ccp_memo.len() + self.eep_memo.len()
    }

    /// Covered components polynomial `C(G, x, y, z)`.
    pub fn ccp(&mut self, g: &Multigraph) -> TriPoly {
        self.solve(Kind::Ccp, AdjacencyMatrix::from_multigraph(g))
    }

    /// Edge elimination polynomial `ξ(G, x, y, z)`.
    pub fn eep(&mut self, g: &Multigraph) -> TriPoly {
        self.solve(Kind::Eep, AdjacencyMatrix::from_multigraph(g))
    }

    pub fn coefficient_table(&mut self, g: &Multigraph) -> CoefficientTable {
        let p = self.ccp(g);
        CoefficientTable::from_poly(g.n(), g.m(), &p).expect("engine output is a valid count table")
    }

    /// `C` of a hypergraph by the three-way recurrence over hyperedges.
    pub fn ccp_hypergraph(&mut self, h: &Hypergraph) -> TriPoly {
        if let Some(g) = h.to_multigraph() {
            return self.ccp(&g);
        }
        let parts = hypergraph_components(h);
        if parts.len() > 1 {
            return parts.iter().fold(c(1), |acc, p| &acc * &self.ccp_hypergraph(p));
        }
        let e = (0..h.m()).max_by_key(|&i| (h.edges()[i].len(), std::cmp::Reverse(i))).unwrap();
        let ext = mono(1, 1, 1, 1) - mono(1, 1, 1, 0);
        let minus = self.ccp_hypergraph(&h.delete_edge(e).unwrap());
        let contracted = self.ccp_hypergraph(&h.contract_edge(e).unwrap());
        let extracted = self.ccp_hypergraph(&h.extract_edge(e).unwrap());
        minus + &y() * &contracted + &ext * &extracted
    }

    pub fn coefficient_table_hypergraph(&mut self, h: &Hypergraph) -> CoefficientTable {
        let p = self.ccp_hypergraph(h);
        CoefficientTable::from_hypergraph_poly(h.n(), h.m(), &p).expect("engine output is a valid count table")
    }

    fn extraction_factor(kind: Kind, k: u32) -> TriPoly {
        match kind {
            Kind::Ccp => &bundle_weight(k) * &(mono(1, 1, 0, 1) - x()),
            Kind::Eep => {
                let mut p = TriPoly::zero();
                for b in 1..=k {
                    p.add_term([0, b as i32 - 1, 1], num_integer::binomial(BigInt::from(k), BigInt::from(b)));
                }
                p
            }
        }
    }

    fn solve(&mut self, kind: Kind, a: AdjacencyMatrix) -> TriPoly {
        let keep: Vec<bool> = (0..a.n()).map(|v| a.row(v).iter().any(|&k| k > 0)).collect();
        let isolated = keep.iter().filter(|&&k| !k).count();
        let a = if isolated > 0 { a.induced(&keep) } else { a };
        let factor = mono(1, isolated as i32, 0, 0);
        if a.n() == 0 {
            return factor;
        }
        if self.cfg.reductions.component_split {
            let comps = a.components();
            if comps.len() > 1 {
                let mut acc = factor;
                for comp in comps {
                    let mut keep = vec![false; a.n()];
                    for v in comp {
                        keep[v] = true;
                    }
                    let part = self.solve_cached(kind, a.induced(&keep));
                    acc = &acc * &part;
                }
                return acc;
            }
        }
        &factor * &self.solve_cached(kind, a)
    }

    fn solve_cached(&mut self, kind: Kind, a: AdjacencyMatrix) -> TriPoly {
        let key = matrix_key(&a, self.cfg.canonical_cache_cap).ok();
        let Some(key) = key else {
            self.stats.uncached += 1;
            return self.expand(kind, a);
        };
        let memo = match kind {
            Kind::Ccp => &self.ccp_memo,
            Kind::Eep => &self.eep_memo,
        };
        if let Some(p) = memo.get(&key) {
            self.stats.cache_hits += 1;
            return p.clone();
        }
        self.stats.cache_misses += 1;
        let p = self.expand(kind, a);
        match kind {
            Kind::Ccp => self.ccp_memo.insert(key, p.clone()),
            Kind::Eep => self.eep_memo.insert(key, p.clone()),
        };
        p
    }

    /// One reduction step on a graph without isolated vertices.
    fn expand(&mut self, kind: Kind, a: AdjacencyMatrix) -> TriPoly {
        let n = a.n();
        let red = self.cfg.reductions;

        if red.pendant {
            let leaf = (0..n).find(|&v| a.loops(v) == 0 && a.neighbour_count(v) == 1);
            if let Some(v) = leaf {
                let u = (0..n).find(|&u| u != v && a.get(v, u) > 0).unwrap();
                let k = a.get(u, v);
                let rest = self.solve(kind, a.without_vertex(v));
                let gone = self.solve(kind, a.without_vertices(u, v));
                return &(x() + bundle_weight(k)) * &rest + &Self::extraction_factor(kind, k) * &gone;
            }
        }

        if kind == Kind::Ccp && red.articulation && n >= 3 && a.components().len() == 1 {
            if let Some(p) = self.articulation_step(&a) {
                return p;
            }
        }

        if let Some(v) = (0..n).find(|&v| a.loops(v) > 0) {
            let k = a.loops(v);
            let mut base = a.clone();
            base.set(v, v, 0);
            let without = base.without_vertex(v);
            let p0 = self.solve(kind, base);
            let pv = self.solve(kind, without);
            return &(c(1) + y()).pow(k) * &p0 + &Self::extraction_factor(kind, k) * &pv;
        }

        if kind == Kind::Ccp && red.bridge && a.components().len() == 1 {
            if let Some(p) = self.bridge_step(&a) {
                return p;
            }
        }

        let (u, v) = self.select_bundle(&a);
        let k = a.get(u, v);
        let mut base = a;
        base.set(u, v, 0);
        let merged = base.merge(u, v);
        let extracted = base.without_vertices(u, v);
        let p0 = self.solve(kind, base);
        let pc = self.solve(kind, merged);
        let pe = self.solve(kind, extracted);
        p0 + &bundle_weight(k) * &pc + &Self::extraction_factor(kind, k) * &pe
    }

    fn articulation_step(&mut self, a: &AdjacencyMatrix) -> Option<TriPoly> {
        let g = a.to_multigraph();
        let v = *articulation_vertices(&g).first()?;
        let rest = a.without_vertex(v);
        let first = &rest.components()[0];
        let mut side = vec![false; a.n()];
        for &u in first {
            side[if u >= v { u + 1 } else { u }] = true;
        }
        let mut keep1 = side.clone();
        keep1[v] = true;
        let mut g1 = a.induced(&keep1);
        let v1 = (0..v).filter(|&u| keep1[u]).count();
        g1.set(v1, v1, 0);
        let keep2: Vec<bool> = side.iter().map(|s| !s).collect();
        let g2 = a.induced(&keep2);
        let v2 = (0..v).filter(|&u| keep2[u]).count();
        let c1v = self.solve(Kind::Ccp, g1.without_vertex(v1));
        let c2v = self.solve(Kind::Ccp, g2.without_vertex(v2));
        let c1 = self.solve(Kind::Ccp, g1);
        let c2 = self.solve(Kind::Ccp, g2);
        Some(articulation_join(&c1, &c1v, &c2, &c2v).expect("articulation identity holds on engine values"))
    }

    fn bridge_step(&mut self, a: &AdjacencyMatrix) -> Option<TriPoly> {
        let g = a.to_multigraph();
        let e = g.edges()[*bridges(&g).first()?];
        let mut minus = a.clone();
        minus.set(e.a, e.b, 0);
        let c_minus = self.solve(Kind::Ccp, minus);
        let c_v1 = self.solve(Kind::Ccp, a.without_vertex(e.a));
        let c_v2 = self.solve(Kind::Ccp, a.without_vertex(e.b));
        let c_dagger = self.solve(Kind::Ccp, a.without_vertices(e.a, e.b));
        Some(bridge_reduction(&c_minus, &c_v1, &c_v2, &c_dagger).expect("bridge identity holds on engine values"))
    }

    fn select_bundle(&mut self, a: &AdjacencyMatrix) -> (usize, usize) {
        let n = a.n();
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| a.get(u, v) > 0);
        match self.cfg.edge_selection {
            EdgeSelection::FirstEdge => pairs.into_iter().next().unwrap(),
            EdgeSelection::MaxDegreeSum => {
                let deg: Vec<u32> = (0..n).map(|v| a.degree(v)).collect();
                let mut best = None;
                for (u, v) in pairs {
                    let s = deg[u] + deg[v];
                    if best.is_none_or(|(b, _)| s > b) {
                        best = Some((s, (u, v)));
                    }
                }
                best.unwrap().1
            }
            EdgeSelection::Random(_) => {
                let all: Vec<(usize, usize)> = pairs.collect();
                all[self.rng.gen_range(0..all.len())]
            }
        }
    }
}

/// Components of a hypergraph as separate hypergraphs, ordered by smallest vertex.
pub(crate) fn hypergraph_components(h: &Hypergraph) -> Vec<Hypergraph> {
    let stats = h.component_stats();
    let mut index = vec![0; h.n()];
    let mut sizes = vec![0; stats.k];
    for v in 0..h.n() {
        index[v] = sizes[stats.partition[v]];
        sizes[stats.partition[v]] += 1;
    }
    let mut edges: Vec<Vec<Vec<usize>>> = vec![Vec::new(); stats.k];
    for e in h.edges() {
        let part = stats.partition[e[0]];
        edges[part].push(e.iter().map(|&v| index[v]).collect());
    }
    sizes
        .into_iter()
        .zip(edges)
        .map(|(n, es)| Hypergraph::new(n, es).expect("components are well formed"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyKind};
    use crate::poly::tri::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn ccp_examples() {
        let mut e = Engine::default();
        let p3 = mono(1, 3, 0, 0) + mono(2, 2, 1, 1) + mono(1, 1, 2, 1);
        assert_eq!(e.ccp(&family(FamilyKind::Star, 2).unwrap()), p3);
        let c2 = mono(1, 2, 0, 0) + mono(2, 1, 1, 1) + mono(1, 1, 2, 1);
        assert_eq!(e.ccp(&family(FamilyKind::Cycle, 2).unwrap()), c2);
        assert_eq!(e.ccp(&g(1, &[(0, 0)])), x() + mono(1, 1, 1, 1));
        assert_eq!(e.ccp(&Multigraph::empty(0)), c(1));
        assert_eq!(e.ccp(&Multigraph::empty(3)), mono(1, 3, 0, 0));
    }

    #[test]
    fn eep_examples() {
        let mut e = Engine::default();
        assert_eq!(e.eep(&Multigraph::empty(1)), x());
        assert_eq!(e.eep(&family(FamilyKind::Path, 2).unwrap()), mono(1, 2, 0, 0) + mono(1, 1, 1, 0) + z());
        assert_eq!(e.eep(&Multigraph::empty(2)), mono(1, 2, 0, 0));
    }

    #[test]
    fn tables() {
        let mut e = Engine::default();
        let t = e.coefficient_table(&family(FamilyKind::Cycle, 3).unwrap());
        let got: Vec<([u32; 3], i64)> = t.entries().map(|(k, c)| (k, c.try_into().unwrap())).collect();
        assert_eq!(got, vec![([1, 2, 1], 3), ([1, 3, 1], 1), ([2, 1, 1], 3), ([3, 0, 0], 1)]);
        let t = e.coefficient_table(&Multigraph::empty(3));
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn hypergraph_single_edge() {
        let mut e = Engine::default();
        let h = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(e.ccp_hypergraph(&h), mono(1, 3, 0, 0) + mono(1, 1, 1, 1));
    }
}
