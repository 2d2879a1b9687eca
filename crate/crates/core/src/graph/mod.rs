//! Multigraphs, hypergraphs and the three edge operations.

pub mod adjacency;
pub mod canon;
pub mod edgelist;
pub mod family;
pub mod graph6;
mod structure;


pub use adjacency::AdjacencyMatrix;
pub use canon::{canonical_form, canonical_key, CanonicalKey, DEFAULT_CANONICAL_CAP};
pub use family::{family, FamilyKind};
pub use structure::{articulation_vertices, bridges, pendant_edges, StructuralQueries};

use crate::error::{Error, Result};

/// An edge of a multigraph: a 1- or 2-element vertex subset, stored with `a <= b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
}

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge { a: u, b: v }
        } else {
            Edge { a: v, b: u }
        }
    }

    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }

    pub fn contains(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }

    /// Number of distinct incident vertices.
    pub fn arity(&self) -> usize {
        if self.is_loop() {
            1
        } else {
            2
        }
    }
}

/// Vertex count plus an edge multiset; loops and parallel edges allowed.
///
/// Edges are kept sorted, so two multigraphs compare equal exactly when they
/// have the same labeled edge multiset. An edge handle is an index into
/// [`Multigraph::edges`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Multigraph {
    n: usize,
    edges: Vec<Edge>,
}

/// Component counts of a graph or hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentStats {
    /// Number of connected components.
    pub k: usize,
    /// Number of covered components (components with at least one edge).
    pub c: usize,
    /// Number of isolated vertices.
    pub i: usize,
    /// Component index of every vertex, numbered by smallest member.
    pub partition: Vec<usize>,
}

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Returns true when two different sets were merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }
}

/// Component statistics for `n` vertices and edges given as vertex sets.
pub(crate) fn stats_of<'a, I>(n: usize, edges: I) -> ComponentStats
where
    I: IntoIterator<Item = &'a [usize]>,
{
    let mut ds = DisjointSets::new(n);
    let mut covered = vec![false; n];
    for e in edges {
        for &v in e {
            covered[v] = true;
        }
        for w in e.windows(2) {
            ds.union(w[0], w[1]);
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut partition = vec![0; n];
    let mut k = 0;
    let mut c = 0;
    for v in 0..n {
        let r = ds.find(v);
        if label[r] == usize::MAX {
            label[r] = k;
            k += 1;
            if covered[r] {
                c += 1;
            }
        }
        partition[v] = label[r];
    }
    ComponentStats {
        k,
        c,
        i: k - c,
        partition,
    }
}

/// Maps surviving vertices to a dense range, preserving their order.
fn reindex(n: usize, removed: &[bool]) -> (Vec<Option<usize>>, usize) {
    let mut map = vec![None; n];
    let mut next = 0;
    for v in 0..n {
        if !removed[v] {
            map[v] = Some(next);
            next += 1;
        }
    }
    (map, next)
}

impl Multigraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut out = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            out.push(Edge::new(u, v));
        }
        Ok(Self::from_sorted(n, out))
    }

    fn from_sorted(n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        Multigraph { n, edges }
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| if e.is_loop() { 2 * (e.a == v) as usize } else { e.contains(v) as usize })
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            d[e.a] += 1;
            d[e.b] += 1;
        }
        d
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    pub fn has_parallel_edges(&self) -> bool {
        self.edges.windows(2).any(|w| w[0] == w[1])
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_parallel_edges()
    }

    fn edge(&self, e: usize) -> Result<Edge> {
        self.edges.get(e).copied().ok_or(Error::MissingEdge(e))
    }

    /// `G₋ₑ`: removes one occurrence of edge `e`.
    pub fn delete_edge(&self, e: usize) -> Result<Self> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(Multigraph { n: self.n, edges })
    }

    /// `G/ₑ`: removes `e` and merges its endpoints into the lower index.
    pub fn contract_edge(&self, e: usize) -> Result<Self> {
        let edge = self.edge(e)?;
        let mut rest = self.edges.clone();
        rest.remove(e);
        if edge.is_loop() {
            return Ok(Multigraph { n: self.n, edges: rest });
        }
        let (keep, gone) = (edge.a, edge.b);
        let map = |v: usize| -> usize {
            match v.cmp(&gone) {
                std::cmp::Ordering::Less => v,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => v - 1,
            }
        };
        let edges = rest.into_iter().map(|f| Edge::new(map(f.a), map(f.b))).collect();
        Ok(Self::from_sorted(self.n - 1, edges))
    }

    /// `G†ₑ`: removes `e`, its endpoints, and every edge touching them.
    pub fn extract_edge(&self, e: usize) -> Result<Self> {
        let edge = self.edge(e)?;
        let mut removed = vec![false; self.n];
        removed[edge.a] = true;
        removed[edge.b] = true;
        Ok(self.remove_vertices(&removed))
    }

    /// `G₋ᵥ`: removes vertex `v` and its incident edges.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut removed = vec![false; self.n];
        removed[v] = true;
        Ok(self.remove_vertices(&removed))
    }

    pub(crate) fn remove_vertices(&self, removed: &[bool]) -> Self {
        let (map, n) = reindex(self.n, removed);
        let edges = self
            .edges
            .iter()
            .filter_map(|f| Some(Edge::new(map[f.a]?, map[f.b]?)))
            .collect();
        Self::from_sorted(n, edges)
    }

    /// Subgraph induced by the vertices with `keep[v]`, reindexed in order.
    pub fn induced(&self, keep: &[bool]) -> Self {
        let removed: Vec<bool> = keep.iter().map(|k| !k).collect();
        self.remove_vertices(&removed)
    }

    pub fn component_stats(&self) -> ComponentStats {
        let sets: Vec<[usize; 2]> = self.edges.iter().map(|e| [e.a, e.b]).collect();
        stats_of(self.n, sets.iter().map(|s| &s[..]))
    }

    /// The connected components as induced subgraphs, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Multigraph> {
        let stats = self.component_stats();
        (0..stats.k)
            .map(|c| {
                let keep: Vec<bool> = stats.partition.iter().map(|&p| p == c).collect();
                self.induced(&keep)
            })
            .collect()
    }

    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|e| Edge::new(e.a + off, e.b + off)))
            .collect();
        Self::from_sorted(self.n + other.n, edges)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|e| Edge::new(perm[e.a], perm[e.b])).collect();
        Self::from_sorted(self.n, edges)
    }

    /// Cycle-free check via `m = n − k` (loops and parallel edges are cycles).
    pub fn is_forest(&self) -> bool {
        self.m() + self.component_stats().k == self.n
    }

    /// Line graph of a simple graph: one vertex per edge, adjacent when edges share an endpoint.
    pub fn line_graph(&self) -> Result<Multigraph> {
        if !self.is_simple() {
            return Err(Error::NotSimple("line graph"));
        }
        let mut pairs = Vec::new();
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                let (e, f) = (self.edges[i], self.edges[j]);
                if e.contains(f.a) || e.contains(f.b) {
                    pairs.push((i, j));
                }
            }
        }
        Multigraph::new(self.edges.len(), pairs)
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph {
            n: self.n,
            edges: {
                let mut v: Vec<Vec<usize>> = self
                    .edges
                    .iter()
                    .map(|e| if e.is_loop() { vec![e.a] } else { vec![e.a, e.b] })
                    .collect();
                v.sort();
                v
            },
        }
    }
}

/// Vertex count plus a multiset of nonempty vertex subsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = usize>,
    {
        let mut out = Vec::new();
        for e in edges {
            let mut set: Vec<usize> = e.into_iter().collect();
            set.sort_unstable();
            set.dedup();
            if set.is_empty() {
                return Err(Error::EmptyHyperedge);
            }
            if let Some(&v) = set.last().filter(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            out.push(set);
        }
        out.sort();
        Ok(Hypergraph { n, edges: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Largest hyperedge size (0 for an edgeless hypergraph).
    pub fn max_arity(&self) -> usize {
        self.edges.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some` when every hyperedge has at most two vertices.
    pub fn to_multigraph(&self) -> Option<Multigraph> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            match e.as_slice() {
                [a] => edges.push(Edge::new(*a, *a)),
                [a, b] => edges.push(Edge::new(*a, *b)),
                _ => return None,
            }
        }
        Some(Multigraph::from_sorted(self.n, edges))
    }

    fn edge(&self, e: usize) -> Result<&[usize]> {
        self.edges.get(e).map(Vec::as_slice).ok_or(Error::MissingEdge(e))
    }

    pub fn delete_edge(&self, e: usize) -> Result<Self> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(Hypergraph { n: self.n, edges })
    }

    /// Removes `e` and merges all of its vertices into the smallest one.
    pub fn contract_edge(&self, e: usize) -> Result<Self> {
        let merged = self.edge(e)?.to_vec();
        let keep = merged[0];
        let mut removed = vec![false; self.n];
        for &v in &merged[1..] {
            removed[v] = true;
        }
        let (map, n) = reindex(self.n, &removed);
        let target = map[keep].unwrap();
        let mut edges: Vec<Vec<usize>> = Vec::with_capacity(self.edges.len() - 1);
        for (idx, f) in self.edges.iter().enumerate() {
            if idx == e {
                continue;
            }
            let mut g: Vec<usize> = f.iter().map(|&v| map[v].unwrap_or(target)).collect();
            g.sort_unstable();
            g.dedup();
            edges.push(g);
        }
        edges.sort();
        Ok(Hypergraph { n, edges })
    }

    /// Removes `e`, all of its vertices, and every hyperedge touching them.
    pub fn extract_edge(&self, e: usize) -> Result<Self> {
        let mut removed = vec![false; self.n];
        for &v in self.edge(e)? {
            removed[v] = true;
        }
        let (map, n) = reindex(self.n, &removed);
        let edges = self
            .edges
            .iter()
            .filter_map(|f| f.iter().map(|&v| map[v]).collect::<Option<Vec<_>>>())
            .collect();
        Ok(Hypergraph { n, edges })
    }

    pub fn component_stats(&self) -> ComponentStats {
        stats_of(self.n, self.edges.iter().map(Vec::as_slice))
    }

    pub fn disjoint_union(&self, other: &Hypergraph) -> Hypergraph {
        let off = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| e.iter().map(|v| v + off).collect()));
        edges.sort();
        Hypergraph {
            n: self.n + other.n,
            edges,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn deletion() {
        let k2 = g(2, &[(0, 1)]);
        assert_eq!(k2.delete_edge(0).unwrap(), Multigraph::empty(2));
        let c3 = family(FamilyKind::Cycle, 3).unwrap();
        let p3 = family(FamilyKind::Path, 3).unwrap();
        for e in 0..3 {
            assert_eq!(canonical_key(&c3.delete_edge(e).unwrap(), 11), canonical_key(&p3, 11));
        }
        let c2 = g(2, &[(0, 1), (1, 0)]);
        assert_eq!(c2.delete_edge(1).unwrap(), k2);
        assert_eq!(k2.delete_edge(3), Err(Error::MissingEdge(3)));
    }

    #[test]
    fn contraction() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(p3.contract_edge(0).unwrap(), g(2, &[(0, 1)]));
        let c2 = g(2, &[(0, 1), (0, 1)]);
        assert_eq!(c2.contract_edge(0).unwrap(), g(1, &[(0, 0)]));
        let lp = g(2, &[(1, 1), (0, 1)]);
        let i = lp.edges().iter().position(Edge::is_loop).unwrap();
        assert_eq!(lp.contract_edge(i).unwrap(), g(2, &[(0, 1)]));
        // lowest index survives
        let h = g(4, &[(1, 3), (3, 2), (0, 3)]);
        let e = h.edges().iter().position(|e| *e == Edge::new(1, 3)).unwrap();
        assert_eq!(h.contract_edge(e).unwrap(), g(3, &[(1, 2), (0, 1)]));
    }

    #[test]
    fn extraction() {
        let k2 = g(2, &[(0, 1)]);
        assert_eq!(k2.extract_edge(0).unwrap(), Multigraph::empty(0));
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(p3.extract_edge(0).unwrap(), Multigraph::empty(1));
        let k3 = family(FamilyKind::Complete, 3).unwrap();
        assert_eq!(k3.extract_edge(1).unwrap(), Multigraph::empty(1));
    }

    #[test]
    fn vertex_deletion() {
        let k3 = family(FamilyKind::Complete, 3).unwrap();
        assert_eq!(k3.delete_vertex(2).unwrap(), g(2, &[(0, 1)]));
        let s3 = family(FamilyKind::Star, 3).unwrap();
        assert_eq!(s3.delete_vertex(0).unwrap(), Multigraph::empty(3));
        assert_eq!(Multigraph::empty(1).delete_vertex(0).unwrap(), Multigraph::empty(0));
        assert!(Multigraph::empty(1).delete_vertex(1).is_err());
    }

    #[test]
    fn stats() {
        let s = Multigraph::empty(3).component_stats();
        assert_eq!((s.k, s.c, s.i), (3, 0, 3));
        let s = g(3, &[(0, 1)]).component_stats();
        assert_eq!((s.k, s.c, s.i), (2, 1, 1));
        let s = g(1, &[(0, 0)]).component_stats();
        assert_eq!((s.k, s.c, s.i), (1, 1, 0));
        assert_eq!(g(4, &[(2, 3)]).component_stats().partition, vec![0, 1, 2, 2]);
    }

    #[test]
    fn line_graphs() {
        let p3 = family(FamilyKind::Path, 3).unwrap();
        assert_eq!(p3.line_graph().unwrap(), g(2, &[(0, 1)]));
        let k3 = family(FamilyKind::Complete, 3).unwrap();
        assert_eq!(k3.line_graph().unwrap(), k3);
        let s3 = family(FamilyKind::Star, 3).unwrap();
        assert_eq!(s3.line_graph().unwrap(), k3);
        assert!(g(2, &[(0, 1), (0, 1)]).line_graph().is_err());
    }

    #[test]
    fn hypergraph_operations() {
        let h = Hypergraph::new(4, [vec![0, 1, 2], vec![2, 3], vec![3]]).unwrap();
        let c = h.contract_edge(0).unwrap();
        assert_eq!(c, Hypergraph::new(2, [vec![0, 1], vec![1]]).unwrap());
        let x = h.extract_edge(0).unwrap();
        assert_eq!(x, Hypergraph::new(1, [vec![0]]).unwrap());
        let d = h.delete_edge(0).unwrap();
        assert_eq!(d.m(), 2);
        let s = h.component_stats();
        assert_eq!((s.k, s.c, s.i), (1, 1, 0));
        assert!(Hypergraph::new(2, [Vec::<usize>::new()]).is_err());
        assert!(Hypergraph::new(2, [vec![2]]).is_err());
    }
}
