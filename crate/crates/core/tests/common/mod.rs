#![allow(dead_code)]

//! Oracles written from the definitions, independent of the library's own
//! enumeration code, plus published fixtures.

use std::collections::BTreeMap;

use covpoly::Multigraph;
use num_bigint::BigInt;

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// `(components, covered components)` of `(V, A)` for the edge subset `mask`.
pub fn spanning_stats(n: usize, edges: &[(usize, usize)], mask: u64) -> (u32, u32) {
    let mut parent: Vec<usize> = (0..n).collect();
    let mut covered = vec![false; n];
    for (idx, &(a, b)) in edges.iter().enumerate() {
        if mask >> idx & 1 == 1 {
            covered[a] = true;
            covered[b] = true;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let mut k = 0;
    let mut c = 0;
    for v in 0..n {
        if find(&mut parent, v) == v {
            k += 1;
            if (0..n).any(|w| covered[w] && find(&mut parent, w) == v) {
                c += 1;
            }
        }
    }
    (k, c)
}

pub fn edge_pairs(g: &Multigraph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|e| (e.a, e.b)).collect()
}

/// Coefficients of `C(G)` as `(i, j, k) → count`, straight from the definition.
pub fn ccp_by_definition(g: &Multigraph) -> BTreeMap<[i32; 3], BigInt> {
    let edges = edge_pairs(g);
    let mut counts: BTreeMap<[i32; 3], u64> = BTreeMap::new();
    for mask in 0u64..1 << edges.len() {
        let (k, c) = spanning_stats(g.n(), &edges, mask);
        *counts.entry([k as i32, mask.count_ones() as i32, c as i32]).or_insert(0) += 1;
    }
    counts.into_iter().map(|(e, v)| (e, BigInt::from(v))).collect()
}

pub fn terms_of(p: &covpoly::TriPoly) -> BTreeMap<[i32; 3], BigInt> {
    p.terms().map(|(e, c)| (*e, c.clone())).collect()
}

/// Proper colorings with `q` colors.
pub fn proper_colorings(g: &Multigraph, q: u64) -> u64 {
    let n = g.n() as u32;
    let total = q.pow(n);
    (0..total)
        .filter(|&code| {
            let color = |v: usize| code / q.pow(v as u32) % q;
            g.edges().iter().all(|e| color(e.a) != color(e.b))
        })
        .count() as u64
}

/// `(covers, independent sets)` by size.
pub fn covers_and_independent_sets(g: &Multigraph) -> (Vec<u64>, Vec<u64>) {
    let n = g.n();
    let mut cover = vec![0; n + 1];
    let mut indep = vec![0; n + 1];
    for mask in 0u32..1 << n {
        let s = mask.count_ones() as usize;
        let inside = |v: usize| mask >> v & 1 == 1;
        if g.edges().iter().all(|e| inside(e.a) || inside(e.b)) {
            cover[s] += 1;
        }
        if g.edges().iter().all(|e| !inside(e.a) || !inside(e.b)) {
            indep[s] += 1;
        }
    }
    (cover, indep)
}

/// Connected labeled simple graphs on `i` vertices with `j` edges.
pub fn connected_labeled(i: usize, j: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..i).flat_map(|a| (a + 1..i).map(move |b| (a, b))).collect();
    (0u64..1 << pairs.len())
        .filter(|m| m.count_ones() as usize == j)
        .filter(|&m| i > 0 && spanning_stats(i, &pairs, m).0 == 1)
        .count() as u64
}

/// Matchings of size `k`.
pub fn matchings(g: &Multigraph, k: usize) -> u64 {
    let edges = edge_pairs(g);
    (0u64..1 << edges.len())
        .filter(|m| m.count_ones() as usize == k)
        .filter(|&m| {
            let mut used = vec![false; g.n()];
            edges.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).all(|(_, &(a, b))| {
                let ok = a != b && !used[a] && !used[b];
                used[a] = true;
                used[b] = true;
                ok
            })
        })
        .count() as u64
}

/// `Σ_W x^{|W|} y^{k(H[W])}` over vertex subsets of `h`, as `(|W|, k) → count`.
pub fn vertex_subset_components(h: &Multigraph) -> BTreeMap<[i32; 2], u64> {
    let mut out = BTreeMap::new();
    for mask in 0u32..1 << h.n() {
        let chosen: Vec<usize> = (0..h.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let index = |v: usize| chosen.iter().position(|&w| w == v);
        let edges: Vec<(usize, usize)> = h
            .edges()
            .iter()
            .filter_map(|e| Some((index(e.a)?, index(e.b)?)))
            .collect();
        let full = if edges.is_empty() { 0 } else { (1u64 << edges.len()) - 1 };
        let (k, _) = spanning_stats(chosen.len(), &edges, full);
        *out.entry([chosen.len() as i32, k as i32]).or_insert(0) += 1;
    }
    out
}

pub fn degree_multiset(g: &Multigraph) -> BTreeMap<usize, u64> {
    let mut deg = vec![0usize; g.n()];
    for e in g.edges() {
        deg[e.a] += 1;
        deg[e.b] += 1;
    }
    let mut out = BTreeMap::new();
    for d in deg {
        *out.entry(d).or_insert(0) += 1;
    }
    out
}

/// Labeled trees on `n ≥ 2` vertices from Prüfer sequences.
pub fn labeled_trees(n: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    let total = n.pow((n - 2) as u32);
    for code in 0..total {
        let seq: Vec<usize> = (0..n - 2).map(|p| code / n.pow(p as u32) % n).collect();
        let mut degree = vec![1usize; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = Vec::new();
        for &s in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(Multigraph::new(n, edges).unwrap());
    }
    out
}

/// The pairs of non-isomorphic trees on 11 and 12 vertices that share their
/// covered components polynomial, 1-indexed edge lists.
pub const TREE_PAIRS: [[&[(usize, usize)]; 2]; 8] = [
    [
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7), (3, 8), (3, 9), (9, 10), (5, 11)],
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (4, 8), (4, 9), (5, 10), (6, 11)],
    ],
    [
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (3, 8), (5, 9), (5, 10), (6, 11)],
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (3, 8), (3, 9), (4, 10), (6, 11)],
    ],
    [
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 8), (3, 9), (9, 10), (6, 11)],
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (4, 9), (6, 10), (7, 11)],
    ],
    [
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (5, 10), (7, 11), (8, 12)],
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (4, 10), (5, 11), (8, 12)],
    ],
    [
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 8), (4, 9), (9, 10), (5, 11), (6, 12)],
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (3, 8), (5, 9), (9, 10), (9, 11), (6, 12)],
    ],
    [
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (3, 8), (5, 9), (5, 10), (10, 11), (6, 12)],
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (4, 9), (5, 10), (6, 11), (6, 12)],
    ],
    [
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (3, 9), (4, 10), (10, 11), (7, 12)],
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (4, 10), (5, 11), (7, 12)],
    ],
    [
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (4, 10), (10, 11), (8, 12)],
        &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 10), (4, 11), (7, 12)],
    ],
];

pub fn tree_from_one_indexed(edges: &[(usize, usize)]) -> Multigraph {
    let n = edges.len() + 1;
    Multigraph::new(n, edges.iter().map(|&(a, b)| (a - 1, b - 1))).unwrap()
}
