//! Definition-level computations used as test oracles.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{DisjointSets, Hypergraph, Multigraph};
use crate::poly::TriPoly;

pub const DEFAULT_BRUTE_FORCE_EDGE_CAP: usize = 20;
pub const EXPANSION_EDGE_CAP: usize = 12;

fn check(m: usize, cap: usize, what: &'static str) -> Result<()> {
    if m > cap {
        return Err(Error::CapExceeded { what, cap, got: m });
    }
    Ok(())
}

fn collect(counts: BTreeMap<[i32; 3], u64>) -> TriPoly {
    let mut p = TriPoly::zero();
    for (e, c) in counts {
        p.add_term(e, BigInt::from(c));
    }
    p
}

/// `(k, c)` of the spanning subgraph selected by `mask`.
fn subset_stats(n: usize, edges: &[Vec<usize>], mask: u64) -> (i32, i32) {
    let mut ds = DisjointSets::new(n);
    let mut covered = vec![false; n];
    let mut k = n as i32;
    for (i, e) in edges.iter().enumerate() {
        if mask >> i & 1 == 1 {
            covered[e[0]] = true;
            for &v in &e[1..] {
                covered[v] = true;
                if ds.union(e[0], v) {
                    k -= 1;
                }
            }
        }
    }
    let c = (0..n).filter(|&v| covered[v] && ds.find(v) == v).count() as i32;
    (k, c)
}

fn bruteforce(n: usize, edges: &[Vec<usize>]) -> TriPoly {
    let mut counts = BTreeMap::new();
    for mask in 0u64..1 << edges.len() {
        let (k, c) = subset_stats(n, edges, mask);
        *counts.entry([k, mask.count_ones() as i32, c]).or_insert(0u64) += 1;
    }
    collect(counts)
}

/// `Σ_A x^{k(G[A])} y^{|A|} z^{c(G[A])}` over all edge subsets.
pub fn ccp_bruteforce(g: &Multigraph, edge_cap: usize) -> Result<TriPoly> {
    check(g.m(), edge_cap, "brute-force edge count")?;
    let h = g.to_hypergraph();
    Ok(bruteforce(h.n(), h.edges()))
}

pub fn ccp_bruteforce_hypergraph(h: &Hypergraph, edge_cap: usize) -> Result<TriPoly> {
    check(h.m(), edge_cap, "brute-force edge count")?;
    Ok(bruteforce(h.n(), h.edges()))
}

/// ξ summed over pairs `(A, B)` of edge sets with no common incident vertex:
/// `x^{k(A∪B) − c(B)} y^{|A| + |B| − c(B)} z^{c(B)}`.
pub fn eep_expansion_oracle(g: &Multigraph) -> Result<TriPoly> {
    check(g.m(), EXPANSION_EDGE_CAP, "edge-pair expansion edge count")?;
    let h = g.to_hypergraph();
    let edges = h.edges();
    let n = g.n();
    let m = edges.len();
    let mut counts = BTreeMap::new();
    let total = 3u64.pow(m as u32);
    for code in 0..total {
        // digit 1 puts the edge in A, digit 2 in B
        let (mut a, mut b) = (0u64, 0u64);
        let mut rest = code;
        for i in 0..m {
            match rest % 3 {
                1 => a |= 1 << i,
                2 => b |= 1 << i,
                _ => {}
            }
            rest /= 3;
        }
        let touched = |mask: u64| {
            let mut t = vec![false; n];
            for (i, e) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for &v in e {
                        t[v] = true;
                    }
                }
            }
            t
        };
        let (ta, tb) = (touched(a), touched(b));
        if (0..n).any(|v| ta[v] && tb[v]) {
            continue;
        }
        let (k_union, _) = subset_stats(n, edges, a | b);
        let (_, c_b) = subset_stats(n, edges, b);
        let size = (a.count_ones() + b.count_ones()) as i32;
        *counts.entry([k_union - c_b, size - c_b, c_b]).or_insert(0u64) += 1;
    }
    Ok(collect(counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyKind};
    use crate::poly::tri::*;

    #[test]
    fn bruteforce_examples() {
        let k1 = family(FamilyKind::Path, 1).unwrap();
        assert_eq!(ccp_bruteforce(&k1, 20).unwrap(), x());
        let k2 = family(FamilyKind::Path, 2).unwrap();
        assert_eq!(ccp_bruteforce(&k2, 20).unwrap(), mono(1, 2, 0, 0) + mono(1, 1, 1, 1));
        let c3 = family(FamilyKind::Cycle, 3).unwrap();
        let expect = mono(1, 3, 0, 0) + mono(3, 2, 1, 1) + mono(3, 1, 2, 1) + mono(1, 1, 3, 1);
        assert_eq!(ccp_bruteforce(&c3, 20).unwrap(), expect);
        let k7 = family(FamilyKind::Complete, 7).unwrap();
        assert!(ccp_bruteforce(&k7, 20).is_err());
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(eep_expansion_oracle(&Multigraph::empty(1)).unwrap(), x());
        let k2 = family(FamilyKind::Path, 2).unwrap();
        assert_eq!(eep_expansion_oracle(&k2).unwrap(), mono(1, 2, 0, 0) + mono(1, 1, 1, 0) + z());
        assert_eq!(eep_expansion_oracle(&Multigraph::empty(2)).unwrap(), mono(1, 2, 0, 0));
    }
}
