//! Isomorphism-invariant keys and canonical labelings.
//!
//! Forests use a center-rooted parenthesis encoding, which has no size cap.
//! Everything else goes through partition refinement followed by an
//! individualization search with automorphism pruning; the canonical form is
//! the labeling whose serialized adjacency (loops, then the upper triangle)
//! is lexicographically smallest.

use std::fmt;

use super::{AdjacencyMatrix, DisjointSets, Multigraph};
use crate::error::{Error, Result};

pub const DEFAULT_CANONICAL_CAP: usize = 11;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

pub fn canonical_key(g: &Multigraph, cap: usize) -> Result<CanonicalKey> {
    matrix_key(&AdjacencyMatrix::from_multigraph(g), cap)
}

/// Key of a multigraph given as an adjacency matrix.
pub fn matrix_key(a: &AdjacencyMatrix, cap: usize) -> Result<CanonicalKey> {
    if let Some(forest) = Forest::new(a) {
        return Ok(forest.key());
    }
    check_cap(a.n(), cap)?;
    let order = Search::run(a);
    let mut bytes = Vec::with_capacity(5 + 4 * certificate_len(a.n()));
    bytes.push(b'G');
    bytes.extend_from_slice(&(a.n() as u32).to_le_bytes());
    for w in certificate(a, &order) {
        bytes.extend_from_slice(&w.to_le_bytes());
    }
    Ok(CanonicalKey(bytes))
}

/// Canonical labeling `lab` (vertex `v` becomes `lab[v]`) and the relabeled graph.
/// Isomorphic inputs give identical forms.
pub fn canonical_form(g: &Multigraph, cap: usize) -> Result<(Multigraph, Vec<usize>)> {
    let a = AdjacencyMatrix::from_multigraph(g);
    let order = match Forest::new(&a) {
        Some(forest) => forest.order(),
        None => {
            check_cap(a.n(), cap)?;
            Search::run(&a)
        }
    };
    let mut lab = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        lab[v] = pos;
    }
    Ok((g.relabel(&lab), lab))
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "canonical labeling vertex count",
            cap,
            got: n,
        });
    }
    Ok(())
}

struct Forest {
    adj: Vec<Vec<usize>>,
    comps: Vec<(Vec<u8>, usize)>,
}

impl Forest {
    fn new(a: &AdjacencyMatrix) -> Option<Self> {
        let n = a.n();
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for u in 0..n {
            if a.loops(u) > 0 {
                return None;
            }
            for v in u + 1..n {
                match a.get(u, v) {
                    0 => {}
                    1 => {
                        adj[u].push(v);
                        adj[v].push(u);
                        m += 1;
                    }
                    _ => return None,
                }
            }
        }
        let comps = a.components();
        if m + comps.len() != n {
            return None;
        }
        let mut forest = Forest { adj, comps: Vec::new() };
        forest.comps = comps
            .iter()
            .map(|c| {
                forest
                    .centers(c)
                    .into_iter()
                    .map(|r| (forest.code(r, usize::MAX), r))
                    .min()
                    .unwrap()
            })
            .collect();
        forest.comps.sort();
        Some(forest)
    }

    fn centers(&self, comp: &[usize]) -> Vec<usize> {
        let mut deg: Vec<usize> = comp.iter().map(|&v| self.adj[v].len()).collect();
        let pos = |v: usize| comp.binary_search(&v).unwrap();
        let mut layer: Vec<usize> = (0..comp.len()).filter(|&i| deg[i] <= 1).collect();
        let mut left = comp.len();
        while left > 2 {
            left -= layer.len();
            let mut next = Vec::new();
            for &i in &layer {
                for &u in &self.adj[comp[i]] {
                    let j = pos(u);
                    if deg[j] > 1 {
                        deg[j] -= 1;
                        if deg[j] == 1 {
                            next.push(j);
                        }
                    }
                }
            }
            layer = next;
        }
        layer.iter().map(|&i| comp[i]).collect()
    }

    fn code(&self, v: usize, parent: usize) -> Vec<u8> {
        let mut kids: Vec<Vec<u8>> = self.adj[v]
            .iter()
            .filter(|&&u| u != parent)
            .map(|&u| self.code(u, v))
            .collect();
        kids.sort();
        let mut out = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        out.push(b'(');
        for k in kids {
            out.extend(k);
        }
        out.push(b')');
        out
    }

    fn key(&self) -> CanonicalKey {
        let mut bytes = vec![b'F'];
        for (code, _) in &self.comps {
            bytes.extend_from_slice(code);
        }
        CanonicalKey(bytes)
    }

    /// Preorder of the canonical rooted trees, children ordered by code.
    fn order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.adj.len());
        for &(_, root) in &self.comps {
            self.preorder(root, usize::MAX, &mut out);
        }
        out
    }

    fn preorder(&self, v: usize, parent: usize, out: &mut Vec<usize>) {
        out.push(v);
        let mut kids: Vec<(Vec<u8>, usize)> = self.adj[v]
            .iter()
            .filter(|&&u| u != parent)
            .map(|&u| (self.code(u, v), u))
            .collect();
        kids.sort();
        for (_, u) in kids {
            self.preorder(u, v, out);
        }
    }
}

fn certificate_len(n: usize) -> usize {
    n + n * n.saturating_sub(1) / 2
}

fn certificate(a: &AdjacencyMatrix, order: &[usize]) -> Vec<u32> {
    let n = order.len();
    let mut cert = Vec::with_capacity(certificate_len(n));
    cert.extend(order.iter().map(|&v| a.loops(v)));
    for i in 0..n {
        for j in i + 1..n {
            cert.push(a.get(order[i], order[j]));
        }
    }
    cert
}

type Cells = Vec<Vec<usize>>;

/// Splits cells until every vertex in a cell sees the same multiplicity
/// totals into every cell. Sub-cells are ordered by signature, so the result
/// commutes with relabeling.
fn refine(a: &AdjacencyMatrix, mut cells: Cells) -> Cells {
    let n = a.n();
    let mut cell_of = vec![0; n];
    loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let mut next = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut sigs: Vec<(Vec<u32>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u32; cells.len() + 1];
                    sig[0] = a.loops(v);
                    for (u, &k) in a.row(v).iter().enumerate() {
                        if u != v {
                            sig[cell_of[u] + 1] += k;
                        }
                    }
                    (sig, v)
                })
                .collect();
            sigs.sort();
            let mut start = 0;
            for i in 1..=sigs.len() {
                if i == sigs.len() || sigs[i].0 != sigs[start].0 {
                    next.push(sigs[start..i].iter().map(|s| s.1).collect());
                    start = i;
                }
            }
        }
        let changed = next.len() > cells.len();
        cells = next;
        if !changed {
            return cells;
        }
    }
}

struct Leaf {
    cert: Vec<u32>,
    order: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    a: &'a AdjacencyMatrix,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

fn common_prefix(p: &[usize], q: &[usize]) -> usize {
    p.iter().zip(q).take_while(|(a, b)| a == b).count()
}

impl<'a> Search<'a> {
    /// Returns the vertex order of the canonical labeling.
    fn run(a: &'a AdjacencyMatrix) -> Vec<usize> {
        let mut s = Search {
            a,
            first: None,
            best: None,
            autos: Vec::new(),
        };
        let start = if a.n() == 0 { Vec::new() } else { vec![(0..a.n()).collect()] };
        let cells = refine(a, start);
        s.descend(cells, &mut Vec::new());
        s.best.unwrap().order
    }

    fn descend(&mut self, cells: Cells, path: &mut Vec<usize>) -> Option<usize> {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(target) = target else {
            let order = cells.into_iter().map(|c| c[0]).collect();
            return self.leaf(order, path);
        };
        let cell = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.in_explored_orbit(v, &explored, path) {
                continue;
            }
            let mut child = cells.clone();
            child[target] = cell.iter().copied().filter(|&u| u != v).collect();
            child.insert(target, vec![v]);
            let child = refine(self.a, child);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            explored.push(v);
            if let Some(d) = jump {
                if d < path.len() {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, order: Vec<usize>, path: &[usize]) -> Option<usize> {
        let cert = certificate(self.a, &order);
        let leaf = Leaf {
            cert,
            order,
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                cert: leaf.cert.clone(),
                order: leaf.order.clone(),
                path: leaf.path.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        if leaf.cert == first.cert {
            let jump = common_prefix(&leaf.path, &first.path);
            self.record(&first.order.clone(), &leaf.order);
            return Some(jump);
        }
        let best = self.best.as_ref().unwrap();
        match leaf.cert.cmp(&best.cert) {
            std::cmp::Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Equal => {
                let jump = common_prefix(&leaf.path, &best.path);
                let base = best.order.clone();
                self.record(&base, &leaf.order);
                Some(jump)
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    fn record(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0; from.len()];
        for (&u, &v) in from.iter().zip(to) {
            gamma[u] = v;
        }
        self.autos.push(gamma);
    }

    /// Orbit test under the automorphisms found so far that fix `path` pointwise.
    fn in_explored_orbit(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let mut ds = DisjointSets::new(self.a.n());
        let mut any = false;
        for gamma in &self.autos {
            if path.iter().all(|&p| gamma[p] == p) {
                any = true;
                for (u, &g) in gamma.iter().enumerate() {
                    ds.union(u, g);
                }
            }
        }
        if !any {
            return false;
        }
        let r = ds.find(v);
        explored.iter().any(|&u| ds.find(u) == r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyKind};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn isomorphic(g: &Multigraph, h: &Multigraph, perms: &[Vec<usize>]) -> bool {
        g.n() == h.n() && g.m() == h.m() && perms.iter().any(|p| &g.relabel(p) == h)
    }

    fn random_multigraph(rng: &mut ChaCha8Rng, n: usize, m: usize, loops: bool) -> Multigraph {
        let edges: Vec<(usize, usize)> = (0..m)
            .map(|_| loop {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if loops || u != v || n == 1 {
                    break (u, v);
                }
            })
            .collect();
        Multigraph::new(n, edges).unwrap()
    }

    #[test]
    fn examples() {
        let p3 = Multigraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let p3b = Multigraph::new(3, [(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_key(&p3, 11), canonical_key(&p3b, 11));
        let p4 = family(FamilyKind::Path, 4).unwrap();
        let s3 = family(FamilyKind::Star, 3).unwrap();
        assert_ne!(canonical_key(&p4, 11), canonical_key(&s3, 11));
        let c2 = family(FamilyKind::Cycle, 2).unwrap();
        assert_ne!(canonical_key(&c2, 11), canonical_key(&p3, 11));
    }

    #[test]
    fn cap() {
        let k12 = family(FamilyKind::Complete, 12).unwrap();
        assert!(matches!(canonical_key(&k12, 11), Err(Error::CapExceeded { .. })));
        // forests are never capped
        let p30 = family(FamilyKind::Path, 30).unwrap();
        assert!(canonical_key(&p30, 11).is_ok());
    }

    #[test]
    fn key_equality_is_isomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let perms: Vec<Vec<Vec<usize>>> = (0..=6).map(permutations).collect();
        for _ in 0..4000 {
            let n = rng.gen_range(1..=6);
            let m = rng.gen_range(0..=8);
            let loops = rng.gen_bool(0.3);
            let g = random_multigraph(&mut rng, n, m, loops);
            let h = random_multigraph(&mut rng, n, m, loops);
            let same = canonical_key(&g, 11).unwrap() == canonical_key(&h, 11).unwrap();
            assert_eq!(same, isomorphic(&g, &h, &perms[n]), "{g:?} {h:?}");
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            assert_eq!(canonical_key(&g.relabel(&p), 11), canonical_key(&g, 11));
        }
    }

    #[test]
    fn canonical_forms_agree_on_relabelings() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..500 {
            let n = rng.gen_range(1..=11);
            let m = rng.gen_range(0..=20);
            let loops = rng.gen_bool(0.2);
            let g = random_multigraph(&mut rng, n, m, loops);
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            let (f1, _) = canonical_form(&g, 11).unwrap();
            let (f2, _) = canonical_form(&g.relabel(&p), 11).unwrap();
            assert_eq!(f1, f2);
        }
    }

    #[test]
    fn symmetric_graphs_finish() {
        for kind in [FamilyKind::Edgeless, FamilyKind::Complete, FamilyKind::Cycle, FamilyKind::Wheel] {
            let g = family(kind, 10).unwrap();
            let mut p: Vec<usize> = (0..g.n()).collect();
            p.reverse();
            assert_eq!(canonical_form(&g, 11).unwrap().0, canonical_form(&g.relabel(&p), 11).unwrap().0);
        }
        // disjoint triangles: many automorphisms, no refinement help
        let mut g = Multigraph::empty(0);
        for _ in 0..3 {
            g = g.disjoint_union(&family(FamilyKind::Cycle, 3).unwrap());
        }
        let h = g.disjoint_union(&Multigraph::empty(2));
        assert!(canonical_key(&h, 11).is_ok());
    }
}
