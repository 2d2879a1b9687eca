use serde::Serialize;

use super::Multigraph;

/// Pendant edges, bridges and articulation vertices of a multigraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralQueries {
    pub pendant_edges: Vec<usize>,
    pub bridges: Vec<usize>,
    pub articulation_vertices: Vec<usize>,
}

impl StructuralQueries {
    pub fn of(g: &Multigraph) -> Self {
        StructuralQueries {
            pendant_edges: pendant_edges(g),
            bridges: bridges(g),
            articulation_vertices: articulation_vertices(g),
        }
    }
}

/// Edges with an endpoint of degree 1. Loops count twice toward degree,
/// so a loop is never pendant.
pub fn pendant_edges(g: &Multigraph) -> Vec<usize> {
    let deg = g.degrees();
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.is_loop() && (deg[e.a] == 1 || deg[e.b] == 1))
        .map(|(i, _)| i)
        .collect()
}

struct Lowlink {
    adj: Vec<Vec<(usize, usize)>>,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    bridges: Vec<usize>,
    cut: Vec<bool>,
}

impl Lowlink {
    fn new(g: &Multigraph) -> Self {
        let mut adj = vec![Vec::new(); g.n()];
        for (id, e) in g.edges().iter().enumerate() {
            if !e.is_loop() {
                adj[e.a].push((e.b, id));
                adj[e.b].push((e.a, id));
            }
        }
        let mut s = Lowlink {
            adj,
            disc: vec![usize::MAX; g.n()],
            low: vec![0; g.n()],
            time: 0,
            bridges: Vec::new(),
            cut: vec![false; g.n()],
        };
        for v in 0..g.n() {
            if s.disc[v] == usize::MAX {
                s.visit(v, usize::MAX);
            }
        }
        s.bridges.sort_unstable();
        s
    }

    fn visit(&mut self, v: usize, via: usize) {
        self.disc[v] = self.time;
        self.low[v] = self.time;
        self.time += 1;
        let mut children = 0;
        for idx in 0..self.adj[v].len() {
            let (u, id) = self.adj[v][idx];
            if id == via {
                continue;
            }
            if self.disc[u] == usize::MAX {
                children += 1;
                self.visit(u, id);
                self.low[v] = self.low[v].min(self.low[u]);
                if self.low[u] > self.disc[v] {
                    self.bridges.push(id);
                }
                if via != usize::MAX && self.low[u] >= self.disc[v] {
                    self.cut[v] = true;
                }
            } else {
                self.low[v] = self.low[v].min(self.disc[u]);
            }
        }
        if via == usize::MAX && children > 1 {
            self.cut[v] = true;
        }
    }
}

/// Edge indices whose deletion increases the component count.
pub fn bridges(g: &Multigraph) -> Vec<usize> {
    Lowlink::new(g).bridges
}

/// Vertices whose deletion increases the component count.
pub fn articulation_vertices(g: &Multigraph) -> Vec<usize> {
    let cut = Lowlink::new(g).cut;
    (0..g.n()).filter(|&v| cut[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyKind};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn oracle(g: &Multigraph) -> StructuralQueries {
        let k = g.component_stats().k;
        let bridges = (0..g.m())
            .filter(|&e| g.delete_edge(e).unwrap().component_stats().k > k)
            .collect();
        let articulation_vertices = (0..g.n())
            .filter(|&v| g.delete_vertex(v).unwrap().component_stats().k > k)
            .collect();
        let deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let pendant_edges = (0..g.m())
            .filter(|&e| {
                let f = g.edges()[e];
                !f.is_loop() && (deg[f.a] == 1 || deg[f.b] == 1)
            })
            .collect();
        StructuralQueries {
            pendant_edges,
            bridges,
            articulation_vertices,
        }
    }

    #[test]
    fn small_examples() {
        let p4 = family(FamilyKind::Path, 4).unwrap();
        let q = StructuralQueries::of(&p4);
        assert_eq!(q.pendant_edges.len(), 2);
        assert_eq!(q.bridges.len(), 3);
        assert_eq!(q.articulation_vertices, vec![1, 2]);
        assert_eq!(q, oracle(&p4));

        let c4 = family(FamilyKind::Cycle, 4).unwrap();
        let q = StructuralQueries::of(&c4);
        assert!(q.pendant_edges.is_empty() && q.bridges.is_empty() && q.articulation_vertices.is_empty());

        let k2 = family(FamilyKind::Path, 2).unwrap();
        let q = StructuralQueries::of(&k2);
        assert_eq!((q.pendant_edges, q.bridges), (vec![0], vec![0]));
        assert!(q.articulation_vertices.is_empty());
    }

    #[test]
    fn matches_removal_oracle_on_random_multigraphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..2000 {
            let n = rng.gen_range(1..=8);
            let m = rng.gen_range(0..=12);
            let edges: Vec<(usize, usize)> =
                (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
            let g = Multigraph::new(n, edges).unwrap();
            assert_eq!(StructuralQueries::of(&g), oracle(&g), "{g:?}");
        }
    }
}
