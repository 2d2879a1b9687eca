use super::{Edge, Multigraph};

/// Dense symmetric multiplicity matrix; the diagonal holds loop counts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdjacencyMatrix {
    n: usize,
    w: Vec<u32>,
}

impl AdjacencyMatrix {
    pub fn new(n: usize) -> Self {
        AdjacencyMatrix { n, w: vec![0; n * n] }
    }

    pub fn from_multigraph(g: &Multigraph) -> Self {
        let mut a = Self::new(g.n());
        for e in g.edges() {
            a.add(e.a, e.b, 1);
        }
        a
    }

    pub fn to_multigraph(&self) -> Multigraph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u..self.n {
                for _ in 0..self.get(u, v) {
                    edges.push(Edge::new(u, v));
                }
            }
        }
        Multigraph::from_sorted(self.n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.w[u * self.n + v]
    }

    pub fn loops(&self, v: usize) -> u32 {
        self.get(v, v)
    }

    pub fn add(&mut self, u: usize, v: usize, k: u32) {
        self.w[u * self.n + v] += k;
        if u != v {
            self.w[v * self.n + u] += k;
        }
    }

    pub fn set(&mut self, u: usize, v: usize, k: u32) {
        self.w[u * self.n + v] = k;
        self.w[v * self.n + u] = k;
    }

    pub fn row(&self, v: usize) -> &[u32] {
        &self.w[v * self.n..(v + 1) * self.n]
    }

    /// Edge count with multiplicity.
    pub fn m(&self) -> usize {
        let mut m = 0;
        for u in 0..self.n {
            for v in u..self.n {
                m += self.get(u, v) as usize;
            }
        }
        m
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> u32 {
        self.row(v).iter().sum::<u32>() + self.loops(v)
    }

    /// Number of distinct non-loop neighbours.
    pub fn neighbour_count(&self, v: usize) -> usize {
        self.row(v)
            .iter()
            .enumerate()
            .filter(|&(u, &k)| u != v && k > 0)
            .count()
    }

    pub fn is_edgeless(&self) -> bool {
        self.w.iter().all(|&k| k == 0)
    }

    /// Keeps the vertices with `keep[v]`, preserving their order.
    pub fn induced(&self, keep: &[bool]) -> Self {
        let idx: Vec<usize> = (0..self.n).filter(|&v| keep[v]).collect();
        let mut out = Self::new(idx.len());
        for (i, &u) in idx.iter().enumerate() {
            for (j, &v) in idx.iter().enumerate() {
                out.w[i * out.n + j] = self.get(u, v);
            }
        }
        out
    }

    pub fn without_vertex(&self, v: usize) -> Self {
        let mut keep = vec![true; self.n];
        keep[v] = false;
        self.induced(&keep)
    }

    pub fn without_vertices(&self, u: usize, v: usize) -> Self {
        let mut keep = vec![true; self.n];
        keep[u] = false;
        keep[v] = false;
        self.induced(&keep)
    }

    /// Merges `v` into `u` (`u != v`). Edges between them become loops;
    /// callers remove the bundle first when that is not wanted.
    pub fn merge(&self, u: usize, v: usize) -> Self {
        let mut a = self.clone();
        let loops = a.loops(u) + a.loops(v) + a.get(u, v);
        for t in 0..a.n {
            if t != u && t != v {
                let k = a.get(u, t) + a.get(v, t);
                a.set(u, t, k);
            }
        }
        a.w[u * a.n + u] = loops;
        a.without_vertex(v)
    }

    /// Connected components as vertex lists (ascending), ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for (u, &k) in self.row(v).iter().enumerate() {
                    if k > 0 && !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = Self::new(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                out.w[perm[u] * self.n + perm[v]] = self.get(u, v);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_merge() {
        let g = Multigraph::new(4, [(0, 1), (0, 1), (1, 2), (2, 2), (0, 3)]).unwrap();
        let a = AdjacencyMatrix::from_multigraph(&g);
        assert_eq!(a.to_multigraph(), g);
        assert_eq!(a.m(), 5);
        assert_eq!(a.degree(2), 3);
        let merged = a.merge(0, 1);
        let expect = Multigraph::new(3, [(0, 0), (0, 0), (0, 1), (1, 1), (0, 2)]).unwrap();
        assert_eq!(merged.to_multigraph(), expect);
        assert_eq!(a.components(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(AdjacencyMatrix::new(2).components().len(), 2);
    }
}
