use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::TriPoly;

/// Edge-subset counts `c[i, j, k]`: subsets with `i` components, `j` edges
/// and `k` covered components, together with the graph's `n` and `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientTable {
    pub n: usize,
    pub m: usize,
    entries: BTreeMap<[u32; 3], BigInt>,
}

impl CoefficientTable {
    /// Reads the table off a covered components polynomial and checks its invariants.
    pub fn from_poly(n: usize, m: usize, c: &TriPoly) -> Result<Self> {
        Self::build(n, m, c, true)
    }

    /// As [`CoefficientTable::from_poly`], without the graph-only rank bound
    /// `i + j >= n` (a hyperedge can merge more than two components).
    pub fn from_hypergraph_poly(n: usize, m: usize, c: &TriPoly) -> Result<Self> {
        Self::build(n, m, c, false)
    }

    fn build(n: usize, m: usize, c: &TriPoly, graph: bool) -> Result<Self> {
        let bad = |why: String| Error::MalformedPolynomial(why);
        let mut entries = BTreeMap::new();
        let mut total = BigInt::zero();
        for (e, coeff) in c.terms() {
            if e.iter().any(|&v| v < 0) || coeff.is_negative() {
                return Err(bad(format!("term {e:?} with coefficient {coeff} is not a count")));
            }
            let [i, j, k] = [e[0] as u32, e[1] as u32, e[2] as u32];
            if k > j || k > i || (i as usize) > n || (j as usize) > m || (graph && (i as usize) + (j as usize) < n) {
                return Err(bad(format!("entry ({i}, {j}, {k}) impossible for n = {n}, m = {m}")));
            }
            total += coeff;
            entries.insert([i, j, k], coeff.clone());
        }
        if total != BigInt::one() << m {
            return Err(bad(format!("counts sum to {total}, expected 2^{m}")));
        }
        if entries.get(&[n as u32, 0, 0]) != Some(&BigInt::one()) {
            return Err(bad("missing the empty subset entry".into()));
        }
        Ok(CoefficientTable { n, m, entries })
    }

    pub fn get(&self, i: u32, j: u32, k: u32) -> BigInt {
        self.entries.get(&[i, j, k]).cloned().unwrap_or_default()
    }

    /// Nonzero entries in lexicographic `(i, j, k)` order.
    pub fn entries(&self) -> impl Iterator<Item = ([u32; 3], &BigInt)> {
        self.entries.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_poly(&self) -> TriPoly {
        let mut p = TriPoly::zero();
        for ([i, j, k], c) in self.entries() {
            p.add_term([i as i32, j as i32, k as i32], c.clone());
        }
        p
    }
}
