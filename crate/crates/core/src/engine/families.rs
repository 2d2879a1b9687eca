//! Closed forms and recurrences for paths, cycles, stars and complete graphs.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::FamilyKind;
use crate::poly::tri::{c, mono, x, y, z};
use crate::poly::TriPoly;

fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    binomial(BigInt::from(n), BigInt::from(k))
}

/// Edge subsets of `P_n` with `i` edges and `k` covered components.
pub fn cnik(n: i64, i: i64, k: i64) -> BigInt {
    if n > 0 && i > 0 && k > 0 {
        binom(i - 1, k - 1) * binom(n - i, k)
    } else if i == 0 && k == 0 {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// Memoized counts `d(i, j)` of connected labeled graphs on `i` vertices with
/// `j` edges, with `d(0, j) = 0`.
#[derive(Default)]
pub struct ConnectedCounts {
    memo: HashMap<(usize, usize), BigInt>,
}

impl ConnectedCounts {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, i: usize, j: usize) -> BigInt {
        if i == 0 {
            return BigInt::zero();
        }
        if let Some(v) = self.memo.get(&(i, j)) {
            return v.clone();
        }
        let pairs = |t: usize| (t * t.saturating_sub(1) / 2) as i64;
        let mut d = binom(pairs(i), j as i64);
        for k in 1..i {
            let choose = binom(i as i64 - 1, k as i64 - 1);
            for l in 0..=j {
                let inner = self.get(k, l);
                if inner.is_zero() {
                    continue;
                }
                d -= &inner * &choose * binom(pairs(i - k), (j - l) as i64);
            }
        }
        self.memo.insert((i, j), d.clone());
        d
    }
}

pub fn connected_counts(i: usize, j: usize) -> BigInt {
    ConnectedCounts::new().get(i, j)
}

/// Number of k-matchings of `C_n`, `n/(n−k)·binom(n−k, k)` for `0 < k < n`.
pub fn kmatching_coefficient(n: usize, k: usize) -> Result<BigInt> {
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("k-matchings need 0 < k < n, got n = {n}, k = {k}")));
    }
    let num = BigInt::from(n) * binom((n - k) as i64, k as i64);
    let (q, r) = num.div_rem(&BigInt::from(n - k));
    if !r.is_zero() {
        return Err(Error::NotDivisible("k-matching count"));
    }
    Ok(q)
}

fn path_formula(n: i64) -> TriPoly {
    if n == 0 {
        return c(1);
    }
    let mut p = mono(1, n as i32, 0, 0);
    for i in 1..n {
        for k in 1..=i.min(n - i) {
            p.add_term([(n - i) as i32, i as i32, k as i32], cnik(n, i, k));
        }
    }
    p
}

fn cycle_formula(n: i64) -> Result<TriPoly> {
    let mut p = mono(1, n as i32, 0, 0) + mono(1, 1, n as i32, 1);
    for i in 1..n {
        for k in 1..=i.min(n - i) {
            let (q, r) = (BigInt::from(n) * cnik(n, i, k)).div_rem(&BigInt::from(n - i));
            if !r.is_zero() {
                return Err(Error::NotDivisible("cycle coefficient"));
            }
            p.add_term([(n - i) as i32, i as i32, k as i32], q);
        }
    }
    Ok(p)
}

fn star_formula(n: u32) -> TriPoly {
    let xn1 = mono(1, n as i32 + 1, 0, 0);
    &xn1 * &(c(1) - z()) + &(x() * z()) * &(x() + y()).pow(n)
}

fn complete_formula(n: usize) -> TriPoly {
    let mut d = ConnectedCounts::new();
    let mut k: Vec<TriPoly> = vec![c(1)];
    for t in 1..=n {
        let mut p = &x() * &k[t - 1];
        for i in 2..=t {
            let mut inner = TriPoly::zero();
            for j in i - 1..=i * (i - 1) / 2 {
                inner.add_term([1, j as i32, 1], d.get(i, j));
            }
            let term = &inner * &k[t - i];
            p += &term.scale(&binom(t as i64 - 1, i as i64 - 1));
        }
        k.push(p);
    }
    k.pop().unwrap()
}

/// Closed form of `C` for a family member, as constructed by [`crate::graph::family`].
pub fn family_formula(kind: FamilyKind, n: usize) -> Result<TriPoly> {
    match kind {
        FamilyKind::Path => Ok(path_formula(n as i64)),
        FamilyKind::Cycle if n == 0 => Err(Error::InvalidSize { what: "cycle", size: 0 }),
        FamilyKind::Cycle => cycle_formula(n as i64),
        FamilyKind::Star => Ok(star_formula(n as u32)),
        FamilyKind::Complete => Ok(complete_formula(n)),
        FamilyKind::Edgeless => Ok(mono(1, n as i32, 0, 0)),
        FamilyKind::Wheel => Err(Error::InvalidArgument("no closed form for wheels".into())),
    }
}

/// `C(P_n) = (x + y)·C(P_{n−1}) + (xyz − xy)·C(P_{n−2})`, `C(P_0) = 1`, `C(P_1) = x`.
pub fn path_recurrence(n: usize) -> TriPoly {
    let ext = mono(1, 1, 1, 1) - mono(1, 1, 1, 0);
    let mut prev = c(1);
    let mut cur = x();
    if n == 0 {
        return prev;
    }
    for _ in 2..=n {
        let next = &(x() + y()) * &cur + &ext * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Which extra term the star recurrence uses: the corrected `(yz − y)·xⁿ`
/// or the misprinted `(yz − z)·xⁿ` kept for mutation testing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarTerm {
    Corrected,
    Misprinted,
}

/// `C(S_n) = (x + y)·C(S_{n−1}) + t·xⁿ` with `C(S_0) = x`.
pub fn star_recurrence(n: usize, term: StarTerm) -> TriPoly {
    let t = match term {
        StarTerm::Corrected => mono(1, 0, 1, 1) - y(),
        StarTerm::Misprinted => mono(1, 0, 1, 1) - z(),
    };
    let mut cur = x();
    for k in 1..=n {
        cur = &(x() + y()) * &cur + &t * &mono(1, k as i32, 0, 0);
    }
    cur
}

/// `C(C_n) = C(P_n) + y·C(C_{n−1}) + (xyz − xy)·C(P_{n−2})` from `C(C_1) = x + xyz`.
pub fn cycle_recurrence(n: usize) -> Result<TriPoly> {
    if n == 0 {
        return Err(Error::InvalidSize { what: "cycle", size: 0 });
    }
    let ext = mono(1, 1, 1, 1) - mono(1, 1, 1, 0);
    let mut cur = x() + mono(1, 1, 1, 1);
    for k in 2..=n {
        cur = path_recurrence(k) + &y() * &cur + &ext * &path_recurrence(k - 2);
    }
    Ok(cur)
}
