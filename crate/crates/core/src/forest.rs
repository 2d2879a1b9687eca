//! Forest-only polynomials: `ξ̂(F, x, a, b)`, degree sequences read from it,
//! and recovery of `ξ` from the bivariate chromatic polynomial.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{ToPrimitive, Zero};

use crate::engine::{CoefficientTable, Engine};
use crate::error::{Error, Result};
use crate::graph::{canonical_key, CanonicalKey, Multigraph, DEFAULT_CANONICAL_CAP};
use crate::invariants::{basic_counts, degree_info};
use crate::poly::tri::{c, mono, x, y};
use crate::poly::{BiPoly, TriPoly};

/// Variable names of `ξ̂`.
pub const XI_HAT_VARS: [&str; 3] = ["x", "a", "b"];

fn require_forest(f: &Multigraph) -> Result<()> {
    if f.is_forest() {
        Ok(())
    } else {
        Err(Error::NotAForest)
    }
}

/// `ξ̂(F) = a·ξ̂(F/ₑ) + b·ξ̂(F†ₑ)` on a pendant edge `e`, multiplicative over
/// components, `ξ̂(K₁) = x`. The result is in the variables `(x, a, b)`.
pub fn xi_hat(f: &Multigraph) -> Result<TriPoly> {
    require_forest(f)?;
    let mut memo = HashMap::new();
    Ok(xi_hat_rec(f, &mut memo))
}

fn xi_hat_rec(f: &Multigraph, memo: &mut HashMap<CanonicalKey, TriPoly>) -> TriPoly {
    if f.m() == 0 {
        return mono(1, f.n() as i32, 0, 0);
    }
    let parts = f.components();
    if parts.len() > 1 {
        return parts.iter().fold(c(1), |acc, p| &acc * &xi_hat_rec(p, memo));
    }
    let key = canonical_key(f, DEFAULT_CANONICAL_CAP).expect("forests have uncapped keys");
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let degrees = f.degrees();
    let u = degrees.iter().position(|&d| d == 1).expect("a tree with an edge has a leaf");
    let e = f.edges().iter().find(|e| e.contains(u)).expect("leaf has an edge");
    let v = if e.a == u { e.b } else { e.a };
    let mut gone = vec![false; f.n()];
    gone[u] = true;
    let contracted = f.remove_vertices(&gone);
    gone[v] = true;
    let extracted = f.remove_vertices(&gone);
    let a = TriPoly::var(1);
    let b = TriPoly::var(2);
    let p = &a * &xi_hat_rec(&contracted, memo) + &b * &xi_hat_rec(&extracted, memo);
    memo.insert(key, p.clone());
    p
}

/// `ξ̂` from the covered components table, as `C(x, a − x, 1 + b/(x(a − x)))`
/// expanded termwise: `Σ c · Σ_t binom(k, t) x^{i−t} (a − x)^{j−t} b^t`.
pub fn xi_hat_from_table(table: &CoefficientTable) -> TriPoly {
    let a_minus_x = TriPoly::var(1) - x();
    let mut pw = vec![c(1)];
    for t in 1..=table.m {
        let next = &pw[t - 1] * &a_minus_x;
        pw.push(next);
    }
    let mut out = TriPoly::zero();
    for ([i, j, k], coef) in table.entries() {
        for t in 0..=k {
            let scale = coef * binomial(BigInt::from(k), BigInt::from(t));
            let head = TriPoly::monomial([(i - t) as i32, 0, t as i32], scale);
            out += &(&head * &pw[(j - t) as usize]);
        }
    }
    out
}

/// Checks the four substitution identities linking `ξ̂`, `ξ` and `C` on `f`:
///
/// * `ξ̂(x, a, b) = ξ(x, a − x, b)`
/// * `ξ(x, y, z) = ξ̂(x, x + y, z)`
/// * `ξ̂(x, a, b) = C(x, a − x, 1 + b/(x(a − x)))`
/// * `C(x, y, z) = ξ̂(x, x + y, xyz − xy)`
pub fn check_conversions(f: &Multigraph, engine: &mut Engine) -> Result<()> {
    let hat = xi_hat(f)?;
    let xi = engine.eep(f);
    let table = engine.coefficient_table(f);
    let ccp = table.to_poly();
    let sub = |p: &TriPoly, var: usize, e: &TriPoly| p.substitute(var, e).expect("polynomial substitution");
    let fail = |which: &str| Err(Error::IdentityViolation(format!("{which} fails on {f:?}")));
    if sub(&xi, 1, &(TriPoly::var(1) - x())) != hat {
        return fail("xi_hat = xi(x, a - x, b)");
    }
    let with_xy = sub(&hat, 1, &(x() + y()));
    if with_xy != xi {
        return fail("xi = xi_hat(x, x + y, z)");
    }
    if xi_hat_from_table(&table) != hat {
        return fail("xi_hat = C(x, a - x, 1 + b/(x(a - x)))");
    }
    if sub(&with_xy, 2, &(mono(1, 1, 1, 1) - mono(1, 1, 1, 0))) != ccp {
        return fail("C = xi_hat(x, x + y, xyz - xy)");
    }
    Ok(())
}

fn count(v: BigInt) -> Result<u64> {
    v.to_u64()
        .ok_or_else(|| Error::MalformedPolynomial(format!("degree count {v} is not a small non-negative integer")))
}

/// Degree multiset of a forest from `C(F)` alone: degrees 0 and 1 from the
/// general invariant reads, degrees `i ≥ 2` from
/// `[b x^{k+i−2}]ξ̂(F, x, 1, b) − [b x^{k+i−1}]ξ̂(F, x, 1, b)`.
pub fn degree_sequence_from_table(table: &CoefficientTable) -> Result<BTreeMap<usize, u64>> {
    let ccp = table.to_poly();
    let counts = basic_counts(&ccp)?;
    if counts.m + counts.k != counts.n {
        return Err(Error::NotAForest);
    }
    let hat = xi_hat_from_table(table);
    degree_sequence_from_parts(&hat, &ccp)
}

fn degree_sequence_from_parts(hat: &TriPoly, ccp: &TriPoly) -> Result<BTreeMap<usize, u64>> {
    let counts = basic_counts(ccp)?;
    let d = degree_info(ccp, &counts)?;
    let hat1 = hat.substitute(1, &c(1)).expect("constant substitution");
    let read = |e: usize| hat1.coeff(&[e as i32, 0, 1]);
    let mut out = BTreeMap::new();
    out.insert(0, counts.i as u64);
    out.insert(1, d.deg1_count);
    for i in 2..counts.n {
        let value = read(counts.k + i - 2) - read(counts.k + i - 1);
        out.insert(i, count(value)?);
    }
    out.retain(|_, v| *v > 0);
    Ok(out)
}

/// Degree multiset of a forest, using `ξ̂` computed by its own recurrence.
pub fn degree_sequence(f: &Multigraph, engine: &mut Engine) -> Result<BTreeMap<usize, u64>> {
    let hat = xi_hat(f)?;
    degree_sequence_from_parts(&hat, &engine.ccp(f))
}

/// Degree multiset counted directly.
pub fn degree_sequence_direct(g: &Multigraph) -> BTreeMap<usize, u64> {
    let mut out = BTreeMap::new();
    for d in g.degrees() {
        *out.entry(d).or_insert(0) += 1;
    }
    out
}

/// `ξ(F)` from `P(F, x, y)` for a forest `F`.
///
/// `P(F, x, x − z) = ξ(F, x, −1, z)`, and in a forest the exponent of `y`
/// in each term is fixed by the others as `n − i − 2k`, so each coefficient
/// `[x^i z^k]` is re-dressed as `(−1)^j x^i y^j z^k` with `j = n − i − 2k`.
pub fn xi_from_bivariate_chromatic(p: &BiPoly) -> Result<TriPoly> {
    let n = p.degree(0).unwrap_or(0);
    let shifted = p
        .substitute(1, &(BiPoly::var(0) - BiPoly::var(1)))
        .map_err(|_| Error::LaurentViolation)?;
    let mut out = TriPoly::zero();
    for (e, coef) in shifted.terms() {
        let (i, k) = (e[0], e[1]);
        let j = n - i - 2 * k;
        if j < 0 || i < 0 || k < 0 {
            return Err(Error::LaurentViolation);
        }
        let signed = if j % 2 == 0 { coef.clone() } else { -coef };
        out.add_term([i, j, k], signed);
    }
    if out.terms().any(|(_, v)| *v < BigInt::zero()) {
        return Err(Error::IdentityViolation("reconstructed coefficients must be non-negative".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyKind};
    use crate::specializations::bivariate_chromatic;

    fn hat(terms: &[(i32, i32, i32, i64)]) -> TriPoly {
        terms.iter().fold(TriPoly::zero(), |acc, &(i, j, k, v)| acc + mono(v, i, j, k))
    }

    #[test]
    fn xi_hat_examples() {
        assert_eq!(xi_hat(&Multigraph::empty(1)).unwrap(), x());
        let k2 = family(FamilyKind::Path, 2).unwrap();
        assert_eq!(xi_hat(&k2).unwrap(), hat(&[(1, 1, 0, 1), (0, 0, 1, 1)]));
        let p3 = family(FamilyKind::Path, 3).unwrap();
        assert_eq!(xi_hat(&p3).unwrap(), hat(&[(1, 2, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]));
        assert_eq!(xi_hat(&family(FamilyKind::Cycle, 3).unwrap()), Err(Error::NotAForest));
        assert_eq!(xi_hat(&Multigraph::new(1, [(0, 0)]).unwrap()), Err(Error::NotAForest));
    }

    #[test]
    fn conversions_hold_on_small_forests() {
        let mut engine = Engine::default();
        for f in [
            Multigraph::empty(3),
            family(FamilyKind::Path, 2).unwrap(),
            family(FamilyKind::Path, 3).unwrap(),
            family(FamilyKind::Star, 4).unwrap(),
            Multigraph::new(6, [(0, 1), (2, 3), (3, 4)]).unwrap(),
        ] {
            check_conversions(&f, &mut engine).unwrap();
        }
        let k2 = family(FamilyKind::Path, 2).unwrap();
        let with_xy = xi_hat(&k2).unwrap().substitute(1, &(x() + y())).unwrap();
        assert_eq!(with_xy, engine.eep(&k2));
    }

    #[test]
    fn degree_examples() {
        let mut engine = Engine::default();
        let p4 = family(FamilyKind::Path, 4).unwrap();
        assert_eq!(degree_sequence(&p4, &mut engine).unwrap(), BTreeMap::from([(1, 2), (2, 2)]));
        let s3 = family(FamilyKind::Star, 3).unwrap();
        assert_eq!(degree_sequence(&s3, &mut engine).unwrap(), BTreeMap::from([(1, 3), (3, 1)]));
        let e2 = Multigraph::empty(2);
        assert_eq!(degree_sequence(&e2, &mut engine).unwrap(), BTreeMap::from([(0, 2)]));
        let table = engine.coefficient_table(&s3);
        assert_eq!(degree_sequence_from_table(&table).unwrap(), BTreeMap::from([(1, 3), (3, 1)]));
    }

    #[test]
    fn reconstruction_examples() {
        let mut engine = Engine::default();
        assert_eq!(xi_from_bivariate_chromatic(&BiPoly::var(0)).unwrap(), x());
        for n in 1..=5 {
            let p = family(FamilyKind::Path, n).unwrap();
            let bcp = bivariate_chromatic(&engine.coefficient_table(&p));
            assert_eq!(xi_from_bivariate_chromatic(&bcp).unwrap(), engine.eep(&p), "P{n}");
        }
        // P = y has n = 0, so its z-term would need a negative y-exponent
        assert_eq!(xi_from_bivariate_chromatic(&BiPoly::var(1)), Err(Error::LaurentViolation));
    }
}
