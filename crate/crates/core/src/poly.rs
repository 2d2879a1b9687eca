//! Exact sparse polynomials in a fixed number of variables.
//!
//! [`SparsePoly<N>`] stores a map from exponent vectors to nonzero big-integer
//! coefficients. Terms are kept in lexicographic exponent order, which is also
//! the order used by the JSON form, so equal polynomials always serialize to
//! identical bytes. Negative exponents are only accepted in Laurent mode.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const DEFAULT_VARS: [&str; 4] = ["x", "y", "z", "w"];

/// Sparse polynomial in `N` variables with exact integer coefficients.
#[derive(Clone, Debug, Default)]
pub struct SparsePoly<const N: usize> {
    terms: BTreeMap<[i32; N], BigInt>,
    laurent: bool,
}

/// Trivariate polynomial in `(x, y, z)`.
pub type TriPoly = SparsePoly<3>;
/// Bivariate polynomial in `(x, y)`.
pub type BiPoly = SparsePoly<2>;
/// Univariate polynomial in `x`.
pub type UniPoly = SparsePoly<1>;

impl<const N: usize> PartialEq for SparsePoly<N> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<const N: usize> Eq for SparsePoly<N> {}

impl<const N: usize> std::hash::Hash for SparsePoly<N> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<const N: usize> SparsePoly<N> {
    pub fn zero() -> Self {
        SparsePoly {
            terms: BTreeMap::new(),
            laurent: false,
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term([0; N], c.into());
        p
    }

    /// The variable with index `var` (0 = x, 1 = y, ...).
    pub fn var(var: usize) -> Self {
        assert!(var < N, "variable index {var} out of range");
        let mut e = [0; N];
        e[var] = 1;
        Self::monomial(e, 1)
    }

    /// `c · x^e[0] · y^e[1] · ...`; negative exponents switch on Laurent mode.
    pub fn monomial(exps: [i32; N], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.laurent = exps.iter().any(|&e| e < 0);
        p.add_term(exps, c.into());
        p
    }

    pub fn from_terms<I>(terms: I, laurent: bool) -> Result<Self>
    where
        I: IntoIterator<Item = ([i32; N], BigInt)>,
    {
        let mut p = Self::zero();
        p.laurent = laurent;
        for (e, c) in terms {
            if !laurent && e.iter().any(|&x| x < 0) {
                return Err(Error::LaurentViolation);
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[i32; N], &BigInt)> {
        self.terms.iter()
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|e| e.iter().any(|&x| x < 0))
    }

    pub fn into_laurent(mut self) -> Self {
        self.laurent = true;
        self
    }

    /// Leaves Laurent mode; fails if a negative exponent survived.
    pub fn into_polynomial(mut self) -> Result<Self> {
        if self.has_negative_exponents() {
            return Err(Error::LaurentViolation);
        }
        self.laurent = false;
        Ok(self)
    }

    pub fn coeff(&self, exps: &[i32; N]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Degree in `var`; `None` stands for the degree of the zero polynomial (−∞).
    pub fn degree(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn min_degree(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e[var]).min()
    }

    pub fn add_term(&mut self, exps: [i32; N], c: BigInt) {
        if c.is_zero() {
            return;
        }
        debug_assert!(self.laurent || exps.iter().all(|&e| e >= 0));
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
            laurent: self.laurent,
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        acc.laurent = self.laurent;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Terms whose exponent in `var` equals `e`, with that exponent reset to 0.
    pub fn slice(&self, var: usize, e: i32) -> Self {
        let mut out = Self::zero();
        out.laurent = self.laurent;
        for (exps, c) in &self.terms {
            if exps[var] == e {
                let mut k = *exps;
                k[var] = 0;
                out.add_term(k, c.clone());
            }
        }
        out
    }

    /// Formal composition `var := expr`.
    ///
    /// Negative powers of `var` are only allowed when `expr` is a single
    /// monomial, and a non-Laurent input must produce a non-Laurent result.
    pub fn substitute(&self, var: usize, expr: &Self) -> Result<Self> {
        let mut grouped: BTreeMap<i32, Self> = BTreeMap::new();
        for (exps, c) in &self.terms {
            let mut rest = *exps;
            let e = rest[var];
            rest[var] = 0;
            let slot = grouped.entry(e).or_insert_with(|| {
                let mut z = Self::zero();
                z.laurent = self.laurent;
                z
            });
            slot.add_term(rest, c.clone());
        }
        let inverse = if grouped.keys().any(|&e| e < 0) {
            Some(expr.monomial_inverse().ok_or(Error::LaurentViolation)?)
        } else {
            None
        };
        let mut out = Self::zero();
        out.laurent = self.laurent || expr.laurent || inverse.is_some();
        let mut powers = Powers::new(expr.clone());
        let mut inv_powers = inverse.map(Powers::new);
        for (e, coeff) in grouped {
            let factor = if e >= 0 {
                powers.get(e as u32).clone()
            } else {
                inv_powers.as_mut().unwrap().get((-e) as u32).clone()
            };
            out += &(&coeff * &factor);
        }
        let negative = out.has_negative_exponents();
        if !self.laurent && negative {
            return Err(Error::LaurentViolation);
        }
        out.laurent = self.laurent || negative;
        Ok(out)
    }

    fn monomial_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if !c.abs().is_one() {
            return None;
        }
        let mut neg = *e;
        for x in neg.iter_mut() {
            *x = -*x;
        }
        Some(Self::monomial(neg, c.clone()).into_laurent())
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, at: &[BigRational; N]) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (exps, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (v, &e) in at.iter().zip(exps.iter()) {
                if e >= 0 {
                    term *= num_traits::pow(v.clone(), e as usize);
                } else {
                    if v.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    term /= num_traits::pow(v.clone(), (-e) as usize);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Evaluation at integer points, for polynomials without negative exponents.
    pub fn evaluate_int(&self, at: &[BigInt; N]) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in at.iter().zip(exps.iter()) {
                if e < 0 {
                    return Err(Error::LaurentViolation);
                }
                term *= num_traits::pow(v.clone(), e as usize);
            }
            total += term;
        }
        Ok(total)
    }

    pub fn to_json_with(&self, vars: &[&str; N]) -> String {
        let doc = PolyJson {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    e: e.to_vec(),
                    c: c.to_str_radix(10),
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("polynomial serialization cannot fail")
    }

    /// Canonical JSON form with the default variable names.
    pub fn to_json(&self) -> String {
        self.to_json_with(&default_vars())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PolyJson =
            serde_json::from_str(text).map_err(|e| Error::MalformedPolynomial(e.to_string()))?;
        if doc.vars.len() != N {
            return Err(Error::MalformedPolynomial(format!(
                "expected {N} variables, found {}",
                doc.vars.len()
            )));
        }
        let mut p = Self::zero();
        let mut prev: Option<[i32; N]> = None;
        for t in doc.terms {
            let e: [i32; N] = t
                .e
                .as_slice()
                .try_into()
                .map_err(|_| Error::MalformedPolynomial("exponent arity mismatch".into()))?;
            if prev.is_some_and(|p| p >= e) {
                return Err(Error::MalformedPolynomial(
                    "terms not strictly increasing".into(),
                ));
            }
            prev = Some(e);
            let c: BigInt = t
                .c
                .parse()
                .map_err(|_| Error::MalformedPolynomial(format!("bad coefficient {:?}", t.c)))?;
            if c.is_zero() {
                return Err(Error::MalformedPolynomial("zero coefficient stored".into()));
            }
            if e.iter().any(|&x| x < 0) {
                p.laurent = true;
            }
            p.terms.insert(e, c);
        }
        Ok(p)
    }

    /// Human-readable form, highest terms first.
    pub fn format_with(&self, vars: &[&str; N]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (exps, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            for (name, &e) in vars.iter().zip(exps.iter()) {
                match e {
                    0 => {}
                    1 => factors.push((*name).to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

fn default_vars<const N: usize>() -> [&'static str; N] {
    std::array::from_fn(|i| DEFAULT_VARS.get(i).copied().unwrap_or("v"))
}

impl<const N: usize> fmt::Display for SparsePoly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&default_vars()))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    e: Vec<i32>,
    c: String,
}

/// Memoized powers of a fixed base polynomial.
pub struct Powers<const N: usize> {
    cache: Vec<SparsePoly<N>>,
}

impl<const N: usize> Powers<N> {
    pub fn new(base: SparsePoly<N>) -> Self {
        let mut one = SparsePoly::one();
        one.laurent = base.laurent;
        Powers {
            cache: vec![one, base],
        }
    }

    pub fn get(&mut self, k: u32) -> &SparsePoly<N> {
        let k = k as usize;
        while self.cache.len() <= k {
            let next = &self.cache[self.cache.len() - 1] * &self.cache[1];
            self.cache.push(next);
        }
        &self.cache[k]
    }
}

/// `p · base^k`, expanding the power by repeated squaring.
pub fn binomial_shift<const N: usize>(p: &SparsePoly<N>, k: u32, base: &SparsePoly<N>) -> SparsePoly<N> {
    p * &base.pow(k)
}

/// `Σ c · X^i · Y^j · base^k` over a table of `((i, j, k), c)` entries.
pub fn transform_counts<'a, I>(entries: I, x: &TriPoly, y: &TriPoly, base: &TriPoly) -> TriPoly
where
    I: IntoIterator<Item = ([u32; 3], &'a BigInt)>,
{
    let mut px = Powers::new(x.clone());
    let mut py = Powers::new(y.clone());
    let mut pb = Powers::new(base.clone());
    let mut out = TriPoly::zero();
    for ([i, j, k], c) in entries {
        let term = &(px.get(i).clone() * py.get(j)) * pb.get(k);
        out += &term.scale(c);
    }
    out
}

impl<const N: usize> AddAssign<&SparsePoly<N>> for SparsePoly<N> {
    fn add_assign(&mut self, rhs: &SparsePoly<N>) {
        self.laurent |= rhs.laurent;
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<const N: usize> SubAssign<&SparsePoly<N>> for SparsePoly<N> {
    fn sub_assign(&mut self, rhs: &SparsePoly<N>) {
        self.laurent |= rhs.laurent;
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl<const N: usize> Add<&SparsePoly<N>> for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn add(self, rhs: &SparsePoly<N>) -> SparsePoly<N> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<const N: usize> Sub<&SparsePoly<N>> for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn sub(self, rhs: &SparsePoly<N>) -> SparsePoly<N> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<const N: usize> Mul<&SparsePoly<N>> for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn mul(self, rhs: &SparsePoly<N>) -> SparsePoly<N> {
        let mut out = SparsePoly::zero();
        out.laurent = self.laurent || rhs.laurent;
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = [0; N];
                for i in 0..N {
                    e[i] = ea[i] + eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl<const N: usize> Mul<&SparsePoly<N>> for &BigInt {
    type Output = SparsePoly<N>;
    fn mul(self, rhs: &SparsePoly<N>) -> SparsePoly<N> {
        rhs.scale(self)
    }
}

impl<const N: usize> Neg for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn neg(self) -> SparsePoly<N> {
        SparsePoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            laurent: self.laurent,
        }
    }
}

impl<const N: usize> Neg for SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn neg(self) -> SparsePoly<N> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<const N: usize> $tr<SparsePoly<N>> for SparsePoly<N> {
            type Output = SparsePoly<N>;
            fn $method(self, rhs: SparsePoly<N>) -> SparsePoly<N> {
                (&self).$method(&rhs)
            }
        }
        impl<const N: usize> $tr<&SparsePoly<N>> for SparsePoly<N> {
            type Output = SparsePoly<N>;
            fn $method(self, rhs: &SparsePoly<N>) -> SparsePoly<N> {
                (&self).$method(rhs)
            }
        }
        impl<const N: usize> $tr<SparsePoly<N>> for &SparsePoly<N> {
            type Output = SparsePoly<N>;
            fn $method(self, rhs: SparsePoly<N>) -> SparsePoly<N> {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Shorthands for building trivariate polynomials in tests and formulas.
pub mod tri {
    use super::TriPoly;

    pub fn x() -> TriPoly {
        TriPoly::var(0)
    }
    pub fn y() -> TriPoly {
        TriPoly::var(1)
    }
    pub fn z() -> TriPoly {
        TriPoly::var(2)
    }
    pub fn c(v: i64) -> TriPoly {
        TriPoly::constant(v)
    }
    /// `c · x^i y^j z^k`
    pub fn mono(c: i64, i: i32, j: i32, k: i32) -> TriPoly {
        TriPoly::monomial([i, j, k], c)
    }
}
