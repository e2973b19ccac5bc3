//! Sparse Laurent polynomials in the two rate variables `a` (alpha) and `b` (beta).
//!
//! Terms live in a `BTreeMap` keyed by `(a_exp, b_exp)`, so storage order is
//! lexicographic and two equal polynomials always have identical maps. Zero
//! coefficients are never stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Exponent pair `(a_exp, b_exp)` of a monomial `a^i * b^j`.
pub type Exponents = (i64, i64);

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `coeff * a^a_exp * b^b_exp`.
    pub fn monomial(coeff: impl Into<BigInt>, a_exp: i64, b_exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term((a_exp, b_exp), coeff.into());
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn alpha() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn beta() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `(a_exp, b_exp, coeff)` triples; repeated
    /// exponents are merged.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term((i, j), c.into());
        }
        p
    }

    fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// Number of stored (non-zero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical storage order (lexicographic on exponents).
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, a_exp: i64, b_exp: i64) -> BigInt {
        self.terms
            .get(&(a_exp, b_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Multiplies every exponent pair by `a^da * b^db`.
    pub fn shift(&self, da: i64, db: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + da, j + db), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Smallest exponent of `a` and of `b` over all terms, `None` for zero.
    pub fn min_exponents(&self) -> Option<Exponents> {
        let a = self.terms.keys().map(|e| e.0).min()?;
        let b = self.terms.keys().map(|e| e.1).min()?;
        Some((a, b))
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.min_exponents().is_some_and(|(a, b)| a < 0 || b < 0)
    }

    /// Range of total degrees `i + j` over all terms, `None` for zero.
    pub fn total_degree_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|e| e.0 + e.1).min()?;
        let hi = self.terms.keys().map(|e| e.0 + e.1).max()?;
        Some((lo, hi))
    }

    /// Exact evaluation at `a = alpha`, `b = beta`.
    pub fn eval(&self, alpha: &BigRational, beta: &BigRational) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            let x = power(alpha, i, 'a')?;
            let y = power(beta, j, 'b')?;
            total += BigRational::from_integer(c.clone()) * x * y;
        }
        Ok(total)
    }

    /// JSON form: list of `[a_exp, b_exp, "coefficient"]` in storage order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(&(i, j), c)| json!([i, j, c.to_string()]))
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("not a polynomial JSON value: {value}"));
        let items = value.as_array().ok_or_else(bad)?;
        let mut p = Self::zero();
        for item in items {
            let triple = item.as_array().filter(|t| t.len() == 3).ok_or_else(bad)?;
            let i = triple[0].as_i64().ok_or_else(bad)?;
            let j = triple[1].as_i64().ok_or_else(bad)?;
            let c: BigInt = triple[2]
                .as_str()
                .ok_or_else(bad)?
                .parse()
                .map_err(|_| bad())?;
            p.add_term((i, j), c);
        }
        Ok(p)
    }

    /// Terms in display order: ascending total degree, then descending `a` exponent.
    fn display_order(&self) -> Vec<(Exponents, &BigInt)> {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|(x, _), (y, _)| display_cmp(*x, *y));
        terms
    }
}

fn display_cmp(x: Exponents, y: Exponents) -> Ordering {
    (x.0 + x.1).cmp(&(y.0 + y.1)).then(y.0.cmp(&x.0))
}

fn power(base: &BigRational, exp: i64, variable: char) -> Result<BigRational> {
    if exp == 0 {
        return Ok(BigRational::one());
    }
    if base.is_zero() {
        if exp < 0 {
            return Err(Error::Domain {
                variable,
                exponent: exp,
            });
        }
        return Ok(BigRational::zero());
    }
    let e = i32::try_from(exp).map_err(|_| Error::Internal(format!("exponent {exp} too large")))?;
    Ok(base.pow(e))
}

fn write_var(f: &mut fmt::Formatter<'_>, name: char, exp: i64) -> fmt::Result {
    if exp == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{exp}")
    }
}

impl fmt::Display for LaurentPoly {
    /// Text form, e.g. `a^2*b + a*b^2` or `b^-1 + a^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, ((i, j), c)) in self.display_order().into_iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mut factors = 0;
            if !mag.is_one() || (i == 0 && j == 0) {
                write!(f, "{mag}")?;
                factors += 1;
            }
            for (name, exp) in [('a', i), ('b', j)] {
                if exp != 0 {
                    if factors > 0 {
                        write!(f, "*")?;
                    }
                    write_var(f, name, exp)?;
                    factors += 1;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn a() -> LaurentPoly {
        LaurentPoly::alpha()
    }

    fn b() -> LaurentPoly {
        LaurentPoly::beta()
    }

    #[test]
    fn add_identity_and_merge() {
        let p = &a() + &b();
        assert_eq!(&p + &LaurentPoly::zero(), p);

        let x = LaurentPoly::from_terms([(2, 1, 1), (1, 2, 1)]);
        let y = LaurentPoly::monomial(1, 1, 2);
        assert_eq!(&x + &y, LaurentPoly::from_terms([(2, 1, 1), (1, 2, 2)]));
        assert!((&x + &-&x).is_zero());
        assert_eq!((&x - &x).len(), 0);
    }

    #[test]
    fn mul_cancels_exponents() {
        let ab = LaurentPoly::monomial(1, 1, 1);
        let inv = LaurentPoly::monomial(1, -1, -1);
        assert_eq!(&ab.pow(2) * &inv, ab);

        let s = LaurentPoly::from_terms([(-1, 0, 1), (0, -1, 1)]);
        assert_eq!(&s * &ab, &a() + &b());
    }

    #[test]
    fn mul_matches_tableau_path_weight() {
        let wt = &ab16() * &LaurentPoly::monomial(1, -4, -3);
        assert_eq!(wt, LaurentPoly::monomial(1, 12, 13));
    }

    fn ab16() -> LaurentPoly {
        LaurentPoly::monomial(1, 1, 1).pow(16)
    }

    #[test]
    fn eval_exact() {
        let p = &a() + &b();
        assert_eq!(p.eval(&r(1, 1), &r(1, 1)).unwrap(), r(2, 1));
        let q = LaurentPoly::from_terms([(2, 1, 1), (1, 2, 1)]);
        assert_eq!(q.eval(&r(1, 2), &r(1, 3)).unwrap(), r(5, 36));
    }

    #[test]
    fn eval_rejects_zero_into_negative_exponent() {
        let p = LaurentPoly::monomial(1, -1, 0);
        assert_eq!(
            p.eval(&r(0, 1), &r(1, 1)),
            Err(Error::Domain {
                variable: 'a',
                exponent: -1
            })
        );
        // zero is fine for non-negative exponents
        assert_eq!(b().eval(&r(0, 1), &r(3, 1)).unwrap(), r(3, 1));
    }

    #[test]
    fn text_form() {
        assert_eq!(
            LaurentPoly::from_terms([(2, 1, 1), (1, 2, 1)]).to_string(),
            "a^2*b + a*b^2"
        );
        assert_eq!(
            LaurentPoly::from_terms([(2, 0, 1), (1, 1, 1), (0, 2, 1), (2, 1, 1), (1, 2, 1)])
                .to_string(),
            "a^2 + a*b + b^2 + a^2*b + a*b^2"
        );
        assert_eq!(
            LaurentPoly::from_terms([(-1, 0, 1), (0, -1, 1)]).to_string(),
            "b^-1 + a^-1"
        );
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::one().to_string(), "1");
        assert_eq!(
            LaurentPoly::from_terms([(0, 0, -1), (1, 0, 3), (0, 1, -1)]).to_string(),
            "-1 + 3*a - b"
        );
        assert_eq!(LaurentPoly::monomial(-2, 0, -2).to_string(), "-2*b^-2");
    }

    #[test]
    fn json_form() {
        let p = LaurentPoly::from_terms([(2, 1, 1), (1, 2, -12)]);
        assert_eq!(p.to_json(), json!([[1, 2, "-12"], [2, 1, "1"]]));
        assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p);
        assert!(LaurentPoly::from_json(&json!([[1, 2]])).is_err());
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let p = LaurentPoly::constant(i64::MAX).pow(4);
        let expected = BigInt::from(i64::MAX).pow(4);
        assert_eq!(p.coefficient(0, 0), expected);
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-3i64..=3, -3i64..=3, -5i64..=5), 0..6)
            .prop_map(LaurentPoly::from_terms)
    }

    fn nonzero_rational() -> impl Strategy<Value = BigRational> {
        (1i64..=7, 1i64..=7, any::<bool>()).prop_map(|(n, d, neg)| r(if neg { -n } else { n }, d))
    }

    proptest! {
        #[test]
        fn ring_axioms(p in small_poly(), q in small_poly(), s in small_poly()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p + &q) + &s, &p + &(&q + &s));
            prop_assert_eq!(&(&p * &q) * &s, &p * &(&q * &s));
            prop_assert_eq!(&p * &(&q + &s), &(&p * &q) + &(&p * &s));
            prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn eval_is_a_ring_homomorphism(
            p in small_poly(),
            q in small_poly(),
            x in nonzero_rational(),
            y in nonzero_rational(),
        ) {
            let ep = p.eval(&x, &y).unwrap();
            let eq = q.eval(&x, &y).unwrap();
            prop_assert_eq!((&p * &q).eval(&x, &y).unwrap(), &ep * &eq);
            prop_assert_eq!((&p + &q).eval(&x, &y).unwrap(), ep + eq);
        }
    }
}
