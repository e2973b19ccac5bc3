//! Exact arithmetic: big rationals, Laurent polynomials in `a` and `b`, and
//! determinants of polynomial matrices.

mod matrix;
mod poly;

pub use matrix::PolyMatrix;
pub use num_rational::BigRational;
pub use poly::{Exponents, LaurentPoly};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `binom(m, r)` with `binom(m, r) = 0` whenever `r < 0` or `r > m`.
pub fn binomial(m: i64, r: i64) -> BigInt {
    if m < 0 || r < 0 || r > m {
        return BigInt::zero();
    }
    let r = r.min(m - r);
    let mut acc = BigInt::one();
    for t in 0..r {
        acc = acc * BigInt::from(m - t) / BigInt::from(t + 1);
    }
    acc
}

/// Parses `p/q` or a bare integer `p`. Decimals are rejected.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidArgument(format!("not a rational literal: {s:?} (use p/q)"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Renders a rational as `p/q`, or `p` when the denominator is 1.
pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(0, 1), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(10, 10), BigInt::one());
        assert_eq!(binomial(-1, 0), BigInt::zero());
    }

    #[test]
    fn binomial_matches_pascal() {
        for m in 1..20 {
            for r in 0..=m {
                assert_eq!(binomial(m, r), binomial(m - 1, r) + binomial(m - 1, r - 1));
            }
        }
    }

    #[test]
    fn rational_literals() {
        assert_eq!(
            parse_rational("1/2").unwrap(),
            BigRational::new(1.into(), 2.into())
        );
        assert_eq!(
            parse_rational("6/4").unwrap(),
            BigRational::new(3.into(), 2.into())
        );
        assert_eq!(parse_rational("1").unwrap(), BigRational::one());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(format_rational(&parse_rational("-4/6").unwrap()), "-2/3");
        assert_eq!(format_rational(&parse_rational("3").unwrap()), "3");
    }
}
