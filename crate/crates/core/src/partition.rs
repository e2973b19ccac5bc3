//! The normalization `Z_n`, by Derrida's closed form and by brute-force
//! enumeration of every tableau of size `n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::algebra::{binomial, LaurentPoly};
use crate::error::{Error, Result};
use crate::tableau::{sum_weights, StateWord};

/// Default limit for [`z_n_enumeration`].
pub const Z_ENUMERATION_MAX_N: usize = 10;

/// `Z_n = (ab)^n sum_{p=1}^{n} p/(2n-p) binom(2n-p, n) sum_{i=0}^{p} a^-i b^-(p-i)`.
///
/// The inner sum is the geometric quotient `(a^-(p+1) - b^-(p+1)) / (a^-1 - b^-1)`
/// written out, so no division is needed and `a = b` is not special.
pub fn z_n_derrida(n: usize) -> Result<LaurentPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("Z_n needs n >= 1".into()));
    }
    let n_i = n as i64;
    let mut total = LaurentPoly::zero();
    for p in 1..=n_i {
        let (prefactor, rem) =
            (BigInt::from(p) * binomial(2 * n_i - p, n_i)).div_rem(&BigInt::from(2 * n_i - p));
        if !rem.is_zero() {
            return Err(Error::Internal(format!(
                "prefactor for n = {n}, p = {p} is not an integer"
            )));
        }
        let geometric = LaurentPoly::from_terms((0..=p).map(|i| (-i, -(p - i), 1)));
        total += &LaurentPoly::constant(prefactor) * &geometric;
    }
    Ok(total.shift(n_i, n_i))
}

/// `Z_n` as the sum of `P(tau)` over all `2^n` words.
pub fn z_n_enumeration(n: usize) -> Result<LaurentPoly> {
    z_n_enumeration_limited(n, Z_ENUMERATION_MAX_N)
}

pub fn z_n_enumeration_limited(n: usize, limit: usize) -> Result<LaurentPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("Z_n needs n >= 1".into()));
    }
    if n > limit {
        return Err(Error::TooLarge {
            what: "n",
            value: n,
            limit,
        });
    }
    Ok(StateWord::all(n).map(|tau| sum_weights(&tau)).sum())
}

/// `C_m = binom(2m, m) / (m + 1)`.
pub fn catalan_number(m: usize) -> BigInt {
    binomial(2 * m as i64, m as i64) / BigInt::from(m + 1)
}
