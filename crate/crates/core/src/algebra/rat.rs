//! Arbitrary-precision rational scalars and exact integer helpers.
//!
//! `Rat` is kept in canonical form (reduced, positive denominator) by the
//! underlying implementation; every other module builds on it.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// The rational `n`.
pub fn rint(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// The rational `n/d`; panics on `d = 0`.
pub fn rfrac(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient `C(n, k)` for `n >= 0`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    assert!(n >= 0, "binomial expects a nonnegative upper index");
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact integer power `b^e` for `e >= 0`.
pub fn int_pow(b: &BigInt, e: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

/// Exact rational power with possibly negative exponent; errors on `0^e, e < 0`.
pub fn rat_pow(b: &Rat, e: i64) -> Result<Rat> {
    if e >= 0 {
        let mut acc = Rat::one();
        for _ in 0..e {
            acc *= b;
        }
        Ok(acc)
    } else {
        if b.is_zero() {
            return Err(Error::InvalidArgument("negative power of zero".into()));
        }
        let mut acc = Rat::one();
        for _ in 0..(-e) {
            acc /= b;
        }
        Ok(acc)
    }
}

/// Converts a rational asserted to be an integer, erring otherwise.
pub fn expect_integer(r: &Rat, what: &str) -> Result<BigInt> {
    if r.denom().is_one() {
        Ok(r.numer().clone())
    } else {
        Err(Error::NotAnInteger(format!("{what} evaluated to {r}")))
    }
}

/// Renders a rational as `a` or `a/b` (canonical sign on the numerator).
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when the rational is a negative number (for display purposes).
pub fn rat_is_negative(r: &Rat) -> bool {
    r.is_negative()
}
