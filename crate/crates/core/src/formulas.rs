//! Closed-form counting formulas, evaluated exactly.
//!
//! Each function computes in big rationals (the exponent l-2 is negative for
//! one-part partitions) and asserts integrality at the end, so a wrong
//! formula or a wrong transcription fails loudly instead of rounding.

use num::bigint::BigInt;
use num::traits::One;

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::rat::{binomial, expect_integer, rat_pow, rint, Rat};
use crate::combinatorics::partition::Partition;
use crate::error::{Error, Result};

/// Fixed labelled intervals of a permutation of cycle type `lambda`:
/// (mn+1)^(l-2) prod C((m+1)li, li).
pub fn chi_formula(m: usize, lambda: &Partition) -> Result<BigInt> {
    let n = lambda.weight();
    let l = lambda.len() as i64;
    let mut value = rat_pow(&rint((m * n + 1) as i64), l - 2)?;
    for &part in lambda.parts() {
        value *= Rat::from_integer(binomial(((m + 1) * part) as i64, part as i64));
    }
    expect_integer(&value, "fixed-interval count")
}

/// Total labelled intervals: (mn+1)^(n-2) (m+1)^n.
pub fn dim_formula(m: usize, n: usize) -> Result<BigInt> {
    let value = rat_pow(&rint((m * n + 1) as i64), n as i64 - 2)?
        * rat_pow(&rint((m + 1) as i64), n as i64)?;
    expect_integer(&value, "labelled interval count")
}

/// Fixed labelled paths (no interval): (mn+1)^(l-1).
pub fn parking_chi(m: usize, lambda: &Partition) -> Result<BigInt> {
    let n = lambda.weight();
    let value = rat_pow(&rint((m * n + 1) as i64), lambda.len() as i64 - 1)?;
    expect_integer(&value, "fixed labelled-path count")
}

/// Paths of the given shape: C((m+1)n, n) / (mn+1).
pub fn ballot_count_formula(m: usize, n: usize) -> Result<BigInt> {
    let value = Rat::from_integer(binomial(((m + 1) * n) as i64, n as i64))
        / rint((m * n + 1) as i64);
    expect_integer(&value, "path count")
}

/// Fixed prime labelled intervals: ((m+1)n-1)^(l-2) prod C((m+1)li-1, li).
pub fn prime_chi_formula(m: usize, lambda: &Partition) -> Result<BigInt> {
    let n = lambda.weight();
    if n == 0 {
        return Err(Error::InvalidArgument(
            "prime intervals need positive size".into(),
        ));
    }
    let l = lambda.len() as i64;
    let mut value = rat_pow(&rint(((m + 1) * n) as i64 - 1), l - 2)?;
    for &part in lambda.parts() {
        value *= Rat::from_integer(binomial(((m + 1) * part) as i64 - 1, part as i64));
    }
    expect_integer(&value, "fixed prime-interval count")
}

/// Labelled prime intervals: ((m+1)n-1)^(n-2) m^n.
pub fn prime_labelled_formula(m: usize, n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "prime intervals need positive size".into(),
        ));
    }
    let value = rat_pow(&rint(((m + 1) * n) as i64 - 1), n as i64 - 2)?
        * rat_pow(&rint(m as i64), n as i64)?;
    expect_integer(&value, "labelled prime-interval count")
}

/// Unlabelled prime intervals: m / (n((m+1)n-1)) C((m+1)^2 n - m - 1, n-1).
pub fn prime_unlabelled_formula(m: usize, n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "prime intervals need positive size".into(),
        ));
    }
    let top = ((m + 1) * (m + 1) * n) as i64 - m as i64 - 1;
    let value = rint(m as i64) / rint((n * ((m + 1) * n - 1)) as i64)
        * Rat::from_integer(binomial(top, n as i64 - 1));
    expect_integer(&value, "unlabelled prime-interval count")
}

pub fn prime_formulas(m: usize, n: usize, lambda: &Partition) -> Result<(BigInt, BigInt, BigInt)> {
    Ok((
        prime_chi_formula(m, lambda)?,
        prime_labelled_formula(m, n)?,
        prime_unlabelled_formula(m, n)?,
    ))
}

/// Unlabelled intervals: (m+1) / (n(mn+1)) C((m+1)^2 n + m, n-1); one empty
/// interval at size zero.
pub fn unlabelled_count_formula(m: usize, n: usize) -> Result<BigInt> {
    if n == 0 {
        return Ok(BigInt::one());
    }
    let top = ((m + 1) * (m + 1) * n + m) as i64;
    let value = rint((m + 1) as i64) / rint((n * (m * n + 1)) as i64)
        * Rat::from_integer(binomial(top, n as i64 - 1));
    expect_integer(&value, "unlabelled interval count")
}

/// Complete homogeneous polynomial in the power sums: sum over partitions of
/// k of p_lambda / z_lambda.
pub fn h_poly(k: usize) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for lambda in Partition::all_of(k) {
        let mut term = MultiPoly::from_rat(Rat::one() / Rat::from_integer(lambda.z_lambda()));
        for &part in lambda.parts() {
            term = term.mul(&MultiPoly::p(part));
        }
        out = out.add(&term);
    }
    out
}

/// Same with y marking the number of parts: sum of y^l(lambda) p_lambda / z_lambda.
pub fn htilde_poly(k: usize) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for lambda in Partition::all_of(k) {
        let mut term = MultiPoly::from_rat(Rat::one() / Rat::from_integer(lambda.z_lambda()))
            .mul(&MultiPoly::y().pow(lambda.len()));
        for &part in lambda.parts() {
            term = term.mul(&MultiPoly::p(part));
        }
        out = out.add(&term);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rfrac;

    fn parts(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn chi_frozen() {
        assert_eq!(chi_formula(1, &parts(&[3])).unwrap(), BigInt::from(5));
        assert_eq!(chi_formula(1, &parts(&[2, 1])).unwrap(), BigInt::from(12));
        assert_eq!(
            chi_formula(1, &parts(&[1, 1, 1])).unwrap(),
            BigInt::from(32)
        );
        assert_eq!(chi_formula(2, &parts(&[2])).unwrap(), BigInt::from(3));
        assert_eq!(chi_formula(1, &parts(&[])).unwrap(), BigInt::one());
    }

    #[test]
    fn dims_frozen() {
        assert_eq!(dim_formula(1, 4).unwrap(), BigInt::from(400));
        assert_eq!(dim_formula(2, 3).unwrap(), BigInt::from(189));
        assert_eq!(dim_formula(1, 0).unwrap(), BigInt::one());
        assert_eq!(dim_formula(3, 1).unwrap(), BigInt::from(1));
    }

    #[test]
    fn chi_at_identity_type_is_dimension() {
        for m in 1..=3usize {
            for n in 0..=5usize {
                assert_eq!(
                    chi_formula(m, &parts(&vec![1; n])).unwrap(),
                    dim_formula(m, n).unwrap(),
                    "mismatch at m={m}, n={n}"
                );
            }
        }
    }

    #[test]
    fn parking_frozen() {
        // Identity on size 2, slope 1: all three labelled paths are fixed.
        assert_eq!(parking_chi(1, &parts(&[1, 1])).unwrap(), BigInt::from(3));
        assert_eq!(parking_chi(1, &parts(&[1, 1, 1])).unwrap(), BigInt::from(16));
        assert_eq!(parking_chi(2, &parts(&[2, 1])).unwrap(), BigInt::from(7));
        assert_eq!(parking_chi(2, &parts(&[1, 1, 1])).unwrap(), BigInt::from(49));
    }

    #[test]
    fn ballot_counts() {
        assert_eq!(ballot_count_formula(2, 3).unwrap(), BigInt::from(12));
        assert_eq!(ballot_count_formula(1, 4).unwrap(), BigInt::from(14));
        assert_eq!(ballot_count_formula(1, 0).unwrap(), BigInt::one());
    }

    #[test]
    fn prime_frozen() {
        assert_eq!(prime_labelled_formula(1, 2).unwrap(), BigInt::one());
        assert_eq!(prime_unlabelled_formula(1, 2).unwrap(), BigInt::one());
        assert_eq!(prime_unlabelled_formula(1, 3).unwrap(), BigInt::from(3));
        assert_eq!(prime_labelled_formula(2, 2).unwrap(), BigInt::from(4));
        assert!(prime_labelled_formula(2, 0).is_err());
    }

    #[test]
    fn unlabelled_frozen() {
        assert_eq!(unlabelled_count_formula(1, 2).unwrap(), BigInt::from(3));
        assert_eq!(unlabelled_count_formula(1, 3).unwrap(), BigInt::from(13));
        assert_eq!(unlabelled_count_formula(2, 3).unwrap(), BigInt::from(58));
        assert_eq!(unlabelled_count_formula(3, 0).unwrap(), BigInt::one());
    }

    #[test]
    fn everything_integral_on_the_grid() {
        for m in 1..=3usize {
            for n in 1..=5usize {
                dim_formula(m, n).unwrap();
                ballot_count_formula(m, n).unwrap();
                unlabelled_count_formula(m, n).unwrap();
                prime_labelled_formula(m, n).unwrap();
                prime_unlabelled_formula(m, n).unwrap();
                for lambda in Partition::all_of(n) {
                    chi_formula(m, &lambda).unwrap();
                    parking_chi(m, &lambda).unwrap();
                    prime_chi_formula(m, &lambda).unwrap();
                }
            }
        }
    }

    #[test]
    fn h_polynomials_frozen() {
        assert_eq!(h_poly(0), MultiPoly::one());
        assert_eq!(h_poly(1), MultiPoly::p(1));
        let h2 = MultiPoly::p(1)
            .pow(2)
            .mul_rat(&rfrac(1, 2))
            .add(&MultiPoly::p(2).mul_rat(&rfrac(1, 2)));
        assert_eq!(h_poly(2), h2);
        let ht2 = MultiPoly::p(1)
            .pow(2)
            .mul(&MultiPoly::y().pow(2))
            .mul_rat(&rfrac(1, 2))
            .add(&MultiPoly::p(2).mul(&MultiPoly::y()).mul_rat(&rfrac(1, 2)));
        assert_eq!(htilde_poly(2), ht2);
    }

    #[test]
    fn h_specializations() {
        for k in 0..=6usize {
            assert_eq!(h_poly(k).specialize_p_ones(), MultiPoly::one());
            assert_eq!(htilde_poly(k).subst_y_one(), h_poly(k));
        }
    }
}
