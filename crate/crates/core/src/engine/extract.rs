//! Coefficient extraction in the original time variable.
//!
//! The closed form lives in the auxiliary variable z with t = z e^{-mL(z)}, so t-coefficients
//! come out through exact Lagrange inversion with phi = e^{mL}.  A second, independent route
//! collapses the inversion into a single coefficient: [t^n] of the series at x = y = 1 equals
//! (mn+1)^{-2} [z^n] e^{(mn+1)L}.  Both are computed here and compared in the tests against
//! the per-class counting formula and against brute-force enumeration.

use crate::algebra::lagrange::lagrange_invert;
use crate::algebra::multipoly::MultiPoly;
use crate::algebra::rat::Rat;
use crate::engine::base::Ctx;
use crate::engine::closed::g1_at_u_zero;
use crate::error::Result;
use num::BigInt;

/// [t^n] of the interval series at x = y = 1, as a polynomial in the weights p.
pub fn character_series(m: usize, n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let ctx = Ctx::new(m, n);
    let h = g1_at_u_zero(m, n)?;
    lagrange_invert(&h, &ctx.exp_ml()?, n)
}

/// Same coefficient through the collapsed form (mn+1)^{-2} [z^n] e^{(mn+1)L}.
pub fn character_series_direct(m: usize, n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let ctx = Ctx::new(m, n);
    let scaled = ctx
        .l_series()
        .mul_rat(&Rat::from_integer(BigInt::from((m * n + 1) as i64)))
        .exp()?;
    let denom = BigInt::from(((m * n + 1) * (m * n + 1)) as i64);
    Ok(scaled.coeff(n).mul_rat(&Rat::new(BigInt::from(1), denom)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::brute_frobenius;
    use crate::algebra::rat::{factorial, rint};
    use crate::combinatorics::partition::Partition;
    use crate::formulas::{chi_formula, dim_formula};
    use crate::lattice::TamariLattice;

    fn from_counting_formula(m: usize, n: usize) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for lambda in Partition::all_of(n) {
            let chi = chi_formula(m, &lambda).unwrap();
            let mut term = MultiPoly::from_rat(Rat::new(chi, lambda.z_lambda()));
            for &part in lambda.parts() {
                term = term.mul(&MultiPoly::p(part));
            }
            acc = acc.add(&term);
        }
        acc
    }

    #[test]
    fn both_routes_agree() {
        for m in 1..=3usize {
            for n in 1..=4usize {
                assert_eq!(
                    character_series(m, n).unwrap(),
                    character_series_direct(m, n).unwrap(),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn extraction_matches_counting_formula() {
        for m in 1..=3usize {
            for n in 1..=4usize {
                assert_eq!(
                    character_series(m, n).unwrap(),
                    from_counting_formula(m, n),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn extraction_matches_brute_force() {
        for (m, n_max) in [(1usize, 3usize), (2, 2)] {
            for n in 1..=n_max {
                let lat = TamariLattice::build(m, n, None).unwrap();
                let brute = brute_frobenius(&lat).unwrap().subst_x_one().subst_y_one();
                let scaled = character_series(m, n)
                    .unwrap()
                    .mul_rat(&Rat::from_integer(factorial(n)));
                assert_eq!(brute, scaled, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn smallest_values_frozen() {
        for m in 1..=4usize {
            assert_eq!(character_series(m, 1).unwrap(), MultiPoly::p(1));
        }
        let m1 = MultiPoly::p(1)
            .pow(2)
            .mul_rat(&rint(2))
            .add(&MultiPoly::p(2));
        assert_eq!(character_series(1, 2).unwrap(), m1);
        let m2 = MultiPoly::p(1)
            .pow(2)
            .mul_rat(&crate::algebra::rat::rfrac(9, 2))
            .add(&MultiPoly::p(2).mul_rat(&crate::algebra::rat::rfrac(3, 2)));
        assert_eq!(character_series(2, 2).unwrap(), m2);
    }

    #[test]
    fn all_weights_one_counts_unlabelled_intervals() {
        // sum over classes of chi/z_lambda is the invariant dimension, i.e. the orbit count
        for m in 1..=3usize {
            for n in 1..=4usize {
                let total = character_series(m, n).unwrap().specialize_p_ones();
                let expect = MultiPoly::from_rat(Rat::from_integer(
                    crate::formulas::unlabelled_count_formula(m, n).unwrap(),
                ));
                assert_eq!(total, expect, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn single_cycle_weight_gives_total_count() {
        for m in 1..=3usize {
            for n in 1..=4usize {
                let total = character_series(m, n)
                    .unwrap()
                    .specialize_p_parking()
                    .mul_rat(&Rat::from_integer(factorial(n)));
                let expect = MultiPoly::from_rat(Rat::from_integer(dim_formula(m, n).unwrap()));
                assert_eq!(total, expect, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn total_count_matches_enumerated_labellings() {
        for (m, n) in [(1usize, 3usize), (2, 2)] {
            let lat = TamariLattice::build(m, n, None).unwrap();
            let mut total = BigInt::from(0);
            for (_, j) in lat.intervals() {
                total += crate::combinatorics::labelling::labelling_count(lat.path(j));
            }
            let expect = dim_formula(m, n).unwrap();
            assert_eq!(total, expect, "m={m} n={n}");
        }
    }
}
