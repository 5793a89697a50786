//! Specialization of every weight to 1: unlabelled interval counting.
//!
//! With p_k = 1 for all k the auxiliary series collapse onto the Fuss-Catalan tree series
//! M = 1 + z M^{m+1}: e^L = M^{m+1} and e^{K(u)} (1 - u(M-1)) = 1.  The t-coefficients of
//! the closed form then count intervals of the lattice with no labelling weight, and the
//! whole closed form can be rewritten, through the substitution z = z'(1-z')^m and
//! u = u'(1-z')/(1+u'z'), as an explicit rational function of (z', u') — the same shape that
//! appears in the purely unlabelled literature.  All of that is checked here exactly.

use num::BigInt;

use crate::algebra::lagrange::lagrange_invert;
use crate::algebra::multipoly::MultiPoly;
use crate::algebra::rat::{binomial, expect_integer, rint, Rat};
use crate::algebra::series::{SVar, Series};
use crate::combinatorics::path::BallotPath;
use crate::engine::base::Ctx;
use crate::engine::closed::{closed_form_g1, g1_at_u_zero};
use crate::error::{Error, Result};

/// The tree series M = 1 + z M^{m+1}, with rational (constant) coefficients.
pub fn fuss_catalan(m: usize, order: usize) -> Series {
    let mut cur = Series::one(SVar::Z, order);
    for _ in 0..=order {
        cur = cur.pow(m + 1).mul_var_pow(1).add(&Series::one(SVar::Z, order));
    }
    cur
}

/// e^L = M^{m+1} and e^{K(u)} (1 - u(M-1)) = 1 under the all-ones specialization.
pub fn specialization_checks(m: usize, order: usize) -> Result<()> {
    let ctx = Ctx::new(m, order);
    let mm = fuss_catalan(m, order);
    let exp_l = ctx.l_series().map(|c| c.specialize_p_ones()).exp()?;
    if !exp_l.sub(&mm.pow(m + 1)).is_zero() {
        return Err(Error::InternalCheck(
            "tree-series identity failed for e^L".into(),
        ));
    }
    let exp_k = ctx.k_series().map(|c| c.specialize_p_ones()).exp()?;
    let factor = Series::one(SVar::Z, order).sub(
        &mm.sub(&Series::one(SVar::Z, order))
            .mul_poly(&MultiPoly::u_pow(1)),
    );
    if !exp_k.mul(&factor).sub(&Series::one(SVar::Z, order)).is_zero() {
        return Err(Error::InternalCheck(
            "tree-series identity failed for e^K".into(),
        ));
    }
    Ok(())
}

/// The cycle-lemma identity tying the specialized series to lattice paths:
/// with all weights 1,
///
/// ```text
///   z dL/dz = B = sum_{k>=1} C((m+1)k, k) z^k   and   B M = (m+1) z dM/dz,
/// ```
///
/// where B counts bridges (paths ending on the boundary line) by north steps.
/// The prime decomposition M = 1 + P M is checked with the coefficients of
/// P = 1 - 1/M pinned to enumerated counts of paths with exactly two
/// contacts.
pub fn bridge_identity_check(m: usize, order: usize) -> Result<()> {
    let ctx = Ctx::new(m, order);
    let z_dz = |s: &Series| -> Series {
        let coeffs = (0..=s.order())
            .map(|n| s.coeff(n).mul_rat(&rint(n as i64)))
            .collect();
        Series::from_coeffs(s.var, coeffs)
    };
    let bridges = Series::from_coeffs(
        SVar::Z,
        (0..=order)
            .map(|k| {
                if k == 0 {
                    return MultiPoly::zero();
                }
                MultiPoly::from_rat(Rat::from_integer(binomial(
                    ((m + 1) * k) as i64,
                    k as i64,
                )))
            })
            .collect(),
    );
    let l_prime = z_dz(&ctx.l_series().map(|c| c.specialize_p_ones()));
    if !l_prime.sub(&bridges).is_zero() {
        return Err(Error::InternalCheck(
            "bridge counts differ from the derivative of L".into(),
        ));
    }
    let mm = fuss_catalan(m, order);
    let lhs = bridges.mul(&mm);
    let rhs = z_dz(&mm).mul_rat(&rint(m as i64 + 1));
    if !lhs.sub(&rhs).is_zero() {
        return Err(Error::InternalCheck(
            "bridge series is not the logarithmic derivative of the tree series".into(),
        ));
    }
    // M = 1 + P M with P counting prime paths (exactly two contacts)
    let prime = Series::from_coeffs(
        SVar::Z,
        (0..=order)
            .map(|n| {
                if n == 0 {
                    return MultiPoly::zero();
                }
                let count = BallotPath::enumerate(m, n)
                    .iter()
                    .filter(|p| p.contacts() == 2)
                    .count();
                MultiPoly::from_int(count as i64)
            })
            .collect(),
    );
    let one = Series::one(SVar::Z, order);
    if !mm.sub(&one).sub(&prime.mul(&mm)).is_zero() {
        return Err(Error::InternalCheck(
            "prime-path decomposition of the tree series failed".into(),
        ));
    }
    Ok(())
}

/// Number of intervals with n up steps, extracted from the closed form.
pub fn interval_count(m: usize, n: usize) -> Result<BigInt> {
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let ctx = Ctx::new(m, n);
    let h = g1_at_u_zero(m, n)?.map(|c| c.specialize_p_ones());
    let phi = ctx.exp_ml()?.map(|c| c.specialize_p_ones());
    let coeff = lagrange_invert(&h, &phi, n)?;
    expect_integer(&coeff.as_rat()?, "interval count")
}

fn substitute_u(coeff: &MultiPoly, upows: &mut Vec<Series>, uneg: &mut Vec<Series>) -> Series {
    let order = upows[0].order();
    let mut acc = Series::zero(SVar::Zp, order);
    for (e, rest) in coeff.u_coeffs() {
        let idx = e.unsigned_abs() as usize;
        let list = if e >= 0 { &mut *upows } else { &mut *uneg };
        while list.len() <= idx {
            let next = list.last().unwrap().mul(&list[1]);
            list.push(next);
        }
        acc = acc.add(&list[idx].mul_poly(&rest));
    }
    acc
}

/// The closed form at y = 1, all weights 1, rewritten in the coordinates
/// z = z'(1-z')^m, u = u'(1-z')/(1+u'z'), equals
/// (1+u')(1+z'u') / (u'(1-z')^{m+2}) * ((1+u')/(1+z'u')^{m+1} - 1).
pub fn reparametrization_check(m: usize, order: usize) -> Result<()> {
    let one = Series::one(SVar::Zp, order);
    let zp = Series::one(SVar::Zp, order).mul_var_pow(1);
    let one_minus = one.sub(&zp);
    // geometric inverses certify themselves: (1-z') sum z'^j = 1 up to truncation
    let mut inv_one_minus = Series::zero(SVar::Zp, order);
    for n in 0..=order {
        inv_one_minus.set_coeff(n, MultiPoly::one());
    }
    let u_poly = MultiPoly::u_pow(1);
    let mut inv_one_plus_uz = Series::zero(SVar::Zp, order);
    for n in 0..=order {
        let sign = if n % 2 == 0 { rint(1) } else { rint(-1) };
        inv_one_plus_uz.set_coeff(n, u_poly.pow(n).mul_rat(&sign));
    }
    let one_plus_uz = one.add(&zp.mul_poly(&u_poly));

    let z_sub = one_minus.pow(m).mul_var_pow(1);
    let u_sub = inv_one_plus_uz.mul(&one_minus).mul_poly(&u_poly);
    let u_sub_inv = one_plus_uz
        .mul(&inv_one_minus)
        .mul_poly(&MultiPoly::u_pow(-1));
    if !u_sub.mul(&u_sub_inv).sub(&one).is_zero() {
        return Err(Error::InternalCheck(
            "substituted reciprocal is not a reciprocal".into(),
        ));
    }

    let g1 = closed_form_g1(m, order)?.map(|c| c.specialize_p_ones());
    let mut upows = vec![one.clone(), u_sub];
    let mut uneg = vec![one.clone(), u_sub_inv];
    let mut lhs = Series::zero(SVar::Zp, order);
    let mut zpow = one.clone();
    for n in 0..=order {
        lhs = lhs.add(&substitute_u(g1.coeff(n), &mut upows, &mut uneg).mul(&zpow));
        zpow = zpow.mul(&z_sub);
    }

    let bracket = inv_one_plus_uz
        .pow(m + 1)
        .mul_poly(&MultiPoly::one_plus_u())
        .sub(&one);
    let rhs = bracket
        .mul(&one_plus_uz)
        .mul(&inv_one_minus.pow(m + 2))
        .mul_poly(&MultiPoly::one_plus_u().mul(&MultiPoly::u_pow(-1)));
    if !lhs.sub(&rhs).is_zero() {
        return Err(Error::InternalCheck(
            "reparametrized closed form mismatch".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::unlabelled_count_formula;
    use crate::lattice::TamariLattice;

    #[test]
    fn tree_series_smallest_coefficients() {
        let m = fuss_catalan(1, 3);
        for (n, want) in [(0usize, 1i64), (1, 1), (2, 2), (3, 5)] {
            assert_eq!(m.coeff(n), &MultiPoly::from_int(want));
        }
    }

    #[test]
    fn auxiliary_series_collapse_onto_the_tree_series() {
        for m in 1..=2usize {
            specialization_checks(m, 6).unwrap();
        }
    }

    #[test]
    fn bridge_and_prime_decompositions_hold() {
        for m in 1..=2usize {
            bridge_identity_check(m, 6).unwrap();
        }
    }

    #[test]
    fn counts_match_the_closed_formula() {
        for m in 1..=3usize {
            for n in 1..=4usize {
                assert_eq!(
                    interval_count(m, n).unwrap(),
                    unlabelled_count_formula(m, n).unwrap(),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn smallest_counts_frozen() {
        assert_eq!(interval_count(1, 3).unwrap(), BigInt::from(13));
        assert_eq!(interval_count(2, 3).unwrap(), BigInt::from(58));
    }

    #[test]
    fn counts_match_the_lattice() {
        for (m, n_max) in [(1usize, 3usize), (2, 3)] {
            for n in 1..=n_max {
                let lat = TamariLattice::build(m, n, None).unwrap();
                let count = BigInt::from(lat.intervals().len());
                assert_eq!(interval_count(m, n).unwrap(), count, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn closed_form_transports_to_the_unlabelled_coordinates() {
        for m in 1..=2usize {
            reparametrization_check(m, 5).unwrap();
        }
    }
}
