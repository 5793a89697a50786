//! Closed forms for the interval series after the change of variables, and
//! the reflection identities that pin them down.
//!
//! In the `(z, u)` coordinates the series at `y = 1` is, for every slope,
//!
//! ```text
//!   G1(u) = (1 + 1/u) * e^{K(u) + L} * ((1+u) e^{-m K(u)} - 1),
//! ```
//!
//! with the bracket exactly divisible by `u`.  For slope 1 the full
//! `y`-refined series is a single positive-part extraction,
//!
//! ```text
//!   G(u, y) = (1+u) [u^>=] ( e^{yV - K(u)} - (1/u) e^{yV - K(1/u)} ),
//! ```
//!
//! and this module also verifies the antisymmetrization identity behind it
//! together with the reflection lemma that makes the elimination work.

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::rat::{binomial, factorial, Rat};
use crate::algebra::series::{SVar, Series};
use crate::engine::base::Ctx;
use crate::error::{Error, Result};
use num::{BigInt, One};

/// The `y = 1` series `G1(u)` for arbitrary slope, with the exact
/// `u`-divisibility of the bracket certified.
pub fn closed_form_g1(m: usize, order: usize) -> Result<Series> {
    let ctx = Ctx::new(m, order);
    let bracket = ctx.x_series()?.sub(&Series::one(SVar::Z, order));
    for n in 0..=order {
        let c = bracket.coeff(n);
        if !c.is_zero() && c.u_min_exp().unwrap_or(0) < 1 {
            return Err(Error::InexactDivision(format!(
                "bracket of the closed form is not divisible by u at order {n}: {c}"
            )));
        }
    }
    let front = bracket
        .map(|c| c.mul_u_pow(-1))
        .mul_poly(&MultiPoly::one_plus_u());
    let ekl = ctx.k_series().add(&ctx.l_series()).exp()?;
    Ok(front.mul(&ekl))
}

/// The `u -> 0` limit of [`closed_form_g1`]:
/// `e^L (1 - m sum_k (p_k/k) z^k C((m+1)k, k-1))`.
pub fn g1_at_u_zero(m: usize, order: usize) -> Result<Series> {
    let ctx = Ctx::new(m, order);
    let mut tail = Series::one(SVar::Z, order);
    for k in 1..=order {
        let c = Rat::new(
            BigInt::from(m as i64) * binomial(((m + 1) * k) as i64, k as i64 - 1),
            BigInt::from(k as i64),
        );
        tail.set_coeff(k, MultiPoly::p(k).mul_rat(&c).neg());
    }
    Ok(ctx.l_series().exp()?.mul(&tail))
}

/// `W(u, y) = e^{yV - K(u)} - (1/u) e^{yV - K(1/u)}`, the antisymmetric
/// kernel of the slope-1 solution.
fn kernel_m1(ctx: &Ctx) -> Result<Series> {
    let yv = ctx.v_series().map(|c| c.mul(&MultiPoly::y()));
    let e1 = yv.sub(&ctx.k_series()).exp()?;
    let e2 = yv
        .sub(&ctx.k_series_ubar())
        .exp()?
        .map(|c| c.mul_u_pow(-1));
    Ok(e1.sub(&e2))
}

/// The full `y`-refined slope-1 series `G(u, y)` as a positive-part
/// extraction; coefficients are polynomial in `u` and `y`.
pub fn closed_form_m1(order: usize) -> Result<Series> {
    let ctx = Ctx::new(1, order);
    let w = kernel_m1(&ctx)?;
    Ok(w.map(|c| c.u_nonneg_part())
        .mul_poly(&MultiPoly::one_plus_u()))
}

/// Recovers `G(u, y)` from the antisymmetrized identity the long way round:
/// strictly positive part of `(1+u) W`, with the constant-in-`u` part fixed
/// by the vanishing of the series at `u = -1`.  Must agree with
/// [`closed_form_m1`]; keeping both routes makes the splitting identity
/// `(1+u)[u^>=]W = [u^>]((1+u)W) - eval_{u=-1}[u^>]((1+u)W)` an executable
/// fact.
pub fn reconstruct_m1(order: usize) -> Result<Series> {
    let ctx = Ctx::new(1, order);
    let w = kernel_m1(&ctx)?;
    let pos = w
        .mul_poly(&MultiPoly::one_plus_u())
        .map(|c| c.u_pos_part());
    let at_minus_one = pos.map(|c| c.eval_u_neg_one());
    Ok(pos.sub(&at_minus_one))
}

/// The slope-1 series at the parking specialization `p = (1, 0, 0, ...)`,
/// written as an explicit double sum: with `V = zv` and `K(u) = zu`,
///
/// ```text
///   G = (1+u) e^{2yz} (  sum_{0<=i<=j} u^{j-i} z^{i+j} y^i (y-1)^j / (i! j!)
///                      - sum_{0<=j<i} u^{i-j-1} z^{i+j} y^i (y-1)^j / (i! j!) ).
/// ```
pub fn parking_double_sum_m1(order: usize) -> Result<Series> {
    let y = MultiPoly::y();
    let ym1 = y.sub(&MultiPoly::one());
    let mut s = Series::zero(SVar::Z, order);
    for i in 0..=order {
        for j in 0..=order - i {
            let n = i + j;
            let upow = if i <= j {
                (j - i) as i32
            } else {
                (i - j - 1) as i32
            };
            let mut term = y
                .pow(i)
                .mul(&ym1.pow(j))
                .mul(&MultiPoly::u_pow(upow))
                .mul_rat(&Rat::new(BigInt::one(), factorial(i) * factorial(j)));
            if i > j {
                term = term.neg();
            }
            s.set_coeff(n, s.coeff(n).add(&term));
        }
    }
    let mut lin = Series::zero(SVar::Z, order);
    if order >= 1 {
        lin.set_coeff(1, y.mul_rat(&Rat::from_integer(BigInt::from(2))));
    }
    let e2yz = lin.exp()?;
    Ok(s.mul(&e2yz).mul_poly(&MultiPoly::one_plus_u()))
}

/// The homogeneous-equation identity for slope 1: with `G` the closed form,
///
/// ```text
///   G(u, y) - G(1/u, y) = (1+u)(e^{-K(u)} - (1/u) e^{-K(1/u)}) e^{yV}.
/// ```
pub fn antisymmetrization_check_m1(order: usize) -> Result<()> {
    let ctx = Ctx::new(1, order);
    let g = closed_form_m1(order)?;
    let lhs = g.sub(&g.map(|c| c.subst_u_inverse()));
    let e1 = ctx.exp_k(-1)?;
    let e2 = ctx
        .k_series_ubar()
        .neg()
        .exp()?
        .map(|c| c.mul_u_pow(-1));
    let eyv = ctx.v_series().map(|c| c.mul(&MultiPoly::y())).exp()?;
    let rhs = e1
        .sub(&e2)
        .mul_poly(&MultiPoly::one_plus_u())
        .mul(&eyv);
    if lhs != rhs {
        return Err(Error::InternalCheck(
            "antisymmetrization identity failed for slope 1".into(),
        ));
    }
    Ok(())
}

/// Reflection property for slope 1: with `Omega H = H - H(0)` and
/// `v = (1+u)(1+1/u)`, the difference
///
/// ```text
///   v^k G(u, y) - ((v * Omega)^k) G(u, y)
/// ```
///
/// is, order by order, a polynomial in `v` (in particular symmetric under
/// `u -> 1/u`).  Verified for `k <= k_max` by exact conversion to the
/// `v`-basis.
pub fn reflection_check_m1(order: usize, k_max: usize) -> Result<()> {
    let g = closed_form_m1(order)?;
    let vexp = MultiPoly::v_expansion(1);
    let mut op = g.clone();
    let mut vk = MultiPoly::one();
    for k in 0..=k_max {
        let diff = g.map(|c| c.mul(&vk)).sub(&op);
        for n in 0..=order {
            let d = diff.coeff(n);
            if d.subst_u_inverse() != *d {
                return Err(Error::InternalCheck(format!(
                    "reflection difference not symmetric at k={k}, order {n}"
                )));
            }
            d.to_v_poly(1)?;
        }
        // next iterate: op <- v * (op - op(0))
        op = op.try_map(|c| Ok(c.sub(&c.eval_u_zero()?).mul(&vexp)))?;
        vk = vk.mul(&vexp);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::change::change_of_variables;
    use crate::engine::functional::iterate;

    #[test]
    fn constant_term_of_g1_is_one_plus_u() {
        for m in 1..=3 {
            let g = closed_form_g1(m, 4).unwrap();
            assert_eq!(*g.coeff(0), MultiPoly::one_plus_u());
        }
    }

    #[test]
    fn g1_matches_iterated_equation_through_z6() {
        let f = iterate(1, 6).map(|c| c.subst_y_one());
        let g = change_of_variables(&f, 1).unwrap();
        assert_eq!(g, closed_form_g1(1, 6).unwrap());
    }

    #[test]
    fn g1_matches_iterated_equation_slope_two() {
        let f = iterate(2, 4).map(|c| c.subst_y_one());
        let g = change_of_variables(&f, 2).unwrap();
        assert_eq!(g, closed_form_g1(2, 4).unwrap());
    }

    #[test]
    fn u_zero_limit_agrees() {
        for m in 1..=2 {
            let g = closed_form_g1(m, 5).unwrap();
            let limit = g.try_map(|c| c.eval_u_zero()).unwrap();
            assert_eq!(limit, g1_at_u_zero(m, 5).unwrap());
        }
    }

    #[test]
    fn full_y_closed_form_matches_iterated_equation() {
        let f = iterate(1, 5);
        let g = change_of_variables(&f, 1).unwrap();
        assert_eq!(g, closed_form_m1(5).unwrap());
    }

    #[test]
    fn full_y_closed_form_at_y_one_is_g1() {
        let g = closed_form_m1(6).unwrap().map(|c| c.subst_y_one());
        assert_eq!(g, closed_form_g1(1, 6).unwrap());
    }

    #[test]
    fn reconstruction_route_agrees() {
        assert_eq!(reconstruct_m1(5).unwrap(), closed_form_m1(5).unwrap());
    }

    #[test]
    fn parking_specialization_is_the_double_sum() {
        let g = closed_form_m1(6)
            .unwrap()
            .map(|c| c.specialize_p_parking());
        assert_eq!(g, parking_double_sum_m1(6).unwrap());
    }

    #[test]
    fn antisymmetrization_identity_holds() {
        antisymmetrization_check_m1(4).unwrap();
    }

    #[test]
    fn reflection_differences_are_v_polynomials() {
        reflection_check_m1(4, 2).unwrap();
    }
}
