//! Explicit companion roots for slope two, and the checks that need them.
//!
//! For m = 2 the non-distinguished companion roots live in the quadratic extension by
//! w = sqrt(1+4u): u_{1,2} = (1+3u +- (1+u)w) / (2u^2).  Adjoining w makes three families of
//! identities directly checkable: the characteristic equation and the product/sum relations of
//! the roots, the inverse-Vandermonde combination of the interval series over all three roots
//! collapsing to v e^{yV(v)} (also checked for m = 1, where the second root is 1/u), and the
//! closed-form expression of the full interval series built from A(u_1), A(u_2).
//!
//! Root reciprocals use u_1 u_2 = -1/u, and (1+u_1)(1+u_2) = (1+u)^2/u^2 inverts 1+u_i inside
//! the localization, so no division beyond the declared (1+u) powers is ever needed.

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::quad::QuadSeries;
use crate::algebra::rat::{rfrac, rint};
use crate::algebra::series::{SVar, Series};
use crate::algebra::useries::USeries;
use crate::engine::base::Ctx;
use crate::error::{Error, Result};

/// The two conjugate roots, constant in the series variable.
pub fn roots(order: usize) -> (QuadSeries, QuadSeries) {
    let half_num = MultiPoly::u_pow(-2)
        .mul_rat(&rfrac(1, 2))
        .add(&MultiPoly::u_pow(-1).mul_rat(&rfrac(3, 2)));
    let half_w = MultiPoly::u_pow(-2)
        .mul_rat(&rfrac(1, 2))
        .add(&MultiPoly::u_pow(-1).mul_rat(&rfrac(1, 2)));
    let u1 = QuadSeries {
        a: Series::from_poly(SVar::Z, order, half_num),
        b: Series::from_poly(SVar::Z, order, half_w),
        den: 0,
    };
    let u2 = u1.conj();
    (u1, u2)
}

/// Substitution of u by a fixed extension element, with cached powers.
///
/// The inverse passed in must be the genuine reciprocal of the root; for u_1 it is -u u_2.
pub struct RootEval {
    pos: Vec<QuadSeries>,
    neg: Vec<QuadSeries>,
}

impl RootEval {
    pub fn new(root: &QuadSeries, inverse: &QuadSeries) -> RootEval {
        let one = QuadSeries::one(root.var(), root.order());
        RootEval {
            pos: vec![one.clone(), root.clone()],
            neg: vec![one, inverse.clone()],
        }
    }

    fn u_power(&mut self, e: i32) -> QuadSeries {
        let idx = e.unsigned_abs() as usize;
        let list = if e >= 0 { &mut self.pos } else { &mut self.neg };
        while list.len() <= idx {
            let next = list.last().unwrap().mul(&list[1]);
            list.push(next);
        }
        list[idx].clone()
    }

    pub fn poly(&mut self, p: &MultiPoly) -> QuadSeries {
        let mut acc = QuadSeries::zero(self.pos[0].var(), self.pos[0].order());
        for (e, rest) in p.u_coeffs() {
            acc = acc.add(&self.u_power(e).mul_poly(&rest));
        }
        acc
    }

    pub fn series(&mut self, s: &Series) -> QuadSeries {
        let mut acc = QuadSeries::zero(self.pos[0].var(), self.pos[0].order());
        for n in 0..=s.order() {
            acc = acc.add(&self.poly(s.coeff(n)).mul_var_pow(n));
        }
        acc
    }
}

/// Both evaluators, with reciprocals derived from u_1 u_2 = -1/u.
pub fn root_evals(order: usize) -> (RootEval, RootEval) {
    let (u1, u2) = roots(order);
    let minus_u = MultiPoly::u_pow(1).neg();
    let inv1 = u2.mul_poly(&minus_u);
    let inv2 = u1.mul_poly(&minus_u);
    (RootEval::new(&u1, &inv1), RootEval::new(&u2, &inv2))
}

fn quad_exp(s: &QuadSeries) -> Result<QuadSeries> {
    if !s.a.coeff(0).is_zero() || !s.b.coeff(0).is_zero() {
        return Err(Error::InvalidArgument(
            "exponential needs positive valuation".into(),
        ));
    }
    let mut acc = QuadSeries::one(s.var(), s.order());
    let mut term = QuadSeries::one(s.var(), s.order());
    for k in 1..=s.order() {
        term = term.mul(s).mul_rat(&rfrac(1, k as i64));
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// A at the two extension roots: A(u_i) = u_i (1+u_i)^{-1} e^{-K(u_i)}.
pub fn a_at_roots(order: usize) -> Result<(QuadSeries, QuadSeries)> {
    let ctx = Ctx::new(2, order);
    let k = ctx.k_series();
    let (u1, u2) = roots(order);
    let (mut ev1, mut ev2) = root_evals(order);
    let usq = MultiPoly::u_pow(2);
    // (1+u_1)^{-1} = (1+u_2) u^2 / (1+u)^2
    let inv_one_plus_u1 = QuadSeries::one(SVar::Z, order)
        .add(&u2)
        .mul_poly(&usq)
        .div_one_plus_u(2);
    let inv_one_plus_u2 = QuadSeries::one(SVar::Z, order)
        .add(&u1)
        .mul_poly(&usq)
        .div_one_plus_u(2);
    let a1 = u1
        .mul(&inv_one_plus_u1)
        .mul(&quad_exp(&ev1.series(&k).neg())?);
    let a2 = u2
        .mul(&inv_one_plus_u2)
        .mul(&quad_exp(&ev2.series(&k).neg())?);
    Ok((a1, a2))
}

fn exp_yv(ctx: &Ctx) -> Result<Series> {
    ctx.v_series().map(|c| c.mul(&MultiPoly::y())).exp()
}

/// The middle tower entry computed from the explicit roots alone:
/// Phi_1^>(u) = -[u^>]((1+u)^3 u^{-2} e^{yV} (A(u_1)+A(u_2))), then
/// Phi_1 = Phi_1^>(u) + Phi_1^>(u_1) + Phi_1^>(u_2) - 3 Phi_1^>(-1).
pub fn phi_one_from_roots(order: usize) -> Result<Series> {
    let ctx = Ctx::new(2, order);
    let (a1, a2) = a_at_roots(order)?;
    // A(u_1)+A(u_2) alone has a genuine (1+u) pole; v times it is Laurent
    let front = MultiPoly::one_plus_u().pow(3).mul(&MultiPoly::u_pow(-2));
    let a_sum_v = a1.add(&a2).mul_poly(&front).to_laurent()?;
    let pos = a_sum_v
        .mul(&exp_yv(&ctx)?)
        .map(|c| c.u_pos_part())
        .neg();
    let (mut ev1, mut ev2) = root_evals(order);
    let at_roots = ev1.series(&pos).add(&ev2.series(&pos)).to_laurent()?;
    let at_minus_one = pos.map(|c| c.eval_u_neg_one()).mul_rat(&rint(3));
    Ok(pos.add(&at_roots).sub(&at_minus_one))
}

/// Closed form of the slope-two interval series from the explicit roots:
/// F/(1+u) = [u^>=]( Phi_1(v)/(1+u) (A - (A_1+A_2)/2)
///                   + (1+1/u)^2 e^{yV} (A^2 - (A_1^2+A_2^2)/2) ).
pub fn closed_form_m2(order: usize) -> Result<Series> {
    let ctx = Ctx::new(2, order);
    let (a1, a2) = a_at_roots(order)?;
    let a = ctx.a_series()?;
    let half = rfrac(1, 2);
    let a_sum = a1.add(&a2).to_useries()?;
    let a_sq_sum = a1.pow(2).add(&a2.pow(2)).to_useries()?;
    let phi1 = phi_one_from_roots(order)?;
    let first = USeries::from_series(phi1)
        .div_one_plus_u(1)
        .mul(&a.sub(&a_sum.mul_rat(&half)));
    let front = MultiPoly::one_plus_u().pow(2).mul(&MultiPoly::u_pow(-2));
    let second = USeries::from_series(exp_yv(&ctx)?.mul_poly(&front))
        .mul(&a.pow(2).sub(&a_sq_sum.mul_rat(&half)));
    let bracket = first.add(&second).to_laurent()?;
    Ok(bracket
        .map(|c| c.u_nonneg_part())
        .mul_poly(&MultiPoly::one_plus_u()))
}

/// The inverse-Vandermonde combination of the interval series over all companion roots
/// collapses to v e^{yV(v)}.  Checked in cleared form; `series` must be the reparametrized
/// interval series for the same slope.
pub fn linear_combination_check(m: usize, series: &Series) -> Result<()> {
    let order = series.order();
    let ctx = Ctx::new(m, order);
    let eyv = exp_yv(&ctx)?;
    let v_exp = MultiPoly::v_expansion(m);
    match m {
        1 => {
            // G(u) - G(1/u) = (A(u) - A(1/u)) v e^{yV}
            let lhs = USeries::from_series(
                series.sub(&series.map(|c| c.subst_u_inverse())),
            );
            let a_u = ctx.a_series()?;
            let a_ubar =
                USeries::from_series(ctx.k_series_ubar().neg().exp()?).div_one_plus_u(1);
            let rhs = a_u
                .sub(&a_ubar)
                .mul(&USeries::from_series(eyv.mul_poly(&v_exp)));
            if !lhs.sub(&rhs).is_zero() {
                return Err(Error::InternalCheck(
                    "root combination failed for slope 1".into(),
                ));
            }
        }
        2 => {
            // cleared over the Vandermonde in (A_0, A_1, A_2):
            // G_0 (A_1-A_2) - G_1 (A_0-A_2) + G_2 (A_0-A_1) = v e^{yV} prod_{i<j} (A_i-A_j)
            let (a1, a2) = a_at_roots(order)?;
            let a_us = ctx.a_series()?;
            let a0 = QuadSeries {
                a: a_us.num.clone(),
                b: Series::zero(SVar::Z, order),
                den: a_us.den,
            };
            let (mut ev1, mut ev2) = root_evals(order);
            let g0 = QuadSeries::from_series(series.clone());
            let g1 = ev1.series(series);
            let g2 = ev2.series(series);
            let d01 = a0.sub(&a1);
            let d02 = a0.sub(&a2);
            let d12 = a1.sub(&a2);
            let lhs = g0.mul(&d12).sub(&g1.mul(&d02)).add(&g2.mul(&d01));
            let rhs = d01
                .mul(&d02)
                .mul(&d12)
                .mul_poly(&v_exp)
                .mul(&QuadSeries::from_series(eyv));
            if !lhs.sub(&rhs).is_zero() {
                return Err(Error::InternalCheck(
                    "root combination failed for slope 2".into(),
                ));
            }
        }
        _ => {
            return Err(Error::InvalidArgument(
                "explicit roots are only available for slopes 1 and 2".into(),
            ));
        }
    }
    Ok(())
}
