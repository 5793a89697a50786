//! The base series dictionary shared by every solution route.
//!
//! All series are truncated at a fixed z-order with coefficients that are
//! exact Laurent polynomials in u over Q[p1, p2, ...]. The letter v stands
//! for (1+u)^(m+1)/u^m; series denominated by powers of (1+u) live in
//! `USeries`, whose `to_laurent` certifies polynomiality by exact division.
//!
//!   V(v) = sum_k (p_k/k) v^k z^k
//!   L    = [u^0] V(v) = sum_k (p_k/k) C((m+1)k, k) z^k
//!   K(u) = [u^>] V(v) = sum_k (p_k/k) z^k sum_{i=1..k} C((m+1)k, k-i) u^i
//!   A(u) = u/(1+u) e^{-K(u)},   X = (1+u) e^{-mK(u)},   T = z e^{-mL}

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::rat::{binomial, rfrac, Rat};
use crate::algebra::series::{SVar, Series};
use crate::algebra::useries::USeries;
use crate::error::Result;

/// Shared context: slope m and truncation order in z.
#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub m: usize,
    pub order: usize,
}

impl Ctx {
    pub fn new(m: usize, order: usize) -> Ctx {
        assert!(m >= 1, "slope must be at least 1");
        Ctx { m, order }
    }

    fn per_k<F>(&self, mut coeff: F) -> Series
    where
        F: FnMut(usize) -> MultiPoly,
    {
        let mut coeffs = vec![MultiPoly::zero()];
        for k in 1..=self.order {
            coeffs.push(coeff(k));
        }
        Series::from_coeffs(SVar::Z, coeffs)
    }

    /// V(v) with v expanded into its Laurent polynomial in u.
    pub fn v_series(&self) -> Series {
        let m = self.m;
        self.per_k(|k| {
            MultiPoly::p(k)
                .mul_rat(&rfrac(1, k as i64))
                .mul(&MultiPoly::v_expansion(m).pow(k))
        })
    }

    /// L = [u^0] V(v).
    pub fn l_series(&self) -> Series {
        let m = self.m;
        self.per_k(|k| {
            MultiPoly::p(k)
                .mul_rat(&rfrac(1, k as i64))
                .mul_rat(&Rat::from_integer(binomial(
                    ((m + 1) * k) as i64,
                    k as i64,
                )))
        })
    }

    /// K(u) = [u^>] V(v), the positive-powers part.
    pub fn k_series(&self) -> Series {
        self.v_series().map(|c| c.u_pos_part())
    }

    /// K(1/u) — substituting u -> 1/u into each coefficient.
    pub fn k_series_ubar(&self) -> Series {
        self.k_series().map(|c| c.subst_u_inverse())
    }

    /// e^{K(u)} and e^{-K(u)} as plain Laurent series.
    pub fn exp_k(&self, sign: i64) -> Result<Series> {
        self.k_series().mul_rat(&Rat::from_integer(sign.into())).exp()
    }

    /// A(u) = u/(1+u) e^{-K(u)} as a (1+u)-denominated series.
    pub fn a_series(&self) -> Result<USeries> {
        let num = self.exp_k(-1)?.mul_poly(&MultiPoly::u_pow(1));
        Ok(USeries::from_series(num).div_one_plus_u(1))
    }

    /// 1/A(u) = (1+u)/u e^{K(u)}: a genuine Laurent series since 1/u is a
    /// unit monomial.
    pub fn a_inverse(&self) -> Result<Series> {
        Ok(self
            .exp_k(1)?
            .mul_poly(&MultiPoly::one_plus_u().mul(&MultiPoly::u_pow(-1))))
    }

    /// X = (1+u) e^{-mK(u)}: the catalytic substitution for x.
    pub fn x_series(&self) -> Result<Series> {
        let ek = self
            .k_series()
            .mul_rat(&Rat::from_integer((-(self.m as i64)).into()))
            .exp()?;
        Ok(ek.mul_poly(&MultiPoly::one_plus_u()))
    }

    /// T = z e^{-mL}: the substitution for t. The returned series is in z
    /// with T's coefficients; composing G(t) with it re-expands in z.
    pub fn t_series(&self) -> Result<Series> {
        let el = self
            .l_series()
            .mul_rat(&Rat::from_integer((-(self.m as i64)).into()))
            .exp()?;
        Ok(el.mul_var_pow(1))
    }

    /// e^{mL}, the inverse substitution factor.
    pub fn exp_ml(&self) -> Result<Series> {
        self.l_series()
            .mul_rat(&Rat::from_integer((self.m as i64).into()))
            .exp()
    }
}

/// K evaluated at u = -1 must equal -L/(m+1); used as a base consistency
/// check between the dictionary entries.
pub fn k_at_minus_one_check(ctx: &Ctx) -> Result<()> {
    let k = ctx.k_series().map(|c| c.eval_u_neg_one());
    let scaled = ctx
        .l_series()
        .mul_rat(&(rfrac(-1, ctx.m as i64 + 1)));
    if k.sub(&scaled).is_zero() {
        Ok(())
    } else {
        Err(crate::error::Error::InternalCheck(
            "K(-1) does not match -L/(m+1)".into(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rint;

    #[test]
    fn first_orders_frozen() {
        let ctx = Ctx::new(1, 3);
        // [z^1] L = 2 p1, [z^1] K = p1 u, [z^2] K = (p2/2)(4u + u^2).
        let l = ctx.l_series();
        assert_eq!(l.coeff(1), &MultiPoly::p(1).mul_rat(&rint(2)));
        let k = ctx.k_series();
        assert_eq!(k.coeff(1), &MultiPoly::p(1).mul(&MultiPoly::u_pow(1)));
        let expected = MultiPoly::p(2)
            .mul_rat(&rfrac(1, 2))
            .mul(&MultiPoly::u_pow(1).mul_rat(&rint(4)).add(&MultiPoly::u_pow(2)));
        assert_eq!(k.coeff(2), &expected);
    }

    #[test]
    fn v_splits_into_l_k_kbar_parts() {
        // V = K(u) + L + (negative part), and the negative part is K(1/u)
        // with u -> 1/u undone; checking V - K - L has no nonnegative powers.
        for m in 1..=2usize {
            let ctx = Ctx::new(m, 4);
            let v = ctx.v_series();
            let rest = v.sub(&ctx.k_series()).sub(&ctx.l_series());
            for c in rest.coeffs() {
                assert!(c.u_nonneg_part().is_zero());
            }
        }
    }

    #[test]
    fn k_at_minus_one() {
        for m in 1..=3usize {
            k_at_minus_one_check(&Ctx::new(m, 5)).unwrap();
        }
    }

    #[test]
    fn a_times_inverse_is_one() {
        for m in 1..=2usize {
            let ctx = Ctx::new(m, 4);
            let a = ctx.a_series().unwrap();
            let ainv = USeries::from_series(ctx.a_inverse().unwrap());
            let product = a.mul(&ainv).to_laurent().unwrap();
            assert_eq!(product.coeff(0), &MultiPoly::one());
            for k in 1..=4 {
                assert!(product.coeff(k).is_zero());
            }
        }
    }

    #[test]
    fn x_at_u_zero_is_one() {
        let ctx = Ctx::new(2, 4);
        let x = ctx.x_series().unwrap();
        for k in 0..=4 {
            let at0 = x.coeff(k).eval_u_zero().unwrap();
            if k == 0 {
                assert_eq!(at0, MultiPoly::one());
            } else {
                assert!(at0.is_zero());
            }
        }
    }
}
