//! Tower of auxiliary v-series that solves the structured linear problem satisfied by the
//! reparametrized interval series.
//!
//! The reparametrized series H(z;u,y), summed over the companion roots u_0 = u, u_1, ..., u_m
//! against the inverse Vandermonde in A, collapses to a function of v alone: the top entry of
//! the tower, v * exp(y V(v)).  From that single entry a descending recursion determines series
//! Phi_m, ..., Phi_0 with coefficients in v*Q[v], and H is recovered as
//! sum_k Phi_k(v) A(u)^k.  Each step extracts a positive u-part, so the recursion is only
//! well-posed because v * m_lambda(A_1..A_m) is Laurent in u; that fact is certified at run
//! time, as is the divisibility of every Phi_k by v and the exact reconstruction of each
//! Phi_k as a polynomial in v.

use num::BigInt;

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::rat::{binomial, rfrac, rint, Rat};
use crate::algebra::series::{SVar, Series};
use crate::algebra::useries::USeries;
use crate::engine::base::Ctx;
use crate::engine::companion::CompanionRing;
use crate::engine::symfunc::monomials_from_power_sums;
use crate::error::{Error, Result};

/// V(v) = sum_{k>=1} (p_k / k) v^k z^k with v kept as a marker variable.
fn v_weight_series(order: usize) -> Series {
    let mut s = Series::zero(SVar::Z, order);
    for k in 1..=order.min(s.order()) {
        let c = MultiPoly::p(k)
            .mul(&MultiPoly::v().pow(k))
            .mul_rat(&rfrac(1, k as i64));
        s.set_coeff(k, c);
    }
    s
}

/// The sequence Phi_0, ..., Phi_m; each entry is a z-series whose coefficients are
/// polynomials in the marker v (and in y and the weights p).
pub struct PhiTower {
    pub m: usize,
    pub phis: Vec<Series>,
}

pub fn phi_tower(m: usize, order: usize, with_y: bool) -> Result<PhiTower> {
    if m == 0 {
        return Err(Error::InvalidArgument("tower needs slope at least 1".into()));
    }
    let ring = CompanionRing::new(m, order);
    let psums = ring.power_sums_a(m)?;
    let mut monomials = Vec::new();
    for w in 1..=m {
        monomials.push(monomials_from_power_sums(w, m, &psums)?);
    }

    let mut top = v_weight_series(order);
    if with_y {
        top = top.map(|c| c.mul(&MultiPoly::y()));
    }
    let phi_m = top.exp()?.mul_poly(&MultiPoly::v());

    let mut phis = vec![Series::zero(SVar::Z, order); m + 1];
    let mut expanded = vec![USeries::zero(SVar::Z, order); m + 1];
    expanded[m] = USeries::from_series(phi_m.map(|c| c.expand_v(m)));
    phis[m] = phi_m;

    for k in (1..=m).rev() {
        let mut rhs = USeries::zero(SVar::Z, order);
        for j in k..=m {
            let w = j - k + 1;
            let mut sym = USeries::zero(SVar::Z, order);
            for (lambda, val) in &monomials[w - 1] {
                if lambda.len() > k {
                    continue;
                }
                let c = binomial((m - lambda.len()) as i64, (k - lambda.len()) as i64);
                sym = sym.add(&val.mul_rat(&Rat::from_integer(c)));
            }
            rhs = rhs.add(&expanded[j].mul(&sym));
        }
        // the combination must be Laurent in u even though each factor is not
        let laurent = rhs.to_laurent()?;
        let scale = Rat::new(BigInt::from(-1), binomial(m as i64, k as i64));
        let phi_pos = laurent.map(|c| c.u_pos_part()).mul_rat(&scale);

        // value at all m+1 roots, minus (m+1) times the value at u = -1
        let at_roots = ring.trace(&ring.eval_at_u(&phi_pos));
        let at_minus_one = USeries::from_series(phi_pos.map(|c| c.eval_u_neg_one()));
        let phi_us = at_roots.sub(&at_minus_one.mul_rat(&rint((m + 1) as i64)));

        // certified multiple of v: dividing by v = (1+u)^{m+1} u^{-m} must stay Laurent
        phi_us
            .mul_poly(&MultiPoly::u_pow(m as i32))
            .div_one_plus_u((m + 1) as u32)
            .to_laurent()?;
        let marker = phi_us.to_laurent()?.try_map(|c| c.to_v_poly(m))?;
        expanded[k - 1] = USeries::from_series(marker.map(|c| c.expand_v(m)));
        phis[k - 1] = marker;
    }
    Ok(PhiTower { m, phis })
}

/// Reassemble sum_k Phi_k(v) A(u)^k; the result is certified polynomial in u.
pub fn assemble(m: usize, tower: &PhiTower) -> Result<Series> {
    let order = tower.phis[0].order();
    let ctx = Ctx::new(m, order);
    let a = ctx.a_series()?;
    let mut acc = USeries::zero(SVar::Z, order);
    let mut apow = USeries::one(SVar::Z, order);
    for phi in &tower.phis {
        let term = USeries::from_series(phi.map(|c| c.expand_v(m))).mul(&apow);
        acc = acc.add(&term);
        apow = apow.mul(&a);
    }
    acc.to_laurent()
}

/// The reparametrized interval series computed through the tower alone.
pub fn interval_series_via_tower(m: usize, order: usize, with_y: bool) -> Result<Series> {
    assemble(m, &phi_tower(m, order, with_y)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::change::change_of_variables;
    use crate::engine::closed::{closed_form_g1, closed_form_m1};
    use crate::engine::functional::iterate;

    #[test]
    fn top_entry_smallest_coefficients() {
        let tower = phi_tower(1, 2, true).unwrap();
        let top = &tower.phis[1];
        assert_eq!(top.coeff(0), &MultiPoly::v());
        let want = MultiPoly::p(1)
            .mul(&MultiPoly::y())
            .mul(&MultiPoly::v().pow(2));
        assert_eq!(top.coeff(1), &want);
    }

    #[test]
    fn tower_reproduces_functional_solution_slope_one() {
        let direct = change_of_variables(&iterate(1, 5), 1).unwrap();
        let towered = interval_series_via_tower(1, 5, true).unwrap();
        assert_eq!(direct, towered);
    }

    #[test]
    fn tower_reproduces_functional_solution_slope_two() {
        let direct = change_of_variables(&iterate(2, 4), 2).unwrap();
        let towered = interval_series_via_tower(2, 4, true).unwrap();
        assert_eq!(direct, towered);
    }

    #[test]
    fn tower_matches_direct_full_y_closed_form_slope_one() {
        let towered = interval_series_via_tower(1, 5, true).unwrap();
        assert_eq!(towered, closed_form_m1(5).unwrap());
    }

    #[test]
    fn tower_at_y_one_matches_closed_form_slope_three() {
        let towered = interval_series_via_tower(3, 3, false).unwrap();
        assert_eq!(towered, closed_form_g1(3, 3).unwrap());
    }

    #[test]
    fn every_entry_is_a_multiple_of_v() {
        let tower = phi_tower(2, 3, true).unwrap();
        for phi in &tower.phis {
            for n in 0..=phi.order() {
                let at_zero = phi.coeff(n).subst_v_zero();
                assert!(at_zero.is_zero(), "constant v-term in z^{n}");
            }
        }
    }
}
