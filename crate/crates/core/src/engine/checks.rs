//! Structural checks on the operator calculus behind the tower.
//!
//! Two facts make the descending recursion work, and both are checkable at any truncation
//! order.  First, iterating the integrated right-hand-side operator O = z v A(u)^m Lambda^(m)
//! (with Lambda(H) = (H - H(0))/A(u)) on a series with no pole at u = 0 differs from plain
//! multiplication by (z v)^k only by a polynomial in A(u) of degree below m, with
//! v-polynomial coefficients: O^k(H) = (zv)^k H - P_k(A(u), v).  Membership of the defect in
//! that span is decided per z-order by an exact linear solve, so a failure is a hard error,
//! never a least-squares fit.  Second, a polynomial in v is recovered from the positive
//! u-part of its expansion by summing over all companion roots:
//! P(v) = P(0) + sum_i (P^>(u_i) - P^>(-1)).

use crate::algebra::linalg::solve_rational;
use crate::algebra::multipoly::MultiPoly;
use crate::algebra::rat::{binomial, rint, Rat};
use crate::algebra::series::Series;
use crate::algebra::useries::USeries;
use crate::engine::base::Ctx;
use crate::engine::companion::CompanionRing;
use crate::engine::symfunc::{dense_add, dense_monomial, dense_mul, dense_one, Dense};
use crate::error::{Error, Result};
use num::One;

/// One application of O = z v A(u)^m Lambda^(m).
///
/// The two non-Laurent factors are combined before use: 1/A = (1+u) e^{K}/u is Laurent, and
/// so is z v A^m = z (1+u) e^{-mK}; the intermediate values therefore never leave the Laurent
/// world.  Requires every coefficient of the input to be pole-free at u = 0.
pub fn apply_operator(ctx: &Ctx, h: &Series) -> Result<Series> {
    let a_inv = ctx.a_inverse()?;
    let mut cur = h.clone();
    for _ in 0..ctx.m {
        cur = cur
            .try_map(|c| Ok(c.sub(&c.eval_u_zero()?)))?
            .mul(&a_inv);
    }
    Ok(cur.mul(&ctx.x_series()?).mul_var_pow(1))
}

/// Decide whether `d` lies in span{ A(u)^j v^l : 0 <= j < m, 0 <= l <= l_max } with
/// coefficients that are z-series free of u and v.  Exact; inconsistency is an error.
fn span_membership(m: usize, l_max: usize, d: &Series) -> Result<()> {
    let order = d.order();
    let ctx = Ctx::new(m, order);
    let clear = MultiPoly::one_plus_u().pow(m - 1);
    let a = ctx.a_series()?;
    let mut basis = Vec::new();
    for j in 0..m {
        basis.push(a.pow(j).mul_poly(&clear).to_laurent()?);
    }
    let lhs = d.mul_poly(&clear);
    let vexp = MultiPoly::v_expansion(m);

    // after clearing, column (j, l) contributes u^{j - ml} (1+u)^{m-1-j+(m+1)l} at z-order 0
    let cols: Vec<(usize, usize)> = (0..m)
        .flat_map(|j| (0..=l_max).map(move |l| (j, l)))
        .collect();
    let e_lo = -((m * l_max) as i32);
    let e_hi = (m - 1 + l_max) as i32;

    let mut gammas: Vec<Vec<MultiPoly>> = Vec::new();
    for n in 0..=order {
        let mut rn = lhs.coeff(n).clone();
        for (n1, g) in gammas.iter().enumerate() {
            for (j, gj) in g.iter().enumerate() {
                rn = rn.sub(&gj.mul(basis[j].coeff(n - n1)));
            }
        }
        let rn_parts = rn.u_coeffs();
        let lo = rn_parts.keys().next().cloned().unwrap_or(0).min(e_lo);
        let hi = rn_parts.keys().last().cloned().unwrap_or(0).max(e_hi);
        let mut mat = Vec::new();
        let mut rhs = Vec::new();
        for e in lo..=hi {
            let row: Vec<Rat> = cols
                .iter()
                .map(|&(j, l)| {
                    let beta = (m - 1 - j + (m + 1) * l) as i64;
                    let shift = e as i64 - (j as i64 - (m * l) as i64);
                    Rat::from_integer(binomial(beta, shift))
                })
                .collect();
            mat.push(row);
            rhs.push(rn_parts.get(&e).cloned().unwrap_or_else(MultiPoly::zero));
        }
        let sol = solve_rational(&mat, &rhs)?;
        let mut g = vec![MultiPoly::zero(); m];
        for (idx, &(j, l)) in cols.iter().enumerate() {
            g[j] = g[j].add(&sol[idx].mul(&vexp.pow(l)));
        }
        gammas.push(g);
    }
    Ok(())
}

/// Verify O^k(H) = (zv)^k H - P_k(A(u), v) for k = 1..=k_max, with deg_X P_k < m and
/// deg_v P_k <= k.
pub fn operator_identity_check(m: usize, k_max: usize, h: &Series) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidArgument("slope must be positive".into()));
    }
    let ctx = Ctx::new(m, h.order());
    let vexp = MultiPoly::v_expansion(m);
    let mut op = h.clone();
    let mut zvh = h.clone();
    for k in 1..=k_max {
        op = apply_operator(&ctx, &op)?;
        zvh = zvh.mul_poly(&vexp).mul_var_pow(1);
        span_membership(m, k, &zvh.sub(&op))?;
    }
    Ok(())
}

/// Verify P(v) = P(0) + sum_{i=0}^m (P^>(u_i) - P^>(-1)) for a z-series `p` whose
/// coefficients are polynomials in the marker v.
pub fn positive_part_reconstruction_check(m: usize, p: &Series) -> Result<()> {
    let order = p.order();
    let ring = CompanionRing::new(m, order);
    let expanded = p.map(|c| c.expand_v(m));
    let pos = expanded.map(|c| c.u_pos_part());
    let at_roots = ring.trace(&ring.eval_at_u(&pos));
    let at_minus_one = USeries::from_series(
        pos.map(|c| c.eval_u_neg_one()).mul_rat(&rint(m as i64 + 1)),
    );
    let constant = USeries::from_series(p.map(|c| c.subst_v_zero()));
    let rhs = constant.add(&at_roots).sub(&at_minus_one);
    if USeries::from_series(expanded).sub(&rhs).is_zero() {
        Ok(())
    } else {
        Err(Error::InternalCheck(
            "positive-part reconstruction failed".into(),
        ))
    }
}

/// Vandermonde product over the chosen indices, as a dense polynomial in
/// `vars` variables: `prod_{j < k} (x_j - x_k)`.
fn vandermonde(indices: &[usize], vars: usize) -> Dense {
    let mut out = dense_one(vars);
    for (a, &j) in indices.iter().enumerate() {
        for &k in &indices[a + 1..] {
            let mut ej = vec![0u32; vars];
            ej[j] = 1;
            let mut ek = vec![0u32; vars];
            ek[k] = 1;
            let factor = dense_add(
                &dense_monomial(ej, Rat::one()),
                &dense_monomial(ek, -Rat::one()),
            );
            out = dense_mul(&out, &factor);
        }
    }
    out
}

/// The interpolation identities behind the root calculus, verified as exact
/// polynomial identities in `m + 1` symbolic variables after clearing the
/// Vandermonde denominator `V = prod_{j<k} (x_j - x_k)`:
///
/// ```text
///   sum_i x_i^d / prod_{j != i} (x_i - x_j)        = 0        (0 <= d < m)
///   sum_i x_i^m / prod_{j != i} (x_i - x_j)        = 1
///   sum_i (1/x_i) / prod_{j != i} (x_i - x_j)      = (-1)^m / (x_0 ... x_m)
/// ```
///
/// Clearing uses `V / prod_{j != i} (x_i - x_j) = (-1)^i V_i` with `V_i` the
/// Vandermonde of the remaining variables.
pub fn lagrange_interpolation_check(m: usize) -> Result<()> {
    let vars = m + 1;
    let all: Vec<usize> = (0..vars).collect();
    let v_full = vandermonde(&all, vars);
    let mut sums: Vec<Dense> = vec![Dense::new(); m + 1];
    let mut inv_sum = Dense::new();
    for i in 0..vars {
        let rest: Vec<usize> = (0..vars).filter(|&j| j != i).collect();
        let mut cof = vandermonde(&rest, vars);
        if i % 2 == 1 {
            cof = dense_mul(&cof, &dense_monomial(vec![0; vars], -Rat::one()));
        }
        for d in 0..=m {
            let mut e = vec![0u32; vars];
            e[i] = d as u32;
            sums[d] = dense_add(&sums[d], &dense_mul(&dense_monomial(e, Rat::one()), &cof));
        }
        let others: Vec<u32> = (0..vars).map(|j| u32::from(j != i)).collect();
        inv_sum = dense_add(
            &inv_sum,
            &dense_mul(&dense_monomial(others, Rat::one()), &cof),
        );
    }
    for (d, s) in sums.iter().enumerate().take(m) {
        if !s.is_empty() {
            return Err(Error::InternalCheck(format!(
                "low-degree interpolation sum is nonzero for exponent {d}"
            )));
        }
    }
    if sums[m] != v_full {
        return Err(Error::InternalCheck(
            "leading interpolation sum differs from the Vandermonde".into(),
        ));
    }
    let signed = if m % 2 == 1 {
        dense_mul(&v_full, &dense_monomial(vec![0; vars], -Rat::one()))
    } else {
        v_full
    };
    if inv_sum != signed {
        return Err(Error::InternalCheck(
            "inverse-variable interpolation sum is off".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::series::SVar;
    use crate::engine::change::change_of_variables;
    use crate::engine::functional::iterate;

    #[test]
    fn zeroth_iterate_is_exact() {
        let ctx = Ctx::new(2, 3);
        let h = ctx.x_series().unwrap();
        assert!(h.sub(&h).is_zero());
    }

    #[test]
    fn operator_defect_stays_in_low_degrees_slope_one() {
        let ctx = Ctx::new(1, 4);
        operator_identity_check(1, 2, &ctx.x_series().unwrap()).unwrap();
    }

    #[test]
    fn operator_defect_stays_in_low_degrees_slope_two() {
        let ctx = Ctx::new(2, 3);
        operator_identity_check(2, 2, &ctx.x_series().unwrap()).unwrap();
    }

    #[test]
    fn operator_defect_for_the_full_interval_series() {
        let g = change_of_variables(&iterate(1, 3), 1).unwrap();
        operator_identity_check(1, 1, &g).unwrap();
    }

    #[test]
    fn interpolation_identities_symbolic() {
        for m in 1..=4usize {
            lagrange_interpolation_check(m).unwrap();
        }
    }

    #[test]
    fn span_solver_rejects_stray_terms() {
        let stray = Series::from_poly(SVar::Z, 2, MultiPoly::u_pow(17));
        assert!(span_membership(2, 1, &stray).is_err());
    }

    #[test]
    fn reconstruction_for_constants_and_v() {
        for m in 1..=3usize {
            let one = Series::from_poly(SVar::Z, 2, MultiPoly::one());
            positive_part_reconstruction_check(m, &one).unwrap();
            let v = Series::from_poly(SVar::Z, 2, MultiPoly::v());
            positive_part_reconstruction_check(m, &v).unwrap();
        }
    }

    #[test]
    fn reconstruction_for_sample_polynomials() {
        for m in 1..=3usize {
            let sample = MultiPoly::v()
                .add(&MultiPoly::v().pow(2).mul_rat(&rint(3)))
                .sub(&MultiPoly::v().pow(3).mul_rat(&rint(2)));
            positive_part_reconstruction_check(m, &Series::from_poly(SVar::Z, 1, sample))
                .unwrap();
            let mut varying = Series::zero(SVar::Z, 2);
            for n in 0..=2usize {
                varying.set_coeff(n, MultiPoly::v().pow(n + 1));
            }
            positive_part_reconstruction_check(m, &varying).unwrap();
        }
    }
}
