//! Monomial symmetric polynomials of the companion roots, recovered from power sums.
//!
//! The tower recursion needs the values `m_lambda(a_1, ..., a_vars)` where the `a_i` live in an
//! extension ring and only their power sums `p_r = a_1^r + ... + a_vars^r` are directly
//! computable.  Over the rationals the products `p_mu` and the monomials `m_lambda` (at most
//! `vars` parts) span the same space of symmetric polynomials, so the values are related by an
//! exact linear system: each row states `p_mu = sum_lambda R[mu][lambda] * m_lambda` with the
//! integer coefficient `R[mu][lambda]` read off from the expansion of `p_mu` in `vars`
//! variables.  The solve is exact and fails loudly on any inconsistency, so feeding it power
//! sums that do not come from `vars` genuine values is detected rather than absorbed.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::algebra::linalg::solve_rational;
use crate::algebra::rat::Rat;
use crate::algebra::useries::USeries;
use crate::combinatorics::partition::Partition;
use crate::error::{Error, Result};

/// Dense polynomial in a fixed number of variables, keyed by exponent vector.
pub(crate) type Dense = BTreeMap<Vec<u32>, Rat>;

pub(crate) fn dense_one(vars: usize) -> Dense {
    let mut p = Dense::new();
    p.insert(vec![0; vars], Rat::one());
    p
}

pub(crate) fn dense_add(a: &Dense, b: &Dense) -> Dense {
    let mut out = a.clone();
    for (e, c) in b {
        let entry = out.entry(e.clone()).or_insert_with(Rat::zero);
        *entry += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub(crate) fn dense_monomial(e: Vec<u32>, c: Rat) -> Dense {
    let mut p = Dense::new();
    if !c.is_zero() {
        p.insert(e, c);
    }
    p
}

pub(crate) fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let entry = out.entry(e).or_insert_with(Rat::zero);
            *entry += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `x_1^r + ... + x_vars^r` as a dense polynomial.
fn power_sum_poly(r: usize, vars: usize) -> Dense {
    let mut p = Dense::new();
    for i in 0..vars {
        let mut e = vec![0u32; vars];
        e[i] = r as u32;
        p.insert(e, Rat::one());
    }
    p
}

/// Weakly decreasing exponent vector of `lambda`, zero-padded to `vars` entries.
fn dominant_exponents(lambda: &Partition, vars: usize) -> Vec<u32> {
    let mut e: Vec<u32> = lambda.parts().iter().map(|&p| p as u32).collect();
    e.resize(vars, 0);
    e
}

/// Values of every `m_lambda(a_1..a_vars)` for `lambda` of weight `w` with at most `vars`
/// parts, from the power-sum values `psums[r] = p_r(a_1..a_vars)` (entries `1..=w` are used).
///
/// Partitions of weight `w` with more than `vars` parts are omitted: their monomial symmetric
/// polynomial is identically zero in `vars` variables.
pub fn monomials_from_power_sums(
    w: usize,
    vars: usize,
    psums: &[USeries],
) -> Result<Vec<(Partition, USeries)>> {
    if w == 0 || vars == 0 {
        return Err(Error::InvalidArgument(
            "monomial recovery needs positive weight and at least one variable".into(),
        ));
    }
    if psums.len() <= w {
        return Err(Error::InvalidArgument(format!(
            "need power sums up to {}, got {}",
            w,
            psums.len().saturating_sub(1)
        )));
    }
    let lambdas: Vec<Partition> = Partition::all_of(w)
        .into_iter()
        .filter(|l| l.len() <= vars)
        .collect();
    let mut mat = Vec::new();
    let mut rhs = Vec::new();
    for mu in Partition::all_of(w) {
        let mut expansion = dense_one(vars);
        let mut value = USeries::one(psums[1].num.var, psums[1].order());
        for &r in mu.parts() {
            expansion = dense_mul(&expansion, &power_sum_poly(r, vars));
            value = value.mul(&psums[r]);
        }
        let row: Vec<Rat> = lambdas
            .iter()
            .map(|l| {
                expansion
                    .get(&dominant_exponents(l, vars))
                    .cloned()
                    .unwrap_or_else(Rat::zero)
            })
            .collect();
        mat.push(row);
        rhs.push(value);
    }
    let solved = solve_rational(&mat, &rhs)?;
    Ok(lambdas.into_iter().zip(solved).collect())
}

/// Certifies that `v * m_lambda(A(u_1), ..., A(u_m))` is a Laurent series in
/// `u` for every `lambda` of weight at most `w_max`: the bare symmetric
/// values carry a genuine pole at `u = -1`, and one factor of
/// `v = (1+u)^{m+1} u^{-m}` must clear it exactly.  The conversion errors
/// out on any nonzero remainder.
pub fn symmetric_values_laurent_check(m: usize, w_max: usize) -> Result<()> {
    let order = 3;
    let ring = crate::engine::companion::CompanionRing::new(m, order);
    let psums = ring.power_sums_a(w_max)?;
    let v = crate::algebra::multipoly::MultiPoly::v_expansion(m);
    for w in 1..=w_max {
        for (lambda, val) in monomials_from_power_sums(w, m, &psums)? {
            val.mul_poly(&v).to_laurent().map_err(|e| {
                Error::InternalCheck(format!(
                    "v*m_{lambda} is not Laurent for slope {m}: {e}"
                ))
            })?;
        }
    }
    Ok(())
}
