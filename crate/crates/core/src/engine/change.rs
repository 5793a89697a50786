//! Change of variables from the interval weight `t` and contact weight `x`
//! to the parametrizing pair `(z, u)`:
//!
//! ```text
//!   t = z * e^{-m L(z)},      x = (1+u) * e^{-m K(u)}.
//! ```
//!
//! A series in `t` with polynomial coefficients in `x` becomes, after
//! substitution and re-expansion, a series in `z` whose coefficients are
//! certified polynomial (not merely Laurent) in `u` — a structural fact
//! about the interval series that this module asserts as a hard check.

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::series::{SVar, Series};
use crate::engine::base::Ctx;
use crate::error::{Error, Result};

/// Substitutes the series `xser` for the variable `x` in `poly`, by Horner
/// evaluation on the `x`-coefficients.
pub fn subst_x(poly: &MultiPoly, xser: &Series) -> Series {
    let order = xser.order();
    let mut acc = Series::zero(xser.var, order);
    for c in poly.x_coeffs().iter().rev() {
        acc = acc
            .mul(xser)
            .add(&Series::from_poly(xser.var, order, c.clone()));
    }
    acc
}

/// Rewrites a series in `t` (coefficients polynomial in `x`) as a series in
/// `z` with coefficients polynomial in `u`, through the same order.
///
/// Errors with an internal-check failure if any resulting coefficient has a
/// negative power of `u`.
pub fn change_of_variables(f: &Series, m: usize) -> Result<Series> {
    assert_eq!(f.var, SVar::T, "input must be a series in t");
    let order = f.order();
    let ctx = Ctx::new(m, order);
    let xser = ctx.x_series()?;
    let tser = ctx.t_series()?;
    let mut tpow = Series::one(SVar::Z, order);
    let mut out = Series::zero(SVar::Z, order);
    for n in 0..=order {
        if !f.coeff(n).is_zero() {
            out = out.add(&subst_x(f.coeff(n), &xser).mul(&tpow));
        }
        if n < order {
            tpow = tpow.mul(&tser);
        }
    }
    for n in 0..=order {
        if out.coeff(n).has_negative_u() {
            return Err(Error::InternalCheck(format!(
                "change of variables produced a negative u-power at order {n}: {}",
                out.coeff(n)
            )));
        }
    }
    Ok(out)
}
