//! Lagrange inversion and the classical partial-fraction identities for
//! distinct interpolation nodes.

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::rat::rfrac;
use crate::algebra::series::Series;
use crate::error::{Error, Result};

/// Coefficient extraction through Lagrange inversion: for `w = var * phi(w)`
/// with `phi(0)` invertible, returns `[var^n] H(w(var)) = (1/n)[w^{n-1}](H'(w)
/// phi(w)^n)`. `h` and `phi` are series in the unknown `w` (same tag as the
/// target variable); requires `n >= 1` and enough truncation order.
pub fn lagrange_invert(h: &Series, phi: &Series, n: usize) -> Result<MultiPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "Lagrange inversion extracts coefficients for n >= 1".into(),
        ));
    }
    if h.order() < n || phi.order() < n - 1 {
        return Err(Error::InvalidArgument(format!(
            "Lagrange inversion at n={n} needs order >= {n} (h) and {} (phi)",
            n - 1
        )));
    }
    let hp = h.derivative().truncate(n - 1);
    let phin = phi.truncate(n - 1).pow(n);
    let prod = hp.mul(&phin);
    Ok(prod.coeff(n - 1).mul_rat(&rfrac(1, n as i64)))
}

/// Interpolation-node identities for `m+1` pairwise distinct symbols
/// `x_0..x_m` (realized as the markers `p_1..p_{m+1}`), verified as exact
/// polynomial identities after clearing the Vandermonde denominators:
///
/// * `sum_i x_i^m / prod_{j != i}(x_i - x_j) = 1`
/// * `sum_i x_i^{-1} / prod_{j != i}(x_i - x_j) = (-1)^m prod_i x_i^{-1}`
/// * `sum_i x_i^d / prod_{j != i}(x_i - x_j) = 0` for `0 <= d < m`
pub fn node_identities_check(m: usize) -> Result<()> {
    let xs: Vec<MultiPoly> = (1..=m + 1).map(MultiPoly::p).collect();
    let n = m + 1;

    // vandermonde = prod_{j<l}(x_j - x_l); skipping index i leaves
    // prod_{j<l, j!=i, l!=i}(x_j - x_l), and the two are related through
    // prod_{j != i}(x_i - x_j) with sign (-1)^i.
    let vandermonde = {
        let mut acc = MultiPoly::one();
        for j in 0..n {
            for l in (j + 1)..n {
                acc = acc.mul(&xs[j].sub(&xs[l]));
            }
        }
        acc
    };
    let skip = |i: usize| -> MultiPoly {
        let mut acc = MultiPoly::one();
        for j in 0..n {
            for l in (j + 1)..n {
                if j != i && l != i {
                    acc = acc.mul(&xs[j].sub(&xs[l]));
                }
            }
        }
        acc
    };
    let signed_skip = |i: usize| -> MultiPoly {
        let s = skip(i);
        if i % 2 == 1 {
            s.neg()
        } else {
            s
        }
    };

    // Power sums sum_i x_i^d * sign_i * skip_i against d = m (value 1) and
    // d < m (value 0), multiplied through by the Vandermonde.
    for d in 0..=m {
        let mut lhs = MultiPoly::zero();
        for (i, x) in xs.iter().enumerate() {
            lhs = lhs.add(&x.pow(d).mul(&signed_skip(i)));
        }
        let rhs = if d == m {
            vandermonde.clone()
        } else {
            MultiPoly::zero()
        };
        if lhs != rhs {
            return Err(Error::InternalCheck(format!(
                "node identity failed for exponent {d} at m={m}"
            )));
        }
    }

    // Inverse-power identity, multiplied through by prod_i x_i as well:
    // sum_i (prod_{l != i} x_l) sign_i skip_i = (-1)^m * vandermonde.
    let mut lhs = MultiPoly::zero();
    for i in 0..n {
        let mut prod_others = MultiPoly::one();
        for (l, x) in xs.iter().enumerate() {
            if l != i {
                prod_others = prod_others.mul(x);
            }
        }
        lhs = lhs.add(&prod_others.mul(&signed_skip(i)));
    }
    let rhs = if m % 2 == 1 {
        vandermonde.neg()
    } else {
        vandermonde
    };
    if lhs != rhs {
        return Err(Error::InternalCheck(format!(
            "inverse-power node identity failed at m={m}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::multipoly::MultiPoly;
    use crate::algebra::series::SVar;

    #[test]
    fn tree_function_coefficients() {
        // w = z e^w: [z^n] w = n^{n-1}/n!, checked against fixed-point
        // iteration of the defining equation.
        let order = 6;
        // phi(w) = e^w, h(w) = w.
        let mut exp_w = Series::zero(SVar::Z, order);
        let mut fact = 1i64;
        for k in 0..=order {
            if k > 0 {
                fact *= k as i64;
            }
            exp_w.set_coeff(k, MultiPoly::from_rat(rfrac(1, fact)));
        }
        let mut h = Series::zero(SVar::Z, order);
        h.set_coeff(1, MultiPoly::one());

        // Independent fixed-point iteration for w(z).
        let mut w = Series::zero(SVar::Z, order);
        for _ in 0..=order {
            w = exp_w.compose(&w).unwrap().mul_var_pow(1);
        }

        for n in 1..=order {
            let by_lagrange = lagrange_invert(&h, &exp_w, n).unwrap();
            assert_eq!(&by_lagrange, w.coeff(n), "n = {n}");
        }
    }

    #[test]
    fn catalan_from_inversion() {
        // w = z/(1 - w): [z^n] w = Catalan(n-1).
        let order = 7;
        // phi(w) = 1/(1-w) = sum w^k.
        let mut phi = Series::zero(SVar::Z, order);
        for k in 0..=order {
            phi.set_coeff(k, MultiPoly::one());
        }
        let mut h = Series::zero(SVar::Z, order);
        h.set_coeff(1, MultiPoly::one());
        let catalan = [1i64, 1, 2, 5, 14, 42, 132];
        for n in 1..=order {
            let c = lagrange_invert(&h, &phi, n).unwrap();
            assert_eq!(c, MultiPoly::from_int(catalan[n - 1]), "n = {n}");
        }
    }

    #[test]
    fn node_identities_small() {
        for m in 1..=4 {
            node_identities_check(m).unwrap();
        }
    }
}
