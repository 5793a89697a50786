//! Iterative solution of the defining equation for the refined generating
//! function `F(t; x, y, p)` of labelled intervals.
//!
//! The series is characterised by `F(x, 0) = x` together with
//!
//! ```text
//!   dF/dy = sum_{k >= 1} (p_k / k) * B^k ( F(x, y) ),
//!   B(S)  = t * x * (F(x,1) * delta)^m (S),
//! ```
//!
//! where `delta` is the divided difference `S(x) -> (S(x) - S(1)) / (x - 1)`.
//! Every application of `B` carries an explicit factor `t`, so the `t^n`
//! coefficient only involves lower-order data: the solver fills one order at
//! a time and integrates in `y` from the initial condition.  The same driver
//! with the `q`-divided difference `S(x) -> (S(qx) - S(1)) / (qx - 1)` and the
//! weight sequence `p = (1, 0, 0, ...)` yields the `q`-refined series whose
//! coefficients count intervals by the length of a longest chain.

use crate::algebra::multipoly::{Mono, MultiPoly};
use crate::algebra::rat::{rfrac, Rat};
use crate::algebra::series::{SVar, Series};
use crate::formulas::htilde_poly;
use num::One;

/// Divided difference in `x`: maps `x^i` to `1 + x + ... + x^{i-1}`.
pub fn delta(s: &MultiPoly) -> MultiPoly {
    let coeffs = s.x_coeffs();
    let mut out = MultiPoly::zero();
    let mut ladder = MultiPoly::one();
    for (i, c) in coeffs.iter().enumerate().skip(1) {
        if !c.is_zero() {
            out = out.add(&c.mul(&ladder));
        }
        let step = MultiPoly::monomial(
            Mono {
                x: i as u32,
                ..Mono::one()
            },
            Rat::one(),
        );
        ladder = ladder.add(&step);
    }
    out
}

/// `q`-divided difference in `x`: maps `x^i` to `1 + qx + ... + (qx)^{i-1}`.
pub fn delta_q(s: &MultiPoly) -> MultiPoly {
    let coeffs = s.x_coeffs();
    let mut out = MultiPoly::zero();
    let mut ladder = MultiPoly::one();
    for (i, c) in coeffs.iter().enumerate().skip(1) {
        if !c.is_zero() {
            out = out.add(&c.mul(&ladder));
        }
        let step = MultiPoly::monomial(
            Mono {
                x: i as u32,
                q: i as u32,
                ..Mono::one()
            },
            Rat::one(),
        );
        ladder = ladder.add(&step);
    }
    out
}

/// Divided difference in `u`, defined on Laurent polynomials: maps `u^i` to
/// `1 + u + ... + u^{i-1}` for `i >= 0` and to `-(u^i + ... + u^{-1})` for
/// `i < 0`.
pub fn delta_u(s: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (e, c) in s.u_coeffs() {
        if e > 0 {
            for j in 0..e {
                out = out.add(&c.mul(&MultiPoly::u_pow(j)));
            }
        } else if e < 0 {
            for j in e..0 {
                out = out.sub(&c.mul(&MultiPoly::u_pow(j)));
            }
        }
    }
    out
}

/// One application of `B = t * x * (F1 * d)^m` to the series `s`.
fn apply_b(
    m: usize,
    f1: &Series,
    s: &Series,
    d: &dyn Fn(&MultiPoly) -> MultiPoly,
) -> Series {
    let mut cur = s.clone();
    for _ in 0..m {
        cur = f1.mul(&cur.map(d));
    }
    cur.mul_poly(&MultiPoly::x()).mul_var_pow(1)
}

/// Order-by-order solution of `dF/dy = sum_k w_k B^k F`, `F(x,0) = x`.
///
/// `weights[k]` multiplies the `k`-fold application; index 0 is ignored.
/// Filling `t^n` only reads orders `< n` of `F` and `F(x,1)` because each
/// `B` shifts by `t`, so the zero placeholder at order `n` never feeds back.
fn solve(
    m: usize,
    order: usize,
    d: &dyn Fn(&MultiPoly) -> MultiPoly,
    weights: &[MultiPoly],
) -> Series {
    assert!(m >= 1, "slope parameter must be positive");
    let mut f = Series::from_poly(SVar::T, order, MultiPoly::x());
    for n in 1..=order {
        let f1 = f.map(|c| c.subst_y_one());
        let mut cur = f.clone();
        let mut rhs = MultiPoly::zero();
        for k in 1..=n {
            cur = apply_b(m, &f1, &cur, d);
            if !weights[k].is_zero() {
                rhs = rhs.add(&cur.coeff(n).mul(&weights[k]));
            }
        }
        f.set_coeff(n, rhs.y_antiderivative());
    }
    f
}

/// The refined series `F(t; x, y, p)` through `t^order`.
///
/// `n! * [t^n] F` is the weighted count of labelled intervals of size `n`:
/// `x` marks contacts of the lower path, `y` the first-ascent statistic,
/// `p_k` the cycle type of the acting permutation.
pub fn iterate(m: usize, order: usize) -> Series {
    let weights: Vec<MultiPoly> = (0..=order)
        .map(|k| {
            if k == 0 {
                MultiPoly::zero()
            } else {
                MultiPoly::p(k).mul_rat(&rfrac(1, k as i64))
            }
        })
        .collect();
    solve(m, order, &delta, &weights)
}

/// The `q`-refined series: `p` specialised to `(1, 0, 0, ...)`, the divided
/// difference replaced by its `q`-analogue.  At `x = y = 1` the coefficient
/// `n! * [t^n]` counts labelled intervals by `q^(longest chain length)`.
pub fn q_iterate(m: usize, order: usize) -> Series {
    let mut weights = vec![MultiPoly::zero(); order + 1];
    if order >= 1 {
        weights[1] = MultiPoly::one();
    }
    solve(m, order, &delta_q, &weights)
}

/// Alternative form of the same series: `F = sum_{k>=0} htilde_k(y) B^k(x)`
/// with `B` built from the self-consistent `F(x,1)`.  Terms with `k > order`
/// have `t`-valuation `> order` and are dropped.  Used to cross-check
/// [`iterate`].
pub fn sum_form(m: usize, order: usize) -> Series {
    assert!(m >= 1, "slope parameter must be positive");
    let x = Series::from_poly(SVar::T, order, MultiPoly::x());
    let mut f = x.clone();
    // Each pass fixes one more t-order of F(x,1); order+1 passes suffice.
    for _ in 0..=order {
        let f1 = f.map(|c| c.subst_y_one());
        let mut acc = x.clone();
        let mut cur = x.clone();
        for k in 1..=order {
            cur = apply_b(m, &f1, &cur, &delta);
            acc = acc.add(&cur.mul_poly(&htilde_poly(k)));
        }
        f = acc;
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::brute_frobenius;
    use crate::algebra::rat::factorial;
    use crate::combinatorics::labelling::labelling_count;
    use crate::lattice::TamariLattice;

    fn x_pow(e: u32) -> MultiPoly {
        MultiPoly::monomial(
            Mono {
                x: e,
                ..Mono::one()
            },
            Rat::one(),
        )
    }

    #[test]
    fn divided_differences_on_monomials() {
        let x2 = x_pow(2);
        let expect = MultiPoly::x().add(&MultiPoly::one());
        assert_eq!(delta(&x2), expect);
        assert_eq!(delta(&MultiPoly::one()), MultiPoly::zero());

        let qx_plus_1 = MultiPoly::q().mul(&MultiPoly::x()).add(&MultiPoly::one());
        assert_eq!(delta_q(&x2), qx_plus_1);
        assert_eq!(delta_q(&x2).subst_q_one(), delta(&x2));

        assert_eq!(
            delta_u(&MultiPoly::u_pow(2)),
            MultiPoly::one().add(&MultiPoly::u_pow(1))
        );
        assert_eq!(delta_u(&MultiPoly::u_pow(-1)), MultiPoly::u_pow(-1).neg());
        assert_eq!(delta_u(&MultiPoly::one()), MultiPoly::zero());
    }

    #[test]
    fn smallest_coefficients_frozen() {
        let f = iterate(1, 2);
        assert_eq!(*f.coeff(0), MultiPoly::x());
        let t1 = x_pow(2).mul(&MultiPoly::y()).mul(&MultiPoly::p(1));
        assert_eq!(*f.coeff(1), t1);
        // 2! * [t^2] = 2x^3 y p1^2 + (x^2 + x^3)(y^2 p1^2 + y p2)
        let y = MultiPoly::y();
        let p1 = MultiPoly::p(1);
        let p2 = MultiPoly::p(2);
        let expected = x_pow(3)
            .mul(&y)
            .mul(&p1.pow(2))
            .mul_rat(&rfrac(2, 1))
            .add(
                &x_pow(2)
                    .add(&x_pow(3))
                    .mul(&y.pow(2).mul(&p1.pow(2)).add(&y.mul(&p2))),
            )
            .mul_rat(&rfrac(1, 2));
        assert_eq!(*f.coeff(2), expected);
    }

    #[test]
    fn matches_brute_force_enumeration() {
        for (m, n_max) in [(1usize, 4usize), (2, 3)] {
            let f = iterate(m, n_max);
            for n in 0..=n_max {
                let lat = TamariLattice::build(m, n, None).unwrap();
                let brute = brute_frobenius(&lat).unwrap();
                let scaled = f.coeff(n).mul_rat(&Rat::from_integer(factorial(n)));
                assert_eq!(scaled, brute, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn sum_form_agrees_with_integration() {
        assert_eq!(sum_form(1, 4), iterate(1, 4));
        assert_eq!(sum_form(2, 3), iterate(2, 3));
    }

    #[test]
    fn q_series_at_q_one_is_parking_specialisation() {
        for (m, order) in [(1usize, 3usize), (2, 3)] {
            let plain = iterate(m, order).map(|c| c.specialize_p_parking());
            let q = q_iterate(m, order).map(|c| c.subst_q_one());
            assert_eq!(plain, q, "m={m}");
        }
    }

    fn q_oracle(lat: &TamariLattice) -> MultiPoly {
        let mut total = MultiPoly::zero();
        for (i, j) in lat.intervals() {
            let chain = lat.longest_chain(i, j).unwrap();
            let labs = labelling_count(lat.path(j));
            let mono = Mono {
                q: chain as u32,
                ..Mono::one()
            };
            total = total.add(&MultiPoly::monomial(mono, Rat::from_integer(labs)));
        }
        total
    }

    #[test]
    fn q_coefficients_count_intervals_by_longest_chain() {
        for (m, n_max) in [(1usize, 4usize), (2, 3)] {
            let f = q_iterate(m, n_max);
            for n in 1..=n_max {
                let lat = TamariLattice::build(m, n, None).unwrap();
                let at_ones = f
                    .coeff(n)
                    .subst_x_one()
                    .subst_y_one()
                    .mul_rat(&Rat::from_integer(factorial(n)));
                assert_eq!(at_ones, q_oracle(&lat), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn q_polynomial_smallest_case_frozen() {
        // Size 2, slope 1: three intervals, one of them a cover relation.
        let f = q_iterate(1, 2);
        let val = f
            .coeff(2)
            .subst_x_one()
            .subst_y_one()
            .mul_rat(&rfrac(2, 1));
        let expected = MultiPoly::from_int(3).add(&MultiPoly::q());
        assert_eq!(val, expected);
    }
}
