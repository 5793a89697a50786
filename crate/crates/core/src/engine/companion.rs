//! Arithmetic in the companion ring `Q(u)[U] / ((1+U)^{m+1} - v U^m)`, the
//! algebra generated by the `m+1` conjugate roots `u_0 = u, u_1, ..., u_m`
//! of `v(U) = v(u)` where `v = (1+u)^{m+1} u^{-m}`.
//!
//! Ring elements are polynomials of degree at most `m` in the residue class
//! `U`, with coefficients carried as [`USeries`] (series in `z`, Laurent in
//! `u`, denominators restricted to powers of `1+u`).  The modulus has no
//! double root, its elementary symmetric functions are
//! `e_j = (-1)^j C(m+1, j) + v * [j = 1]`, and `prod_i (1 + u_i) = v`; these
//! drive Newton's identities for the power sums used by the trace.  Both
//! `U` and `1+U` are invertible (the constant terms `P(0) = 1` and
//! `P(-1) = -(-1)^m v` are units), which lets `A(U) = U (1+U)^{-1} e^{-K(U)}`
//! be formed entirely in-ring.

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::rat::{binomial, rfrac, Rat};
use crate::algebra::series::{SVar, Series};
use crate::algebra::useries::USeries;
use crate::engine::base::Ctx;
use crate::error::{Error, Result};

/// An element `sum_j comps[j] U^j` with `comps.len() == m + 1`.
#[derive(Clone, Debug)]
pub struct Elem {
    pub comps: Vec<USeries>,
}

impl Elem {
    pub fn add(&self, other: &Elem) -> Elem {
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.add(b))
            .collect();
        Elem { comps }
    }

    pub fn sub(&self, other: &Elem) -> Elem {
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(a, b)| a.sub(b))
            .collect();
        Elem { comps }
    }

    pub fn neg(&self) -> Elem {
        Elem {
            comps: self.comps.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Elem {
        Elem {
            comps: self.comps.iter().map(|c| c.mul_poly(p)).collect(),
        }
    }

    pub fn mul_us(&self, s: &USeries) -> Elem {
        Elem {
            comps: self.comps.iter().map(|c| c.mul(s)).collect(),
        }
    }

    pub fn mul_rat(&self, r: &Rat) -> Elem {
        Elem {
            comps: self.comps.iter().map(|c| c.mul_rat(r)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }
}

pub struct CompanionRing {
    m: usize,
    order: usize,
    /// `c_0..c_m` with modulus `P(U) = U^{m+1} + sum_j c_j U^j`.
    modulus: Vec<MultiPoly>,
    /// Elementary symmetric functions `e_0..e_{m+1}` of the roots.
    elementary: Vec<MultiPoly>,
    /// Power sums `pi_0..pi_{2m+2}` of the roots, `v` expanded in `u`.
    psums: Vec<MultiPoly>,
}

impl CompanionRing {
    pub fn new(m: usize, order: usize) -> CompanionRing {
        assert!(m >= 1, "slope parameter must be positive");
        let v = MultiPoly::v_expansion(m);
        let mut modulus = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let mut c = MultiPoly::from_rat(Rat::from_integer(binomial(
                m as i64 + 1,
                j as i64,
            )));
            if j == m {
                c = c.sub(&v);
            }
            modulus.push(c);
        }
        let mut elementary = Vec::with_capacity(m + 2);
        elementary.push(MultiPoly::one());
        for j in 1..=m + 1 {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let mut e = MultiPoly::from_rat(
                Rat::from_integer(binomial(m as i64 + 1, j as i64) * sign),
            );
            if j == 1 {
                e = e.add(&v);
            }
            elementary.push(e);
        }
        // Newton's identities for m+1 variables.
        let cap = 2 * (m + 1);
        let mut psums = Vec::with_capacity(cap + 1);
        psums.push(MultiPoly::from_int(m as i64 + 1));
        for r in 1..=cap {
            let mut p = MultiPoly::zero();
            let top = r.min(m + 1);
            for i in 1..top.min(r) {
                let term = elementary[i].mul(&psums[r - i]);
                p = if i % 2 == 1 { p.add(&term) } else { p.sub(&term) };
            }
            if r <= m + 1 {
                let term = elementary[r].mul_rat(&rfrac(r as i64, 1));
                p = if r % 2 == 1 { p.add(&term) } else { p.sub(&term) };
            } else if top == m + 1 {
                let term = elementary[m + 1].mul(&psums[r - m - 1]);
                p = if (m + 1) % 2 == 1 {
                    p.add(&term)
                } else {
                    p.sub(&term)
                };
            }
            psums.push(p);
        }
        CompanionRing {
            m,
            order,
            modulus,
            elementary,
            psums,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elementary(&self, j: usize) -> &MultiPoly {
        &self.elementary[j]
    }

    /// `pi_r = sum_{i=0..m} u_i^r` as a Laurent polynomial in `u`.
    pub fn power_sum_roots(&self, r: usize) -> &MultiPoly {
        &self.psums[r]
    }

    pub fn zero(&self) -> Elem {
        Elem {
            comps: vec![USeries::zero(SVar::Z, self.order); self.m + 1],
        }
    }

    pub fn one(&self) -> Elem {
        let mut e = self.zero();
        e.comps[0] = USeries::one(SVar::Z, self.order);
        e
    }

    /// The residue class of `U`.
    pub fn gen(&self) -> Elem {
        let mut e = self.zero();
        e.comps[1] = USeries::one(SVar::Z, self.order);
        e
    }

    pub fn scalar(&self, p: &MultiPoly) -> Elem {
        let mut e = self.zero();
        e.comps[0] = USeries::from_poly(SVar::Z, self.order, p.clone());
        e
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let m = self.m;
        let mut buf = vec![USeries::zero(SVar::Z, self.order); 2 * m + 1];
        for i in 0..=m {
            if a.comps[i].is_zero() {
                continue;
            }
            for j in 0..=m {
                if b.comps[j].is_zero() {
                    continue;
                }
                buf[i + j] = buf[i + j].add(&a.comps[i].mul(&b.comps[j]));
            }
        }
        // reduce modulo P: U^d = -sum_j c_j U^{d-m-1+j}
        for d in (m + 1..=2 * m).rev() {
            if buf[d].is_zero() {
                continue;
            }
            let lead = buf[d].clone();
            buf[d] = USeries::zero(SVar::Z, self.order);
            for j in 0..=m {
                let t = lead.mul_poly(&self.modulus[j]);
                buf[d - m - 1 + j] = buf[d - m - 1 + j].sub(&t);
            }
        }
        Elem {
            comps: buf.into_iter().take(m + 1).collect(),
        }
    }

    pub fn pow(&self, e: &Elem, k: usize) -> Elem {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, e);
        }
        acc
    }

    /// `U^{-1} = -(U^m + sum_{j=1..m} c_j U^{j-1})`, valid since `P(0) = 1`.
    pub fn u_inverse(&self) -> Elem {
        let mut e = self.zero();
        e.comps[self.m] = USeries::one(SVar::Z, self.order).neg();
        for j in 1..=self.m {
            e.comps[j - 1] = USeries::from_poly(
                SVar::Z,
                self.order,
                self.modulus[j].neg(),
            );
        }
        e
    }

    /// `(1+U)^{-1}`, from the synthetic division `P(U) = (U+1) S(U) + P(-1)`
    /// with `P(-1) = -(-1)^m v`: the inverse is `(-1)^m S(U) / v`.
    pub fn one_plus_u_inverse(&self) -> Elem {
        let m = self.m;
        // q_j: coefficients of S, degree m; synthetic division at root -1
        let mut q = vec![MultiPoly::zero(); m + 1];
        q[m] = MultiPoly::one();
        for j in (0..m).rev() {
            q[j] = self.modulus[j + 1].sub(&q[j + 1]);
        }
        let sign = if m.is_multiple_of(2) { 1 } else { -1 };
        let comps = q
            .into_iter()
            .map(|c| {
                USeries::from_poly(SVar::Z, self.order, c)
                    .mul_rat(&rfrac(sign, 1))
                    .mul_poly(&MultiPoly::u_pow(m as i32))
                    .div_one_plus_u(m as u32 + 1)
            })
            .collect();
        Elem { comps }
    }

    /// Substitutes `U` for `u` in a Laurent polynomial; negative powers go
    /// through `U^{-1}`.
    pub fn from_u_poly(&self, p: &MultiPoly) -> Elem {
        let coeffs = p.u_coeffs();
        if coeffs.is_empty() {
            return self.zero();
        }
        let max_pos = coeffs.keys().max().map_or(0, |e| (*e).max(0)) as usize;
        let max_neg = coeffs.keys().min().map_or(0, |e| (-*e).max(0)) as usize;
        let mut upows = vec![self.one()];
        for _ in 1..=max_pos {
            let next = self.mul(upows.last().unwrap(), &self.gen());
            upows.push(next);
        }
        let uinv = self.u_inverse();
        let mut dpows = vec![self.one()];
        for _ in 1..=max_neg {
            let next = self.mul(dpows.last().unwrap(), &uinv);
            dpows.push(next);
        }
        let mut out = self.zero();
        for (e, c) in coeffs {
            let base = if e >= 0 {
                &upows[e as usize]
            } else {
                &dpows[(-e) as usize]
            };
            out = out.add(&base.mul_poly(&c));
        }
        out
    }

    /// Evaluates a series with Laurent-polynomial coefficients at `u = U`.
    pub fn eval_at_u(&self, s: &Series) -> Elem {
        assert_eq!(s.var, SVar::Z);
        let mut out = self.zero();
        for n in 0..=s.order().min(self.order) {
            if s.coeff(n).is_zero() {
                continue;
            }
            let e = self.from_u_poly(s.coeff(n));
            for j in 0..=self.m {
                let mut shifted = e.comps[j].clone();
                shifted.num = shifted.num.mul_var_pow(n);
                out.comps[j] = out.comps[j].add(&shifted);
            }
        }
        out
    }

    /// Exponential of an element with `z`-valuation at least 1.
    pub fn exp(&self, e: &Elem) -> Result<Elem> {
        for c in &e.comps {
            if !c.is_zero() && c.num.valuation() == Some(0) {
                return Err(Error::InvalidArgument(
                    "exponential needs a positive z-valuation".into(),
                ));
            }
        }
        let mut acc = self.one();
        let mut term = self.one();
        for k in 1..=self.order {
            term = self.mul(&term, e).mul_rat(&rfrac(1, k as i64));
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// `trace(f(U)) = sum_{i=0..m} f(u_i)`, via the root power sums.
    pub fn trace(&self, e: &Elem) -> USeries {
        let mut out = USeries::zero(SVar::Z, self.order);
        for j in 0..=self.m {
            out = out.add(&e.comps[j].mul_poly(&self.psums[j]));
        }
        out
    }

    /// Evaluation of the canonical representative at `U = -1`.
    pub fn eval_minus_one(&self, e: &Elem) -> USeries {
        let mut out = USeries::zero(SVar::Z, self.order);
        for j in 0..=self.m {
            if j % 2 == 0 {
                out = out.add(&e.comps[j]);
            } else {
                out = out.sub(&e.comps[j]);
            }
        }
        out
    }

    /// `A(U) = U (1+U)^{-1} e^{-K(U)}` built in-ring.
    pub fn a_elem(&self) -> Result<Elem> {
        let ctx = Ctx::new(self.m, self.order);
        let ku = self.eval_at_u(&ctx.k_series());
        let ek = self.exp(&ku.neg())?;
        Ok(self.mul(&self.mul(&self.gen(), &self.one_plus_u_inverse()), &ek))
    }

    /// Power sums of `A(u_1), ..., A(u_m)` (the root `u_0 = u` excluded):
    /// entry `r` is `trace(A(U)^r) - A(u)^r`, for `r = 0..=r_max`.
    pub fn power_sums_a(&self, r_max: usize) -> Result<Vec<USeries>> {
        let ctx = Ctx::new(self.m, self.order);
        let a_scalar = ctx.a_series()?;
        let a = self.a_elem()?;
        let mut out = Vec::with_capacity(r_max + 1);
        let mut apow = self.one();
        let mut spow = USeries::one(SVar::Z, self.order);
        for r in 0..=r_max {
            if r > 0 {
                apow = self.mul(&apow, &a);
                spow = spow.mul(&a_scalar);
            }
            out.push(self.trace(&apow).sub(&spow));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn us_eq(a: &USeries, b: &USeries) -> bool {
        a.sub(b).is_zero()
    }

    #[test]
    fn power_sums_match_direct_roots_for_slope_one() {
        // roots are u and 1/u: pi_r = u^r + u^{-r}
        let ring = CompanionRing::new(1, 3);
        for r in 1..=4 {
            let expect = MultiPoly::u_pow(r as i32).add(&MultiPoly::u_pow(-(r as i32)));
            assert_eq!(*ring.power_sum_roots(r), expect, "r={r}");
        }
    }

    #[test]
    fn first_power_sum_and_product_identities() {
        for m in 1..=3 {
            let ring = CompanionRing::new(m, 2);
            let v = MultiPoly::v_expansion(m);
            let expect =
                v.sub(&MultiPoly::from_int(m as i64 + 1));
            assert_eq!(*ring.power_sum_roots(1), expect, "m={m}");
            // prod (1 + u_i) = sum_j e_j = v
            let mut total = MultiPoly::zero();
            for j in 0..=m + 1 {
                total = total.add(ring.elementary(j));
            }
            assert_eq!(total, v, "m={m}");
        }
    }

    #[test]
    fn reduced_elementary_functions_are_explicit_in_inverse_u() {
        // e_k of the conjugate roots u_1..u_m (u_0 = u removed), by the
        // triangular relation e_k(all) = e_k(rest) + u e_{k-1}(rest).
        for m in 1..=3usize {
            let ring = CompanionRing::new(m, 2);
            let u = MultiPoly::u_pow(1);
            let mut reduced = vec![MultiPoly::one()];
            for k in 1..=m {
                let r = ring.elementary(k).sub(&u.mul(&reduced[k - 1]));
                reduced.push(r);
            }
            for j in 0..m {
                let mut expect = MultiPoly::zero();
                for p in 0..=j {
                    expect = expect.add(
                        &MultiPoly::u_pow(p as i32 - j as i32 - 1).mul_rat(
                            &Rat::from_integer(binomial(m as i64 + 1, p as i64)),
                        ),
                    );
                }
                if (m - j) % 2 == 0 {
                    expect = expect.neg();
                }
                assert_eq!(reduced[m - j], expect, "m={m} j={j}");
            }
        }
    }

    #[test]
    fn inverses_multiply_to_one() {
        for m in 1..=3 {
            let ring = CompanionRing::new(m, 2);
            let u = ring.gen();
            let opu = ring.one().add(&u);
            assert!(ring
                .mul(&u, &ring.u_inverse())
                .sub(&ring.one())
                .is_zero());
            assert!(ring
                .mul(&opu, &ring.one_plus_u_inverse())
                .sub(&ring.one())
                .is_zero());
        }
    }

    #[test]
    fn trace_for_slope_one_is_substitution_at_u_and_inverse_u() {
        let ring = CompanionRing::new(1, 4);
        let sample = MultiPoly::u_pow(2)
            .add(&MultiPoly::u_pow(-1).mul(&MultiPoly::p(1)))
            .add(&MultiPoly::from_int(3));
        let elem = ring.from_u_poly(&sample);
        let direct = sample.add(&sample.subst_u_inverse());
        let traced = ring.trace(&elem).to_laurent().unwrap();
        assert_eq!(*traced.coeff(0), direct);
    }

    #[test]
    fn trace_of_a_matches_scalar_values_for_slope_one() {
        let ring = CompanionRing::new(1, 4);
        let ctx = Ctx::new(1, 4);
        let a_u = ctx.a_series().unwrap();
        // A(1/u) = e^{-K(1/u)} / (1+u)
        let a_ubar = USeries::from_series(
            ctx.k_series_ubar().neg().exp().unwrap(),
        )
        .div_one_plus_u(1);
        let lhs = ring.trace(&ring.a_elem().unwrap());
        assert!(us_eq(&lhs, &a_u.add(&a_ubar)));
    }

    #[test]
    fn sum_of_k_at_all_roots_completes_v() {
        // L + sum_i K(u_i) = V(v)
        for m in 1..=2 {
            let ring = CompanionRing::new(m, 4);
            let ctx = Ctx::new(m, 4);
            let lhs = ring
                .trace(&ring.eval_at_u(&ctx.k_series()))
                .to_laurent()
                .unwrap()
                .add(&ctx.l_series());
            assert_eq!(lhs, ctx.v_series(), "m={m}");
        }
    }

    #[test]
    fn a_power_sums_for_slope_one_reduce_to_inverse_substitution() {
        let ring = CompanionRing::new(1, 4);
        let ctx = Ctx::new(1, 4);
        let sums = ring.power_sums_a(2).unwrap();
        // for m=1 the only conjugate is 1/u, so the r-th sum is A(1/u)^r
        let a_ubar = USeries::from_series(
            ctx.k_series_ubar().neg().exp().unwrap(),
        )
        .div_one_plus_u(1);
        assert!(us_eq(&sums[0], &USeries::one(SVar::Z, 4)));
        assert!(us_eq(&sums[1], &a_ubar));
        assert!(us_eq(&sums[2], &a_ubar.mul(&a_ubar)));
    }
}
