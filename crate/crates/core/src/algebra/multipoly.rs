//! Sparse multivariate polynomials over the exact rationals.
//!
//! The variable set is fixed by the application: `u` (Laurent — its exponent
//! may be negative), the ordinary variables `x`, `y`, `v`, `q`, and an
//! unbounded family `p1, p2, ...` of power-sum markers. Monomials are stored
//! in a `BTreeMap` keyed by exponent vectors, so every polynomial has a single
//! canonical representation: no zero coefficients, no trailing zero `p`
//! exponents, deterministic term order.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::algebra::rat::{rat_pow, rat_to_string, rint, Rat};
use crate::error::{Error, Result};

/// Exponent vector of one monomial. `p[i]` is the exponent of `p_{i+1}`;
/// trailing zeros are trimmed so that equal monomials compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Mono {
    pub u: i32,
    pub x: u32,
    pub y: u32,
    pub v: u32,
    pub q: u32,
    pub p: Vec<u32>,
}

impl Mono {
    pub fn one() -> Self {
        Mono::default()
    }

    pub fn is_one(&self) -> bool {
        self == &Mono::default()
    }

    fn trim(mut self) -> Self {
        while self.p.last() == Some(&0) {
            self.p.pop();
        }
        self
    }

    fn mul(&self, other: &Mono) -> Mono {
        let mut p = vec![0u32; self.p.len().max(other.p.len())];
        for (i, e) in self.p.iter().enumerate() {
            p[i] += e;
        }
        for (i, e) in other.p.iter().enumerate() {
            p[i] += e;
        }
        Mono {
            u: self.u + other.u,
            x: self.x + other.x,
            y: self.y + other.y,
            v: self.v + other.v,
            q: self.q + other.q,
            p,
        }
        .trim()
    }

    /// Total degree in the `p` variables weighted by their index, i.e. the
    /// symmetric-function weight of the `p` part.
    pub fn p_weight(&self) -> usize {
        self.p
            .iter()
            .enumerate()
            .map(|(i, e)| (i + 1) * *e as usize)
            .sum()
    }

    fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let var = |name: &str, e: i64| -> String {
            if e == 1 {
                name.to_string()
            } else {
                format!("{name}^{e}")
            }
        };
        if self.u != 0 {
            parts.push(var("u", self.u as i64));
        }
        if self.x != 0 {
            parts.push(var("x", self.x as i64));
        }
        if self.y != 0 {
            parts.push(var("y", self.y as i64));
        }
        if self.v != 0 {
            parts.push(var("v", self.v as i64));
        }
        if self.q != 0 {
            parts.push(var("q", self.q as i64));
        }
        for (i, e) in self.p.iter().enumerate() {
            if *e != 0 {
                parts.push(var(&format!("p{}", i + 1), *e as i64));
            }
        }
        parts.join("*")
    }
}

/// A sparse multivariate polynomial, Laurent in `u`, polynomial in the rest.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Mono, Rat>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(Mono::one(), r);
        }
        MultiPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        MultiPoly::from_rat(rint(n))
    }

    pub fn monomial(mono: Mono, coeff: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono.trim(), coeff);
        }
        MultiPoly { terms }
    }

    /// `u^e` (any integer exponent).
    pub fn u_pow(e: i32) -> Self {
        MultiPoly::monomial(
            Mono {
                u: e,
                ..Mono::default()
            },
            Rat::one(),
        )
    }

    pub fn x() -> Self {
        MultiPoly::monomial(
            Mono {
                x: 1,
                ..Mono::default()
            },
            Rat::one(),
        )
    }

    pub fn y() -> Self {
        MultiPoly::monomial(
            Mono {
                y: 1,
                ..Mono::default()
            },
            Rat::one(),
        )
    }

    pub fn v() -> Self {
        MultiPoly::monomial(
            Mono {
                v: 1,
                ..Mono::default()
            },
            Rat::one(),
        )
    }

    pub fn q() -> Self {
        MultiPoly::monomial(
            Mono {
                q: 1,
                ..Mono::default()
            },
            Rat::one(),
        )
    }

    /// The power-sum marker `p_k`, `k >= 1`.
    pub fn p(k: usize) -> Self {
        assert!(k >= 1, "p-variables are indexed from 1");
        let mut p = vec![0u32; k];
        p[k - 1] = 1;
        MultiPoly::monomial(
            Mono {
                p,
                ..Mono::default()
            },
            Rat::one(),
        )
    }

    /// `1 + u` as a polynomial.
    pub fn one_plus_u() -> Self {
        MultiPoly::one().add(&MultiPoly::u_pow(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    /// The coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rat {
        self.terms.get(&Mono::one()).cloned().unwrap_or_else(Rat::zero)
    }

    /// Interprets the polynomial as a rational constant, erring otherwise.
    pub fn as_rat(&self) -> Result<Rat> {
        if self.is_zero() {
            return Ok(Rat::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Mono::one()) {
                return Ok(c.clone());
            }
        }
        Err(Error::InvalidArgument(format!(
            "expected a constant polynomial, found {self}"
        )))
    }

    fn insert_add(terms: &mut BTreeMap<Mono, Rat>, mono: Mono, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_add(&mut terms, m.clone(), c.clone());
        }
        MultiPoly { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                Self::insert_add(&mut terms, m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        MultiPoly { terms }
    }

    pub fn mul_rat(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * r.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut base = self.clone();
        let mut e = e;
        let mut acc = MultiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse when the polynomial is a single monomial whose
    /// only variable is the Laurent variable `u`.
    pub fn inv_unit(&self) -> Result<Self> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.x == 0 && m.y == 0 && m.v == 0 && m.q == 0 && m.p.is_empty() {
                let inv = rat_pow(c, -1)?;
                return Ok(MultiPoly::monomial(
                    Mono {
                        u: -m.u,
                        ..Mono::default()
                    },
                    inv,
                ));
            }
        }
        Err(Error::InvalidArgument(format!(
            "not a unit in the Laurent ring: {self}"
        )))
    }

    // ---- u-structure -----------------------------------------------------

    pub fn u_min_exp(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.u).min()
    }

    pub fn u_max_exp(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.u).max()
    }

    /// Splits off the terms whose `u`-exponent satisfies the predicate.
    fn u_filter(&self, keep: impl Fn(i32) -> bool) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m.u))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `[u^>]`: the terms with positive `u`-exponent.
    pub fn u_pos_part(&self) -> Self {
        self.u_filter(|e| e > 0)
    }

    /// `[u^>=]`: the terms with nonnegative `u`-exponent.
    pub fn u_nonneg_part(&self) -> Self {
        self.u_filter(|e| e >= 0)
    }

    /// `[u^<]`: the terms with negative `u`-exponent.
    pub fn u_neg_part(&self) -> Self {
        self.u_filter(|e| e < 0)
    }

    /// `[u^0]`: the coefficient of `u^0`, a polynomial free of `u`.
    pub fn u_coeff0(&self) -> Self {
        self.u_filter(|e| e == 0)
    }

    /// The coefficient of `u^e` as a polynomial free of `u`.
    pub fn u_coeff(&self, e: i32) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.u == e)
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.u = 0;
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Decomposition by `u`-exponent; each value is free of `u`.
    pub fn u_coeffs(&self) -> BTreeMap<i32, MultiPoly> {
        let mut out: BTreeMap<i32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut stripped = m.clone();
            stripped.u = 0;
            Self::insert_add(&mut out.entry(m.u).or_default().terms, stripped, c.clone());
        }
        out
    }

    /// Substitutes `u -> 1/u` (negates every `u`-exponent).
    pub fn subst_u_inverse(&self) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.u = -m.u;
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Multiplies by `u^k` (exact for any integer `k`: `u` is invertible).
    pub fn mul_u_pow(&self, k: i32) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.u += k;
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Evaluates at `u = 0`; errors when a negative `u`-exponent is present.
    pub fn eval_u_zero(&self) -> Result<Self> {
        if let Some(min) = self.u_min_exp() {
            if min < 0 {
                return Err(Error::InvalidArgument(format!(
                    "evaluation at u=0 of a polynomial with a pole: {self}"
                )));
            }
        }
        Ok(self.u_coeff(0))
    }

    /// Evaluates at `u = -1`.
    pub fn eval_u_neg_one(&self) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut stripped = m.clone();
            stripped.u = 0;
            let sign = if m.u.rem_euclid(2) == 0 {
                c.clone()
            } else {
                -c.clone()
            };
            Self::insert_add(&mut out.terms, stripped, sign);
        }
        out
    }

    /// Exact division by `(1+u)^k`; errors on a nonzero remainder.
    pub fn div_exact_one_plus_u(&self, k: u32) -> Result<Self> {
        let mut cur = self.clone();
        for _ in 0..k {
            cur = cur.div_once_one_plus_u()?;
        }
        Ok(cur)
    }

    fn div_once_one_plus_u(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(MultiPoly::zero());
        }
        // Shift to a genuine polynomial in u, divide, shift back.
        let shift = self.u_min_exp().unwrap().min(0);
        let shifted = self.mul_u_pow(-shift);
        let coeffs = shifted.u_coeffs();
        let deg = *coeffs.keys().max().unwrap();
        // Synthetic division by (u + 1), highest degree first.
        let mut quotient: BTreeMap<i32, MultiPoly> = BTreeMap::new();
        let mut carry = MultiPoly::zero();
        for e in (0..=deg).rev() {
            let c = coeffs.get(&e).cloned().unwrap_or_default().add(&carry.neg());
            if e == 0 {
                if !c.is_zero() {
                    return Err(Error::InexactDivision(format!(
                        "(1+u) does not divide {self}"
                    )));
                }
            } else {
                carry = c.clone();
                if !c.is_zero() {
                    quotient.insert(e - 1, c);
                }
            }
        }
        let mut out = MultiPoly::zero();
        for (e, c) in quotient {
            out = out.add(&c.mul(&MultiPoly::u_pow(e + shift)));
        }
        Ok(out)
    }

    // ---- other variables -------------------------------------------------

    pub fn x_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.x).max().unwrap_or(0)
    }

    pub fn y_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.y).max().unwrap_or(0)
    }

    /// Coefficients by `x`-degree; entries are free of `x`.
    pub fn x_coeffs(&self) -> Vec<MultiPoly> {
        let deg = self.x_degree() as usize;
        let mut out = vec![MultiPoly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let mut stripped = m.clone();
            stripped.x = 0;
            Self::insert_add(&mut out[m.x as usize].terms, stripped, c.clone());
        }
        out
    }

    pub fn subst_x_one(&self) -> Self {
        self.map_monos(|m| {
            let mut m = m;
            m.x = 0;
            m
        })
    }

    pub fn subst_y_one(&self) -> Self {
        self.map_monos(|m| {
            let mut m = m;
            m.y = 0;
            m
        })
    }

    /// Keep only the terms free of the marker `v`: the value of the polynomial at v = 0.
    pub fn subst_v_zero(&self) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if m.v == 0 {
                Self::insert_add(&mut out.terms, m.clone(), c.clone());
            }
        }
        out
    }

    pub fn subst_q_one(&self) -> Self {
        self.map_monos(|m| {
            let mut m = m;
            m.q = 0;
            m
        })
    }

    fn map_monos(&self, f: impl Fn(Mono) -> Mono) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            Self::insert_add(&mut out.terms, f(m.clone()).trim(), c.clone());
        }
        out
    }

    /// Antiderivative in `y` vanishing at `y = 0`.
    pub fn y_antiderivative(&self) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut m = m.clone();
            m.y += 1;
            let c = c.clone() / rint(m.y as i64);
            Self::insert_add(&mut out.terms, m, c);
        }
        out
    }

    /// Replaces each `p_k` by `values(k)`; the closure must cover every index
    /// present in the polynomial.
    pub fn specialize_p(&self, values: impl Fn(usize) -> Rat) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            for (i, e) in m.p.iter().enumerate() {
                if *e > 0 {
                    let val = values(i + 1);
                    coeff *= rat_pow(&val, *e as i64).expect("p-specialization");
                }
            }
            let mut m = m.clone();
            m.p.clear();
            Self::insert_add(&mut out.terms, m, coeff);
        }
        out
    }

    /// Sets every `p_k` to 1 (the exponential/full specialization).
    pub fn specialize_p_ones(&self) -> Self {
        self.specialize_p(|_| Rat::one())
    }

    /// Sets `p_1 = 1`, all other `p_k` to 0 (the parking specialization).
    pub fn specialize_p_parking(&self) -> Self {
        self.specialize_p(|k| if k == 1 { Rat::one() } else { Rat::zero() })
    }

    /// Maximal symmetric-function weight carried by the `p` part.
    pub fn p_weight(&self) -> usize {
        self.terms.keys().map(|m| m.p_weight()).max().unwrap_or(0)
    }

    pub fn is_u_free(&self) -> bool {
        self.terms.keys().all(|m| m.u == 0)
    }

    pub fn is_x_free(&self) -> bool {
        self.terms.keys().all(|m| m.x == 0)
    }

    pub fn is_v_free(&self) -> bool {
        self.terms.keys().all(|m| m.v == 0)
    }

    pub fn has_negative_u(&self) -> bool {
        self.u_min_exp().is_some_and(|e| e < 0)
    }

    // ---- the v <-> u dictionary -------------------------------------------

    /// The Laurent expansion of `v = (1+u)^{m+1} u^{-m}`.
    pub fn v_expansion(m: usize) -> Self {
        MultiPoly::one_plus_u()
            .pow(m + 1)
            .mul_u_pow(-(m as i32))
    }

    /// Substitutes the expansion of `v` (for the given `m`) for the variable `v`.
    pub fn expand_v(&self, m: usize) -> Self {
        let vexp = Self::v_expansion(m);
        let max_pow = self.terms.keys().map(|mo| mo.v).max().unwrap_or(0) as usize;
        let mut pows = Vec::with_capacity(max_pow + 1);
        pows.push(MultiPoly::one());
        for d in 1..=max_pow {
            let next = pows[d - 1].mul(&vexp);
            pows.push(next);
        }
        let mut out = MultiPoly::zero();
        for (mo, c) in &self.terms {
            let mut stripped = mo.clone();
            let d = stripped.v as usize;
            stripped.v = 0;
            out = out.add(&pows[d].mul(&MultiPoly::monomial(stripped, c.clone())));
        }
        out
    }

    /// Rewrites a Laurent polynomial in `u` that is symmetric-by-construction
    /// as a polynomial in `v`, by peeling the top `u`-degree (the expansion of
    /// `v^d` has top term `u^d` with coefficient 1). Errors when the residue
    /// fails to telescope to zero, i.e. when the input was not actually a
    /// polynomial in `v`.
    pub fn to_v_poly(&self, m: usize) -> Result<Self> {
        if !self.is_v_free() {
            return Err(Error::InvalidArgument(
                "to_v_poly expects an input already expanded in u".into(),
            ));
        }
        let mut rest = self.clone();
        let mut out = MultiPoly::zero();
        let vexp = Self::v_expansion(m);
        while !rest.is_zero() {
            let d = rest.u_max_exp().unwrap();
            if d < 0 {
                return Err(Error::InexactDivision(format!(
                    "not a polynomial in v: residue {rest}"
                )));
            }
            let cd = rest.u_coeff(d);
            let vmono = MultiPoly::monomial(
                Mono {
                    v: d as u32,
                    ..Mono::default()
                },
                Rat::one(),
            );
            out = out.add(&cd.mul(&vmono));
            rest = rest.sub(&cd.mul(&vexp.pow(d as usize)));
            if !rest.is_zero() && rest.u_max_exp().unwrap() >= d {
                return Err(Error::InternalCheck(
                    "v-peeling failed to reduce the top degree".into(),
                ));
            }
        }
        Ok(out)
    }

    // ---- serialization ----------------------------------------------------

    /// Canonical JSON rendering: a list of `[coefficient, exponents]` pairs in
    /// the canonical term order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                serde_json::json!({
                    "c": rat_to_string(c),
                    "u": m.u,
                    "x": m.x,
                    "y": m.y,
                    "v": m.v,
                    "q": m.q,
                    "p": m.p,
                })
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = m.render();
            if mono.is_empty() {
                write!(f, "{}", rat_to_string(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", rat_to_string(&mag))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rfrac;

    fn upoly(pairs: &[(i32, i64)]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e, c) in pairs {
            out = out.add(&MultiPoly::u_pow(*e).mul_rat(&rint(*c)));
        }
        out
    }

    #[test]
    fn canonical_form_collapses_duplicates() {
        let a = MultiPoly::u_pow(2).add(&MultiPoly::u_pow(2).neg());
        assert!(a.is_zero());
        let b = MultiPoly::p(3).mul(&MultiPoly::p(1));
        let c = MultiPoly::p(1).mul(&MultiPoly::p(3));
        assert_eq!(b, c);
    }

    #[test]
    fn display_is_stable() {
        let p = MultiPoly::x()
            .pow(2)
            .mul_rat(&rfrac(3, 2))
            .add(&MultiPoly::u_pow(-1).neg())
            .add(&MultiPoly::one());
        assert_eq!(p.to_string(), "-u^-1 + 1 + 3/2*x^2");
    }

    #[test]
    fn u_parts_split_the_polynomial() {
        let p = upoly(&[(-2, 5), (0, 3), (1, -1), (4, 2)]);
        assert_eq!(
            p.u_pos_part().add(&p.u_neg_part()).add(&p.u_coeff0()),
            p
        );
        assert_eq!(p.u_coeff(4), MultiPoly::from_int(2));
        assert_eq!(p.u_min_exp(), Some(-2));
        assert_eq!(p.u_max_exp(), Some(4));
    }

    #[test]
    fn split_identity_on_positive_part() {
        // [u^>]((1+u)P) = (1+u)[u^>]P + u[u^0]P on assorted Laurent polynomials.
        let samples = [
            upoly(&[(0, 1)]),
            upoly(&[(-1, 1)]),
            upoly(&[(1, 1)]),
            upoly(&[(-3, 2), (-1, -7), (0, 4), (2, 9)]),
            upoly(&[(-2, 1), (0, -1), (5, 3)]),
        ];
        let one_plus_u = MultiPoly::one_plus_u();
        for p in &samples {
            let lhs = one_plus_u.mul(p).u_pos_part();
            let rhs = one_plus_u
                .mul(&p.u_pos_part())
                .add(&p.u_coeff0().mul(&MultiPoly::u_pow(1)));
            assert_eq!(lhs, rhs, "split identity failed on {p}");
        }
    }

    #[test]
    fn exact_division_by_one_plus_u() {
        let p = MultiPoly::one_plus_u().pow(3).mul_u_pow(-2);
        let q = p.div_exact_one_plus_u(3).unwrap();
        assert_eq!(q, MultiPoly::u_pow(-2));
        assert!(MultiPoly::one().div_exact_one_plus_u(1).is_err());
    }

    #[test]
    fn v_expansion_and_peeling_roundtrip() {
        for m in 1..=3 {
            let p = MultiPoly::v()
                .pow(3)
                .mul_rat(&rfrac(2, 3))
                .add(&MultiPoly::v().mul(&MultiPoly::p(2)))
                .add(&MultiPoly::from_int(7));
            let expanded = p.expand_v(m);
            assert_eq!(expanded.to_v_poly(m).unwrap(), p, "roundtrip at m={m}");
        }
        // v itself at m=1 has constant term 2.
        let v1 = MultiPoly::v_expansion(1);
        assert_eq!(v1.u_coeff0(), MultiPoly::from_int(2));
    }

    #[test]
    fn peeling_rejects_non_v_polynomials() {
        assert!(MultiPoly::u_pow(1).to_v_poly(1).is_err());
        assert!(MultiPoly::u_pow(-1).to_v_poly(2).is_err());
    }

    #[test]
    fn y_antiderivative_and_specializations() {
        let p = MultiPoly::y().pow(2).mul(&MultiPoly::p(2)).add(&MultiPoly::p(1));
        let int = p.y_antiderivative();
        let expected = MultiPoly::y()
            .pow(3)
            .mul(&MultiPoly::p(2))
            .mul_rat(&rfrac(1, 3))
            .add(&MultiPoly::p(1).mul(&MultiPoly::y()));
        assert_eq!(int, expected);
        assert_eq!(
            p.specialize_p_parking(),
            MultiPoly::y().pow(2).mul_rat(&Rat::zero()).add(&MultiPoly::one())
        );
        assert_eq!(
            p.specialize_p_ones().subst_y_one(),
            MultiPoly::from_int(2)
        );
    }

    #[test]
    fn eval_points() {
        let p = upoly(&[(-1, 1), (0, 2), (3, 5)]);
        assert_eq!(p.eval_u_neg_one(), MultiPoly::from_int(-4));
        assert!(p.eval_u_zero().is_err());
        let q = upoly(&[(0, 2), (3, 5)]);
        assert_eq!(q.eval_u_zero().unwrap(), MultiPoly::from_int(2));
    }
}
