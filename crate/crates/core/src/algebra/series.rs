//! Truncated formal power series with `MultiPoly` coefficients.
//!
//! A series carries its expansion variable as a tag and a fixed truncation
//! order: `coeffs[n]` is the coefficient of `var^n` for `n = 0..=order()`.
//! Binary operations require matching variables and truncate to the smaller
//! order, so precision never silently grows.

use std::fmt;

use num::One;

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::rat::{rint, Rat};
use crate::error::{Error, Result};

/// Expansion variable of a truncated series.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SVar {
    /// The exponential size variable of Frobenius series.
    T,
    /// The algebraic size variable after the change of variables.
    Z,
    /// The auxiliary variable of the plain-count parametrization.
    Zp,
}

impl fmt::Display for SVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SVar::T => write!(f, "t"),
            SVar::Z => write!(f, "z"),
            SVar::Zp => write!(f, "z'"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    pub var: SVar,
    coeffs: Vec<MultiPoly>,
}

impl Series {
    pub fn zero(var: SVar, order: usize) -> Self {
        Series {
            var,
            coeffs: vec![MultiPoly::zero(); order + 1],
        }
    }

    pub fn one(var: SVar, order: usize) -> Self {
        Series::from_poly(var, order, MultiPoly::one())
    }

    /// The constant series with the given polynomial as `var^0` coefficient.
    pub fn from_poly(var: SVar, order: usize, p: MultiPoly) -> Self {
        let mut s = Series::zero(var, order);
        s.coeffs[0] = p;
        s
    }

    pub fn from_coeffs(var: SVar, coeffs: Vec<MultiPoly>) -> Self {
        assert!(!coeffs.is_empty());
        Series { var, coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, p: MultiPoly) {
        self.coeffs[n] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let take = order.min(self.order());
        let mut coeffs = self.coeffs[..=take].to_vec();
        coeffs.resize(order + 1, MultiPoly::zero());
        Series {
            var: self.var,
            coeffs,
        }
    }

    fn common_order(&self, other: &Self) -> usize {
        assert_eq!(
            self.var, other.var,
            "series expansion variables must match"
        );
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let ord = self.common_order(other);
        let coeffs = (0..=ord)
            .map(|n| self.coeffs[n].add(&other.coeffs[n]))
            .collect();
        Series {
            var: self.var,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Series {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let ord = self.common_order(other);
        let mut coeffs = vec![MultiPoly::zero(); ord + 1];
        for i in 0..=ord {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(ord - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        Series {
            var: self.var,
            coeffs,
        }
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        self.map(|c| c.mul(p))
    }

    pub fn mul_rat(&self, r: &Rat) -> Self {
        self.map(|c| c.mul_rat(r))
    }

    /// Multiplies by `var^k`, truncating at the fixed order.
    pub fn mul_var_pow(&self, k: usize) -> Self {
        let ord = self.order();
        let mut coeffs = vec![MultiPoly::zero(); ord + 1];
        for n in k..=ord {
            coeffs[n] = self.coeffs[n - k].clone();
        }
        Series {
            var: self.var,
            coeffs,
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Series::one(self.var, self.order());
        let mut base = self.clone();
        let mut e = e;
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

    /// `exp` of a series with zero constant term, via `E' = S' E`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument(
                "exp requires a series with zero constant term".into(),
            ));
        }
        let ord = self.order();
        let mut e = vec![MultiPoly::one()];
        for n in 1..=ord {
            let mut acc = MultiPoly::zero();
            for j in 1..=n {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[j].mul(&e[n - j]).mul_rat(&rint(j as i64)));
            }
            e.push(acc.mul_rat(&(Rat::one() / rint(n as i64))));
        }
        Ok(Series {
            var: self.var,
            coeffs: e,
        })
    }

    /// Multiplicative inverse; requires an invertible leading coefficient
    /// (a rational multiple of a power of `u`).
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].inv_unit()?;
        let ord = self.order();
        let mut b = vec![inv0.clone()];
        for n in 1..=ord {
            let mut acc = MultiPoly::zero();
            for j in 1..=n {
                acc = acc.add(&self.coeffs[j].mul(&b[n - j]));
            }
            b.push(acc.mul(&inv0).neg());
        }
        Ok(Series {
            var: self.var,
            coeffs: b,
        })
    }

    /// Substitutes `inner` (with zero constant term) for the variable of
    /// `self`; the result is expanded in `inner`'s variable at `inner`'s order.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument(
                "composition requires an inner series with zero constant term".into(),
            ));
        }
        let ord = inner.order();
        let mut acc = Series::zero(inner.var, ord);
        let mut power = Series::one(inner.var, ord);
        for n in 0..=self.order().min(ord) {
            acc = acc.add(&power.mul_poly(&self.coeffs[n]));
            if n < self.order().min(ord) {
                power = power.mul(inner);
            }
        }
        Ok(acc)
    }

    /// Derivative with respect to the expansion variable (order drops by one).
    pub fn derivative(&self) -> Self {
        let ord = self.order();
        if ord == 0 {
            return Series::zero(self.var, 0);
        }
        let coeffs = (1..=ord)
            .map(|n| self.coeffs[n].mul_rat(&rint(n as i64)))
            .collect();
        Series {
            var: self.var,
            coeffs,
        }
    }

    /// Applies a polynomial map to every coefficient.
    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        Series {
            var: self.var,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Applies a fallible polynomial map to every coefficient.
    pub fn try_map(&self, f: impl Fn(&MultiPoly) -> Result<MultiPoly>) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(f(c)?);
        }
        Ok(Series {
            var: self.var,
            coeffs,
        })
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "var": self.var.to_string(),
            "order": self.order(),
            "coeffs": self.coeffs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}^{n}] {}", self.var, c)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rfrac;

    fn zser(coeffs: Vec<MultiPoly>) -> Series {
        Series::from_coeffs(SVar::Z, coeffs)
    }

    #[test]
    fn exp_of_z_matches_factorials() {
        let z = zser(vec![
            MultiPoly::zero(),
            MultiPoly::one(),
            MultiPoly::zero(),
            MultiPoly::zero(),
            MultiPoly::zero(),
        ]);
        let e = z.exp().unwrap();
        for n in 0..=4usize {
            let fact = Rat::from_integer(crate::algebra::rat::factorial(n));
            assert_eq!(e.coeff(n).as_rat().unwrap(), Rat::one() / fact);
        }
    }

    #[test]
    fn invert_geometric() {
        // 1/(1 - z) = 1 + z + z^2 + ...
        let s = zser(vec![
            MultiPoly::one(),
            MultiPoly::from_int(-1),
            MultiPoly::zero(),
            MultiPoly::zero(),
        ]);
        let inv = s.invert().unwrap();
        for n in 0..=3 {
            assert_eq!(inv.coeff(n), &MultiPoly::one());
        }
        assert_eq!(s.mul(&inv), Series::one(SVar::Z, 3));
    }

    #[test]
    fn compose_substitutes() {
        // (1 + t)^2 at t = z + z^2: coefficients 1, 2, 3, 2, 1 truncated.
        let outer = Series::from_coeffs(
            SVar::T,
            vec![MultiPoly::one(), MultiPoly::from_int(2), MultiPoly::one()],
        );
        let inner = zser(vec![
            MultiPoly::zero(),
            MultiPoly::one(),
            MultiPoly::one(),
            MultiPoly::zero(),
        ]);
        let res = outer.compose(&inner).unwrap();
        let expect = [1i64, 2, 3, 2];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(res.coeff(n), &MultiPoly::from_int(*e));
        }
    }

    #[test]
    fn derivative_shifts() {
        let s = zser(vec![
            MultiPoly::from_int(7),
            MultiPoly::from_int(5),
            MultiPoly::from_rat(rfrac(1, 2)),
        ]);
        let d = s.derivative();
        assert_eq!(d.coeff(0), &MultiPoly::from_int(5));
        assert_eq!(d.coeff(1), &MultiPoly::one());
    }
}
