//! The quadratic extension by `w` with `w^2 = 1 + 4u`, over the `(1+u)`
//! localization.
//!
//! For `m = 2` the two conjugate roots of the characteristic equation are
//! `(1 + 3u ± (1+u) w) / (2u^2)`, so adjoining the single square root `w` is
//! enough to manipulate them explicitly. An element is `(a + b w)/(1+u)^den`
//! with `a`, `b` truncated series with Laurent-polynomial coefficients.

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::rat::Rat;
use crate::algebra::series::{SVar, Series};
use crate::algebra::useries::USeries;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadSeries {
    pub a: Series,
    pub b: Series,
    pub den: u32,
}

impl QuadSeries {
    pub fn from_series(a: Series) -> Self {
        let b = Series::zero(a.var, a.order());
        QuadSeries { a, b, den: 0 }
    }

    pub fn from_poly(var: SVar, order: usize, p: MultiPoly) -> Self {
        QuadSeries::from_series(Series::from_poly(var, order, p))
    }

    pub fn zero(var: SVar, order: usize) -> Self {
        QuadSeries::from_poly(var, order, MultiPoly::zero())
    }

    pub fn one(var: SVar, order: usize) -> Self {
        QuadSeries::from_poly(var, order, MultiPoly::one())
    }

    /// The generator `w` itself.
    pub fn w(var: SVar, order: usize) -> Self {
        QuadSeries {
            a: Series::zero(var, order),
            b: Series::one(var, order),
            den: 0,
        }
    }

    /// `w^2`, i.e. the discriminant `1 + 4u`.
    fn disc() -> MultiPoly {
        MultiPoly::one().add(&MultiPoly::u_pow(1).mul_rat(&crate::algebra::rat::rint(4)))
    }

    pub fn order(&self) -> usize {
        self.a.order()
    }

    pub fn var(&self) -> SVar {
        self.a.var
    }

    fn align(&self, other: &Self) -> (Series, Series, Series, Series, u32) {
        let den = self.den.max(other.den);
        let lift = |s: &Series, d: u32| -> Series {
            let extra = den - d;
            if extra == 0 {
                s.clone()
            } else {
                s.mul_poly(&MultiPoly::one_plus_u().pow(extra as usize))
            }
        };
        (
            lift(&self.a, self.den),
            lift(&self.b, self.den),
            lift(&other.a, other.den),
            lift(&other.b, other.den),
            den,
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a1, b1, a2, b2, den) = self.align(other);
        QuadSeries {
            a: a1.add(&a2),
            b: b1.add(&b2),
            den,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        QuadSeries {
            a: self.a.neg(),
            b: self.b.neg(),
            den: self.den,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let disc = Self::disc();
        QuadSeries {
            a: self
                .a
                .mul(&other.a)
                .add(&self.b.mul(&other.b).mul_poly(&disc)),
            b: self.a.mul(&other.b).add(&self.b.mul(&other.a)),
            den: self.den + other.den,
        }
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        QuadSeries {
            a: self.a.mul_poly(p),
            b: self.b.mul_poly(p),
            den: self.den,
        }
    }

    pub fn mul_rat(&self, r: &Rat) -> Self {
        QuadSeries {
            a: self.a.mul_rat(r),
            b: self.b.mul_rat(r),
            den: self.den,
        }
    }

    /// Multiply by the k-th power of the series variable (truncating shift).
    pub fn mul_var_pow(&self, k: usize) -> Self {
        QuadSeries {
            a: self.a.mul_var_pow(k),
            b: self.b.mul_var_pow(k),
            den: self.den,
        }
    }

    pub fn div_one_plus_u(&self, k: u32) -> Self {
        QuadSeries {
            a: self.a.clone(),
            b: self.b.clone(),
            den: self.den + k,
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = QuadSeries::one(self.var(), self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Galois conjugate `w -> -w`.
    pub fn conj(&self) -> Self {
        QuadSeries {
            a: self.a.clone(),
            b: self.b.neg(),
            den: self.den,
        }
    }

    /// Certifies that the element is rational (no `w` component); the `(1+u)` powers remain.
    pub fn to_useries(&self) -> Result<USeries> {
        if !self.b.is_zero() {
            return Err(Error::InternalCheck(
                "element asserted rational has a nonzero w component".into(),
            ));
        }
        Ok(USeries {
            num: self.a.clone(),
            den: self.den,
        })
    }

    /// Certifies that the element is rational (no `w` component) and Laurent.
    pub fn to_laurent(&self) -> Result<Series> {
        self.to_useries()?.to_laurent()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}
