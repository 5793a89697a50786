//! Series over the localization of the Laurent ring at `1 + u`.
//!
//! A `USeries` is `num / (1+u)^den` with `num` a truncated series whose
//! coefficients are Laurent polynomials in `u`. All the rational functions of
//! `u` that arise downstream (powers of the root-average series `A`, inverses
//! inside the companion ring, symmetric functions of the conjugate roots) have
//! denominators of exactly this shape, so this localization is the whole
//! fraction field we ever need. Laurent-ness claimed by the theory is
//! certified by [`USeries::to_laurent`], which performs the exact division.

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::rat::Rat;
use crate::algebra::series::{SVar, Series};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct USeries {
    pub num: Series,
    /// Exponent of the `(1+u)` denominator.
    pub den: u32,
}

impl USeries {
    pub fn from_series(num: Series) -> Self {
        USeries { num, den: 0 }
    }

    pub fn from_poly(var: SVar, order: usize, p: MultiPoly) -> Self {
        USeries::from_series(Series::from_poly(var, order, p))
    }

    pub fn zero(var: SVar, order: usize) -> Self {
        USeries::from_series(Series::zero(var, order))
    }

    pub fn one(var: SVar, order: usize) -> Self {
        USeries::from_series(Series::one(var, order))
    }

    pub fn order(&self) -> usize {
        self.num.order()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Rescales both operands to a common denominator exponent.
    fn align(&self, other: &Self) -> (Series, Series, u32) {
        let den = self.den.max(other.den);
        let lift = |s: &USeries| -> Series {
            let extra = den - s.den;
            if extra == 0 {
                s.num.clone()
            } else {
                s.num
                    .mul_poly(&MultiPoly::one_plus_u().pow(extra as usize))
            }
        };
        (lift(self), lift(other), den)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b, den) = self.align(other);
        USeries { num: a.add(&b), den }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        USeries {
            num: self.num.neg(),
            den: self.den,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        USeries {
            num: self.num.mul(&other.num),
            den: self.den + other.den,
        }
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        USeries {
            num: self.num.mul_poly(p),
            den: self.den,
        }
    }

    pub fn mul_rat(&self, r: &Rat) -> Self {
        USeries {
            num: self.num.mul_rat(r),
            den: self.den,
        }
    }

    /// Divides by `(1+u)^k` (enlarges the denominator; always exact here).
    pub fn div_one_plus_u(&self, k: u32) -> Self {
        USeries {
            num: self.num.clone(),
            den: self.den + k,
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = USeries::one(self.num.var, self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Certifies that the value is a genuine Laurent-coefficient series by
    /// dividing the numerator exactly by `(1+u)^den`; errors otherwise.
    pub fn to_laurent(&self) -> Result<Series> {
        let den = self.den;
        self.num
            .try_map(|c| c.div_exact_one_plus_u(den))
            .map_err(|_| {
                Error::InexactDivision(
                    "value asserted Laurent has a genuine (1+u) pole".into(),
                )
            })
    }

    /// Reduces the denominator exponent as far as exact division allows.
    pub fn normalize(&self) -> Self {
        let mut cur = self.clone();
        while cur.den > 0 {
            match cur.num.try_map(|c| c.div_exact_one_plus_u(1)) {
                Ok(reduced) => {
                    cur = USeries {
                        num: reduced,
                        den: cur.den - 1,
                    };
                }
                Err(_) => break,
            }
        }
        cur
    }
}
