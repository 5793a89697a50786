//! Integer partitions, their automorphism factor z_lambda, and enumeration.

use std::fmt;

use num::bigint::BigInt;

use crate::algebra::rat::{factorial, int_pow};
use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of each part size: `mults()[i]` counts parts equal to i+1.
    pub fn multiplicities(&self) -> Vec<usize> {
        let max = self.0.first().copied().unwrap_or(0);
        let mut out = vec![0usize; max];
        for &p in &self.0 {
            out[p - 1] += 1;
        }
        out
    }

    /// `z_lambda = prod_i i^{alpha_i} alpha_i!` where `alpha_i` is the
    /// multiplicity of the part i; the centralizer order of the cycle type.
    pub fn z_lambda(&self) -> BigInt {
        let mut acc = BigInt::from(1);
        for (i, a) in self.multiplicities().iter().enumerate() {
            if *a > 0 {
                acc *= int_pow(&BigInt::from(i + 1), *a) * factorial(*a);
            }
        }
        acc
    }

    /// All partitions of n, in descending lexicographic order (largest first
    /// part first); the empty partition for n = 0.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut parts = Vec::new();
        fn rec(remaining: usize, max_part: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(parts.clone()));
                return;
            }
            let top = remaining.min(max_part);
            for p in (1..=top).rev() {
                parts.push(p);
                rec(remaining - p, p, parts, out);
                parts.pop();
            }
        }
        rec(n, n.max(1), &mut parts, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}
