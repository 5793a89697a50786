//! Permutations of {0, ..., n-1} in one-line notation, with cycle structure.

use std::fmt;

use crate::combinatorics::partition::Partition;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Perm {
    /// Images: `images[i] = sigma(i)`.
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidArgument(
                    "not a permutation in one-line notation".into(),
                ));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm {
            images: (0..self.n()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0usize; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    /// Cycles in canonical order (each cycle starts at its minimum, cycles
    /// sorted by minimum).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.apply(cur);
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        let lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        Partition::new(lens).expect("cycle lengths are positive")
    }

    /// The canonical permutation of a given cycle type: cycles on consecutive
    /// blocks `(0..l1)(l1..l1+l2)...`.
    pub fn canonical_of_type(lam: &Partition) -> Perm {
        let n = lam.weight();
        let mut images = vec![0usize; n];
        let mut base = 0usize;
        for &l in lam.parts() {
            for k in 0..l {
                images[base + k] = base + (k + 1) % l;
            }
            base += l;
        }
        Perm { images }
    }

    /// Conjugate `tau . self . tau^{-1}` (same cycle type, relabelled by tau).
    pub fn conjugate_by(&self, tau: &Perm) -> Perm {
        tau.compose(self).compose(&tau.inverse())
    }

    /// Deterministic shuffle (xorshift64*): same seed, same permutation.
    /// Used for reproducible consistency probes without an RNG dependency.
    pub fn pseudo_random(n: usize, seed: u64) -> Perm {
        let mut state = seed.wrapping_mul(2685821657736338717).max(1);
        let mut next = || {
            state ^= state >> 12;
            state ^= state << 25;
            state ^= state >> 27;
            state = state.wrapping_mul(2685821657736338717);
            state
        };
        let mut images: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (next() % (i as u64 + 1)) as usize;
            images.swap(i, j);
        }
        Perm { images }
    }

    /// All permutations of {0..n-1}, lexicographic by one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, images: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
            if images.len() == n {
                out.push(Perm {
                    images: images.clone(),
                });
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    images.push(i);
                    rec(n, images, used, out);
                    images.pop();
                    used[i] = false;
                }
            }
        }
        rec(n, &mut images, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.images
                .iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        )
    }
}
