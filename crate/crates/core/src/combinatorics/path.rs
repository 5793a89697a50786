//! m-ballot paths: lattice paths from (0,0) to (mn, n) made of north and east
//! unit steps that stay weakly above the line x = my.
//!
//! Invariants maintained by construction: exactly `n` north and `mn` east
//! steps, and every prefix satisfies x <= m*y. The empty path (n = 0) is
//! valid. Words use `N`/`E`; enumeration is in lexicographic word order with
//! `E < N`.

use std::fmt;

use num::bigint::BigInt;

use crate::algebra::rat::binomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum Step {
    E,
    N,
}

impl Step {
    pub fn to_char(self) -> char {
        match self {
            Step::E => 'E',
            Step::N => 'N',
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub struct BallotPath {
    m: usize,
    n: usize,
    steps: Vec<Step>,
}

impl BallotPath {
    /// Validates the step sequence as an m-ballot path.
    pub fn new(m: usize, steps: Vec<Step>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("slope parameter m must be >= 1".into()));
        }
        let n = steps.iter().filter(|s| **s == Step::N).count();
        let e = steps.len() - n;
        if e != m * n {
            return Err(Error::InvalidArgument(format!(
                "step counts ({n} north, {e} east) do not fit slope {m}"
            )));
        }
        let (mut x, mut y) = (0usize, 0usize);
        for s in &steps {
            match s {
                Step::N => y += 1,
                Step::E => {
                    x += 1;
                    if x > m * y {
                        return Err(Error::InvalidArgument(
                            "path crosses below the line x = m*y".into(),
                        ));
                    }
                }
            }
        }
        Ok(BallotPath { m, n, steps })
    }

    pub fn from_word(m: usize, word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| match c {
                'N' => Ok(Step::N),
                'E' => Ok(Step::E),
                other => Err(Error::InvalidArgument(format!(
                    "unexpected step character {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        BallotPath::new(m, steps)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.to_char()).collect()
    }

    /// All m-ballot paths of size n, in lexicographic word order (E < N).
    pub fn enumerate(m: usize, n: usize) -> Vec<BallotPath> {
        let mut out = Vec::new();
        let mut steps = Vec::with_capacity(n * (m + 1));
        fn rec(
            m: usize,
            n: usize,
            x: usize,
            y: usize,
            steps: &mut Vec<Step>,
            out: &mut Vec<BallotPath>,
        ) {
            if y == n && x == m * n {
                out.push(BallotPath {
                    m,
                    n,
                    steps: steps.clone(),
                });
                return;
            }
            // E first: lexicographically smaller.
            if x < m * n && x < m * y {
                steps.push(Step::E);
                rec(m, n, x + 1, y, steps, out);
                steps.pop();
            }
            if y < n {
                steps.push(Step::N);
                rec(m, n, x, y + 1, steps, out);
                steps.pop();
            }
        }
        rec(m, n, 0, 0, &mut steps, &mut out);
        out
    }

    /// Number of m-ballot paths of size n: `C((m+1)n, n) / (mn + 1)`.
    pub fn count(m: usize, n: usize) -> BigInt {
        let num = binomial(((m + 1) * n) as i64, n as i64);
        let den = BigInt::from(m * n + 1);
        let (q, r) = num::Integer::div_rem(&num, &den);
        debug_assert!(num::Zero::is_zero(&r));
        q
    }

    /// Number of vertices lying on the line x = my, endpoints included.
    pub fn contacts(&self) -> usize {
        let (mut x, mut y) = (0usize, 0usize);
        let mut count = 1; // origin
        for s in &self.steps {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            if x == self.m * y {
                count += 1;
            }
        }
        count
    }

    /// Step indices after which the path sits on x = my, starting with 0 for
    /// the origin; the last entry is always the full length.
    pub fn contact_positions(&self) -> Vec<usize> {
        let (mut x, mut y) = (0usize, 0usize);
        let mut out = vec![0usize];
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            if x == self.m * y {
                out.push(i + 1);
            }
        }
        out
    }

    /// Heights of the maximal runs of north steps, in path order.
    pub fn ascents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut run = 0usize;
        for s in &self.steps {
            match s {
                Step::N => run += 1,
                Step::E => {
                    if run > 0 {
                        out.push(run);
                        run = 0;
                    }
                }
            }
        }
        if run > 0 {
            out.push(run);
        }
        out
    }

    /// For each north step, the index (in path order) of its ascent.
    pub fn ascent_of_north(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n);
        let mut asc = 0usize;
        let mut in_run = false;
        for s in &self.steps {
            match s {
                Step::N => {
                    if !in_run {
                        in_run = true;
                    }
                    out.push(asc);
                }
                Step::E => {
                    if in_run {
                        asc += 1;
                        in_run = false;
                    }
                }
            }
        }
        out
    }

    /// Image under the slope-flattening bijection: each north step becomes m
    /// consecutive north steps, yielding a 1-ballot path of size mn.
    pub fn to_mdyck(&self) -> BallotPath {
        let mut steps = Vec::with_capacity(2 * self.m * self.n);
        for s in &self.steps {
            match s {
                Step::N => steps.extend(std::iter::repeat_n(Step::N, self.m)),
                Step::E => steps.push(Step::E),
            }
        }
        BallotPath {
            m: 1,
            n: self.m * self.n,
            steps,
        }
    }

    /// The minimal path `(N E^m)^n`.
    pub fn bottom(m: usize, n: usize) -> BallotPath {
        let mut steps = Vec::with_capacity(n * (m + 1));
        for _ in 0..n {
            steps.push(Step::N);
            steps.extend(std::iter::repeat_n(Step::E, m));
        }
        BallotPath { m, n, steps }
    }

    /// The maximal path `N^n E^{mn}`.
    pub fn top(m: usize, n: usize) -> BallotPath {
        let mut steps = Vec::with_capacity(n * (m + 1));
        steps.extend(std::iter::repeat_n(Step::N, n));
        steps.extend(std::iter::repeat_n(Step::E, m * n));
        BallotPath { m, n, steps }
    }
}

impl fmt::Display for BallotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            write!(f, "(empty)")
        } else {
            write!(f, "{}", self.word())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_matches_frozen_small_cases() {
        let paths = BallotPath::enumerate(1, 2);
        let words: Vec<String> = paths.iter().map(|p| p.word()).collect();
        assert_eq!(words, vec!["NENE".to_string(), "NNEE".to_string()]);

        assert_eq!(BallotPath::enumerate(2, 3).len(), 12);
        assert_eq!(BallotPath::enumerate(3, 0).len(), 1);
        assert_eq!(BallotPath::enumerate(3, 0)[0].word(), "");
    }

    #[test]
    fn counts_agree_with_enumeration() {
        for m in 1..=3usize {
            for n in 0..=4usize {
                let listed = BallotPath::enumerate(m, n).len();
                assert_eq!(
                    BigInt::from(listed),
                    BallotPath::count(m, n),
                    "count mismatch at m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let paths = BallotPath::enumerate(2, 4);
        for w in paths.windows(2) {
            assert!(w[0].word() < w[1].word());
        }
        for p in &paths {
            BallotPath::new(2, p.steps().to_vec()).unwrap();
        }
    }

    #[test]
    fn contacts_frozen_values() {
        assert_eq!(BallotPath::from_word(1, "NENE").unwrap().contacts(), 3);
        assert_eq!(BallotPath::from_word(1, "NNEE").unwrap().contacts(), 2);
        assert_eq!(BallotPath::from_word(2, "NEENEE").unwrap().contacts(), 3);
        assert_eq!(BallotPath::from_word(2, "NENEEE").unwrap().contacts(), 2);
        assert_eq!(BallotPath::from_word(2, "NNEEEE").unwrap().contacts(), 2);
    }

    #[test]
    fn contact_positions_agree_with_counts() {
        for (m, word, want) in [
            (1usize, "NENE", vec![0usize, 2, 4]),
            (2, "NEENEE", vec![0, 3, 6]),
            (2, "NENEEE", vec![0, 6]),
        ] {
            let p = BallotPath::from_word(m, word).unwrap();
            assert_eq!(p.contact_positions(), want);
            assert_eq!(p.contact_positions().len(), p.contacts());
        }
        for p in BallotPath::enumerate(2, 3) {
            assert_eq!(p.contact_positions().len(), p.contacts());
            assert_eq!(*p.contact_positions().last().unwrap(), p.steps().len());
        }
    }

    #[test]
    fn ascents_and_north_assignment() {
        let p = BallotPath::from_word(2, "NNEENEE").err();
        assert!(p.is_some(), "unbalanced word must be rejected");
        let p = BallotPath::from_word(2, "NNEEENEEE").unwrap();
        assert_eq!(p.ascents(), vec![2, 1]);
        assert_eq!(p.ascent_of_north(), vec![0, 0, 1]);
    }

    #[test]
    fn rejects_low_paths() {
        assert!(BallotPath::from_word(1, "ENNE").is_err());
        assert!(BallotPath::from_word(2, "NEEENE").is_err());
    }

    #[test]
    fn mdyck_image_and_extremes() {
        let p = BallotPath::from_word(2, "NENEEE").unwrap();
        assert_eq!(p.to_mdyck().word(), "NNENNEEE".replace(' ', ""));
        assert_eq!(BallotPath::bottom(2, 2).word(), "NEENEE");
        assert_eq!(BallotPath::top(2, 2).word(), "NNEEEE");
        assert_eq!(
            BallotPath::bottom(2, 2).to_mdyck().word(),
            "NNEENNEE"
        );
    }
}
