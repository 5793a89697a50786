//! Labellings of the north steps of a path.
//!
//! A labelling assigns the labels 0..n-1 bijectively to the north steps so
//! that labels increase from bottom to top within each ascent. The number of
//! labellings of a path with ascent heights a_1, ..., a_r is the multinomial
//! n! / (a_1! ... a_r!). Labels are 0-based internally and rendered 1-based.

use num::bigint::BigInt;

use crate::algebra::rat::factorial;
use crate::combinatorics::path::BallotPath;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Labelling {
    /// `labels[i]` is the label of the i-th north step in path order.
    pub labels: Vec<usize>,
}

impl Labelling {
    /// Validates the increase-along-ascents invariant for the given path.
    pub fn new(path: &BallotPath, labels: Vec<usize>) -> Result<Self> {
        let n = path.n();
        if labels.len() != n {
            return Err(Error::InvalidArgument(format!(
                "expected {n} labels, got {}",
                labels.len()
            )));
        }
        let mut seen = vec![false; n];
        for &l in &labels {
            if l >= n || seen[l] {
                return Err(Error::InvalidArgument(
                    "labels must be a permutation of 0..n".into(),
                ));
            }
            seen[l] = true;
        }
        let asc = path.ascent_of_north();
        for i in 1..n {
            if asc[i] == asc[i - 1] && labels[i] < labels[i - 1] {
                return Err(Error::InvalidArgument(
                    "labels must increase within each ascent".into(),
                ));
            }
        }
        Ok(Labelling { labels })
    }

    /// The label sets of each ascent, in path order.
    pub fn ascent_label_sets(&self, path: &BallotPath) -> Vec<Vec<usize>> {
        let ascents = path.ascents();
        let mut out = Vec::with_capacity(ascents.len());
        let mut idx = 0usize;
        for a in ascents {
            out.push(self.labels[idx..idx + a].to_vec());
            idx += a;
        }
        out
    }

    pub fn render_one_based(&self) -> Vec<usize> {
        self.labels.iter().map(|l| l + 1).collect()
    }
}

/// Enumerates all labellings of `path` by distributing label sets over the
/// ascents (multiset combinations), sorting within each ascent.
pub fn enumerate_labellings(path: &BallotPath) -> Vec<Labelling> {
    let n = path.n();
    let ascents = path.ascents();
    let mut out = Vec::new();
    let mut chosen: Vec<Vec<usize>> = Vec::with_capacity(ascents.len());
    let mut available: Vec<usize> = (0..n).collect();

    fn rec(
        ascents: &[usize],
        level: usize,
        available: &mut Vec<usize>,
        chosen: &mut Vec<Vec<usize>>,
        out: &mut Vec<Labelling>,
    ) {
        if level == ascents.len() {
            let labels: Vec<usize> = chosen.iter().flatten().copied().collect();
            out.push(Labelling { labels });
            return;
        }
        let k = ascents[level];
        let pool = available.clone();
        let mut combo: Vec<usize> = Vec::with_capacity(k);
        fn combos(
            pool: &[usize],
            start: usize,
            k: usize,
            combo: &mut Vec<usize>,
            ascents: &[usize],
            level: usize,
            available: &mut Vec<usize>,
            chosen: &mut Vec<Vec<usize>>,
            out: &mut Vec<Labelling>,
        ) {
            if combo.len() == k {
                let set = combo.clone();
                available.retain(|x| !set.contains(x));
                chosen.push(set.clone());
                rec(ascents, level + 1, available, chosen, out);
                chosen.pop();
                let mut restored: Vec<usize> = available.clone();
                restored.extend(set.iter().copied());
                restored.sort_unstable();
                *available = restored;
                return;
            }
            for i in start..pool.len() {
                combo.push(pool[i]);
                combos(
                    pool, i + 1, k, combo, ascents, level, available, chosen, out,
                );
                combo.pop();
            }
        }
        combos(
            &pool, 0, k, &mut combo, ascents, level, available, chosen, out,
        );
    }

    rec(&ascents, 0, &mut available, &mut chosen, &mut out);
    out.sort();
    out
}

/// Number of labellings of `path`: the multinomial coefficient of its ascents.
pub fn labelling_count(path: &BallotPath) -> BigInt {
    let mut den = BigInt::from(1);
    for a in path.ascents() {
        den *= factorial(a);
    }
    factorial(path.n()) / den
}
