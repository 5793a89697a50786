//! The symmetric-group action on labelled intervals.
//!
//! A labelled interval carries a labelling of the upper path; a permutation
//! acts by renaming the labels and re-sorting each ascent increasingly. A
//! pair is fixed exactly when every cycle lands inside one ascent's label
//! set. Fixed-point counts per cycle type give the character of the
//! representation; summing over stabilizers with the contact and
//! first-ascent statistics gives the refined Frobenius coefficient, the
//! ground truth the series engine is checked against.

use num::bigint::BigInt;
use num::traits::{One, Zero};

use crate::algebra::multipoly::MultiPoly;
use crate::combinatorics::labelling::{enumerate_labellings, labelling_count, Labelling};
use crate::combinatorics::partition::Partition;
use crate::combinatorics::path::BallotPath;
use crate::combinatorics::perm::Perm;
use crate::error::{Error, Result};
use crate::lattice::interval::path_leq;
use crate::lattice::TamariLattice;

/// An upper path together with a labelling of its north steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledPath {
    pub path: BallotPath,
    pub labelling: Labelling,
}

impl LabelledPath {
    pub fn new(path: BallotPath, labelling: Labelling) -> Result<LabelledPath> {
        let labelling = Labelling::new(&path, labelling.labels)?;
        Ok(LabelledPath { path, labelling })
    }
}

/// An interval whose upper path is labelled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledInterval {
    pub lower: BallotPath,
    pub upper: LabelledPath,
}

impl LabelledInterval {
    pub fn new(lower: BallotPath, upper: LabelledPath) -> Result<LabelledInterval> {
        if !path_leq(&lower, &upper.path) {
            return Err(Error::InvalidArgument(format!(
                "{lower} is not below {}",
                upper.path
            )));
        }
        Ok(LabelledInterval { lower, upper })
    }
}

/// Renames every label through `sigma`, then restores increasing order
/// inside each ascent.
pub fn act(sigma: &Perm, lp: &LabelledPath) -> Result<LabelledPath> {
    if sigma.n() != lp.path.n() {
        return Err(Error::InvalidArgument(
            "permutation size must match the number of labels".into(),
        ));
    }
    let ascent_of = lp.path.ascent_of_north();
    let ascent_count = lp.path.ascents().len();
    let mut per_ascent: Vec<Vec<usize>> = vec![Vec::new(); ascent_count];
    for (i, &label) in lp.labelling.labels.iter().enumerate() {
        per_ascent[ascent_of[i]].push(sigma.apply(label));
    }
    let mut labels = Vec::with_capacity(lp.path.n());
    for block in &mut per_ascent {
        block.sort_unstable();
        labels.extend_from_slice(block);
    }
    Ok(LabelledPath {
        path: lp.path.clone(),
        labelling: Labelling { labels },
    })
}

/// Fixed-point test straight from the definition.
pub fn is_fixed(sigma: &Perm, lp: &LabelledPath) -> Result<bool> {
    Ok(act(sigma, lp)? == *lp)
}

/// Equivalent criterion: every cycle of `sigma` is contained in the label
/// set of a single ascent.
pub fn cycles_respect_ascents(sigma: &Perm, lp: &LabelledPath) -> bool {
    let sets = lp.labelling.ascent_label_sets(&lp.path);
    sigma.cycles().iter().all(|cycle| {
        sets.iter()
            .any(|set| cycle.iter().all(|label| set.contains(label)))
    })
}

/// Number of cycles of `sigma` inside the first ascent's label set. Only
/// defined on fixed pairs.
pub fn a_stat(sigma: &Perm, lp: &LabelledPath) -> Result<usize> {
    if !is_fixed(sigma, lp)? {
        return Err(Error::InvalidArgument(
            "the first-ascent statistic needs a fixed pair".into(),
        ));
    }
    let sets = lp.labelling.ascent_label_sets(&lp.path);
    let Some(first) = sets.first() else {
        return Ok(0);
    };
    Ok(sigma
        .cycles()
        .iter()
        .filter(|cycle| cycle.iter().all(|label| first.contains(label)))
        .count())
}

/// Number of labellings of `q` fixed by `sigma`, counted exactly: fixed
/// labellings correspond to assignments of the cycles of `sigma` to ascents
/// filling each ascent's height.
pub fn fixed_labelling_count(q: &BallotPath, sigma: &Perm) -> BigInt {
    let mut cycle_lens: Vec<usize> = sigma.cycles().iter().map(|c| c.len()).collect();
    cycle_lens.sort_unstable_by(|a, b| b.cmp(a));
    let mut capacity = q.ascents();
    fn rec(cycles: &[usize], capacity: &mut [usize]) -> BigInt {
        let Some((&len, rest)) = cycles.split_first() else {
            return BigInt::one();
        };
        let mut total = BigInt::zero();
        for i in 0..capacity.len() {
            // Equal leftover capacities are still distinct ascents, so no
            // symmetry factor applies.
            if capacity[i] >= len {
                capacity[i] -= len;
                total += rec(rest, capacity);
                capacity[i] += len;
            }
        }
        total
    }
    rec(&cycle_lens, &mut capacity)
}

/// Fixed-point count of the canonical permutation of type `lambda` on
/// labelled intervals: for each upper path, the number of fixed labellings
/// times the number of lower paths below it.
pub fn character_with_lattice(lat: &TamariLattice, lambda: &Partition) -> Result<BigInt> {
    if lambda.weight() != lat.n() {
        return Err(Error::InvalidArgument(
            "partition weight must match the lattice size".into(),
        ));
    }
    let sigma = Perm::canonical_of_type(lambda);
    let mut total = BigInt::zero();
    for q in 0..lat.node_count() {
        let lowers = BigInt::from(lat.down_set(q).len());
        total += fixed_labelling_count(lat.path(q), &sigma) * lowers;
    }
    Ok(total)
}

pub fn character(m: usize, n: usize, lambda: &Partition) -> Result<BigInt> {
    let lat = TamariLattice::build(m, n, None)?;
    character_with_lattice(&lat, lambda)
}

/// Same count restricted to intervals whose lower path has exactly two
/// contacts.
pub fn prime_character_with_lattice(lat: &TamariLattice, lambda: &Partition) -> Result<BigInt> {
    if lambda.weight() != lat.n() {
        return Err(Error::InvalidArgument(
            "partition weight must match the lattice size".into(),
        ));
    }
    let sigma = Perm::canonical_of_type(lambda);
    let mut total = BigInt::zero();
    for q in 0..lat.node_count() {
        let lowers = lat
            .down_set(q)
            .into_iter()
            .filter(|&p| lat.path(p).contacts() == 2)
            .count();
        total += fixed_labelling_count(lat.path(q), &sigma) * BigInt::from(lowers);
    }
    Ok(total)
}

/// Total number of labelled intervals (the dimension of the representation).
pub fn labelled_interval_count(lat: &TamariLattice) -> BigInt {
    let mut total = BigInt::zero();
    for q in 0..lat.node_count() {
        total += labelling_count(lat.path(q)) * BigInt::from(lat.down_set(q).len());
    }
    total
}

/// Labelled and unlabelled counts over intervals with exactly two contacts.
pub fn prime_counts(lat: &TamariLattice) -> (BigInt, BigInt) {
    let mut labelled = BigInt::zero();
    let mut unlabelled = BigInt::zero();
    for q in 0..lat.node_count() {
        let lowers = lat
            .down_set(q)
            .into_iter()
            .filter(|&p| lat.path(p).contacts() == 2)
            .count();
        labelled += labelling_count(lat.path(q)) * BigInt::from(lowers);
        unlabelled += BigInt::from(lowers);
    }
    (labelled, unlabelled)
}

/// Fixed-point count on labelled paths alone, no interval structure.
pub fn parking_character(m: usize, n: usize, lambda: &Partition) -> Result<BigInt> {
    if lambda.weight() != n {
        return Err(Error::InvalidArgument(
            "partition weight must match the path size".into(),
        ));
    }
    let sigma = Perm::canonical_of_type(lambda);
    let mut total = BigInt::zero();
    for q in BallotPath::enumerate(m, n) {
        total += fixed_labelling_count(&q, &sigma);
    }
    Ok(total)
}

/// The refined Frobenius coefficient at order n, scaled by n!: the sum over
/// labelled intervals and stabilizing permutations of
/// x^contacts(P) y^(first-ascent cycles) p_(cycle type). Every pair is
/// enumerated and tested through `act`, making this the ground truth for the
/// series computations.
pub fn brute_frobenius(lat: &TamariLattice) -> Result<MultiPoly> {
    let n = lat.n();
    let perms = Perm::all(n);
    let mut total = MultiPoly::zero();
    for q in 0..lat.node_count() {
        let mut x_part = MultiPoly::zero();
        for p in lat.down_set(q) {
            x_part = x_part.add(&MultiPoly::x().pow(lat.path(p).contacts()));
        }
        let mut inner = MultiPoly::zero();
        for labels in enumerate_labellings(lat.path(q)) {
            let lp = LabelledPath::new(lat.path(q).clone(), labels)?;
            for sigma in &perms {
                if !is_fixed(sigma, &lp)? {
                    continue;
                }
                let a = a_stat(sigma, &lp)?;
                let mut term = MultiPoly::y().pow(a);
                for part in sigma.cycle_type().parts() {
                    term = term.mul(&MultiPoly::p(*part));
                }
                inner = inner.add(&term);
            }
        }
        total = total.add(&x_part.mul(&inner));
    }
    Ok(total)
}

/// Character table over all cycle types of n, in the partition enumeration
/// order.
pub struct CharacterTable {
    pub m: usize,
    pub n: usize,
    pub entries: Vec<(Partition, BigInt)>,
}

impl CharacterTable {
    pub fn compute(lat: &TamariLattice) -> Result<CharacterTable> {
        let mut entries = Vec::new();
        for lambda in Partition::all_of(lat.n()) {
            let chi = character_with_lattice(lat, &lambda)?;
            entries.push((lambda, chi));
        }
        Ok(CharacterTable {
            m: lat.m(),
            n: lat.n(),
            entries,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.m,
            "n": self.n,
            "entries": self.entries.iter().map(|(lambda, chi)| {
                serde_json::json!({
                    "partition": lambda.parts(),
                    "chi": chi.to_string(),
                })
            }).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut rows: Vec<(String, String)> = self
            .entries
            .iter()
            .map(|(lambda, chi)| (format!("{lambda}"), chi.to_string()))
            .collect();
        rows.insert(0, ("cycle type".into(), "fixed points".into()));
        let w0 = rows.iter().map(|(a, _)| a.len()).max().unwrap_or(0);
        let w1 = rows.iter().map(|(_, b)| b.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (i, (a, b)) in rows.iter().enumerate() {
            out.push_str(&format!("{a:<w0$}  {b:>w1$}\n"));
            if i == 0 {
                out.push_str(&format!("{}  {}\n", "-".repeat(w0), "-".repeat(w1)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rint;

    fn lp(m: usize, word: &str, labels: Vec<usize>) -> LabelledPath {
        LabelledPath::new(
            BallotPath::from_word(m, word).unwrap(),
            Labelling::new(&BallotPath::from_word(m, word).unwrap(), labels).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn identity_acts_trivially() {
        for p in BallotPath::enumerate(2, 3) {
            for labels in enumerate_labellings(&p) {
                let lp = LabelledPath::new(p.clone(), labels).unwrap();
                assert_eq!(act(&Perm::identity(3), &lp).unwrap(), lp);
            }
        }
    }

    #[test]
    fn action_composes() {
        for (m, n) in [(1usize, 3usize), (2, 3)] {
            let perms = Perm::all(n);
            for p in BallotPath::enumerate(m, n) {
                for labels in enumerate_labellings(&p) {
                    let lp = LabelledPath::new(p.clone(), labels).unwrap();
                    for s in &perms {
                        for t in &perms {
                            let st = s.compose(t);
                            assert_eq!(
                                act(&st, &lp).unwrap(),
                                act(s, &act(t, &lp).unwrap()).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fixed_test_matches_cycle_criterion() {
        for (m, n) in [(1usize, 4usize), (2, 3)] {
            let perms = Perm::all(n);
            for p in BallotPath::enumerate(m, n) {
                for labels in enumerate_labellings(&p) {
                    let lp = LabelledPath::new(p.clone(), labels).unwrap();
                    for s in &perms {
                        assert_eq!(is_fixed(s, &lp).unwrap(), cycles_respect_ascents(s, &lp));
                    }
                }
            }
        }
    }

    #[test]
    fn transposition_fixed_points_frozen() {
        // Size 2, slope 1: the swap fixes exactly the labelled intervals with
        // upper path NNEE, and its first-ascent statistic is 1 there.
        let swap = Perm::new(vec![1, 0]).unwrap();
        let nnee = lp(1, "NNEE", vec![0, 1]);
        assert!(is_fixed(&swap, &nnee).unwrap());
        assert_eq!(a_stat(&swap, &nnee).unwrap(), 1);
        let nene = lp(1, "NENE", vec![0, 1]);
        assert!(!is_fixed(&swap, &nene).unwrap());
        assert!(a_stat(&swap, &nene).is_err());

        // Slope 2, size 2: three labelled intervals are fixed, all under the
        // upper path NNEEEE.
        let lat = TamariLattice::build(2, 2, None).unwrap();
        let mut fixed = 0;
        for q in 0..lat.node_count() {
            for labels in enumerate_labellings(lat.path(q)) {
                let lpq = LabelledPath::new(lat.path(q).clone(), labels).unwrap();
                if is_fixed(&swap, &lpq).unwrap() {
                    assert_eq!(lpq.path.word(), "NNEEEE");
                    fixed += lat.down_set(q).len();
                }
            }
        }
        assert_eq!(fixed, 3);
    }

    #[test]
    fn a_stat_of_identity_is_first_ascent_height() {
        for p in BallotPath::enumerate(1, 4) {
            let id = Perm::identity(4);
            for labels in enumerate_labellings(&p) {
                let lp = LabelledPath::new(p.clone(), labels).unwrap();
                assert_eq!(a_stat(&id, &lp).unwrap(), p.ascents()[0]);
            }
        }
    }

    #[test]
    fn fixed_labelling_count_matches_enumeration() {
        for (m, n) in [(1usize, 4usize), (2, 3)] {
            let perms = Perm::all(n);
            for q in BallotPath::enumerate(m, n) {
                for s in &perms {
                    let direct = enumerate_labellings(&q)
                        .into_iter()
                        .filter(|labels| {
                            let lp = LabelledPath::new(q.clone(), labels.clone()).unwrap();
                            is_fixed(s, &lp).unwrap()
                        })
                        .count();
                    assert_eq!(fixed_labelling_count(&q, s), BigInt::from(direct));
                }
            }
        }
    }

    #[test]
    fn frozen_characters() {
        let chi = |m: usize, n: usize, parts: &[usize]| {
            character(m, n, &Partition::new(parts.to_vec()).unwrap()).unwrap()
        };
        assert_eq!(chi(1, 1, &[1]), BigInt::from(1));
        assert_eq!(chi(1, 2, &[2]), BigInt::from(2));
        assert_eq!(chi(1, 3, &[1, 1, 1]), BigInt::from(32));
        assert_eq!(chi(1, 3, &[2, 1]), BigInt::from(12));
        assert_eq!(chi(1, 3, &[3]), BigInt::from(5));
        assert_eq!(chi(2, 2, &[2]), BigInt::from(3));
    }

    #[test]
    fn character_is_a_class_function() {
        let lat = TamariLattice::build(1, 4, None).unwrap();
        for lambda in Partition::all_of(4) {
            let canonical = Perm::canonical_of_type(&lambda);
            let tau = Perm::pseudo_random(4, 1000 + lambda.parts().len() as u64);
            let conjugate = canonical.conjugate_by(&tau);
            assert_eq!(conjugate.cycle_type(), lambda);
            let mut total = BigInt::zero();
            for q in 0..lat.node_count() {
                total += fixed_labelling_count(lat.path(q), &conjugate)
                    * BigInt::from(lat.down_set(q).len());
            }
            assert_eq!(total, character_with_lattice(&lat, &lambda).unwrap());
        }
    }

    #[test]
    fn dimensions_frozen() {
        let dim = |m: usize, n: usize| {
            labelled_interval_count(&TamariLattice::build(m, n, None).unwrap())
        };
        assert_eq!(dim(1, 2), BigInt::from(4));
        assert_eq!(dim(2, 2), BigInt::from(9));
        assert_eq!(dim(2, 3), BigInt::from(189));
        assert_eq!(dim(1, 4), BigInt::from(400));
    }

    #[test]
    fn prime_counts_frozen() {
        let counts = |m: usize, n: usize| prime_counts(&TamariLattice::build(m, n, None).unwrap());
        assert_eq!(counts(1, 2), (BigInt::from(1), BigInt::from(1)));
        assert_eq!(counts(1, 3).1, BigInt::from(3));
        assert_eq!(counts(2, 2).0, BigInt::from(4));
    }

    #[test]
    fn brute_frobenius_smallest() {
        let f0 = brute_frobenius(&TamariLattice::build(1, 0, None).unwrap()).unwrap();
        assert_eq!(f0, MultiPoly::x());

        let f1 = brute_frobenius(&TamariLattice::build(1, 1, None).unwrap()).unwrap();
        let expected = MultiPoly::x()
            .pow(2)
            .mul(&MultiPoly::y())
            .mul(&MultiPoly::p(1));
        assert_eq!(f1, expected);
    }

    #[test]
    fn brute_frobenius_size_two() {
        // 2x^3 y p1^2 + (x^2 + x^3)(y^2 p1^2 + y p2)
        let f = brute_frobenius(&TamariLattice::build(1, 2, None).unwrap()).unwrap();
        let x = MultiPoly::x();
        let y = MultiPoly::y();
        let p1 = MultiPoly::p(1);
        let p2 = MultiPoly::p(2);
        let expected = x
            .pow(3)
            .mul(&y)
            .mul(&p1.pow(2))
            .mul_rat(&rint(2))
            .add(&x.pow(2).add(&x.pow(3)).mul(&y.pow(2).mul(&p1.pow(2)).add(&y.mul(&p2))));
        assert_eq!(f, expected);

        let at_ones = f.subst_x_one().subst_y_one();
        let expected_ones = p1.pow(2).mul_rat(&rint(4)).add(&p2.mul_rat(&rint(2)));
        assert_eq!(at_ones, expected_ones);
    }

    #[test]
    fn parking_counts_match_fixed_scan() {
        // Identity type: all labelled paths.
        for (m, n) in [(1usize, 3usize), (2, 2)] {
            let ones = Partition::new(vec![1; n]).unwrap();
            let total = parking_character(m, n, &ones).unwrap();
            let direct: BigInt = BallotPath::enumerate(m, n)
                .iter()
                .map(labelling_count)
                .sum();
            assert_eq!(total, direct);
        }
    }

    #[test]
    fn character_table_shape() {
        let lat = TamariLattice::build(1, 3, None).unwrap();
        let table = CharacterTable::compute(&lat).unwrap();
        assert_eq!(table.entries.len(), 3);
        assert_eq!(
            table.entries.last().unwrap().1,
            labelled_interval_count(&lat)
        );
        let text = table.to_text();
        assert!(text.contains("cycle type"));
    }
}
