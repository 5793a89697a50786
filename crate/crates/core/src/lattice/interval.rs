//! Tamari intervals, pointed intervals, and the recursive decomposition that
//! splits an interval at the first return of its upper path.
//!
//! The decomposition is defined on ordinary (slope-1) Dyck intervals and is
//! applied to larger slopes through their slope-1 images, so one routine
//! serves every m. It is a bijection: `compose` inverts `decompose`, and the
//! non-initial contacts satisfy c(P) - 1 = (c(P1r) - 1) + c(P2).

use crate::combinatorics::path::{BallotPath, Step};
use crate::error::{Error, Result};

/// Order test on two paths of the same shape, independent of any prebuilt
/// lattice: breadth-first closure of the covering relation starting at `p`,
/// pruned to paths weakly below `q` (rotations only raise the path, so every
/// chain from `p` to `q` stays in that region).
pub fn path_leq(p: &BallotPath, q: &BallotPath) -> bool {
    assert_eq!(p.m(), q.m(), "paths must share a slope");
    assert_eq!(p.n(), q.n(), "paths must share a size");
    if p == q {
        return true;
    }
    if !dominated_by(p, q) {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    let mut queue = std::collections::VecDeque::new();
    seen.insert(p.clone());
    queue.push_back(p.clone());
    while let Some(cur) = queue.pop_front() {
        for c in super::covers_of(&cur) {
            if c == *q {
                return true;
            }
            if dominated_by(&c, q) && seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    false
}

/// True when `q` stays weakly above `p`: every prefix of `q` holds at least
/// as many north steps as the same-length prefix of `p`.
fn dominated_by(p: &BallotPath, q: &BallotPath) -> bool {
    let (mut np, mut nq) = (0usize, 0usize);
    for (sp, sq) in p.steps().iter().zip(q.steps()) {
        if *sp == Step::N {
            np += 1;
        }
        if *sq == Step::N {
            nq += 1;
        }
        if nq < np {
            return false;
        }
    }
    true
}

/// A pair of comparable paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lower: BallotPath,
    upper: BallotPath,
}

impl Interval {
    pub fn new(lower: BallotPath, upper: BallotPath) -> Result<Interval> {
        if lower.m() != upper.m() || lower.n() != upper.n() {
            return Err(Error::InvalidArgument(
                "interval endpoints must share slope and size".into(),
            ));
        }
        if !path_leq(&lower, &upper) {
            return Err(Error::InvalidArgument(format!(
                "{lower} is not below {upper}"
            )));
        }
        Ok(Interval { lower, upper })
    }

    pub fn lower(&self) -> &BallotPath {
        &self.lower
    }

    pub fn upper(&self) -> &BallotPath {
        &self.upper
    }

    pub fn m(&self) -> usize {
        self.lower.m()
    }

    /// Number of north steps of either path.
    pub fn size(&self) -> usize {
        self.lower.n()
    }

    /// The slope-1 image under north-step inflation.
    pub fn to_mdyck(&self) -> Interval {
        Interval {
            lower: self.lower.to_mdyck(),
            upper: self.upper.to_mdyck(),
        }
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

/// An interval whose lower path carries a distinguished contact, named by its
/// 0-based index in the contact list. Index 0 (the origin) is the non-proper
/// case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedInterval {
    pub interval: Interval,
    pub split: usize,
}

impl PointedInterval {
    pub fn new(interval: Interval, split: usize) -> Result<PointedInterval> {
        if split >= interval.lower().contacts() {
            return Err(Error::InvalidArgument(format!(
                "contact index {split} out of range for {}",
                interval.lower()
            )));
        }
        Ok(PointedInterval { interval, split })
    }

    pub fn is_proper(&self) -> bool {
        self.split > 0
    }

    /// Splits the lower path at the distinguished contact.
    pub fn split_paths(&self) -> (BallotPath, BallotPath) {
        let lower = self.interval.lower();
        let pos = lower.contact_positions()[self.split];
        let m = lower.m();
        let left = BallotPath::new(m, lower.steps()[..pos].to_vec())
            .expect("prefix ending on the boundary line is a valid path");
        let right = BallotPath::new(m, lower.steps()[pos..].to_vec())
            .expect("suffix starting on the boundary line is a valid path");
        (left, right)
    }
}

/// Index of the step completing the first return to the boundary (slope 1).
fn first_return(steps: &[Step]) -> usize {
    let mut balance: i64 = 0;
    for (i, s) in steps.iter().enumerate() {
        balance += match s {
            Step::N => 1,
            Step::E => -1,
        };
        if balance == 0 {
            return i;
        }
    }
    unreachable!("a nonempty balanced path returns to the boundary");
}

fn dyck(steps: Vec<Step>) -> Result<BallotPath> {
    BallotPath::new(1, steps)
        .map_err(|e| Error::InternalCheck(format!("decomposition produced an invalid path: {e}")))
}

/// Splits an interval at the first return of its upper path. Slopes above 1
/// are routed through their slope-1 image, so the parts are always slope-1.
///
/// Writing the upper path as N Q1 E Q2 (first-return factorisation), the
/// lower path splits into a suffix P2 of the same size as Q2 and a prefix
/// N P1l E P1r; the parts are the pointed interval [P1l P1r, Q1] with the
/// distinguished contact between P1l and P1r, and the interval [P2, Q2].
pub fn decompose(iv: &Interval) -> Result<(PointedInterval, Interval)> {
    if iv.size() == 0 {
        return Err(Error::InvalidArgument(
            "the empty interval has no decomposition".into(),
        ));
    }
    if iv.m() != 1 {
        return decompose(&iv.to_mdyck());
    }
    let q = iv.upper().steps();
    let p = iv.lower().steps();
    let r = first_return(q);
    let q1 = q[1..r].to_vec();
    let q2 = q[r + 1..].to_vec();
    let p2_len = q2.len();
    let p2 = p[p.len() - p2_len..].to_vec();
    let p1 = &p[..p.len() - p2_len];
    let r1 = first_return(p1);
    let p1l = &p1[1..r1];
    let p1r = &p1[r1 + 1..];

    let left_lower = dyck(p1l.iter().chain(p1r).copied().collect())?;
    let split = dyck(p1l.to_vec())?.contacts() - 1;
    let q1 = dyck(q1)?;
    if !path_leq(&left_lower, &q1) {
        return Err(Error::InternalCheck(format!(
            "first part of {iv} is not an interval"
        )));
    }
    let pointed = PointedInterval::new(
        Interval {
            lower: left_lower,
            upper: q1,
        },
        split,
    )?;

    let p2 = dyck(p2)?;
    let q2 = dyck(q2)?;
    if !path_leq(&p2, &q2) {
        return Err(Error::InternalCheck(format!(
            "second part of {iv} is not an interval"
        )));
    }
    let rest = Interval {
        lower: p2,
        upper: q2,
    };
    Ok((pointed, rest))
}

/// Inverse of `decompose`: P = N P1l E P1r P2 and Q = N Q1 E Q2.
pub fn compose(pointed: &PointedInterval, rest: &Interval) -> Result<Interval> {
    if pointed.interval.m() != 1 || rest.m() != 1 {
        return Err(Error::InvalidArgument(
            "composition is defined on slope-1 intervals".into(),
        ));
    }
    let (p1l, p1r) = pointed.split_paths();
    let mut p = Vec::with_capacity(pointed.interval.lower().steps().len() + rest.size() * 2 + 2);
    p.push(Step::N);
    p.extend_from_slice(p1l.steps());
    p.push(Step::E);
    p.extend_from_slice(p1r.steps());
    p.extend_from_slice(rest.lower().steps());
    let mut q = Vec::with_capacity(p.capacity());
    q.push(Step::N);
    q.extend_from_slice(pointed.interval.upper().steps());
    q.push(Step::E);
    q.extend_from_slice(rest.upper().steps());
    Interval::new(dyck(p)?, dyck(q)?)
}
