//! The m-Tamari lattice on m-ballot paths.
//!
//! The covering relation rotates one east step: if an east step `a` is
//! immediately followed by a north step `b`, the shortest factor starting at
//! `b` that is a translate of an m-ballot path is swapped with `a`. The
//! lattice order is the transitive closure of these covers. Meets and joins
//! are computed from the order relation and certified unique.

pub mod interval;

use std::collections::HashMap;

use num::bigint::BigInt;

use crate::combinatorics::path::{BallotPath, Step};
use crate::error::{Error, Result};

/// Per-node bitset of order relations, packed in 64-bit words.
#[derive(Clone, Debug)]
struct BitRows {
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        BitRows {
            words_per_row,
            bits: vec![0u64; rows * words_per_row],
        }
    }

    fn set(&mut self, row: usize, col: usize) {
        self.bits[row * self.words_per_row + col / 64] |= 1u64 << (col % 64);
    }

    fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.words_per_row + col / 64] & (1u64 << (col % 64)) != 0
    }

    fn or_into(&mut self, dst: usize, src: usize) {
        let (d, s) = (dst * self.words_per_row, src * self.words_per_row);
        for k in 0..self.words_per_row {
            let v = self.bits[s + k];
            self.bits[d + k] |= v;
        }
    }
}

/// All covers of a single path, in lexicographic order of the resulting word.
pub fn covers_of(path: &BallotPath) -> Vec<BallotPath> {
    let m = path.m();
    let steps = path.steps();
    let mut out = Vec::new();
    for a in 0..steps.len() {
        if steps[a] != Step::E {
            continue;
        }
        let b = a + 1;
        if b >= steps.len() || steps[b] != Step::N {
            continue;
        }
        // Walk the shortest factor S starting at b whose balance
        // (m per north step, -1 per east step) returns to zero; stopping at
        // the first zero makes S a translated m-ballot path automatically.
        let mut balance: i64 = 0;
        let mut end = b;
        loop {
            match steps[end] {
                Step::N => balance += m as i64,
                Step::E => balance -= 1,
            }
            if balance == 0 {
                break;
            }
            end += 1;
            debug_assert!(end < steps.len(), "factor search escaped the path");
        }
        // Swap the east step at `a` with the factor steps[b..=end].
        let mut rotated = Vec::with_capacity(steps.len());
        rotated.extend_from_slice(&steps[..a]);
        rotated.extend_from_slice(&steps[b..=end]);
        rotated.push(Step::E);
        rotated.extend_from_slice(&steps[end + 1..]);
        out.push(BallotPath::new(m, rotated).expect("rotation preserves the ballot property"));
    }
    out.sort();
    out.dedup();
    out
}

pub struct TamariLattice {
    m: usize,
    n: usize,
    paths: Vec<BallotPath>,
    index: HashMap<BallotPath, usize>,
    /// `covers[i]` lists the nodes covering node i, ascending.
    covers: Vec<Vec<usize>>,
    up: BitRows,
    down: BitRows,
}

/// Default ceiling on the number of lattice nodes.
pub const DEFAULT_NODE_LIMIT: usize = 50_000;

impl TamariLattice {
    /// Builds the full lattice. Refuses to allocate more than the node limit
    /// (`DEFAULT_NODE_LIMIT` when `None`) unless forced with an explicit larger
    /// limit.
    pub fn build(m: usize, n: usize, node_limit: Option<usize>) -> Result<TamariLattice> {
        let expected = BallotPath::count(m, n);
        let limit = node_limit.unwrap_or(DEFAULT_NODE_LIMIT);
        if expected > BigInt::from(limit) {
            return Err(Error::SizeGuard(format!(
                "lattice for m={m}, n={n} has {expected} nodes, above the limit {limit}"
            )));
        }
        let paths = BallotPath::enumerate(m, n);
        let index: HashMap<BallotPath, usize> = paths
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let node_count = paths.len();
        let mut covers = Vec::with_capacity(node_count);
        for p in &paths {
            let cs = covers_of(p)
                .into_iter()
                .map(|q| index[&q])
                .collect::<Vec<usize>>();
            covers.push(cs);
        }

        // Upward closure: process nodes in reverse topological order (covers
        // strictly increase the number of inversions, so iterate until fixed
        // point over a DFS ordering).
        let order = topo_order(&covers);
        let mut up = BitRows::new(node_count, node_count);
        for &i in order.iter().rev() {
            up.set(i, i);
            let cs = covers[i].clone();
            for j in cs {
                up.or_into(i, j);
            }
        }
        let mut down = BitRows::new(node_count, node_count);
        for i in 0..node_count {
            for j in 0..node_count {
                if up.get(i, j) {
                    down.set(j, i);
                }
            }
        }
        Ok(TamariLattice {
            m,
            n,
            paths,
            index,
            covers,
            up,
            down,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn node_count(&self) -> usize {
        self.paths.len()
    }

    pub fn path(&self, i: usize) -> &BallotPath {
        &self.paths[i]
    }

    pub fn paths(&self) -> &[BallotPath] {
        &self.paths
    }

    pub fn index_of(&self, p: &BallotPath) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn covers(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up.get(i, j)
    }

    /// Nodes below (and including) i.
    pub fn down_set(&self, i: usize) -> Vec<usize> {
        (0..self.node_count())
            .filter(|&k| self.down.get(i, k))
            .collect()
    }

    /// Nodes above (and including) i.
    pub fn up_set(&self, i: usize) -> Vec<usize> {
        (0..self.node_count())
            .filter(|&k| self.up.get(i, k))
            .collect()
    }

    /// Greatest lower bound; errors if the maximal common lower bound is not
    /// unique (which would disprove lattice-ness).
    pub fn meet(&self, i: usize, j: usize) -> Result<usize> {
        let common: Vec<usize> = (0..self.node_count())
            .filter(|&k| self.down.get(i, k) && self.down.get(j, k))
            .collect();
        // maximal = elements of `common` with nothing in `common` strictly above.
        let maximal: Vec<usize> = common
            .iter()
            .copied()
            .filter(|&k| common.iter().all(|&l| l == k || !self.leq(k, l)))
            .collect();
        match maximal.as_slice() {
            [unique] => Ok(*unique),
            _ => Err(Error::InternalCheck(format!(
                "meet of {} and {} is not unique",
                self.paths[i], self.paths[j]
            ))),
        }
    }

    /// Least upper bound; errors if not unique.
    pub fn join(&self, i: usize, j: usize) -> Result<usize> {
        let common: Vec<usize> = (0..self.node_count())
            .filter(|&k| self.up.get(i, k) && self.up.get(j, k))
            .collect();
        let minimal: Vec<usize> = common
            .iter()
            .copied()
            .filter(|&k| common.iter().all(|&l| l == k || !self.leq(l, k)))
            .collect();
        match minimal.as_slice() {
            [unique] => Ok(*unique),
            _ => Err(Error::InternalCheck(format!(
                "join of {} and {} is not unique",
                self.paths[i], self.paths[j]
            ))),
        }
    }

    /// All intervals (i, j) with i <= j, ordered by (i, j).
    pub fn intervals(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.node_count() {
            for j in 0..self.node_count() {
                if self.leq(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn interval_count(&self) -> usize {
        self.intervals().len()
    }

    /// Length of the longest saturated chain from i to j (number of covers).
    pub fn longest_chain(&self, i: usize, j: usize) -> Result<usize> {
        if !self.leq(i, j) {
            return Err(Error::InvalidArgument(
                "longest_chain requires comparable endpoints".into(),
            ));
        }
        let mut memo: HashMap<usize, Option<usize>> = HashMap::new();
        fn rec(
            lat: &TamariLattice,
            k: usize,
            j: usize,
            memo: &mut HashMap<usize, Option<usize>>,
        ) -> Option<usize> {
            if k == j {
                return Some(0);
            }
            if let Some(v) = memo.get(&k) {
                return *v;
            }
            let mut best: Option<usize> = None;
            for &c in lat.covers(k) {
                if lat.leq(c, j) {
                    if let Some(len) = rec(lat, c, j, memo) {
                        best = Some(best.map_or(len + 1, |b: usize| b.max(len + 1)));
                    }
                }
            }
            memo.insert(k, best);
            best
        }
        rec(self, i, j, &mut memo).ok_or_else(|| {
            Error::InternalCheck("no cover chain found inside a nonempty interval".into())
        })
    }

    /// GraphViz rendering of the cover relation.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph tamari {\n");
        out.push_str(&format!(
            "  label=\"m={}, n={} ({} nodes)\";\n",
            self.m,
            self.n,
            self.node_count()
        ));
        for (i, p) in self.paths.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{}\"];\n", p));
        }
        for (i, cs) in self.covers.iter().enumerate() {
            for &j in cs {
                out.push_str(&format!("  n{i} -> n{j};\n"));
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.m,
            "n": self.n,
            "nodes": self.paths.iter().map(|p| p.word()).collect::<Vec<_>>(),
            "covers": self.covers,
        })
    }
}

fn topo_order(covers: &[Vec<usize>]) -> Vec<usize> {
    let n = covers.len();
    let mut state = vec![0u8; n];
    let mut order = Vec::with_capacity(n);
    fn dfs(i: usize, covers: &[Vec<usize>], state: &mut [u8], order: &mut Vec<usize>) {
        state[i] = 1;
        for &j in &covers[i] {
            if state[j] == 0 {
                dfs(j, covers, state, order);
            }
        }
        state[i] = 2;
        order.push(i);
    }
    for i in 0..n {
        if state[i] == 0 {
            dfs(i, covers, &mut state, &mut order);
        }
    }
    // Post-order pushes sinks first; reversing gives sources first.
    order.reverse();
    order
}

/// Order-embedding of the slope-m lattice into the ordinary lattice of size
/// mn: checks the image is exactly the up-set of `(N^m E^m)^n` and that the
/// order is preserved and reflected.
pub fn embed_check(m: usize, n: usize) -> Result<()> {
    let small = TamariLattice::build(m, n, None)?;
    let big = TamariLattice::build(1, m * n, None)?;
    let base = BallotPath::bottom(m, n).to_mdyck();
    let base_idx = big
        .index_of(&base)
        .ok_or_else(|| Error::InternalCheck("base path missing from the big lattice".into()))?;
    let image: Vec<usize> = small
        .paths()
        .iter()
        .map(|p| {
            big.index_of(&p.to_mdyck())
                .ok_or_else(|| Error::InternalCheck(format!("image of {p} is not a valid path")))
        })
        .collect::<Result<Vec<_>>>()?;

    // Image set must be exactly the up-set of the base path.
    let mut expected = big.up_set(base_idx);
    let mut got = image.clone();
    expected.sort_unstable();
    got.sort_unstable();
    if expected != got {
        return Err(Error::InternalCheck(format!(
            "image of the slope-{m} lattice is not the up-set of {base}"
        )));
    }

    // Order preserved and reflected.
    for i in 0..small.node_count() {
        for j in 0..small.node_count() {
            if small.leq(i, j) != big.leq(image[i], image[j]) {
                return Err(Error::InternalCheck(format!(
                    "order not preserved between {} and {}",
                    small.path(i),
                    small.path(j)
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_covers() {
        let p = BallotPath::from_word(1, "NENE").unwrap();
        let cs = covers_of(&p);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].word(), "NNEE");

        let p = BallotPath::from_word(2, "NEENEE").unwrap();
        let cs = covers_of(&p);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].word(), "NENEEE");

        let p = BallotPath::from_word(2, "NENEEE").unwrap();
        let cs = covers_of(&p);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].word(), "NNEEEE");

        let top = BallotPath::from_word(2, "NNEEEE").unwrap();
        assert!(covers_of(&top).is_empty());
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(TamariLattice::build(1, 4, None).unwrap().node_count(), 14);
        assert_eq!(TamariLattice::build(2, 3, None).unwrap().node_count(), 12);
    }

    #[test]
    fn interval_counts() {
        assert_eq!(TamariLattice::build(1, 2, None).unwrap().interval_count(), 3);
        assert_eq!(
            TamariLattice::build(1, 3, None).unwrap().interval_count(),
            13
        );
        assert_eq!(
            TamariLattice::build(2, 3, None).unwrap().interval_count(),
            58
        );
    }

    #[test]
    fn bottom_and_top_are_extremes() {
        for (m, n) in [(1usize, 4usize), (2, 3), (3, 2)] {
            let lat = TamariLattice::build(m, n, None).unwrap();
            let bot = lat.index_of(&BallotPath::bottom(m, n)).unwrap();
            let top = lat.index_of(&BallotPath::top(m, n)).unwrap();
            for i in 0..lat.node_count() {
                assert!(lat.leq(bot, i));
                assert!(lat.leq(i, top));
            }
        }
    }

    #[test]
    fn meets_and_joins_exist() {
        for (m, n) in [(1usize, 4usize), (2, 3)] {
            let lat = TamariLattice::build(m, n, None).unwrap();
            for i in 0..lat.node_count() {
                for j in 0..lat.node_count() {
                    let mt = lat.meet(i, j).unwrap();
                    let jn = lat.join(i, j).unwrap();
                    assert!(lat.leq(mt, i) && lat.leq(mt, j));
                    assert!(lat.leq(i, jn) && lat.leq(j, jn));
                }
            }
        }
    }

    #[test]
    fn size_guard_fires() {
        // A tiny limit forces the guard on an otherwise small lattice.
        assert!(matches!(
            TamariLattice::build(1, 5, Some(10)),
            Err(Error::SizeGuard(_))
        ));
        assert!(TamariLattice::build(1, 5, Some(100)).is_ok());
    }

    #[test]
    fn embedding_into_ordinary_lattice() {
        embed_check(2, 2).unwrap();
        embed_check(1, 3).unwrap();
        embed_check(2, 3).unwrap();
    }

    #[test]
    fn longest_chain_full_interval() {
        // From bottom to top of the slope-1 lattice of size 3: longest chain
        // has 3 covers (the lattice is graded by inversions only loosely, so
        // this value is frozen from direct inspection of the cover graph).
        let lat = TamariLattice::build(1, 3, None).unwrap();
        let bot = lat.index_of(&BallotPath::bottom(1, 3)).unwrap();
        let top = lat.index_of(&BallotPath::top(1, 3)).unwrap();
        assert_eq!(lat.longest_chain(bot, top).unwrap(), 3);
        assert_eq!(lat.longest_chain(top, top).unwrap(), 0);
        assert!(lat.longest_chain(top, bot).is_err());
    }
}
