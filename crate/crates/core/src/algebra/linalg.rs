//! Exact linear solving over the rationals, with right-hand sides in any
//! module over the rationals (polynomials, localized series, ...).
//!
//! The systems solved here are tiny (symmetric-function transitions, span
//! membership per series order), so plain Gaussian elimination with exact
//! arithmetic is the right tool. Overdetermined systems are solved and then
//! re-checked row by row: an inconsistent system is an error, never a silent
//! least-squares answer.

use num::Zero;

use crate::algebra::rat::Rat;
use crate::error::{Error, Result};

/// Module over the rationals, the shape a right-hand side must have.
pub trait QModule: Clone {
    fn qm_zero(like: &Self) -> Self;
    fn qm_add(&self, other: &Self) -> Self;
    fn qm_scale(&self, r: &Rat) -> Self;
    fn qm_is_zero(&self) -> bool;
}

impl QModule for crate::algebra::multipoly::MultiPoly {
    fn qm_zero(_like: &Self) -> Self {
        Self::zero()
    }
    fn qm_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn qm_scale(&self, r: &Rat) -> Self {
        self.mul_rat(r)
    }
    fn qm_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl QModule for crate::algebra::useries::USeries {
    fn qm_zero(like: &Self) -> Self {
        Self::zero(like.num.var, like.order())
    }
    fn qm_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn qm_scale(&self, r: &Rat) -> Self {
        self.mul_rat(r)
    }
    fn qm_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// Solves `M c = d` for `c`, where `M` is a rational matrix (rows >= cols,
/// full column rank required) and `d` lives in a `QModule`. All redundant
/// rows are verified exactly; inconsistency and rank deficiency are errors.
pub fn solve_rational<Md: QModule>(mat: &[Vec<Rat>], rhs: &[Md]) -> Result<Vec<Md>> {
    let rows = mat.len();
    if rows == 0 {
        return Ok(Vec::new());
    }
    let cols = mat[0].len();
    assert!(mat.iter().all(|r| r.len() == cols));
    assert_eq!(rhs.len(), rows);
    if rows < cols {
        return Err(Error::InvalidArgument(
            "underdetermined system passed to solve_rational".into(),
        ));
    }

    let mut m: Vec<Vec<Rat>> = mat.to_vec();
    let mut b: Vec<Md> = rhs.to_vec();
    let mut pivot_rows: Vec<usize> = Vec::with_capacity(cols);
    let mut used = vec![false; rows];

    for col in 0..cols {
        let Some(pr) = (0..rows).find(|&r| !used[r] && !m[r][col].is_zero()) else {
            return Err(Error::InvalidArgument(
                "rank-deficient system passed to solve_rational".into(),
            ));
        };
        used[pr] = true;
        pivot_rows.push(pr);
        let inv = Rat::from_integer(1.into()) / m[pr][col].clone();
        for c in col..cols {
            let val = m[pr][c].clone() * inv.clone();
            m[pr][c] = val;
        }
        b[pr] = b[pr].qm_scale(&inv);
        for r in 0..rows {
            if r != pr && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let delta = m[pr][c].clone() * factor.clone();
                    m[r][c] = m[r][c].clone() - delta;
                }
                let delta = b[pr].qm_scale(&(-factor));
                b[r] = b[r].qm_add(&delta);
            }
        }
    }

    // Non-pivot rows are now entirely zero on the left; their right-hand
    // sides must have been annihilated too.
    for r in 0..rows {
        if !used[r] && !b[r].qm_is_zero() {
            return Err(Error::InternalCheck(
                "inconsistent linear system: residual right-hand side".into(),
            ));
        }
    }

    let mut out = Vec::with_capacity(cols);
    for col in 0..cols {
        out.push(b[pivot_rows[col]].clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::multipoly::MultiPoly;
    use crate::algebra::rat::rint;

    #[test]
    fn solves_square_system() {
        // x + y = p1, x - y = p2  =>  x = (p1+p2)/2, y = (p1-p2)/2
        let mat = vec![vec![rint(1), rint(1)], vec![rint(1), rint(-1)]];
        let rhs = vec![MultiPoly::p(1), MultiPoly::p(2)];
        let sol = solve_rational(&mat, &rhs).unwrap();
        let half = crate::algebra::rat::rfrac(1, 2);
        assert_eq!(
            sol[0],
            MultiPoly::p(1).add(&MultiPoly::p(2)).mul_rat(&half)
        );
        assert_eq!(
            sol[1],
            MultiPoly::p(1).sub(&MultiPoly::p(2)).mul_rat(&half)
        );
    }

    #[test]
    fn rejects_inconsistent_overdetermined() {
        let mat = vec![vec![rint(1)], vec![rint(1)]];
        let rhs = vec![MultiPoly::p(1), MultiPoly::p(2)];
        assert!(solve_rational(&mat, &rhs).is_err());
        let rhs_ok = vec![MultiPoly::p(1), MultiPoly::p(1)];
        let sol = solve_rational(&mat, &rhs_ok).unwrap();
        assert_eq!(sol[0], MultiPoly::p(1));
    }
}
