//! Involutive non-degenerate solutions `r(x,y) = (ˣy, xʸ)` of the braid-form
//! Yang-Baxter equation and their translation to and from cycle sets.

use thiserror::Error;

use crate::cycleset::{CycleSetError, CycleSetTable};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolutionError {
    #[error("a solution needs at least one element")]
    Empty,
    #[error("tables are not {0}x{0} with entries in range")]
    Malformed(usize),
    #[error("solution is degenerate ({side} component at {index})")]
    Degenerate { side: &'static str, index: usize },
    #[error("r∘r differs from the identity at ({x},{y})")]
    NotInvolutive { x: usize, y: usize },
    #[error("Yang-Baxter equation fails at ({x},{y},{z})")]
    YbeViolation { x: usize, y: usize, z: usize },
    #[error("derived operation is not a cycle set: {0}")]
    NotACycleSet(#[from] CycleSetError),
}

/// `left[x][y] = ˣy`, `right[x][y] = xʸ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionTable {
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
}

impl SolutionTable {
    /// Validates non-degeneracy, involutivity and the braid relation, in that
    /// order, reporting the first failure.
    pub fn verify(left: Vec<Vec<usize>>, right: Vec<Vec<usize>>) -> Result<Self, SolutionError> {
        let n = left.len();
        if n == 0 {
            return Err(SolutionError::Empty);
        }
        let well_formed = |t: &Vec<Vec<usize>>| {
            t.len() == n && t.iter().all(|row| row.len() == n && row.iter().all(|&v| v < n))
        };
        if !well_formed(&left) || !well_formed(&right) {
            return Err(SolutionError::Malformed(n));
        }
        let sol = SolutionTable { left, right };
        sol.check_non_degenerate()?;
        sol.check_involutive()?;
        sol.check_braid()?;
        Ok(sol)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.left.len()
    }

    /// `r(x, y)`
    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.left[x][y], self.right[x][y])
    }

    pub fn left(&self) -> &[Vec<usize>] {
        &self.left
    }

    pub fn right(&self) -> &[Vec<usize>] {
        &self.right
    }

    fn check_non_degenerate(&self) -> Result<(), SolutionError> {
        let n = self.size();
        for x in 0..n {
            let row: Vec<usize> = (0..n).map(|y| self.left[x][y]).collect();
            if Permutation::from_images(row).is_err() {
                return Err(SolutionError::Degenerate { side: "left", index: x });
            }
        }
        for y in 0..n {
            let col: Vec<usize> = (0..n).map(|x| self.right[x][y]).collect();
            if Permutation::from_images(col).is_err() {
                return Err(SolutionError::Degenerate { side: "right", index: y });
            }
        }
        Ok(())
    }

    fn check_involutive(&self) -> Result<(), SolutionError> {
        let n = self.size();
        for x in 0..n {
            for y in 0..n {
                let (u, v) = self.apply(x, y);
                if self.apply(u, v) != (x, y) {
                    return Err(SolutionError::NotInvolutive { x, y });
                }
            }
        }
        Ok(())
    }

    fn check_braid(&self) -> Result<(), SolutionError> {
        let n = self.size();
        let r12 = |(a, b, c): (usize, usize, usize)| {
            let (u, v) = self.apply(a, b);
            (u, v, c)
        };
        let r23 = |(a, b, c): (usize, usize, usize)| {
            let (u, v) = self.apply(b, c);
            (a, u, v)
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t = (x, y, z);
                    if r12(r23(r12(t))) != r23(r12(r23(t))) {
                        return Err(SolutionError::YbeViolation { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }
}

/// `xʸ := σ(y)⁻¹(x)` and `ˣy := xʸ·y`.
pub fn to_solution(cs: &CycleSetTable) -> SolutionTable {
    let n = cs.size();
    let right: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| cs.exp(x, y)).collect()).collect();
    let left = (0..n)
        .map(|x| (0..n).map(|y| cs.op(right[x][y], y)).collect())
        .collect();
    let sol = SolutionTable { left, right };
    debug_assert!(sol.check_non_degenerate().is_ok());
    debug_assert!(sol.check_involutive().is_ok());
    sol
}

/// Recovers `σ(x)` as the inverse of `y ↦ yˣ`.
pub fn from_solution(sol: &SolutionTable) -> Result<CycleSetTable, SolutionError> {
    let n = sol.size();
    let rows = (0..n)
        .map(|x| {
            let exp_by_x: Vec<usize> = (0..n).map(|y| sol.right[y][x]).collect();
            Permutation::from_images(exp_by_x)
                .map(|p| p.inverse())
                .map_err(|_| SolutionError::Degenerate { side: "right", index: x })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CycleSetTable::from_rows(rows)?)
}

/// Converts a solution given as raw tables, validating it first.
pub fn from_raw_solution(
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
) -> Result<CycleSetTable, SolutionError> {
    from_solution(&SolutionTable::verify(left, right)?)
}
