//! Dense exact linear algebra over the rationals: reduced row-echelon
//! form, rank, and full classification of linear systems.

use super::{numer_abs, Rat};
use num_traits::{One, Zero};

/// Dense matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

/// Result of solving `A x = b` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Exactly one solution.
    Unique(Vec<Rat>),
    /// Infinitely many solutions: one particular solution plus a basis
    /// of the nullspace of `A`.
    Family {
        particular: Vec<Rat>,
        nullspace: Vec<Vec<Rat>>,
    },
    /// No solution.
    Inconsistent,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix constructor"
        );
        QMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// In-place reduced row-echelon form; returns the pivot columns.
    ///
    /// The pivot within a column is chosen with the smallest numerator
    /// magnitude, which keeps intermediate entries small. Any exact
    /// choice would be correct.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let pivot_row = (row..self.rows)
                .filter(|&r| !self.at(r, col).is_zero())
                .min_by_key(|&r| numer_abs(self.at(r, col)));
            let Some(pivot_row) = pivot_row else { continue };
            self.swap_rows(row, pivot_row);
            let inv = self.at(row, col).recip();
            for c in col..self.cols {
                let v = self.at(row, c) * &inv;
                *self.at_mut(row, c) = v;
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    let v = self.at(r, c) - &factor * self.at(row, c);
                    *self.at_mut(r, c) = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Rank via exact elimination (does not modify `self`).
    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Solves `A x = b` exactly and classifies the solution set.
    /// Panics if `b` has the wrong length.
    pub fn solve(&self, b: &[Rat]) -> SolveOutcome {
        assert_eq!(b.len(), self.rows, "dimension mismatch");
        let mut aug = QMatrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols) = b[r].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return SolveOutcome::Inconsistent;
        }
        let mut particular = vec![Rat::zero(); self.cols];
        for (r, &col) in pivots.iter().enumerate() {
            particular[col] = aug.at(r, self.cols).clone();
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return SolveOutcome::Unique(particular);
        }
        let nullspace = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (r, &col) in pivots.iter().enumerate() {
                    v[col] = -aug.at(r, f).clone();
                }
                v
            })
            .collect();
        SolveOutcome::Family {
            particular,
            nullspace,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    fn vecr(vals: &[i64]) -> Vec<Rat> {
        vals.iter().map(|&v| rat_int(v)).collect()
    }

    #[test]
    fn identity_solves_uniquely() {
        let a = QMatrix::identity(2);
        assert_eq!(a.solve(&vecr(&[1, 2])), SolveOutcome::Unique(vecr(&[1, 2])));
    }

    #[test]
    fn zero_row_is_inconsistent() {
        let a = QMatrix::zero(1, 2);
        assert_eq!(a.solve(&vecr(&[1])), SolveOutcome::Inconsistent);
    }

    #[test]
    fn dependent_rows_give_a_family() {
        // Hand row-reduction: [[1,1],[2,2]] ~ [[1,1],[0,0]], rank 1,
        // particular (3,0), nullspace spanned by (-1,1).
        let a = QMatrix::from_rows(vec![vecr(&[1, 1]), vecr(&[2, 2])]);
        match a.solve(&vecr(&[3, 6])) {
            SolveOutcome::Family {
                particular,
                nullspace,
            } => {
                assert_eq!(nullspace.len(), 1);
                assert_eq!(a.apply(&particular), vecr(&[3, 6]));
                assert_eq!(a.apply(&nullspace[0]), vecr(&[0, 0]));
            }
            other => panic!("expected a solution family, got {other:?}"),
        }
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn solutions_satisfy_the_system_exactly() {
        // Deterministic pseudo-random systems; every returned solution
        // must satisfy A x = b exactly and rank must match pivot count.
        let mut state = 0x853c49e6748fea9bu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            rat((state % 21) as i64 - 10, ((state >> 16) % 5 + 1) as i64)
        };
        for _ in 0..25 {
            let rows = 4;
            let cols = 3;
            let mut a = QMatrix::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    *a.at_mut(r, c) = next();
                }
            }
            let x_true: Vec<Rat> = (0..cols).map(|_| next()).collect();
            let b = a.apply(&x_true);
            match a.solve(&b) {
                SolveOutcome::Unique(x) => assert_eq!(a.apply(&x), b),
                SolveOutcome::Family {
                    particular,
                    nullspace,
                } => {
                    assert_eq!(a.apply(&particular), b);
                    for v in &nullspace {
                        assert!(a.apply(v).iter().all(|e| e.is_zero()));
                    }
                }
                SolveOutcome::Inconsistent => {
                    panic!("a consistent-by-construction system was reported inconsistent")
                }
            }
        }
    }
}
