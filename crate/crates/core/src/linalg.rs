//! Dense Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::exactpoly::Rat;

/// Row-major dense matrix of rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data: Vec<Rat> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * c, "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduces in place to reduced row echelon form and returns the pivot
    /// columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = Rat::one() / self.get(r, c);
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    let v = self.get(i, j) - &f * self.get(r, j);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.forward_eliminate()
    }

    /// Row echelon form without back substitution; cheaper when only the
    /// rank is needed.
    fn forward_eliminate(&mut self) -> usize {
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let pivot = self.get(r, c).clone();
            for i in r + 1..self.rows {
                if self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c) / &pivot;
                for j in c..self.cols {
                    let v = self.get(i, j) - &f * self.get(r, j);
                    self.set(i, j, v);
                }
            }
            r += 1;
        }
        r
    }
}

/// Solution set of `A x = b`.
#[derive(Debug, Clone, PartialEq)]
pub enum LinearSolution {
    Inconsistent,
    Unique(Vec<Rat>),
    /// Underdetermined: the independent equations `rows * x = rhs` in reduced
    /// row echelon form.
    Family { rows: Vec<Vec<Rat>>, rhs: Vec<Rat> },
}

pub fn solve(a: &RatMatrix, b: &[Rat]) -> LinearSolution {
    assert_eq!(a.rows(), b.len());
    let n = a.cols();
    let mut aug = RatMatrix::zeros(a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n, b[i].clone());
    }
    let pivots = aug.rref();
    if pivots.last() == Some(&n) {
        return LinearSolution::Inconsistent;
    }
    if pivots.len() == n {
        return LinearSolution::Unique((0..n).map(|i| aug.get(i, n).clone()).collect());
    }
    let rows = (0..pivots.len()).map(|i| aug.row(i)[..n].to_vec()).collect();
    let rhs = (0..pivots.len()).map(|i| aug.get(i, n).clone()).collect();
    LinearSolution::Family { rows, rhs }
}

/// Minimum Euclidean-norm solution of a full-row-rank system `R x = c`,
/// `x = R^T (R R^T)^{-1} c`, via exact normal equations.
pub fn min_norm_solution(rows: &[Vec<Rat>], rhs: &[Rat]) -> Vec<Rat> {
    let r = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let gram = RatMatrix::from_rows(
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        rows[i]
                            .iter()
                            .zip(&rows[j])
                            .fold(Rat::zero(), |acc, (x, y)| acc + x * y)
                    })
                    .collect()
            })
            .collect(),
    );
    let y = match solve(&gram, rhs) {
        LinearSolution::Unique(y) => y,
        other => panic!("Gram matrix of independent rows must be invertible: {other:?}"),
    };
    (0..n)
        .map(|j| (0..r).fold(Rat::zero(), |acc, i| acc + &rows[i][j] * &y[i]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[1, 2], &[3, 4]]).rank(), 2);
        assert_eq!(m(&[&[0, 0, 0]]).rank(), 0);
        assert_eq!(RatMatrix::zeros(0, 3).rank(), 0);
    }

    #[test]
    fn solve_classifies_systems() {
        let one = vec![rat_int(1), rat_int(1)];
        assert_eq!(
            solve(&m(&[&[2, 0], &[0, 3]]), &one),
            LinearSolution::Unique(vec![rat(1, 2), rat(1, 3)])
        );
        assert_eq!(
            solve(&m(&[&[2], &[3]]), &one),
            LinearSolution::Inconsistent
        );
        match solve(&m(&[&[1, 1], &[2, 2]]), &[rat_int(1), rat_int(2)]) {
            LinearSolution::Family { rows, rhs } => {
                assert_eq!(rows.len(), 1);
                assert_eq!(min_norm_solution(&rows, &rhs), vec![rat(1, 2), rat(1, 2)]);
            }
            other => panic!("{other:?}"),
        }
    }
}
