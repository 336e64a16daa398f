//! Dense matrices over the rationals and exact Gaussian elimination.
//!
//! Pivots are the first non-zero entry in each column; exact arithmetic needs
//! no pivoting strategy, and this keeps results deterministic.

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::algebra::{fmt_rational, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Solution set of `A x = b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LinearSolution {
    Unique(Vec<Rational>),
    Inconsistent,
    /// `particular + span(kernel)`; kernel vectors are ordered by free column.
    Affine {
        particular: Vec<Rational>,
        kernel: Vec<Vec<Rational>>,
    },
}

/// Reduced row-echelon form with the list of pivot columns.
struct Echelon {
    matrix: Matrix,
    pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| {
            if r == c {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Gauss–Jordan elimination restricted to the first `limit` columns.
    fn echelon(mut self, limit: usize) -> Echelon {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..limit {
            if row == self.rows {
                break;
            }
            let Some(found) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, found);
            let inv = self.get(row, col).recip();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = self.get(r, c) - &factor * self.get(row, c);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon {
            matrix: self,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().echelon(self.cols).pivots.len()
    }

    /// Exact determinant by elimination; panics on a non-square matrix.
    pub fn determinant(&self) -> Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(found) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Rational::zero();
            };
            if found != col {
                m.swap_rows(found, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) / &pivot;
                for c in col..n {
                    let v = m.get(r, c) - &factor * m.get(col, c);
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let augmented = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let ech = augmented.echelon(n);
        if ech.pivots.len() < n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |r, c| {
            ech.matrix.get(r, n + c).clone()
        }))
    }

    /// Classifies and solves `self · x = b`.
    pub fn solve(&self, b: &[Rational]) -> LinearSolution {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let n = self.cols;
        let augmented = Matrix::from_fn(self.rows, n + 1, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let Echelon { matrix: m, pivots } = augmented.echelon(n);
        // a zero row with a non-zero right-hand side means no solution
        if (pivots.len()..m.rows).any(|r| !m.get(r, n).is_zero()) {
            return LinearSolution::Inconsistent;
        }
        let mut particular = vec![Rational::zero(); n];
        for (r, &p) in pivots.iter().enumerate() {
            particular[p] = m.get(r, n).clone();
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return LinearSolution::Unique(particular);
        }
        let kernel = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); n];
                v[f] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f);
                }
                v
            })
            .collect();
        LinearSolution::Affine { particular, kernel }
    }

    /// Basis of the null space, ordered by free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        match self.solve(&vec![Rational::zero(); self.rows]) {
            LinearSolution::Affine { kernel, .. } => kernel,
            _ => Vec::new(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shapes");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).fold(Rational::zero(), |acc, k| {
                let a = self.get(r, k);
                if a.is_zero() {
                    acc
                } else {
                    acc + a * rhs.get(k, c)
                }
            })
        })
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(fmt_rational).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (idx, row) in cells.iter().enumerate() {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[{}]", line.join(" "))?;
            if idx + 1 < cells.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a = m(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // 2(3·-2 - 4·5) - (-1)(1·-2 - 0) + 0 = -52 - 2
        assert_eq!(a.determinant(), int(-54));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), int(-1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), int(0));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn affine_solution_orders_kernel_by_free_column() {
        let a = m(&[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, -2], &[0, 0, 2, 0]]);
        match a.solve(&[int(0), int(0), int(0), int(1)]) {
            LinearSolution::Affine { particular, kernel } => {
                assert_eq!(particular, vec![int(0), int(0), rat(1, 2), int(0)]);
                assert_eq!(kernel.len(), 2);
                assert_eq!(kernel[0], vec![int(1), int(0), int(0), int(0)]);
                assert_eq!(kernel[1], vec![int(0), int(1), int(0), int(0)]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            a.solve(&[int(1), int(0), int(0), int(0)]),
            LinearSolution::Inconsistent
        );
    }

    #[test]
    fn rectangular_kernel() {
        let a = m(&[&[1, 2, 3]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(a.mul_vec(v), vec![int(0)]);
        }
    }
}
