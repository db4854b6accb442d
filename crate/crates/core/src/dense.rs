//! Row-major dense matrices, used by the oracle, for inverses and for
//! materialized factors.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::scalars::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("dimension mismatch: {left_rows}x{left_cols} against {right_rows}x{right_cols}")]
pub struct DimensionMismatch {
    pub left_rows: usize,
    pub left_cols: usize,
    pub right_rows: usize,
    pub right_cols: usize,
}

/// Rectangular matrix stored row-major. Indices are zero-based.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> DenseMatrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        DenseMatrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    /// Fails when the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, DimensionMismatch> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(DimensionMismatch {
                left_rows: n,
                left_cols: cols,
                right_rows: 1,
                right_cols: bad.len(),
            });
        }
        Ok(DenseMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> DenseMatrix<U> {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Clone, E>(&self, f: impl FnMut(&T) -> Result<U, E>) -> Result<DenseMatrix<U>, E> {
        Ok(DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    /// Left multiplication by the exchange matrix.
    pub fn reverse_rows(&self) -> Self {
        DenseMatrix::from_fn(self.rows, self.cols, |i, j| self[(self.rows - 1 - i, j)].clone())
    }

    /// Right multiplication by the exchange matrix.
    pub fn reverse_cols(&self) -> Self {
        DenseMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, self.cols - 1 - j)].clone())
    }

    pub fn from_columns(columns: Vec<Vec<T>>) -> Result<Self, DimensionMismatch> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(DimensionMismatch { left_rows: rows, left_cols: cols, right_rows: bad.len(), right_cols: 1 });
        }
        Ok(DenseMatrix::from_fn(rows, cols, |i, j| columns[j][i].clone()))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Top-left `k x k` block.
    pub fn leading_block(&self, k: usize) -> Self {
        DenseMatrix::from_fn(k, k, |i, j| self[(i, j)].clone())
    }
}

impl<T: Field> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix::filled(rows, cols, T::zero())
    }

    pub fn identity(n: usize) -> Self {
        DenseMatrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = &self[(i, j)];
                    if i == j {
                        *v == T::one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn mul(&self, rhs: &DenseMatrix<T>) -> Result<DenseMatrix<T>, DimensionMismatch> {
        if self.cols != rhs.rows {
            return Err(self.mismatch(rhs));
        }
        let mut out = DenseMatrix::<T>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].plus(&a.times(b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[T]) -> Result<Vec<T>, DimensionMismatch> {
        if self.cols != x.len() {
            return Err(DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: x.len(),
                right_cols: 1,
            });
        }
        Ok(self
            .iter_rows()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
            })
            .collect())
    }

    pub fn add(&self, rhs: &DenseMatrix<T>) -> Result<DenseMatrix<T>, DimensionMismatch> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(self.mismatch(rhs));
        }
        Ok(DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.plus(b)).collect(),
        })
    }

    fn mismatch(&self, rhs: &DenseMatrix<T>) -> DimensionMismatch {
        DimensionMismatch {
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: rhs.rows,
            right_cols: rhs.cols,
        }
    }
}

impl<T> Index<(usize, usize)> for DenseMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for DenseMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    fn m(rows: &[&[i64]]) -> DenseMatrix<Rational> {
        DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Rational::from(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn multiplies() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), m(&[&[2, 1], &[4, 3]]));
        assert!(a.mul(&m(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn reversals_are_involutions() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(a.reverse_cols(), m(&[&[3, 2, 1], &[6, 5, 4]]));
        assert_eq!(a.reverse_rows().reverse_rows(), a);
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![Rational::one()], vec![Rational::one(), Rational::zero()]];
        assert!(DenseMatrix::from_rows(rows).is_err());
    }
}
