//! Dense exact Gaussian elimination with first-nonzero row pivoting.
//!
//! Shares no code path with the structured recurrences; it exists to check them.

use crate::dense::{DenseMatrix, DimensionMismatch};
use crate::scalars::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("matrix is singular")]
    Singular,
    #[error(transparent)]
    Dimension(#[from] DimensionMismatch),
}

/// Row-reduces `m` to upper triangular form in place, applying the same row
/// operations to `aug`. Returns the determinant.
fn eliminate(m: &mut DenseMatrix<Rational>, aug: &mut DenseMatrix<Rational>) -> Rational {
    let n = m.rows();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap_rows(p, col);
            aug.swap_rows(p, col);
            det = -det;
        }
        let pivot = m[(col, col)].clone();
        det = &det * &pivot;
        for r in col + 1..n {
            if m[(r, col)].is_zero() {
                continue;
            }
            let factor = &m[(r, col)] / &pivot;
            for c in col..n {
                let delta = &factor * &m[(col, c)];
                m[(r, c)] = &m[(r, c)] - &delta;
            }
            for c in 0..aug.cols() {
                let delta = &factor * &aug[(col, c)];
                aug[(r, c)] = &aug[(r, c)] - &delta;
            }
        }
    }
    det
}

fn back_substitute(u: &DenseMatrix<Rational>, rhs: &DenseMatrix<Rational>) -> DenseMatrix<Rational> {
    let n = u.rows();
    let mut x = DenseMatrix::<Rational>::zeros(n, rhs.cols());
    for c in 0..rhs.cols() {
        for i in (0..n).rev() {
            let mut acc = rhs[(i, c)].clone();
            for j in i + 1..n {
                if !u[(i, j)].is_zero() {
                    acc = &acc - &(&u[(i, j)] * &x[(j, c)]);
                }
            }
            x[(i, c)] = &acc / &u[(i, i)];
        }
    }
    x
}

fn square(m: &DenseMatrix<Rational>) -> Result<(), OracleError> {
    if m.is_square() {
        Ok(())
    } else {
        Err(DimensionMismatch { left_rows: m.rows(), left_cols: m.cols(), right_rows: m.cols(), right_cols: m.rows() }.into())
    }
}

pub fn oracle_det(m: &DenseMatrix<Rational>) -> Result<Rational, OracleError> {
    square(m)?;
    let mut work = m.clone();
    let mut none = DenseMatrix::<Rational>::zeros(m.rows(), 0);
    Ok(eliminate(&mut work, &mut none))
}

pub fn oracle_solve(m: &DenseMatrix<Rational>, rhs: &[Rational]) -> Result<Vec<Rational>, OracleError> {
    square(m)?;
    if rhs.len() != m.rows() {
        return Err(DimensionMismatch { left_rows: m.rows(), left_cols: m.cols(), right_rows: rhs.len(), right_cols: 1 }.into());
    }
    let mut work = m.clone();
    let mut aug = DenseMatrix::from_fn(rhs.len(), 1, |i, _| rhs[i].clone());
    if eliminate(&mut work, &mut aug).is_zero() {
        return Err(OracleError::Singular);
    }
    Ok(back_substitute(&work, &aug).column(0))
}

pub fn oracle_invert(m: &DenseMatrix<Rational>) -> Result<DenseMatrix<Rational>, OracleError> {
    square(m)?;
    let mut work = m.clone();
    let mut aug = DenseMatrix::<Rational>::identity(m.rows());
    if eliminate(&mut work, &mut aug).is_zero() {
        return Err(OracleError::Singular);
    }
    Ok(back_substitute(&work, &aug))
}

/// The reversal permutation `P`, with `P[i, n+1-i] = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangeMatrix {
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `P M`: reverses rows.
    Left,
    /// `M P`: reverses columns.
    Right,
}

impl ExchangeMatrix {
    pub fn new(n: usize) -> Self {
        ExchangeMatrix { n }
    }

    pub fn to_dense(self) -> DenseMatrix<Rational> {
        DenseMatrix::<Rational>::identity(self.n).reverse_cols()
    }

    /// `(-1)^floor(n/2)`.
    pub fn determinant(self) -> Rational {
        if (self.n / 2) % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        }
    }

    pub fn apply(self, m: &DenseMatrix<Rational>, side: Side) -> Result<DenseMatrix<Rational>, DimensionMismatch> {
        let mismatch = || DimensionMismatch { left_rows: self.n, left_cols: self.n, right_rows: m.rows(), right_cols: m.cols() };
        match side {
            Side::Left if m.rows() == self.n => Ok(m.reverse_rows()),
            Side::Right if m.cols() == self.n => Ok(m.reverse_cols()),
            _ => Err(mismatch()),
        }
    }
}

pub fn exchange_apply(p: ExchangeMatrix, m: &DenseMatrix<Rational>, side: Side) -> Result<DenseMatrix<Rational>, DimensionMismatch> {
    p.apply(m, side)
}
