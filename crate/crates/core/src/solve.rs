//! Linear solves and inverses on top of the bordered factorization.
//!
//! Each solve is one forward sweep through L and one backward sweep through
//! U, both O(n). Work stays in rational functions of `t` until the final
//! components are read off at `t = 0`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::dense::DenseMatrix;
use crate::factor::{factor, Factorization};
use crate::hepta::{AntiCyclicHeptaMatrix, CyclicHeptaMatrix, StructureError, Structured};
use crate::scalars::{Field, FloatScalar, RatFunc, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("matrix is singular (determinant is exactly zero)")]
    Singular,
    #[error("component x_{index} has a pole at t = 0; the matrix is singular or the factorization is inconsistent (run `verify`)")]
    SingularComponent { index: usize },
    #[error("solution fails the exact residual check at row {row}")]
    ResidualMismatch { row: usize },
    #[error(transparent)]
    Structure(#[from] StructureError),
}

impl SolveError {
    pub fn is_singular(&self) -> bool {
        matches!(self, SolveError::Singular | SolveError::SingularComponent { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub solution: Vec<Rational>,
    pub substituted_pivots: BTreeSet<usize>,
    /// When set, the matrix applied to `solution` reproduced the right-hand side exactly.
    pub residual_checked: bool,
}

/// Forward and back substitution over the field the factorization lives in.
pub fn substitute<F: Field>(fz: &Factorization<F>, rhs: &[F]) -> Vec<F> {
    let n = fz.n;
    assert_eq!(rhs.len(), n, "right-hand side length");
    // 1-based scratch
    let mut y = vec![F::zero(); n + 1];
    for i in 1..=n - 2 {
        let mut acc = rhs[i - 1].clone();
        if i >= 4 {
            acc = acc.minus(&fz.m3[i].times(&y[i - 3]));
        }
        if i >= 3 {
            acc = acc.minus(&fz.e[i].times(&y[i - 2]));
        }
        if i >= 2 {
            acc = acc.minus(&fz.f[i].times(&y[i - 1]));
        }
        y[i] = acc;
    }
    let border = |weights: &[F], upto: usize, y: &[F]| {
        (1..=upto).fold(F::zero(), |acc, j| if weights[j].is_zero() { acc } else { acc.plus(&weights[j].times(&y[j])) })
    };
    y[n - 1] = rhs[n - 2].minus(&border(&fz.k, n - 2, &y));
    y[n] = rhs[n - 1].minus(&border(&fz.h, n - 1, &y));

    let mut x = vec![F::zero(); n + 1];
    x[n] = y[n].divide(&fz.alpha[n]);
    x[n - 1] = y[n - 1].minus(&fz.v[n - 1].times(&x[n])).divide(&fz.alpha[n - 1]);
    for i in (1..=n - 2).rev() {
        let mut acc = y[i].minus(&fz.w[i].times(&x[n - 1])).minus(&fz.v[i].times(&x[n]));
        if i <= n - 3 {
            acc = acc.minus(&fz.g[i].times(&x[i + 1]));
        }
        if i <= n - 4 {
            acc = acc.minus(&fz.z[i].times(&x[i + 2]));
        }
        if i <= n - 5 {
            acc = acc.minus(&fz.c[i].times(&x[i + 3]));
        }
        x[i] = acc.divide(&fz.alpha[i]);
    }
    x.remove(0);
    x
}

fn settle(x: Vec<RatFunc>) -> Result<Vec<Rational>, SolveError> {
    x.into_iter()
        .enumerate()
        .map(|(i, xi)| xi.eval_at_zero().map_err(|_| SolveError::SingularComponent { index: i + 1 }))
        .collect()
}

/// Substitution carried out over rational functions, read off at `t = 0`.
/// Slow once pivots have been substituted; kept as a cross-check.
pub fn solve_symbolic(fz: &Factorization<RatFunc>, rhs: &[Rational]) -> Result<Vec<Rational>, SolveError> {
    if fz.determinant().is_zero() {
        return Err(SolveError::Singular);
    }
    let rhs: Vec<RatFunc> = rhs.iter().cloned().map(RatFunc::from).collect();
    settle(substitute(fz, &rhs))
}

/// The factorization specialized at `|S| + 1` rational values of `t`.
///
/// `det(H + tE) x(t)` is a polynomial of degree at most `|S|` in each
/// component, so `x(0)` is a fixed combination of the solutions at the nodes.
pub struct Specialized {
    nodes: Vec<Factorization<Rational>>,
    weights: Vec<Rational>,
}

impl Specialized {
    pub fn new(fz: &Factorization<RatFunc>) -> Result<Self, SolveError> {
        let det = fz.determinant();
        if det.is_zero() {
            return Err(SolveError::Singular);
        }
        let n = fz.order();
        let (points, nodes): (Vec<Rational>, Vec<_>) = if fz.substituted().is_empty() {
            let at_zero = fz.specialize(&Rational::zero()).expect("no substitution means no poles");
            (vec![Rational::zero()], vec![at_zero])
        } else {
            // only finitely many t are bad, so this terminates
            (1..)
                .map(Rational::from)
                .filter_map(|t0| fz.specialize(&t0).map(|s| (t0, s)))
                .take(fz.substituted().len() + 1)
                .unzip()
        };
        let weights = points
            .iter()
            .zip(&nodes)
            .enumerate()
            .map(|(j, (tj, node))| {
                let lagrange = points
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .fold(Rational::one(), |acc, (_, tk)| &acc * &(tk / &(tk - tj)));
                &(&lagrange * node.u(n)) / &det
            })
            .collect();
        Ok(Specialized { nodes, weights })
    }

    pub fn nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn solve(&self, rhs: &[Rational]) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); rhs.len()];
        for (node, w) in self.nodes.iter().zip(&self.weights) {
            for (xi, yi) in x.iter_mut().zip(substitute(node, rhs)) {
                *xi = &*xi + &(w * &yi);
            }
        }
        x
    }
}

fn solve_unchecked(fz: &Factorization<RatFunc>, rhs: &[Rational]) -> Result<Vec<Rational>, SolveError> {
    Ok(Specialized::new(fz)?.solve(rhs))
}

/// Solves `H x = rhs` exactly and checks the residual.
pub fn solve(fz: &Factorization<RatFunc>, h: &CyclicHeptaMatrix, rhs: &[Rational]) -> Result<SolveReport, SolveError> {
    if rhs.len() != h.order() {
        return Err(StructureError::VectorLength { expected: h.order(), found: rhs.len() }.into());
    }
    let solution = solve_unchecked(fz, rhs)?;
    check_residual(&h.apply(&solution)?, rhs)?;
    Ok(SolveReport { solution, substituted_pivots: fz.substituted().clone(), residual_checked: true })
}

/// Solves `M x = rhs` for either flavour; anti matrices reuse the core's factorization.
pub fn solve_structured(fz: &Factorization<RatFunc>, m: &Structured, rhs: &[Rational]) -> Result<SolveReport, SolveError> {
    match m {
        Structured::Cyclic(h) => solve(fz, h, rhs),
        Structured::Anti(anti) => {
            let core = anti.core();
            if rhs.len() != core.order() {
                return Err(StructureError::VectorLength { expected: core.order(), found: rhs.len() }.into());
            }
            // M = H P, so M x = r  <=>  H (P x) = r
            let mut solution = solve_unchecked(fz, rhs)?;
            solution.reverse();
            check_residual(&anti.apply(&solution)?, rhs)?;
            Ok(SolveReport { solution, substituted_pivots: fz.substituted().clone(), residual_checked: true })
        }
    }
}

fn check_residual(lhs: &[Rational], rhs: &[Rational]) -> Result<(), SolveError> {
    match lhs.iter().zip(rhs).position(|(a, b)| a != b) {
        Some(i) => Err(SolveError::ResidualMismatch { row: i + 1 }),
        None => Ok(()),
    }
}

/// Float solve. The factorization must already have succeeded.
pub fn solve_float(fz: &Factorization<FloatScalar>, rhs: &[f64]) -> Vec<f64> {
    let rhs: Vec<FloatScalar> = rhs.iter().map(|&v| FloatScalar::new(v).unwrap_or_default()).collect();
    substitute(fz, &rhs).into_iter().map(FloatScalar::value).collect()
}

/// Inverse from an existing factorization, one solve per unit vector, columns in parallel.
pub fn invert_with(fz: &Factorization<RatFunc>) -> Result<DenseMatrix<Rational>, SolveError> {
    let n = fz.order();
    let sp = Specialized::new(fz)?;
    let columns = (0..n)
        .into_par_iter()
        .map(|j| {
            let unit: Vec<Rational> = (0..n).map(|i| if i == j { Rational::one() } else { Rational::zero() }).collect();
            sp.solve(&unit)
        })
        .collect::<Vec<_>>();
    Ok(DenseMatrix::from_columns(columns).expect("n columns of length n"))
}

pub fn invert(h: &CyclicHeptaMatrix) -> Result<DenseMatrix<Rational>, SolveError> {
    invert_with(&factor(h))
}

/// `M^{-1} = P H^{-1}`: the core's inverse with its rows reversed.
pub fn anti_invert(m: &AntiCyclicHeptaMatrix) -> Result<DenseMatrix<Rational>, SolveError> {
    invert(m.core()).map(|inv| inv.reverse_rows())
}

pub fn invert_structured(fz: &Factorization<RatFunc>, m: &Structured) -> Result<DenseMatrix<Rational>, SolveError> {
    let inv = invert_with(fz)?;
    Ok(match m {
        Structured::Cyclic(_) => inv,
        Structured::Anti(_) => inv.reverse_rows(),
    })
}

/// Sign of the reversal permutation of order `n`.
fn reversal_sign(n: usize) -> Rational {
    if (n / 2) % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `det M = det(H) det(P)`.
pub fn anti_determinant(m: &AntiCyclicHeptaMatrix) -> Rational {
    let det = factor(m.core()).determinant();
    &det * &reversal_sign(m.order())
}

pub fn structured_determinant(fz: &Factorization<RatFunc>, m: &Structured) -> Rational {
    let det = fz.determinant();
    match m {
        Structured::Cyclic(_) => det,
        Structured::Anti(_) => &det * &reversal_sign(m.order()),
    }
}

/// Float inverse, column by column.
pub fn invert_float(fz: &Factorization<FloatScalar>) -> DenseMatrix<f64> {
    let n = fz.order();
    let columns: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let unit: Vec<f64> = (0..n).map(|i| if i == j { 1.0 } else { 0.0 }).collect();
            solve_float(fz, &unit)
        })
        .collect();
    DenseMatrix::from_columns(columns).expect("n columns of length n")
}
