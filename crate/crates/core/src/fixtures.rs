//! The 10x10 worked example used throughout the tests and examples.

use crate::dense::DenseMatrix;
use crate::hepta::{AntiCyclicHeptaMatrix, Bands, CyclicHeptaMatrix};
use crate::scalars::Rational;

/// Dense rows of the 10x10 cyclic heptadiagonal example.
pub const CYCLIC_10: [[i64; 10]; 10] = [
    [1, -1, 1, -2, 0, 0, 0, 0, 5, -4],
    [2, 1, 4, 1, -5, 0, 0, 0, 0, 1],
    [2, 1, -1, 1, 2, 3, 0, 0, 0, 0],
    [2, -2, 3, 1, 5, -6, 0, 0, 0, 0],
    [0, 1, 1, 7, 1, 8, 1, 2, 0, 0],
    [0, 0, -1, -1, -9, -1, -1, -1, 1, 0],
    [0, 0, 0, 2, 2, 6, 2, 3, 1, -3],
    [0, 0, 0, 0, -2, -2, 1, 1, 3, 5],
    [6, 0, 0, 0, 0, 3, 1, 3, 4, -1],
    [1, 4, 0, 0, 0, 0, 2, 3, 4, 1],
];

/// Dense rows of its anti-cyclic mirror (each row reversed).
pub const ANTI_10: [[i64; 10]; 10] = [
    [-4, 5, 0, 0, 0, 0, -2, 1, -1, 1],
    [1, 0, 0, 0, 0, -5, 1, 4, 1, 2],
    [0, 0, 0, 0, 3, 2, 1, -1, 1, 2],
    [0, 0, 0, 0, -6, 5, 1, 3, -2, 2],
    [0, 0, 2, 1, 8, 1, 7, 1, 1, 0],
    [0, 1, -1, -1, -1, -9, -1, -1, 0, 0],
    [-3, 1, 3, 2, 6, 2, 2, 0, 0, 0],
    [5, 3, 1, 1, -2, -2, 0, 0, 0, 0],
    [-1, 4, 3, 1, 3, 0, 0, 0, 0, 6],
    [1, 4, 3, 2, 0, 0, 0, 0, 4, 1],
];

pub fn dense<const N: usize>(rows: &[[i64; N]; N]) -> DenseMatrix<Rational> {
    DenseMatrix::from_fn(N, N, |i, j| Rational::from(rows[i][j]))
}

/// Band families of the cyclic example, in `d, a, A, C, b, B, D` order.
pub fn cyclic_10_bands() -> Bands {
    Bands::from_ints([
        &[1, 1, -1, 1, 1, -1, 2, 1, 4, 1],
        &[-1, 4, 1, 5, 8, -1, 3, 3, -1, 1],
        &[1, 1, 2, -6, 1, -1, 1, 5, 6, 4],
        &[-2, -5, 3, 0, 2, 1, -3, 0, 0, 0],
        &[-4, 2, 1, 3, 7, -9, 6, 1, 3, 4],
        &[5, 1, 2, -2, 1, -1, 2, -2, 1, 3],
        &[0, 0, 0, 2, 1, -1, 2, -2, 3, 2],
    ])
}

pub fn cyclic_10() -> CyclicHeptaMatrix {
    CyclicHeptaMatrix::from_bands(cyclic_10_bands()).expect("example bands are valid")
}

pub fn anti_10() -> AntiCyclicHeptaMatrix {
    AntiCyclicHeptaMatrix::from_core(cyclic_10())
}
