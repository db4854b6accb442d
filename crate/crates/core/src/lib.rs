//! Exact factorization, determinants, solves and inverses for cyclic and
//! anti-cyclic heptadiagonal matrices.
//!
//! The structured algorithm is an O(n) bordered LU factorization whose zero
//! pivots are replaced by a symbol `t` instead of failing, with every result
//! read off at `t = 0`. An independent dense elimination ([`oracle`]) is
//! provided to check it.
//!
//! ```
//! use hepta::{factor, Bands, CyclicHeptaMatrix, Rational};
//!
//! let mut bands = Bands::zeros(8);
//! bands.diag = (2..10).map(Rational::from).collect();
//! let h = CyclicHeptaMatrix::from_bands(bands).unwrap();
//! assert_eq!(factor(&h).determinant(), Rational::from(362880));
//! ```

pub mod dense;
pub mod factor;
pub mod fixtures;
pub mod hepta;
pub mod io;
pub mod oracle;
pub mod scalars;
pub mod solve;

pub use dense::DenseMatrix;
pub use factor::{determinant, factor, factor_float, FactorError, Factorization, LuPair, Seq};
pub use hepta::{AntiCyclicHeptaMatrix, Band, Bands, CyclicHeptaMatrix, Kind, StructureError, Structured};
pub use scalars::{Field, FloatScalar, FloatTolerance, Poly, RatFunc, Rational, ScalarError};
pub use solve::{anti_determinant, anti_invert, invert, solve, SolveError, SolveReport};
