//! Exact and floating-point scalars.
//!
//! The structured algorithms are written once against [`Field`] and run over
//! [`RatFunc`] (exact, with the symbolic pivot `t`), [`Rational`] (used by the
//! dense oracle) or [`FloatScalar`] (performance path).

mod float;
mod poly;
mod ratfunc;
mod rational;

use std::fmt;

pub use float::{FloatScalar, FloatTolerance};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at t = 0")]
    PoleAtZero,
    #[error("denominator vanishes at t = {0}")]
    Pole(Rational),
    #[error("cannot parse {0:?} as a rational (expected an integer or p/q)")]
    Parse(String),
    #[error("non-finite floating-point value")]
    NonFinite,
}

/// Arithmetic shared by every scalar the factorization runs over.
///
/// `divide` requires a nonzero divisor and panics otherwise; the structured
/// code only ever divides by admitted pivots.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn divide(&self, rhs: &Self) -> Self;
    /// Exactly zero (identically zero for rational functions).
    fn is_zero(&self) -> bool;
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn divide(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_rational(r: &Rational) -> Self {
        RatFunc::constant(r.clone())
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn divide(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("rational function division by zero")
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl Field for FloatScalar {
    fn zero() -> Self {
        FloatScalar::raw(0.0)
    }
    fn one() -> Self {
        FloatScalar::raw(1.0)
    }
    fn from_rational(r: &Rational) -> Self {
        FloatScalar::from_rational(r)
    }
    fn plus(&self, rhs: &Self) -> Self {
        FloatScalar::raw(self.value() + rhs.value())
    }
    fn minus(&self, rhs: &Self) -> Self {
        FloatScalar::raw(self.value() - rhs.value())
    }
    fn times(&self, rhs: &Self) -> Self {
        FloatScalar::raw(self.value() * rhs.value())
    }
    fn divide(&self, rhs: &Self) -> Self {
        assert!(rhs.value() != 0.0, "floating-point division by zero");
        FloatScalar::raw(self.value() / rhs.value())
    }
    fn is_zero(&self) -> bool {
        self.value() == 0.0
    }
}
