use std::fmt;

use super::{Rational, ScalarError};

/// Thresholds for deciding that a floating-point pivot has vanished.
///
/// A pivot `p` taken against diagonal entry `d` is treated as zero when
/// `|p| <= abs + rel * max(1, |d|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatTolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for FloatTolerance {
    fn default() -> Self {
        FloatTolerance { abs: 0.0, rel: 1e-12 }
    }
}

impl FloatTolerance {
    pub fn threshold(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale.abs().max(1.0)
    }
}

/// Hardware double used by the performance path. Never NaN or infinite when
/// built through [`FloatScalar::new`].
#[derive(Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct FloatScalar(f64);

impl FloatScalar {
    pub fn new(value: f64) -> Result<Self, ScalarError> {
        if value.is_finite() {
            Ok(FloatScalar(value))
        } else {
            Err(ScalarError::NonFinite)
        }
    }

    pub(crate) fn raw(value: f64) -> Self {
        FloatScalar(value)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn is_zero_within(self, scale: f64, tol: &FloatTolerance) -> bool {
        self.0.abs() <= tol.threshold(scale)
    }

    pub fn from_rational(r: &Rational) -> Self {
        FloatScalar(r.to_f64())
    }
}

impl fmt::Debug for FloatScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.0)
    }
}

impl fmt::Display for FloatScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
