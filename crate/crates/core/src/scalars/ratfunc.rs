use std::fmt;

use super::{Poly, Rational, ScalarError};

/// Rational function `num(t) / den(t)` over the rationals, kept in canonical form:
/// `gcd(num, den) = 1`, `den` monic, and zero represented as `0 / 1`.
///
/// Canonical form is unique, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc::constant(Rational::one())
    }

    /// The indeterminate `t` that replaces a vanished pivot.
    pub fn t() -> Self {
        RatFunc { num: Poly::t(), den: Poly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn new(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_rem(&g).unwrap().0, den.div_rem(&g).unwrap().0)
            }
        };
        let lead = den.leading().expect("nonzero denominator");
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.recip().expect("nonzero leading coefficient");
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the value does not depend on `t`.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The constant value, if this does not depend on `t`.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.constant_term())
    }

    fn both_constant(&self, rhs: &RatFunc) -> Option<(Rational, Rational)> {
        Some((self.as_constant()?, rhs.as_constant()?))
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        if let Some((a, b)) = self.both_constant(rhs) {
            return RatFunc::constant(&a + &b);
        }
        if self.den == rhs.den {
            return Self::canonical(self.num.add(&rhs.num), self.den.clone());
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Self::canonical(num, self.den.mul(&rhs.den))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        if let Some((a, b)) = self.both_constant(rhs) {
            return RatFunc::constant(&a * &b);
        }
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        Self::canonical(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Some((a, b)) = self.both_constant(rhs) {
            return Ok(RatFunc::constant(&a / &b));
        }
        Ok(Self::canonical(self.num.mul(&rhs.den), self.den.mul(&rhs.num)))
    }

    pub fn eval(&self, at: &Rational) -> Result<Rational, ScalarError> {
        let den = self.den.eval(at);
        if den.is_zero() {
            return Err(ScalarError::Pole(at.clone()));
        }
        Ok(&self.num.eval(at) / &den)
    }

    /// Value at `t = 0`; fails with `PoleAtZero` when the reduced denominator vanishes there.
    pub fn eval_at_zero(&self) -> Result<Rational, ScalarError> {
        let den = self.den.constant_term();
        if den.is_zero() {
            return Err(ScalarError::PoleAtZero);
        }
        Ok(&self.num.constant_term() / &den)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        RatFunc::constant(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(Poly::from_ints(c))
    }

    #[test]
    fn cancels_common_factor() {
        let x = poly(&[-1, 0, 1]).checked_div(&poly(&[-1, 1])).unwrap();
        assert_eq!(x, poly(&[1, 1]));
        assert_eq!(x.denom(), &Poly::one());
    }

    #[test]
    fn field_inverse() {
        let inv = RatFunc::one().checked_div(&RatFunc::t()).unwrap();
        assert_eq!(RatFunc::t().mul(&inv), RatFunc::one());
    }

    #[test]
    fn degree_drops_on_subtraction() {
        assert_eq!(poly(&[2, 1]).sub(&RatFunc::t()), RatFunc::constant(Rational::from(2)));
    }

    #[test]
    fn divide_by_zero() {
        assert_eq!(RatFunc::t().checked_div(&RatFunc::zero()), Err(ScalarError::DivisionByZero));
        assert_eq!(RatFunc::new(Poly::one(), Poly::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn evaluates_at_zero() {
        assert_eq!(poly(&[7, 3]).eval_at_zero().unwrap(), Rational::from(7));
        // (-13214 - 2292t) / (6607 + 1146t) at t = 0
        let x = RatFunc::new(Poly::from_ints(&[-13214, -2292]), Poly::from_ints(&[6607, 1146])).unwrap();
        assert_eq!(x.eval_at_zero().unwrap(), Rational::from(-2));
        let pole = RatFunc::one().checked_div(&RatFunc::t()).unwrap();
        assert_eq!(pole.eval_at_zero(), Err(ScalarError::PoleAtZero));
    }

    #[test]
    fn denominator_is_monic() {
        let x = RatFunc::new(Poly::from_ints(&[3]), Poly::from_ints(&[0, 2])).unwrap();
        assert_eq!(x.denom(), &Poly::t());
        assert_eq!(x.numer(), &Poly::constant(Rational::new(3, 2).unwrap()));
    }
}
