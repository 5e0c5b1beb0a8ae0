//! Scalar abstraction shared by the floating-point and exact-rational code paths.
//!
//! Every tensor operation and invariant polynomial in this crate is written
//! once, generically over [`Scalar`], so the two evaluation modes cannot
//! drift apart. `f64` gives the fast approximate path; [`Rational`] gives the
//! exact path used for rank certification.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigInt;

/// Exact arbitrary-precision fraction, always stored reduced with a positive
/// denominator (canonical zero is 0/1).
pub type Rational = num::BigRational;

/// Field-like scalar with an exact halving operation.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;

    /// Exact division by two. Used by the symmetric/skew split and the
    /// epsilon contraction, both of which carry a factor 1/2.
    fn half(&self) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    /// `false` only for non-finite floating-point values; exact scalars are
    /// always finite.
    fn is_finite_value(&self) -> bool {
        true
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn half(&self) -> Self {
        0.5 * self
    }

    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        num::Zero::zero()
    }

    fn one() -> Self {
        num::One::one()
    }

    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn half(&self) -> Self {
        self / Rational::from_integer(BigInt::from(2))
    }

    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_half_is_exact() {
        assert_eq!(3.0f64.half(), 1.5);
        assert_eq!((-1.0f64).half(), -0.5);
    }

    #[test]
    fn rational_half_is_exact() {
        let r = Rational::from_int(7).half();
        assert_eq!(r, Rational::new(BigInt::from(7), BigInt::from(2)));
    }

    #[test]
    fn finiteness() {
        assert!(1.0f64.is_finite_value());
        assert!(!f64::NAN.is_finite_value());
        assert!(!f64::INFINITY.is_finite_value());
        assert!(Rational::from_int(-3).is_finite_value());
    }
}
