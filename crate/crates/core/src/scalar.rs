//! Base-field scalars.
//!
//! Everything in the crate is generic over [`Scalar`], implemented for exact
//! rationals and for `f64`. Exact scalars compare with `==`; float scalars go
//! through [`Tolerance`] for every zero or equality decision.

use core::fmt::{Debug, Display};
use core::ops::Neg;

use num_bigint::BigInt;
use num_traits::{Float, Num, Signed, ToPrimitive};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_eps: f64,
    pub rel_eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_eps: 1e-10,
            rel_eps: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn new(abs_eps: f64, rel_eps: f64) -> Self {
        Tolerance { abs_eps, rel_eps }
    }

    /// `|x| <= abs_eps + rel_eps * scale`
    pub fn is_zero_at(&self, x: f64, scale: f64) -> bool {
        x.abs() <= self.abs_eps + self.rel_eps * scale
    }

    pub fn bound(&self, scale: f64) -> f64 {
        self.abs_eps + self.rel_eps * scale
    }
}

pub trait Scalar: Clone + Debug + Display + PartialEq + PartialOrd + Num + Neg<Output = Self> {
    /// True for backends where arithmetic is exact and `==` is authoritative.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_rational(q: &Rational) -> Self;

    fn to_f64(&self) -> f64;

    /// Absolute value as a float, used to build zero-test scales.
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }

    /// Square root inside the field: exact mode returns `Some` only for
    /// perfect rational squares, float mode for non-negative values.
    fn sqrt(&self) -> Option<Self>;

    fn is_negligible(&self, scale: f64, tol: &Tolerance) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            tol.is_zero_at(self.to_f64(), scale)
        }
    }

    fn approx_eq(&self, other: &Self, scale: f64, tol: &Tolerance) -> bool {
        if Self::EXACT {
            self == other
        } else {
            (self.clone() - other.clone()).is_negligible(scale, tol)
        }
    }

    fn is_neg(&self) -> bool {
        *self < Self::zero()
    }
}

fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn sqrt(&self) -> Option<Self> {
        let n = perfect_sqrt(self.numer())?;
        let d = perfect_sqrt(self.denom())?;
        Some(Rational::new(n, d))
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn from_rational(q: &Rational) -> Self {
        ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn sqrt(&self) -> Option<Self> {
        if *self >= 0.0 {
            Some(Float::sqrt(*self))
        } else {
            None
        }
    }
}

/// `1/2` in the scalar field.
pub(crate) fn half<S: Scalar>() -> S {
    S::one() / (S::one() + S::one())
}

pub(crate) fn two<S: Scalar>() -> S {
    S::one() + S::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn rational_sqrt_only_for_squares() {
        assert_eq!(
            Rational::from_ratio(9, 4).sqrt(),
            Some(Rational::from_ratio(3, 2))
        );
        assert_eq!(Rational::from_i64(2).sqrt(), None);
        assert_eq!(Rational::from_i64(-4).sqrt(), None);
        assert_eq!(Rational::zero().sqrt(), Some(Rational::zero()));
    }

    #[test]
    fn rationals_are_canonical() {
        let q = Rational::from_ratio(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
    }

    #[test]
    fn float_zero_at_scale() {
        let tol = Tolerance::default();
        assert!(1e-11f64.is_negligible(0.0, &tol));
        assert!(!1e-8f64.is_negligible(0.0, &tol));
        assert!(1e-8f64.is_negligible(100.0, &tol));
        assert!(Rational::zero().is_negligible(1e9, &tol));
        assert!(!Rational::from_ratio(1, 1_000_000_000).is_negligible(1e9, &tol));
    }
}
