//! Overflow-checked exact integer arithmetic.
//!
//! [`Checked`] carries `None` once any step overflows, so long polynomial
//! expressions can be written with ordinary operators and checked once at
//! the end.

use std::ops::{Add, Mul, Sub};

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, PrimInt};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checked<T>(Option<T>);

impl<T: PrimInt> Checked<T> {
    pub fn new(value: T) -> Self {
        Checked(Some(value))
    }

    /// Lifts a value of another integer type, failing if it does not fit.
    pub fn from_int<U: PrimInt>(value: U) -> Self {
        Checked(T::from(value))
    }

    pub fn pow(self, exp: u32) -> Self {
        Checked(self.0.and_then(|v| num_traits::checked_pow(v, exp as usize)))
    }

    /// Truncating division; division by zero yields the failed state.
    pub fn checked_div(self, divisor: T) -> Self {
        Checked(self.0.and_then(|v| v.checked_div(&divisor)))
    }

    pub fn value(self) -> Option<T> {
        self.0
    }

    /// Resolves the computation, naming `op` in the overflow error.
    pub fn get(self, op: &str) -> Result<T> {
        self.0.ok_or_else(|| Error::overflow(op))
    }
}

impl<T: PrimInt + CheckedAdd> Add for Checked<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Checked(match (self.0, rhs.0) {
            (Some(a), Some(b)) => a.checked_add(&b),
            _ => None,
        })
    }
}

impl<T: PrimInt + CheckedSub> Sub for Checked<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Checked(match (self.0, rhs.0) {
            (Some(a), Some(b)) => a.checked_sub(&b),
            _ => None,
        })
    }
}

impl<T: PrimInt + CheckedMul> Mul for Checked<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Checked(match (self.0, rhs.0) {
            (Some(a), Some(b)) => a.checked_mul(&b),
            _ => None,
        })
    }
}

impl<T: PrimInt> std::iter::Sum for Checked<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Checked::new(T::zero()), |acc, x| acc + x)
    }
}

/// Shorthand for a checked `u128` literal.
pub fn c(value: u128) -> Checked<u128> {
    Checked::new(value)
}

/// `value^exp` in u128, for small degree powers.
pub fn pow_u128(value: u64, exp: u32, op: &str) -> Result<u128> {
    Checked::<u128>::from_int(value).pow(exp).get(op)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_without_overflow() {
        let x = c(3) * c(4) + c(5) - c(2);
        assert_eq!(x.value(), Some(15));
    }

    #[test]
    fn overflow_is_sticky() {
        let big = c(u128::MAX);
        let x = big * c(2) - c(5) + c(1);
        assert_eq!(x.value(), None);
        assert_eq!(
            x.get("test").unwrap_err(),
            Error::Overflow { op: "test".into() }
        );
    }

    #[test]
    fn signed_subtraction_below_zero() {
        let x = Checked::<i128>::new(2) - Checked::new(7);
        assert_eq!(x.value(), Some(-5));
        assert_eq!(Checked::<u128>::new(2) - Checked::new(7), Checked(None));
    }

    #[test]
    fn pow_checks() {
        assert_eq!(pow_u128(10, 4, "p").unwrap(), 10_000);
        assert!(Checked::<u128>::new(1 << 64).pow(3).value().is_none());
    }
}
