//! Exact integer scalars.
//!
//! Every computation in this crate happens over an exact ring: ranks over
//! the rationals are obtained by division-free elimination on integer
//! matrices, and bracket coefficients live in the Gaussian integers. The
//! linear algebra and polynomial code is generic over [`Scalar`] so that it
//! can run on machine integers and fall back to [`BigInt`] when an
//! intermediate value would overflow.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed};

/// An exact, signed integer type usable as a matrix entry or polynomial
/// coefficient.
///
/// Implemented for `i32`, `i64`, `i128` and [`BigInt`]. Arithmetic that can
/// overflow goes through the `checked_*` methods; `BigInt` never overflows.
pub trait Scalar:
    Integer + Signed + Clone + Debug + Display + CheckedAdd + CheckedSub + CheckedMul + Into<BigInt> + Send + Sync + 'static
{
    /// Whether this value is `+1` or `-1`.
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    /// Converts from a small machine integer.
    fn from_i64(v: i64) -> Self;
}

impl Scalar for i32 {
    fn from_i64(v: i64) -> Self {
        v as i32
    }
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
}

impl Scalar for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

/// Signals that a fixed-width computation left its representable range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

pub(crate) fn mul<T: Scalar>(a: &T, b: &T) -> Result<T, Overflow> {
    a.checked_mul(b).ok_or(Overflow)
}

pub(crate) fn sub<T: Scalar>(a: &T, b: &T) -> Result<T, Overflow> {
    a.checked_sub(b).ok_or(Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn units() {
        assert!(1i64.is_unit());
        assert!((-1i32).is_unit());
        assert!(!0i64.is_unit());
        assert!(!BigInt::from(2).is_unit());
        assert!(BigInt::from(-1).is_unit());
    }

    #[test]
    fn checked_ops_report_overflow() {
        assert_eq!(mul(&i64::MAX, &2), Err(Overflow));
        assert_eq!(sub(&i32::MIN, &1), Err(Overflow));
    }
}
