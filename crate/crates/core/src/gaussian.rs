//! Gaussian integers `a + bi` with exact integer parts.
//!
//! Bracket coefficients are sums of `i^j` times ranks, so every coefficient
//! of a diagram lies on one coordinate axis of the Gaussian integers.

use num_complex::Complex;
use num_traits::Zero;

use crate::scalar::Scalar;

pub type GaussianInt<T> = Complex<T>;

/// `i^e` for any integer exponent.
pub fn i_pow<T: Scalar>(e: i64) -> GaussianInt<T> {
    match e.rem_euclid(4) {
        0 => Complex::new(T::one(), T::zero()),
        1 => Complex::new(T::zero(), T::one()),
        2 => Complex::new(-T::one(), T::zero()),
        _ => Complex::new(T::zero(), -T::one()),
    }
}

/// Whether `z` is real or purely imaginary (zero counts as both).
pub fn is_axis_aligned<T: Scalar>(z: &GaussianInt<T>) -> bool {
    z.re.is_zero() || z.im.is_zero()
}

/// Whether `a` and `b` lie on a common coordinate axis, so that `a - b` is a
/// real or imaginary integer whose magnitude is an ordinary integer.
pub fn same_phase<T: Scalar>(a: &GaussianInt<T>, b: &GaussianInt<T>) -> bool {
    if a.is_zero() || b.is_zero() {
        return is_axis_aligned(a) && is_axis_aligned(b);
    }
    (a.im.is_zero() && b.im.is_zero()) || (a.re.is_zero() && b.re.is_zero())
}

/// Magnitude of an axis-aligned Gaussian integer; `None` off the axes.
pub fn axis_magnitude<T: Scalar>(z: &GaussianInt<T>) -> Option<T> {
    if z.im.is_zero() {
        Some(z.re.abs())
    } else if z.re.is_zero() {
        Some(z.im.abs())
    } else {
        None
    }
}

/// Formats a coefficient as `a`, `ai` or `(a+bi)`.
pub fn format_coefficient<T: Scalar>(z: &GaussianInt<T>) -> String {
    if z.im.is_zero() {
        z.re.to_string()
    } else if z.re.is_zero() {
        if z.im.is_one() {
            "i".to_string()
        } else if (-z.im.clone()).is_one() {
            "-i".to_string()
        } else {
            format!("{}i", z.im)
        }
    } else if z.im.is_negative() {
        format!("({}-{}i)", z.re, z.im.abs())
    } else {
        format!("({}+{}i)", z.re, z.im)
    }
}
