use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::Zero;

use crate::gaussian::{self, GaussianInt};
use crate::scalar::Scalar;

/// Laurent polynomial in `A` with Gaussian-integer coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal iff
/// their term maps are equal.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BracketPolynomial<T: Scalar> {
    terms: BTreeMap<i32, GaussianInt<T>>,
}

impl<T: Scalar> BracketPolynomial<T> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn monomial(coefficient: GaussianInt<T>, degree: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, coefficient);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, GaussianInt<T>)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    /// Real-coefficient convenience constructor.
    pub fn from_real<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        Self::from_terms(
            terms
                .into_iter()
                .map(|(d, c)| (d, Complex::new(T::from_i64(c), T::zero()))),
        )
    }

    pub fn add_term(&mut self, degree: i32, coefficient: GaussianInt<T>) {
        if coefficient.is_zero() {
            return;
        }
        let slot = self.terms.entry(degree).or_insert_with(Complex::zero);
        *slot = slot.clone() + coefficient;
        if slot.is_zero() {
            self.terms.remove(&degree);
        }
    }

    /// The coefficient of `A^degree`, zero when absent.
    pub fn coefficient(&self, degree: i32) -> GaussianInt<T> {
        self.terms.get(&degree).cloned().unwrap_or_else(Complex::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    /// Degrees with nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = i32> + '_ {
        self.terms.keys().copied()
    }

    /// Terms in ascending degree order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &GaussianInt<T>)> + '_ {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    /// Substitutes `A -> A^{-1}`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(d, c)| (-d, c.clone())).collect(),
        }
    }

    pub fn scale(&self, factor: &GaussianInt<T>) -> Self {
        Self::from_terms(self.terms.iter().map(|(d, c)| (*d, c.clone() * factor.clone())))
    }

    /// Multiplies by `A^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(d, c)| (d + shift, c.clone())).collect(),
        }
    }

    /// Multiplies by the power of `i` that turns the leading coefficient into
    /// a positive integer. `None` unless every coefficient then becomes real.
    pub fn strip_phase(&self) -> Option<Self> {
        let (_, lead) = self.terms.iter().next_back()?;
        let unit = (0..4).map(gaussian::i_pow::<T>).find(|u| {
            let z = lead.clone() * u.clone();
            z.im.is_zero() && z.re.is_positive()
        })?;
        let out = self.scale(&unit);
        out.terms.values().all(|c| c.im.is_zero()).then_some(out)
    }

    pub fn map_scalar<U: Scalar>(&self, f: impl Fn(&T) -> U) -> BracketPolynomial<U> {
        BracketPolynomial::from_terms(self.terms.iter().map(|(d, c)| (*d, Complex::new(f(&c.re), f(&c.im)))))
    }
}

impl<T: Scalar> Add for &BracketPolynomial<T> {
    type Output = BracketPolynomial<T>;
    fn add(self, rhs: Self) -> Self::Output {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(*d, c.clone());
        }
        out
    }
}

impl<T: Scalar> Neg for &BracketPolynomial<T> {
    type Output = BracketPolynomial<T>;
    fn neg(self) -> Self::Output {
        BracketPolynomial {
            terms: self.terms.iter().map(|(d, c)| (*d, -c.clone())).collect(),
        }
    }
}

impl<T: Scalar> Sub for &BracketPolynomial<T> {
    type Output = BracketPolynomial<T>;
    fn sub(self, rhs: Self) -> Self::Output {
        self + &(-rhs)
    }
}

impl<T: Scalar> Mul for &BracketPolynomial<T> {
    type Output = BracketPolynomial<T>;
    fn mul(self, rhs: Self) -> Self::Output {
        let mut out = BracketPolynomial::zero();
        for (da, ca) in &self.terms {
            for (db, cb) in &rhs.terms {
                out.add_term(da + db, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Display for BracketPolynomial<T> {
    /// Descending exponents, e.g. `-A^6 - A^2 - A^-2 - A^-6` or `iA^5 + iA`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (d, c)) in self.terms.iter().rev().enumerate() {
            let monomial = match *d {
                0 => String::new(),
                1 => "A".to_string(),
                e => format!("A^{e}"),
            };
            let (negative, body) = if c.im.is_zero() || c.re.is_zero() {
                let (negative, mag, imaginary) = if c.im.is_zero() {
                    (c.re.is_negative(), c.re.abs(), false)
                } else {
                    (c.im.is_negative(), c.im.abs(), true)
                };
                let mut body = String::new();
                if !(mag.is_one() && (imaginary || !monomial.is_empty())) {
                    body.push_str(&mag.to_string());
                }
                if imaginary {
                    body.push('i');
                }
                (negative, body)
            } else {
                (false, gaussian::format_coefficient(c))
            };
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{body}{monomial}")?;
        }
        Ok(())
    }
}
