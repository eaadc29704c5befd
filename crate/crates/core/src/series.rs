//! Integer polynomials and rational power series with exact coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial with integer coefficients in ascending degree, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        IntPolynomial::from_i64(&[1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{a}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// A quotient of integer polynomials, read as a power series in `x`.
#[derive(Debug, Clone)]
pub struct RationalSeries {
    pub numerator: IntPolynomial,
    pub denominator: IntPolynomial,
}

impl RationalSeries {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Self {
        RationalSeries { numerator, denominator }
    }

    /// `c / (1 - a x)` style constructor from coefficient slices.
    pub fn from_i64(numerator: &[i64], denominator: &[i64]) -> Self {
        RationalSeries::new(IntPolynomial::from_i64(numerator), IntPolynomial::from_i64(denominator))
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn same_function(&self, other: &RationalSeries) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }

    /// Coefficients `a_0, …, a_n` of the power series.
    pub fn expand(&self, n: usize) -> Result<Vec<BigInt>> {
        let d0 = self.denominator.coeff(0);
        if !(d0.is_one() || (-&d0).is_one()) {
            return Err(Error::NonUnitConstant);
        }
        let mut a: Vec<BigInt> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = self.numerator.coeff(i);
            for j in 1..=i.min(self.denominator.coeffs().len().saturating_sub(1)) {
                acc -= self.denominator.coeff(j) * &a[i - j];
            }
            a.push(acc * &d0);
        }
        Ok(a)
    }
}

impl Add for &RationalSeries {
    type Output = RationalSeries;

    fn add(self, rhs: &RationalSeries) -> RationalSeries {
        RationalSeries::new(
            &(&self.numerator * &rhs.denominator) + &(&rhs.numerator * &self.denominator),
            &self.denominator * &rhs.denominator,
        )
    }
}

impl Sub for &RationalSeries {
    type Output = RationalSeries;

    fn sub(self, rhs: &RationalSeries) -> RationalSeries {
        RationalSeries::new(
            &(&self.numerator * &rhs.denominator) - &(&rhs.numerator * &self.denominator),
            &self.denominator * &rhs.denominator,
        )
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// Expands `series` to order `n`.
pub fn expand(series: &RationalSeries, n: usize) -> Result<Vec<BigInt>> {
    series.expand(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn geometric_and_simple_quotients() {
        assert_eq!(RationalSeries::from_i64(&[1], &[1, -3]).expand(3).unwrap(), ints(&[1, 3, 9, 27]));
        assert_eq!(RationalSeries::from_i64(&[1, 1], &[1, -2]).expand(2).unwrap(), ints(&[1, 3, 6]));
        assert_eq!(RationalSeries::from_i64(&[1], &[-1]).expand(2).unwrap(), ints(&[-1, 0, 0]));
    }

    #[test]
    fn non_unit_constant_rejected() {
        assert_eq!(RationalSeries::from_i64(&[1], &[2, 1]).expand(2), Err(Error::NonUnitConstant));
        assert_eq!(RationalSeries::from_i64(&[1], &[0, 1]).expand(2), Err(Error::NonUnitConstant));
    }

    #[test]
    fn polynomial_arithmetic() {
        let p = IntPolynomial::from_i64(&[1, -2]);
        let q = IntPolynomial::from_i64(&[1, 2]);
        assert_eq!(&p * &q, IntPolynomial::from_i64(&[1, 0, -4]));
        assert_eq!(&p + &q, IntPolynomial::from_i64(&[2]));
        assert!((&p - &p).is_zero());
        assert_eq!(IntPolynomial::from_i64(&[1, 0, 0]).degree(), Some(0));
        assert_eq!(IntPolynomial::from_i64(&[1, -3, 2, -12]).to_string(), "1 - 3x + 2x^2 - 12x^3");
    }

    #[test]
    fn rational_sums_and_equality() {
        let a = RationalSeries::from_i64(&[1], &[1, -1]);
        let b = RationalSeries::from_i64(&[1], &[1, 1]);
        let sum = &a + &b;
        assert!(sum.same_function(&RationalSeries::from_i64(&[2], &[1, 0, -1])));
        let diff = &a - &a;
        assert!(diff.numerator.is_zero());
    }
}
