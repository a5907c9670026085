//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients (index = degree).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::det_bareiss;
use crate::matrix::BigMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Trims trailing zeros; the zero polynomial is the empty list.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn derivative(&self) -> IntPolynomial {
        let d: Vec<BigInt> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        IntPolynomial::new(d)
    }

    /// Horner evaluation in double precision. Subject to the usual
    /// cancellation for large-coefficient polynomials near the ends of
    /// their root interval; use [`IntPolynomial::eval_exact_f64`] when the
    /// result must be accurate to the last few ulps.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Evaluates exactly at a double (every `f64` is a dyadic rational) and
    /// rounds the exact rational result once at the end.
    pub fn eval_exact_f64(&self, x: f64) -> f64 {
        let xq = BigRational::from_float(x).expect("finite input");
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &xq + BigRational::from_integer(c.clone());
        }
        acc.to_f64().unwrap_or(f64::NAN)
    }

    /// Resultant `Res(self, other)` via the Sylvester matrix and exact
    /// fraction-free determinant.
    pub fn resultant(&self, other: &IntPolynomial) -> Result<BigInt> {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return Err(Error::InvalidParameter(
                "resultant of the zero polynomial".into(),
            ));
        };
        if m + n == 0 {
            return Ok(BigInt::one());
        }
        let size = m + n;
        let sylvester = BigMatrix::from_fn(size, size, |i, j| {
            if i < n {
                // Row of `self` coefficients, descending, shifted right by i.
                let k = j as isize - i as isize;
                if (0..=m as isize).contains(&k) {
                    self.coeff(m - k as usize)
                } else {
                    BigInt::zero()
                }
            } else {
                let shift = i - n;
                let k = j as isize - shift as isize;
                if (0..=n as isize).contains(&k) {
                    other.coeff(n - k as usize)
                } else {
                    BigInt::zero()
                }
            }
        });
        det_bareiss(&sylvester)
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
