use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// A rational power series known up to and including `x^order`.
///
/// Arithmetic only combines series of the same order; mixing orders is an
/// error rather than a silent truncation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSeriesTrunc {
    order: usize,
    coeffs: Vec<BigRational>,
}

impl PowerSeriesTrunc {
    pub fn zero(order: usize) -> Self {
        Self { order, coeffs: vec![BigRational::zero(); order + 1] }
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// anything past `order` is dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn from_integers(order: usize, coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        Self::from_coeffs(order, coeffs.into_iter().map(BigRational::from_integer))
    }

    pub fn from_poly(p: &IntPolynomial, order: usize) -> Self {
        Self::from_integers(order, p.coeffs().iter().cloned())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// The coefficients as integers, or an error naming the first non-integer.
    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NotIntegral(c.to_string()))
                }
            })
            .collect()
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order, other.order))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { order: self.order, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { order: self.order, coeffs })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = Self::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(self.order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { order: self.order, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { order: self.order, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    /// Divides by `1 - x`, i.e. replaces coefficients by their prefix sums.
    pub fn div_one_minus_x(&self) -> Self {
        let mut acc = BigRational::zero();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                acc += c;
                acc.clone()
            })
            .collect();
        Self { order: self.order, coeffs }
    }
}

impl fmt::Display for PowerSeriesTrunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k == 0 {
                write!(f, "{c}x^0")?;
            } else if c.is_negative() {
                write!(f, "-{}x^{k}", c.abs())?;
            } else {
                write!(f, "+{c}x^{k}")?;
            }
        }
        write!(f, "+O(x^{})", self.order + 1)
    }
}

/// Truncated expansion of `p(x) / (1 - x)^n`.
pub fn series_from_poly_over_power(p: &IntPolynomial, n: usize, order: usize) -> PowerSeriesTrunc {
    let mut s = PowerSeriesTrunc::from_poly(p, order);
    for _ in 0..n {
        s = s.div_one_minus_x();
    }
    s
}
