use std::fmt;

use super::Poly;
use crate::scalar::Coeff;

/// Laurent polynomial `sum coeffs[i] * t^(lowest_exponent + i)`.
///
/// Nonzero values have nonzero first and last stored coefficients; zero has an
/// empty coefficient list and `lowest_exponent == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<T> {
    lowest_exponent: i64,
    coeffs: Vec<T>,
}

impl<T: Coeff> LaurentPoly<T> {
    pub fn new(lowest_exponent: i64, mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        Self {
            lowest_exponent: lowest_exponent + lead_zeros as i64,
            coeffs,
        }
    }

    pub fn zero() -> Self {
        Self {
            lowest_exponent: 0,
            coeffs: Vec::new(),
        }
    }

    /// `c * t^e`
    pub fn monomial(c: T, e: i64) -> Self {
        Self::new(e, vec![c])
    }

    pub fn from_poly(p: &Poly<T>) -> Self {
        Self::new(0, p.coeffs().to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lowest_exponent(&self) -> i64 {
        self.lowest_exponent
    }

    pub fn highest_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.lowest_exponent + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `t^e`.
    pub fn coeff(&self, e: i64) -> T {
        let i = e - self.lowest_exponent;
        if i < 0 {
            return T::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_else(T::zero)
    }

    /// Splits off the lowest power: `self = t^shift * poly` with `poly(0) != 0`.
    pub fn split_monomial(&self) -> (i64, Poly<T>) {
        (self.lowest_exponent, Poly::new(self.coeffs.clone()))
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            lowest_exponent: self.lowest_exponent + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lowest_exponent.min(other.lowest_exponent);
        let hi = self.highest_exponent().unwrap().max(other.highest_exponent().unwrap());
        Self::new(lo, (lo..=hi).map(|e| self.coeff(e) + other.coeff(e)).collect())
    }

    pub fn neg(&self) -> Self {
        Self {
            lowest_exponent: self.lowest_exponent,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let p = &Poly::new(self.coeffs.clone()) * &Poly::new(other.coeffs.clone());
        Self::new(self.lowest_exponent + other.lowest_exponent, p.into_coeffs())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(
            self.lowest_exponent,
            self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        )
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, c| acc + c.clone())
    }

    /// `t -> t^{-1}`.
    pub fn invert_variable(&self) -> Self {
        match self.highest_exponent() {
            None => Self::zero(),
            Some(hi) => Self::new(-hi, self.coeffs.iter().rev().cloned().collect()),
        }
    }

    /// True iff `f(t) = f(t^{-1})`.
    pub fn is_symmetric(&self) -> bool {
        *self == self.invert_variable()
    }
}

impl<T: Coeff> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.lowest_exponent + i as i64;
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            if e == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl<T: Coeff> fmt::Debug for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}
