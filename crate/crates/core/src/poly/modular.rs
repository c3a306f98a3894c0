use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, PolyError};

/// Polynomial with coefficients in `Z/m`, residues stored in `[0, m)`.
///
/// Ring operations work for any modulus `m >= 2`. Division, gcd and modular
/// exponentiation additionally require the leading coefficients involved to be
/// units, which always holds when `m` is prime.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModPoly {
    modulus: BigInt,
    coeffs: Vec<BigInt>,
}

impl ModPoly {
    pub fn new(modulus: BigInt, coeffs: Vec<BigInt>) -> Result<Self, PolyError> {
        if modulus < BigInt::from(2) {
            return Err(PolyError::BadModulus(modulus.to_string()));
        }
        Ok(Self::new_unchecked(modulus, coeffs))
    }

    pub(crate) fn new_unchecked(modulus: BigInt, coeffs: Vec<BigInt>) -> Self {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(|c| c.mod_floor(&modulus)).collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { modulus, coeffs }
    }

    pub fn from_i64s(modulus: i64, coeffs: &[i64]) -> Result<Self, PolyError> {
        Self::new(BigInt::from(modulus), coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(modulus: &BigInt) -> Self {
        Self {
            modulus: modulus.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(modulus: &BigInt) -> Self {
        Self::new_unchecked(modulus.clone(), vec![BigInt::one()])
    }

    /// The monomial `z`.
    pub fn var(modulus: &BigInt) -> Self {
        Self::new_unchecked(modulus.clone(), vec![BigInt::zero(), BigInt::one()])
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Integer lift with residues in `[0, m)`.
    pub fn lift(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }

    /// Integer lift with residues in `(-m/2, m/2]`.
    pub fn lift_symmetric(&self) -> IntPoly {
        let half = &self.modulus >> 1u32;
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| if c > &half { c - &self.modulus } else { c.clone() })
                .collect(),
        )
    }

    fn same_ring(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "mixed moduli in ModPoly arithmetic");
    }

    fn with(&self, coeffs: Vec<BigInt>) -> Self {
        Self::new_unchecked(self.modulus.clone(), coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_ring(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        self.with((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_ring(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        self.with((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        self.with(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_ring(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.modulus);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        self.with(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.with(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `a(-z)`.
    pub fn substitute_neg(&self) -> Self {
        self.with(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        self.with(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(&self.modulus))
    }

    /// Inverse of `c` modulo the modulus, if it exists.
    pub fn inverse_of(&self, c: &BigInt) -> Option<BigInt> {
        mod_inverse(c, &self.modulus)
    }

    /// Scales to leading coefficient 1; `None` if the leading coefficient is not a unit.
    pub fn monic(&self) -> Option<Self> {
        match self.leading() {
            None => Some(self.clone()),
            Some(l) => Some(self.scale(&self.inverse_of(l)?)),
        }
    }

    /// Euclidean division; the divisor's leading coefficient must be a unit.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        self.same_ring(d);
        let dd = d.degree().ok_or(PolyError::DivisionByZero)?;
        let inv = self
            .inverse_of(d.leading().unwrap())
            .ok_or_else(|| PolyError::NonUnitLeading(d.to_string()))?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(&self.modulus), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = (&rem[i] * &inv).mod_floor(&self.modulus);
            if q.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i - dd + j] = (&rem[i - dd + j] - &q * dc).mod_floor(&self.modulus);
            }
            quot[i - dd] = q;
        }
        Ok((self.with(quot), self.with(rem)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self, PolyError> {
        Ok(self.div_rem(d)?.1)
    }

    /// Monic gcd over a field.
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.monic().ok_or_else(|| PolyError::NonUnitLeading(a.to_string()))
    }

    /// Extended Euclid over a field: `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> Result<(Self, Self, Self), PolyError> {
        self.same_ring(other);
        let m = &self.modulus;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(m), Self::zero(m));
        let (mut t0, mut t1) = (Self::zero(m), Self::one(m));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let Some(l) = r0.leading() else {
            return Ok((r0, s0, t0));
        };
        let inv = self
            .inverse_of(l)
            .ok_or_else(|| PolyError::NonUnitLeading(r0.to_string()))?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// `self^e mod m` as polynomials, for an arbitrary-precision exponent.
    pub fn pow_mod(&self, e: &BigInt, m: &Self) -> Result<Self, PolyError> {
        let mut acc = Self::one(&self.modulus).rem(m)?;
        let base = self.rem(m)?;
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m)?;
            if e.bit(i) {
                acc = acc.mul(&base).rem(m)?;
            }
        }
        Ok(acc)
    }

    /// Reinterpret the same integer lift modulo `m`.
    pub fn reduce_to(&self, m: &BigInt) -> Result<Self, PolyError> {
        Self::new(m.clone(), self.coeffs.clone())
    }
}

pub(crate) fn mod_inverse(c: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = c.mod_floor(m).extended_gcd(m);
    if e.gcd.abs().is_one() {
        Some((e.x * e.gcd).mod_floor(m))
    } else {
        None
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lift())
    }
}

impl fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModPoly({} mod {})", self.lift(), self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(m: i64, c: &[i64]) -> ModPoly {
        ModPoly::from_i64s(m, c).unwrap()
    }

    #[test]
    fn residues_are_normalized() {
        let p = mp(3, &[-1, 4, 3]);
        assert_eq!(p.coeffs(), &[BigInt::from(2), BigInt::from(1)]);
        assert_eq!(p.lift_symmetric(), IntPoly::from_i64s(&[-1, 1]));
        assert!(ModPoly::from_i64s(1, &[1]).is_err());
    }

    #[test]
    fn division_and_gcd_over_f3() {
        // z^2 - 1 = (z - 1)(z + 1)
        let a = mp(3, &[-1, 0, 1]);
        let b = mp(3, &[1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, mp(3, &[-1, 1]));
        assert_eq!(a.gcd(&mp(3, &[2, 2])).unwrap(), b);
    }

    #[test]
    fn pow_mod_matches_repeated_multiplication() {
        let m = mp(5, &[2, 0, 1, 1]);
        let x = ModPoly::var(&BigInt::from(5));
        let direct = x.pow(13).rem(&m).unwrap();
        assert_eq!(x.pow_mod(&BigInt::from(13), &m).unwrap(), direct);
    }

    #[test]
    fn bezout_coefficients() {
        let a = mp(7, &[1, 0, 1]);
        let b = mp(7, &[3, 1]);
        let (g, s, t) = a.ext_gcd(&b).unwrap();
        assert!(g.is_one());
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn non_unit_leading_is_reported() {
        let a = mp(4, &[1, 1]);
        let d = mp(4, &[1, 2]);
        assert!(matches!(a.div_rem(&d), Err(PolyError::NonUnitLeading(_))));
    }
}
