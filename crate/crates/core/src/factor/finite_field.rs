//! Factorization over prime fields `F_p`.
//!
//! Odd primes go through the classical pipeline: squarefree factorization,
//! distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting
//! driven by a fixed-seed ChaCha stream so repeated runs agree. `F_2` uses an
//! exhaustive trial division instead.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FactorError;
use crate::poly::ModPoly;

const SPLIT_SEED: u64 = 0x4b61_7761_7563_6869;

/// Complete factorization over `F_p`: `unit * prod factor^exp`, factors monic
/// and irreducible, sorted by degree then coefficient sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModFactorization {
    pub modulus: BigInt,
    pub unit: BigInt,
    pub factors: Vec<(ModPoly, u32)>,
}

impl ModFactorization {
    pub fn reconstruct(&self) -> ModPoly {
        self.factors.iter().fold(
            ModPoly::new_unchecked(self.modulus.clone(), vec![self.unit.clone()]),
            |acc, (f, e)| acc.mul(&f.pow(u64::from(*e))),
        )
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn factor_count(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }
}

pub fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    let two = BigInt::from(2);
    if n == &two {
        return true;
    }
    if n.is_even() {
        return false;
    }
    let mut d = BigInt::from(3);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += 2;
    }
    true
}

/// Factorization over `F_p` for an odd prime `p`.
pub fn factor_mod_p(a: &ModPoly) -> Result<ModFactorization, FactorError> {
    let p = a.modulus().clone();
    if !is_prime(&p) {
        return Err(FactorError::NonPrimeModulus(p.to_string()));
    }
    if p == BigInt::from(2) {
        return Err(FactorError::EvenPrime);
    }
    let (unit, monic) = split_unit(a)?;
    let mut factors = Vec::new();
    for (part, mult) in squarefree_mod_p(&monic)? {
        for (block, d) in distinct_degree(&part)? {
            let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
            for f in equal_degree(&block, d, &mut rng)? {
                factors.push((f, mult));
            }
        }
    }
    Ok(finish(p, unit, factors))
}

/// Factorization over `F_2` by exhaustive trial division.
pub fn factor_mod_2(a: &ModPoly) -> Result<ModFactorization, FactorError> {
    let two = BigInt::from(2);
    if a.modulus() != &two {
        return Err(FactorError::NonPrimeModulus(a.modulus().to_string()));
    }
    let (unit, mut rest) = split_unit(a)?;
    let mut factors = Vec::new();
    let mut d = 1usize;
    while rest.degree().unwrap_or(0) >= 2 * d {
        let mut found = false;
        for bits in 0u64..(1u64 << d) {
            let mut coeffs: Vec<BigInt> = (0..d).map(|i| BigInt::from((bits >> i) & 1)).collect();
            coeffs.push(BigInt::one());
            let cand = ModPoly::new_unchecked(two.clone(), coeffs);
            let mut e = 0u32;
            loop {
                let (q, r) = rest.div_rem(&cand)?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                e += 1;
            }
            if e > 0 {
                factors.push((cand, e));
                found = true;
            }
        }
        if !found || rest.degree().unwrap_or(0) < 2 * d {
            d += 1;
        }
    }
    if rest.degree().unwrap_or(0) >= 1 {
        factors.push((rest, 1));
    }
    Ok(finish(two, unit, factors))
}

/// Dispatches on the characteristic.
pub fn factor_over_prime_field(a: &ModPoly) -> Result<ModFactorization, FactorError> {
    if a.modulus() == &BigInt::from(2) {
        factor_mod_2(a)
    } else {
        factor_mod_p(a)
    }
}

fn split_unit(a: &ModPoly) -> Result<(BigInt, ModPoly), FactorError> {
    let lc = a.leading().ok_or(FactorError::ZeroPolynomial)?.clone();
    let monic = a.monic().ok_or_else(|| FactorError::NonPrimeModulus(a.modulus().to_string()))?;
    Ok((lc, monic))
}

fn finish(modulus: BigInt, unit: BigInt, mut factors: Vec<(ModPoly, u32)>) -> ModFactorization {
    factors.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    let mut merged: Vec<(ModPoly, u32)> = Vec::new();
    for (f, e) in factors {
        match merged.last_mut() {
            Some((g, m)) if *g == f => *m += e,
            _ => merged.push((f, e)),
        }
    }
    ModFactorization {
        modulus,
        unit,
        factors: merged,
    }
}

/// Squarefree factorization of a monic polynomial over `F_p`, handling
/// `p`-th powers. Returns `(part, multiplicity)` with nonconstant monic parts.
pub(crate) fn squarefree_mod_p(f: &ModPoly) -> Result<Vec<(ModPoly, u32)>, FactorError> {
    let p = f.modulus().clone();
    let p_u32 = p.to_u32().ok_or_else(|| FactorError::NonPrimeModulus(p.to_string()))?;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in squarefree_mod_p(&pth_root(f, p_u32))? {
            out.push((g, m * p_u32));
        }
        return Ok(out);
    }
    let mut c = f.gcd(&df)?;
    let mut w = f.div_rem(&c)?.0;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let z = w.div_rem(&y)?.0;
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div_rem(&w)?.0;
    }
    if !c.is_one() {
        for (g, m) in squarefree_mod_p(&pth_root(&c, p_u32))? {
            out.push((g, m * p_u32));
        }
    }
    Ok(out)
}

fn pth_root(f: &ModPoly, p: u32) -> ModPoly {
    let coeffs = f.coeffs().iter().step_by(p as usize).cloned().collect();
    ModPoly::new_unchecked(f.modulus().clone(), coeffs)
}

/// Splits a monic squarefree polynomial into blocks whose irreducible factors
/// all share one degree.
pub(crate) fn distinct_degree(f: &ModPoly) -> Result<Vec<(ModPoly, usize)>, FactorError> {
    let p = f.modulus().clone();
    let x = ModPoly::var(&p);
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 1usize;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(&p, &rest)?;
        let g = h.sub(&x).gcd(&rest)?;
        if !g.is_one() {
            rest = rest.div_rem(&g)?.0;
            h = h.rem(&rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree() {
        if deg > 0 {
            out.push((rest, deg));
        }
    }
    Ok(out)
}

/// Cantor-Zassenhaus splitting of a product of distinct monic irreducibles of
/// degree `d`, for odd `p`.
pub(crate) fn equal_degree(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<ModPoly>, FactorError> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let p = f.modulus().clone();
    let exp = (num_traits::pow(p.clone(), d) - 1u32) / 2u32;
    loop {
        let coeffs: Vec<BigInt> = (0..n)
            .map(|_| {
                let r: u64 = rng.gen();
                BigInt::from(r) % &p
            })
            .collect();
        let a = ModPoly::new_unchecked(p.clone(), coeffs);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = a.gcd(f)?;
        let split = if !g.is_one() {
            g
        } else {
            let b = a.pow_mod(&exp, f)?.sub(&ModPoly::one(&p));
            b.gcd(f)?
        };
        let k = split.degree().unwrap_or(0);
        if k > 0 && k < n {
            let other = f.div_rem(&split)?.0;
            let mut out = equal_degree(&split, d, rng)?;
            out.extend(equal_degree(&other, d, rng)?);
            return Ok(out);
        }
    }
}
