//! Factorization of integer polynomials, and of polynomials over prime fields.

mod finite_field;
mod hensel;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use finite_field::{factor_mod_2, factor_mod_p, factor_over_prime_field, is_prime, ModFactorization};
pub use hensel::hensel_lift;

use crate::poly::{ModPoly, PolyError};
use crate::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(String),
    #[error("modulus 2 needs the characteristic-two path")]
    EvenPrime,
    #[error("factors {0} and {1} are not coprime")]
    NotCoprime(String, String),
    #[error("bad prime for lifting: {0}")]
    BadPrime(String),
    #[error("inconsistent input: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `unit * content * prod factor^exp`, factors primitive with positive leading
/// coefficient, irreducible, pairwise distinct, sorted by degree then
/// coefficient sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: i8,
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    pub fn reconstruct(&self) -> IntPoly {
        let start = IntPoly::constant(self.content.clone() * BigInt::from(self.unit));
        self.factors
            .iter()
            .fold(start, |acc, (f, e)| &acc * &f.pow(*e))
    }

    pub fn exponent_of(&self, f: &IntPoly) -> Option<u32> {
        self.factors.iter().find(|(g, _)| g == f).map(|(_, e)| *e)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lead = BigInt::from(self.unit) * &self.content;
        let mut parts = Vec::new();
        if !lead.is_one() || self.factors.is_empty() {
            parts.push(if lead == BigInt::from(-1) && !self.factors.is_empty() {
                "-".to_string()
            } else {
                lead.to_string()
            });
        }
        for (g, e) in &self.factors {
            let body = if g.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({g})")
            } else {
                g.to_string()
            };
            parts.push(if *e == 1 { body } else { format!("{body}^{e}") });
        }
        let mut out = String::new();
        for (i, part) in parts.iter().enumerate() {
            if i > 0 && !out.ends_with('-') {
                out.push('*');
            }
            out.push_str(part);
        }
        f.write_str(&out)
    }
}

/// Squarefree decomposition of `primitive_part(a)`: pairwise coprime
/// squarefree parts with multiplicities, trivial parts omitted.
pub fn squarefree_decompose(a: &IntPoly) -> Result<Vec<(IntPoly, u32)>, FactorError> {
    if a.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let f = a.primitive_part();
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    // Yun's algorithm; every quotient below is exact because divisors are primitive.
    let df = f.derivative();
    let g = f.gcd(&df);
    let mut b = exact(&f, &g);
    let mut c = exact(&df, &g);
    let mut i = 1u32;
    while !b.is_constant() {
        let d = &c - &b.derivative();
        let part = b.gcd(&d);
        if !part.is_constant() {
            out.push((part.clone(), i));
        }
        b = exact(&b, &part);
        c = exact(&d, &part);
        i += 1;
    }
    Ok(out)
}

fn exact(a: &IntPoly, d: &IntPoly) -> IntPoly {
    if d.is_constant() {
        let c = d.constant_term();
        return IntPoly::new(a.coeffs().iter().map(|x| x / &c).collect());
    }
    a.exact_div(d).expect("primitive divisor of an exact factor")
}

/// Mignotte bound `2^n * ceil(||f||_2)`: every coefficient of every integer
/// divisor of `f` has absolute value at most this.
pub fn mignotte_bound(f: &IntPoly) -> BigInt {
    let n = f.degree().unwrap_or(0);
    let norm_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let mut norm = norm_sq.sqrt();
    if &norm * &norm < norm_sq {
        norm += 1;
    }
    norm << n
}

/// Complete factorization over `Z`.
pub fn factor_over_z(a: &IntPoly) -> Result<Factorization, FactorError> {
    if a.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let unit = if a.leading().unwrap().is_negative() { -1 } else { 1 };
    let content = a.content();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decompose(a)? {
        for f in factor_squarefree(&part)? {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|(f, _), (g, _)| canonical_order(f, g));
    Ok(Factorization { unit, content, factors })
}

pub(crate) fn canonical_order(f: &IntPoly, g: &IntPoly) -> std::cmp::Ordering {
    f.degree().cmp(&g.degree()).then_with(|| f.coeffs().cmp(g.coeffs()))
}

/// True iff `a` is irreducible in `Z[z]` (content 1, one factor, exponent 1).
pub fn is_irreducible(a: &IntPoly) -> Result<bool, FactorError> {
    if a.degree().unwrap_or(0) == 0 {
        return Err(FactorError::ConstantPolynomial);
    }
    let f = factor_over_z(a)?;
    Ok(f.content.is_one() && f.factors.len() == 1 && f.factors[0].1 == 1)
}

/// Smallest odd prime not dividing `lc(f)` for which `f mod p` is squarefree.
pub fn choose_prime(f: &IntPoly) -> Result<BigInt, FactorError> {
    let lc = f.leading().ok_or(FactorError::ZeroPolynomial)?;
    let mut p = BigInt::from(3);
    loop {
        if is_prime(&p) && !(lc % &p).is_zero() {
            let fp = f.reduce_mod(&p)?;
            if fp.gcd(&fp.derivative())?.is_one() {
                return Ok(p);
            }
        }
        p += 2;
    }
}

/// Irreducible factors of a primitive squarefree polynomial with positive
/// leading coefficient, by modular factorization, lifting and recombination.
fn factor_squarefree(f: &IntPoly) -> Result<Vec<IntPoly>, FactorError> {
    if f.degree().unwrap_or(0) <= 1 {
        return Ok(vec![f.clone()]);
    }
    let p = choose_prime(f)?;
    let modular: Vec<ModPoly> = factor_mod_p(&f.reduce_mod(&p)?)?
        .factors
        .into_iter()
        .map(|(g, _)| g)
        .collect();
    if modular.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    let bound = mignotte_bound(f) * f.leading().unwrap().abs() * 2u32;
    let mut k = 1u32;
    let mut pk = p.clone();
    while pk <= bound {
        pk *= &p;
        k += 1;
    }
    let lifted = hensel_lift(&modular, f, &p, k)?;
    Ok(recombine(f.clone(), lifted, &pk))
}

/// Zassenhaus recombination: try products of lifted factors by increasing
/// subset size, peeling off each true divisor as soon as it is found.
fn recombine(mut f: IntPoly, mut lifted: Vec<ModPoly>, pk: &BigInt) -> Vec<IntPoly> {
    let mut found = Vec::new();
    let mut size = 1usize;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in combinations(lifted.len(), size) {
            let lc = f.leading().unwrap().clone();
            let cand = subset
                .iter()
                .fold(ModPoly::one(pk).scale(&lc), |acc, &i| acc.mul(&lifted[i]))
                .lift_symmetric()
                .primitive_part();
            if let Some(q) = f.exact_div(&cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                f = q.primitive_part();
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    if !f.is_constant() {
        found.push(f);
    }
    found
}

/// All `k`-element index subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
