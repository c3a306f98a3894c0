//! Linear Hensel lifting of a coprime factorization modulo `p` to `p^k`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::FactorError;
use crate::poly::{mod_inverse, ModPoly};
use crate::IntPoly;

/// Lifts monic factors `f_1..f_r` with `lc(target) * prod f_i = target (mod p)`
/// to monic factors modulo `p^k` with the same property modulo `p^k`.
pub fn hensel_lift(factors: &[ModPoly], target: &IntPoly, p: &BigInt, k: u32) -> Result<Vec<ModPoly>, FactorError> {
    let lc = target.leading().ok_or(FactorError::ZeroPolynomial)?.clone();
    if factors.is_empty() || factors.iter().any(|f| f.modulus() != p) {
        return Err(FactorError::Mismatch("factors must be given modulo p".into()));
    }
    let target_p = target.reduce_mod(p)?;
    if target_p.degree() != target.degree() {
        return Err(FactorError::BadPrime(format!("{p} divides the leading coefficient")));
    }
    for (i, f) in factors.iter().enumerate() {
        if f.leading().is_none_or(|l| !l.is_one()) {
            return Err(FactorError::Mismatch(format!("factor {f} is not monic")));
        }
        for g in &factors[i + 1..] {
            if !f.gcd(g)?.is_one() {
                return Err(FactorError::NotCoprime(f.to_string(), g.to_string()));
            }
        }
    }
    if !target_p.gcd(&target_p.derivative())?.is_one() {
        return Err(FactorError::BadPrime(format!("{p} divides the discriminant")));
    }
    let product = factors
        .iter()
        .fold(ModPoly::one(p).scale(&lc), |acc, f| acc.mul(f));
    if product != target_p {
        return Err(FactorError::Mismatch("factors do not multiply to the target modulo p".into()));
    }
    let pk = num_traits::pow(p.clone(), k as usize);
    lift_all(factors, target, p, k, &pk)
}

fn lift_all(factors: &[ModPoly], target: &IntPoly, p: &BigInt, k: u32, pk: &BigInt) -> Result<Vec<ModPoly>, FactorError> {
    if factors.len() == 1 {
        let lc = target.leading().unwrap();
        let inv = mod_inverse(lc, pk).ok_or_else(|| FactorError::BadPrime(p.to_string()))?;
        return Ok(vec![target.reduce_mod(pk)?.scale(&inv)]);
    }
    let lc = target.leading().unwrap().clone();
    let g0 = &factors[0];
    let h0 = factors[1..].iter().fold(ModPoly::one(p).scale(&lc), |acc, f| acc.mul(f));
    let (g, h) = lift_pair(target, g0, &h0, p, k)?;
    let mut out = vec![g.reduce_mod(pk)?];
    out.extend(lift_all(&factors[1..], &h, p, k, pk)?);
    Ok(out)
}

/// Two-factor lift: `target = g * h (mod p^k)` with `g` monic and
/// `lc(h) = lc(target)` exactly.
fn lift_pair(target: &IntPoly, g0: &ModPoly, h0: &ModPoly, p: &BigInt, k: u32) -> Result<(IntPoly, IntPoly), FactorError> {
    let (one, s, t) = g0.ext_gcd(h0)?;
    if !one.is_one() {
        return Err(FactorError::NotCoprime(g0.to_string(), h0.to_string()));
    }
    let lc = target.leading().unwrap().clone();
    let mut g = g0.lift();
    let mut h = {
        let mut c = h0.lift().into_coeffs();
        *c.last_mut().unwrap() = lc;
        IntPoly::new(c)
    };
    let mut pj = p.clone();
    for _ in 1..k {
        let diff = target - &(&g * &h);
        let e = IntPoly::new(diff.coeffs().iter().map(|c| c / &pj).collect());
        debug_assert!(diff.coeffs().iter().all(|c| (c % &pj).is_zero()));
        let e = e.reduce_mod(p)?;
        let (q, dg) = t.mul(&e).div_rem(g0)?;
        let dh = s.mul(&e).add(&q.mul(h0));
        g = &g + &dg.lift().scale(&pj);
        h = &h + &dh.lift().scale(&pj);
        pj *= p;
    }
    Ok((g, h))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    fn mp(m: i64, s: &str) -> ModPoly {
        ip(s).reduce_mod_i64(m).unwrap()
    }

    #[test]
    fn exact_factors_lift_to_themselves() {
        let three = BigInt::from(3);
        let lifted = hensel_lift(&[mp(3, "z-1"), mp(3, "z+1")], &ip("z^2-1"), &three, 2).unwrap();
        assert_eq!(lifted, vec![mp(9, "z-1"), mp(9, "z+1")]);
        let single = hensel_lift(&[mp(3, "z+1")], &ip("z+1"), &three, 3).unwrap();
        assert_eq!(single, vec![mp(27, "z+1")]);
    }

    #[test]
    fn lifted_product_matches_target() {
        let target = ip("6z^5-z^3+4z+3");
        let p = BigInt::from(7);
        let fac = super::super::factor_mod_p(&target.reduce_mod(&p).unwrap()).unwrap();
        let mods: Vec<ModPoly> = fac.factors.iter().map(|(f, _)| f.clone()).collect();
        let lifted = hensel_lift(&mods, &target, &p, 5).unwrap();
        let pk = BigInt::from(7i64.pow(5));
        let prod = lifted
            .iter()
            .fold(ModPoly::one(&pk).scale(&BigInt::from(6)), |acc, f| acc.mul(f));
        assert_eq!(prod, target.reduce_mod(&pk).unwrap());
        for (a, b) in lifted.iter().zip(&mods) {
            assert_eq!(&a.reduce_to(&p).unwrap(), b);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let three = BigInt::from(3);
        assert!(matches!(
            hensel_lift(&[mp(3, "z+1"), mp(3, "z+1")], &ip("z^2+2z+1"), &three, 2),
            Err(FactorError::NotCoprime(_, _))
        ));
        assert!(matches!(
            hensel_lift(&[mp(3, "z+1")], &ip("3z+1"), &three, 2),
            Err(FactorError::BadPrime(_))
        ));
        assert!(matches!(
            hensel_lift(&[mp(3, "z-1"), mp(3, "z+1")], &ip("z^2+1"), &three, 2),
            Err(FactorError::Mismatch(_))
        ));
        assert!(matches!(
            hensel_lift(&[mp(3, "z^2+2z+1")], &ip("z^2+2z+1"), &three, 2),
            Err(FactorError::BadPrime(_))
        ));
    }
}
