//! The splitting property `C(z) = F(z) F(-z)` for Conway-type polynomials,
//! together with the congruence and numerical checks that accompany it.

mod conant;
mod counterexample;
mod diophantine;
mod obstructions;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use conant::{conant_check, ConantVerdict};
pub use counterexample::{
    counterexample_factors, counterexample_polynomial, irreducible_octic, mod3_quartic, verification_steps,
    verify_counterexample, verify_counterexample_with, CounterexampleData, Step, VerificationReport,
};
pub use diophantine::{
    reduced_system_has_no_solution_mod_2, residues_force_divisibility_by_4, solve_diophantine, solve_system,
    DiophantineReport, SHAPE_RHS,
};
pub use obstructions::{achirality_obstructions, determinant, is_perfect_square, is_sum_of_two_squares, two_squares, ObstructionReport};

use crate::factor::{factor_over_z, FactorError};
use crate::poly::PolyError;
use crate::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("polynomial {0} is not even")]
    NotEven(String),
    #[error("constant term of {0} is not 1")]
    BadConstantTerm(String),
    #[error("search bound {0} is below the minimum of 16")]
    BoundTooSmall(u64),
    #[error("step '{step}' failed: {detail}")]
    AssertionFailure { step: String, detail: String },
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Conway polynomials are even with constant term 1.
pub fn check_conway_shape(c: &IntPoly) -> Result<(), SplitError> {
    if !c.is_even() {
        return Err(SplitError::NotEven(c.to_string()));
    }
    if !c.constant_term().is_one() {
        return Err(SplitError::BadConstantTerm(c.to_string()));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitVerdict {
    pub splits: bool,
    /// `F` with `F(0) = 1` and `F(z) F(-z) = C`, when the property holds.
    pub witness: Option<IntPoly>,
    /// Even irreducible factors with odd exponent.
    pub obstructions: Vec<(IntPoly, u32)>,
    /// Even irreducible factors with even exponent.
    pub even_factors: Vec<(IntPoly, u32)>,
    /// Non-even factors `q` with their partner `q(-z)` and common exponent.
    pub paired_factors: Vec<(IntPoly, IntPoly, u32)>,
}

/// Representative of the pair `{q(z), q(-z)}`: positive constant term, and
/// positive lowest odd-degree coefficient.
fn pair_representative(q: &IntPoly) -> (IntPoly, IntPoly) {
    let orient = |p: &IntPoly| {
        let c0 = p.constant_term();
        if c0.is_negative() || (c0.is_zero() && p.leading_sign() == -BigInt::one()) {
            -p.clone()
        } else {
            p.clone()
        }
    };
    let a = orient(q);
    let b = orient(&q.substitute_neg());
    let lowest_odd_positive = a
        .coeffs()
        .iter()
        .skip(1)
        .step_by(2)
        .find(|c| !c.is_zero())
        .is_some_and(|c| c.is_positive());
    if lowest_odd_positive {
        (a, b)
    } else {
        (b, a)
    }
}

/// Decides whether `C = F(z) F(-z)` for some `F` in `Z[z]`.
pub fn kawauchi_split(c: &IntPoly) -> Result<SplitVerdict, SplitError> {
    check_conway_shape(c)?;
    let fac = factor_over_z(c)?;
    let mut obstructions = Vec::new();
    let mut even_factors = Vec::new();
    let mut paired_factors: Vec<(IntPoly, IntPoly, u32)> = Vec::new();
    let mut witness = IntPoly::one();
    let mut seen: Vec<IntPoly> = Vec::new();
    for (q, e) in &fac.factors {
        if q.is_even() {
            if e % 2 == 1 {
                obstructions.push((q.clone(), *e));
            } else {
                witness = &witness * &q.pow(e / 2);
                even_factors.push((q.clone(), *e));
            }
            continue;
        }
        if seen.contains(q) {
            continue;
        }
        let partner = q.substitute_neg().primitive_part();
        let partner_exp = fac.exponent_of(&partner).unwrap_or(0);
        if partner_exp != *e {
            return Err(SplitError::AssertionFailure {
                step: "pairing".into(),
                detail: format!("{q} has exponent {e} but {partner} has exponent {partner_exp}"),
            });
        }
        seen.push(partner.clone());
        let (rep, other) = pair_representative(q);
        witness = &witness * &rep.pow(*e);
        paired_factors.push((rep, other, *e));
    }
    let splits = obstructions.is_empty();
    let witness = splits.then(|| {
        if witness.constant_term().is_negative() {
            -witness
        } else {
            witness
        }
    });
    if let Some(f) = &witness {
        if &(f * &f.substitute_neg()) != c {
            return Err(SplitError::AssertionFailure {
                step: "witness".into(),
                detail: format!("F = {f} does not satisfy F(z)F(-z) = {c}"),
            });
        }
    }
    Ok(SplitVerdict {
        splits,
        witness,
        obstructions,
        even_factors,
        paired_factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn counterexample_does_not_split() {
        let v = kawauchi_split(&counterexample_polynomial()).unwrap();
        assert!(!v.splits);
        assert_eq!(v.witness, None);
        assert_eq!(v.obstructions, vec![(irreducible_octic(), 1)]);
        assert_eq!(v.even_factors, vec![(ip("2z^4-1"), 2)]);
        assert_eq!(v.paired_factors, vec![(ip("z+1"), ip("-z+1"), 1)]);
    }

    #[test]
    fn small_verdicts() {
        let v = kawauchi_split(&ip("1-z^2")).unwrap();
        assert_eq!(v.witness, Some(ip("1+z")));
        let c = &ip("1-z^2") * &ip("2z^4-1").pow(2);
        let v = kawauchi_split(&c).unwrap();
        assert_eq!(v.witness, Some(&ip("1+z") * &ip("1-2z^4")));
        let v = kawauchi_split(&ip("1+z^2")).unwrap();
        assert!(!v.splits);
        assert_eq!(v.obstructions, vec![(ip("z^2+1"), 1)]);
        assert_eq!(kawauchi_split(&IntPoly::one()).unwrap().witness, Some(IntPoly::one()));
    }

    #[test]
    fn preconditions() {
        assert!(matches!(kawauchi_split(&ip("1+z")), Err(SplitError::NotEven(_))));
        assert!(matches!(kawauchi_split(&ip("2+z^2")), Err(SplitError::BadConstantTerm(_))));
    }

    #[test]
    fn repeated_pairs_and_mixed_exponents() {
        // F = (1+z)^2 (1 - z + 2z^2) (1+z^2)
        let f = &(&ip("1+z").pow(2) * &ip("1-z+2z^2")) * &ip("1+z^2");
        let c = &f * &f.substitute_neg();
        let v = kawauchi_split(&c).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(&w * &w.substitute_neg(), c);
        assert_eq!(w.constant_term(), BigInt::one());
        assert_eq!(v.even_factors, vec![(ip("z^2+1"), 2)]);
    }
}
