//! Mechanical check that `C_K = P(z)(1+z)(1-z)(2z^4-1)^2` is a Conway-type
//! polynomial without the splitting property.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::diophantine::{reduced_system_has_no_solution_mod_2, residues_force_divisibility_by_4, solve_system};
use super::{kawauchi_split, SplitError};
use crate::factor::{canonical_order, factor_mod_p, factor_over_z, is_irreducible};
use crate::IntPoly;

fn ip(s: &str) -> IntPoly {
    s.parse().expect("valid literal")
}

/// `P(z) = 4z^8 + 16z^6 + 12z^4 - 16z^2 + 1`.
pub fn irreducible_octic() -> IntPoly {
    ip("4z^8+16z^6+12z^4-16z^2+1")
}

/// `z^4 + z^3 + z^2 + 1`, one of the two quartic factors of `P` mod 3.
pub fn mod3_quartic() -> IntPoly {
    ip("z^4+z^3+z^2+1")
}

/// The factored form `P, 1+z, 1-z, (2z^4-1)^2`.
pub fn counterexample_factors() -> Vec<(IntPoly, u32)> {
    vec![(irreducible_octic(), 1), (ip("1+z"), 1), (ip("1-z"), 1), (ip("2z^4-1"), 2)]
}

pub fn counterexample_polynomial() -> IntPoly {
    counterexample_factors()
        .iter()
        .fold(IntPoly::one(), |acc, (f, e)| &acc * &f.pow(*e))
}

/// Inputs of the verification; the default is the genuine counterexample.
#[derive(Clone, Debug)]
pub struct CounterexampleData {
    pub conway: IntPoly,
    pub factored_form: Vec<(IntPoly, u32)>,
    pub octic: IntPoly,
    /// Expected image of the octic in `F_3[z]`.
    pub octic_mod3: IntPoly,
    pub quartic_mod3: IntPoly,
    pub bound: u64,
}

impl Default for CounterexampleData {
    fn default() -> Self {
        Self {
            conway: counterexample_polynomial(),
            factored_form: counterexample_factors(),
            octic: irreducible_octic(),
            octic_mod3: ip("z^8+z^6+2z^2+1"),
            quartic_mod3: mod3_quartic(),
            bound: 1000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub name: String,
    pub anchor: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub steps: Vec<Step>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.steps.len() == 6 && self.steps.iter().all(|s| s.pass)
    }

    pub fn first_failure(&self) -> Option<&Step> {
        self.steps.iter().find(|s| !s.pass)
    }
}

type Outcome = Result<String, String>;

/// Runs the six steps in order, stopping after the first failure (which is
/// included in the report).
pub fn verification_steps(data: &CounterexampleData) -> VerificationReport {
    let steps: [(&str, &str, &dyn Fn(&CounterexampleData) -> Outcome); 6] = [
        ("factorization over Z", "C_K = P(z)(1+z)(1-z)(2z^4-1)^2", &step_factorization),
        ("reduction mod 3", "P = qbar(z) qbar(-z) over F_3", &step_mod3),
        ("splitting shape", "q(z) = (2z^4+az^2-1)+(bz^3+cz)", &step_shape),
        ("diophantine refutation", "4a-b^2=16, a^2-2bc=16, 2a+c^2=16", &step_diophantine),
        ("irreducibility of P", "P irreducible over Z", &step_irreducible),
        ("splitting verdict", "C_K != F(z)F(-z)", &step_verdict),
    ];
    let mut report = VerificationReport { steps: Vec::new() };
    for (name, anchor, run) in steps {
        let (pass, detail) = match run(data) {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        report.steps.push(Step {
            name: name.into(),
            anchor: anchor.into(),
            pass,
            detail,
        });
        if !pass {
            break;
        }
    }
    report
}

pub fn verify_counterexample_with(data: &CounterexampleData) -> Result<VerificationReport, SplitError> {
    let report = verification_steps(data);
    match report.first_failure() {
        Some(step) => Err(SplitError::AssertionFailure {
            step: step.name.clone(),
            detail: step.detail.clone(),
        }),
        None => Ok(report),
    }
}

pub fn verify_counterexample() -> Result<VerificationReport, SplitError> {
    verify_counterexample_with(&CounterexampleData::default())
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn step_factorization(d: &CounterexampleData) -> Outcome {
    let product = d
        .factored_form
        .iter()
        .fold(IntPoly::one(), |acc, (f, e)| &acc * &f.pow(*e));
    if product != d.conway {
        return Err(format!("product of the stated factors is {product}, not {}", d.conway));
    }
    let fac = factor_over_z(&d.conway).map_err(err)?;
    let mut expected: Vec<(IntPoly, u32)> = d
        .factored_form
        .iter()
        .map(|(f, e)| (f.primitive_part(), *e))
        .collect();
    expected.sort_by(|(f, _), (g, _)| canonical_order(f, g));
    if fac.factors != expected || !fac.content.is_one() {
        return Err(format!("computed factorization {fac} differs from the stated form"));
    }
    Ok(format!("{} = {fac}", d.conway))
}

fn step_mod3(d: &CounterexampleData) -> Outcome {
    let three = BigInt::from(3);
    let reduced = d.octic.reduce_mod(&three).map_err(err)?;
    let expected = d.octic_mod3.reduce_mod(&three).map_err(err)?;
    if reduced != expected {
        return Err(format!("P mod 3 is {reduced}, expected {expected}"));
    }
    let q = d.quartic_mod3.reduce_mod(&three).map_err(err)?;
    let q_neg = q.substitute_neg();
    let fac = factor_mod_p(&reduced).map_err(err)?;
    let mut want = vec![(q.clone(), 1), (q_neg.clone(), 1)];
    want.sort_by(|(a, _), (b, _)| a.coeffs().cmp(b.coeffs()));
    if !fac.unit.is_one() || fac.factors != want {
        let got: Vec<String> = fac.factors.iter().map(|(f, e)| format!("({f})^{e}")).collect();
        return Err(format!("F_3 factorization is {} * {}", fac.unit, got.join(" * ")));
    }
    if factor_mod_p(&q).map_err(err)?.factors.len() != 1 {
        return Err(format!("{q} is reducible over F_3"));
    }
    Ok(format!("P = {reduced} = ({q})({q_neg}) mod 3, both quartics irreducible over F_3"))
}

/// `q(z) q(-z)` for `q = 2z^4 + b z^3 + a z^2 + c z - 1`, by multiplication.
fn shape_product(a: i64, b: i64, c: i64) -> IntPoly {
    let q = IntPoly::from_i64s(&[-1, c, a, b, 2]);
    &q * &q.substitute_neg()
}

/// The same product from the closed form `E^2 - O^2` with `E = 2z^4 + a z^2 - 1`, `O = b z^3 + c z`.
fn shape_formula(a: i64, b: i64, c: i64) -> IntPoly {
    IntPoly::from_i64s(&[1, 0, -2 * a - c * c, 0, a * a - 4 - 2 * b * c, 0, 4 * a - b * b, 0, 4])
}

fn step_shape(d: &CounterexampleData) -> Outcome {
    let three = BigInt::from(3);
    let p = &d.octic;
    let lc = p.leading().cloned().unwrap_or_default();
    if !p.is_even() || p.degree() != Some(8) || lc != BigInt::from(4) || !p.constant_term().is_one() {
        return Err(format!("{p} is not an even octic with leading coefficient 4 and constant term 1"));
    }
    if (&lc % &three).is_zero() {
        return Err("3 divides the leading coefficient".into());
    }
    // A proper factor over Z reduces to one of the two quartics mod 3, so both
    // factors are quartics; evenness makes the second one q(-z). Then
    // lc(q)^2 = 4 and q(0)^2 = 1; normalizing lc(q) = 2 gives q = -qbar mod 3.
    let qbar = d.quartic_mod3.reduce_mod(&three).map_err(err)?;
    if qbar.substitute_neg() == qbar {
        return Err("the mod 3 quartic is even, the pairing argument does not apply".into());
    }
    let q_mod3 = qbar.scale(&BigInt::from(-1));
    let residue = |i: usize| -> i64 {
        let r = q_mod3.coeff(i);
        if r == BigInt::from(2) { -1 } else if r.is_zero() { 0 } else { 1 }
    };
    if residue(4) != -1 || residue(0) != -1 {
        return Err(format!("-qbar = {q_mod3} is incompatible with leading coefficient 2 and q(0) = -1"));
    }
    for a in -1..=1 {
        for b in -1..=1 {
            for c in -1..=1 {
                if shape_product(a, b, c) != shape_formula(a, b, c) {
                    return Err(format!("coefficient identity fails at (a, b, c) = ({a}, {b}, {c})"));
                }
            }
        }
    }
    let rhs = shape_rhs(p);
    if rhs != super::SHAPE_RHS {
        return Err(format!("coefficient matching gives right-hand sides {rhs:?}"));
    }
    Ok(format!(
        "P = q(z)q(-z) with q = 2z^4 + bz^3 + az^2 + cz - 1, a = {}, b = {}, c = {} mod 3; matching coefficients gives 4a-b^2 = {}, a^2-2bc = {}, 2a+c^2 = {}",
        residue(2),
        residue(3),
        residue(1),
        rhs.0,
        rhs.1,
        rhs.2
    ))
}

// The coefficient identity is quadratic in each of a, b, c, so agreement on a
// 3x3x3 grid proves it; matching the z^6, z^4, z^2 coefficients of P gives the
// system's right-hand sides.
fn shape_rhs(p: &IntPoly) -> (i64, i64, i64) {
    let c = |i: usize| -> i64 { i64::try_from(p.coeff(i)).unwrap_or(i64::MAX) };
    (c(6), c(4) + 4, -c(2))
}

fn step_diophantine(d: &CounterexampleData) -> Outcome {
    let rhs = shape_rhs(&d.octic);
    let report = solve_system(rhs, d.bound).map_err(err)?;
    if !report.solutions.is_empty() {
        return Err(format!("solutions found: {:?}", report.solutions));
    }
    if !residues_force_divisibility_by_4() {
        return Err("residues mod 16 do not force a, b, c = 0 mod 4".into());
    }
    if !reduced_system_has_no_solution_mod_2() {
        return Err("the reduced system is solvable mod 2".into());
    }
    Ok(format!(
        "no solution with |a|, |b|, |c| <= {}; {} candidate triples all divisible by 4 with a/4 even; reduced system unsolvable mod 2",
        report.bound, report.candidates
    ))
}

fn step_irreducible(d: &CounterexampleData) -> Outcome {
    if is_irreducible(&d.octic).map_err(err)? {
        Ok(format!("{} is irreducible over Z", d.octic))
    } else {
        Err(format!("{} factors over Z", d.octic))
    }
}

fn step_verdict(d: &CounterexampleData) -> Outcome {
    let v = kawauchi_split(&d.conway).map_err(err)?;
    let octic = d.octic.primitive_part();
    if v.splits || !v.obstructions.iter().any(|(f, e)| *f == octic && e % 2 == 1) {
        return Err(format!("verdict splits = {}, obstructions = {:?}", v.splits, v.obstructions));
    }
    let list: Vec<String> = v.obstructions.iter().map(|(f, e)| format!("({f})^{e}")).collect();
    Ok(format!("does not split; even factors with odd exponent: {}", list.join(", ")))
}
