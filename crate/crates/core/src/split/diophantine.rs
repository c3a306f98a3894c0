//! The integer system that a splitting `P = q(z) q(-z)` of the octic would
//! have to satisfy, for `q = (2z^4 + a z^2 - 1) + (b z^3 + c z)`:
//!
//! ```text
//! 4a - b^2  = 16
//! a^2 - 2bc = 16
//! 2a + c^2  = 16
//! ```

use num_integer::Roots;

use super::SplitError;

/// Right-hand sides of the system coming from the octic.
pub const SHAPE_RHS: (i64, i64, i64) = (16, 16, 16);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophantineReport {
    pub bound: u64,
    pub rhs: (i64, i64, i64),
    pub solutions: Vec<(i128, i128, i128)>,
    /// Triples satisfying the first and third equations; the second decides.
    pub candidates: usize,
    /// Every candidate had `a, b, c = 0 mod 4` and the reduced system forced
    /// `a/4` even (only checked for the octic's right-hand sides).
    pub reduction_checked: bool,
}

/// All `(a, b, c)` with `|a|, |b|, |c| <= bound` solving the system with the
/// given right-hand sides. `b` determines `a` through the first equation and
/// `c` up to sign through the third, so the scan is linear in `bound`.
pub fn solve_system(rhs: (i64, i64, i64), bound: u64) -> Result<DiophantineReport, SplitError> {
    if bound < 16 {
        return Err(SplitError::BoundTooSmall(bound));
    }
    let (r1, r2, r3) = (i128::from(rhs.0), i128::from(rhs.1), i128::from(rhs.2));
    let lim = i128::from(bound);
    let check_reduction = rhs == SHAPE_RHS;
    let mut solutions = Vec::new();
    let mut candidates = 0usize;
    for b in -lim..=lim {
        let num = r1 + b * b;
        if num % 4 != 0 {
            continue;
        }
        let a = num / 4;
        let c_sq = r3 - 2 * a;
        if a.abs() > lim || c_sq < 0 {
            continue;
        }
        let root = c_sq.sqrt();
        if root * root != c_sq || root > lim {
            continue;
        }
        let signs: &[i128] = if root == 0 { &[0] } else { &[-root, root] };
        for &c in signs {
            candidates += 1;
            if check_reduction {
                check_reduced(a, b, c)?;
            }
            if a * a - 2 * b * c == r2 {
                solutions.push((a, b, c));
            }
        }
    }
    solutions.sort();
    Ok(DiophantineReport {
        bound,
        rhs,
        solutions,
        candidates,
        reduction_checked: check_reduction,
    })
}

pub fn solve_diophantine(bound: u64) -> Result<DiophantineReport, SplitError> {
    solve_system(SHAPE_RHS, bound)
}

// For a triple satisfying the first and third equations: all entries are
// multiples of 4, and with a = 4a', b = 4b', c = 4c' the reduced equations
// a' - b'^2 = 1 and a' + 2c'^2 = 2 hold, so a' is even and a'^2 - 2b'c' != 1.
fn check_reduced(a: i128, b: i128, c: i128) -> Result<(), SplitError> {
    let fail = |detail: String| SplitError::AssertionFailure {
        step: "divisibility".into(),
        detail,
    };
    if a % 4 != 0 || b % 4 != 0 || c % 4 != 0 {
        return Err(fail(format!("({a}, {b}, {c}) is not divisible by 4")));
    }
    let (a1, b1, c1) = (a / 4, b / 4, c / 4);
    if a1 - b1 * b1 != 1 || a1 + 2 * c1 * c1 != 2 {
        return Err(fail(format!("reduced equations fail at ({a1}, {b1}, {c1})")));
    }
    if a1 % 2 != 0 || a1 * a1 - 2 * b1 * c1 == 1 {
        return Err(fail(format!("parity argument fails at ({a1}, {b1}, {c1})")));
    }
    Ok(())
}

/// Unbounded form of the divisibility step: any residues mod 16 satisfying
/// the first and third equations mod 16 are multiples of 4. Both equations
/// only depend on `a, b, c mod 16`.
pub fn residues_force_divisibility_by_4() -> bool {
    let (r1, _, r3) = SHAPE_RHS;
    (0..16i64).all(|a| {
        (0..16i64).all(|b| {
            (0..16i64).all(|c| {
                let first = (4 * a - b * b - r1).rem_euclid(16) == 0;
                let third = (2 * a + c * c - r3).rem_euclid(16) == 0;
                !(first && third) || (a % 4 == 0 && b % 4 == 0 && c % 4 == 0)
            })
        })
    })
}

/// The reduced system `a' - b'^2 = 1, a'^2 - 2b'c' = 1, a' + 2c'^2 = 2` has no
/// solution mod 2, hence none over the integers.
pub fn reduced_system_has_no_solution_mod_2() -> bool {
    (0..2i64).all(|a| {
        (0..2i64).all(|b| {
            (0..2i64).all(|c| {
                let e4 = (a - b * b - 1).rem_euclid(2) == 0;
                let e5 = (a * a - 2 * b * c - 1).rem_euclid(2) == 0;
                let e6 = (a + 2 * c * c - 2).rem_euclid(2) == 0;
                !(e4 && e5 && e6)
            })
        })
    })
}
