use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{check_conway_shape, SplitError};
use crate::IntPoly;

/// Numerical necessary conditions for a knot to be equivalent to its mirror.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub determinant: BigInt,
    pub determinant_sum_of_two_squares: bool,
    /// `(a, b)` with `a^2 + b^2 = determinant`, when small enough to search.
    pub two_squares: Option<(BigInt, BigInt)>,
    pub leading_abs: BigInt,
    pub leading_is_square: bool,
}

/// `|C(2i)|`, i.e. `|C|` evaluated at `z^2 = -4`.
pub fn determinant(c: &IntPoly) -> Result<BigInt, SplitError> {
    check_conway_shape(c)?;
    Ok(c.eval_even(&BigInt::from(-4))?.abs())
}

/// Fermat's criterion: every prime `3 mod 4` divides `n` to an even power.
pub fn is_sum_of_two_squares(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    if n.is_zero() {
        return true;
    }
    let mut m = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e % 2 == 1 && (&p % 4u32) == BigInt::from(3) {
            return false;
        }
        p += 1;
    }
    // what remains is 1 or a prime
    &m % 4u32 != BigInt::from(3)
}

/// Explicit representation `n = a^2 + b^2` with `0 <= a <= b`, for `n` below `10^14`.
pub fn two_squares(n: &BigInt) -> Option<(BigInt, BigInt)> {
    let n = n.to_u64().filter(|&v| v < 100_000_000_000_000)?;
    let mut a = 0u64;
    while 2 * a * a <= n {
        let rest = n - a * a;
        let b = rest.sqrt();
        if b * b == rest {
            return Some((BigInt::from(a), BigInt::from(b)));
        }
        a += 1;
    }
    None
}

pub fn is_perfect_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

pub fn achirality_obstructions(c: &IntPoly) -> Result<ObstructionReport, SplitError> {
    let determinant = determinant(c)?;
    let leading_abs = c.leading().cloned().unwrap_or_else(BigInt::one).abs();
    Ok(ObstructionReport {
        determinant_sum_of_two_squares: is_sum_of_two_squares(&determinant),
        two_squares: two_squares(&determinant),
        leading_is_square: is_perfect_square(&leading_abs),
        leading_abs,
        determinant,
    })
}
