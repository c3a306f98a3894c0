use num_bigint::BigInt;

use super::{check_conway_shape, SplitError};
use crate::poly::ModPoly;
use crate::IntPoly;

/// Outcome of the mod 4 square test for `C(z) C(z^2) C(iz)`, all polynomials
/// written in `x = z^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConantVerdict {
    pub holds: bool,
    pub witness: Option<ModPoly>,
    pub rhs: ModPoly,
}

/// Is `C(z) C(z^2) C(iz)` a square in `Z/4[z^2]`?
///
/// Squaring mod 4 only sees the argument mod 2, and square roots in `F_2[x]`
/// are unique, so one candidate decides the question.
pub fn conant_check(c: &IntPoly) -> Result<ConantVerdict, SplitError> {
    check_conway_shape(c)?;
    let product = &(c * &c.inflate(2)) * &c.substitute_imaginary_even()?;
    let in_x = product.deflate_even()?;
    let four = BigInt::from(4);
    let rhs = in_x.reduce_mod(&four)?;
    let two = BigInt::from(2);
    let mut root = Vec::new();
    for (i, coeff) in rhs.coeffs().iter().enumerate() {
        let bit = coeff % &two;
        if i % 2 == 1 {
            if bit != BigInt::from(0) {
                return Ok(ConantVerdict { holds: false, witness: None, rhs });
            }
        } else {
            root.push(bit);
        }
    }
    let candidate = ModPoly::new(four, root)?;
    let holds = candidate.mul(&candidate) == rhs;
    Ok(ConantVerdict {
        holds,
        witness: holds.then_some(candidate),
        rhs,
    })
}
