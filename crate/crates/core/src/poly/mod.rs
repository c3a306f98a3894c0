//! Exact polynomial arithmetic over `Z`, `Z/m`, and Laurent polynomials over `Z`.

mod dense;
mod laurent;
mod modular;
pub mod text;

use num_bigint::BigInt;
use thiserror::Error;

pub use dense::Poly;
pub use laurent::LaurentPoly;
pub use modular::ModPoly;
pub(crate) use modular::mod_inverse;
pub use text::{format_coeff_list, parse_coeff_list, parse_poly};

/// Polynomial over arbitrary-precision integers.
pub type IntPoly = Poly<BigInt>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("polynomial {0} has an odd-degree term")]
    NotEven(String),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("leading coefficient of {0} is not a unit")]
    NonUnitLeading(String),
}

impl IntPoly {
    /// Coefficient-wise reduction into `Z/m`.
    pub fn reduce_mod(&self, m: &BigInt) -> Result<ModPoly, PolyError> {
        ModPoly::new(m.clone(), self.coeffs().to_vec())
    }

    pub fn reduce_mod_i64(&self, m: i64) -> Result<ModPoly, PolyError> {
        self.reduce_mod(&BigInt::from(m))
    }
}
