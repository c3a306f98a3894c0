//! Exact Conway polynomial toolkit.

pub mod conway;
pub mod diagram;
pub mod factor;
pub mod poly;
pub mod split;
pub mod tangle;
pub mod scalar;

pub use poly::{IntPoly, LaurentPoly, ModPoly, Poly, PolyError};
pub use scalar::Coeff;
