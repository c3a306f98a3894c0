//! Coefficient rings for the dense polynomial types.
//!
//! All arithmetic in this crate is exact. The polynomial containers are generic
//! over any signed integer type from `num-traits`, so the same code runs on
//! machine integers for quick experiments and on [`num_bigint::BigInt`] where
//! coefficient growth is unbounded (factorization, Hensel lifting, matrix
//! determinants).

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer coefficient.
pub trait Coeff:
    Clone + Debug + Display + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("coefficient type cannot represent i64")
    }

    /// Widen into an arbitrary-precision integer.
    fn to_bigint(&self) -> BigInt;
}

impl Coeff for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

impl Coeff for i64 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for i128 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for i32 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}
