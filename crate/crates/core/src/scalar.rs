//! Floating-point scalar abstraction for the whole crate.

use std::fmt;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point types the solvers can run on (`f32`, `f64`).
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}

/// Converts an `f64` literal into the working scalar type.
#[inline]
pub fn lit<T: Scalar>(v: f64) -> T {
    T::from_f64(v).expect("literal not representable in scalar type")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lit_roundtrips_common_values() {
        assert_eq!(lit::<f64>(0.5), 0.5);
        assert_eq!(lit::<f32>(8.0), 8.0_f32);
        assert_eq!(lit::<f64>(-1.0), -1.0);
    }
}
