//! Floating-point abstraction for the numeric kernel.
//!
//! Weight updates, parameter formulas, and regret oracles are generic over
//! [`Scalar`]; the experiment harness and CLI instantiate everything at `f64`
//! (see the aliases at the crate root).

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive};

/// Floating scalar: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Float + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
}

/// Converts an `f64` into the working scalar (exact when `F = f64`).
pub fn real<F: Scalar>(x: f64) -> F {
    F::from_f64(x).expect("finite f64 converts to any Scalar")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_roundtrips_f64() {
        let x: f64 = real(0.25);
        assert_eq!(x, 0.25);
        let y: f32 = real(0.25);
        assert_eq!(y, 0.25f32);
    }
}
