//! Floating-point scalar abstraction for the dense spectral code.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real scalar the eigensolver and matrix builders are generic over.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Jacobi stops once the largest off-diagonal entry drops below this
    /// fraction of the matrix max-norm.
    fn jacobi_tolerance() -> Self;

    /// Lossy conversion used for integer counts and literals.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    #[inline]
    fn jacobi_tolerance() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    #[inline]
    fn jacobi_tolerance() -> Self {
        1e-6
    }
}
