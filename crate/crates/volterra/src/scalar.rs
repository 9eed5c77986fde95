//! Scalar abstraction over the floating-point types the library supports.

use nalgebra::RealField;
use num_traits::{FromPrimitive, ToPrimitive};

/// Floating-point scalar for all numeric code in this crate: `f32` or `f64`.
///
/// `RealField` supplies the transcendental functions and linear-algebra
/// support, `FromPrimitive`/`ToPrimitive` the conversions from literals and
/// sample counts.
pub trait Scalar: RealField + FromPrimitive + ToPrimitive + Copy + Default {
    fn from_f64_lossy(x: f64) -> Self;
    fn to_f64_lossy(self) -> f64;
    fn from_usize_lossy(x: usize) -> Self;
}

impl Scalar for f32 {
    #[inline]
    fn from_f64_lossy(x: f64) -> Self {
        x as f32
    }
    #[inline]
    fn to_f64_lossy(self) -> f64 {
        f64::from(self)
    }
    #[inline]
    fn from_usize_lossy(x: usize) -> Self {
        x as f32
    }
}

impl Scalar for f64 {
    #[inline]
    fn from_f64_lossy(x: f64) -> Self {
        x
    }
    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self
    }
    #[inline]
    fn from_usize_lossy(x: usize) -> Self {
        x as f64
    }
}
