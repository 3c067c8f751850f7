//! Scalar abstraction for the floating-point parts of the pipeline.

use std::fmt::Debug;
use std::ops::AddAssign;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar used for transform coefficients and metrics.
///
/// Implemented for `f32` and `f64`. The crate-level [`Coeff`](crate::Coeff)
/// alias picks `f64`, which is what the documented accuracy bounds assume.
pub trait Real: Float + FloatConst + FromPrimitive + ToPrimitive + AddAssign + Debug {}

impl Real for f32 {}
impl Real for f64 {}
