//! Scalar abstraction for the numeric kernels.
//!
//! The banded linear algebra and difference operators are written against
//! [`Scalar`] so they work for `f32` and `f64` alike. The samplers themselves
//! are `f64`-only: MCMC at single precision is not a supported configuration.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, NumAssign};

/// Floating-point scalar usable in the banded kernels.
pub trait Scalar: Float + NumAssign + Sum<Self> + Debug + Display + Send + Sync + 'static {}

impl<T> Scalar for T where T: Float + NumAssign + Sum<T> + Debug + Display + Send + Sync + 'static {}
