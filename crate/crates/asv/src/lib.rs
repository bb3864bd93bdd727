//! Adaptive stochastic volatility.
//!
//! Gibbs samplers for univariate time-varying volatility built around
//! dynamic shrinkage priors on the log evolution variances, together with
//! the variate primitives (Polya-Gamma, Z-distribution, log-chi-squared
//! mixture), banded Gaussian path sampling, closed-form stationary theory,
//! benchmark data generators, and evaluation metrics.
//!
//! Model variants:
//! - `Rwsv`: random-walk log-variance with a single inverse-gamma variance.
//! - `RwsvBl`: per-step exponential (Bayesian LASSO) increment variances.
//! - `AsvHs` / `AsvDhs`: shrinkage on k-th differences of the log-variance,
//!   horseshoe (`phi = 0`) or dynamic horseshoe (`phi` sampled).
//! - `AsvHsN` / `AsvDhsN`: the same plus a nugget noise layer on the
//!   log-variance.
//! - `BtfAsv`: joint trend filter on the mean and the log-variance.
//!
//! The numeric kernels (banded SPD algebra, difference operators) are
//! generic over [`scalar::Scalar`]; the samplers are `f64`. The aliases
//! below fix the concrete scalar used throughout the chain code.

pub mod chain;
pub mod dist;
pub mod dsptheory;
pub mod error;
pub mod evaluate;
pub mod linalg;
pub mod model;
pub mod ops;
pub mod samplers;
pub mod scalar;
pub mod simulate;

pub use chain::{run_chain, PosteriorDraws};
pub use error::{Error, Result};
pub use model::{ModelSpec, TimeSeries, Variant};

/// Concrete scalar used by the samplers.
pub type Real = f64;
/// Banded SPD precision over the sampler scalar.
pub type BandedSpd = linalg::BandedSpd<Real>;
/// Cholesky factor over the sampler scalar.
pub type BandedChol = linalg::BandedChol<Real>;
