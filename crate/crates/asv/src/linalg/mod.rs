//! Banded symmetric positive-definite precision algebra.
//!
//! Every Gaussian block update in the samplers is a draw from
//! `N(Q^{-1} b, Q^{-1})` where `Q` is banded SPD with bandwidth equal to the
//! differencing order. This module owns the band storage, the Cholesky
//! factorization, solves, and the one-shot whole-path sampler built on them.

mod banded;
mod build;
mod sample;

pub use banded::{BandedChol, BandedSpd};
pub use build::{ar_transpose_apply, build_qv, build_qxi};
pub use sample::sample_gaussian_canonical;
