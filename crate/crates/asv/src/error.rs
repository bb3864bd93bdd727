use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A precision matrix failed its Cholesky factorization. The index is the
    /// first leading minor that was found non-positive.
    #[error("matrix is not positive definite: leading minor {minor} is non-positive")]
    Indefinite { minor: usize },

    /// Differencing order outside the supported range, or series too short.
    #[error("differencing order k={k} must satisfy 1 <= k <= 3 and t={t} > k")]
    BadDiffOrder { k: usize, t: usize },

    /// Input series violates a `TimeSeries` invariant.
    #[error("invalid time series: {reason}")]
    InvalidSeries { reason: String },

    /// Model configuration violates a `ModelSpec` invariant.
    #[error("invalid model spec: {reason}")]
    InvalidSpec { reason: String },

    /// Non-finite state encountered mid-chain; names the sweep and block.
    #[error("chain diverged at iteration {iteration} in block `{block}`: non-finite state")]
    Divergence { iteration: usize, block: &'static str },

    /// All categorical weights underflowed in an indicator update.
    #[error("mixture indicator weights underflowed at residual {residual}")]
    IndicatorUnderflow { residual: f64 },

    /// The slice sampler failed to accept after the shrinkage-step budget.
    #[error("slice sampler stuck after {steps} shrinkage steps from x={from} (log-height {log_height})")]
    SliceStuck { steps: usize, from: f64, log_height: f64 },

    /// Mismatched vector lengths in a metric computation.
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// Corrupt or inconsistent constants table.
    #[error("bad constants table: {reason}")]
    BadTable { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
