use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter violates its domain (non-finite, wrong sign, out of range).
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested integral does not converge for these parameters.
    #[error("divergent integral: {0}")]
    DivergentIntegral(String),

    /// The quadrature engine exhausted its refinement levels.
    #[error("quadrature did not reach rel_tol {rel_tol:e}; last level change {last_change:e}")]
    QuadratureFailure { rel_tol: f64, last_change: f64 },

    /// Partitions combined by `superpose` must share the same horizon.
    #[error("mismatched horizon: {0}")]
    MismatchedHorizon(String),
}

pub type Result<T> = std::result::Result<T, Error>;
