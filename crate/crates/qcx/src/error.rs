use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum QcxError {
    /// A domain type was constructed with parameters outside its contract.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Polynomial degree above the documented cap (200).
    #[error("degree {degree} exceeds the supported cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },

    /// An adaptive integral did not reach the requested tolerance.
    ///
    /// Carries the partial value and its error estimate so callers can
    /// decide whether the partial result is still usable.
    #[error("quadrature failed to converge for {what}: partial value {partial:.6e}, error estimate {error_estimate:.3e}")]
    NonConvergent {
        what: String,
        partial: f64,
        error_estimate: f64,
    },

    /// A route cap was exceeded (e.g. the Bell route for entropic moments).
    #[error("method cap exceeded: {0}")]
    MethodCap(String),
}

pub type Result<T> = std::result::Result<T, QcxError>;
