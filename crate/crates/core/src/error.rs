use thiserror::Error;

/// Errors raised by the evaluation routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two independent routes to the same quantity disagree, or a value that
    /// must be real carries an imaginary residue.
    #[error("internal consistency error: {what} (defect {defect:e}, tolerance {tolerance:e})")]
    Consistency {
        what: String,
        defect: f64,
        tolerance: f64,
    },

    /// A series or quadrature could not reach the requested tolerance.
    #[error("no convergence: {what}; achieved error bound {achieved:e}, target {target:e}")]
    Convergence {
        what: String,
        achieved: f64,
        target: f64,
    },

    /// Attempt to combine exact values that have no exact common form.
    #[error("inexact operation: {0}")]
    Inexact(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
