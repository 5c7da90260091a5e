use std::fmt;

/// Errors from arbitrary-precision evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NumericError {
    /// Input outside the function's domain (e.g. tau not in the upper
    /// half-plane, hypergeometric argument outside the unit disk).
    DomainError(String),
    /// Modular reduction failed to reach the convergence region.
    ReductionDiverged,
    /// Re-evaluation at higher precision disagreed with the first pass.
    PrecisionLoss(String),
    /// A context or function parameter is out of range.
    InvalidParameter(String),
}

impl fmt::Display for NumericError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumericError::DomainError(msg) => write!(f, "domain error: {msg}"),
            NumericError::ReductionDiverged => {
                write!(f, "modular reduction did not reach the convergence region")
            }
            NumericError::PrecisionLoss(msg) => write!(f, "precision loss detected: {msg}"),
            NumericError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
        }
    }
}

impl std::error::Error for NumericError {}
