//! Error type for series cataloging, constant derivation, and certification.

use std::error::Error;
use std::fmt;

use constexpr::ConstExprError;
use modpoly::ModPolyError;
use qalg::QError;
use specfun::NumericError;

/// Errors produced while loading the series catalog or running the
/// derivation / summation / certification pipeline.
#[derive(Debug)]
pub enum RsError {
    /// The catalog text is malformed or violates a structural invariant.
    Catalog { line: usize, msg: String },
    /// No cataloged series has the requested id.
    UnknownSeries(String),
    /// A coefficient recipe was constructed with inconsistent parameters.
    InvalidRecipe(String),
    /// A request is outside the domain an operation supports
    /// (bad matrix, unsupported transform, too-small order, ...).
    InvalidRequest(String),
    /// The precision context is too coarse for the requested certification.
    PrecisionTooLow { needed: u32, got: u32 },
    /// A series sum failed to meet its stopping rule within the term cap.
    NonConvergent { what: String, terms: usize },
    /// Constant-expression parsing or evaluation failed.
    Expr(ConstExprError),
    /// Arbitrary-precision evaluation failed.
    Numeric(NumericError),
    /// Exact q-series manipulation failed.
    Series(QError),
    /// Modular-polynomial lookup or differentiation failed.
    Poly(ModPolyError),
}

impl fmt::Display for RsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RsError::Catalog { line, msg } => {
                write!(f, "series catalog error at line {line}: {msg}")
            }
            RsError::UnknownSeries(id) => write!(f, "unknown series id {id:?}"),
            RsError::InvalidRecipe(msg) => write!(f, "invalid coefficient recipe: {msg}"),
            RsError::InvalidRequest(msg) => write!(f, "invalid request: {msg}"),
            RsError::PrecisionTooLow { needed, got } => write!(
                f,
                "precision context too coarse: need at least {needed} digits, have {got}"
            ),
            RsError::NonConvergent { what, terms } => {
                write!(f, "{what} did not converge within {terms} terms")
            }
            RsError::Expr(e) => write!(f, "constant expression error: {e}"),
            RsError::Numeric(e) => write!(f, "numeric error: {e}"),
            RsError::Series(e) => write!(f, "q-series error: {e}"),
            RsError::Poly(e) => write!(f, "modular polynomial error: {e}"),
        }
    }
}

impl Error for RsError {
    fn source(&self) -> Option<&(dyn Error + 'static)> {
        match self {
            RsError::Expr(e) => Some(e),
            RsError::Numeric(e) => Some(e),
            RsError::Series(e) => Some(e),
            RsError::Poly(e) => Some(e),
            _ => None,
        }
    }
}

impl From<ConstExprError> for RsError {
    fn from(e: ConstExprError) -> Self {
        RsError::Expr(e)
    }
}

impl From<NumericError> for RsError {
    fn from(e: NumericError) -> Self {
        RsError::Numeric(e)
    }
}

impl From<QError> for RsError {
    fn from(e: QError) -> Self {
        RsError::Series(e)
    }
}

impl From<ModPolyError> for RsError {
    fn from(e: ModPolyError) -> Self {
        RsError::Poly(e)
    }
}
