use std::error::Error;
use std::fmt;

use specfun::NumericError;

/// Errors from parsing, evaluating, or loading constant tables.
#[derive(Debug, Clone, PartialEq)]
pub enum ConstExprError {
    /// Malformed input text; `pos` is a byte offset into the source.
    Syntax { pos: usize, msg: String },
    /// A rational literal with denominator zero.
    ZeroDenominator { pos: usize },
    /// Division by an exact or numeric zero during evaluation.
    DivisionByZero,
    /// The `i` literal in a context where only real expressions are allowed.
    ImaginaryNotAllowed { pos: usize },
    /// Integer exponent too large for exact evaluation.
    ExponentOverflow(i64),
    /// Error propagated from the numeric kernel.
    Numeric(NumericError),
    /// A malformed table line (wrong field count, bad function id, ...).
    BadTableLine { line: usize, msg: String },
    /// Request for a builtin table that does not exist.
    UnknownTable(String),
    /// A table point that does not lie in the upper half plane.
    PointNotInUpperHalfPlane { line: usize },
}

impl fmt::Display for ConstExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstExprError::Syntax { pos, msg } => write!(f, "syntax error at byte {pos}: {msg}"),
            ConstExprError::ZeroDenominator { pos } => {
                write!(f, "zero denominator at byte {pos}")
            }
            ConstExprError::DivisionByZero => write!(f, "division by zero"),
            ConstExprError::ImaginaryNotAllowed { pos } => {
                write!(f, "imaginary unit not allowed here (byte {pos})")
            }
            ConstExprError::ExponentOverflow(n) => write!(f, "exponent {n} too large"),
            ConstExprError::Numeric(e) => write!(f, "numeric error: {e}"),
            ConstExprError::BadTableLine { line, msg } => {
                write!(f, "bad table line {line}: {msg}")
            }
            ConstExprError::UnknownTable(name) => write!(f, "unknown table `{name}`"),
            ConstExprError::PointNotInUpperHalfPlane { line } => {
                write!(f, "point on table line {line} is not in the upper half plane")
            }
        }
    }
}

impl Error for ConstExprError {}

impl From<NumericError> for ConstExprError {
    fn from(e: NumericError) -> Self {
        ConstExprError::Numeric(e)
    }
}
