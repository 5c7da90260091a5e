use qalg::QError;
use specfun::NumericError;
use std::fmt;

/// Errors from catalog lookup, q-expansion certification, and implicit
/// differentiation.
#[derive(Debug)]
pub enum ModPolyError {
    /// No cataloged relation exists for this hauptmodul/level pair.
    UnknownRelation { hauptmodul: String, level: u32 },
    /// q-expansion verification was requested below the supported floor.
    OrderTooSmall { got: i64, min: i64 },
    /// The supplied point does not satisfy the relation to working accuracy,
    /// so implicit differentiation of the curve there is meaningless.
    PointOffCurve { residual: f64, allowed: f64 },
    /// The Y-partial vanishes at the point (relative to the size of the
    /// other partials): the implicit function theorem does not apply on
    /// this branch.
    SingularPoint { f_x: f64, f_y: f64 },
    /// The embedded (or user-supplied) catalog text failed to parse.
    BadCatalog { line: usize, msg: String },
    /// An arbitrary-precision evaluation failed.
    Numeric(NumericError),
    /// An exact series operation failed.
    Series(QError),
}

impl fmt::Display for ModPolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModPolyError::UnknownRelation { hauptmodul, level } => {
                write!(f, "no cataloged modular equation for {hauptmodul} at level {level}")
            }
            ModPolyError::OrderTooSmall { got, min } => {
                write!(f, "verification order {got} is below the floor {min}")
            }
            ModPolyError::PointOffCurve { residual, allowed } => write!(
                f,
                "point is off the curve: |Phi| = {residual:.3e} exceeds the allowed {allowed:.3e}"
            ),
            ModPolyError::SingularPoint { f_x, f_y } => write!(
                f,
                "singular point: |Phi_Y| = {f_y:.3e} is negligible (|Phi_X| = {f_x:.3e})"
            ),
            ModPolyError::BadCatalog { line, msg } => {
                write!(f, "catalog line {line}: {msg}")
            }
            ModPolyError::Numeric(e) => write!(f, "numeric evaluation failed: {e}"),
            ModPolyError::Series(e) => write!(f, "series operation failed: {e}"),
        }
    }
}

impl std::error::Error for ModPolyError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            ModPolyError::Numeric(e) => Some(e),
            ModPolyError::Series(e) => Some(e),
            _ => None,
        }
    }
}

impl From<NumericError> for ModPolyError {
    fn from(e: NumericError) -> Self {
        ModPolyError::Numeric(e)
    }
}

impl From<QError> for ModPolyError {
    fn from(e: QError) -> Self {
        ModPolyError::Series(e)
    }
}
