use num_rational::Rational64;
use std::fmt;

/// Errors from exact series construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QError {
    /// An exponent does not lie on the (1/24)-integral lattice the engine tracks.
    OffLattice { exponent: Rational64 },
    /// A requested coefficient sits at or beyond the truncation horizon.
    AboveTruncation { exponent: Rational64, trunc: Rational64 },
    /// Truncation order is too small for the requested construction.
    InvalidTruncation { requested: Rational64 },
    /// Eisenstein weight outside {2, 4, 6}.
    UnsupportedWeight(u32),
    /// Theta kind outside {2, 3, 4}.
    InvalidThetaKind(u8),
    /// Division by a series with no nonzero known coefficient.
    DivisionByZero,
    /// Fractional powers require leading coefficient exactly 1.
    NonUnitLeadingCoefficient,
    /// Fractional power would move the leading exponent off the lattice.
    FractionalPowerOffLattice { lead: Rational64, exponent: Rational64 },
    /// A scale or argument is out of the accepted range.
    InvalidArgument(String),
    /// The Sturm bound needs more terms than the series carries.
    InsufficientTruncation { needed: Rational64, have: Rational64 },
    /// An internal cross-check failed; indicates a bug, not bad input.
    SelfCheckFailed(String),
}

impl fmt::Display for QError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QError::OffLattice { exponent } => {
                write!(f, "exponent {exponent} is off the supported q-power lattice")
            }
            QError::AboveTruncation { exponent, trunc } => {
                write!(f, "coefficient at q^{exponent} is beyond truncation O(q^{trunc})")
            }
            QError::InvalidTruncation { requested } => {
                write!(f, "truncation order {requested} is too small for this construction")
            }
            QError::UnsupportedWeight(k) => write!(f, "unsupported Eisenstein weight {k}"),
            QError::InvalidThetaKind(k) => write!(f, "theta kind must be 2, 3 or 4, got {k}"),
            QError::DivisionByZero => write!(f, "division by an identically zero series"),
            QError::NonUnitLeadingCoefficient => {
                write!(f, "fractional power requires leading coefficient 1")
            }
            QError::FractionalPowerOffLattice { lead, exponent } => {
                write!(
                    f,
                    "power {exponent} applied to leading term q^{lead} leaves the lattice"
                )
            }
            QError::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            QError::InsufficientTruncation { needed, have } => {
                write!(
                    f,
                    "Sturm check needs terms through q^{needed} but series stops at O(q^{have})"
                )
            }
            QError::SelfCheckFailed(msg) => write!(f, "internal self-check failed: {msg}"),
        }
    }
}

impl std::error::Error for QError {}
