//! Arbitrary-precision special functions on the upper half-plane.
//!
//! Everything is evaluated through a [`PrecisionContext`]: requested digits
//! plus guard digits set the MPFR working precision, and `recheck_delta`
//! controls the higher-precision re-evaluation used as a tripwire where a
//! routine opts into double evaluation.
//!
//! Modular quantities (eta, theta constants, Eisenstein series and
//! everything built from them) are computed by recursive reduction to the
//! fast-convergence region Im tau >= 3/4, |Re tau| <= 1/2, applying the
//! exact transformation factor at each step, then summing sparse
//! q-expansions whose term count is logarithmic in the target accuracy.

mod complex;
mod error;
mod hyper;
mod modular;
mod zforms;

pub use complex::APComplex;
pub use error::NumericError;
pub use hyper::{eval_2f1, eval_3f2, eval_gamma, gamma_rational};
pub use modular::{
    apply_mobius, eval_e2n, eval_eisenstein, eval_eta, eval_hauptmodul, eval_j, eval_lambda,
    eval_theta,
};
pub use zforms::{eval_u, eval_z, eval_z_hyper};

pub use arithgroup::GroupLabel;
pub use rug::Float;

use num_rational::{BigRational, Rational64};

const LOG2_10: f64 = 3.321928094887362;

/// Requested accuracy plus the head-room used to reach it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecisionContext {
    digits: u32,
    guard: u32,
    recheck_delta: u32,
}

impl PrecisionContext {
    /// Context for `digits` decimal digits with default guard and recheck.
    pub fn new(digits: u32) -> Result<Self, NumericError> {
        Self::with_parts(digits, 10, 16)
    }

    /// Fully specified context. Guard must be at least 10 digits and the
    /// recheck offset at least 16.
    pub fn with_parts(digits: u32, guard: u32, recheck_delta: u32) -> Result<Self, NumericError> {
        if digits == 0 {
            return Err(NumericError::InvalidParameter("digits must be >= 1".into()));
        }
        if guard < 10 {
            return Err(NumericError::InvalidParameter(format!(
                "guard digits must be >= 10, got {guard}"
            )));
        }
        if recheck_delta < 16 {
            return Err(NumericError::InvalidParameter(format!(
                "recheck_delta must be >= 16, got {recheck_delta}"
            )));
        }
        Ok(PrecisionContext { digits, guard, recheck_delta })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    pub fn recheck_delta(&self) -> u32 {
        self.recheck_delta
    }

    /// Digits actually carried through intermediate arithmetic.
    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard
    }

    /// MPFR precision in bits for the working digit count.
    pub fn prec_bits(&self) -> u32 {
        ((self.working_digits() as f64) * LOG2_10).ceil() as u32 + 32
    }

    /// Same accuracy target with `extra` more working digits.
    pub fn raised(&self, extra: u32) -> Self {
        PrecisionContext {
            digits: self.digits + extra,
            guard: self.guard,
            recheck_delta: self.recheck_delta,
        }
    }

    pub fn new_float(&self) -> Float {
        Float::new(self.prec_bits())
    }

    pub fn float_from_f64(&self, v: f64) -> Float {
        Float::with_val(self.prec_bits(), v)
    }

    pub fn float_from_i64(&self, v: i64) -> Float {
        Float::with_val(self.prec_bits(), v)
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.prec_bits(), rug::float::Constant::Pi)
    }

    /// 10^-(working_digits): the internal convergence epsilon.
    pub fn eps(&self) -> Float {
        let mut e = Float::with_val(self.prec_bits(), 10);
        e.pow_assign(-(self.working_digits() as i32));
        e
    }

    /// 10^-digits: the externally promised accuracy.
    pub fn tolerance(&self) -> Float {
        let mut e = Float::with_val(self.prec_bits(), 10);
        e.pow_assign(-(self.digits as i32));
        e
    }

    /// Parses a decimal literal at working precision.
    pub fn float_from_str(&self, s: &str) -> Result<Float, NumericError> {
        Float::parse(s)
            .map(|v| Float::with_val(self.prec_bits(), v))
            .map_err(|e| NumericError::InvalidParameter(format!("bad float literal {s:?}: {e}")))
    }

    /// Exact conversion of a small rational.
    pub fn float_from_r64(&self, r: Rational64) -> Float {
        let mut f = Float::with_val(self.prec_bits(), *r.numer());
        f /= Float::with_val(self.prec_bits(), *r.denom());
        f
    }

    /// Exact conversion of a big rational via rug's rational type.
    pub fn float_from_big(&self, r: &BigRational) -> Result<Float, NumericError> {
        let s = r.to_string();
        let parsed = rug::Rational::parse(&s).map_err(|e| {
            NumericError::InvalidParameter(format!("rational conversion failed: {e}"))
        })?;
        Ok(Float::with_val(self.prec_bits(), rug::Rational::from(parsed)))
    }

    pub fn complex(&self, re: f64, im: f64) -> APComplex {
        APComplex::with_f64(self.prec_bits(), re, im)
    }

    pub fn complex_zero(&self) -> APComplex {
        APComplex::zero(self.prec_bits())
    }

    pub fn complex_one(&self) -> APComplex {
        APComplex::from_real(self.float_from_i64(1))
    }

    pub fn complex_i(&self) -> APComplex {
        APComplex::new(self.new_float(), self.float_from_i64(1))
    }
}

use rug::ops::PowAssign;
