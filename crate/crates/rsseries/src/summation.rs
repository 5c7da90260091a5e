//! Arbitrary-precision summation of a cataloged series and certification of
//! its closed-form target.

use rug::Float;
use specfun::{APComplex, PrecisionContext};

use crate::catalog::SeriesSpec;
use crate::constants::derive_constants;
use crate::error::RsError;
use crate::families::CoefficientRecipe;

/// Iteration cap: every cataloged series needs a few hundred terms at the
/// precisions in play, so hitting this means the stop rule cannot trigger.
const TERM_CAP: usize = 100_000;

pub(crate) struct LinearSum {
    pub value: APComplex,
    pub terms: usize,
}

/// Sums `sum_j (b j + a) A_j x0^j` until both the current term and the
/// geometric tail majorant fall below `threshold`.
///
/// The tail bound after accepting term `j >= 1` is
/// `|x0|/(1-|x0|) * |term_j| * (1 + b/(b j))`: term magnitudes shrink at
/// least geometrically once the linear factor's relative growth `1 + 1/j`
/// is absorbed into the majorant.
pub(crate) fn sum_linear_series(
    ctx: &PrecisionContext,
    recipe: &CoefficientRecipe,
    a: &APComplex,
    b: &APComplex,
    x0: &APComplex,
    threshold: &Float,
    what: &str,
) -> Result<LinearSum, RsError> {
    let x_abs = x0.abs();
    if !(x_abs.clone() < 1) {
        return Err(RsError::InvalidRequest(format!(
            "{what}: |x0| must be < 1 for the geometric tail bound"
        )));
    }
    let one = ctx.float_from_i64(1);
    let geo = x_abs.clone() / (one - x_abs);
    let mut sum = ctx.complex_zero();
    let mut xpow = ctx.complex_one();
    for (j, aj) in recipe.stream().enumerate() {
        if j > 0 {
            xpow = xpow.mul(x0);
        }
        let ajf = ctx.float_from_big(&aj)?;
        let term = b.scale_i64(j as i64).add(a).mul(&xpow).scale(&ajf);
        sum = sum.add(&term);
        if j >= 1 {
            let tmag = term.abs();
            if tmag < *threshold {
                let growth = ctx.float_from_i64((j + 1) as i64) / ctx.float_from_i64(j as i64);
                let tail = geo.clone() * tmag * growth;
                if tail < *threshold {
                    return Ok(LinearSum {
                        value: sum,
                        terms: j + 1,
                    });
                }
            }
        }
        if j + 1 >= TERM_CAP {
            return Err(RsError::NonConvergent {
                what: what.to_string(),
                terms: TERM_CAP,
            });
        }
    }
    unreachable!("coefficient stream is endless")
}

/// Sums the cataloged series `prefactor * sum_j (b j + a) A_j x0^j` with all
/// constants taken from the catalog's closed forms, stopping once the tail
/// is provably below `10^-(digits+guard)`.
pub fn sum_series(spec: &SeriesSpec, ctx: &PrecisionContext) -> Result<APComplex, RsError> {
    Ok(sum_series_detail(spec, ctx)?.0)
}

/// As [`sum_series`], also reporting how many terms were consumed.
pub fn sum_series_detail(
    spec: &SeriesSpec,
    ctx: &PrecisionContext,
) -> Result<(APComplex, usize), RsError> {
    let a = spec.a_value(ctx)?;
    let b = spec.b_value(ctx)?;
    let x0 = spec.x0_value(ctx)?;
    let threshold = ctx.eps();
    let partial = sum_linear_series(ctx, &spec.recipe(), &a, &b, &x0, &threshold, spec.id())?;
    let prefactor = spec.prefactor_value(ctx)?;
    Ok((partial.value.mul(&prefactor), partial.terms))
}

/// Certification record for one series at one precision request.
#[derive(Debug, Clone)]
pub struct CertReport {
    pub id: String,
    pub digits_requested: u32,
    /// Decimal digits to which the summed value matches the closed form,
    /// measured as `floor(-log10 |sum - target|)` and capped at the working
    /// precision.
    pub digits_matched: u32,
    pub terms_used: usize,
    /// Absolute difference `|sum - target|`.
    pub residual: Float,
    /// True exactly when `digits_matched >= digits_requested`.
    pub pass: bool,
    /// Largest distance between the independently derived constants
    /// `(a, b, x0)` and the catalog's closed forms.
    pub derivation_residual: Float,
}

impl CertReport {
    /// The report as stable `key=value` lines, one field per line.
    pub fn report_lines(&self) -> Vec<String> {
        vec![
            format!("id={}", self.id),
            format!("digits_requested={}", self.digits_requested),
            format!("digits_matched={}", self.digits_matched),
            format!("terms_used={}", self.terms_used),
            format!("residual={:.3e}", self.residual),
            format!("pass={}", self.pass),
            format!("derivation_residual={:.3e}", self.derivation_residual),
        ]
    }
}

fn matched_digits(ctx: &PrecisionContext, residual: &Float) -> u32 {
    let cap = ctx.working_digits();
    if residual.is_zero() {
        return cap;
    }
    let lg = -residual.clone().log10();
    if lg < 0 {
        return 0;
    }
    let floor = lg.floor().to_f64();
    (floor as u32).min(cap)
}

/// Sums the series and checks it against its closed-form target to the
/// requested number of digits; also re-derives `(a, b, x0)` from the group
/// data and reports how far the catalog's closed forms sit from the derived
/// values.
///
/// The context must carry at least `digits + 20` digits so the verdict is
/// not limited by the evaluation itself.
pub fn certify(
    spec: &SeriesSpec,
    digits: u32,
    ctx: &PrecisionContext,
) -> Result<CertReport, RsError> {
    if ctx.digits() < digits + 20 {
        return Err(RsError::PrecisionTooLow {
            needed: digits + 20,
            got: ctx.digits(),
        });
    }
    let (sum, terms_used) = sum_series_detail(spec, ctx)?;
    let target = spec.target_value(ctx)?;
    let residual = sum.dist(&target);
    let digits_matched = matched_digits(ctx, &residual);

    let derived = derive_constants(spec, ctx)?;
    let mut derivation_residual = derived.a.dist(&spec.a_value(ctx)?);
    let b_dist = derived.b.dist(&spec.b_value(ctx)?);
    if b_dist > derivation_residual {
        derivation_residual = b_dist;
    }
    let x_dist = derived.x0.dist(&spec.x0_value(ctx)?);
    if x_dist > derivation_residual {
        derivation_residual = x_dist;
    }

    Ok(CertReport {
        id: spec.id().to_string(),
        digits_requested: digits,
        digits_matched,
        terms_used,
        residual,
        pass: digits_matched >= digits,
        derivation_residual,
    })
}
