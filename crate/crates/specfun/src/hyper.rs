//! Gauss and Clausen-type hypergeometric sums with exact rational
//! parameters, plus the gamma function with double-evaluation tripwire.

use crate::{APComplex, NumericError, PrecisionContext};
use num_rational::Rational64;
use rug::Float;

const MAX_HYPER_TERMS: u64 = 2_000_000;

fn r64_to_float(prec: u32, r: Rational64) -> Float {
    let mut f = Float::with_val(prec, *r.numer());
    f /= Float::with_val(prec, *r.denom());
    f
}

/// Shared series driver: term_{n+1} = term_n * prod(num_i + n)/prod(den_j + n) * x,
/// with the implicit (1 + n) Pochhammer of the factorial included by callers.
fn hyper_sum(
    ctx: &PrecisionContext,
    nums: &[Rational64],
    dens: &[Rational64],
    x: &APComplex,
) -> Result<APComplex, NumericError> {
    let xa = x.abs().to_f64();
    if !xa.is_finite() || xa >= 1.0 {
        return Err(NumericError::DomainError(format!(
            "hypergeometric argument must satisfy |x| < 1, got |x| = {xa}"
        )));
    }
    let p = ctx.prec_bits();
    let eps = ctx.eps();
    let nums_f: Vec<Float> = nums.iter().map(|r| r64_to_float(p, *r)).collect();
    let dens_f: Vec<Float> = dens.iter().map(|r| r64_to_float(p, *r)).collect();
    let mut sum = ctx.complex_one();
    let mut term = ctx.complex_one();
    let mut n: u64 = 0;
    loop {
        let mut ratio = ctx.complex_one();
        for a in &nums_f {
            let f = Float::with_val(p, a + n);
            ratio = ratio.scale(&f);
        }
        for b in &dens_f {
            let f = Float::with_val(p, b + n);
            ratio = APComplex::new(
                Float::with_val(p, &ratio.re / &f),
                Float::with_val(p, &ratio.im / &f),
            );
        }
        term = term.mul(&ratio).mul(x);
        sum = sum.add(&term);
        n += 1;
        // Coefficient ratios tend to 1, so once |term| clears eps*|sum| the
        // tail is a geometric series in |x| and two consecutive small terms
        // are a safe stop.
        let small = Float::with_val(p, &term.abs() / &sum.abs());
        if small < eps {
            let mut ratio2 = ctx.complex_one();
            for a in &nums_f {
                let f = Float::with_val(p, a + n);
                ratio2 = ratio2.scale(&f);
            }
            for b in &dens_f {
                let f = Float::with_val(p, b + n);
                ratio2 = APComplex::new(
                    Float::with_val(p, &ratio2.re / &f),
                    Float::with_val(p, &ratio2.im / &f),
                );
            }
            let next = term.mul(&ratio2).mul(x);
            let small2 = Float::with_val(p, &next.abs() / &sum.abs());
            if small2 < eps {
                return Ok(sum);
            }
        }
        if n > MAX_HYPER_TERMS {
            return Err(NumericError::PrecisionLoss(format!(
                "hypergeometric series did not converge within {MAX_HYPER_TERMS} terms at |x| = {xa}"
            )));
        }
    }
}

/// Gauss 2F1(a, b; c; x) for |x| < 1.
pub fn eval_2f1(
    ctx: &PrecisionContext,
    a: Rational64,
    b: Rational64,
    c: Rational64,
    x: &APComplex,
) -> Result<APComplex, NumericError> {
    // The factorial joins the denominator parameters as the Pochhammer of 1.
    hyper_sum(ctx, &[a, b], &[c, Rational64::from_integer(1)], x)
}

/// Clausen-type 3F2(a1, a2, a3; b1, b2; x) for |x| < 1.
#[allow(clippy::too_many_arguments)]
pub fn eval_3f2(
    ctx: &PrecisionContext,
    a1: Rational64,
    a2: Rational64,
    a3: Rational64,
    b1: Rational64,
    b2: Rational64,
    x: &APComplex,
) -> Result<APComplex, NumericError> {
    hyper_sum(ctx, &[a1, a2, a3], &[b1, b2, Rational64::from_integer(1)], x)
}

/// Gamma at a real point, evaluated twice (working precision and
/// recheck_delta digits higher); disagreement raises PrecisionLoss.
pub fn eval_gamma(ctx: &PrecisionContext, x: &Float) -> Result<Float, NumericError> {
    if x.is_zero() || (x.is_sign_negative() && x.is_integer()) {
        return Err(NumericError::DomainError(format!("gamma pole at {x}")));
    }
    if !x.is_finite() {
        return Err(NumericError::DomainError("gamma argument must be finite".into()));
    }
    let g1 = Float::with_val(ctx.prec_bits(), x).gamma();
    let hi = ctx.raised(ctx.recheck_delta());
    let g2 = Float::with_val(hi.prec_bits(), x).gamma();
    let diff = Float::with_val(hi.prec_bits(), &g2 - &g1).abs();
    let mut allowed = g1.clone().abs();
    allowed *= ctx.eps();
    allowed *= 16u32;
    if diff > allowed {
        return Err(NumericError::PrecisionLoss(format!(
            "gamma({x}) re-evaluation moved by {diff}"
        )));
    }
    Ok(g1)
}

/// Gamma at an exact rational argument.
pub fn gamma_rational(ctx: &PrecisionContext, r: Rational64) -> Result<Float, NumericError> {
    eval_gamma(ctx, &ctx.float_from_r64(r))
}
