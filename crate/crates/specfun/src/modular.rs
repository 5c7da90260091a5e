//! Eta, theta constants, Eisenstein series and hauptmoduln on the upper
//! half-plane, by recursive reduction into Im tau >= 3/4 followed by sparse
//! q-expansion.

use crate::{APComplex, NumericError, PrecisionContext};
use arithgroup::GroupLabel;
use rug::Float;

const MAX_REDUCTION_DEPTH: u32 = 256;
/// Reduction stops once Im tau clears this; |q| <= exp(-2 pi 0.75) < 0.9%.
const IM_FLOOR: f64 = 0.75;

fn check_upper_half(tau: &APComplex) -> Result<(), NumericError> {
    if !tau.is_finite() || !tau.im.is_sign_positive() || tau.im.is_zero() {
        return Err(NumericError::DomainError(format!(
            "tau must lie in the upper half-plane, got {tau}"
        )));
    }
    Ok(())
}

/// Integer fold taking Re tau into [-1/2, 1/2). floor(x + 1/2) rather than
/// round-half-away, so Re = -1/2 is a fixed point instead of a 2-cycle.
fn re_shift(tau: &APComplex) -> Result<i64, NumericError> {
    let r = tau.re.to_f64();
    if !r.is_finite() || r.abs() > 1e12 {
        return Err(NumericError::DomainError("Re tau out of supported range".into()));
    }
    Ok((r + 0.5).floor() as i64)
}

/// Number of q-powers needed so the tail is below the working epsilon.
fn q_terms_needed(ctx: &PrecisionContext, q_abs: &Float) -> i64 {
    let ln_q = q_abs.to_f64().ln();
    debug_assert!(ln_q < 0.0);
    let need = (ctx.working_digits() as f64) * std::f64::consts::LN_10 / -ln_q;
    need.ceil() as i64 + 2
}

/// exp(2 pi i tau).
fn nome(ctx: &PrecisionContext, tau: &APComplex) -> APComplex {
    let two_pi = Float::with_val(ctx.prec_bits(), 2 * &ctx.pi());
    tau.mul_i().scale(&two_pi).exp()
}

/// sqrt(-i tau), the normalizing factor of the order-2 flip.
fn sqrt_minus_i_tau(tau: &APComplex) -> APComplex {
    tau.mul_i().neg().sqrt()
}

fn eta_series(ctx: &PrecisionContext, tau: &APComplex) -> APComplex {
    let p = ctx.prec_bits();
    let pi = ctx.pi();
    // w = exp(i pi tau / 12) = q^(1/24); q = w^24.
    let twelfth = Float::with_val(p, &pi / 12u32);
    let w = tau.mul_i().scale(&twelfth).exp();
    let q = w.powi(24);
    let horizon = q_terms_needed(ctx, &q.abs());
    let mut sum = ctx.complex_one();
    let mut k: i64 = 1;
    loop {
        let g1 = k * (3 * k - 1) / 2;
        if g1 > horizon {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let mut term = q.powi(g1);
        let g2 = k * (3 * k + 1) / 2;
        if g2 <= horizon {
            term = term.add(&q.powi(g2));
        }
        sum = if sign > 0 { sum.add(&term) } else { sum.sub(&term) };
        k += 1;
    }
    w.mul(&sum)
}

fn eta_rec(ctx: &PrecisionContext, tau: &APComplex, depth: u32) -> Result<APComplex, NumericError> {
    if depth > MAX_REDUCTION_DEPTH {
        return Err(NumericError::ReductionDiverged);
    }
    let n = re_shift(tau)?;
    if n != 0 {
        // eta(tau) = exp(i pi n / 12) eta(tau - n).
        let shifted = tau.sub(&ctx.complex(n as f64, 0.0));
        let p = ctx.prec_bits();
        let phase_arg = Float::with_val(p, &ctx.pi() * n) / Float::with_val(p, 12);
        let phase = APComplex::new(ctx.new_float(), phase_arg).exp();
        return Ok(phase.mul(&eta_rec(ctx, &shifted, depth + 1)?));
    }
    if tau.im.to_f64() < IM_FLOOR {
        // eta(tau) = eta(-1/tau) / sqrt(-i tau).
        let flipped = tau.recip().neg();
        return Ok(eta_rec(ctx, &flipped, depth + 1)?.div(&sqrt_minus_i_tau(tau)));
    }
    Ok(eta_series(ctx, tau))
}

/// Dedekind eta.
pub fn eval_eta(ctx: &PrecisionContext, tau: &APComplex) -> Result<APComplex, NumericError> {
    check_upper_half(tau)?;
    eta_rec(ctx, tau, 0)
}

fn theta_series(ctx: &PrecisionContext, kind: u8, tau: &APComplex) -> APComplex {
    let p = ctx.prec_bits();
    // w = exp(i pi tau) = q^(1/2).
    let w = tau.mul_i().scale(&ctx.pi()).exp();
    // Exponents are n^2 (kinds 3, 4) or n(n+1) + 1/4 (kind 2) in w-powers;
    // the horizon is in w-powers as well.
    let horizon = q_terms_needed(ctx, &w.abs());
    match kind {
        3 | 4 => {
            let mut sum = ctx.complex_one();
            let mut n: i64 = 1;
            while n * n <= horizon {
                let mut t = w.powi(n * n).scale_i64(2);
                if kind == 4 && n % 2 == 1 {
                    t = t.neg();
                }
                sum = sum.add(&t);
                n += 1;
            }
            sum
        }
        2 => {
            let quarter = Float::with_val(p, &ctx.pi() / 4u32);
            let w4 = tau.mul_i().scale(&quarter).exp();
            let mut sum = ctx.complex_zero();
            let mut n: i64 = 0;
            while n * (n + 1) <= horizon {
                sum = sum.add(&w.powi(n * (n + 1)));
                n += 1;
            }
            w4.mul(&sum).scale_i64(2)
        }
        _ => unreachable!("kind validated by caller"),
    }
}

fn theta_rec(
    ctx: &PrecisionContext,
    kind: u8,
    tau: &APComplex,
    depth: u32,
) -> Result<APComplex, NumericError> {
    if depth > MAX_REDUCTION_DEPTH {
        return Err(NumericError::ReductionDiverged);
    }
    let n = re_shift(tau)?;
    if n != 0 {
        let shifted = tau.sub(&ctx.complex(n as f64, 0.0));
        let p = ctx.prec_bits();
        return match kind {
            // theta2(tau) = exp(i pi n / 4) theta2(tau - n).
            2 => {
                let phase_arg = Float::with_val(p, &ctx.pi() * n) / Float::with_val(p, 4);
                let phase = APComplex::new(ctx.new_float(), phase_arg).exp();
                Ok(phase.mul(&theta_rec(ctx, 2, &shifted, depth + 1)?))
            }
            // theta3 and theta4 swap under odd shifts.
            3 | 4 => {
                let k = if n % 2 == 0 { kind } else { 7 - kind };
                theta_rec(ctx, k, &shifted, depth + 1)
            }
            _ => unreachable!(),
        };
    }
    if tau.im.to_f64() < IM_FLOOR {
        let flipped = tau.recip().neg();
        let f = sqrt_minus_i_tau(tau);
        // theta2(-1/t) = sqrt(-it) theta4(t) and symmetrically, so
        // theta_k(tau) = theta_sigma(k)(-1/tau) / sqrt(-i tau).
        let k = match kind {
            2 => 4,
            3 => 3,
            4 => 2,
            _ => unreachable!(),
        };
        return Ok(theta_rec(ctx, k, &flipped, depth + 1)?.div(&f));
    }
    Ok(theta_series(ctx, kind, tau))
}

/// Jacobi theta constant of kind 2, 3 or 4.
pub fn eval_theta(
    ctx: &PrecisionContext,
    kind: u8,
    tau: &APComplex,
) -> Result<APComplex, NumericError> {
    if !(2..=4).contains(&kind) {
        return Err(NumericError::InvalidParameter(format!(
            "theta kind must be 2, 3 or 4, got {kind}"
        )));
    }
    check_upper_half(tau)?;
    theta_rec(ctx, kind, tau, 0)
}

fn sigma_pow(n: i64, pow: u32) -> i64 {
    let mut acc: i64 = 0;
    let mut d: i64 = 1;
    while d * d <= n {
        if n % d == 0 {
            acc += d.pow(pow);
            let e = n / d;
            if e != d {
                acc += e.pow(pow);
            }
        }
        d += 1;
    }
    acc
}

fn eisenstein_series(ctx: &PrecisionContext, k: u32, tau: &APComplex) -> APComplex {
    let mult: i64 = match k {
        2 => -24,
        4 => 240,
        6 => -504,
        _ => unreachable!("weight validated by caller"),
    };
    let q = nome(ctx, tau);
    let horizon = q_terms_needed(ctx, &q.abs());
    let mut acc = ctx.complex_one();
    let mut qn = ctx.complex_one();
    for n in 1..=horizon {
        qn = qn.mul(&q);
        acc = acc.add(&qn.scale_i64(mult * sigma_pow(n, k - 1)));
    }
    acc
}

fn eisenstein_rec(
    ctx: &PrecisionContext,
    k: u32,
    tau: &APComplex,
    depth: u32,
) -> Result<APComplex, NumericError> {
    if depth > MAX_REDUCTION_DEPTH {
        return Err(NumericError::ReductionDiverged);
    }
    let n = re_shift(tau)?;
    if n != 0 {
        let shifted = tau.sub(&ctx.complex(n as f64, 0.0));
        return eisenstein_rec(ctx, k, &shifted, depth + 1);
    }
    if tau.im.to_f64() < IM_FLOOR {
        let flipped = tau.recip().neg();
        let inner = eisenstein_rec(ctx, k, &flipped, depth + 1)?;
        return Ok(match k {
            // E2(-1/t) = t^2 E2(t) - (6i/pi) t, inverted for t = tau.
            2 => {
                let p = ctx.prec_bits();
                let six_over_pi = Float::with_val(p, 6) / ctx.pi();
                let anomaly = tau.mul_i().scale(&six_over_pi);
                inner.add(&anomaly).div(&tau.powi(2))
            }
            4 => inner.div(&tau.powi(4)),
            6 => inner.div(&tau.powi(6)),
            _ => unreachable!(),
        });
    }
    Ok(eisenstein_series(ctx, k, tau))
}

/// Normalized Eisenstein series E2, E4 or E6 (constant term 1).
pub fn eval_eisenstein(
    ctx: &PrecisionContext,
    k: u32,
    tau: &APComplex,
) -> Result<APComplex, NumericError> {
    if !matches!(k, 2 | 4 | 6) {
        return Err(NumericError::InvalidParameter(format!(
            "Eisenstein weight must be 2, 4 or 6, got {k}"
        )));
    }
    check_upper_half(tau)?;
    eisenstein_rec(ctx, k, tau, 0)
}

/// The weight-2 combination E2(tau) - N E2(N tau).
pub fn eval_e2n(
    ctx: &PrecisionContext,
    n: u32,
    tau: &APComplex,
) -> Result<APComplex, NumericError> {
    if n == 0 {
        return Err(NumericError::InvalidParameter("e2n level must be >= 1".into()));
    }
    let a = eval_eisenstein(ctx, 2, tau)?;
    let b = eval_eisenstein(ctx, 2, &tau.scale_i64(n as i64))?;
    Ok(a.sub(&b.scale_i64(n as i64)))
}

/// Klein j-invariant 1728 E4^3 / (E4^3 - E6^2).
pub fn eval_j(ctx: &PrecisionContext, tau: &APComplex) -> Result<APComplex, NumericError> {
    let e4 = eval_eisenstein(ctx, 4, tau)?;
    let e6 = eval_eisenstein(ctx, 6, tau)?;
    let num = e4.powi(3);
    let den = num.sub(&e6.powi(2));
    Ok(num.div(&den).scale_i64(1728))
}

/// Elliptic lambda theta2(tau)^4 / theta3(tau)^4.
pub fn eval_lambda(ctx: &PrecisionContext, tau: &APComplex) -> Result<APComplex, NumericError> {
    let t2 = eval_theta(ctx, 2, tau)?;
    let t3 = eval_theta(ctx, 3, tau)?;
    Ok(t2.div(&t3).powi(4))
}

/// Applies an integer Moebius matrix [a, b; c, d] projectively.
pub fn apply_mobius(m: [i64; 4], tau: &APComplex) -> APComplex {
    let [a, b, c, d] = m;
    let p = tau.prec();
    let af = APComplex::from_real(Float::with_val(p, a));
    let bf = APComplex::from_real(Float::with_val(p, b));
    let cf = APComplex::from_real(Float::with_val(p, c));
    let df = APComplex::from_real(Float::with_val(p, d));
    let num = af.mul(tau).add(&bf);
    let den = cf.mul(tau).add(&df);
    num.div(&den)
}

/// Normalized hauptmodul of the given group (the eta/j closed forms).
pub fn eval_hauptmodul(
    ctx: &PrecisionContext,
    group: GroupLabel,
    tau: &APComplex,
) -> Result<APComplex, NumericError> {
    check_upper_half(tau)?;
    match group {
        GroupLabel::G02 => {
            let r = eval_eta(ctx, &tau.scale_i64(2))?.div(&eval_eta(ctx, tau)?);
            Ok(r.powi(24).scale_i64(-64))
        }
        GroupLabel::G03 => {
            let r = eval_eta(ctx, &tau.scale_i64(3))?.div(&eval_eta(ctx, tau)?);
            Ok(r.powi(12).scale_i64(-27))
        }
        GroupLabel::G04 => {
            let e1 = eval_eta(ctx, tau)?;
            let e2 = eval_eta(ctx, &tau.scale_i64(2))?;
            let e4 = eval_eta(ctx, &tau.scale_i64(4))?;
            let num = e1.powi(8).mul(&e4.powi(16)).scale_i64(16);
            Ok(num.div(&e2.powi(24)))
        }
        GroupLabel::Psl2z => {
            let j = eval_j(ctx, tau)?;
            Ok(j.recip().scale_i64(1728))
        }
        GroupLabel::G02Plus => {
            let d1 = eval_eta(ctx, tau)?.powi(24);
            let d2 = eval_eta(ctx, &tau.scale_i64(2))?.powi(24);
            let num = d1.mul(&d2).scale_i64(256);
            let den = d1.add(&d2.scale_i64(64));
            Ok(num.div(&den.powi(2)))
        }
        GroupLabel::G03Plus => {
            let f = eval_eta(ctx, tau)?.powi(12);
            let g = eval_eta(ctx, &tau.scale_i64(3))?.powi(12);
            let num = f.mul(&g).scale_i64(108);
            let den = f.add(&g.scale_i64(27));
            Ok(num.div(&den.powi(2)))
        }
    }
}
