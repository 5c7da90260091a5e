//! The weight-k forms Z attached to each group, their hypergeometric
//! evaluation route, and the U-functions entering the derivative relation
//! (1/2 pi i) dX/dtau = U X Z.

use crate::modular::{eval_e2n, eval_eisenstein, eval_eta, eval_hauptmodul, eval_theta};
use crate::{eval_2f1, APComplex, NumericError, PrecisionContext};
use arithgroup::GroupLabel;
use num_rational::Rational64;

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// Z in Eisenstein/theta closed form: the weight-2 forms -E_{2,N} for the
/// Hecke groups (N = 2, 3), theta3(2 tau)^4 for level 4, and the weight-4
/// squares E4, E_{2,2}^2, E_{2,3}^2/4 for the index-1 and plus groups.
pub fn eval_z(
    ctx: &PrecisionContext,
    group: GroupLabel,
    tau: &APComplex,
) -> Result<APComplex, NumericError> {
    match group {
        GroupLabel::G02 => Ok(eval_e2n(ctx, 2, tau)?.neg()),
        GroupLabel::G03 => {
            let half = ctx.float_from_r64(r(-1, 2));
            Ok(eval_e2n(ctx, 3, tau)?.scale(&half))
        }
        GroupLabel::G04 => Ok(eval_theta(ctx, 3, &tau.scale_i64(2))?.powi(4)),
        GroupLabel::Psl2z => eval_eisenstein(ctx, 4, tau),
        GroupLabel::G02Plus => Ok(eval_e2n(ctx, 2, tau)?.powi(2)),
        GroupLabel::G03Plus => {
            let quarter = ctx.float_from_r64(r(1, 4));
            Ok(eval_e2n(ctx, 3, tau)?.powi(2).scale(&quarter))
        }
    }
}

/// Z reconstructed from the hauptmodul through the group's hypergeometric
/// parameters. Only valid where |X(tau)| < 1; used as an independent route
/// for cross-checks.
pub fn eval_z_hyper(
    ctx: &PrecisionContext,
    group: GroupLabel,
    tau: &APComplex,
) -> Result<APComplex, NumericError> {
    let x = eval_hauptmodul(ctx, group, tau)?;
    if x.abs().to_f64() >= 1.0 {
        return Err(NumericError::DomainError(
            "hypergeometric route for Z needs |X(tau)| < 1".into(),
        ));
    }
    let one = ctx.complex_one();
    match group {
        // (1 - t)^(1/2) 2F1(1/4, 1/4; 1; t)^2
        GroupLabel::G02 => {
            let f = eval_2f1(ctx, r(1, 4), r(1, 4), r(1, 1), &x)?;
            let pref = one.sub(&x).pow_real(&ctx.float_from_r64(r(1, 2)));
            Ok(pref.mul(&f.powi(2)))
        }
        // (1 - t)^(2/3) 2F1(1/3, 1/3; 1; t)^2
        GroupLabel::G03 => {
            let f = eval_2f1(ctx, r(1, 3), r(1, 3), r(1, 1), &x)?;
            let pref = one.sub(&x).pow_real(&ctx.float_from_r64(r(2, 3)));
            Ok(pref.mul(&f.powi(2)))
        }
        // 2F1(1/2, 1/2; 1; t)^2
        GroupLabel::G04 => Ok(eval_2f1(ctx, r(1, 2), r(1, 2), r(1, 1), &x)?.powi(2)),
        // 2F1(1/12, 5/12; 1; t)^4
        GroupLabel::Psl2z => Ok(eval_2f1(ctx, r(1, 12), r(5, 12), r(1, 1), &x)?.powi(4)),
        // 2F1(1/8, 3/8; 1; t)^4
        GroupLabel::G02Plus => Ok(eval_2f1(ctx, r(1, 8), r(3, 8), r(1, 1), &x)?.powi(4)),
        // 2F1(1/6, 1/3; 1; t)^4
        GroupLabel::G03Plus => Ok(eval_2f1(ctx, r(1, 6), r(1, 3), r(1, 1), &x)?.powi(4)),
    }
}

/// The U-function of the group: the logarithmic-derivative multiplier in
/// (1/2 pi i) dX/dtau = U X Z.
pub fn eval_u(
    ctx: &PrecisionContext,
    group: GroupLabel,
    tau: &APComplex,
) -> Result<APComplex, NumericError> {
    match group {
        GroupLabel::G02 | GroupLabel::G03 => Ok(ctx.complex_one()),
        GroupLabel::G04 => {
            let x = eval_hauptmodul(ctx, GroupLabel::G04, tau)?;
            Ok(ctx.complex_one().sub(&x))
        }
        // U3 = E6 / E4^2.
        GroupLabel::Psl2z => {
            let e4 = eval_eisenstein(ctx, 4, tau)?;
            let e6 = eval_eisenstein(ctx, 6, tau)?;
            Ok(e6.div(&e4.powi(2)))
        }
        // U4 = -(Delta - 64 Delta(2 tau)) / ((Delta + 64 Delta(2 tau)) E_{2,2}).
        GroupLabel::G02Plus => {
            let d1 = eval_eta(ctx, tau)?.powi(24);
            let d2 = eval_eta(ctx, &tau.scale_i64(2))?.powi(24);
            let num = d1.sub(&d2.scale_i64(64)).neg();
            let den = d1.add(&d2.scale_i64(64)).mul(&eval_e2n(ctx, 2, tau)?);
            Ok(num.div(&den))
        }
        // U6 = -2 (f - 27 g) / ((f + 27 g) E_{2,3}), f = eta^12, g = eta(3 tau)^12.
        GroupLabel::G03Plus => {
            let f = eval_eta(ctx, tau)?.powi(12);
            let g = eval_eta(ctx, &tau.scale_i64(3))?.powi(12);
            let num = f.sub(&g.scale_i64(27)).scale_i64(-2);
            let den = f.add(&g.scale_i64(27)).mul(&eval_e2n(ctx, 3, tau)?);
            Ok(num.div(&den))
        }
    }
}
