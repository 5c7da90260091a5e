//! Independent derivation of the series constants from group data.
//!
//! The linear form `(b j + a)` and the expansion point `x0` of a cataloged
//! series are not free parameters: they are pinned by the group, the degree
//! `N`, and the quadratic point `tau0`.  This module re-derives them from
//! scratch:
//!
//! * `x0 = X(gamma tau0)` — the hauptmodul at the isogenous point;
//! * `b_raw = 2 N U(gamma tau0)`;
//! * `a_raw = b_raw (e0 + e1 x0/(x0-1)) + U(tau0) X(tau0) dM/dX|_{X(tau0)}`,
//!   with `dM/dX` read implicitly off the modular polynomial;
//! * the raw sum identity
//!   `x0^{e0}(1-x0)^{e1} sum_j (b_raw j + a_raw) A_j x0^j = k/(2 pi Im tau0)`
//!   whose residual is reported;
//! * the display normalization `sigma` converting raw to catalog constants,
//!   computed here at runtime and never stored:
//!   `sigma = target x0^{e0}(1-x0)^{e1} / (prefactor * k/(2 pi Im tau0))`.

use rug::Float;
use specfun::{eval_hauptmodul, eval_u, APComplex, PrecisionContext};

use modpoly::multiplier_at;
use num_traits::Zero;

use crate::catalog::SeriesSpec;
use crate::error::RsError;
use crate::summation::sum_linear_series;

/// Everything [`derive_constants`] produces.
#[derive(Debug, Clone)]
pub struct DerivedConstants {
    /// Hauptmodul value at `gamma tau0`; should match the catalog's `x0`.
    pub x0: APComplex,
    /// Display-normalized constant term; should match the catalog's `a`.
    pub a: APComplex,
    /// Display-normalized slope; should match the catalog's `b`.
    pub b: APComplex,
    /// Raw constant term, before display normalization.
    pub a_raw: APComplex,
    /// Raw slope `2 N U(gamma tau0)`.
    pub b_raw: APComplex,
    /// Display normalization factor `a/a_raw = b/b_raw`.
    pub sigma: APComplex,
    /// Residual of the raw sum identity against `k/(2 pi Im tau0)`.
    pub raw_residual: Float,
    /// Terms consumed by the raw sum.
    pub terms_used: usize,
}

/// Derives `(a, b, x0)` for a cataloged series from the group data alone,
/// and evaluates the raw sum identity as a self-check.
pub fn derive_constants(
    spec: &SeriesSpec,
    ctx: &PrecisionContext,
) -> Result<DerivedConstants, RsError> {
    let group = spec.group();
    let level = spec.level();
    let tau0 = spec.tau0_value(ctx)?;
    let gtau0 = spec.gamma_tau0_value(ctx)?;

    let x0 = eval_hauptmodul(ctx, group, &gtau0)?;
    let x_tau0 = eval_hauptmodul(ctx, group, &tau0)?;
    let u_tau0 = eval_u(ctx, group, &tau0)?;
    let u_g = eval_u(ctx, group, &gtau0)?;
    let mult = multiplier_at(ctx, group, level, &tau0)?;

    let b_raw = u_g.scale_i64(2 * i64::from(level));

    // a_raw = b_raw * (e0 + e1 * x0/(x0 - 1)) + U(tau0) X(tau0) dM/dX.
    let e0 = ctx.float_from_r64(spec.e0());
    let e1 = ctx.float_from_r64(spec.e1());
    let correction = x0
        .div(&x0.sub(&ctx.complex_one()))
        .scale(&e1)
        .add(&APComplex::from_real(e0.clone()));
    let a_raw = b_raw
        .mul(&correction)
        .add(&u_tau0.mul(&x_tau0).mul(&mult.dm));

    // Raw target k/(2 pi Im tau0).
    let k = group.weight();
    let two_pi = ctx.pi() * ctx.float_from_i64(2);
    let raw_lhs = ctx.float_from_i64(i64::from(k)) / (two_pi * tau0.im.clone());

    // Front factor x0^{e0} (1 - x0)^{e1}; e0 = 0 throughout the catalog, and
    // 1 - x0 > 0 since |x0| < 1, so the real powers are principal-branch safe.
    let one = ctx.complex_one();
    let mut front = one.clone();
    if !spec.e1().is_zero() {
        front = front.mul(&one.sub(&x0).pow_real(&e1));
    }
    if !spec.e0().is_zero() {
        front = front.mul(&x0.pow_real(&e0));
    }

    // Raw partial sum, pushed a little past working precision.
    let mut threshold = ctx.eps();
    threshold /= 100_000;
    let partial = sum_linear_series(
        ctx,
        &spec.recipe(),
        &a_raw,
        &b_raw,
        &x0,
        &threshold,
        "raw sum",
    )?;
    let raw_residual = front
        .mul(&partial.value)
        .dist(&APComplex::from_real(raw_lhs.clone()));

    // Display normalization.
    let target = spec.target_value(ctx)?;
    let prefactor = spec.prefactor_value(ctx)?;
    let sigma = target.mul(&front).div(&prefactor.scale(&raw_lhs));

    Ok(DerivedConstants {
        a: sigma.mul(&a_raw),
        b: sigma.mul(&b_raw),
        x0,
        a_raw,
        b_raw,
        sigma,
        raw_residual,
        terms_used: partial.terms,
    })
}
