//! High-precision residual checks of the two analytic statements behind the
//! series: the logarithmic-derivative identity at a quadratic point, and the
//! scaling transformation of `Z` under the group's normalizing involution.

use arithgroup::GroupLabel;
use rug::Float;
use specfun::{apply_mobius, eval_z, APComplex, PrecisionContext};

use crate::error::RsError;
use crate::zq::z_expansion;

/// Normalizes the matrix sign so the lower-left entry is positive (the
/// Moebius action is projective) and rejects degenerate input.
fn normalized(gamma: [i64; 4]) -> Result<[i64; 4], RsError> {
    let [a, b, c, d] = gamma;
    let det = a * d - b * c;
    if det <= 0 {
        return Err(RsError::InvalidRequest(format!(
            "matrix determinant must be positive, got {det}"
        )));
    }
    if c == 0 {
        return Err(RsError::InvalidRequest(
            "matrix must move the cusp: lower-left entry is 0".into(),
        ));
    }
    Ok(if c < 0 { [-a, -b, -c, -d] } else { gamma })
}

/// The quadratic point attached to `(gamma, N)`: with `det = det(gamma)` and
/// the sign fixed so `c > 0`,
///
/// ```text
/// tau0 = a/c + i sqrt(det) / (c sqrt(N)).
/// ```
///
/// Every cataloged `tau0` is reproduced by this formula from its own
/// `(gamma, N)` pair.
pub fn tau0_from_gamma(
    ctx: &PrecisionContext,
    level: u32,
    gamma: [i64; 4],
) -> Result<APComplex, RsError> {
    let [a, b, c, d] = normalized(gamma)?;
    let det = a * d - b * c;
    let cf = ctx.float_from_i64(c);
    let re = ctx.float_from_i64(a) / cf.clone();
    let sqrt_det = ctx.float_from_i64(det).sqrt();
    let sqrt_n = ctx.float_from_i64(i64::from(level)).sqrt();
    let im = sqrt_det / (cf * sqrt_n);
    Ok(APComplex::new(re, im))
}

/// Number of exact q-terms needed so the Horner tail, at the point with the
/// smaller imaginary part, stays below working precision (with margin).
fn qexp_order(ctx: &PrecisionContext, im_min: f64) -> Result<i64, RsError> {
    let decades = f64::from(ctx.working_digits()) + 15.0;
    let order = (decades * std::f64::consts::LN_10
        / (2.0 * std::f64::consts::PI * im_min))
        .ceil() as i64
        + 5;
    if order > 4000 {
        return Err(RsError::InvalidRequest(format!(
            "point too close to the real axis: need {order} q-terms"
        )));
    }
    Ok(order.max(16))
}

/// Dense real coefficients `c_0 ... c_{order-1}` of the group's `Z`.
fn z_dense_coefficients(
    ctx: &PrecisionContext,
    group: GroupLabel,
    order: i64,
) -> Result<Vec<Float>, RsError> {
    let z = z_expansion(group, order)?;
    let mut out = Vec::with_capacity(order as usize);
    for n in 0..order {
        let c = z.coefficient_q(n).map_err(RsError::from)?;
        out.push(ctx.float_from_big(&c)?);
    }
    Ok(out)
}

/// Evaluates `(Z, q dZ/dq)` at `tau` by dense Horner on exact coefficients,
/// with `q = exp(2 pi i tau)`.
fn z_pair_at(
    ctx: &PrecisionContext,
    coeffs: &[Float],
    tau: &APComplex,
) -> (APComplex, APComplex) {
    let two_pi = ctx.pi() * ctx.float_from_i64(2);
    let q = tau.mul_i().scale(&two_pi).exp();
    let mut z = ctx.complex_zero();
    let mut zprime = ctx.complex_zero();
    for (n, c) in coeffs.iter().enumerate().rev() {
        z = z.mul(&q).add(&APComplex::from_real(c.clone()));
        let mut nc = c.clone();
        nc *= n as i64;
        zprime = zprime.mul(&q).add(&APComplex::from_real(nc));
    }
    (z, zprime)
}

/// Residual of the logarithmic-derivative identity at the quadratic point
/// determined by `(gamma, N)`:
///
/// ```text
/// (c/sqrt(det)) k sqrt(N) / (2 pi)
///     = (qZ'/Z)(tau0) + N (qZ'/Z)(gamma tau0),
/// ```
///
/// with `Z` the group's weight-`k` form and both sides evaluated from exact
/// q-expansions at the context's working precision.
pub fn theorem_identity_check(
    ctx: &PrecisionContext,
    group: GroupLabel,
    level: u32,
    gamma: [i64; 4],
) -> Result<Float, RsError> {
    let gamma = normalized(gamma)?;
    let [a, b, c, d] = gamma;
    let det = a * d - b * c;
    let tau0 = tau0_from_gamma(ctx, level, gamma)?;
    let gtau0 = apply_mobius(gamma, &tau0);

    let c_norm = ctx.float_from_i64(c) / ctx.float_from_i64(det).sqrt();
    let sqrt_n = ctx.float_from_i64(i64::from(level)).sqrt();
    let two_pi = ctx.pi() * ctx.float_from_i64(2);
    let lhs = c_norm * ctx.float_from_i64(i64::from(group.weight())) * sqrt_n / two_pi;

    let im_min = tau0.im.to_f64().min(gtau0.im.to_f64());
    let order = qexp_order(ctx, im_min)?;
    let coeffs = z_dense_coefficients(ctx, group, order)?;
    let (z0, zp0) = z_pair_at(ctx, &coeffs, &tau0);
    let (zg, zpg) = z_pair_at(ctx, &coeffs, &gtau0);
    let rhs = zp0
        .div(&z0)
        .add(&zpg.div(&zg).scale_i64(i64::from(level)));
    Ok(rhs.dist(&APComplex::from_real(lhs)))
}

/// Residual of the scaling transformation
/// `Z(i/sqrt(r s)) = (-r)^{k/2} Z(i sqrt(r/s))` for the group's normalizing
/// involution `tau -> -1/(s tau)`; `s` must be the group's own scaling
/// parameter (1, 2, or 3 — only `PSL2Z` and the plus groups have one).
pub fn lemma_transform_check(
    ctx: &PrecisionContext,
    group: GroupLabel,
    r: u32,
    s: u32,
) -> Result<Float, RsError> {
    let expected = group.normalizer_s().ok_or_else(|| {
        RsError::InvalidRequest(format!("group {group} has no scaling involution"))
    })?;
    if s != expected {
        return Err(RsError::InvalidRequest(format!(
            "scaling parameter {s} does not belong to {group} (expected {expected})"
        )));
    }
    if r == 0 {
        return Err(RsError::InvalidRequest("r must be positive".into()));
    }
    let rf = ctx.float_from_i64(i64::from(r));
    let sf = ctx.float_from_i64(i64::from(s));
    let tau1 = APComplex::new(ctx.new_float(), (rf.clone() * sf.clone()).sqrt().recip());
    let tau2 = APComplex::new(ctx.new_float(), (rf / sf).sqrt());
    let z1 = eval_z(ctx, group, &tau1)?;
    let z2 = eval_z(ctx, group, &tau2)?;
    let half_weight = group.weight() / 2;
    let factor = ctx.float_from_i64((-i64::from(r)).pow(half_weight));
    Ok(z1.dist(&z2.scale(&factor)))
}
