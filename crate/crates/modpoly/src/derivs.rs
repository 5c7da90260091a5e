//! Numeric evaluation and implicit differentiation of the relations, and
//! the derived multiplier derivative dM/dX.
//!
//! Along the curve Phi(X(tau), Y(tau)) = 0 with Y(tau) = X(level*tau), the
//! multiplier M(tau) = Z(tau)/Z(level*tau) is an algebraic function of X
//! alone. With p = dY/dX from the implicit function theorem, M and dM/dX
//! are rational in (X, Y, p, p') via one of three routes fixed by the shape
//! of the group's U-function.

use crate::catalog::{find_for_group, ModularPolynomial};
use crate::error::ModPolyError;
use arithgroup::GroupLabel;
use rug::ops::PowAssign;
use rug::Float;
use specfun::{eval_hauptmodul, eval_z, APComplex, NumericError, PrecisionContext};

/// Phi and its partials through second order at one point, together with
/// the implicit derivatives of the branch through that point.
#[derive(Clone, Debug)]
pub struct DerivativeBundle {
    /// |Phi(X0, Y0)|: how far the supplied point is off the curve.
    pub residual: Float,
    pub f_x: APComplex,
    pub f_y: APComplex,
    pub f_xx: APComplex,
    pub f_xy: APComplex,
    pub f_yy: APComplex,
    /// dY/dX on the branch through (X0, Y0).
    pub p: APComplex,
    /// d^2Y/dX^2 on that branch.
    pub p_prime: APComplex,
}

/// Evaluates Phi(x, y) in arbitrary-precision complex arithmetic.
pub fn phi_eval(
    ctx: &PrecisionContext,
    poly: &ModularPolynomial,
    x: &APComplex,
    y: &APComplex,
) -> APComplex {
    let (dx, dy) = poly.degrees();
    let xp = powers(ctx, x, dx);
    let yp = powers(ctx, y, dy);
    let mut acc = APComplex::zero(ctx.prec_bits());
    for t in poly.terms() {
        let c = ctx.float_from_i64(t.coeff);
        acc = acc.add(&xp[t.x_exp as usize].mul(&yp[t.y_exp as usize]).scale(&c));
    }
    acc
}

fn powers(ctx: &PrecisionContext, v: &APComplex, deg: u32) -> Vec<APComplex> {
    let mut out = Vec::with_capacity(deg as usize + 1);
    out.push(APComplex::from_real(ctx.float_from_i64(1)));
    for _ in 0..deg {
        out.push(out.last().expect("nonempty").mul(v));
    }
    out
}

/// 10^-e at the context's working precision.
fn neg_power_of_ten(ctx: &PrecisionContext, e: u32) -> Float {
    let mut t = ctx.float_from_i64(10);
    t.pow_assign(-(e as i32));
    t
}

/// Differentiates the curve implicitly at (x0, y0).
///
/// Preconditions checked here: the point must satisfy |Phi| < 10^-(digits-15)
/// (otherwise it is not on the curve and the question is meaningless), and
/// |Phi_Y| must not be negligible relative to the other partials (otherwise
/// the point is singular and the branch derivative is undefined).
pub fn implicit_derivatives(
    ctx: &PrecisionContext,
    poly: &ModularPolynomial,
    x0: &APComplex,
    y0: &APComplex,
) -> Result<DerivativeBundle, ModPolyError> {
    let (dx, dy) = poly.degrees();
    let xp = powers(ctx, x0, dx);
    let yp = powers(ctx, y0, dy);
    let prec = ctx.prec_bits();
    let mut f = APComplex::zero(prec);
    let mut f_x = APComplex::zero(prec);
    let mut f_y = APComplex::zero(prec);
    let mut f_xx = APComplex::zero(prec);
    let mut f_xy = APComplex::zero(prec);
    let mut f_yy = APComplex::zero(prec);
    for t in poly.terms() {
        let c = ctx.float_from_i64(t.coeff);
        let (i, j) = (t.x_exp as usize, t.y_exp as usize);
        let (iw, jw) = (i as i64, j as i64);
        f = f.add(&xp[i].mul(&yp[j]).scale(&c));
        if i >= 1 {
            f_x = f_x.add(&xp[i - 1].mul(&yp[j]).scale(&c).scale_i64(iw));
        }
        if j >= 1 {
            f_y = f_y.add(&xp[i].mul(&yp[j - 1]).scale(&c).scale_i64(jw));
        }
        if i >= 2 {
            f_xx = f_xx.add(&xp[i - 2].mul(&yp[j]).scale(&c).scale_i64(iw * (iw - 1)));
        }
        if i >= 1 && j >= 1 {
            f_xy = f_xy.add(&xp[i - 1].mul(&yp[j - 1]).scale(&c).scale_i64(iw * jw));
        }
        if j >= 2 {
            f_yy = f_yy.add(&xp[i].mul(&yp[j - 2]).scale(&c).scale_i64(jw * (jw - 1)));
        }
    }

    let threshold = neg_power_of_ten(ctx, ctx.digits().saturating_sub(15).max(1));
    let residual = f.abs();
    if residual > threshold {
        return Err(ModPolyError::PointOffCurve {
            residual: residual.to_f64(),
            allowed: threshold.to_f64(),
        });
    }
    // Singularity is judged relative to the partials' own magnitude: the
    // cataloged coefficients span eighteen orders, so an absolute test
    // would misread a well-conditioned point on a large-coefficient curve.
    let mut scale = ctx.float_from_i64(1);
    for part in [&f_x, &f_y, &f_xx, &f_xy, &f_yy] {
        let a = part.abs();
        if a > scale {
            scale = a;
        }
    }
    if f_y.abs() < threshold.clone() * &scale {
        return Err(ModPolyError::SingularPoint {
            f_x: f_x.abs().to_f64(),
            f_y: f_y.abs().to_f64(),
        });
    }

    let p = f_x.div(&f_y).neg();
    // Differentiating F_X + F_Y p = 0 once more along the branch:
    // p' = -(F_XX + 2 F_XY p + F_YY p^2) / F_Y.
    let p_prime = f_xx
        .add(&f_xy.mul(&p).scale_i64(2))
        .add(&f_yy.mul(&p.powi(2)))
        .div(&f_y)
        .neg();
    Ok(DerivativeBundle { residual, f_x, f_y, f_xx, f_xy, f_yy, p, p_prime })
}

/// How the multiplier M = Z(tau)/Z(level*tau) reads off the curve data;
/// fixed by the shape of the group's U-function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultiplierRoute {
    /// U = 1 (the two weight-2 Hecke groups): M = level * g.
    UEqualsOne,
    /// U = 1 - X (the level-4 group): M = level * g * h.
    UEqualsOneMinusX,
    /// U^2 = (1 - X)/Z (the weight-4 groups): M = level^2 * g^2 * h.
    USquaredFamily,
}

impl MultiplierRoute {
    pub fn for_group(group: GroupLabel) -> MultiplierRoute {
        match group {
            GroupLabel::G02 | GroupLabel::G03 => MultiplierRoute::UEqualsOne,
            GroupLabel::G04 => MultiplierRoute::UEqualsOneMinusX,
            GroupLabel::Psl2z | GroupLabel::G02Plus | GroupLabel::G03Plus => {
                MultiplierRoute::USquaredFamily
            }
        }
    }
}

/// The multiplier and its X-derivative at one point of the curve.
#[derive(Clone, Debug)]
pub struct MultiplierDerivative {
    pub m: APComplex,
    pub dm: APComplex,
}

/// Evaluates M and dM/dX from the implicit curve data.
///
/// With g = Y/(X p) and h = (1-Y)/(1-X) (and their X-derivatives from p and
/// p'), the three routes give M = level*g, level*g*h, level^2*g^2*h.
pub fn dmn_dx(
    route: MultiplierRoute,
    level: u32,
    x0: &APComplex,
    y0: &APComplex,
    bundle: &DerivativeBundle,
) -> MultiplierDerivative {
    let n = level as i64;
    let p = &bundle.p;
    let p_prime = &bundle.p_prime;
    let g = y0.div(&x0.mul(p));
    // dg = -p'/p^2 * Y/X + 1/p * (pX - Y)/X^2
    let dg = p_prime
        .div(&p.powi(2))
        .neg()
        .mul(&y0.div(x0))
        .add(&p.recip().mul(&p.mul(x0).sub(y0).div(&x0.powi(2))));
    match route {
        MultiplierRoute::UEqualsOne => MultiplierDerivative {
            m: g.scale_i64(n),
            dm: dg.scale_i64(n),
        },
        MultiplierRoute::UEqualsOneMinusX | MultiplierRoute::USquaredFamily => {
            let one = APComplex::from_real(Float::with_val(x0.prec(), 1));
            let one_m_x = one.sub(x0);
            let one_m_y = one.sub(y0);
            let h = one_m_y.div(&one_m_x);
            // dh = (-(1-X) p + (1-Y)) / (1-X)^2
            let dh = one_m_x
                .mul(p)
                .neg()
                .add(&one_m_y)
                .div(&one_m_x.powi(2));
            match route {
                MultiplierRoute::UEqualsOneMinusX => MultiplierDerivative {
                    m: g.mul(&h).scale_i64(n),
                    dm: dg.mul(&h).add(&g.mul(&dh)).scale_i64(n),
                },
                MultiplierRoute::USquaredFamily => MultiplierDerivative {
                    m: g.powi(2).mul(&h).scale_i64(n * n),
                    dm: g
                        .mul(&h)
                        .mul(&dg)
                        .scale_i64(2 * n * n)
                        .add(&g.powi(2).mul(&dh).scale_i64(n * n)),
                },
                MultiplierRoute::UEqualsOne => unreachable!(),
            }
        }
    }
}

/// Everything the implicit route produces at one tau: the curve point, the
/// branch derivatives, and the multiplier pair.
#[derive(Clone, Debug)]
pub struct MultiplierAnalysis {
    pub x0: APComplex,
    pub y0: APComplex,
    pub route: MultiplierRoute,
    pub bundle: DerivativeBundle,
    pub m: APComplex,
    pub dm: APComplex,
}

/// Full implicit pipeline at tau0: evaluates the hauptmodul at tau0 and
/// level*tau0, differentiates the cataloged relation there, and reads off
/// M and dM/dX through the group's route.
pub fn multiplier_at(
    ctx: &PrecisionContext,
    group: GroupLabel,
    level: u32,
    tau0: &APComplex,
) -> Result<MultiplierAnalysis, ModPolyError> {
    let poly = find_for_group(group, level)?;
    let x0 = eval_hauptmodul(ctx, group, tau0)?;
    let y0 = eval_hauptmodul(ctx, group, &tau0.scale_i64(level as i64))?;
    let bundle = implicit_derivatives(ctx, poly, &x0, &y0)?;
    let route = MultiplierRoute::for_group(group);
    let MultiplierDerivative { m, dm } = dmn_dx(route, level, &x0, &y0, &bundle);
    Ok(MultiplierAnalysis { x0, y0, route, bundle, m, dm })
}

/// Independent finite-difference route to dM/dX, bypassing the catalog.
///
/// M(tau) = Z(tau)/Z(level*tau) and X(tau) are sampled at tau0 +- h for a
/// real step h; the chain rule makes the ratio of central differences an
/// approximation of dM/dX with only even-order error terms, and one
/// Richardson step removes the h^2 term. The step is sized so that both
/// the h^4 truncation error and the cancellation rounding error sit far
/// below 10^-(working/3).
pub fn fd_dmdx(
    ctx: &PrecisionContext,
    group: GroupLabel,
    level: u32,
    tau0: &APComplex,
) -> Result<APComplex, ModPolyError> {
    let n = level as i64;
    let m_of = |t: &APComplex| -> Result<APComplex, NumericError> {
        Ok(eval_z(ctx, group, t)?.div(&eval_z(ctx, group, &t.scale_i64(n))?))
    };
    let ratio = |h: &Float| -> Result<APComplex, ModPolyError> {
        let step = APComplex::from_real(h.clone());
        let tp = tau0.add(&step);
        let tm = tau0.sub(&step);
        let dm = m_of(&tp)?.sub(&m_of(&tm)?);
        let dx = eval_hauptmodul(ctx, group, &tp)?.sub(&eval_hauptmodul(ctx, group, &tm)?);
        Ok(dm.div(&dx))
    };
    let h = neg_power_of_ten(ctx, (ctx.working_digits() / 4).max(6));
    let half = Float::with_val(ctx.prec_bits(), &h / 2u32);
    let r1 = ratio(&h)?;
    let r2 = ratio(&half)?;
    let third = ctx.float_from_r64(num_rational::Rational64::new(1, 3));
    Ok(r2.scale_i64(4).sub(&r1).scale(&third))
}
