use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use specfun::{gamma_rational, APComplex, PrecisionContext};

use crate::ast::AlgebraicExpr;
use crate::error::ConstExprError;

/// Exact-until-forced value: rational subtrees are computed in exact
/// arithmetic and rounded only when a transcendental node demands it.
enum Val {
    Exact(BigRational),
    Num(APComplex),
}

fn promote(ctx: &PrecisionContext, v: Val) -> APComplex {
    match v {
        // Infallible: a reduced big rational is always a valid rug rational.
        Val::Exact(q) => {
            APComplex::from_real(ctx.float_from_big(&q).expect("exact rational conversion"))
        }
        Val::Num(z) => z,
    }
}

fn is_zero_num(z: &APComplex) -> bool {
    z.re.is_zero() && z.im.is_zero()
}

fn exact_pow(q: &BigRational, n: i64) -> Result<BigRational, ConstExprError> {
    if n == 0 {
        return Ok(BigRational::one());
    }
    if q.is_zero() && n < 0 {
        return Err(ConstExprError::DivisionByZero);
    }
    let e = u32::try_from(n.unsigned_abs()).map_err(|_| ConstExprError::ExponentOverflow(n))?;
    let num = q.numer().pow(e);
    let den = q.denom().pow(e);
    let p = BigRational::new(num, den);
    Ok(if n < 0 { p.recip() } else { p })
}

fn eval_val(ctx: &PrecisionContext, e: &AlgebraicExpr) -> Result<Val, ConstExprError> {
    use AlgebraicExpr::*;
    Ok(match e {
        Rational(q) => Val::Exact(q.clone()),
        Pi => Val::Num(APComplex::from_real(ctx.pi())),
        I => Val::Num(ctx.complex_i()),
        Gamma(q) => Val::Num(APComplex::from_real(gamma_rational(ctx, *q)?)),
        Sqrt(inner) => {
            let v = promote(ctx, eval_val(ctx, inner)?);
            Val::Num(v.sqrt())
        }
        Pow(base, q) => {
            let vb = eval_val(ctx, base)?;
            match vb {
                Val::Exact(b) if q.is_integer() => Val::Exact(exact_pow(&b, *q.numer())?),
                vb => {
                    let z = promote(ctx, vb);
                    if is_zero_num(&z) {
                        if q.is_negative() {
                            return Err(ConstExprError::DivisionByZero);
                        }
                        if q.is_zero() {
                            Val::Exact(BigRational::one())
                        } else {
                            Val::Exact(BigRational::zero())
                        }
                    } else {
                        Val::Num(z.pow_real(&ctx.float_from_r64(*q)))
                    }
                }
            }
        }
        Neg(inner) => match eval_val(ctx, inner)? {
            Val::Exact(q) => Val::Exact(-q),
            Val::Num(z) => Val::Num(z.neg()),
        },
        Add(a, b) => binary(ctx, a, b, |x, y| x + y, |x, y| x.add(y))?,
        Sub(a, b) => binary(ctx, a, b, |x, y| x - y, |x, y| x.sub(y))?,
        Mul(a, b) => binary(ctx, a, b, |x, y| x * y, |x, y| x.mul(y))?,
        Div(a, b) => {
            let va = eval_val(ctx, a)?;
            let vb = eval_val(ctx, b)?;
            match (va, vb) {
                (_, Val::Exact(q)) if q.is_zero() => {
                    return Err(ConstExprError::DivisionByZero)
                }
                (Val::Exact(l), Val::Exact(r)) => Val::Exact(l / r),
                (va, vb) => {
                    let den = promote(ctx, vb);
                    if is_zero_num(&den) {
                        return Err(ConstExprError::DivisionByZero);
                    }
                    Val::Num(promote(ctx, va).div(&den))
                }
            }
        }
    })
}

fn binary(
    ctx: &PrecisionContext,
    a: &AlgebraicExpr,
    b: &AlgebraicExpr,
    exact: impl Fn(&BigRational, &BigRational) -> BigRational,
    num: impl Fn(&APComplex, &APComplex) -> APComplex,
) -> Result<Val, ConstExprError> {
    let va = eval_val(ctx, a)?;
    let vb = eval_val(ctx, b)?;
    Ok(match (va, vb) {
        (Val::Exact(l), Val::Exact(r)) => Val::Exact(exact(&l, &r)),
        (va, vb) => Val::Num(num(&promote(ctx, va), &promote(ctx, vb))),
    })
}

/// Evaluate to `ctx.digits` significant digits. Gamma nodes delegate to the
/// numeric kernel; rational subtrees stay exact until a transcendental node
/// forces rounding.
pub fn eval_expr(
    ctx: &PrecisionContext,
    e: &AlgebraicExpr,
) -> Result<APComplex, ConstExprError> {
    Ok(promote(ctx, eval_val(ctx, e)?))
}

/// Exact value if the tree is purely rational (integer powers included);
/// `None` as soon as pi, gamma, sqrt, `i`, or a fractional power appears,
/// or on division by exact zero.
pub fn eval_rational(e: &AlgebraicExpr) -> Option<BigRational> {
    use AlgebraicExpr::*;
    match e {
        Rational(q) => Some(q.clone()),
        Pi | I | Gamma(_) | Sqrt(_) => None,
        Pow(base, q) => {
            if !q.is_integer() {
                return None;
            }
            let b = eval_rational(base)?;
            exact_pow(&b, *q.numer()).ok()
        }
        Neg(inner) => Some(-eval_rational(inner)?),
        Add(a, b) => Some(eval_rational(a)? + eval_rational(b)?),
        Sub(a, b) => Some(eval_rational(a)? - eval_rational(b)?),
        Mul(a, b) => Some(eval_rational(a)? * eval_rational(b)?),
        Div(a, b) => {
            let r = eval_rational(b)?;
            if r.is_zero() {
                return None;
            }
            Some(eval_rational(a)? / r)
        }
    }
}

/// Convenience: `n` as an exact big rational.
pub fn big_rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
