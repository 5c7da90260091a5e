//! Exact q-expansion certification of the cataloged relations.

use crate::catalog::ModularPolynomial;
use crate::error::ModPolyError;
use qalg::{hauptmodul_expansion, BigRational, QSeries, Rational64};

/// Smallest order accepted by [`verify_relation_qseries`]: below this the
/// check would not even reach the first structurally interesting
/// coefficients of the degree-six relations.
pub const MIN_QSERIES_ORDER: i64 = 50;

/// Outcome of substituting exact q-expansions into a cataloged relation.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub hauptmodul: String,
    pub level: u32,
    /// Every coefficient through q^order_checked (inclusive) was examined.
    pub order_checked: i64,
    pub holds: bool,
    /// Exponent and value of the first surviving coefficient, when not zero.
    pub first_nonzero: Option<(Rational64, BigRational)>,
}

/// Evaluates Phi on an arbitrary pair of q-expansions.
///
/// The result is known through the smallest horizon any contributing
/// monomial is known to; powers only deepen horizons here because both
/// inputs have positive valuation.
pub fn phi_eval_qseries(poly: &ModularPolynomial, x: &QSeries, y: &QSeries) -> QSeries {
    let (dx, dy) = poly.degrees();
    let xp: Vec<QSeries> = (0..=dx).map(|i| x.powi(i)).collect();
    let yp: Vec<QSeries> = (0..=dy).map(|j| y.powi(j)).collect();
    let mut acc: Option<QSeries> = None;
    for t in poly.terms() {
        let m = xp[t.x_exp as usize]
            .mul(&yp[t.y_exp as usize])
            .scale_int(t.coeff);
        acc = Some(match acc {
            None => m,
            Some(a) => a.add(&m),
        });
    }
    acc.expect("catalog blocks are nonempty")
}

/// Certifies Phi(X(q), X(q^level)) = 0 coefficient-exactly through
/// q^order (inclusive), using the group's integral hauptmodul expansion.
pub fn verify_relation_qseries(
    poly: &ModularPolynomial,
    order: i64,
) -> Result<RelationCheck, ModPolyError> {
    if order < MIN_QSERIES_ORDER {
        return Err(ModPolyError::OrderTooSmall { got: order, min: MIN_QSERIES_ORDER });
    }
    let x = hauptmodul_expansion(poly.group(), order + 1)?;
    let y = x.substitute(poly.level());
    let phi = phi_eval_qseries(poly, &x, &y);
    let trimmed = phi.truncate(Rational64::from_integer(order + 1))?;
    let first_nonzero = match trimmed.valuation() {
        None => None,
        Some(e) => Some((e, trimmed.coefficient(e)?)),
    };
    Ok(RelationCheck {
        hauptmodul: poly.hauptmodul().to_string(),
        level: poly.level(),
        order_checked: order,
        holds: first_nonzero.is_none(),
        first_nonzero,
    })
}
