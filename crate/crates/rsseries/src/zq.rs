//! Exact q-expansion side of the series recipe.
//!
//! Every group carries a distinguished holomorphic form `Z` of its weight
//! (weight 2 on the Hecke-type groups, weight 4 on `PSL2Z` and the plus
//! groups) with an exact integer-lattice q-expansion, and the coefficient
//! recipe claims
//!
//! ```text
//! Z = X^{e0} (1 - X)^{e1} * sum_j A_j X^j
//! ```
//!
//! with `X` the group's hauptmodul, `A_j` the group's coefficient family,
//! and `(e0, e1)` the group's recipe exponents.  [`recipe_z_check`] verifies
//! this coefficient-for-coefficient by composing the recipe with the exact
//! hauptmodul expansion, and certifies a vanishing difference with a Sturm
//! bound (the difference of two weight-`k` forms on the group is again one).

use arithgroup::GroupLabel;
use num_rational::{BigRational, Rational64};
use qalg::{
    e2n_expansion, eisenstein_expansion, hauptmodul_expansion, sturm_bound_q, sturm_verify,
    theta_expansion, QError, QSeries,
};

use crate::error::RsError;
use crate::families::{coefficients, CoefficientRecipe};

fn rq(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Exact q-expansion of the group's weight-k form `Z`, known through
/// `q^(order-1)`.
///
/// The six closed forms, in catalog order: `-E_{2,2}`, `-E_{2,3}/2`,
/// `theta3(2 tau)^4`, `E_4`, `E_{2,2}^2`, `E_{2,3}^2/4`, where
/// `E_{2,N} = E_2(tau) - N E_2(N tau)`.
pub fn z_expansion(group: GroupLabel, order: i64) -> Result<QSeries, RsError> {
    let z = match group {
        GroupLabel::G02 => e2n_expansion(2, order)?.neg(),
        GroupLabel::G03 => e2n_expansion(3, order)?.scale(&frac(-1, 2)),
        GroupLabel::G04 => theta_expansion(3, rq(2), rq(order))?.powi(4),
        GroupLabel::Psl2z => eisenstein_expansion(4, order)?,
        GroupLabel::G02Plus => e2n_expansion(2, order)?.powi(2),
        GroupLabel::G03Plus => e2n_expansion(3, order)?.powi(2).scale(&frac(1, 4)),
    };
    Ok(z)
}

/// The recipe side `X^{e0} (1-X)^{e1} sum_j A_j X^j` as an exact
/// q-expansion through `q^(order-1)`, built by composing the coefficient
/// family with the hauptmodul expansion (running powers of `X`).
///
/// `e0 = 0` for every group, so only the `(1-X)^{e1}` factor appears; its
/// fractional power is well-defined because `1 - X` has constant term 1.
pub fn recipe_qexpansion(group: GroupLabel, order: i64) -> Result<QSeries, RsError> {
    if order < 8 {
        return Err(RsError::InvalidRequest(format!(
            "recipe expansion needs order >= 8, got {order}"
        )));
    }
    let trunc = rq(order);
    let x = hauptmodul_expansion(group, order)?;
    let family = coefficients(&CoefficientRecipe::for_group(group), order as usize);
    let mut acc = QSeries::zero(trunc)?;
    let mut xpow = QSeries::one(trunc)?;
    for (j, aj) in family.iter().enumerate() {
        acc = acc.add(&xpow.scale(aj));
        if (j as i64) + 1 < order {
            xpow = xpow.mul(&x);
        }
    }
    let (e1n, e1d) = group.recipe_e1();
    if e1n != 0 {
        let one_minus_x = QSeries::one(trunc)?.sub(&x);
        acc = acc.mul(&one_minus_x.pow(Rational64::new(e1n, e1d))?);
    }
    Ok(acc)
}

/// Result of comparing the composed recipe against the exact `Z` expansion.
#[derive(Debug, Clone)]
pub struct RecipeZCheck {
    pub group: GroupLabel,
    /// Highest q-power compared, inclusive.
    pub checked_through: i64,
    /// True when every compared coefficient agrees.
    pub exact: bool,
    /// Exponent of the first disagreeing coefficient, when any.
    pub first_mismatch: Option<Rational64>,
    /// Sturm certificate for the vanishing difference: `Some(true)` when the
    /// agreement extends past the dimension bound (so the difference is the
    /// zero form), `None` when the requested order is too small to certify.
    pub sturm: Option<bool>,
    /// The Sturm bound used, in q-orders.
    pub bound: Rational64,
}

/// Verifies `Z = X^{e0}(1-X)^{e1} sum A_j X^j` through `q^order` inclusive.
pub fn recipe_z_check(group: GroupLabel, order: i64) -> Result<RecipeZCheck, RsError> {
    if order < 10 {
        return Err(RsError::InvalidRequest(format!(
            "recipe check needs order >= 10, got {order}"
        )));
    }
    let horizon = order + 1;
    let recipe = recipe_qexpansion(group, horizon)?;
    let z = z_expansion(group, horizon)?;
    let diff = recipe.sub(&z);
    let sturm = match sturm_verify(&diff, group.weight(), group) {
        Ok(ok) => Some(ok),
        Err(QError::InsufficientTruncation { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(RecipeZCheck {
        group,
        checked_through: order,
        exact: diff.is_zero(),
        first_mismatch: diff.valuation(),
        sturm,
        bound: sturm_bound_q(group.weight(), group),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recipe_matches_z_for_every_group_at_small_order() {
        for group in GroupLabel::ALL {
            let check = recipe_z_check(group, 20).unwrap();
            assert!(check.exact, "{group}: first mismatch {:?}", check.first_mismatch);
            assert_eq!(check.sturm, Some(true), "{group}: not certified");
        }
    }

    #[test]
    fn tiny_order_is_rejected() {
        assert!(matches!(
            recipe_z_check(GroupLabel::G02, 6),
            Err(RsError::InvalidRequest(_))
        ));
    }
}
