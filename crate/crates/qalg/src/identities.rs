//! Exact q-expansion identities between theta constants, eta quotients,
//! Eisenstein combinations and the j-function, each certified by a Sturm
//! bound where an even-weight holomorphic difference is available.

use crate::{
    e2n_expansion, eisenstein_expansion, eta_expansion, j_expansion, sturm_bound_q_at_index,
    sturm_verify_at_index, theta_expansion, BigInt, BigRational, QError, QSeries, Rational64,
};

fn rq(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

/// Outcome of one identity check.
///
/// `exact` says every computed coefficient of the difference vanishes
/// through `checked_through`. `sturm` upgrades that to a proof when the
/// truncation clears the dimension bound for (weight, index): Some(true)
/// is a certificate, Some(false) a verified failure, None means the
/// expansion was too short for the bound.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub weight: u32,
    pub index: u32,
    pub plus: bool,
    pub bound: Rational64,
    pub checked_through: Rational64,
    pub exact: bool,
    pub first_nonzero: Option<Rational64>,
    pub sturm: Option<bool>,
}

fn certify(
    name: &'static str,
    diff: &QSeries,
    weight: u32,
    index: u32,
    plus: bool,
) -> Result<IdentityCheck, QError> {
    certify_split(name, diff, diff, weight, index, plus)
}

/// Reports exactness of `shown` while certifying `certified`; the two differ
/// only for half-integral weight displays, where the Sturm argument runs on
/// an even-weight power of the same identity.
fn certify_split(
    name: &'static str,
    shown: &QSeries,
    certified: &QSeries,
    weight: u32,
    index: u32,
    plus: bool,
) -> Result<IdentityCheck, QError> {
    let sturm = match sturm_verify_at_index(certified, weight, index, plus) {
        Ok(b) => Some(b),
        Err(QError::InsufficientTruncation { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(IdentityCheck {
        name,
        weight,
        index,
        plus,
        bound: sturm_bound_q_at_index(weight, index, plus),
        checked_through: shown.trunc_order(),
        exact: shown.is_zero(),
        first_nonzero: shown.valuation(),
        sturm,
    })
}

/// Names accepted by [`run_exact_identity`], in catalog order.
pub const EXACT_IDENTITY_NAMES: [&str; 10] = [
    "jacobi",
    "thetaE2",
    "thetaE2companion",
    "thetaE23theta",
    "thetaE23eta",
    "thetaeta2",
    "thetaeta3",
    "thetaeta4",
    "lambda",
    "jprime",
];

/// Checks one named identity with expansions through q^order.
pub fn run_exact_identity(name: &str, order: i64) -> Result<IdentityCheck, QError> {
    if order < 4 {
        return Err(QError::InvalidTruncation { requested: rq(order) });
    }
    let o = rq(order);
    match name {
        // theta2^4 + theta4^4 = theta3^4, weight 2 on the index-6 group
        // fixing t_inf.
        "jacobi" => {
            let d = theta_expansion(2, rq(1), o)?
                .powi(4)
                .add(&theta_expansion(4, rq(1), o)?.powi(4))
                .sub(&theta_expansion(3, rq(1), o)?.powi(4));
            certify("jacobi", &d, 2, 6, false)
        }
        // theta3(2 tau)^4 = (4 E2(4 tau) - E2(tau)) / 3.
        "thetaE2" => {
            let e2 = eisenstein_expansion(2, order)?;
            let rhs = e2.substitute(4).scale_int(4).sub(&e2).scale(&BigRational::new(
                BigInt::from(1),
                BigInt::from(3),
            ));
            let d = theta_expansion(3, rq(2), o)?.powi(4).sub(&rhs);
            certify("thetaE2", &d, 2, 6, false)
        }
        // theta3(2 tau)^4 + theta2(2 tau)^4 = -(E2(tau) - 2 E2(2 tau)).
        "thetaE2companion" => {
            let d = theta_expansion(3, rq(2), o)?
                .powi(4)
                .add(&theta_expansion(2, rq(2), o)?.powi(4))
                .add(&e2n_expansion(2, order)?);
            certify("thetaE2companion", &d, 2, 6, false)
        }
        // (theta3(2t) theta3(6t) + theta2(2t) theta2(6t))^2
        //   = -(E2 - 3 E2(3 tau)) / 2, weight 2 at level 12 (index 24).
        "thetaE23theta" => {
            let s = theta_expansion(3, rq(2), o)?
                .mul(&theta_expansion(3, rq(6), o)?)
                .add(&theta_expansion(2, rq(2), o)?.mul(&theta_expansion(2, rq(6), o)?));
            let d = s.powi(2).add(&e2n_expansion(3, order)?.scale(&half()));
            certify("thetaE23theta", &d, 2, 24, false)
        }
        // (3 eta(3 tau)^3 + eta(tau/3)^3)^2 / eta(tau)^2
        //   = -(E2 - 3 E2(3 tau)) / 2. The tau/3 pieces live on a finer
        //   lattice, so the certificate uses a deliberately generous index.
        "thetaE23eta" => {
            let s = eta_expansion(rq(3), o)?
                .powi(3)
                .scale_int(3)
                .add(&eta_expansion(Rational64::new(1, 3), o)?.powi(3));
            let quot = s.powi(2).div(&eta_expansion(rq(1), o)?.powi(2))?;
            let d = quot.add(&e2n_expansion(3, order)?.scale(&half()));
            certify("thetaE23eta", &d, 2, 72, false)
        }
        // theta2 = 2 eta(2 tau)^2 / eta(tau): shown at weight 1/2, certified
        // through its 4th power at weight 2.
        "thetaeta2" => {
            let lin = theta_expansion(2, rq(1), o)?
                .sub(&eta_expansion(rq(2), o)?.powi(2).scale_int(2).div(&eta_expansion(rq(1), o)?)?);
            let pow = theta_expansion(2, rq(1), o)?.powi(4).sub(
                &eta_expansion(rq(2), o)?
                    .powi(8)
                    .scale_int(16)
                    .div(&eta_expansion(rq(1), o)?.powi(4))?,
            );
            certify_split("thetaeta2", &lin, &pow, 2, 12, false)
        }
        // theta3 = eta(tau)^5 / (eta(tau/2)^2 eta(2 tau)^2), same scheme.
        "thetaeta3" => {
            let den = eta_expansion(Rational64::new(1, 2), o)?
                .powi(2)
                .mul(&eta_expansion(rq(2), o)?.powi(2));
            let lin =
                theta_expansion(3, rq(1), o)?.sub(&eta_expansion(rq(1), o)?.powi(5).div(&den)?);
            let den4 = eta_expansion(Rational64::new(1, 2), o)?
                .powi(8)
                .mul(&eta_expansion(rq(2), o)?.powi(8));
            let pow =
                theta_expansion(3, rq(1), o)?.powi(4).sub(&eta_expansion(rq(1), o)?.powi(20).div(&den4)?);
            certify_split("thetaeta3", &lin, &pow, 2, 12, false)
        }
        // theta4 = eta(tau/2)^2 / eta(tau), same scheme.
        "thetaeta4" => {
            let lin = theta_expansion(4, rq(1), o)?.sub(
                &eta_expansion(Rational64::new(1, 2), o)?
                    .powi(2)
                    .div(&eta_expansion(rq(1), o)?)?,
            );
            let pow = theta_expansion(4, rq(1), o)?.powi(4).sub(
                &eta_expansion(Rational64::new(1, 2), o)?
                    .powi(8)
                    .div(&eta_expansion(rq(1), o)?.powi(4))?,
            );
            certify_split("thetaeta4", &lin, &pow, 2, 12, false)
        }
        // (theta2/theta3)^4 + (theta4/theta3)^4 = 1: weight 0 on display,
        // certified by clearing theta3^4 back to the Jacobi relation.
        "lambda" => {
            let t3_4 = theta_expansion(3, rq(1), o)?.powi(4);
            let lin = theta_expansion(2, rq(1), o)?
                .powi(4)
                .div(&t3_4)?
                .add(&theta_expansion(4, rq(1), o)?.powi(4).div(&t3_4)?)
                .sub(&QSeries::one(o)?);
            let pow = theta_expansion(2, rq(1), o)?
                .powi(4)
                .add(&theta_expansion(4, rq(1), o)?.powi(4))
                .sub(&t3_4);
            certify_split("lambda", &lin, &pow, 2, 6, false)
        }
        // -j' E4 = j E6, cleared by Delta (so Delta j' E4 + E4^3 E6 = 0)
        // to get a holomorphic weight-18 form on the full modular group.
        "jprime" => {
            let j = j_expansion(order + 2)?;
            let delta = eta_expansion(rq(1), rq(order + 2))?.powi(24);
            let e4 = eisenstein_expansion(4, order + 2)?;
            let e6 = eisenstein_expansion(6, order + 2)?;
            let d = delta
                .mul(&j.q_derivative())
                .mul(&e4)
                .add(&e4.powi(3).mul(&e6))
                .truncate(o)?;
            certify("jprime", &d, 18, 1, false)
        }
        other => Err(QError::InvalidArgument(format!("unknown identity name: {other}"))),
    }
}

/// Runs the whole suite at one order.
pub fn run_exact_suite(order: i64) -> Result<Vec<IdentityCheck>, QError> {
    EXACT_IDENTITY_NAMES.iter().map(|n| run_exact_identity(n, order)).collect()
}
