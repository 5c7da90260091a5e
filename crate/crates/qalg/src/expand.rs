//! Constructors for the classical expansions: eta, Eisenstein, theta, the
//! normalized weight-2 combinations E2(tau) - N E2(N tau), and the six
//! hauptmoduln used by the series catalog.

use crate::{
    slot_count, units_of, BigInt, BigRational, QError, QSeries, Rational64, LATTICE_DEN,
};
use arithgroup::GroupLabel;
use num_traits::{One, Zero};

fn rq(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Dedekind eta of scale*tau as a q-expansion: q^(scale/24) prod (1 - q^(scale n)).
///
/// The product is expanded by the pentagonal number theorem, so construction
/// is exact and linear in the number of slots. The scale must keep both
/// scale/24 and scale on the 1/144 exponent lattice (denominators 1, 2, 3, 6).
pub fn eta_expansion(scale: Rational64, order: Rational64) -> Result<QSeries, QError> {
    if scale <= Rational64::zero() {
        return Err(QError::InvalidArgument(format!("eta scale must be positive, got {scale}")));
    }
    let lead = units_of(scale / rq(24)).map_err(|_| QError::OffLattice { exponent: scale / rq(24) })?;
    let stride = units_of(scale)?;
    let trunc = units_of(order)?;
    if trunc <= lead {
        return Err(QError::InvalidTruncation { requested: order });
    }
    let n = slot_count(lead, stride, trunc);
    let mut coeffs = vec![BigRational::zero(); n as usize];
    coeffs[0] = BigRational::one();
    // Pentagonal numbers k(3k -+ 1)/2 carry coefficient (-1)^k.
    let mut k: i64 = 1;
    loop {
        let g1 = k * (3 * k - 1) / 2;
        if g1 >= n {
            break;
        }
        let sign = if k % 2 == 0 { big(1) } else { big(-1) };
        coeffs[g1 as usize] += sign.clone();
        let g2 = k * (3 * k + 1) / 2;
        if g2 < n {
            coeffs[g2 as usize] += sign;
        }
        k += 1;
    }
    Ok(QSeries::from_units(lead, stride, trunc, coeffs))
}

fn sigma(n: i64, pow: u32) -> i128 {
    let mut acc: i128 = 0;
    let mut d: i64 = 1;
    while d * d <= n {
        if n % d == 0 {
            acc += (d as i128).pow(pow);
            let e = n / d;
            if e != d {
                acc += (e as i128).pow(pow);
            }
        }
        d += 1;
    }
    acc
}

/// Normalized Eisenstein series of weight 2, 4 or 6 through q^(order-1).
pub fn eisenstein_expansion(k: u32, order: i64) -> Result<QSeries, QError> {
    let mult: i128 = match k {
        2 => -24,
        4 => 240,
        6 => -504,
        _ => return Err(QError::UnsupportedWeight(k)),
    };
    if order < 1 {
        return Err(QError::InvalidTruncation { requested: rq(order) });
    }
    let trunc = order * LATTICE_DEN;
    let n = slot_count(0, LATTICE_DEN, trunc);
    let mut coeffs = Vec::with_capacity(n as usize);
    coeffs.push(BigRational::one());
    for m in 1..n {
        coeffs.push(BigRational::from_integer(BigInt::from(mult * sigma(m, k - 1))));
    }
    Ok(QSeries::from_units(0, LATTICE_DEN, trunc, coeffs))
}

/// The weight-2 combination E2(tau) - N E2(N tau), holomorphic on Gamma0(N).
pub fn e2n_expansion(n: u32, order: i64) -> Result<QSeries, QError> {
    if n == 0 {
        return Err(QError::InvalidArgument("e2n level must be >= 1".into()));
    }
    let e2 = eisenstein_expansion(2, order)?;
    Ok(e2.sub(&e2.substitute(n).scale_int(n as i64)))
}

/// Jacobi theta constant of kind 2, 3 or 4 at scale*tau.
///
/// Kind 3 is sum q^(scale n^2 / 2), kind 4 alternates signs, kind 2 is
/// sum q^(scale (2n+1)^2 / 8) with coefficient 2 per exponent.
pub fn theta_expansion(kind: u8, scale: Rational64, order: Rational64) -> Result<QSeries, QError> {
    if scale <= Rational64::zero() {
        return Err(QError::InvalidArgument(format!("theta scale must be positive, got {scale}")));
    }
    let trunc = units_of(order)?;
    match kind {
        3 | 4 => {
            // Exponents w n^2 with w = 72*scale lattice units.
            let w = units_of(scale / rq(2))?;
            if trunc <= 0 {
                return Err(QError::InvalidTruncation { requested: order });
            }
            let n = slot_count(0, w, trunc);
            let mut coeffs = vec![BigRational::zero(); n as usize];
            coeffs[0] = BigRational::one();
            let mut m: i64 = 1;
            while m * m < n {
                let c = if kind == 3 || m % 2 == 0 { big(2) } else { big(-2) };
                coeffs[(m * m) as usize] = c;
                m += 1;
            }
            Ok(QSeries::from_units(0, w, trunc, coeffs))
        }
        2 => {
            // Exponents v (2n+1)^2 with v = 18*scale units; relative offsets
            // ((2n+1)^2 - 1) v = 8v * n(n+1)/2 sit on stride 8v.
            let v = units_of(scale / rq(8))?;
            if trunc <= v {
                return Err(QError::InvalidTruncation { requested: order });
            }
            let n = slot_count(v, 8 * v, trunc);
            let mut coeffs = vec![BigRational::zero(); n as usize];
            let mut m: i64 = 0;
            loop {
                let idx = m * (m + 1) / 2;
                if idx >= n {
                    break;
                }
                coeffs[idx as usize] = big(2);
                m += 1;
            }
            Ok(QSeries::from_units(v, 8 * v, trunc, coeffs))
        }
        other => Err(QError::InvalidThetaKind(other)),
    }
}

/// Klein j with both construction routes cross-checked: E4^3 / Delta must
/// agree with 64 (4 t2 - 1)^3 / t2. A mismatch is a bug in this crate, so it
/// surfaces as SelfCheckFailed rather than a caller error.
fn j_two_routes(order: i64) -> Result<QSeries, QError> {
    let m = order + 2;
    let e4 = eisenstein_expansion(4, m + 1)?;
    let eta1 = eta_expansion(rq(1), rq(m + 1))?;
    let delta = eta1.powi(24);
    let j_eis = e4.powi(3).div(&delta)?;

    let t2 = t2_expansion(m)?;
    let four_t2_m1 = t2.scale_int(4).sub(&QSeries::one(t2.trunc_order())?);
    let j_eta = four_t2_m1.powi(3).scale_int(64).div(&t2)?;

    let horizon = j_eis.trunc_order().min(j_eta.trunc_order());
    if !j_eis.eq_through(&j_eta, horizon)? {
        return Err(QError::SelfCheckFailed(
            "j from E4^3/Delta disagrees with j from the t2 route".into(),
        ));
    }
    j_eis.truncate(rq(order))
}

/// Klein j-invariant: q^-1 + 744 + 196884 q + ..., known through q^(order-1).
pub fn j_expansion(order: i64) -> Result<QSeries, QError> {
    if order < 1 {
        return Err(QError::InvalidTruncation { requested: rq(order) });
    }
    j_two_routes(order)
}

fn t2_expansion(order: i64) -> Result<QSeries, QError> {
    let m = rq(order + 2);
    let num = eta_expansion(rq(2), m)?.powi(24);
    let den = eta_expansion(rq(1), m)?.powi(24);
    num.div(&den)?.scale_int(-64).truncate(rq(order))
}

fn t3_expansion(order: i64) -> Result<QSeries, QError> {
    let m = rq(order + 2);
    let num = eta_expansion(rq(3), m)?.powi(12);
    let den = eta_expansion(rq(1), m)?.powi(12);
    num.div(&den)?.scale_int(-27).truncate(rq(order))
}

fn tinf_expansion(order: i64) -> Result<QSeries, QError> {
    let m = rq(order + 4);
    let num = eta_expansion(rq(1), m)?.powi(8).mul(&eta_expansion(rq(4), m)?.powi(16));
    let den = eta_expansion(rq(2), m)?.powi(24);
    num.div(&den)?.scale_int(16).truncate(rq(order))
}

fn t23_expansion(order: i64) -> Result<QSeries, QError> {
    let j = j_two_routes(order + 2)?;
    j.inv()?.scale_int(1728).truncate(rq(order))
}

fn t24_expansion(order: i64) -> Result<QSeries, QError> {
    let m = rq(order + 4);
    let delta = eta_expansion(rq(1), m)?.powi(24);
    let delta2 = delta.substitute(2);
    let den = delta.add(&delta2.scale_int(64));
    let num = delta.mul(&delta2).scale_int(256);
    num.div(&den.powi(2))?.truncate(rq(order))
}

fn t26_expansion(order: i64) -> Result<QSeries, QError> {
    let m = rq(order + 4);
    let f = eta_expansion(rq(1), m)?.powi(12);
    let g = eta_expansion(rq(3), m)?.powi(12);
    let den = f.add(&g.scale_int(27));
    let num = f.mul(&g).scale_int(108);
    num.div(&den.powi(2))?.truncate(rq(order))
}

/// Normalized hauptmodul of the given group through q^(order-1).
///
/// Every one of the six starts c1 q + c2 q^2 + ... with integer coefficients
/// and c1 != 0; that shape is re-validated on every call.
pub fn hauptmodul_expansion(group: GroupLabel, order: i64) -> Result<QSeries, QError> {
    if order < 2 {
        return Err(QError::InvalidTruncation { requested: rq(order) });
    }
    let t = match group {
        GroupLabel::G02 => t2_expansion(order)?,
        GroupLabel::G03 => t3_expansion(order)?,
        GroupLabel::G04 => tinf_expansion(order)?,
        GroupLabel::Psl2z => t23_expansion(order)?,
        GroupLabel::G02Plus => t24_expansion(order)?,
        GroupLabel::G03Plus => t26_expansion(order)?,
    };
    if t.valuation() != Some(Rational64::one()) {
        return Err(QError::SelfCheckFailed(format!(
            "hauptmodul {} does not have valuation 1",
            group.hauptmodul_name()
        )));
    }
    if !t.has_integer_coefficients() {
        return Err(QError::SelfCheckFailed(format!(
            "hauptmodul {} has a non-integer coefficient",
            group.hauptmodul_name()
        )));
    }
    Ok(t)
}
