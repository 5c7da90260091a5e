//! Exact formal q-expansions with fractional exponents.
//!
//! A [`QSeries`] is a truncated expansion sum c_e q^e + O(q^trunc) whose
//! exponents live on the lattice (1/144)Z. Internally exponents are stored
//! as integer multiples of 1/144 ("units"); 144 is divisible by every
//! denominator the constructors here can produce (eta scales down to tau/3,
//! theta scales down to tau/2, and their quotients).
//!
//! Representation invariants:
//!   * coefficients sit densely on lead + k*stride for all exponents < trunc,
//!   * every exponent below trunc that is NOT on that sublattice is exactly 0,
//!   * canonical form strips leading zeros and coarsens stride by the gcd of
//!     the surviving offsets, so equal series have equal fields.
//!
//! The second invariant is what makes stride-coarsening sound: a series only
//! ever "forgets" slots that are known to be zero.

mod error;
mod expand;
pub mod identities;

pub use error::QError;
pub use expand::{
    e2n_expansion, eisenstein_expansion, eta_expansion, hauptmodul_expansion, j_expansion,
    theta_expansion,
};

pub use arithgroup::GroupLabel;
pub use num_bigint::BigInt;
pub use num_rational::{BigRational, Rational64};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Denominator of the exponent lattice: exponents are multiples of 1/144.
pub const LATTICE_DEN: i64 = 144;

/// Extra q-orders demanded beyond the Sturm bound before certifying.
pub const STURM_SLACK_Q: i64 = 5;

/// Truncated q-expansion with exact rational coefficients.
#[derive(Clone, Debug)]
pub struct QSeries {
    /// Exponent of the first stored slot, in 1/144 units.
    lead: i64,
    /// Distance between stored slots, in 1/144 units. Always >= 1.
    stride: i64,
    /// Knowledge horizon, in 1/144 units: coefficients at exponents >= trunc
    /// are unknown.
    trunc: i64,
    /// Dense slot coefficients; empty means no nonzero coefficient is known.
    coeffs: Vec<BigRational>,
}

/// Converts an exponent to lattice units, rejecting off-lattice values.
fn units_of(e: Rational64) -> Result<i64, QError> {
    let den = *e.denom();
    if LATTICE_DEN % den != 0 {
        return Err(QError::OffLattice { exponent: e });
    }
    Ok(e.numer() * (LATTICE_DEN / den))
}

fn q_of(units: i64) -> Rational64 {
    Rational64::new(units, LATTICE_DEN)
}

/// Number of dense slots with exponent below `trunc`.
fn slot_count(lead: i64, stride: i64, trunc: i64) -> i64 {
    if trunc <= lead {
        0
    } else {
        (trunc - lead + stride - 1).div_euclid(stride)
    }
}

impl QSeries {
    /// Builds from raw unit-lattice data and canonicalizes. Internal.
    fn from_units(lead: i64, stride: i64, trunc: i64, coeffs: Vec<BigRational>) -> Self {
        debug_assert!(stride >= 1);
        debug_assert_eq!(coeffs.len() as i64, slot_count(lead, stride, trunc));
        QSeries { lead, stride, trunc, coeffs }.canonicalized()
    }

    /// The zero series 0 + O(q^trunc).
    pub fn zero(trunc: Rational64) -> Result<Self, QError> {
        let t = units_of(trunc)?;
        Ok(QSeries { lead: t, stride: LATTICE_DEN, trunc: t, coeffs: Vec::new() })
    }

    /// The constant series 1 + O(q^trunc).
    pub fn one(trunc: Rational64) -> Result<Self, QError> {
        Self::monomial(BigRational::one(), Rational64::zero(), trunc)
    }

    /// A single term c q^e + O(q^trunc). Terms at or beyond trunc vanish.
    pub fn monomial(c: BigRational, e: Rational64, trunc: Rational64) -> Result<Self, QError> {
        let eu = units_of(e)?;
        let t = units_of(trunc)?;
        if c.is_zero() || eu >= t {
            return Self::zero(trunc);
        }
        Ok(Self::from_units(eu, (t - eu).max(1), t, vec![c]))
    }

    /// Builds from explicit (exponent, coefficient) terms.
    pub fn from_terms(terms: &[(Rational64, BigRational)], trunc: Rational64) -> Result<Self, QError> {
        let t = units_of(trunc)?;
        let mut us = Vec::with_capacity(terms.len());
        for (e, _) in terms {
            us.push(units_of(*e)?);
        }
        let live: Vec<(i64, &BigRational)> = us
            .iter()
            .zip(terms.iter())
            .filter(|(u, (_, c))| **u < t && !c.is_zero())
            .map(|(u, (_, c))| (*u, c))
            .collect();
        if live.is_empty() {
            return Self::zero(trunc);
        }
        let lead = live.iter().map(|(u, _)| *u).min().expect("nonempty");
        let mut stride = 0i64;
        for (u, _) in &live {
            stride = stride.gcd(&(u - lead));
        }
        if stride == 0 {
            stride = (t - lead).max(1);
        }
        let n = slot_count(lead, stride, t) as usize;
        let mut coeffs = vec![BigRational::zero(); n];
        for (u, c) in live {
            coeffs[((u - lead) / stride) as usize] += c.clone();
        }
        Ok(Self::from_units(lead, stride, t, coeffs))
    }

    fn canonicalized(mut self) -> Self {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            None => {
                self.lead = self.trunc;
                self.stride = LATTICE_DEN;
                self.coeffs.clear();
            }
            Some(f) => {
                if f > 0 {
                    self.lead += f as i64 * self.stride;
                    self.coeffs.drain(..f);
                }
                let mut g: i64 = 0;
                for (k, c) in self.coeffs.iter().enumerate().skip(1) {
                    if !c.is_zero() {
                        g = g.gcd(&(k as i64));
                        if g == 1 {
                            break;
                        }
                    }
                }
                if g == 0 {
                    // Single nonzero term: widen the stride across the window.
                    self.coeffs.truncate(1);
                    self.stride = (self.trunc - self.lead).max(1);
                } else if g > 1 {
                    let stride = self.stride * g;
                    let n = slot_count(self.lead, stride, self.trunc);
                    let mut out = Vec::with_capacity(n as usize);
                    for m in 0..n {
                        out.push(self.coeffs[(m * g) as usize].clone());
                    }
                    self.coeffs = out;
                    self.stride = stride;
                }
            }
        }
        self
    }

    /// Truncation order: coefficients at exponents >= this are unknown.
    pub fn trunc_order(&self) -> Rational64 {
        q_of(self.trunc)
    }

    /// Exponent of the first known nonzero term, if any.
    pub fn valuation(&self) -> Option<Rational64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|k| q_of(self.lead + k as i64 * self.stride))
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Coefficient of q^e. Exponents below trunc that are off the stored
    /// sublattice are exactly zero; at or beyond trunc is an error.
    pub fn coefficient(&self, e: Rational64) -> Result<BigRational, QError> {
        let u = match units_of(e) {
            Ok(u) => u,
            // Off the 1/144 lattice entirely: no constructor puts mass there.
            Err(_) => return Ok(BigRational::zero()),
        };
        if u >= self.trunc {
            return Err(QError::AboveTruncation { exponent: e, trunc: self.trunc_order() });
        }
        if u < self.lead || (u - self.lead) % self.stride != 0 {
            return Ok(BigRational::zero());
        }
        Ok(self.coeffs[((u - self.lead) / self.stride) as usize].clone())
    }

    /// Coefficient of the integer power q^n.
    pub fn coefficient_q(&self, n: i64) -> Result<BigRational, QError> {
        self.coefficient(Rational64::from_integer(n))
    }

    /// Known nonzero terms in exponent order.
    pub fn iter_terms(&self) -> impl Iterator<Item = (Rational64, &BigRational)> {
        let lead = self.lead;
        let stride = self.stride;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (q_of(lead + k as i64 * stride), c))
    }

    /// True when every known coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Lowers the truncation horizon. Raising it would claim unknown terms.
    pub fn truncate(&self, order: Rational64) -> Result<Self, QError> {
        let t = units_of(order)?;
        if t > self.trunc {
            return Err(QError::InvalidArgument(format!(
                "cannot extend truncation from O(q^{}) to O(q^{})",
                self.trunc_order(),
                order
            )));
        }
        let n = slot_count(self.lead, self.stride, t).max(0) as usize;
        let coeffs = self.coeffs[..n.min(self.coeffs.len())].to_vec();
        Ok(Self::from_units(self.lead, self.stride, t, coeffs))
    }

    /// Sum; the result is known through the smaller horizon.
    pub fn add(&self, rhs: &Self) -> Self {
        let trunc = self.trunc.min(rhs.trunc);
        let parts: Vec<&QSeries> =
            [self, rhs].into_iter().filter(|s| !s.coeffs.is_empty()).collect();
        if parts.is_empty() {
            return QSeries { lead: trunc, stride: LATTICE_DEN, trunc, coeffs: Vec::new() };
        }
        let lead = parts.iter().map(|s| s.lead).min().expect("nonempty");
        let mut stride = 0i64;
        for s in &parts {
            stride = stride.gcd(&s.stride).gcd(&(s.lead - lead));
        }
        debug_assert!(stride >= 1);
        let n = slot_count(lead, stride, trunc);
        let mut coeffs = vec![BigRational::zero(); n as usize];
        for s in parts {
            for (k, c) in s.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let u = s.lead + k as i64 * s.stride;
                if u >= trunc {
                    break;
                }
                coeffs[((u - lead) / stride) as usize] += c.clone();
            }
        }
        Self::from_units(lead, stride, trunc, coeffs)
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = -std::mem::replace(c, BigRational::zero());
        }
        out
    }

    /// Difference; the result is known through the smaller horizon.
    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Scales every coefficient by a rational constant.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return QSeries {
                lead: self.trunc,
                stride: LATTICE_DEN,
                trunc: self.trunc,
                coeffs: Vec::new(),
            };
        }
        let mut out = self.clone();
        for v in &mut out.coeffs {
            *v *= c.clone();
        }
        out
    }

    /// Scales every coefficient by an integer constant.
    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    /// Product. Known through min(trunc_a + lead_b, trunc_b + lead_a): the
    /// unknown tail of one factor meets the leading term of the other first.
    pub fn mul(&self, rhs: &Self) -> Self {
        let trunc = (self.trunc + rhs.lead).min(rhs.trunc + self.lead);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return QSeries { lead: trunc, stride: LATTICE_DEN, trunc, coeffs: Vec::new() };
        }
        let lead = self.lead + rhs.lead;
        let stride = self.stride.gcd(&rhs.stride);
        let n = slot_count(lead, stride, trunc);
        let mut coeffs = vec![BigRational::zero(); n as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ua = self.lead + i as i64 * self.stride;
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let u = ua + rhs.lead + j as i64 * rhs.stride;
                if u >= trunc {
                    break;
                }
                coeffs[((u - lead) / stride) as usize] += a * b;
            }
        }
        Self::from_units(lead, stride, trunc, coeffs)
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn powi(&self, e: u32) -> Self {
        if e == 0 {
            return QSeries {
                lead: 0,
                stride: (self.trunc).max(1),
                trunc: self.trunc,
                coeffs: vec![BigRational::one()],
            }
            .canonicalized();
        }
        let mut base = self.clone();
        let mut acc: Option<QSeries> = None;
        let mut e = e;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        acc.expect("e >= 1")
    }

    /// Multiplicative inverse. The leading coefficient may be any nonzero
    /// rational; the relative window (trunc - lead) is preserved.
    pub fn inv(&self) -> Result<Self, QError> {
        if self.is_zero() {
            return Err(QError::DivisionByZero);
        }
        let s = self.clone().canonicalized();
        let n = s.coeffs.len();
        let c0 = &s.coeffs[0];
        let mut out = Vec::with_capacity(n);
        out.push(c0.recip());
        for m in 1..n {
            let mut acc = BigRational::zero();
            for k in 1..=m {
                if !s.coeffs[k].is_zero() {
                    acc += &s.coeffs[k] * &out[m - k];
                }
            }
            out.push(-acc / c0);
        }
        Ok(Self::from_units(-s.lead, s.stride, s.trunc - 2 * s.lead, out))
    }

    /// Quotient self / rhs.
    pub fn div(&self, rhs: &Self) -> Result<Self, QError> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Rational power. Integer exponents allow any nonzero leading
    /// coefficient; fractional exponents require leading coefficient 1 and a
    /// leading exponent that stays on the lattice.
    pub fn pow(&self, r: Rational64) -> Result<Self, QError> {
        if r.is_integer() {
            let n = r.to_integer();
            return if n >= 0 {
                Ok(self.powi(n as u32))
            } else {
                Ok(self.inv()?.powi((-n) as u32))
            };
        }
        if self.is_zero() {
            return Err(QError::InvalidArgument(
                "fractional power of a series with no known nonzero term".into(),
            ));
        }
        let s = self.clone().canonicalized();
        if !s.coeffs[0].is_one() {
            return Err(QError::NonUnitLeadingCoefficient);
        }
        // New leading exponent r*lead must land back on the unit lattice.
        let num = *r.numer();
        let den = *r.denom();
        if (s.lead * num) % den != 0 {
            return Err(QError::FractionalPowerOffLattice { lead: q_of(s.lead), exponent: r });
        }
        let new_lead = s.lead * num / den;
        let rb = BigRational::new(BigInt::from(num), BigInt::from(den));
        // Power series exponentiation on the relative part 1 + u:
        // n g_n = sum_{k=1..n} ((r+1)k - n) a_k g_{n-k}.
        let n = s.coeffs.len();
        let mut g = Vec::with_capacity(n);
        g.push(BigRational::one());
        let rp1 = &rb + BigRational::one();
        for m in 1..n {
            let mut acc = BigRational::zero();
            for k in 1..=m {
                if s.coeffs[k].is_zero() {
                    continue;
                }
                let w = &rp1 * BigRational::from_integer(BigInt::from(k as i64))
                    - BigRational::from_integer(BigInt::from(m as i64));
                acc += w * (&s.coeffs[k] * &g[m - k]);
            }
            g.push(acc / BigRational::from_integer(BigInt::from(m as i64)));
        }
        Ok(Self::from_units(new_lead, s.stride, new_lead + (s.trunc - s.lead), g))
    }

    /// Euler operator q d/dq: multiplies each coefficient by its exponent.
    pub fn q_derivative(&self) -> Self {
        let mut out = self.clone();
        for (k, c) in out.coeffs.iter_mut().enumerate() {
            let e = BigRational::new(
                BigInt::from(self.lead + k as i64 * self.stride),
                BigInt::from(LATTICE_DEN),
            );
            *c *= e;
        }
        out.canonicalized()
    }

    /// Substitution q -> q^n.
    pub fn substitute(&self, n: u32) -> Self {
        let n = n as i64;
        debug_assert!(n >= 1);
        QSeries {
            lead: self.lead * n,
            stride: self.stride * n,
            trunc: self.trunc * n,
            coeffs: self.coeffs.clone(),
        }
        .canonicalized()
    }

    /// True when both series agree on every coefficient below `order`.
    pub fn eq_through(&self, rhs: &Self, order: Rational64) -> Result<bool, QError> {
        let t = units_of(order)?;
        if t > self.trunc || t > rhs.trunc {
            return Err(QError::AboveTruncation {
                exponent: order,
                trunc: q_of(self.trunc.min(rhs.trunc)),
            });
        }
        Ok(self.sub(rhs).truncate(order)?.is_zero())
    }
}

impl PartialEq for QSeries {
    /// Semantic equality: same horizon and same coefficient function below it.
    fn eq(&self, other: &Self) -> bool {
        let a = self.clone().canonicalized();
        let b = other.clone().canonicalized();
        a.lead == b.lead && a.stride == b.stride && a.trunc == b.trunc && a.coeffs == b.coeffs
    }
}

impl Eq for QSeries {}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const MAX_TERMS: usize = 8;
        let mut printed = 0usize;
        let mut first = true;
        for (e, c) in self.iter_terms() {
            if printed == MAX_TERMS {
                write!(f, " + ...")?;
                break;
            }
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || e.is_zero();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if !e.is_zero() {
                if show_coeff {
                    write!(f, "*")?;
                }
                if e.is_integer() {
                    if e.to_integer() == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{}", e.to_integer())?;
                    }
                } else {
                    write!(f, "q^({e})")?;
                }
            }
            printed += 1;
        }
        if first {
            write!(f, "0")?;
        }
        let t = self.trunc_order();
        if t.is_integer() {
            write!(f, " + O(q^{})", t.to_integer())
        } else {
            write!(f, " + O(q^({t}))")
        }
    }
}

impl std::ops::Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        QSeries::add(self, rhs)
    }
}

impl std::ops::Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        QSeries::sub(self, rhs)
    }
}

impl std::ops::Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        QSeries::mul(self, rhs)
    }
}

/// Product of two series. Method alias with the catalog operation name.
pub fn series_mul(a: &QSeries, b: &QSeries) -> QSeries {
    a.mul(b)
}

/// Quotient of two series.
pub fn series_div(a: &QSeries, b: &QSeries) -> Result<QSeries, QError> {
    a.div(b)
}

/// Rational power of a series.
pub fn series_pow(a: &QSeries, r: Rational64) -> Result<QSeries, QError> {
    a.pow(r)
}

/// Euler operator q d/dq.
pub fn q_derivative(a: &QSeries) -> QSeries {
    a.q_derivative()
}

/// Sturm-style dimension bound, in q-orders, for holomorphic forms of the
/// given even weight: k*index/12 on Hecke-type groups, k*index/24 on the
/// plus (Fricke-extended) groups, whose smallest cusp width is 1/2.
pub fn sturm_bound_q(weight: u32, group: GroupLabel) -> Rational64 {
    sturm_bound_q_at_index(weight, group.index(), group.is_plus())
}

/// Sturm-style bound from an explicit index and cusp-width convention.
pub fn sturm_bound_q_at_index(weight: u32, index: u32, plus: bool) -> Rational64 {
    Rational64::new((weight as i64) * (index as i64), if plus { 24 } else { 12 })
}

/// Certifies that a q-expansion is the zero modular form.
///
/// The caller asserts `f` is a holomorphic modular form of the given even
/// weight on the given group; under that hypothesis, vanishing through the
/// Sturm bound forces the form to vanish identically. Demands the series be
/// known strictly beyond bound + STURM_SLACK_Q, then returns true iff every
/// available coefficient is zero.
pub fn sturm_verify(f: &QSeries, weight: u32, group: GroupLabel) -> Result<bool, QError> {
    sturm_verify_at_index(f, weight, group.index(), group.is_plus())
}

/// Sturm certification against an explicit index. Lets callers use a
/// conservative over-estimate of the index for forms on intersections of
/// the cataloged groups.
pub fn sturm_verify_at_index(
    f: &QSeries,
    weight: u32,
    index: u32,
    plus: bool,
) -> Result<bool, QError> {
    if weight % 2 != 0 {
        return Err(QError::InvalidArgument(format!(
            "Sturm certification here is stated for even weight, got {weight}"
        )));
    }
    let needed = sturm_bound_q_at_index(weight, index, plus)
        + Rational64::from_integer(STURM_SLACK_Q);
    let have = f.trunc_order();
    if have <= needed {
        return Err(QError::InsufficientTruncation { needed, have });
    }
    Ok(f.is_zero())
}
