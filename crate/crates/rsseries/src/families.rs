//! Exact coefficient families for the cataloged series.
//!
//! Each family produces the exact rational coefficients `A_j` of a
//! hypergeometric-type power series in the group's hauptmodul value.  Four
//! families cover the whole catalog:
//!
//! * `POCH3`  — cube of the central Pochhammer ratio: `A_j = ((1/2)_j / j!)^3`.
//! * `T3SUM`  — square of a `2F1(1/3, 1/3; 2/3)`-type column, written as a
//!   single finite inner sum per coefficient.
//! * `TINF`   — square of the central `2F1(1/2, 1/2; 1)` column, same shape.
//! * `GENM m` — weight-4 family of order `m ∈ {3, 4, 6}`: the Cauchy square
//!   of `(1/2)_k (1/2-1/m)_k (1/2+1/m)_k / k!^3`, again folded into one
//!   finite inner sum per coefficient.
//!
//! Everything here is exact `BigRational` arithmetic; no floating point is
//! involved.  Each group has exactly one matching family
//! ([`CoefficientRecipe::for_group`]).

use std::fmt;
use std::str::FromStr;

use arithgroup::GroupLabel;
use num_rational::BigRational;
use num_traits::One;

use crate::error::RsError;

/// Coefficient family tag.  The text forms (used in the catalog file and in
/// reports) are `POCH3`, `T3SUM`, `TINF`, and `GENM`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `A_j = ((1/2)_j / j!)^3` (weight-2, level-structure `t2` series).
    Poch3,
    /// Squared hypergeometric column with parameters `(1/3, 2/3)` (`t3`).
    T3Sum,
    /// Squared central column with parameters `(1/2, 1/2)` (`tinf`).
    TInf,
    /// Weight-4 family of order `m`; requires the order parameter.
    GenM,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::Poch3 => "POCH3",
            Family::T3Sum => "T3SUM",
            Family::TInf => "TINF",
            Family::GenM => "GENM",
        };
        f.write_str(name)
    }
}

impl FromStr for Family {
    type Err = RsError;

    fn from_str(s: &str) -> Result<Self, RsError> {
        match s {
            "POCH3" => Ok(Family::Poch3),
            "T3SUM" => Ok(Family::T3Sum),
            "TINF" => Ok(Family::TInf),
            "GENM" => Ok(Family::GenM),
            other => Err(RsError::InvalidRecipe(format!(
                "unknown family {other:?} (expected POCH3, T3SUM, TINF, or GENM)"
            ))),
        }
    }
}

/// A validated coefficient recipe: a family plus, for `GENM`, its order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoefficientRecipe {
    family: Family,
    m: Option<u32>,
}

impl CoefficientRecipe {
    /// Builds a recipe, enforcing the family/order invariant: `GENM` requires
    /// `m ∈ {3, 4, 6}` (other orders would put an integer shift into a
    /// denominator of the recurrence), the other families take no order.
    pub fn new(family: Family, m: Option<u32>) -> Result<Self, RsError> {
        match (family, m) {
            (Family::GenM, Some(m)) if matches!(m, 3 | 4 | 6) => Ok(CoefficientRecipe {
                family,
                m: Some(m),
            }),
            (Family::GenM, Some(m)) => Err(RsError::InvalidRecipe(format!(
                "GENM order must be 3, 4, or 6, got {m}"
            ))),
            (Family::GenM, None) => Err(RsError::InvalidRecipe(
                "GENM requires an order parameter".to_string(),
            )),
            (_, Some(m)) => Err(RsError::InvalidRecipe(format!(
                "family {family} takes no order parameter, got {m}"
            ))),
            (_, None) => Ok(CoefficientRecipe { family, m: None }),
        }
    }

    /// The unique family attached to each group.
    pub fn for_group(group: GroupLabel) -> CoefficientRecipe {
        let (family, m) = match group {
            GroupLabel::G02 => (Family::Poch3, None),
            GroupLabel::G03 => (Family::T3Sum, None),
            GroupLabel::G04 => (Family::TInf, None),
            GroupLabel::Psl2z => (Family::GenM, Some(3)),
            GroupLabel::G02Plus => (Family::GenM, Some(4)),
            GroupLabel::G03Plus => (Family::GenM, Some(6)),
        };
        CoefficientRecipe { family, m }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn order(&self) -> Option<u32> {
        self.m
    }

    /// An endless exact coefficient iterator: the `j`-th item is `A_j`.
    pub fn stream(&self) -> CoefficientStream {
        CoefficientStream::new(self)
    }
}

impl fmt::Display for CoefficientRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            Some(m) => write!(f, "{} {m}", self.family),
            None => write!(f, "{}", self.family),
        }
    }
}

/// The `j`-th exact coefficient of the recipe.  Cost is `O(j^2)`; when a
/// whole prefix is needed, prefer [`coefficients`] or [`CoefficientRecipe::stream`].
pub fn coeff(recipe: &CoefficientRecipe, j: usize) -> BigRational {
    recipe
        .stream()
        .nth(j)
        .expect("coefficient stream is endless")
}

/// The exact coefficients `A_0 ... A_{count-1}`.
pub fn coefficients(recipe: &CoefficientRecipe, count: usize) -> Vec<BigRational> {
    recipe.stream().take(count).collect()
}

fn br(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `base + n` without re-normalizing through `BigRational::add` twice.
fn shifted(base: &BigRational, n: i64) -> BigRational {
    base + br(n)
}

/// Streaming coefficient generator.  The running prefactor is updated by a
/// single rational ratio per step; families with an inner sum recompute that
/// sum exactly per coefficient (`O(j)` work at index `j`).
pub struct CoefficientStream {
    j: i64,
    state: StreamState,
}

enum StreamState {
    Poch3 {
        /// `(1/2)_j / j!`.
        ratio: BigRational,
    },
    HyperSq {
        aa: BigRational,
        cc: BigRational,
        /// `((aa)_j / j!)^2`.
        pref: BigRational,
    },
    GenM {
        half: BigRational,
        lo: BigRational,
        hi: BigRational,
        /// `(half)_j (lo)_j (hi)_j / j!^3`.
        pref: BigRational,
    },
}

impl CoefficientStream {
    fn new(recipe: &CoefficientRecipe) -> CoefficientStream {
        let state = match recipe.family {
            Family::Poch3 => StreamState::Poch3 {
                ratio: BigRational::one(),
            },
            Family::T3Sum => StreamState::HyperSq {
                aa: frac(1, 3),
                cc: frac(2, 3),
                pref: BigRational::one(),
            },
            Family::TInf => StreamState::HyperSq {
                aa: frac(1, 2),
                cc: frac(1, 2),
                pref: BigRational::one(),
            },
            Family::GenM => {
                let m = i64::from(recipe.m.expect("validated at construction"));
                StreamState::GenM {
                    half: frac(1, 2),
                    lo: frac(1, 2) - frac(1, m),
                    hi: frac(1, 2) + frac(1, m),
                    pref: BigRational::one(),
                }
            }
        };
        CoefficientStream { j: 0, state }
    }
}

impl Iterator for CoefficientStream {
    type Item = BigRational;

    fn next(&mut self) -> Option<BigRational> {
        let j = self.j;
        self.j += 1;
        let value = match &mut self.state {
            StreamState::Poch3 { ratio } => {
                if j > 0 {
                    *ratio *= frac(2 * j - 1, 2 * j);
                }
                ratio.clone() * ratio.clone() * ratio.clone()
            }
            StreamState::HyperSq { aa, cc, pref } => {
                if j > 0 {
                    let step = (shifted(aa, j - 1)) / br(j);
                    *pref *= step.clone() * step;
                }
                pref.clone() * hyper_sq_inner(aa, cc, j)
            }
            StreamState::GenM { half, lo, hi, pref } => {
                if j > 0 {
                    *pref *= shifted(half, j - 1) * shifted(lo, j - 1) * shifted(hi, j - 1)
                        / (br(j) * br(j) * br(j));
                }
                pref.clone() * gen_m_inner(half, lo, hi, j)
            }
        };
        Some(value)
    }
}

/// `sum_{k=0}^{j} t_k` with `t_0 = 1` and
/// `t_{k+1}/t_k = (k-j)^2 (k+aa)^2 / ((k+1)^2 (k+cc-j)^2)`.
fn hyper_sq_inner(aa: &BigRational, cc: &BigRational, j: i64) -> BigRational {
    let mut t = BigRational::one();
    let mut sum = BigRational::one();
    for k in 0..j {
        let num = br(k - j) * br(k - j) * shifted(aa, k) * shifted(aa, k);
        let den = br(k + 1) * br(k + 1) * shifted(cc, k - j) * shifted(cc, k - j);
        t *= num / den;
        sum += t.clone();
    }
    sum
}

/// `sum_{n=0}^{j} t_n` with `t_0 = 1` and
/// `t_{n+1}/t_n = (n-j)^3 (n+half)(n+lo)(n+hi)
///              / ((n+half-j)(n+hi-j)(n+lo-j)(n+1)^3)`.
fn gen_m_inner(
    half: &BigRational,
    lo: &BigRational,
    hi: &BigRational,
    j: i64,
) -> BigRational {
    let mut t = BigRational::one();
    let mut sum = BigRational::one();
    for n in 0..j {
        let nm = br(n - j);
        let num = nm.clone() * nm.clone() * nm * shifted(half, n) * shifted(lo, n) * shifted(hi, n);
        let den = shifted(half, n - j)
            * shifted(hi, n - j)
            * shifted(lo, n - j)
            * (br(n + 1) * br(n + 1) * br(n + 1));
        t *= num / den;
        sum += t.clone();
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poch3_small_values() {
        let r = CoefficientRecipe::new(Family::Poch3, None).unwrap();
        assert_eq!(coeff(&r, 0), br(1));
        assert_eq!(coeff(&r, 1), frac(1, 8));
        assert_eq!(coeff(&r, 2), frac(27, 512));
    }

    #[test]
    fn small_values_other_families() {
        let t3 = CoefficientRecipe::new(Family::T3Sum, None).unwrap();
        assert_eq!(coeff(&t3, 1), frac(2, 9));
        let tinf = CoefficientRecipe::new(Family::TInf, None).unwrap();
        assert_eq!(coeff(&tinf, 1), frac(1, 2));
        assert_eq!(coeff(&tinf, 2), frac(11, 32));
        let g3 = CoefficientRecipe::new(Family::GenM, Some(3)).unwrap();
        assert_eq!(coeff(&g3, 1), frac(5, 36));
    }

    #[test]
    fn recipe_validation() {
        assert!(CoefficientRecipe::new(Family::GenM, None).is_err());
        assert!(CoefficientRecipe::new(Family::GenM, Some(5)).is_err());
        assert!(CoefficientRecipe::new(Family::GenM, Some(2)).is_err());
        assert!(CoefficientRecipe::new(Family::Poch3, Some(3)).is_err());
        assert!(CoefficientRecipe::new(Family::GenM, Some(6)).is_ok());
    }

    #[test]
    fn stream_matches_coeff_and_is_positive() {
        for group in GroupLabel::ALL {
            let r = CoefficientRecipe::for_group(group);
            let prefix = coefficients(&r, 12);
            for (j, a) in prefix.iter().enumerate() {
                assert!(a > &br(0), "{r}: A_{j} not positive");
                assert_eq!(a, &coeff(&r, j), "{r}: stream/nth mismatch at {j}");
            }
        }
    }
}
