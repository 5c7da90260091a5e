//! Rational-coefficient series for `1/pi` and its Gamma-weighted powers.
//!
//! This crate is the top of the stack: it combines the exact q-series
//! algebra, the arbitrary-precision evaluators, the constant-expression
//! tables, and the modular-polynomial derivatives into a catalog of eleven
//! certified series, together with the machinery to re-derive and verify
//! each one from first principles:
//!
//! * [`families`] — the four exact coefficient families (`POCH3`, `T3SUM`,
//!   `TINF`, `GENM m`), streamed as exact rationals;
//! * [`catalog`] — the embedded series catalog with closed-form constants as
//!   parsed algebraic expressions;
//! * [`zq`] — the recipe composition `Z = X^{e0}(1-X)^{e1} sum A_j X^j`
//!   checked coefficient-exactly with Sturm certificates;
//! * [`constants`] — re-derivation of `(a, b, x0)` from the group, level,
//!   and quadratic point alone;
//! * [`summation`] — tail-bounded arbitrary-precision summation and
//!   certification against the closed-form targets;
//! * [`checks`] — high-precision residuals of the underlying
//!   logarithmic-derivative identity and the scaling transformation;
//! * [`identities`] — the 42-name identity suite spanning all of the above.

pub mod catalog;
pub mod checks;
pub mod constants;
pub mod error;
pub mod families;
pub mod identities;
pub mod summation;
pub mod zq;

pub use catalog::{catalog, find_series, parse_series_catalog, series_ids, SeriesSpec};
pub use checks::{lemma_transform_check, tau0_from_gamma, theorem_identity_check};
pub use constants::{derive_constants, DerivedConstants};
pub use error::RsError;
pub use families::{coeff, coefficients, CoefficientRecipe, CoefficientStream, Family};
pub use identities::{
    identity_names, run_identity, run_identity_suite, IdentityOutcome, IdentityStatus,
};
pub use summation::{certify, sum_series, sum_series_detail, CertReport};
pub use zq::{recipe_qexpansion, recipe_z_check, z_expansion, RecipeZCheck};

pub use arithgroup::GroupLabel;
pub use specfun::PrecisionContext;
