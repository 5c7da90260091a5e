//! Modular-equation catalog with two independent consumers:
//!
//! * **Exact certification** ([`verify_relation_qseries`]): substitutes the
//!   group's integral hauptmodul q-expansion for X and its q -> q^level
//!   rescaling for Y and demands every coefficient of Phi(X, Y) vanish.
//! * **Implicit differentiation** ([`implicit_derivatives`], [`dmn_dx`],
//!   [`multiplier_at`]): at a numeric point of the curve, produces dY/dX
//!   and d^2Y/dX^2 by the implicit function theorem and from them the
//!   multiplier M = Z(tau)/Z(level*tau) and its derivative dM/dX, the
//!   quantity the series-construction corollaries consume.
//!
//! [`fd_dmdx`] is a catalog-free finite-difference route to the same
//! derivative, kept as a cross-check.

mod catalog;
mod derivs;
mod error;
mod qcheck;

pub use catalog::{
    catalog, find, find_for_group, parse_catalog, ModularPolynomial, MonomialTerm,
};
pub use derivs::{
    dmn_dx, fd_dmdx, implicit_derivatives, multiplier_at, phi_eval, DerivativeBundle,
    MultiplierAnalysis, MultiplierDerivative, MultiplierRoute,
};
pub use error::ModPolyError;
pub use qcheck::{phi_eval_qseries, verify_relation_qseries, RelationCheck, MIN_QSERIES_ORDER};
