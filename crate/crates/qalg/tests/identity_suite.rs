//! The named identity suite run deep enough for every Sturm certificate.

use qalg::identities::{run_exact_identity, run_exact_suite, EXACT_IDENTITY_NAMES};
use qalg::QError;

#[test]
fn full_suite_is_exact_and_certified_through_q100() {
    let checks = run_exact_suite(101).unwrap();
    assert_eq!(checks.len(), EXACT_IDENTITY_NAMES.len());
    for c in checks {
        assert!(c.exact, "{}: first nonzero at {:?}", c.name, c.first_nonzero);
        assert_eq!(c.sturm, Some(true), "{}: certificate missing", c.name);
        assert!(c.checked_through >= qalg::Rational64::from_integer(100), "{}", c.name);
    }
}

#[test]
fn short_expansion_reports_uncertified_not_false() {
    // Weight 2 at index 6 needs strictly more than bound 1 + slack 5.
    let c = run_exact_identity("jacobi", 6).unwrap();
    assert!(c.exact);
    assert_eq!(c.sturm, None);
    let c = run_exact_identity("jacobi", 7).unwrap();
    assert_eq!(c.sturm, Some(true));
}

#[test]
fn unknown_name_is_rejected() {
    assert!(matches!(
        run_exact_identity("nonsense", 20),
        Err(QError::InvalidArgument(_))
    ));
}
