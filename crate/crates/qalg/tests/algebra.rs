//! Structural checks on the series arithmetic: the pentagonal-number eta
//! against the literal product, inversion, fractional powers across strides,
//! and truncation bookkeeping.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use qalg::{eta_expansion, series_div, series_mul, series_pow, theta_expansion, QSeries};

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn rq(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[test]
fn pentagonal_eta_matches_naive_product_through_200() {
    const ORDER: i64 = 200;
    // Literal finite product q^(1/24) prod_{n<=ORDER} (1 - q^n); factors
    // beyond ORDER cannot touch coefficients below q^(ORDER + 1/24).
    let mut prod = QSeries::one(rq(ORDER + 1)).unwrap();
    for n in 1..=ORDER {
        let factor = QSeries::from_terms(
            &[(rq(0), big(1)), (rq(n), big(-1))],
            rq(ORDER + 1),
        )
        .unwrap();
        prod = series_mul(&prod, &factor);
    }
    let shifted = series_mul(
        &prod,
        &QSeries::monomial(big(1), r(1, 24), rq(ORDER + 1)).unwrap(),
    );
    let eta = eta_expansion(rq(1), rq(ORDER)).unwrap();
    assert!(eta.eq_through(&shifted, rq(ORDER)).unwrap());
}

#[test]
fn difference_of_squares() {
    let t = rq(10);
    let a = QSeries::from_terms(&[(rq(0), big(1)), (rq(1), big(1))], t).unwrap();
    let b = QSeries::from_terms(&[(rq(0), big(1)), (rq(1), big(-1))], t).unwrap();
    let want = QSeries::from_terms(&[(rq(0), big(1)), (rq(2), big(-1))], t).unwrap();
    assert_eq!(series_mul(&a, &b), want);
}

#[test]
fn geometric_series_inverse() {
    let t = rq(50);
    let one_minus_q = QSeries::from_terms(&[(rq(0), big(1)), (rq(1), big(-1))], t).unwrap();
    let geo = one_minus_q.inv().unwrap();
    for n in 0..50 {
        assert_eq!(geo.coefficient_q(n).unwrap(), big(1));
    }
}

#[test]
fn division_restores_factor() {
    let eta1 = eta_expansion(rq(1), rq(40)).unwrap();
    let eta2 = eta_expansion(rq(2), rq(40)).unwrap();
    let p = series_mul(&eta1, &eta2);
    let back = series_div(&p, &eta2).unwrap();
    assert!(back.eq_through(&eta1, back.trunc_order()).unwrap());
}

#[test]
fn sqrt_of_theta_square_crosses_strides() {
    // theta3 lives on the half-integer lattice; squaring and taking the
    // exact square root must reproduce it, stride bookkeeping included.
    let t3 = theta_expansion(3, rq(1), rq(20)).unwrap();
    let back = series_pow(&t3.powi(2), r(1, 2)).unwrap();
    assert!(back.eq_through(&t3, rq(19)).unwrap());
}

#[test]
fn eta_quotient_round_trip_with_fractional_power() {
    let eta1 = eta_expansion(rq(1), rq(30)).unwrap();
    let delta = eta1.powi(24);
    let back = series_pow(&delta, r(1, 24)).unwrap();
    assert!(back.eq_through(&eta1, rq(25)).unwrap());
}
