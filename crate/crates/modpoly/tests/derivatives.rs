//! Implicit differentiation at the eleven evaluation points of the series
//! catalog: the closed-form values of dM/dX, the branch slopes at the
//! involution fixed points, the multiplier against its direct definition,
//! and an independent finite-difference route.

use modpoly::{
    fd_dmdx, find, implicit_derivatives, multiplier_at, ModPolyError, MultiplierRoute,
};
use rug::Float;
use specfun::{eval_z, APComplex, GroupLabel, PrecisionContext};

struct Point {
    name: &'static str,
    group: GroupLabel,
    level: u32,
    /// (re, im) of tau0 as exact Float builders.
    tau0: fn(&PrecisionContext) -> APComplex,
    /// Closed form of dM/dX at tau0.
    expected_dm: fn(&PrecisionContext) -> Float,
    /// The branch slope dY/dX when it is exactly +-1 (involution fixed
    /// points); None when it is a generic algebraic number.
    unit_slope: Option<i64>,
}

fn sqrt(ctx: &PrecisionContext, n: i64) -> Float {
    ctx.float_from_i64(n).sqrt()
}

fn on_axis(ctx: &PrecisionContext, im: Float) -> APComplex {
    APComplex::new(ctx.float_from_i64(0), im)
}

fn ratio(num: Float, den: Float) -> Float {
    num / den
}

const POINTS: [Point; 11] = [
    Point {
        name: "sect4ex1",
        group: GroupLabel::G02,
        level: 3,
        tau0: |c| on_axis(c, sqrt(c, 6).recip()),
        // 12 - 17/sqrt(2)
        expected_dm: |c| c.float_from_i64(12) - ratio(c.float_from_i64(17), sqrt(c, 2)),
        unit_slope: None,
    },
    Point {
        name: "sect4ex2",
        group: GroupLabel::G02,
        level: 5,
        tau0: |c| on_axis(c, sqrt(c, 10).recip()),
        // (1440 - 644 sqrt(5)) / 9
        expected_dm: |c| {
            ratio(c.float_from_i64(1440) - c.float_from_i64(644) * sqrt(c, 5), c.float_from_i64(9))
        },
        unit_slope: None,
    },
    Point {
        name: "sect4ex3",
        group: GroupLabel::G02,
        level: 3,
        // (3 + i sqrt(3)) / 6
        tau0: |c| {
            APComplex::new(
                c.float_from_r64(num_rational::Rational64::new(1, 2)),
                sqrt(c, 3) / 6u32,
            )
        },
        expected_dm: |c| c.float_from_i64(8),
        unit_slope: Some(-1),
    },
    Point {
        name: "sect4ex4",
        group: GroupLabel::G02,
        level: 5,
        // 1/2 + i / (2 sqrt(5))
        tau0: |c| {
            APComplex::new(
                c.float_from_r64(num_rational::Rational64::new(1, 2)),
                (sqrt(c, 5) * 2u32).recip(),
            )
        },
        // 15 + 27 sqrt(5) / 4
        expected_dm: |c| c.float_from_i64(15) + ratio(c.float_from_i64(27) * sqrt(c, 5), c.float_from_i64(4)),
        unit_slope: Some(-1),
    },
    Point {
        name: "sect4ex5",
        group: GroupLabel::G03,
        level: 2,
        tau0: |c| on_axis(c, sqrt(c, 6).recip()),
        // (4 - 3 sqrt(2)) / 3
        expected_dm: |c| ratio(c.float_from_i64(4) - c.float_from_i64(3) * sqrt(c, 2), c.float_from_i64(3)),
        unit_slope: None,
    },
    Point {
        name: "g04ex",
        group: GroupLabel::G04,
        level: 2,
        // i / (2 sqrt(2))
        tau0: |c| on_axis(c, (sqrt(c, 2) * 2u32).recip()),
        // sqrt(2) + 2
        expected_dm: |c| sqrt(c, 2) + 2u32,
        unit_slope: Some(1),
    },
    Point {
        name: "m3n2",
        group: GroupLabel::Psl2z,
        level: 2,
        tau0: |c| on_axis(c, sqrt(c, 2).recip()),
        // -500/63
        expected_dm: |c| ratio(c.float_from_i64(-500), c.float_from_i64(63)),
        unit_slope: Some(-1),
    },
    Point {
        name: "m3n3",
        group: GroupLabel::Psl2z,
        level: 3,
        tau0: |c| on_axis(c, sqrt(c, 3).recip()),
        // -1125/11
        expected_dm: |c| ratio(c.float_from_i64(-1125), c.float_from_i64(11)),
        unit_slope: Some(-1),
    },
    Point {
        name: "m4n3",
        group: GroupLabel::G02Plus,
        level: 3,
        tau0: |c| on_axis(c, sqrt(c, 6).recip()),
        // -81/2
        expected_dm: |c| ratio(c.float_from_i64(-81), c.float_from_i64(2)),
        unit_slope: Some(-1),
    },
    Point {
        name: "m6n2",
        group: GroupLabel::G03Plus,
        level: 2,
        tau0: |c| on_axis(c, sqrt(c, 6).recip()),
        // -16/3
        expected_dm: |c| ratio(c.float_from_i64(-16), c.float_from_i64(3)),
        unit_slope: Some(-1),
    },
    Point {
        name: "m6n5",
        group: GroupLabel::G03Plus,
        level: 5,
        tau0: |c| on_axis(c, sqrt(c, 15).recip()),
        // -12500/33
        expected_dm: |c| ratio(c.float_from_i64(-12500), c.float_from_i64(33)),
        unit_slope: Some(-1),
    },
];

fn assert_close(name: &str, what: &str, got: &APComplex, want: &APComplex, tol: &Float) {
    let err = got.dist(want);
    let mut bar = want.abs();
    if bar < 1 {
        bar = Float::with_val(bar.prec(), 1);
    }
    assert!(
        err < tol.clone() * bar,
        "{name} {what}: got {:?}, want {:?}",
        got,
        want
    );
}

fn tol(ctx: &PrecisionContext, e: i32) -> Float {
    use rug::ops::Pow;
    Float::with_val(ctx.prec_bits(), 10u32).pow(e)
}

/// Criterion: every closed-form derivative value is reproduced by implicit
/// differentiation to 40 digits (checked at 60 to leave the tolerance
/// honest), with exact unit slopes at the involution fixed points, and the
/// multiplier value matching its defining ratio of weight forms.
#[test]
fn implicit_derivatives_match_the_closed_forms_at_all_eleven_points() {
    let ctx = PrecisionContext::new(60).unwrap();
    for pt in &POINTS {
        let tau0 = (pt.tau0)(&ctx);
        let analysis = multiplier_at(&ctx, pt.group, pt.level, &tau0)
            .unwrap_or_else(|e| panic!("{}: {e}", pt.name));
        let want_dm = APComplex::from_real((pt.expected_dm)(&ctx));
        assert_close(pt.name, "dM/dX", &analysis.dm, &want_dm, &tol(&ctx, -40));

        if let Some(s) = pt.unit_slope {
            let want_p = APComplex::from_real(ctx.float_from_i64(s));
            assert_close(pt.name, "branch slope", &analysis.bundle.p, &want_p, &tol(&ctx, -50));
        }

        // M(X(tau0)) must equal Z(tau0)/Z(level*tau0) directly.
        let z0 = eval_z(&ctx, pt.group, &tau0).unwrap();
        let zn = eval_z(&ctx, pt.group, &tau0.scale_i64(pt.level as i64)).unwrap();
        assert_close(pt.name, "multiplier", &analysis.m, &z0.div(&zn), &tol(&ctx, -50));

        assert_eq!(analysis.route, MultiplierRoute::for_group(pt.group));
    }
}

/// Criterion: a finite-difference quotient of the multiplier against the
/// hauptmodul — no catalog, no implicit function theorem — agrees with the
/// implicit route to at least 15 digits.
#[test]
fn finite_differences_confirm_the_implicit_route() {
    let ctx = PrecisionContext::new(40).unwrap();
    for pt in &POINTS {
        let tau0 = (pt.tau0)(&ctx);
        let implicit = multiplier_at(&ctx, pt.group, pt.level, &tau0).unwrap().dm;
        let fd = fd_dmdx(&ctx, pt.group, pt.level, &tau0).unwrap();
        assert_close(pt.name, "fd vs implicit", &fd, &implicit, &tol(&ctx, -15));
    }
}

#[test]
fn off_curve_and_singular_points_are_rejected() {
    let ctx = PrecisionContext::new(40).unwrap();
    let poly = find("t2", 3).unwrap();
    let half = APComplex::with_f64(ctx.prec_bits(), 0.5, 0.0);
    assert!(matches!(
        implicit_derivatives(&ctx, poly, &half, &half),
        Err(ModPolyError::PointOffCurve { .. })
    ));
    // The cusp image (0, 0) lies on every cataloged curve but is a node:
    // both first partials vanish there.
    let zero = APComplex::zero(ctx.prec_bits());
    assert!(matches!(
        implicit_derivatives(&ctx, poly, &zero, &zero),
        Err(ModPolyError::SingularPoint { .. })
    ));
}
