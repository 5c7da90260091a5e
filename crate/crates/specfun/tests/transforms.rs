//! Functional-equation tests at seeded random points of the upper half
//! plane. These exercise the modular reduction, the closed forms, and the
//! evaluators jointly: an error anywhere breaks invariance.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rug::Float;
use specfun::{
    apply_mobius, eval_eisenstein, eval_hauptmodul, eval_lambda, eval_u, eval_z, eval_z_hyper,
    APComplex, GroupLabel, PrecisionContext,
};

/// Random points with Im in [lo, hi], Re in [-0.9, 0.9].
fn sample_points(ctx: &PrecisionContext, n: usize, lo: f64, hi: f64, seed: u64) -> Vec<APComplex> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let re = rng.gen_range(-0.9..0.9);
            let im = rng.gen_range(lo..hi);
            ctx.complex(re, im)
        })
        .collect()
}

fn tol_at(ctx: &PrecisionContext, digits: i32) -> Float {
    let mut t = ctx.float_from_i64(10);
    rug::ops::PowAssign::pow_assign(&mut t, -digits);
    t
}

fn assert_near(got: &APComplex, want: &APComplex, tol: &Float, who: &str) {
    let p = got.prec();
    let scale = want.abs().max(&Float::with_val(p, 1));
    let lim = Float::with_val(p, tol * &scale);
    let d = got.dist(want);
    assert!(d < lim, "{who}: got {got}, want {want}, distance {d}");
}

#[test]
fn hauptmoduln_are_invariant_under_their_stabilizers() {
    let ctx = PrecisionContext::new(40).unwrap();
    let tol = tol_at(&ctx, 35);
    let pts = sample_points(&ctx, 20, 0.15, 1.8, 0x5eed_0001);
    for group in GroupLabel::ALL {
        for tau in &pts {
            let x = eval_hauptmodul(&ctx, group, tau).unwrap();
            for &m in group.generators() {
                let gt = apply_mobius(m, tau);
                let xg = eval_hauptmodul(&ctx, group, &gt).unwrap();
                assert_near(&xg, &x, &tol, &format!("{group} invariance under {m:?} at {tau}"));
            }
        }
    }
}

/// Z_N(-1/(N tau)) = -N tau^2 Z_N(tau) on the weight-2 groups, and
/// Z(-1/(N tau)) = N^2 tau^4 Z(tau) on the weight-4 groups (N = Gamma0 level).
#[test]
fn z_forms_transform_with_their_weight() {
    let ctx = PrecisionContext::new(40).unwrap();
    let tol = tol_at(&ctx, 35);
    let pts = sample_points(&ctx, 8, 0.3, 1.5, 0x5eed_0002);
    for group in GroupLabel::ALL {
        let n = group.gamma0_level() as i64;
        for tau in &pts {
            let z = eval_z(&ctx, group, tau).unwrap();
            let flipped = apply_mobius([0, -1, n, 0], tau);
            let zf = eval_z(&ctx, group, &flipped).unwrap();
            let tau2 = tau.mul(tau);
            let want = match group.weight() {
                2 => tau2.scale_i64(-n).mul(&z),
                4 => tau2.mul(&tau2).scale_i64(n * n).mul(&z),
                w => panic!("unexpected weight {w}"),
            };
            assert_near(&zf, &want, &tol, &format!("Z_{group} flip at {tau}"));
        }
    }
}

#[test]
fn eisenstein_level_one_transforms() {
    let ctx = PrecisionContext::new(40).unwrap();
    let tol = tol_at(&ctx, 35);
    let pts = sample_points(&ctx, 8, 0.3, 1.5, 0x5eed_0003);
    for tau in &pts {
        let flipped = apply_mobius([0, -1, 1, 0], tau);
        let tau2 = tau.mul(tau);
        let tau4 = tau2.mul(&tau2);
        let e4 = eval_eisenstein(&ctx, 4, tau).unwrap();
        let e4f = eval_eisenstein(&ctx, 4, &flipped).unwrap();
        assert_near(&e4f, &tau4.mul(&e4), &tol, "E4 flip");
        let e6 = eval_eisenstein(&ctx, 6, tau).unwrap();
        let e6f = eval_eisenstein(&ctx, 6, &flipped).unwrap();
        assert_near(&e6f, &tau4.mul(&tau2).mul(&e6), &tol, "E6 flip");
        // E2 picks up the non-modular correction 12 tau / (2 pi i) = -(6 i / pi) tau.
        let e2 = eval_eisenstein(&ctx, 2, tau).unwrap();
        let e2f = eval_eisenstein(&ctx, 2, &flipped).unwrap();
        let pi = ctx.pi();
        let six_over_pi = Float::with_val(ctx.prec_bits(), 6 / &pi);
        let correction = tau.scale(&six_over_pi).mul_i().neg();
        let want = tau2.mul(&e2).add(&correction);
        assert_near(&e2f, &want, &tol, "E2 quasi-modular flip");
    }
}

#[test]
fn lambda_flip_and_level_four_hauptmodul() {
    let ctx = PrecisionContext::new(40).unwrap();
    let tol = tol_at(&ctx, 35);
    let pts = sample_points(&ctx, 8, 0.3, 1.5, 0x5eed_0004);
    let one = APComplex::from_real(ctx.float_from_i64(1));
    for tau in &pts {
        let lam = eval_lambda(&ctx, tau).unwrap();
        let flipped = apply_mobius([0, -1, 1, 0], tau);
        let lamf = eval_lambda(&ctx, &flipped).unwrap();
        assert_near(&lamf, &one.sub(&lam), &tol, "lambda(-1/tau) = 1 - lambda(tau)");
        // The level-4 hauptmodul is lambda at doubled argument.
        let doubled = APComplex::new(
            Float::with_val(ctx.prec_bits(), &tau.re * 2i32),
            Float::with_val(ctx.prec_bits(), &tau.im * 2i32),
        );
        let tinf = eval_hauptmodul(&ctx, GroupLabel::G04, tau).unwrap();
        let lam2 = eval_lambda(&ctx, &doubled).unwrap();
        assert_near(&tinf, &lam2, &tol, "tinf(tau) = lambda(2 tau)");
    }
}

/// U_m^2 = (1 - X) / Z on the weight-4 groups.
#[test]
fn u_squared_matches_hauptmodul_and_z() {
    let ctx = PrecisionContext::new(40).unwrap();
    let tol = tol_at(&ctx, 35);
    let pts = sample_points(&ctx, 8, 0.3, 1.5, 0x5eed_0005);
    let one = APComplex::from_real(ctx.float_from_i64(1));
    for group in [GroupLabel::Psl2z, GroupLabel::G02Plus, GroupLabel::G03Plus] {
        for tau in &pts {
            let u = eval_u(&ctx, group, tau).unwrap();
            let x = eval_hauptmodul(&ctx, group, tau).unwrap();
            let z = eval_z(&ctx, group, tau).unwrap();
            let want = one.sub(&x).div(&z);
            assert_near(&u.mul(&u), &want, &tol, &format!("U_{group}^2 at {tau}"));
        }
    }
}

/// U_m(-1/(s tau)) = (sqrt(s) tau)^(-2) U_m(tau), s the normalizer scale.
#[test]
fn u_is_modular_of_weight_minus_two_under_the_scaled_flip() {
    let ctx = PrecisionContext::new(40).unwrap();
    let tol = tol_at(&ctx, 35);
    let pts = sample_points(&ctx, 8, 0.3, 1.5, 0x5eed_0006);
    for group in [GroupLabel::Psl2z, GroupLabel::G02Plus, GroupLabel::G03Plus] {
        let s = group.normalizer_s().expect("weight-4 group") as i64;
        for tau in &pts {
            let u = eval_u(&ctx, group, tau).unwrap();
            let flipped = apply_mobius([0, -1, s, 0], tau);
            let uf = eval_u(&ctx, group, &flipped).unwrap();
            let want = u.div(&tau.mul(tau).scale_i64(s));
            assert_near(&uf, &want, &tol, &format!("U_{group} flip at {tau}"));
        }
    }
}

/// The hypergeometric route for Z agrees with the closed form where |X| < 1.
#[test]
fn z_hypergeometric_route_agrees_with_closed_form() {
    let ctx = PrecisionContext::new(40).unwrap();
    let tol = tol_at(&ctx, 34);
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let pts: Vec<APComplex> = (0..6)
        .map(|_| {
            let re = rng.gen_range(-0.05..0.05);
            let im = rng.gen_range(1.2..1.7);
            ctx.complex(re, im)
        })
        .collect();
    for group in GroupLabel::ALL {
        for tau in &pts {
            let z = eval_z(&ctx, group, tau).unwrap();
            let zh = eval_z_hyper(&ctx, group, tau).unwrap();
            assert_near(&zh, &z, &tol, &format!("Z_{group} hyper route at {tau}"));
        }
    }
}

/// (1/(2 pi i)) dX/dtau = U X Z, checked by central differences.
#[test]
fn hauptmodul_derivative_relation() {
    let ctx = PrecisionContext::new(30).unwrap();
    let p = ctx.prec_bits();
    let tol = tol_at(&ctx, 15);
    let pts = sample_points(&ctx, 4, 0.4, 1.3, 0x5eed_0008);
    let mut h = ctx.float_from_i64(10);
    rug::ops::PowAssign::pow_assign(&mut h, -13i32);
    let two_pi = Float::with_val(p, 2 * &ctx.pi());
    for group in GroupLabel::ALL {
        for tau in &pts {
            let plus = APComplex::new(Float::with_val(p, &tau.re + &h), tau.im.clone());
            let minus = APComplex::new(Float::with_val(p, &tau.re - &h), tau.im.clone());
            let xp = eval_hauptmodul(&ctx, group, &plus).unwrap();
            let xm = eval_hauptmodul(&ctx, group, &minus).unwrap();
            let diff = xp.sub(&xm);
            let denom = Float::with_val(p, 2 * &h);
            // dX/dtau / (2 pi i) = diff / (2h) / (2 pi i) = -i diff / (4 pi h).
            let fd = diff
                .scale(&Float::with_val(p, &denom * &two_pi).recip())
                .mul_i()
                .neg();
            let x = eval_hauptmodul(&ctx, group, tau).unwrap();
            let z = eval_z(&ctx, group, tau).unwrap();
            let u = eval_u(&ctx, group, tau).unwrap();
            let want = u.mul(&x).mul(&z);
            assert_near(&fd, &want, &tol, &format!("derivative relation for {group} at {tau}"));
        }
    }
}
