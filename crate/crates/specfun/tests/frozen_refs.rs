//! 60-digit reference values frozen from an independent arbitrary-precision
//! implementation (binary-splitting eta/theta/Eisenstein sums checked against
//! their modular transforms). Every evaluator must reproduce them to at
//! least 55 digits at a 60-digit context.

use num_rational::Rational64;
use rug::ops::Pow;
use rug::Float;
use specfun::{
    eval_2f1, eval_3f2, eval_e2n, eval_eisenstein, eval_eta, eval_gamma, eval_hauptmodul, eval_j,
    eval_lambda, eval_theta, eval_u, eval_z, APComplex, GroupLabel, PrecisionContext,
};

fn ctx60() -> PrecisionContext {
    PrecisionContext::new(60).unwrap()
}

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// tau_t = 1/3 + 3i/4, the generic off-axis reference point.
fn tau_t(ctx: &PrecisionContext) -> APComplex {
    APComplex::new(ctx.float_from_r64(r(1, 3)), ctx.float_from_r64(r(3, 4)))
}

fn assert_close(ctx: &PrecisionContext, got: &APComplex, want_re: &str, want_im: &str, who: &str) {
    let wre = ctx.float_from_str(want_re).unwrap();
    let wim = ctx.float_from_str(want_im).unwrap();
    let want = APComplex::new(wre, wim);
    let scale = want.abs().max(&ctx.float_from_i64(1));
    let mut tol = ctx.float_from_i64(10);
    rug::ops::PowAssign::pow_assign(&mut tol, -55i32);
    tol *= scale;
    let d = got.dist(&want);
    assert!(d < tol, "{who}: got {got}, want {want_re} + {want_im} i (distance {d})");
}

fn assert_real_close(ctx: &PrecisionContext, got: &Float, want: &str, who: &str) {
    let w = ctx.float_from_str(want).unwrap();
    let scale = w.clone().abs().max(&ctx.float_from_i64(1));
    let mut tol = ctx.float_from_i64(10);
    rug::ops::PowAssign::pow_assign(&mut tol, -55i32);
    tol *= scale;
    let d = Float::with_val(ctx.prec_bits(), got - &w).abs();
    assert!(d < tol, "{who}: got {got}, want {want} (distance {d})");
}

#[test]
fn eta_reference_values() {
    let ctx = ctx60();
    let i = ctx.complex(0.0, 1.0);
    let e = eval_eta(&ctx, &i).unwrap();
    assert_close(
        &ctx,
        &e,
        "0.768225422326056659002594179576180644517866914464805014676703",
        "0",
        "eta(i)",
    );
    // Closed form Gamma(1/4) / (2 pi^(3/4)).
    let g14 = eval_gamma(&ctx, &ctx.float_from_r64(r(1, 4))).unwrap();
    let three_quarters = ctx.float_from_r64(r(3, 4));
    let mut closed = ctx.pi().pow(&three_quarters);
    closed *= 2u32;
    let closed = Float::with_val(ctx.prec_bits(), &g14 / &closed);
    assert_real_close(&ctx, &closed, "0.768225422326056659002594179576180644517866914464805014676703", "eta(i) closed form");

    let t = tau_t(&ctx);
    assert_close(
        &ctx,
        &eval_eta(&ctx, &t).unwrap(),
        "0.822860094813455830463200747868491241879512791517781462076624",
        "0.0656313368182822386226051549822162176137780118913969016322232",
        "eta(tau_t)",
    );
}

#[test]
fn theta_reference_values() {
    let ctx = ctx60();
    let t = tau_t(&ctx);
    assert_close(
        &ctx,
        &eval_theta(&ctx, 2, &t).unwrap(),
        "1.06484911340848248020848120240833395343807994833148793666612",
        "0.294263283045756660961165863773007217231403218709022329165559",
        "theta2(tau_t)",
    );
    assert_close(
        &ctx,
        &eval_theta(&ctx, 3, &t).unwrap(),
        "1.09469952409008873273540894640354449471562632111145917591359",
        "0.164024389314835939841397805548306493982476900828309712811994",
        "theta3(tau_t)",
    );
    assert_close(
        &ctx,
        &eval_theta(&ctx, 4, &t).unwrap(),
        "0.90513907687477057324308898320705593226780821481879004790482",
        "-0.164303940643992216526169321138137748067740639372144565180583",
        "theta4(tau_t)",
    );
    let i = ctx.complex(0.0, 1.0);
    assert_close(
        &ctx,
        &eval_theta(&ctx, 3, &i).unwrap(),
        "1.08643481121330801457531612151022345707020570724521888592079",
        "0",
        "theta3(i)",
    );
}

#[test]
fn eisenstein_reference_values() {
    let ctx = ctx60();
    let t = tau_t(&ctx);
    assert_close(
        &ctx,
        &eval_eisenstein(&ctx, 2, &t).unwrap(),
        "1.11063563105386115022921102478998356317844510700814369978504",
        "-0.181683213899095021221386749204636988264957227977151801596794",
        "E2(tau_t)",
    );
    assert_close(
        &ctx,
        &eval_eisenstein(&ctx, 4, &t).unwrap(),
        "-0.160336657687401199662499304407482239556552440728709326049325",
        "1.71628153791096002440515397597273878936870935809560103725552",
        "E4(tau_t)",
    );
    assert_close(
        &ctx,
        &eval_eisenstein(&ctx, 6, &t).unwrap(),
        "3.84751405770622401898942414010936632136350973782564273686212",
        "-2.7615484746518040485998929671054764161236078350753787834076",
        "E6(tau_t)",
    );
    let i = ctx.complex(0.0, 1.0);
    // E2(i) = 3/pi.
    assert_close(
        &ctx,
        &eval_eisenstein(&ctx, 2, &i).unwrap(),
        "0.954929658551372014613302580235086172206757874442738692486004",
        "0",
        "E2(i)",
    );
    assert_close(
        &ctx,
        &eval_eisenstein(&ctx, 4, &i).unwrap(),
        "1.45576289226870932246242200359886928743239458552820349571885",
        "0",
        "E4(i)",
    );
    // E6(i) = 0.
    let e6i = eval_eisenstein(&ctx, 6, &i).unwrap();
    let mut tol = ctx.float_from_i64(10);
    rug::ops::PowAssign::pow_assign(&mut tol, -55i32);
    assert!(e6i.abs() < tol, "E6(i) should vanish, got {e6i}");
}

#[test]
fn j_and_hauptmodul_reference_values() {
    let ctx = ctx60();
    let t = tau_t(&ctx);
    assert_close(
        &ctx,
        &eval_j(&ctx, &t).unwrap(),
        "-510.237622912598287045542950728611132968240313580487248088706",
        "30.6246908963670700001473554031526164336731116646275119849653",
        "j(tau_t)",
    );
    let i = ctx.complex(0.0, 1.0);
    assert_close(&ctx, &eval_j(&ctx, &i).unwrap(), "1728", "0", "j(i)");
    let two_i = ctx.complex(0.0, 2.0);
    assert_close(&ctx, &eval_j(&ctx, &two_i).unwrap(), "287496", "0", "j(2i)");

    let cases: [(GroupLabel, &str, &str); 6] = [
        (
            GroupLabel::G02,
            "0.336100858503098546009993675366943719413264356318808611822155",
            "-0.391445321651275639401111411651770489433402217681352089538777",
        ),
        (
            GroupLabel::G03,
            "0.132632542249730763706019317580859408755029472259004628554657",
            "-0.18748390483697476758941481053840879923756981151231087341975",
        ),
        (
            GroupLabel::G04,
            "-0.0661815496062609670394771479831540303314771161957923225399263",
            "0.133403866912158378424116708758465573167813391383681554438394",
        ),
        (
            GroupLabel::Psl2z,
            "-3.37450087315324313786817850914594596992848995930820029413203",
            "-0.202539055391336977819317338215391787554647313166399870661419",
        ),
        (
            GroupLabel::G02Plus,
            "1.21099748131170900260205128043026178556355114532793000571679",
            "3.25650942326281580263020229912369846465862367626595392782981",
        ),
        (
            GroupLabel::G03Plus,
            "-0.22024526830025514783847889600611560306620522591856923033862",
            "1.14555835139762159857883836498469209467808291555324167171897",
        ),
    ];
    for (group, wre, wim) in cases {
        let x = eval_hauptmodul(&ctx, group, &t).unwrap();
        assert_close(&ctx, &x, wre, wim, group.hauptmodul_name());
    }

    // t_inf(i/2) = lambda(i) = 1/2.
    let half_i = ctx.complex(0.0, 0.5);
    assert_close(&ctx, &eval_hauptmodul(&ctx, GroupLabel::G04, &half_i).unwrap(), "0.5", "0", "tinf(i/2)");
    assert_close(&ctx, &eval_lambda(&ctx, &ctx.complex(0.0, 1.0)).unwrap(), "0.5", "0", "lambda(i)");
}

#[test]
fn z_and_u_reference_values() {
    let ctx = ctx60();
    let t = tau_t(&ctx);
    let zs: [(GroupLabel, &str, &str); 6] = [
        (
            GroupLabel::G02,
            "0.891301626160601768152739644766867193138015591701148549897249",
            "0.18503701770131455333008945024444897103911786786624166442951",
        ),
        (
            GroupLabel::G03,
            "0.944656086315252573543991828792271349717669289608187409205324",
            "0.090841606949547510610693374602318494132478613988575900798397",
        ),
        (
            GroupLabel::G04,
            "0.963121560513975829621207137089430713813036936881255711765723",
            "0.0605608908224426741372198580443593230092289004171408321417538",
        ),
        (
            GroupLabel::Psl2z,
            "-0.160336657687401199662499304407482239556552440728709326049325",
            "1.71628153791096002440515397597273878936870935809560103725552",
        ),
        (
            GroupLabel::G02Plus,
            "0.760179890876736514866200212259140181924812207718366577923258",
            "0.329847589554179431874226686539370840534984953389895293817147",
        ),
        (
            GroupLabel::G03Plus,
            "0.884122923859273841974377795980055003791670714590647921313902",
            "0.171628153791096002440515397597273878936870935809560103725552",
        ),
    ];
    for (group, wre, wim) in zs {
        let z = eval_z(&ctx, group, &t).unwrap();
        assert_close(&ctx, &z, wre, wim, &format!("Z_{group}"));
    }

    let us: [(GroupLabel, &str, &str); 4] = [
        (
            GroupLabel::G04,
            "1.06618154960626096703947714798315403033147711619579232253993",
            "-0.133403866912158378424116708758465573167813391383681554438394",
        ),
        (
            GroupLabel::Psl2z,
            "-1.10032475873545961987990285718647537294915075906583058632136",
            "1.15316030697318460295062147846186679177993123398854665985035",
        ),
        (
            GroupLabel::G02Plus,
            "1.03446464210693486959581848429657528285492653308461700766311",
            "-1.69351290570493541083286590180049845655278075922846698215637",
        ),
        (
            GroupLabel::G03Plus,
            "1.21368157686105226217800793994277721533143281236052763928409",
            "-0.620772563982815866585598924588490337969448919338513155195847",
        ),
    ];
    for (group, wre, wim) in us {
        let u = eval_u(&ctx, group, &t).unwrap();
        assert_close(&ctx, &u, wre, wim, &format!("U_{group}"));
    }
    // The two trivial U's.
    assert_close(&ctx, &eval_u(&ctx, GroupLabel::G02, &t).unwrap(), "1", "0", "U_G02");
    assert_close(&ctx, &eval_u(&ctx, GroupLabel::G03, &t).unwrap(), "1", "0", "U_G03");

    // E_{2,2}(i/sqrt6) is real: -3.032772118303956036312024...
    let im = ctx.float_from_i64(6).recip().sqrt();
    let p = ctx.prec_bits();
    let tau0 = APComplex::new(Float::new(p), im);
    let e22 = eval_e2n(&ctx, 2, &tau0).unwrap();
    let want = ctx.float_from_str("-3.032772118303956036312024").unwrap();
    let d = Float::with_val(p, &e22.re - &want).abs();
    let mut tol = ctx.float_from_i64(10);
    rug::ops::PowAssign::pow_assign(&mut tol, -23i32);
    assert!(d < tol, "E22(i/sqrt6) = {e22}");
    assert!(e22.im.clone().abs() < ctx.tolerance());
}

#[test]
fn gamma_and_hypergeometric_reference_values() {
    let ctx = ctx60();
    let cases: [(i64, i64, &str); 4] = [
        (1, 3, "2.67893853470774763365569294097467764412868937795730110095043"),
        (1, 4, "3.62560990822190831193068515586767200299516768288006546743338"),
        (1, 8, "7.53394159879761190469922984121513362461041958814907594098313"),
        (1, 24, "23.4624876931833198813857114695862949304333651340046101647398"),
    ];
    for (n, d, want) in cases {
        let g = eval_gamma(&ctx, &ctx.float_from_r64(r(n, d))).unwrap();
        assert_real_close(&ctx, &g, want, &format!("gamma({n}/{d})"));
    }

    // G24 = Gamma(1/24) Gamma(5/24) Gamma(7/24) Gamma(11/24).
    let mut g24 = ctx.float_from_i64(1);
    for num in [1, 5, 7, 11] {
        g24 *= eval_gamma(&ctx, &ctx.float_from_r64(r(num, 24))).unwrap();
    }
    assert_real_close(
        &ctx,
        &g24,
        "614.233861140965955631025763839792647352957051138966172249324",
        "G24",
    );
    // G15 = Gamma(1/15) Gamma(2/15) Gamma(4/15) Gamma(8/15).
    let mut g15 = ctx.float_from_i64(1);
    for num in [1, 2, 4, 8] {
        g15 *= eval_gamma(&ctx, &ctx.float_from_r64(r(num, 15))).unwrap();
    }
    assert_real_close(
        &ctx,
        &g15,
        "574.91188972866997566815835531996150513010427993402315876388",
        "G15",
    );

    let quarter = APComplex::from_real(ctx.float_from_r64(r(1, 4)));
    let f = eval_2f1(&ctx, r(1, 4), r(1, 4), r(1, 1), &quarter).unwrap();
    assert_close(
        &ctx,
        &f,
        "1.01740879759595600866953875335006342599525691854541189991505",
        "0",
        "2F1(1/4,1/4;1;1/4)",
    );
    let x2 = APComplex::from_real(ctx.float_from_r64(r(17, 64)));
    let f2 = eval_2f1(&ctx, r(1, 2), r(1, 2), r(1, 1), &x2).unwrap();
    assert_close(
        &ctx,
        &f2,
        "1.07863403252595692600129911835541603794373887593286665525194",
        "0",
        "2F1(1/2,1/2;1;17/64)",
    );
    let x3 = APComplex::from_real(ctx.float_from_r64(r(27, 125)));
    let f3 = eval_3f2(&ctx, r(1, 2), r(1, 6), r(5, 6), r(1, 1), r(1, 1), &x3).unwrap();
    assert_close(
        &ctx,
        &f3,
        "1.01648608595019246123225136342236242176688376768416598050797",
        "0",
        "3F2(1/2,1/6,5/6;1,1;27/125)",
    );

    // Gamma poles are rejected.
    assert!(eval_gamma(&ctx, &ctx.float_from_i64(0)).is_err());
    assert!(eval_gamma(&ctx, &ctx.float_from_i64(-3)).is_err());
}
