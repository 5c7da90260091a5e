//! The shipped tables must round-trip byte for byte and verify against the
//! numeric kernel at 40 digits with residuals below 10^-30.

use constexpr::{
    builtin_table_text, eval_expr, load_builtin, parse, verify_table, ConstExprError,
    ValueTable, BUILTIN_TABLE_NAMES,
};
use rug::ops::Pow;
use rug::Float;
use specfun::PrecisionContext;

#[test]
fn builtin_tables_round_trip_byte_for_byte() {
    for name in BUILTIN_TABLE_NAMES {
        let raw = builtin_table_text(name).unwrap();
        let table = load_builtin(name).unwrap();
        assert_eq!(table.to_text(), raw, "{name} is not in canonical form");
    }
}

#[test]
fn builtin_tables_have_the_expected_shape() {
    let sizes = [("jvals", 22), ("etavals", 18), ("ekvals", 5), ("e2kvals", 2)];
    for (name, rows) in sizes {
        let table = load_builtin(name).unwrap();
        assert_eq!(table.rows.len(), rows, "{name} row count");
    }
}

#[test]
fn all_builtin_tables_verify_at_forty_digits() {
    let ctx = PrecisionContext::new(40).unwrap();
    for name in BUILTIN_TABLE_NAMES {
        let table = load_builtin(name).unwrap();
        let report = verify_table(&table, &ctx);
        for row in &report.rows {
            assert!(
                row.pass,
                "{name}: {} at {} failed: residual {} ({})",
                row.function, row.point, row.residual, row.note
            );
        }
        assert!(report.all_pass());
        let cap = Float::with_val(ctx.prec_bits(), 10).pow(-30);
        assert!(
            report.max_residual() < cap,
            "{name}: max residual {} above 1e-30",
            report.max_residual()
        );
    }
}

#[test]
fn verifier_detects_a_wrong_row() {
    let ctx = PrecisionContext::new(40).unwrap();
    let bad = ValueTable::parse_table("bad", "i*sqrt(2) | j | 8001 | off by one\n").unwrap();
    let report = verify_table(&bad, &ctx);
    assert!(!report.all_pass());
    assert!(!report.rows[0].pass);
}

#[test]
fn evaluation_matches_independent_references() {
    let ctx = PrecisionContext::new(60).unwrap();
    let p = ctx.prec_bits();

    // -17 - 12 sqrt(2), the left fixed point of one of the series.
    let e = parse("-17-12*sqrt(2)").unwrap();
    let got = eval_expr(&ctx, &e).unwrap();
    let want = Float::with_val(p, -17) - Float::with_val(p, 2).sqrt() * 12u32;
    let d = Float::with_val(p, &got.re - &want).abs();
    assert!(d < Float::with_val(p, 1e-55));
    assert!(got.im.is_zero());

    // Reflection: gamma(1/8) gamma(7/8) = pi / sin(pi/8).
    let refl = parse("gamma(1/8)*gamma(7/8)").unwrap();
    let got = eval_expr(&ctx, &refl).unwrap();
    let eighth = Float::with_val(p, ctx.pi() / 8u32);
    let want = Float::with_val(p, ctx.pi() / eighth.sin());
    let d = Float::with_val(p, &got.re - &want).abs();
    let tol = Float::with_val(p, 10).pow(-55);
    assert!(d < tol, "reflection: got {got}, want {want}");

    // Exact zero trees evaluate to exact zero.
    let zero = parse("1/2-1/2").unwrap();
    let z = eval_expr(&ctx, &zero).unwrap();
    assert!(z.re.is_zero() && z.im.is_zero());
}

#[test]
fn table_loading_rejects_bad_rows() {
    // Lower half plane.
    match ValueTable::parse_table("t", "-i*sqrt(2) | j | 8000 | x\n") {
        Err(ConstExprError::PointNotInUpperHalfPlane { line: 1 }) => {}
        other => panic!("expected half-plane rejection, got {other:?}"),
    }
    // i in the value field.
    match ValueTable::parse_table("t", "i*sqrt(2) | j | i*8000 | x\n") {
        Err(ConstExprError::ImaginaryNotAllowed { .. }) => {}
        other => panic!("expected imaginary rejection, got {other:?}"),
    }
    // Unknown function id.
    match ValueTable::parse_table("t", "i*sqrt(2) | zeta | 8000 | x\n") {
        Err(ConstExprError::BadTableLine { line: 1, .. }) => {}
        other => panic!("expected bad line, got {other:?}"),
    }
    // Wrong field count.
    assert!(ValueTable::parse_table("t", "i*sqrt(2) | j | 8000\n").is_err());
    // Division by an exact zero inside a value.
    let t = ValueTable::parse_table("t", "i*sqrt(2) | j | 1/(1/2-1/2) | x\n").unwrap();
    let ctx = PrecisionContext::new(40).unwrap();
    let report = verify_table(&t, &ctx);
    assert!(!report.rows[0].pass);
    assert!(report.rows[0].note.contains("division by zero"));
}
