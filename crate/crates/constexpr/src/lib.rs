//! Exact expression trees for algebraic/Gamma constants, a parser for their
//! textual form, an arbitrary-precision evaluator, and shipped tables of
//! special values (j, eta, Eisenstein, and weight-2 combinations at CM
//! points) verified against the numeric kernel.

mod ast;
mod error;
mod eval;
mod parse;
mod table;

pub use ast::AlgebraicExpr;
pub use error::ConstExprError;
pub use eval::{big_rational, eval_expr, eval_rational};
pub use parse::{parse, parse_point};
pub use table::{verify_table, FunctionId, RowReport, TableReport, TableRow, ValueTable};

/// Names of the shipped tables, in display order.
pub const BUILTIN_TABLE_NAMES: [&str; 4] = ["jvals", "etavals", "ekvals", "e2kvals"];

/// Raw text of a shipped table, if it exists.
pub fn builtin_table_text(name: &str) -> Option<&'static str> {
    Some(match name {
        "jvals" => include_str!("../data/jvals.tbl"),
        "etavals" => include_str!("../data/etavals.tbl"),
        "ekvals" => include_str!("../data/ekvals.tbl"),
        "e2kvals" => include_str!("../data/e2kvals.tbl"),
        _ => return None,
    })
}

/// Load one shipped table by name.
pub fn load_builtin(name: &str) -> Result<ValueTable, ConstExprError> {
    let text =
        builtin_table_text(name).ok_or_else(|| ConstExprError::UnknownTable(name.into()))?;
    ValueTable::parse_table(name, text)
}

/// Load all shipped tables.
pub fn builtin_tables() -> Result<Vec<ValueTable>, ConstExprError> {
    BUILTIN_TABLE_NAMES.iter().map(|n| load_builtin(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(text: &str) {
        let t = parse(text).unwrap();
        assert_eq!(t.to_string(), text, "canonical form differs");
        assert_eq!(parse(&t.to_string()).unwrap(), t, "reparse differs");
    }

    #[test]
    fn canonical_forms_round_trip() {
        round_trip("-17-12*sqrt(2)");
        round_trip("gamma(1/8)^(-2)");
        round_trip("1/2*(5-sqrt(5))");
        round_trip("135/2*(274207975+122629507*sqrt(5))");
        round_trip("-135/2*(1415+637*sqrt(5))");
        round_trip("3^(1/8)/(2^(4/3)*pi)*gamma(1/3)^(3/2)");
        round_trip("-(1/2)");
        round_trip("2^(15/8)*3^(1/4)");
        round_trip("(1/3*(gamma(1/15)*gamma(2/15)))^(1/4)");
        round_trip("sqrt(2*(5145-2300*sqrt(5)))");
        round_trip("64*(-69+48*sqrt(2))^(3)/(-17+12*sqrt(2))");
    }

    #[test]
    fn parser_is_whitespace_insensitive_and_positional() {
        let a = parse("-17 - 12 * sqrt( 2 )").unwrap();
        let b = parse("-17-12*sqrt(2)").unwrap();
        assert_eq!(a, b);
        match parse("3 + $") {
            Err(ConstExprError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse("1/0") {
            Err(ConstExprError::ZeroDenominator { .. }) => {}
            other => panic!("expected zero denominator, got {other:?}"),
        }
    }

    #[test]
    fn imaginary_unit_is_point_only() {
        assert!(parse("i*sqrt(2)").is_err());
        let p = parse_point("(i*sqrt(3)-1)/2").unwrap();
        assert!(p.contains_i());
        assert_eq!(p.to_string(), "(i*sqrt(3)-1)/2");
    }

    #[test]
    fn rational_subtrees_evaluate_exactly() {
        let e = parse("(1/3+1/6)*3-3/2").unwrap();
        assert_eq!(eval_rational(&e).unwrap(), big_rational(0, 1));
        let p = parse("(2/3)^(-2)").unwrap();
        assert_eq!(eval_rational(&p).unwrap(), big_rational(9, 4));
        assert!(eval_rational(&parse("sqrt(2)").unwrap()).is_none());
    }
}
