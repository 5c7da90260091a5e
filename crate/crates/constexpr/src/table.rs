use std::fmt;

use rug::ops::Pow;
use rug::Float;
use specfun::{
    eval_e2n, eval_eisenstein, eval_eta, eval_j, APComplex, NumericError, PrecisionContext,
};

use crate::ast::AlgebraicExpr;
use crate::error::ConstExprError;
use crate::eval::eval_expr;
use crate::parse::{parse, parse_point};

/// Functions a table row can check a closed form against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionId {
    J,
    Eta,
    /// 24th power of eta; used for the one complex-phase row, whose printed
    /// closed form carries a unit phase that the 24th power removes.
    Eta24,
    E4,
    E6,
    Delta,
    E22,
}

impl FunctionId {
    pub fn as_str(self) -> &'static str {
        match self {
            FunctionId::J => "j",
            FunctionId::Eta => "eta",
            FunctionId::Eta24 => "eta24",
            FunctionId::E4 => "e4",
            FunctionId::E6 => "e6",
            FunctionId::Delta => "delta",
            FunctionId::E22 => "e22",
        }
    }

    fn from_str(s: &str) -> Option<Self> {
        Some(match s {
            "j" => FunctionId::J,
            "eta" => FunctionId::Eta,
            "eta24" => FunctionId::Eta24,
            "e4" => FunctionId::E4,
            "e6" => FunctionId::E6,
            "delta" => FunctionId::Delta,
            "e22" => FunctionId::E22,
            _ => return None,
        })
    }

    /// Direct evaluation through the numeric kernel.
    fn eval_direct(
        self,
        ctx: &PrecisionContext,
        tau: &APComplex,
    ) -> Result<APComplex, NumericError> {
        match self {
            FunctionId::J => eval_j(ctx, tau),
            FunctionId::Eta => eval_eta(ctx, tau),
            FunctionId::Eta24 => Ok(eval_eta(ctx, tau)?.powi(24)),
            FunctionId::E4 => eval_eisenstein(ctx, 4, tau),
            FunctionId::E6 => eval_eisenstein(ctx, 6, tau),
            FunctionId::Delta => {
                let e4 = eval_eisenstein(ctx, 4, tau)?;
                let e6 = eval_eisenstein(ctx, 6, tau)?;
                let num = e4.powi(3).sub(&e6.powi(2));
                Ok(num.scale(&ctx.float_from_i64(1728).recip()))
            }
            FunctionId::E22 => eval_e2n(ctx, 2, tau),
        }
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One catalog line: point, function, closed form, provenance note.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub point: AlgebraicExpr,
    pub function: FunctionId,
    pub value: AlgebraicExpr,
    pub provenance: String,
}

/// A named table of closed-form special values.
#[derive(Debug, Clone)]
pub struct ValueTable {
    pub name: String,
    pub rows: Vec<TableRow>,
}

impl ValueTable {
    /// Parse catalog text: one row per line, fields separated by ` | `.
    /// Points must lie in the upper half plane; value expressions must be
    /// real (no `i`).
    pub fn parse_table(name: &str, text: &str) -> Result<ValueTable, ConstExprError> {
        let probe = PrecisionContext::new(20).map_err(ConstExprError::Numeric)?;
        let mut rows = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let fields: Vec<&str> = line.split(" | ").collect();
            if fields.len() != 4 {
                return Err(ConstExprError::BadTableLine {
                    line: lineno,
                    msg: format!("expected 4 ` | `-separated fields, got {}", fields.len()),
                });
            }
            let point = parse_point(fields[0])?;
            let function = FunctionId::from_str(fields[1]).ok_or_else(|| {
                ConstExprError::BadTableLine {
                    line: lineno,
                    msg: format!("unknown function id `{}`", fields[1]),
                }
            })?;
            let value = parse(fields[2])?;
            let tau = eval_expr(&probe, &point)?;
            if !(tau.im > 0) {
                return Err(ConstExprError::PointNotInUpperHalfPlane { line: lineno });
            }
            rows.push(TableRow {
                point,
                function,
                value,
                provenance: fields[3].to_string(),
            });
        }
        Ok(ValueTable { name: name.to_string(), rows })
    }

    /// Canonical text; for the shipped catalogs this reproduces the file
    /// byte for byte.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&format!(
                "{} | {} | {} | {}\n",
                row.point, row.function, row.value, row.provenance
            ));
        }
        out
    }
}

/// Verification result for one row.
#[derive(Debug, Clone)]
pub struct RowReport {
    pub point: String,
    pub function: FunctionId,
    /// |closed form - direct evaluation|, absolute.
    pub residual: Float,
    pub pass: bool,
    /// Failure detail (evaluation error, imaginary leak, ...), empty on pass.
    pub note: String,
}

/// Verification result for a whole table.
#[derive(Debug, Clone)]
pub struct TableReport {
    pub name: String,
    pub threshold: Float,
    pub rows: Vec<RowReport>,
}

impl TableReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn max_residual(&self) -> Float {
        let mut best = Float::new(self.threshold.prec());
        for r in &self.rows {
            if r.residual > best {
                best = r.residual.clone();
            }
        }
        best
    }
}

/// Check every row: |eval(closed form) - direct evaluation| must stay below
/// 10^-(digits-10), and closed forms must come out real to 10^-(digits-5).
/// Requires ctx.digits >= 40. Failures are report entries, never errors.
pub fn verify_table(table: &ValueTable, ctx: &PrecisionContext) -> TableReport {
    assert!(ctx.digits() >= 40, "verify_table needs at least 40 digits");
    let p = ctx.prec_bits();
    let threshold = Float::with_val(p, 10).pow(-(ctx.digits() as i32 - 10));
    let im_cap = Float::with_val(p, 10).pow(-(ctx.digits() as i32 - 5));
    let rows = table
        .rows
        .iter()
        .map(|row| {
            let point = row.point.to_string();
            match row_residual(ctx, row, &im_cap) {
                Ok(residual) => {
                    let pass = residual < threshold;
                    let note = if pass { String::new() } else { "residual above threshold".into() };
                    RowReport { point, function: row.function, residual, pass, note }
                }
                Err(msg) => RowReport {
                    point,
                    function: row.function,
                    residual: Float::with_val(p, f64::INFINITY),
                    pass: false,
                    note: msg,
                },
            }
        })
        .collect();
    TableReport { name: table.name.clone(), threshold, rows }
}

fn row_residual(
    ctx: &PrecisionContext,
    row: &TableRow,
    im_cap: &Float,
) -> Result<Float, String> {
    let tau = eval_expr(ctx, &row.point).map_err(|e| format!("point: {e}"))?;
    let closed = eval_expr(ctx, &row.value).map_err(|e| format!("closed form: {e}"))?;
    if closed.im.clone().abs() > *im_cap {
        return Err(format!("closed form has imaginary part {}", closed.im));
    }
    let direct = row
        .function
        .eval_direct(ctx, &tau)
        .map_err(|e| format!("direct evaluation: {e}"))?;
    Ok(closed.dist(&direct))
}
