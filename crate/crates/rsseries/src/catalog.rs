//! The series catalog and its text format.
//!
//! Each cataloged series packages everything needed to evaluate and certify
//! one rational-coefficient expansion of a `1/pi`-type constant: the group,
//! the degree of the cycle, the quadratic point, the coefficient recipe, and
//! the closed-form display constants `(x0, prefactor, a, b, target)` as exact
//! algebraic expressions.
//!
//! The text format is line-oriented (see `data/series.cat` for the grammar).
//! All expression fields are stored in the canonical printed form, so
//! parse-then-print is the identity on the embedded file; the parser enforces
//! the structural invariants (family matches the group, exponents match the
//! group recipe, `det(gamma) > 0`, `|x0| < 1`, `b > 0`, `Im(tau0) > 0`).

use std::fmt;
use std::sync::OnceLock;

use arithgroup::GroupLabel;
use constexpr::{eval_expr, eval_rational, parse, parse_point, AlgebraicExpr};
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use specfun::{apply_mobius, APComplex, PrecisionContext};

use crate::error::RsError;
use crate::families::CoefficientRecipe;

/// One cataloged series, fully specified by exact data.
#[derive(Debug, Clone)]
pub struct SeriesSpec {
    id: String,
    group: GroupLabel,
    level: u32,
    recipe: CoefficientRecipe,
    tau0: AlgebraicExpr,
    gamma: [i64; 4],
    x0: AlgebraicExpr,
    prefactor: AlgebraicExpr,
    a: AlgebraicExpr,
    b: AlgebraicExpr,
    target: AlgebraicExpr,
    e0: Rational64,
    e1: Rational64,
}

impl SeriesSpec {
    /// Catalog identifier, unique within the catalog.
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn group(&self) -> GroupLabel {
        self.group
    }

    /// Degree `N` of the cycle: `gamma` maps `tau0` to an `N`-isogenous point.
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn recipe(&self) -> CoefficientRecipe {
        self.recipe
    }

    /// The integer matrix, row-major `[a, b, c, d]`, with `det > 0`.
    pub fn gamma(&self) -> [i64; 4] {
        self.gamma
    }

    /// The quadratic point in the upper half-plane, as an expression.
    pub fn tau0_expr(&self) -> &AlgebraicExpr {
        &self.tau0
    }

    pub fn x0_expr(&self) -> &AlgebraicExpr {
        &self.x0
    }

    pub fn prefactor_expr(&self) -> &AlgebraicExpr {
        &self.prefactor
    }

    pub fn a_expr(&self) -> &AlgebraicExpr {
        &self.a
    }

    pub fn b_expr(&self) -> &AlgebraicExpr {
        &self.b
    }

    pub fn target_expr(&self) -> &AlgebraicExpr {
        &self.target
    }

    /// Exponent of `x0` in the completed sum's front factor (0 throughout
    /// the current catalog).
    pub fn e0(&self) -> Rational64 {
        self.e0
    }

    /// Exponent of `(1 - x0)` in the front factor; fixed by the group.
    pub fn e1(&self) -> Rational64 {
        self.e1
    }

    pub fn tau0_value(&self, ctx: &PrecisionContext) -> Result<APComplex, RsError> {
        Ok(eval_expr(ctx, &self.tau0)?)
    }

    /// `gamma * tau0` as a Moebius image.
    pub fn gamma_tau0_value(&self, ctx: &PrecisionContext) -> Result<APComplex, RsError> {
        Ok(apply_mobius(self.gamma, &self.tau0_value(ctx)?))
    }

    pub fn x0_value(&self, ctx: &PrecisionContext) -> Result<APComplex, RsError> {
        Ok(eval_expr(ctx, &self.x0)?)
    }

    pub fn prefactor_value(&self, ctx: &PrecisionContext) -> Result<APComplex, RsError> {
        Ok(eval_expr(ctx, &self.prefactor)?)
    }

    pub fn a_value(&self, ctx: &PrecisionContext) -> Result<APComplex, RsError> {
        Ok(eval_expr(ctx, &self.a)?)
    }

    pub fn b_value(&self, ctx: &PrecisionContext) -> Result<APComplex, RsError> {
        Ok(eval_expr(ctx, &self.b)?)
    }

    pub fn target_value(&self, ctx: &PrecisionContext) -> Result<APComplex, RsError> {
        Ok(eval_expr(ctx, &self.target)?)
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}, level {})", self.id, self.group, self.level)
    }
}

/// Working fields of one catalog block while it is being read.
#[derive(Default)]
struct Draft {
    head: usize,
    id: String,
    group: Option<GroupLabel>,
    level: Option<u32>,
    recipe: Option<CoefficientRecipe>,
    tau0: Option<AlgebraicExpr>,
    gamma: Option<[i64; 4]>,
    x0: Option<AlgebraicExpr>,
    prefactor: Option<AlgebraicExpr>,
    a: Option<AlgebraicExpr>,
    b: Option<AlgebraicExpr>,
    target: Option<AlgebraicExpr>,
    e0: Option<Rational64>,
    e1: Option<Rational64>,
}

fn parse_rat64(tok: &str) -> Option<Rational64> {
    let (n, d) = match tok.split_once('/') {
        Some((n, d)) => (n, d),
        None => (tok, "1"),
    };
    let n: i64 = n.parse().ok()?;
    let d: i64 = d.parse().ok()?;
    if d == 0 {
        return None;
    }
    Some(Rational64::new(n, d))
}

/// Parses catalog text into validated series specs.
///
/// Beyond the grammar, each block is checked against the structural and
/// numeric invariants of a usable series: the coefficient family must be the
/// group's own, the front-factor exponents must match the group recipe
/// (`e0 = 0`, `e1` as dictated by the hauptmodul normalization), the matrix
/// must have positive determinant and a nonzero lower-left entry, and at a
/// small working precision `tau0` must lie in the upper half-plane, `x0`
/// must be real with `|x0| < 1`, and `b` must be real and positive.
pub fn parse_series_catalog(text: &str) -> Result<Vec<SeriesSpec>, RsError> {
    let bad = |line: usize, msg: String| RsError::Catalog { line, msg };
    // Coarse context: the parse-time checks are yes/no questions about
    // quantities of moderate size, not certifications.
    let ctx = PrecisionContext::new(25)?;
    let mut out: Vec<SeriesSpec> = Vec::new();
    let mut open: Option<Draft> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let key = fields[0];
        match &mut open {
            None => {
                if key != "series" || fields.len() != 2 {
                    return Err(bad(lineno, "expected: series <id>".into()));
                }
                let id = fields[1].to_string();
                if out.iter().any(|s| s.id == id) {
                    return Err(bad(lineno, format!("duplicate series id {id:?}")));
                }
                open = Some(Draft {
                    head: lineno,
                    id,
                    ..Draft::default()
                });
            }
            Some(draft) => match key {
                "group" => {
                    expect_arity(lineno, &fields, 2)?;
                    let group: GroupLabel = fields[1]
                        .parse()
                        .map_err(|e| bad(lineno, format!("{e}")))?;
                    put(lineno, "group", &mut draft.group, group)?;
                }
                "level" => {
                    expect_arity(lineno, &fields, 2)?;
                    let level: u32 = fields[1]
                        .parse()
                        .map_err(|e| bad(lineno, format!("bad level: {e}")))?;
                    if level < 2 {
                        return Err(bad(lineno, format!("level must be at least 2, got {level}")));
                    }
                    put(lineno, "level", &mut draft.level, level)?;
                }
                "family" => {
                    if fields.len() < 2 || fields.len() > 3 {
                        return Err(bad(lineno, "expected: family <name> [m]".into()));
                    }
                    let family = fields[1]
                        .parse()
                        .map_err(|e| bad(lineno, format!("{e}")))?;
                    let m = match fields.get(2) {
                        Some(tok) => Some(
                            tok.parse::<u32>()
                                .map_err(|e| bad(lineno, format!("bad family order: {e}")))?,
                        ),
                        None => None,
                    };
                    let recipe = CoefficientRecipe::new(family, m)
                        .map_err(|e| bad(lineno, format!("{e}")))?;
                    put(lineno, "family", &mut draft.recipe, recipe)?;
                }
                "tau0" => {
                    expect_arity(lineno, &fields, 2)?;
                    let point = parse_point(fields[1])
                        .map_err(|e| bad(lineno, format!("bad point: {e}")))?;
                    put(lineno, "tau0", &mut draft.tau0, point)?;
                }
                "gamma" => {
                    expect_arity(lineno, &fields, 5)?;
                    let mut entries = [0i64; 4];
                    for (slot, tok) in entries.iter_mut().zip(&fields[1..]) {
                        let expr = parse(tok)
                            .map_err(|e| bad(lineno, format!("bad matrix entry: {e}")))?;
                        let value = eval_rational(&expr).ok_or_else(|| {
                            bad(lineno, format!("matrix entry {tok:?} is not rational"))
                        })?;
                        if !value.is_integer() {
                            return Err(bad(
                                lineno,
                                format!("matrix entry {tok:?} is not an integer"),
                            ));
                        }
                        *slot = value.to_integer().to_i64().ok_or_else(|| {
                            bad(lineno, format!("matrix entry {tok:?} overflows i64"))
                        })?;
                    }
                    put(lineno, "gamma", &mut draft.gamma, entries)?;
                }
                "x0" | "prefactor" | "a" | "b" | "target" => {
                    expect_arity(lineno, &fields, 2)?;
                    let expr = parse(fields[1])
                        .map_err(|e| bad(lineno, format!("bad expression: {e}")))?;
                    let slot = match key {
                        "x0" => &mut draft.x0,
                        "prefactor" => &mut draft.prefactor,
                        "a" => &mut draft.a,
                        "b" => &mut draft.b,
                        _ => &mut draft.target,
                    };
                    put(lineno, key, slot, expr)?;
                }
                "e0" | "e1" => {
                    expect_arity(lineno, &fields, 2)?;
                    let value = parse_rat64(fields[1])
                        .ok_or_else(|| bad(lineno, format!("bad rational {:?}", fields[1])))?;
                    let slot = if key == "e0" { &mut draft.e0 } else { &mut draft.e1 };
                    put(lineno, key, slot, value)?;
                }
                "end" => {
                    expect_arity(lineno, &fields, 1)?;
                    let done = std::mem::take(draft);
                    out.push(seal(&ctx, done)?);
                    open = None;
                }
                other => {
                    return Err(bad(lineno, format!("unknown key {other:?}")));
                }
            },
        }
    }
    if let Some(draft) = open {
        return Err(bad(
            draft.head,
            format!("series {} is missing its end marker", draft.id),
        ));
    }
    Ok(out)
}

fn expect_arity(lineno: usize, fields: &[&str], want: usize) -> Result<(), RsError> {
    if fields.len() != want {
        return Err(RsError::Catalog {
            line: lineno,
            msg: format!(
                "key {:?} takes {} value field(s), got {}",
                fields[0],
                want - 1,
                fields.len() - 1
            ),
        });
    }
    Ok(())
}

fn put<T>(lineno: usize, key: &str, slot: &mut Option<T>, value: T) -> Result<(), RsError> {
    if slot.is_some() {
        return Err(RsError::Catalog {
            line: lineno,
            msg: format!("duplicate key {key:?}"),
        });
    }
    *slot = Some(value);
    Ok(())
}

/// Closes a block: checks all fields are present and the invariants hold.
fn seal(ctx: &PrecisionContext, draft: Draft) -> Result<SeriesSpec, RsError> {
    let head = draft.head;
    let bad = |msg: String| RsError::Catalog { line: head, msg };
    let missing = |what: &str| bad(format!("series {} is missing {what}", draft.id));

    let group = draft.group.ok_or_else(|| missing("group"))?;
    let level = draft.level.ok_or_else(|| missing("level"))?;
    let recipe = draft.recipe.ok_or_else(|| missing("family"))?;
    let tau0 = draft.tau0.ok_or_else(|| missing("tau0"))?;
    let gamma = draft.gamma.ok_or_else(|| missing("gamma"))?;
    let x0 = draft.x0.ok_or_else(|| missing("x0"))?;
    let prefactor = draft.prefactor.ok_or_else(|| missing("prefactor"))?;
    let a = draft.a.ok_or_else(|| missing("a"))?;
    let b = draft.b.ok_or_else(|| missing("b"))?;
    let target = draft.target.ok_or_else(|| missing("target"))?;
    let e0 = draft.e0.ok_or_else(|| missing("e0"))?;
    let e1 = draft.e1.ok_or_else(|| missing("e1"))?;

    if recipe != CoefficientRecipe::for_group(group) {
        return Err(bad(format!(
            "family {recipe} does not match group {group} (expected {})",
            CoefficientRecipe::for_group(group)
        )));
    }
    if !e0.is_zero() {
        return Err(bad(format!("e0 must be 0 in this catalog, got {e0}")));
    }
    let (e1n, e1d) = group.recipe_e1();
    if e1 != Rational64::new(e1n, e1d) {
        return Err(bad(format!(
            "e1 = {e1} does not match the {group} recipe ({e1n}/{e1d})"
        )));
    }
    let [ga, gb, gc, gd] = gamma;
    let det = ga * gd - gb * gc;
    if det <= 0 {
        return Err(bad(format!("gamma has determinant {det}, need det > 0")));
    }
    if gc == 0 {
        return Err(bad("gamma must move the cusp: lower-left entry is 0".into()));
    }

    // Cheap numeric invariants at the coarse context.
    let tau0_val = eval_expr(ctx, &tau0).map_err(|e| bad(format!("tau0: {e}")))?;
    if !(tau0_val.im > 0) {
        return Err(bad("tau0 is not in the upper half-plane".into()));
    }
    let x0_val = eval_expr(ctx, &x0).map_err(|e| bad(format!("x0: {e}")))?;
    let near = ctx.tolerance();
    if x0_val.im.clone().abs() > near {
        return Err(bad("x0 is not real".into()));
    }
    if !(x0_val.re.clone().abs() < 1) {
        return Err(bad(format!("|x0| must be < 1, got {}", x0_val.re.to_f64())));
    }
    let b_val = eval_expr(ctx, &b).map_err(|e| bad(format!("b: {e}")))?;
    if b_val.im.clone().abs() > near || !(b_val.re > 0) {
        return Err(bad("slope b must be real and positive".into()));
    }

    Ok(SeriesSpec {
        id: draft.id,
        group,
        level,
        recipe,
        tau0,
        gamma,
        x0,
        prefactor,
        a,
        b,
        target,
        e0,
        e1,
    })
}

const EMBEDDED: &str = include_str!("../data/series.cat");

/// The built-in catalog: eleven series, in catalog order.
pub fn catalog() -> &'static [SeriesSpec] {
    static CACHE: OnceLock<Vec<SeriesSpec>> = OnceLock::new();
    CACHE.get_or_init(|| parse_series_catalog(EMBEDDED).expect("embedded catalog is well-formed"))
}

/// Looks up a series by id.
pub fn find_series(id: &str) -> Result<&'static SeriesSpec, RsError> {
    catalog()
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| RsError::UnknownSeries(id.to_string()))
}

/// The catalog ids, in catalog order.
pub fn series_ids() -> Vec<&'static str> {
    catalog().iter().map(|s| s.id()).collect()
}
