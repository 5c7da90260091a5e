//! The modular-equation catalog and its text format.

use crate::error::ModPolyError;
use arithgroup::GroupLabel;
use std::fmt;
use std::sync::OnceLock;

/// One monomial `coeff * X^x_exp * Y^y_exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonomialTerm {
    pub x_exp: u32,
    pub y_exp: u32,
    pub coeff: i64,
}

/// An integer polynomial Phi with Phi(X, Y) = 0 identically for
/// X = hauptmodul(tau), Y = hauptmodul(level * tau).
#[derive(Clone, Debug)]
pub struct ModularPolynomial {
    hauptmodul: String,
    level: u32,
    symmetric: bool,
    terms: Vec<MonomialTerm>,
    deg_x: u32,
    deg_y: u32,
}

impl ModularPolynomial {
    /// Name of the hauptmodul both variables specialize.
    pub fn hauptmodul(&self) -> &str {
        &self.hauptmodul
    }

    /// The group whose hauptmodul this relation is about.
    pub fn group(&self) -> GroupLabel {
        GroupLabel::from_hauptmodul_name(&self.hauptmodul)
            .expect("catalog parser only admits known hauptmodul names")
    }

    /// The degree of the cyclic subgroup: Y specializes to X at `level*tau`.
    pub fn level(&self) -> u32 {
        self.level
    }

    /// Whether Phi(X, Y) = Phi(Y, X) term for term.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// The monomials, sorted by (x_exp, y_exp).
    pub fn terms(&self) -> &[MonomialTerm] {
        &self.terms
    }

    /// Maximal exponents (deg_X, deg_Y).
    pub fn degrees(&self) -> (u32, u32) {
        (self.deg_x, self.deg_y)
    }
}

impl fmt::Display for ModularPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} level {}", self.hauptmodul, self.level)
    }
}

/// True when the term multiset is literally invariant under (i,j) -> (j,i).
fn mirror_is_self(terms: &[MonomialTerm]) -> bool {
    terms.iter().all(|t| {
        terms
            .iter()
            .any(|s| s.x_exp == t.y_exp && s.y_exp == t.x_exp && s.coeff == t.coeff)
    })
}

/// Parses catalog text. Grammar per block:
///
/// ```text
/// poly <hauptmodul> <level> <symmetric|asymmetric>
/// <i> <j> <coefficient>      # one line per monomial
/// end
/// ```
///
/// Blank lines and `#` comments are skipped. The declared symmetry flag is
/// checked against the terms; a mismatch is a parse error.
pub fn parse_catalog(text: &str) -> Result<Vec<ModularPolynomial>, ModPolyError> {
    let bad = |line: usize, msg: String| ModPolyError::BadCatalog { line, msg };
    let mut out: Vec<ModularPolynomial> = Vec::new();
    let mut open: Option<(usize, String, u32, bool, Vec<MonomialTerm>)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (&mut open, fields[0]) {
            (None, "poly") => {
                if fields.len() != 4 {
                    return Err(bad(lineno, "expected: poly <name> <level> <symmetry>".into()));
                }
                let name = fields[1].to_string();
                if GroupLabel::from_hauptmodul_name(&name).is_none() {
                    return Err(bad(lineno, format!("unknown hauptmodul {name:?}")));
                }
                let level: u32 = fields[2]
                    .parse()
                    .map_err(|e| bad(lineno, format!("bad level: {e}")))?;
                if level < 2 {
                    return Err(bad(lineno, format!("level must be at least 2, got {level}")));
                }
                let symmetric = match fields[3] {
                    "symmetric" => true,
                    "asymmetric" => false,
                    other => return Err(bad(lineno, format!("bad symmetry flag {other:?}"))),
                };
                if out
                    .iter()
                    .any(|p| p.hauptmodul == name && p.level == level)
                {
                    return Err(bad(lineno, format!("duplicate block {name} level {level}")));
                }
                open = Some((lineno, name, level, symmetric, Vec::new()));
            }
            (None, other) => {
                return Err(bad(lineno, format!("expected a poly header, got {other:?}")));
            }
            (Some((head, name, level, symmetric, terms)), "end") => {
                if terms.is_empty() {
                    return Err(bad(*head, format!("block {name} has no terms")));
                }
                if mirror_is_self(terms) != *symmetric {
                    return Err(bad(
                        *head,
                        format!("block {name} level {level}: symmetry flag contradicts the terms"),
                    ));
                }
                terms.sort_by_key(|t| (t.x_exp, t.y_exp));
                let deg_x = terms.iter().map(|t| t.x_exp).max().expect("nonempty");
                let deg_y = terms.iter().map(|t| t.y_exp).max().expect("nonempty");
                out.push(ModularPolynomial {
                    hauptmodul: name.clone(),
                    level: *level,
                    symmetric: *symmetric,
                    terms: std::mem::take(terms),
                    deg_x,
                    deg_y,
                });
                open = None;
            }
            (Some((_, _, _, _, terms)), _) => {
                if fields.len() != 3 {
                    return Err(bad(lineno, "expected: <i> <j> <coefficient>".into()));
                }
                let x_exp: u32 = fields[0]
                    .parse()
                    .map_err(|e| bad(lineno, format!("bad X exponent: {e}")))?;
                let y_exp: u32 = fields[1]
                    .parse()
                    .map_err(|e| bad(lineno, format!("bad Y exponent: {e}")))?;
                let coeff: i64 = fields[2]
                    .parse()
                    .map_err(|e| bad(lineno, format!("bad coefficient: {e}")))?;
                if coeff == 0 {
                    return Err(bad(lineno, "zero coefficient has no place in the catalog".into()));
                }
                if terms.iter().any(|t| t.x_exp == x_exp && t.y_exp == y_exp) {
                    return Err(bad(lineno, format!("duplicate monomial X^{x_exp} Y^{y_exp}")));
                }
                terms.push(MonomialTerm { x_exp, y_exp, coeff });
            }
        }
    }
    if let Some((head, name, ..)) = open {
        return Err(bad(head, format!("block {name} is missing its end marker")));
    }
    Ok(out)
}

const EMBEDDED: &str = include_str!("../data/polys.cat");

/// The built-in catalog: one relation per (hauptmodul, level) pair used by
/// the series machinery, certified through q^100 by this crate's tests.
pub fn catalog() -> &'static [ModularPolynomial] {
    static CACHE: OnceLock<Vec<ModularPolynomial>> = OnceLock::new();
    CACHE.get_or_init(|| parse_catalog(EMBEDDED).expect("embedded catalog is well-formed"))
}

/// Looks up the relation for a hauptmodul name and level.
pub fn find(hauptmodul: &str, level: u32) -> Result<&'static ModularPolynomial, ModPolyError> {
    catalog()
        .iter()
        .find(|p| p.hauptmodul == hauptmodul && p.level == level)
        .ok_or_else(|| ModPolyError::UnknownRelation {
            hauptmodul: hauptmodul.to_string(),
            level,
        })
}

/// Looks up the relation for a group's hauptmodul at the given level.
pub fn find_for_group(
    group: GroupLabel,
    level: u32,
) -> Result<&'static ModularPolynomial, ModPolyError> {
    find(group.hauptmodul_name(), level)
}
