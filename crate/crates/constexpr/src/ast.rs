use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};

/// Expression tree for exact algebraic/Gamma constants.
///
/// The parser only produces non-negative `Rational` leaves (a leading minus
/// becomes `Neg`), and it folds `p/q` between two rational leaves into a
/// single `Rational`, so `Div(Rational, Rational)` never occurs in parsed
/// trees. Keeping both conventions is what makes `parse(print(t)) == t` hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraicExpr {
    Rational(BigRational),
    Pi,
    /// Imaginary unit; only legal in table *points*, never in values.
    I,
    Gamma(Rational64),
    Sqrt(Box<AlgebraicExpr>),
    Pow(Box<AlgebraicExpr>, Rational64),
    Neg(Box<AlgebraicExpr>),
    Add(Box<AlgebraicExpr>, Box<AlgebraicExpr>),
    Sub(Box<AlgebraicExpr>, Box<AlgebraicExpr>),
    Mul(Box<AlgebraicExpr>, Box<AlgebraicExpr>),
    Div(Box<AlgebraicExpr>, Box<AlgebraicExpr>),
}

impl AlgebraicExpr {
    pub fn integer(n: i64) -> Self {
        AlgebraicExpr::Rational(BigRational::from(BigInt::from(n)))
    }

    /// True if any node is the imaginary unit.
    pub fn contains_i(&self) -> bool {
        use AlgebraicExpr::*;
        match self {
            I => true,
            Rational(_) | Pi | Gamma(_) => false,
            Sqrt(e) | Pow(e, _) | Neg(e) => e.contains_i(),
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) => a.contains_i() || b.contains_i(),
        }
    }

    /// Binding strength for the canonical printer. Higher binds tighter.
    /// Fractional rationals print as `p/q` and therefore live at the
    /// multiplicative level; `Neg` also does, because `-a*b` reparses as
    /// `(-a)*b` (unary minus binds tighter than `*`).
    fn level(&self) -> u8 {
        use AlgebraicExpr::*;
        match self {
            Add(..) | Sub(..) => 0,
            Mul(..) | Div(..) | Neg(..) => 1,
            Rational(q) if !q.is_integer() => 1,
            Pow(..) => 3,
            Rational(_) | Pi | I | Gamma(_) | Sqrt(_) => 4,
        }
    }

    fn fmt_child(
        &self,
        f: &mut fmt::Formatter<'_>,
        required: u8,
        parenthesize_neg: bool,
    ) -> fmt::Result {
        let needs = self.level() < required
            || (parenthesize_neg && matches!(self, AlgebraicExpr::Neg(_)));
        if needs {
            write!(f, "(")?;
            write!(f, "{self}")?;
            write!(f, ")")
        } else {
            write!(f, "{self}")
        }
    }
}

fn fmt_rational64(f: &mut fmt::Formatter<'_>, q: Rational64) -> fmt::Result {
    if *q.denom() == 1 {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for AlgebraicExpr {
    /// Canonical form: `parse(canonical) == self`, and the shipped catalog
    /// files consist of lines already in canonical form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use AlgebraicExpr::*;
        match self {
            Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Pi => write!(f, "pi"),
            I => write!(f, "i"),
            Gamma(q) => {
                write!(f, "gamma(")?;
                fmt_rational64(f, *q)?;
                write!(f, ")")
            }
            Sqrt(e) => write!(f, "sqrt({e})"),
            Pow(b, q) => {
                b.fmt_child(f, 4, false)?;
                write!(f, "^(")?;
                fmt_rational64(f, *q)?;
                write!(f, ")")
            }
            Neg(e) => {
                write!(f, "-")?;
                e.fmt_child(f, 2, false)
            }
            Add(a, b) => {
                a.fmt_child(f, 0, false)?;
                write!(f, "+")?;
                b.fmt_child(f, 1, true)
            }
            Sub(a, b) => {
                a.fmt_child(f, 0, false)?;
                write!(f, "-")?;
                b.fmt_child(f, 1, true)
            }
            Mul(a, b) => {
                a.fmt_child(f, 1, false)?;
                write!(f, "*")?;
                b.fmt_child(f, 2, false)
            }
            Div(a, b) => {
                a.fmt_child(f, 1, false)?;
                write!(f, "/")?;
                b.fmt_child(f, 2, false)
            }
        }
    }
}
