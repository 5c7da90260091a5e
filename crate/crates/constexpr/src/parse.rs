use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::Zero;

use crate::ast::AlgebraicExpr;
use crate::error::ConstExprError;

/// Parse an expression in the value grammar: rationals `p/q`, `pi`,
/// `gamma(p/q)`, `sqrt(e)`, `e^(p/q)`, parentheses, infix `+ - * /`,
/// unary minus. Whitespace-insensitive. Precedence, tightest first:
/// power, unary minus, `* /`, `+ -`.
pub fn parse(text: &str) -> Result<AlgebraicExpr, ConstExprError> {
    Parser::new(text, false)?.parse_full()
}

/// Like [`parse`] but additionally accepts the imaginary unit `i`,
/// for table points such as `(i*sqrt(3)-1)/2`.
pub fn parse_point(text: &str) -> Result<AlgebraicExpr, ConstExprError> {
    Parser::new(text, true)?.parse_full()
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Pi,
    ImaginaryUnit,
    Gamma,
    Sqrt,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    allow_i: bool,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ConstExprError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let c = bytes[k];
        match c {
            b' ' | b'\t' => k += 1,
            b'0'..=b'9' => {
                let start = k;
                while k < bytes.len() && bytes[k].is_ascii_digit() {
                    k += 1;
                }
                let n: BigInt = text[start..k].parse().expect("digit run");
                toks.push((Tok::Int(n), start));
            }
            b'a'..=b'z' => {
                let start = k;
                while k < bytes.len() && bytes[k].is_ascii_lowercase() {
                    k += 1;
                }
                let tok = match &text[start..k] {
                    "pi" => Tok::Pi,
                    "i" => Tok::ImaginaryUnit,
                    "gamma" => Tok::Gamma,
                    "sqrt" => Tok::Sqrt,
                    other => {
                        return Err(ConstExprError::Syntax {
                            pos: start,
                            msg: format!("unknown name `{other}`"),
                        })
                    }
                };
                toks.push((tok, start));
            }
            b'(' => {
                toks.push((Tok::LParen, k));
                k += 1;
            }
            b')' => {
                toks.push((Tok::RParen, k));
                k += 1;
            }
            b'+' => {
                toks.push((Tok::Plus, k));
                k += 1;
            }
            b'-' => {
                toks.push((Tok::Minus, k));
                k += 1;
            }
            b'*' => {
                toks.push((Tok::Star, k));
                k += 1;
            }
            b'/' => {
                toks.push((Tok::Slash, k));
                k += 1;
            }
            b'^' => {
                toks.push((Tok::Caret, k));
                k += 1;
            }
            _ => {
                return Err(ConstExprError::Syntax {
                    pos: k,
                    msg: format!("unexpected character `{}`", text[k..].chars().next().unwrap()),
                })
            }
        }
    }
    Ok(toks)
}

impl Parser {
    fn new(text: &str, allow_i: bool) -> Result<Self, ConstExprError> {
        Ok(Parser { toks: lex(text)?, pos: 0, end: text.len(), allow_i })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ConstExprError> {
        let pos = self.here();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(ConstExprError::Syntax { pos, msg: format!("expected {what}") }),
        }
    }

    fn parse_full(&mut self) -> Result<AlgebraicExpr, ConstExprError> {
        let e = self.parse_expr()?;
        if self.pos != self.toks.len() {
            return Err(ConstExprError::Syntax {
                pos: self.here(),
                msg: "unexpected trailing input".into(),
            });
        }
        Ok(e)
    }

    fn parse_expr(&mut self) -> Result<AlgebraicExpr, ConstExprError> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.parse_term()?;
                    acc = AlgebraicExpr::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.parse_term()?;
                    acc = AlgebraicExpr::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<AlgebraicExpr, ConstExprError> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.parse_factor()?;
                    acc = AlgebraicExpr::Mul(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Slash) => {
                    let pos = self.here();
                    self.bump();
                    let rhs = self.parse_factor()?;
                    // `p/q` between rational leaves is a single rational
                    // literal, which is what keeps print/parse an exact
                    // round trip on fractions.
                    if let (AlgebraicExpr::Rational(l), AlgebraicExpr::Rational(r)) = (&acc, &rhs)
                    {
                        if r.is_zero() {
                            return Err(ConstExprError::ZeroDenominator { pos });
                        }
                        acc = AlgebraicExpr::Rational(l / r);
                    } else {
                        acc = AlgebraicExpr::Div(Box::new(acc), Box::new(rhs));
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<AlgebraicExpr, ConstExprError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            let inner = self.parse_factor()?;
            return Ok(AlgebraicExpr::Neg(Box::new(inner)));
        }
        self.parse_power()
    }

    fn parse_power(&mut self) -> Result<AlgebraicExpr, ConstExprError> {
        let base = self.parse_atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let exp = self.parse_exponent()?;
            return Ok(AlgebraicExpr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    /// Exponent: a bare non-negative integer, or `(p)`, `(-p)`, `(p/q)`.
    fn parse_exponent(&mut self) -> Result<Rational64, ConstExprError> {
        let pos = self.here();
        match self.peek() {
            Some(Tok::Int(_)) => {
                let Some(Tok::Int(n)) = self.bump() else { unreachable!() };
                Ok(Rational64::from_integer(self.to_i64(&n, pos)?))
            }
            Some(Tok::LParen) => {
                self.bump();
                let q = self.parse_signed_rational()?;
                self.expect(Tok::RParen, "`)` after exponent")?;
                Ok(q)
            }
            _ => Err(ConstExprError::Syntax { pos, msg: "expected exponent".into() }),
        }
    }

    fn parse_signed_rational(&mut self) -> Result<Rational64, ConstExprError> {
        let negative = if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            true
        } else {
            false
        };
        let pos = self.here();
        let Some(Tok::Int(numer)) = self.bump() else {
            return Err(ConstExprError::Syntax { pos, msg: "expected integer".into() });
        };
        let mut numer = self.to_i64(&numer, pos)?;
        let mut denom = 1i64;
        if matches!(self.peek(), Some(Tok::Slash)) {
            self.bump();
            let dpos = self.here();
            let Some(Tok::Int(d)) = self.bump() else {
                return Err(ConstExprError::Syntax { pos: dpos, msg: "expected denominator".into() });
            };
            denom = self.to_i64(&d, dpos)?;
            if denom == 0 {
                return Err(ConstExprError::ZeroDenominator { pos: dpos });
            }
        }
        if negative {
            numer = -numer;
        }
        Ok(Rational64::new(numer, denom))
    }

    fn to_i64(&self, n: &BigInt, pos: usize) -> Result<i64, ConstExprError> {
        i64::try_from(n.clone()).map_err(|_| ConstExprError::Syntax {
            pos,
            msg: "integer too large for an exponent or gamma argument".into(),
        })
    }

    fn parse_atom(&mut self) -> Result<AlgebraicExpr, ConstExprError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(AlgebraicExpr::Rational(BigRational::from(n))),
            Some(Tok::Pi) => Ok(AlgebraicExpr::Pi),
            Some(Tok::ImaginaryUnit) => {
                if self.allow_i {
                    Ok(AlgebraicExpr::I)
                } else {
                    Err(ConstExprError::ImaginaryNotAllowed { pos })
                }
            }
            Some(Tok::Gamma) => {
                self.expect(Tok::LParen, "`(` after gamma")?;
                let q = self.parse_signed_rational()?;
                self.expect(Tok::RParen, "`)` after gamma argument")?;
                Ok(AlgebraicExpr::Gamma(q))
            }
            Some(Tok::Sqrt) => {
                self.expect(Tok::LParen, "`(` after sqrt")?;
                let e = self.parse_expr()?;
                self.expect(Tok::RParen, "`)` after sqrt argument")?;
                Ok(AlgebraicExpr::Sqrt(Box::new(e)))
            }
            Some(Tok::LParen) => {
                let e = self.parse_expr()?;
                self.expect(Tok::RParen, "closing `)`")?;
                Ok(e)
            }
            _ => Err(ConstExprError::Syntax { pos, msg: "expected a value".into() }),
        }
    }
}
