//! Text syntax for polynomials.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := unary ("*" unary)*
//! unary := ("-" | "+") unary | power
//! power := atom ("^" INT)?
//! atom  := INT ("/" INT)? | VAR | "(" expr ")"
//! ```
//!
//! Variables are `x, y` in the affine plane and `x0, x1, x2` in the
//! projective plane. Multiplication is always explicit.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::algebra::{Monomial, MonomialOrder, Polynomial, Scalar};

/// Largest total degree an expression may expand to.
pub const MAX_DEGREE: u32 = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    /// `x, y`
    Affine2,
    /// `x0, x1, x2`
    Projective3,
}

impl Ambient {
    pub fn arity(self) -> usize {
        match self {
            Ambient::Affine2 => 2,
            Ambient::Projective3 => 3,
        }
    }

    fn variable(self, name: &str) -> Option<usize> {
        match (self, name) {
            (Ambient::Affine2, "x") => Some(0),
            (Ambient::Affine2, "y") => Some(1),
            (Ambient::Projective3, "x0") => Some(0),
            (Ambient::Projective3, "x1") => Some(1),
            (Ambient::Projective3, "x2") => Some(2),
            _ => None,
        }
    }

    fn variable_list(self) -> &'static str {
        match self {
            Ambient::Affine2 => "x, y",
            Ambient::Projective3 => "x0, x1, x2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {message} (expected {expected})")]
pub struct ExprSyntaxError {
    /// Byte offset into the input; may equal the input length at end of input.
    pub offset: usize,
    pub message: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "number {n}"),
            Tok::Ident(s) => write!(f, "identifier {s:?}"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn err(offset: usize, message: impl Into<String>, expected: impl Into<String>) -> ExprSyntaxError {
    ExprSyntaxError { offset, message: message.into(), expected: expected.into() }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ExprSyntaxError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(err(
                    start,
                    format!("unexpected character {ch:?}"),
                    "a number, variable, operator or parenthesis",
                ));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ambient: Ambient,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial, ExprSyntaxError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ExprSyntaxError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            let at = self.bump().0;
            let rhs = self.unary()?;
            let deg = acc.degree().unwrap_or(0) + rhs.degree().unwrap_or(0);
            if deg > MAX_DEGREE {
                return Err(err(at, format!("product has degree {deg}"), format!("degree at most {MAX_DEGREE}")));
            }
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ExprSyntaxError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ExprSyntaxError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (at, tok) = self.bump();
        let Tok::Int(e) = tok else {
            return Err(err(at, format!("found {tok} after '^'"), "a non-negative integer exponent"));
        };
        let e = e
            .to_u32()
            .filter(|&e| e <= MAX_DEGREE)
            .ok_or_else(|| err(at, "exponent too large", format!("an exponent at most {MAX_DEGREE}")))?;
        let deg = base.degree().unwrap_or(0) as u64 * e as u64;
        if deg > MAX_DEGREE as u64 {
            return Err(err(at, format!("power has degree {deg}"), format!("degree at most {MAX_DEGREE}")));
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<Polynomial, ExprSyntaxError> {
        let arity = self.ambient.arity();
        let (at, tok) = self.bump();
        match tok {
            Tok::Int(n) => {
                if *self.peek() != Tok::Slash {
                    return Ok(Polynomial::constant(arity, Scalar::from_bigint(n)));
                }
                self.bump();
                let (dat, dtok) = self.bump();
                let Tok::Int(d) = dtok else {
                    return Err(err(dat, format!("found {dtok} in fraction"), "an integer denominator"));
                };
                let q =
                    Scalar::from_bigints(n, d).map_err(|_| err(dat, "zero denominator", "a nonzero denominator"))?;
                Ok(Polynomial::constant(arity, q))
            }
            Tok::Ident(name) => match self.ambient.variable(&name) {
                Some(v) => Ok(Polynomial::var(arity, v)),
                None => Err(err(
                    at,
                    format!("unknown variable {name:?}"),
                    format!("one of {}", self.ambient.variable_list()),
                )),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                let (cat, close) = self.bump();
                if close != Tok::RParen {
                    return Err(err(cat, format!("found {close}"), "')'"));
                }
                Ok(inner)
            }
            other => Err(err(at, format!("found {other}"), "a number, variable or '('")),
        }
    }
}

/// Parses and fully expands a polynomial expression.
pub fn parse_poly(text: &str, ambient: Ambient) -> Result<Polynomial, ExprSyntaxError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, ambient };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        let t = p.peek().clone();
        return Err(err(p.offset(), format!("unexpected {t}"), "an operator or end of input"));
    }
    Ok(out)
}

fn variable_names(arity: usize) -> &'static [&'static str] {
    match arity {
        2 => &["x", "y"],
        _ => &["x0", "x1", "x2"],
    }
}

fn write_monomial(out: &mut String, m: &Monomial) {
    let names = variable_names(m.arity());
    let mut first = true;
    for (v, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(names[v]);
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
}

/// Canonical text form with terms in strictly decreasing `order`.
pub fn render_poly(f: &Polynomial, order: &MonomialOrder) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in f.sorted_terms(order).iter().enumerate() {
        if c.is_negative() {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let abs = c.abs();
        if m.is_one() {
            let _ = write!(out, "{abs}");
        } else {
            if !abs.is_one() {
                let _ = write!(out, "{abs}*");
            }
            write_monomial(&mut out, m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::OrderKind;

    #[test]
    fn family_member_has_three_terms() {
        let f = parse_poly("x^9+y^9+x^7*y^3", Ambient::Affine2).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.degree(), Some(10));
    }

    #[test]
    fn expansion_of_non_ordinary_sextic() {
        let f = parse_poly("x*y*(x-y)*(x+y)^2+x^6+y^6", Ambient::Affine2).unwrap();
        // xy(x-y)(x+y)^2 = x^4 y + x^3 y^2 - x^2 y^3 - x y^4
        let expected = parse_poly("x^4*y+x^3*y^2-x^2*y^3-x*y^4", Ambient::Affine2).unwrap();
        assert_eq!(f.homogeneous_component(5), expected);
        assert_eq!(f.len(), 6);
    }

    #[test]
    fn negative_exponent_rejected_at_minus() {
        let e = parse_poly("x^-2", Ambient::Affine2).unwrap_err();
        assert_eq!(e.offset, 2);
    }

    #[test]
    fn error_cases_carry_offsets() {
        let cases = [
            ("x+z", 2),
            ("3/0*x", 2),
            ("(x+y", 4),
            ("x+y)", 3),
            ("x^y", 2),
            ("2x", 1),
            ("x0", 0),
            ("", 0),
            ("x^1/2", 3),
        ];
        for (text, offset) in cases {
            let e = parse_poly(text, Ambient::Affine2).unwrap_err();
            assert_eq!(e.offset, offset, "{text}: {e}");
        }
        assert!(parse_poly("x", Ambient::Projective3).is_err());
    }

    #[test]
    fn rationals_and_unary_minus() {
        let f = parse_poly("-3/4*x + -(-y)", Ambient::Affine2).unwrap();
        let g = Polynomial::from_terms(
            2,
            [(Scalar::new(-3, 4).unwrap(), Monomial::xy(1, 0)), (Scalar::one(), Monomial::xy(0, 1))],
        );
        assert_eq!(f, g);
        let h = parse_poly("x0^2*x1 - 1/2*x2^3", Ambient::Projective3).unwrap();
        assert_eq!(h.arity(), 3);
    }

    #[test]
    fn degree_limit() {
        assert!(parse_poly("(x+y)^201", Ambient::Affine2).is_err());
        assert!(parse_poly("(x^100)^3", Ambient::Affine2).is_err());
    }

    #[test]
    fn render_examples() {
        let o = MonomialOrder::grlex();
        assert_eq!(render_poly(&Polynomial::zero(2), &o), "0");
        let f = parse_poly("y^2-x^3", Ambient::Affine2).unwrap();
        assert_eq!(render_poly(&f, &o), "-x^3+y^2");
        let g = parse_poly("1/2 - 3*x*y + y", Ambient::Affine2).unwrap();
        assert_eq!(render_poly(&g, &o), "-3*x*y+y+1/2");
        let lex_y = MonomialOrder::with_precedence(OrderKind::Lex, &[1, 0]).unwrap();
        assert_eq!(render_poly(&f, &lex_y), "y^2-x^3");
    }
}
