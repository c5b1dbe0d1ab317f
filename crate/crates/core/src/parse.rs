//! Text syntax for polynomials.
//!
//! Integers (optionally a rational literal `a/b`), identifiers
//! `[A-Za-z][A-Za-z0-9_]*`, the operators `+ - * ^`, parentheses and
//! insignificant whitespace. Multiplication must be written explicitly and
//! exponents are non-negative integer literals. The printer in
//! `Display for Polynomial` emits text this parser reads back.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::PolyError;
use crate::poly::{Polynomial, RingRef};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Dot,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '.' => Tok::Dot,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().expect("digits")), start));
                continue;
            }
            a if a.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(PolyError::Syntax {
                    message: format!("unexpected character {other:?}"),
                    position: start,
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a RingRef,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end)
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax { message: message.into(), position: self.offset() })
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    return self.syntax("implicit multiplication is not allowed; use `*`")
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.offset();
        let e = match self.toks.get(self.pos).map(|t| t.0.clone()) {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                n
            }
            Some(Tok::Minus) => {
                return Err(PolyError::BadExponent {
                    message: "negative exponents are not allowed".into(),
                    position: at,
                })
            }
            _ => {
                return Err(PolyError::BadExponent {
                    message: "exponent must be a non-negative integer literal".into(),
                    position: at,
                })
            }
        };
        if matches!(self.peek(), Some(Tok::Dot) | Some(Tok::Slash)) {
            return Err(PolyError::BadExponent {
                message: "exponent must be an integer".into(),
                position: at,
            });
        }
        let e = e.to_u32().filter(|&e| e <= u16::MAX as u32).ok_or(PolyError::BadExponent {
            message: "exponent too large".into(),
            position: at,
        })?;
        Ok(base.pow(e))
    }

    fn primary(&mut self) -> Result<Polynomial, PolyError> {
        let at = self.offset();
        match self.toks.get(self.pos).map(|t| t.0.clone()) {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let d = match self.toks.get(self.pos).map(|t| t.0.clone()) {
                        Some(Tok::Int(d)) => d,
                        _ => return self.syntax("expected an integer denominator after `/`"),
                    };
                    if d.is_zero() {
                        return self.syntax("zero denominator");
                    }
                    self.pos += 1;
                    return Ok(Polynomial::constant(self.ring, BigRational::new(n, d)));
                }
                Ok(Polynomial::constant(self.ring, BigRational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.ring.index_of(&name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(PolyError::UnknownVariable { name, position: at }),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.syntax("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Dot) => self.syntax("decimal numbers are not allowed"),
            Some(t) => self.syntax(format!("unexpected token {t:?}")),
            None => self.syntax("unexpected end of input"),
        }
    }
}

/// Parses `text` as a polynomial in `ring`.
pub fn parse_polynomial(ring: &RingRef, text: &str) -> Result<Polynomial, PolyError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(PolyError::Syntax { message: "empty input".into(), position: 0 });
    }
    let mut p = Parser { ring, toks, pos: 0, end: text.len() };
    let result = p.expr()?;
    if p.pos != p.toks.len() {
        return p.syntax(match p.peek() {
            Some(Tok::RParen) => "unbalanced `)`".to_string(),
            Some(t) => format!("unexpected token {t:?}"),
            None => unreachable!(),
        });
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, WeightedRing};

    fn ring() -> RingRef {
        WeightedRing::new([("x2", 1), ("y", 2), ("z1", 3), ("z2", 3), ("u", 4), ("v", 5)]).unwrap()
    }

    #[test]
    fn parses_cone_generator() {
        let r = ring();
        let f1 = parse_polynomial(&r, "x2*z2 - y^2").unwrap();
        assert_eq!(f1.len(), 2);
        assert_eq!(f1.to_string(), "-y^2 + x2*z2");
    }

    #[test]
    fn zero_and_binomial() {
        let r = ring();
        assert!(parse_polynomial(&r, "0").unwrap().is_zero());
        let p = parse_polynomial(&r, "(y+z1)^2").unwrap();
        let q = parse_polynomial(&r, "y^2 + 2*y*z1 + z1^2").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rational_literals_and_unary_minus() {
        let r = ring();
        let p = parse_polynomial(&r, "-3/2*x2^2 + 1/2").unwrap();
        assert_eq!(p.to_string(), "-3/2*x2^2 + 1/2");
        let q = parse_polynomial(&r, "-x2^2").unwrap();
        assert_eq!(q.leading_coeff().unwrap(), &rat(-1));
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring();
        match parse_polynomial(&r, "x2 + w") {
            Err(PolyError::UnknownVariable { name, position }) => {
                assert_eq!(name, "w");
                assert_eq!(position, 5);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_polynomial(&r, "x2 y"), Err(PolyError::Syntax { position: 3, .. })));
        assert!(matches!(parse_polynomial(&r, "2x2"), Err(PolyError::Syntax { position: 1, .. })));
        assert!(matches!(parse_polynomial(&r, "x2^1.5"), Err(PolyError::BadExponent { position: 3, .. })));
        assert!(matches!(parse_polynomial(&r, "x2^-1"), Err(PolyError::BadExponent { .. })));
        assert!(matches!(parse_polynomial(&r, "x2^y"), Err(PolyError::BadExponent { .. })));
        assert!(matches!(parse_polynomial(&r, "(x2"), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_polynomial(&r, "x2)"), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_polynomial(&r, ""), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_polynomial(&r, "x2 # y"), Err(PolyError::Syntax { position: 3, .. })));
    }

    #[test]
    fn whitespace_is_insignificant() {
        let r = ring();
        assert_eq!(
            parse_polynomial(&r, " x2 *\tz2-y ^ 2 ").unwrap(),
            parse_polynomial(&r, "x2*z2-y^2").unwrap()
        );
    }
}
