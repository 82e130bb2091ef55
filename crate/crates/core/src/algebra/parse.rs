//! Parser for univariate polynomials written as text, e.g. `y^2 = x^6 - 3/2*x^3 + 1`.

use super::poly::QPoly;
use super::rational::{parse_rational, Rational};
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        match c {
            ' ' | '\t' | '\n' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < cs.len() && cs[i + 1].is_ascii_digit() {
                    i += 1;
                }
                out.push(Tok::Num(cs[start..=i].iter().collect()));
            }
            'x' | 'X' => out.push(Tok::Var),
            '+' => out.push(Tok::Plus),
            '-' | '\u{2212}' => out.push(Tok::Minus),
            '*' => out.push(Tok::Star),
            '/' => out.push(Tok::Slash),
            '^' => out.push(Tok::Caret),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            _ => return Err(Error::Parse(format!("unexpected character '{c}'"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<QPoly> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -self.term()?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
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

    fn term(&mut self) -> Result<QPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.power()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(Error::Parse("division by a non-constant or zero".into()));
                    }
                    let inv = <Rational as Ring>::one() / d.coeff(0);
                    acc = acc.scale(&inv);
                }
                // Implicit multiplication: `3x`, `2(x+1)`, `(x+1)(x-1)`.
                Some(Tok::Num(_)) | Some(Tok::Var) | Some(Tok::LParen) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<QPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = match self.next() {
                Some(Tok::Num(n)) => n.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent {n}")))?,
                _ => return Err(Error::Parse("exponent must be a non-negative integer".into())),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<QPoly> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(QPoly::constant(parse_rational(&n)?)),
            Some(Tok::Var) => Ok(QPoly::x()),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Parse("missing ')'".into())),
                }
            }
            Some(Tok::Minus) => Ok(-self.atom()?),
            t => Err(Error::Parse(format!("unexpected token {t:?}"))),
        }
    }
}

/// Parses a polynomial in `x`. A leading `y^2 =` is accepted and dropped.
pub fn parse_poly(s: &str) -> Result<QPoly> {
    let rhs = match s.split_once('=') {
        Some((lhs, rhs)) => {
            let l: String = lhs.chars().filter(|c| !c.is_whitespace()).collect();
            if l != "y^2" && l != "Y^2" {
                return Err(Error::Parse(format!("left side must be y^2, got '{l}'")));
            }
            rhs
        }
        None => s,
    };
    let toks = lex(rhs)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn parses_curves() {
        let p = parse_poly("y^2 = x^6 - 3/2*x^3 + 1").unwrap();
        assert_eq!(p, QPoly::from_rationals(&[rat(1, 1), rat(0, 1), rat(0, 1), rat(-3, 2), rat(0, 1), rat(0, 1), rat(1, 1)]));
        let q = parse_poly("(X^3+1)(4X^3+1)").unwrap();
        assert_eq!(q, QPoly::from_i64s(&[1, 0, 0, 5, 0, 0, 4]));
        assert_eq!(parse_poly("-2x^2+x").unwrap(), QPoly::from_i64s(&[0, 1, -2]));
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("z = x").is_err());
        assert!(parse_poly("x/(x+1)").is_err());
    }
}
