//! Recursive-descent parser for rational-function expressions.
//!
//! Grammar (composition `o` binds loosest and associates right):
//!   expr     := additive ('o' expr)?
//!   additive := term (('+' | '-') term)*
//!   term     := unary (('*' | '/') unary)*
//!   unary    := '-' unary | power
//!   power    := atom ('^' '-'? integer)?
//!   atom     := integer | 'z' | 'x' | '(' expr ')'
//!
//! Error positions are byte offsets into the input.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Poly, RatError, RatFunc};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var,
    Comp,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, RatError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits parse");
                toks.push((start, Tok::Int(n)));
                continue;
            }
            b'z' | b'x' => Tok::Var,
            b'o' => Tok::Comp,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            other => {
                return Err(RatError::Parse {
                    pos: i,
                    msg: format!("unexpected character '{}'", other as char),
                })
            }
        };
        toks.push((i, tok));
        i += 1;
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].1.clone();
        self.i += 1;
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, expected: &str) -> RatError {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(t) => format!("{t:?}"),
        };
        RatError::Parse {
            pos: self.pos(),
            msg: format!("expected {expected}, found {found}"),
        }
    }

    fn expr(&mut self) -> Result<RatFunc, RatError> {
        let lhs = self.additive()?;
        if self.eat(&Tok::Comp) {
            let rhs = self.expr()?;
            return lhs.compose(&rhs);
        }
        Ok(lhs)
    }

    fn additive(&mut self) -> Result<RatFunc, RatError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.term()?);
            } else if self.eat(&Tok::Minus) {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, RatError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = acc.mul(&self.unary()?);
            } else if self.eat(&Tok::Slash) {
                acc = acc.div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, RatError> {
        if self.eat(&Tok::Minus) {
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc, RatError> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let negative = self.eat(&Tok::Minus);
        let exp = match self.peek() {
            Some(Tok::Int(_)) => match self.bump() {
                Tok::Int(n) => n,
                _ => unreachable!(),
            },
            _ => return Err(self.err("integer exponent")),
        };
        let exp: i64 = i64::try_from(&exp).map_err(|_| RatError::Parse {
            pos: self.pos(),
            msg: "exponent too large".to_string(),
        })?;
        base.pow(if negative { -exp } else { exp })
    }

    fn atom(&mut self) -> Result<RatFunc, RatError> {
        match self.peek() {
            Some(Tok::Int(_)) => match self.bump() {
                Tok::Int(n) => Ok(RatFunc::constant(BigRational::from_integer(n))),
                _ => unreachable!(),
            },
            Some(Tok::Var) => {
                self.bump();
                Ok(RatFunc::from_poly(Poly::var()))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.err("')'"));
                }
                Ok(inner)
            }
            _ => Err(self.err("integer, 'z', '-', or '('")),
        }
    }
}

/// Parse an expression to an exact rational function in canonical form.
pub fn parse_expr(text: &str) -> Result<RatFunc, RatError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        i: 0,
        end: text.len(),
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("end of input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::q_ratio;

    #[test]
    fn basic_expressions() {
        assert_eq!(parse_expr("z^2 o z^3").unwrap(), parse_expr("z^6").unwrap());
        assert_eq!(
            parse_expr("1/64").unwrap(),
            RatFunc::constant(q_ratio(1, 64))
        );
        assert_eq!(parse_expr("x^2 + 1").unwrap(), parse_expr("z^2+1").unwrap());
        assert_eq!(parse_expr("z^-2").unwrap(), parse_expr("1/z^2").unwrap());
        assert_eq!(
            parse_expr("2*z^2 - 3*z + 1").unwrap().degree(),
            2
        );
        // composition is right-associative and lowest precedence
        assert_eq!(
            parse_expr("z^2 + 1 o z + 1 o z - 1").unwrap(),
            parse_expr("z^2 + 1").unwrap()
        );
    }

    #[test]
    fn three_pole_formula_parses() {
        let f = parse_expr("-(1/64) * z^3 * (z^3 - 8)^3 / (z^3 + 1)^3").unwrap();
        assert_eq!(f.degree(), 12);
        assert_eq!(f.num().coeff(3), q_ratio(8, 1)); // (-1/64)(-8)^3 z^3
        assert_eq!(f.den().coeff(0), q_ratio(1, 1));
    }

    #[test]
    fn error_positions() {
        match parse_expr("z +") {
            Err(RatError::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_expr("z @ 1") {
            Err(RatError::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_expr("(z") {
            Err(RatError::Parse { pos, msg }) => {
                assert_eq!(pos, 2);
                assert!(msg.contains("')'"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert_eq!(parse_expr("1/(z - z)"), Err(RatError::DivisionByZero));
        assert_eq!(parse_expr("(z - z)^0"), Err(RatError::ZeroToZero));
    }

    #[test]
    fn print_parse_round_trip() {
        for s in [
            "-(1/64) * z^3 * (z^3 - 8)^3 / (z^3 + 1)^3",
            "256 * z^3 * (z^6 - 7*z^3 - 8)^3 / (z^6 + 20*z^3 - 8)^4",
            "(1/2) * (z + 1/z)",
            "2*z^2 + 4*z + 1",
            "z",
            "0",
            "-7/3",
        ] {
            let f = parse_expr(s).unwrap();
            let reparsed = parse_expr(&f.to_string()).unwrap();
            assert_eq!(f, reparsed, "round trip failed for {s}");
        }
    }
}
