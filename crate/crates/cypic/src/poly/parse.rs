//! Parser for integer-coefficient polynomial expressions.
//!
//! Grammar: named variables and integer literals combined with `+ - * ^` and
//! parentheses. `^` takes a non-negative integer exponent and binds tighter
//! than unary minus, which binds tighter than `*`, which binds tighter than
//! `+`/`-`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ExactPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(n) => write!(f, "{}", n),
            Token::Ident(s) => write!(f, "{}", s),
            Token::Plus => write!(f, "+"),
            Token::Minus => write!(f, "-"),
            Token::Star => write!(f, "*"),
            Token::Caret => write!(f, "^"),
            Token::LParen => write!(f, "("),
            Token::RParen => write!(f, ")"),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            b'-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            b'*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            b'^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            b'(' => {
                out.push((i, Token::LParen));
                i += 1;
            }
            b')' => {
                out.push((i, Token::RParen));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digits");
                out.push((start, Token::Int(n)));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Token::Ident(src[start..i].to_string())));
            }
            _ => {
                return Err(ParseError {
                    position: i,
                    message: format!("unexpected character {:?}", src[i..].chars().next().unwrap()),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: &Token) -> Result<(), ParseError> {
        let position = self.here();
        match self.bump() {
            Some(ref t) if t == want => Ok(()),
            other => Err(ParseError {
                position,
                message: match other {
                    Some(t) => format!("expected `{}`, found `{}`", want, t),
                    None => format!("expected `{}`, found end of input", want),
                },
            }),
        }
    }

    fn expr(&mut self) -> Result<ExactPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ExactPoly, ParseError> {
        let mut acc = self.unary()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<ExactPoly, ParseError> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<ExactPoly, ParseError> {
        let base = self.primary()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            let position = self.here();
            match self.bump() {
                Some(Token::Int(n)) => {
                    let exp = u32::try_from(&n).map_err(|_| ParseError {
                        position,
                        message: format!("exponent {} out of range", n),
                    })?;
                    Ok(base.pow(exp))
                }
                other => Err(ParseError {
                    position,
                    message: match other {
                        Some(t) => format!("expected integer exponent, found `{}`", t),
                        None => "expected integer exponent, found end of input".to_string(),
                    },
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<ExactPoly, ParseError> {
        let position = self.here();
        match self.bump() {
            Some(Token::Int(n)) => Ok(ExactPoly::constant(BigRational::from_integer(n))),
            Some(Token::Ident(name)) => Ok(ExactPoly::var(&name)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                self.expect(&Token::RParen)?;
                Ok(inner)
            }
            other => Err(ParseError {
                position,
                message: match other {
                    Some(t) => format!("expected a value, found `{}`", t),
                    None => "expected a value, found end of input".to_string(),
                },
            }),
        }
    }
}

/// Parses an integer-coefficient polynomial expression.
pub fn parse_poly(src: &str) -> Result<ExactPoly, ParseError> {
    let tokens = tokenize(src)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: src.len(),
    };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(ParseError {
            position: parser.here(),
            message: "trailing input after expression".to_string(),
        });
    }
    Ok(poly)
}
