//! ASCII polynomial text in the variable `x`.
//!
//! ```text
//! poly  := signs term (("+" | "-") signs term)*
//! signs := ("+" | "-")*
//! term  := int ["*"] "x" ["^" int] | int | "x" ["^" int]
//! ```
//!
//! Whitespace is ignored between tokens, terms may appear in any order and
//! repeated degrees are summed. Rendering goes through `Polynomial`'s
//! `Display`, whose output always parses back to the same polynomial.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use crate::poly::Polynomial;

/// Exponents above this are rejected rather than allocated.
pub const MAX_EXPONENT: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: {}", self.position + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigUint),
    X,
    Caret,
    Star,
    Plus,
    Minus,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                let value = digits.parse::<BigUint>().map_err(|e| ParseError {
                    position: start,
                    message: e.to_string(),
                })?;
                out.push((start, Token::Int(value)));
                continue;
            }
            b'x' | b'X' => Token::X,
            b'^' => Token::Caret,
            b'*' => Token::Star,
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            _ => {
                return Err(ParseError {
                    position: i,
                    message: format!("unexpected character {:?}", text[i..].chars().next().unwrap_or('?')),
                })
            }
        };
        out.push((i, tok));
        i += 1;
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

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn eat(&mut self, tok: &Token) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// Consumes a run of `+`/`-` and returns whether the net sign is negative.
    fn signs(&mut self) -> bool {
        let mut negative = false;
        loop {
            if self.eat(&Token::Minus) {
                negative = !negative;
            } else if !self.eat(&Token::Plus) {
                return negative;
            }
        }
    }

    fn exponent(&mut self) -> Result<usize, ParseError> {
        if !self.eat(&Token::Caret) {
            return Ok(1);
        }
        match self.peek().cloned() {
            Some(Token::Int(e)) => {
                let e = e
                    .to_usize()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| self.error(format!("exponent exceeds {MAX_EXPONENT}")))?;
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.error("expected exponent after '^'")),
        }
    }

    fn term(&mut self) -> Result<(BigInt, usize), ParseError> {
        match self.peek().cloned() {
            Some(Token::Int(c)) => {
                self.pos += 1;
                let starred = self.eat(&Token::Star);
                if self.eat(&Token::X) {
                    Ok((c.into(), self.exponent()?))
                } else if starred {
                    Err(self.error("expected 'x' after '*'"))
                } else {
                    Ok((c.into(), 0))
                }
            }
            Some(Token::X) => {
                self.pos += 1;
                Ok((BigInt::from(1), self.exponent()?))
            }
            Some(_) => Err(self.error("expected a coefficient or 'x'")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<Polynomial, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        end: text.len(),
    };
    if parser.tokens.is_empty() {
        return Err(parser.error("empty polynomial"));
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    loop {
        let negative = parser.signs();
        let (c, e) = parser.term()?;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigInt::default());
        }
        if negative {
            coeffs[e] -= c;
        } else {
            coeffs[e] += c;
        }
        match parser.peek() {
            None => break,
            Some(Token::Plus) | Some(Token::Minus) => continue,
            Some(_) => return Err(parser.error("expected '+' or '-' between terms")),
        }
    }
    Ok(Polynomial::new(coeffs))
}

pub fn render(f: &Polynomial) -> String {
    f.to_string()
}
