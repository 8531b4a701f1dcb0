//! Recursive-descent parser for ordinal expressions.
//!
//! ```text
//! ordinal := term ( "+" term )* ;
//! term    := "w" power? coeff? | nat ;
//! power   := "^" atom ;
//! atom    := nat | "w" | "(" ordinal ")" ;
//! coeff   := "*" nat ;
//! nat     := [0-9]+ .
//! ```
//!
//! Whitespace is ignored and `#` starts a comment running to end of line.
//! Terms are summed left to right with ordinal addition.

use num_bigint::BigUint;
use thiserror::Error;

use super::Ordinal;

pub const DEFAULT_MAX_DEPTH: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Expected(&'static str),
    TrailingInput,
    TooDeep(usize),
}

/// A syntax error with the byte offset where it was detected.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{} at position {position}", describe(.kind))]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

fn describe(kind: &ParseErrorKind) -> String {
    match kind {
        ParseErrorKind::Expected(what) => format!("expected {what}"),
        ParseErrorKind::TrailingInput => "unexpected trailing input".to_string(),
        ParseErrorKind::TooDeep(limit) => format!("exponent nesting deeper than {limit}"),
    }
}

pub fn parse(text: &str) -> Result<Ordinal, ParseError> {
    parse_with_depth(text, DEFAULT_MAX_DEPTH)
}

pub fn parse_with_depth(text: &str, max_depth: usize) -> Result<Ordinal, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        max_depth,
    };
    let value = p.ordinal(0)?;
    p.skip_trivia();
    if p.pos < p.src.len() {
        return Err(p.error(ParseErrorKind::TrailingInput));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    max_depth: usize,
}

impl Parser<'_> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
        }
    }

    fn skip_trivia(&mut self) {
        while let Some(&c) = self.src.get(self.pos) {
            if c.is_ascii_whitespace() {
                self.pos += 1;
            } else if c == b'#' {
                while self.src.get(self.pos).is_some_and(|&c| c != b'\n') {
                    self.pos += 1;
                }
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_trivia();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ordinal(&mut self, depth: usize) -> Result<Ordinal, ParseError> {
        if depth > self.max_depth {
            return Err(self.error(ParseErrorKind::TooDeep(self.max_depth)));
        }
        let mut acc = self.term(depth)?;
        while self.eat(b'+') {
            let t = self.term(depth)?;
            acc = &acc + &t;
        }
        Ok(acc)
    }

    fn term(&mut self, depth: usize) -> Result<Ordinal, ParseError> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                let exponent = if self.eat(b'^') {
                    self.atom(depth + 1)?
                } else {
                    Ordinal::one()
                };
                let coefficient = if self.eat(b'*') {
                    self.nat()?
                } else {
                    BigUint::from(1u32)
                };
                Ok(Ordinal::term(exponent, coefficient))
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::nat(self.nat()?)),
            _ => Err(self.error(ParseErrorKind::Expected("term ('w' or a natural number)"))),
        }
    }

    fn atom(&mut self, depth: usize) -> Result<Ordinal, ParseError> {
        if depth > self.max_depth {
            return Err(self.error(ParseErrorKind::TooDeep(self.max_depth)));
        }
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                Ok(Ordinal::omega())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.ordinal(depth)?;
                if !self.eat(b')') {
                    return Err(self.error(ParseErrorKind::Expected("')'")));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::nat(self.nat()?)),
            _ => Err(self.error(ParseErrorKind::Expected("exponent (natural, 'w' or '(')"))),
        }
    }

    fn nat(&mut self) -> Result<BigUint, ParseError> {
        self.skip_trivia();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(ParseErrorKind::Expected("natural number")));
        }
        // digits only, so this cannot fail
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }
}
