//! Text grammar for polynomials.
//!
//! ```text
//! expr    := sign? term (('+'|'-') term)*
//! term    := factor ('*' factor)*
//! factor  := atom ('^' uint)?
//! atom    := '(' expr ')' | name | coeff
//! coeff   := int ('/' uint)?
//! ```
//!
//! Whitespace is insignificant. Names resolve to ring generators, or through
//! an optional resolver for bound names in spec files.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};
use crate::ring::RingSpec;

/// Parses `text` into a canonical polynomial over `spec`.
pub fn parse(text: &str, spec: &Arc<RingSpec>) -> Result<Polynomial> {
    parse_with_resolver(text, spec, &|_| None)
}

/// Like [`parse`], but unknown names are first offered to `resolver`
/// (used by spec files to substitute named polynomial bindings).
pub fn parse_with_resolver(
    text: &str,
    spec: &Arc<RingSpec>,
    resolver: &dyn Fn(&str) -> Option<Polynomial>,
) -> Result<Polynomial> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        spec,
        resolver,
    };
    p.skip_ws();
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    spec: &'a Arc<RingSpec>,
    resolver: &'a dyn Fn(&str) -> Option<Polynomial>,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                let f = self.factor()?;
                acc = &acc * &f;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            if self.peek() == Some(b'-') {
                return Err(Error::NegativeExponent);
            }
            let e = self.uint()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.name();
                if let Ok(v) = Polynomial::variable(self.spec, &name) {
                    return Ok(v);
                }
                if let Some(bound) = (self.resolver)(&name) {
                    return Ok(bound);
                }
                Err(Error::UnknownName(name))
            }
            Some(c) if c.is_ascii_digit() => {
                let value = self.rational()?;
                Ok(Polynomial::constant(self.spec, value))
            }
            _ => Err(self.error("expected a name, number, or `(`")),
        }
    }

    fn name(&mut self) -> String {
        let start = self.pos;
        while self
            .peek()
            .map(|c| c.is_ascii_alphanumeric() || c == b'_')
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn digits(&mut self) -> Result<&'a [u8]> {
        let start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(&self.bytes[start..self.pos])
    }

    fn uint(&mut self) -> Result<u32> {
        let digits = self.digits()?;
        std::str::from_utf8(digits)
            .ok()
            .and_then(|s| u32::from_str(s).ok())
            .ok_or_else(|| self.error("exponent out of range"))
    }

    fn rational(&mut self) -> Result<Rational> {
        let numer = BigInt::from_str(std::str::from_utf8(self.digits()?).unwrap()).unwrap();
        // A slash directly after an integer literal forms a rational literal;
        // general division is not part of the grammar.
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let denom = BigInt::from_str(std::str::from_utf8(self.digits()?).unwrap()).unwrap();
            if denom.is_zero() {
                return Err(self.error("zero denominator"));
            }
            return Ok(Rational::new(numer, denom));
        }
        Ok(Rational::from_integer(numer))
    }
}
