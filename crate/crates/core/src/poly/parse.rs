//! Recursive-descent parser for the ASCII polynomial grammar:
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := rational | identifier | '(' expr ')'
//! ```
//!
//! A leading `-` is accepted in front of any factor.

use alloc::string::{String, ToString};
use alloc::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Poly, Rational, Ring};
use crate::error::PolyError;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<Ring>,
}

pub(super) fn parse(text: &str, ring: &Arc<Ring>) -> Result<Poly, PolyError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

impl Parser<'_> {
    fn error(&self, message: &str) -> PolyError {
        PolyError::Syntax { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
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

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.try_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, PolyError> {
        if self.eat(b'-') {
            return Ok(-self.factor()?);
        }
        let base = self.base()?;
        if self.eat(b'^') {
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                self.pos = start;
                return Err(self.error("expected exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| self.error("exponent too large"))?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn base(&mut self) -> Result<Poly, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().map_err(|_| self.error("bad integer"))?;
                let mut value = Rational::from_integer(num);
                if self.eat(b'/') {
                    let at = self.pos;
                    let den = self.digits();
                    if den.is_empty() {
                        return Err(self.error("expected denominator"));
                    }
                    let den: BigInt = den.parse().map_err(|_| self.error("bad integer"))?;
                    if den.is_zero() {
                        self.pos = at;
                        return Err(self.error("zero denominator"));
                    }
                    value = Rational::new(value.to_integer(), den);
                }
                Poly::from_rational(self.ring, &value)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap_or_default();
                match self.ring.vars().index_of(name) {
                    Some(i) => Ok(Poly::var_index(self.ring, i)),
                    None => Err(PolyError::UnknownVariable(name.to_string())),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::Field;
    use super::*;

    #[test]
    fn syntax_errors_carry_position() {
        let r = Ring::with_names(&["x", "y"], Field::Rationals).unwrap();
        match parse("x + * y", &r) {
            Err(PolyError::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("(x + y", &r), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse("x^", &r), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse("1/0", &r), Err(PolyError::Syntax { .. })));
        assert_eq!(parse("x + z", &r), Err(PolyError::UnknownVariable("z".into())));
    }

    #[test]
    fn prime_field_parsing() {
        let r = Ring::with_names(&["x"], Field::Prime(7)).unwrap();
        assert_eq!(parse("1/2*x", &r).unwrap(), parse("4*x", &r).unwrap());
        assert_eq!(parse("1/7*x", &r), Err(PolyError::NotInvertible(7)));
        assert!(parse("7*x", &r).unwrap().is_zero());
    }
}
