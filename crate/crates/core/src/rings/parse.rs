//! Recursive-descent parser for polynomial text.
//!
//! Accepts integers, `p/q`, `X`, `^` with a natural exponent, `*`, `+`, `-`,
//! parentheses, and juxtaposition as multiplication (`3X+2`). Division is only
//! allowed by a nonzero constant.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::Poly;
use crate::{Error, Rational};

pub fn parse_poly(text: &str) -> Result<Poly, Error> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("operator or end of input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, expected: &str) -> Error {
        Error::Parse { position: self.pos, expected: expected.to_string() }
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

    fn expr(&mut self) -> Result<Poly, Error> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
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

    fn starts_atom(&mut self) -> bool {
        matches!(self.peek(), Some(b'0'..=b'9' | b'X' | b'x' | b'('))
    }

    fn term(&mut self) -> Result<Poly, Error> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.power()?;
            } else if self.peek() == Some(b'/') {
                self.pos += 1;
                let at = self.pos;
                let d = self.power()?;
                match d.as_constant() {
                    Some(c) if !c.is_zero() => {
                        acc = acc.scale(&(Rational::from_integer(1.into()) / c));
                    }
                    _ => {
                        self.pos = at;
                        return Err(self.err("nonzero constant divisor"));
                    }
                }
            } else if self.starts_atom() {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Poly, Error> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let at = self.pos;
            let digits = self.digits().ok_or_else(|| self.err("exponent"))?;
            let e: u32 = digits.parse().map_err(|_| Error::Parse {
                position: at,
                expected: "exponent below 2^32".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start)
            .then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<Poly, Error> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let d = self.digits().expect("digit present");
                let n: BigInt = d.parse().expect("decimal digits");
                Ok(Poly::from_bigint(n))
            }
            Some(b'X' | b'x') => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("')'"));
                }
                Ok(inner)
            }
            _ => Err(self.err("integer, X or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_the_usual_forms() {
        let a = parse_poly("X^2+2X+1").unwrap();
        assert_eq!(a, parse_poly("(X+1)^2").unwrap());
        assert_eq!(a, parse_poly("X*X + 2*X + 1").unwrap());
        assert_eq!(parse_poly("1/3*X").unwrap(), parse_poly("X/3").unwrap());
        assert_eq!(parse_poly("-3").unwrap(), Poly::from_int(-3));
    }

    #[test]
    fn error_positions() {
        assert_eq!(
            parse_poly("X^^2"),
            Err(Error::Parse { position: 2, expected: "exponent".into() })
        );
        assert!(matches!(parse_poly("X/0"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse_poly("X/X"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("(X+1"), Err(Error::Parse { position: 4, .. })));
        assert!(matches!(parse_poly(""), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(parse_poly("X)"), Err(Error::Parse { position: 1, .. })));
    }
}
