//! Text form `[[a,b],[c,d]]` for matrices.

use super::{Mat2, RingMat};
use crate::rings::{parse_poly, ModelId, Poly};
use crate::{Error, Result};

pub fn parse_mat(model: ModelId, text: &str) -> Result<Mat2> {
    let mut s = Scanner { src: text.as_bytes(), pos: 0 };
    s.expect(b'[')?;
    s.expect(b'[')?;
    let a = s.entry(text)?;
    s.expect(b',')?;
    let b = s.entry(text)?;
    s.expect(b']')?;
    s.expect(b',')?;
    s.expect(b'[')?;
    let c = s.entry(text)?;
    s.expect(b',')?;
    let d = s.entry(text)?;
    s.expect(b']')?;
    s.expect(b']')?;
    s.skip_ws();
    if s.pos != s.src.len() {
        return Err(Error::Parse { position: s.pos, expected: "end of input".into() });
    }
    Mat2::from_ring(model, RingMat::new(a, b, c, d))
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Scanner<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse { position: self.pos, expected: format!("'{}'", c as char) })
        }
    }

    fn entry(&mut self, text: &str) -> Result<Poly> {
        let start = self.pos;
        let mut depth = 0usize;
        while let Some(&ch) = self.src.get(self.pos) {
            match ch {
                b'(' => depth += 1,
                b')' if depth > 0 => depth -= 1,
                b',' | b']' | b'[' if depth == 0 => break,
                _ => {}
            }
            self.pos += 1;
        }
        parse_poly(&text[start..self.pos]).map_err(|e| match e {
            Error::Parse { position, expected } => Error::Parse { position: start + position, expected },
            other => other,
        })
    }
}
