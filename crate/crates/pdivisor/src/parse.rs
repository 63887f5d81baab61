//! Expression grammar for polynomials:
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := int | var | '(' expr ')'
//! var    := 'x' | 'y' | 'z'
//! ```
//!
//! Whitespace is insignificant. A leading sign is accepted so that printed
//! forms like `-x^3 + y` round-trip.

use num_bigint::BigInt;

use crate::poly::SparsePoly;
use crate::ring::Ring;
use crate::Error;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: Ring,
    arity: usize,
}

/// Parse an expression over `ring`. The result has arity 2 unless `z`
/// occurs, in which case it has arity 3.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<SparsePoly, Error> {
    let arity = if text.contains('z') { 3 } else { 2 };
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring: ring.clone(),
        arity,
    };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expr(&mut self) -> Result<SparsePoly, Error> {
        self.skip_ws();
        let mut negate = false;
        if let Some(c) = self.peek() {
            if c == b'+' || c == b'-' {
                negate = c == b'-';
                self.pos += 1;
            }
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
                    acc = acc.add(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SparsePoly, Error> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                let f = self.factor()?;
                acc = acc.mul(&f);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<SparsePoly, Error> {
        let base = self.base()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.uint()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<SparsePoly, Error> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.bump() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(SparsePoly::var(self.ring.clone(), self.arity, 0))
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(SparsePoly::var(self.ring.clone(), self.arity, 1))
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(SparsePoly::var(self.ring.clone(), self.arity, 2))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: BigInt = digits.parse().expect("digits parse as integer");
                let c = self.ring.from_int(&n);
                Ok(SparsePoly::constant(self.ring.clone(), self.arity, c))
            }
            Some(_) => Err(self.err("expected integer, variable, or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn uint(&mut self) -> Result<u32, Error> {
        let start = self.pos;
        while matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected exponent"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits
            .parse()
            .map_err(|_| self.err("exponent out of range"))
    }
}
