//! Parser for bivariate polynomial expressions in x and y.
//!
//! Grammar: sums and differences of terms, terms are products/quotients of
//! factors, factors are atoms raised to non-negative integer powers. Atoms
//! are `x`, `y`, integer literals and parenthesised expressions. Quotients
//! are only defined when the divisor is a nonzero constant, which gives
//! rational coefficients like `3/2*x^3`.

use crate::error::Error;
use crate::newton::YPoly;
use crate::series::{Prec, XPoly};
use crate::tower::RingView;

struct Parser<'s, 'a, 'r> {
    src: &'s [u8],
    pos: usize,
    rv: &'a RingView<'r>,
}

pub fn parse_poly(src: &str, rv: &RingView<'_>) -> Result<YPoly, Error> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        rv,
    };
    p.skip_ws();
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

impl<'s, 'a, 'r> Parser<'s, 'a, 'r> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<YPoly, Error> {
        let mut acc = if self.eat(b'-') {
            self.term()?.neg(self.rv)
        } else {
            let _ = self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?, self.rv);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?, self.rv);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<YPoly, Error> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.factor()?, self.rv);
            } else if self.peek() == Some(b'/') {
                self.pos += 1;
                self.skip_ws();
                let at = self.pos;
                let div = self.factor()?;
                let c = constant_of(&div, self.rv).ok_or(Error::Syntax {
                    pos: at,
                    msg: "divisor must be a nonzero constant".to_string(),
                })?;
                let inv = self.rv.invert(&c).map_err(|_| Error::Syntax {
                    pos: at,
                    msg: "divisor must be a nonzero constant".to_string(),
                })?;
                acc = acc.scale_elem(&inv, self.rv);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<YPoly, Error> {
        if self.eat(b'-') {
            return Ok(self.factor()?.neg(self.rv));
        }
        let mut base = self.atom()?;
        while self.eat(b'^') {
            let e = self.uint()?;
            base = base.pow(e, self.rv);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<YPoly, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(b'x') => {
                self.pos += 1;
                self.skip_ws();
                Ok(YPoly::new(vec![XPoly::monomial(self.rv.one(), 1, self.rv)]))
            }
            Some(b'y') => {
                self.pos += 1;
                self.skip_ws();
                Ok(YPoly::new(vec![
                    XPoly::zero(Prec::Exact),
                    XPoly::one(self.rv),
                ]))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                if n > i64::MAX as usize {
                    return Err(self.err("integer literal too large"));
                }
                Ok(YPoly::new(vec![XPoly::constant(
                    self.rv.from_i64(n as i64),
                    self.rv,
                )]))
            }
            _ => Err(self.err("expected '(', 'x', 'y' or an integer")),
        }
    }

    fn uint(&mut self) -> Result<usize, Error> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v: usize = s.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: "integer literal too large".to_string(),
        })?;
        self.skip_ws();
        Ok(v)
    }
}

/// Canonical printer; `parse_poly(print_poly(f)) = f` for exact
/// base-field polynomials. Terms are ordered by decreasing y-degree, then
/// decreasing x-degree.
pub fn print_poly(f: &YPoly, rv: &RingView<'_>) -> String {
    let mut out = String::new();
    let d = match f.degree() {
        Some(d) => d,
        None => return "0".to_string(),
    };
    for i in (0..=d).rev() {
        let c = f.coeff(i);
        let dx = match c.degree() {
            Some(dx) => dx,
            None => continue,
        };
        for j in (0..=dx).rev() {
            let e = c.coeff(j, rv);
            if rv.is_zero(&e) {
                continue;
            }
            let s = rv.display(&e).to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut parts = Vec::new();
            if mag != "1" || (i == 0 && j == 0) {
                parts.push(mag);
            }
            match j {
                0 => {}
                1 => parts.push("x".to_string()),
                _ => parts.push(format!("x^{j}")),
            }
            match i {
                0 => {}
                1 => parts.push("y".to_string()),
                _ => parts.push(format!("y^{i}")),
            }
            out.push_str(&parts.join("*"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn constant_of(p: &YPoly, rv: &RingView<'_>) -> Option<crate::tower::Elem> {
    if p.degree() == Some(0) {
        let c = p.coeff(0);
        if c.degree() == Some(0) {
            return Some(c.coeff(0, rv));
        }
    }
    None
}
