use super::{named, BrElement, BrauerError};
use crate::algebra::{Poly, Rational};

/// Parses an element of `Br_k`.
///
/// ```text
/// expr   := term (('+' | '-') term)*
/// term   := factor ('*'? factor)*
/// factor := unary ('^' int)?
/// unary  := '-' unary | atom
/// atom   := int ('/' int)? | 'c' | name | '(' expr ')'
/// ```
///
/// Names are single letters. `u+`, `u-`, `x+`, `x-` are read as names when
/// the sign is not followed by an operand, so `u+ - u-` is the difference
/// of two basis elements while `u+x` is the sum of `u` and `x`.
pub fn parse(k: usize, src: &str) -> Result<BrElement, BrauerError> {
    let mut p = Parser {
        k,
        src: src.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    k: usize,
    src: &'a [u8],
    pos: usize,
}

fn starts_operand(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'('
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> BrauerError {
        BrauerError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&mut self) -> Option<u8> {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn peek_after(&self, from: usize) -> Option<u8> {
        self.src[from..]
            .iter()
            .copied()
            .find(|c| !c.is_ascii_whitespace())
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<BrElement, BrauerError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<BrElement, BrauerError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') || self.peek().is_some_and(starts_operand) {
                acc = acc.try_mul(&self.factor()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<BrElement, BrauerError> {
        let base = self.unary()?;
        if self.eat(b'^') {
            let e = self.int()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn unary(&mut self) -> Result<BrElement, BrauerError> {
        if self.eat(b'-') {
            Ok(-&self.unary()?)
        } else {
            self.atom()
        }
    }

    fn int(&mut self) -> Result<u64, BrauerError> {
        self.peek();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits.parse().map_err(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    fn atom(&mut self) -> Result<BrElement, BrauerError> {
        let Some(c) = self.peek() else {
            return Err(self.err("unexpected end of input"));
        };
        if c == b'(' {
            self.pos += 1;
            let e = self.expr()?;
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            return Ok(e);
        }
        if c.is_ascii_digit() {
            let num = self.int()?;
            let mut value = Rational::from_integer(num.into());
            if self.eat(b'/') {
                let den = self.int()?;
                if den == 0 {
                    return Err(self.err("zero denominator"));
                }
                value /= Rational::from_integer(den.into());
            }
            return Ok(BrElement::scalar(self.k, Poly::constant(value)));
        }
        if c == b'c' {
            self.pos += 1;
            return Ok(BrElement::scalar(self.k, Poly::c()));
        }
        if c.is_ascii_alphabetic() {
            let start = self.pos;
            self.pos += 1;
            let mut name = (c as char).to_string();
            if let Some(&sign @ (b'+' | b'-')) = self.src.get(self.pos) {
                let suffixed = format!("{name}{}", sign as char);
                let operand_follows = self.peek_after(self.pos + 1).is_some_and(starts_operand);
                if !operand_follows && named(self.k, &suffixed).is_ok() {
                    self.pos += 1;
                    name = suffixed;
                }
            }
            return named(self.k, &name).inspect_err(|_| {
                self.pos = start;
            });
        }
        Err(self.err("expected an operand"))
    }
}
