//! Text form of polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' integer]
//! atom   := integer | variable | '(' poly ')'
//! variable := ('x'|'y'|'z'|'q') positive-integer
//! ```
//!
//! Whitespace is insignificant. Printing always produces this grammar, so
//! `p.to_string().parse() == Ok(p)`.

use std::str::FromStr;

use num_bigint::BigInt;

use super::{Family, Polynomial, Variable};
use crate::error::{Error, Result};

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Polynomial> {
        let mut parser = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let p = parser.poly()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(p)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
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

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start)
            .then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero();
        let mut negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let t = self.term()?;
            if negate {
                acc -= t;
            } else {
                acc += t;
            }
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let e: u32 = self
                .digits()
                .ok_or_else(|| self.error("expected exponent"))?
                .parse()
                .map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let p = self.poly()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().unwrap().parse().unwrap();
                Ok(Polynomial::constant(n))
            }
            Some(c) => {
                let family =
                    Family::from_symbol(c as char).ok_or_else(|| self.error("expected a term"))?;
                self.pos += 1;
                let index: u32 = self
                    .digits()
                    .ok_or_else(|| self.error("expected variable index"))?
                    .parse()
                    .map_err(|_| self.error("variable index too large"))?;
                if index == 0 {
                    return Err(self.error("variable indices start at 1"));
                }
                Ok(Polynomial::var(Variable::new(family, index)))
            }
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_example() {
        let p: Polynomial = "3*x1^2*x2 - q1*x1 + 7".parse().unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.to_string(), "3*x1^2*x2 - x1*q1 + 7");
    }

    #[test]
    fn parentheses_and_signs() {
        let p: Polynomial = "-(x1 - x2)^2 + 2*x1*x2".parse().unwrap();
        assert_eq!(p.to_string(), "-x1^2 + 4*x1*x2 - x2^2");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "x", "x0", "3*", "x1 +", "w1", "(x1", "x1^", "x1 x2"] {
            assert!(bad.parse::<Polynomial>().is_err(), "accepted {bad:?}");
        }
    }
}
