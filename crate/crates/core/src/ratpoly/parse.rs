//! Recursive-descent parser for the polynomial expression language:
//!
//! ```text
//! expr     := ['-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' nat)*
//! atom     := rational | var | '(' expr ')'
//! rational := int ('/' posint)?
//! var      := 'x' posint
//! ```
//!
//! Whitespace between tokens is ignored. Columns in errors are 1-based.

use num_bigint::BigInt;
use num_traits::Zero;

use super::polynomial::{Polynomial, Rational};
use crate::error::{Error, Result};

impl Polynomial {
    /// Parses `text` as a polynomial in `x1..xn`.
    pub fn parse(text: &str, nvars: usize) -> Result<Polynomial> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            nvars,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error(format!("unexpected character '{}'", p.src[p.pos] as char)));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            column: self.pos + 1,
            message: message.into(),
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

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = self.eat(b'-');
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let mut base = self.atom()?;
        while self.eat(b'^') {
            self.skip_ws();
            let e = self.natural()?;
            let e = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
            base = base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                let i = self.natural()?;
                if i == 0 || i as usize > self.nvars {
                    self.pos = start;
                    return Err(self.error(format!(
                        "variable x{i} out of range for dimension {}",
                        self.nvars
                    )));
                }
                Ok(Polynomial::var(self.nvars, i as usize - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = Rational::from_integer(num);
                if self.eat(b'/') {
                    self.skip_ws();
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(Polynomial::constant(self.nvars, value))
            }
            Some(c) => Err(self.error(format!("unexpected character '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> Result<&str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let d = self.digits()?;
        Ok(d.parse().expect("ascii digits parse"))
    }

    fn natural(&mut self) -> Result<u64> {
        let d = self.digits()?.to_owned();
        d.parse().map_err(|_| self.error("integer too large"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{int, rat};

    #[test]
    fn parses_grammar_instances() {
        let p = Polynomial::parse("3/2*x1^2", 2).unwrap();
        assert_eq!(p, Polynomial::monomial(rat(3, 2), vec![2, 0]));
        let q = Polynomial::parse("(x1 + x2)*(x1 - x2)", 2).unwrap();
        assert_eq!(q.to_string(), "x1^2 - x2^2");
        let r = Polynomial::parse("-x1 + 2 - (x2)^2^2", 2).unwrap();
        assert_eq!(r.to_string(), "-x2^4 - x1 + 2");
        assert_eq!(Polynomial::parse("0", 1).unwrap(), Polynomial::zero(1));
        assert_eq!(
            Polynomial::parse("10/4", 1).unwrap(),
            Polynomial::constant(1, rat(5, 2))
        );
        assert_eq!(Polynomial::parse("7", 3).unwrap().constant_term(), int(7));
    }

    #[test]
    fn reports_errors_with_columns() {
        match Polynomial::parse("x1 + x3", 2) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 7),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Polynomial::parse("x1 +", 2),
            Err(Error::Parse { column: 5, .. })
        ));
        assert!(Polynomial::parse("1/0", 1).is_err());
        assert!(Polynomial::parse("x0", 1).is_err());
        assert!(Polynomial::parse("(x1", 1).is_err());
        assert!(Polynomial::parse("x1 x1", 1).is_err());
        assert!(Polynomial::parse("y1", 1).is_err());
    }

    #[test]
    fn format_round_trips() {
        for s in ["-3/2*x1*x2 + x2^2 + x1 + 1", "x1^3*x2^2 - 1/7", "0", "-x2"] {
            let p = Polynomial::parse(s, 2).unwrap();
            assert_eq!(p.to_string(), s);
        }
    }
}
