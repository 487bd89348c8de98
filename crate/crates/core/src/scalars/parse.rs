//! Parser for the rendered scalar syntax: `+ - * / ^`, parentheses,
//! non-negative integer literals and registry symbol names.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Registry, Scalar, ScalarError};

pub fn parse_scalar(input: &str, reg: &Registry) -> Result<Scalar, ScalarError> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
        reg,
    };
    let s = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(s)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    reg: &'a Registry,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ScalarError {
        ScalarError::Parse {
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

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == b'*' {
                &acc * &rhs
            } else {
                acc.checked_div(&rhs)?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar, ScalarError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let s = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(s)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Scalar::from_rational(BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                self.reg
                    .index(name)
                    .map(Scalar::var)
                    .ok_or_else(|| ScalarError::UnknownSymbol(name.to_string()))
            }
            _ => Err(self.error("expected number, symbol or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reg() -> Registry {
        Registry::standard(&["g1", "g2"]).unwrap()
    }

    #[test]
    fn parses_rendered_forms() {
        let r = reg();
        for text in ["g2-g1", "-1/12*g1+1/12*g1^3", "(1/2)/(g1)", "1+alpha*beta^2", "0"] {
            let s = parse_scalar(text, &r).unwrap();
            assert_eq!(s.render(&r), text);
        }
    }

    #[test]
    fn precedence_and_errors() {
        let r = reg();
        let s = parse_scalar("2*g1^2 - (g1 + 1)*(g1 - 1)", &r).unwrap();
        assert_eq!(s.render(&r), "1+g1^2");
        assert!(matches!(parse_scalar("q+1", &r), Err(ScalarError::UnknownSymbol(_))));
        assert!(matches!(parse_scalar("g1/(g2-g2)", &r), Err(ScalarError::DivisionByZero)));
        assert!(matches!(parse_scalar("(g1", &r), Err(ScalarError::Parse { .. })));
    }
}
