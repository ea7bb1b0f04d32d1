//! Text form of coefficients: rationals `p/q`, `l` for λ, `x1`..`xn`, `^`, `*`,
//! `+`, `-`, parentheses. Juxtaposition multiplies (`2l`, `3x1`).

use num_bigint::BigInt;
use num_traits::Zero;

use super::coeff_poly::CoeffPoly;
use super::multi_index::MultiIndex;
use super::rational::Rational;
use super::scalar::Scalar;
use crate::error::{Error, Result};

pub fn parse_coeff(src: &str, n: usize) -> Result<CoeffPoly> {
    let mut p = Parser { s: src.as_bytes(), pos: 0, n };
    let v = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

pub fn parse_scalar(src: &str) -> Result<Scalar> {
    let p = parse_coeff(src, 0)?;
    p.as_scalar().ok_or(Error::Parse { pos: 0, msg: "unexpected variable".into() })
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<CoeffPoly> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<CoeffPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    let d = d
                        .as_scalar()
                        .and_then(|s| s.as_constant())
                        .ok_or_else(|| self.err("division by a non-constant"))?;
                    if d.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    acc = acc.scale_rat(&(Rational::from_integer(1.into()) / d));
                }
                Some(c) if c == b'(' || c == b'l' || c == b'x' || c.is_ascii_digit() => {
                    acc = &acc * &self.unary()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<CoeffPoly> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<CoeffPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.ws();
            let e = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            let e: u32 = e.parse().map_err(|_| self.err("exponent too large"))?;
            let mut acc = CoeffPoly::one(self.n);
            for _ in 0..e {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<CoeffPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'l') => {
                self.pos += 1;
                Ok(CoeffPoly::constant(self.n, Scalar::lambda()))
            }
            Some(b'x') => {
                self.pos += 1;
                let d = self.digits().ok_or_else(|| self.err("expected variable index"))?;
                let i: usize = d.parse().map_err(|_| self.err("bad variable index"))?;
                if i == 0 || i > self.n {
                    return Err(Error::AxisOutOfRange { axis: i.wrapping_sub(1), n: self.n });
                }
                Ok(CoeffPoly::var(self.n, i - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                let v: BigInt = d.parse().map_err(|_| self.err("bad integer"))?;
                Ok(CoeffPoly::monomial(
                    self.n,
                    MultiIndex::zero(self.n),
                    Scalar::constant(Rational::from_integer(v)),
                ))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::rat;

    #[test]
    fn parses_canonical_forms() {
        for s in ["x1", "-6/5*l - 2/5", "l^2 - l + 1/6", "x1^2*x2 + 2/3*l*x2", "0"] {
            assert_eq!(parse_coeff(s, 2).unwrap().to_string(), s);
        }
    }

    #[test]
    fn parses_loose_forms() {
        let p = parse_coeff("(2l - 1)(x1 + 1)/2", 1).unwrap();
        assert_eq!(p.to_string(), "l*x1 - 1/2*x1 + l - 1/2");
        assert_eq!(parse_scalar("3/6").unwrap(), Scalar::constant(rat(1, 2)));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_coeff("x3", 2), Err(Error::AxisOutOfRange { .. })));
        assert!(matches!(parse_coeff("1/0", 1), Err(Error::DivisionByZero)));
        assert!(matches!(parse_coeff("x1/x1", 1), Err(Error::Parse { .. })));
        assert!(matches!(parse_coeff("(x1", 1), Err(Error::Parse { .. })));
        assert!(parse_scalar("x1").is_err());
    }
}
