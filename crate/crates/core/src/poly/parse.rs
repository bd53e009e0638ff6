//! Text grammar for polynomials:
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! coeff  := integer | integer '/' positive-integer
//! factor := name ('^' positive-integer)?
//! ```
//!
//! Names match `[A-Za-z][A-Za-z0-9_]*`; whitespace is insignificant. A leading minus is
//! accepted so that printed polynomials parse back.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, Rational, VarList};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a VarList,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.pos, message: message.into() })
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

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse as integer"))
    }

    fn positive_u32(&mut self) -> Result<u32> {
        let at = self.pos;
        let n = self.integer()?;
        match u32::try_from(n) {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(Error::Syntax { position: at, message: "expected positive integer".into() }),
        }
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        self.skip_ws();
        let start = self.pos;
        if !self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphabetic()) {
            return self.err("expected variable name");
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
        let idx = self.vars.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut e = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            e = self.positive_u32()?;
        }
        exps[idx] += e;
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut exps = vec![0u32; self.vars.len()];
        let mut coeff = Rational::one();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut den = BigInt::one();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let at = self.pos;
                    den = self.integer()?;
                    if den.is_zero() {
                        return Err(Error::Syntax { position: at, message: "zero denominator".into() });
                    }
                }
                coeff = Rational::new(num, den);
            }
            Some(_) => self.factor(&mut exps)?,
            None => return self.err("unexpected end of input"),
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut sign = Rational::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -sign;
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, c * &sign));
            match self.peek() {
                Some(b'+') => sign = Rational::one(),
                Some(b'-') => sign = -Rational::one(),
                Some(_) => return self.err("expected '+', '-', '*' or end of input"),
                None => break,
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(self.vars, terms))
    }
}

/// Parse `text` as a polynomial over the ordered variable list `vars`.
pub fn parse_polynomial(text: &str, vars: &VarList) -> Result<Polynomial> {
    Parser { src: text.as_bytes(), pos: 0, vars }.expr()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(names: &[&str]) -> VarList {
        VarList::new(names).unwrap()
    }

    #[test]
    fn single_square() {
        let p = parse_polynomial("a0^2", &v(&["a0", "a1"])).unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.terms()[0].0.exponents(), &[2, 0]);
        assert!(p.terms()[0].1.is_one());
    }

    #[test]
    fn two_term_generator() {
        let p = parse_polynomial("a0*a2 + a1^2", &v(&["a0", "a1", "a2"])).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "a1^2 + a0*a2");
    }

    #[test]
    fn zero_is_empty() {
        assert!(parse_polynomial("0", &v(&["a0"])).unwrap().is_zero());
        assert!(parse_polynomial("x - x", &v(&["x"])).unwrap().is_zero());
    }

    #[test]
    fn rationals_and_whitespace() {
        let p = parse_polynomial(" 3/6 * x ^ 2 -  7 ", &v(&["x"])).unwrap();
        assert_eq!(p.to_string(), "1/2*x^2 - 7");
    }

    #[test]
    fn errors_carry_position() {
        let vars = v(&["x", "y"]);
        assert_eq!(parse_polynomial("x + z", &vars), Err(Error::UnknownVariable("z".into())));
        match parse_polynomial("x y", &vars) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_polynomial("x^0", &vars), Err(Error::Syntax { position: 2, .. })));
        assert!(matches!(parse_polynomial("1/0", &vars), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("", &vars), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("x +", &vars), Err(Error::Syntax { .. })));
    }
}
