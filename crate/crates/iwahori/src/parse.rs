//! Text literals for polynomials, matrices and points.
//!
//! ```text
//! poly   := ["+"|"-"] term (("+"|"-") term)*
//! term   := coeff ["*" tpow] | tpow
//! tpow   := "t" ["^" int]
//! coeff  := digits ["/" digits]
//! matrix := "[" "[" poly "," poly "]" "," "[" poly "," poly "]" "]" ["@" int]
//! point  := "[" int "," poly "]" ["'"]
//! ```
//!
//! Whitespace between tokens is ignored. Matrices without `@P` are exact.

use iwahori_core::{Coeff, Error, FlagPoint, GroupElement, LaurentPoly, Precision};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: expected {expected}")]
    Syntax { position: usize, expected: &'static str },
    #[error("determinant is not 1 at the declared precision")]
    NotUnimodular,
}

pub fn parse_poly(text: &str) -> Result<LaurentPoly, ParseError> {
    let mut p = Parser::new(text);
    let poly = p.poly()?;
    p.end()?;
    Ok(poly)
}

pub fn parse_coeff(text: &str) -> Result<Coeff, ParseError> {
    let mut p = Parser::new(text);
    let negative = p.sign();
    let c = p.coeff()?.ok_or(p.error("a rational number"))?;
    p.end()?;
    Ok(if negative { -c } else { c })
}

pub fn parse_matrix(text: &str) -> Result<GroupElement, ParseError> {
    let mut p = Parser::new(text);
    p.expect('[')?;
    p.expect('[')?;
    let a = p.poly()?;
    p.expect(',')?;
    let b = p.poly()?;
    p.expect(']')?;
    p.expect(',')?;
    p.expect('[')?;
    let c = p.poly()?;
    p.expect(',')?;
    let d = p.poly()?;
    p.expect(']')?;
    p.expect(']')?;
    let prec = if p.eat('@') {
        Precision::Finite(p.int()?)
    } else {
        Precision::Exact
    };
    p.end()?;
    GroupElement::new(a, b, c, d, prec).map_err(|e| match e {
        Error::NotUnimodular => ParseError::NotUnimodular,
        _ => unreachable!("construction only checks the determinant"),
    })
}

/// Coefficients outside the point's window are dropped.
pub fn parse_point(text: &str) -> Result<FlagPoint, ParseError> {
    let mut p = Parser::new(text);
    p.expect('[')?;
    let n = p.int()?;
    p.expect(',')?;
    let poly = p.poly()?;
    p.expect(']')?;
    let point = if p.eat('\'') {
        FlagPoint::primed(n, poly)
    } else {
        FlagPoint::straight(n, poly)
    };
    p.end()?;
    Ok(point)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            expected,
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c as u8) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(match c {
                '[' => "'['",
                ']' => "']'",
                ',' => "','",
                _ => "a delimiter",
            }))
        }
    }

    fn end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error("end of input")),
        }
    }

    /// Consumes an optional sign, returning whether it was `-`.
    fn sign(&mut self) -> bool {
        if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let negative = self.sign();
        let start = self.pos;
        let digits = self.digits().ok_or(self.error("an integer"))?;
        let value: i64 = digits.parse().map_err(|_| ParseError::Syntax {
            position: start,
            expected: "an integer that fits in 64 bits",
        })?;
        Ok(if negative { -value } else { value })
    }

    fn coeff(&mut self) -> Result<Option<Coeff>, ParseError> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        let text = if self.eat('/') {
            let at = self.pos;
            let den = self.digits().ok_or(self.error("a denominator"))?;
            if den.bytes().all(|b| b == b'0') {
                return Err(ParseError::Syntax {
                    position: at,
                    expected: "a nonzero denominator",
                });
            }
            format!("{num}/{den}")
        } else {
            num.to_string()
        };
        Ok(Some(text.parse().expect("digits form a rational")))
    }

    fn tpow(&mut self) -> Result<Option<i64>, ParseError> {
        if !self.eat('t') {
            return Ok(None);
        }
        Ok(Some(if self.eat('^') { self.int()? } else { 1 }))
    }

    fn term(&mut self) -> Result<(i64, Coeff), ParseError> {
        if let Some(c) = self.coeff()? {
            if self.eat('*') {
                let k = self.tpow()?.ok_or(self.error("'t'"))?;
                return Ok((k, c));
            }
            return Ok((0, c));
        }
        match self.tpow()? {
            Some(k) => Ok((k, Coeff::ONE)),
            None => Err(self.error("a number or 't'")),
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut terms = Vec::new();
        let mut negative = self.sign();
        loop {
            let (k, c) = self.term()?;
            terms.push((k, if negative { -c } else { c }));
            negative = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => break,
            };
            self.pos += 1;
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Coeff {
        Coeff::ratio(n, d)
    }

    #[test]
    fn polynomials() {
        assert_eq!(
            parse_poly("t^-2 + 3*t"),
            Ok(LaurentPoly::from_terms([(-2, q(1, 1)), (1, q(3, 1))]))
        );
        assert_eq!(parse_poly("-1/2"), Ok(LaurentPoly::constant(q(-1, 2))));
        assert_eq!(parse_poly("0"), Ok(LaurentPoly::zero()));
        assert_eq!(parse_poly(" t ^ - 2 - t^-2 "), Ok(LaurentPoly::zero()));
        assert_eq!(parse_poly("-t^2 - 2*t^3").unwrap().to_string(), "-t^2 - 2*t^3");
        assert_eq!(
            parse_poly("123456789012345678901234567890*t"),
            Ok(LaurentPoly::monomial(1, "123456789012345678901234567890".parse().unwrap()))
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(parse_poly("1 +"), Err(ParseError::Syntax { position: 3, expected: "a number or 't'" }));
        assert_eq!(parse_poly("2*"), Err(ParseError::Syntax { position: 2, expected: "'t'" }));
        assert_eq!(parse_poly("1/0"), Err(ParseError::Syntax { position: 2, expected: "a nonzero denominator" }));
        assert_eq!(parse_poly("t t"), Err(ParseError::Syntax { position: 2, expected: "end of input" }));
        assert!(parse_poly("").is_err());
        assert!(parse_poly("x").is_err());
        assert!(parse_poly("2t").is_err());
        assert!(parse_poly("t^99999999999999999999").is_err());
    }

    #[test]
    fn matrices() {
        assert_eq!(
            parse_matrix("[[1, t^-1], [0, 1]]"),
            Ok(GroupElement::upper(LaurentPoly::t_pow(-1)))
        );
        assert_eq!(parse_matrix("[[1,1],[1,1]]"), Err(ParseError::NotUnimodular));
        let g = parse_matrix("[[1 + t, 0], [0, 1 - t + t^2]]@3").unwrap();
        assert_eq!(g.prec(), Precision::Finite(3));
        assert_eq!(g.to_string(), "[[1 + t, 0], [0, 1 - t + t^2]]@3");
        assert_eq!(parse_matrix("[[1 + t, 0], [0, 1 - t + t^2]]"), Err(ParseError::NotUnimodular));
        assert!(parse_matrix("[[1, 0], [0, 1]").is_err());
    }

    #[test]
    fn points() {
        assert_eq!(
            parse_point("[1, t^-1 + t^5]"),
            Ok(FlagPoint::straight(1, LaurentPoly::t_pow(-1)))
        );
        assert_eq!(parse_point("[0, 1]'"), Ok(FlagPoint::primed(0, LaurentPoly::one())));
        assert_eq!(parse_point("[-2, 0]").unwrap().to_string(), "[-2, 0]");
        assert!(parse_point("[1, t]''").is_err());
        assert!(parse_point("[t, 1]").is_err());
    }

    #[test]
    fn coefficients() {
        assert_eq!(parse_coeff("-2/4"), Ok(q(-1, 2)));
        assert_eq!(parse_coeff("3"), Ok(q(3, 1)));
        assert!(parse_coeff("t").is_err());
    }
}
