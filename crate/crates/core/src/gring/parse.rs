//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ('^' uint)?
//! atom   := 'x' | 'y' | 'z' | 'I' | uint | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants, so that rational
//! coefficients printed by [`Poly`]'s `Display` parse back.

use super::coef::GaussRat;
use super::poly::Poly;
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected {found} at position {pos}")]
    Unexpected { pos: usize, found: String },
    #[error("exponent at position {pos} is not a nonnegative integer")]
    BadExponent { pos: usize },
    #[error("division by a non-constant or zero at position {pos}")]
    BadDivision { pos: usize },
    #[error("integer literal at position {pos} is too large")]
    Overflow { pos: usize },
}

pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.s.len() {
        return Err(p.unexpected());
    }
    Ok(e)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn unexpected(&self) -> ParseError {
        let found = match self.s.get(self.pos) {
            Some(&c) => format!("{:?}", c as char),
            None => "end of input".to_string(),
        };
        ParseError::Unexpected {
            pos: self.pos,
            found,
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut neg = false;
        match self.peek() {
            Some(b'-') => {
                neg = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if neg {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    if !d.is_unit() {
                        return Err(ParseError::BadDivision { pos: at });
                    }
                    acc = acc.scale(&d.constant_term().inv());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = {
                self.skip_ws();
                self.pos
            };
            match self.uint()? {
                Some(e) if e <= u32::MAX as u64 => Ok(base.pow(e as u32)),
                _ => Err(ParseError::BadExponent { pos: at }),
            }
        } else {
            Ok(base)
        }
    }

    fn uint(&mut self) -> Result<Option<u64>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        txt.parse::<u64>()
            .map(Some)
            .map_err(|_| ParseError::Overflow { pos: start })
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(Poly::y())
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(Poly::z())
            }
            Some(b'I') => {
                self.pos += 1;
                Ok(Poly::constant(GaussRat::I))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let n = self.uint()?.unwrap();
                let n = i64::try_from(n).map_err(|_| ParseError::Overflow { pos: start })?;
                Ok(Poly::constant(GaussRat::real(Rat::int(n))))
            }
            _ => Err(self.unexpected()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e6_polynomial() {
        let p = parse_poly("x^3+y^4+z^2").unwrap();
        assert_eq!(
            p,
            &(&Poly::x().pow(3) + &Poly::y().pow(4)) + &Poly::z().pow(2)
        );
    }

    #[test]
    fn zero_and_gaussian_product() {
        assert!(parse_poly("0").unwrap().is_zero());
        let p = parse_poly("(x+I*y)*(x-I*y)").unwrap();
        assert_eq!(p, parse_poly("x^2+y^2").unwrap());
    }

    #[test]
    fn leading_minus_and_division() {
        let p = parse_poly("-(y^2-I*z) + 3/2*x").unwrap();
        assert_eq!(p.to_string(), "3/2*x-y^2+I*z");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_poly("x+*y"),
            Err(ParseError::Unexpected {
                pos: 2,
                found: "'*'".into()
            })
        );
        assert_eq!(parse_poly("x^y"), Err(ParseError::BadExponent { pos: 2 }));
        assert!(matches!(
            parse_poly("x/y"),
            Err(ParseError::BadDivision { .. })
        ));
        assert!(matches!(
            parse_poly("(x"),
            Err(ParseError::Unexpected { .. })
        ));
    }
}
