//! Canonical text form of polynomials.
//!
//! ```text
//! poly    := term ( " + " term | " - " term )* | "0"
//! term    := [coeff "*"] factor ("*" factor)* | coeff
//! coeff   := integer | integer "/" positive-integer
//! factor  := var ["^" exponent]
//! var     := family "[" index ("," index)? "]"
//! ```
//!
//! A coefficient of 1 is suppressed and a negative sign folds into the
//! separator (or leads the first term). The parser accepts arbitrary spacing
//! around separators and merges repeated monomials.

use crate::error::ParseError;
use crate::monomial::{ComponentVar, Monomial};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// Writes signed terms as `t0 ± t1 ± ...`. `body` is `None` for a constant.
pub(crate) fn format_signed_terms<'a>(
    terms: impl Iterator<Item = (&'a Rational, Option<String>)>,
) -> String {
    let mut out = String::new();
    for (k, (c, body)) in terms.enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        match body {
            None => out.push_str(&mag.to_string()),
            Some(b) if mag.is_one() => out.push_str(&b),
            Some(b) => {
                out.push_str(&mag.to_string());
                out.push('*');
                out.push_str(&b);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_polynomial(p: &Polynomial) -> String {
    format_signed_terms(
        p.terms()
            .iter()
            .map(|(m, c)| (c, if m.is_one() { None } else { Some(m.to_string()) })),
    )
}

pub fn parse_polynomial(s: &str) -> Result<Polynomial, ParseError> {
    let terms = Parser::new(s).parse_sum(|p| p.parse_component_factor())?;
    Ok(Polynomial::from_terms(
        terms.into_iter().map(|(c, fs)| (Monomial::from_factors(fs), c)),
    ))
}

pub(crate) struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Parser { src, bytes: src.as_bytes(), pos: 0 }
    }

    pub(crate) fn error(&self, expected: &str) -> ParseError {
        ParseError::new(self.pos, expected, self.src)
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, b: u8, what: &str) -> Result<(), ParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    pub(crate) fn parse_u32(&mut self, what: &str) -> Result<u32, ParseError> {
        let at = self.pos;
        let d = self.digits().ok_or_else(|| self.error(what))?;
        d.parse().map_err(|_| ParseError::new(at, format!("{what} that fits in 32 bits"), self.src))
    }

    /// `^e` with `e ≥ 1`, or nothing.
    pub(crate) fn parse_exponent(&mut self) -> Result<u32, ParseError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let at = self.pos;
        let e = self.parse_u32("an exponent")?;
        if e == 0 {
            return Err(ParseError::new(at, "a positive exponent", self.src));
        }
        Ok(e)
    }

    fn parse_coeff(&mut self) -> Result<Rational, ParseError> {
        let start = self.pos;
        self.digits().ok_or_else(|| self.error("a coefficient"))?;
        if self.eat(b'/') {
            let at = self.pos;
            self.digits().ok_or_else(|| self.error("a positive integer denominator"))?;
            let text = &self.src[start..self.pos];
            return text
                .parse()
                .map_err(|_| ParseError::new(at, "a positive integer denominator", self.src));
        }
        Ok(self.src[start..self.pos].parse().expect("digit run parses"))
    }

    /// `family[i]` or `family[i,j]`, then an optional exponent.
    pub(crate) fn parse_component_factor(&mut self) -> Result<(ComponentVar, u32), ParseError> {
        let family = match self.peek() {
            Some(b @ b'a'..=b'z') => b as char,
            _ => return Err(self.error("a variable like u[0]")),
        };
        self.pos += 1;
        self.expect(b'[', "'['")?;
        let i = self.parse_u32("an index")?;
        let var = if self.eat(b',') {
            let j = self.parse_u32("an index")?;
            ComponentVar::new_2d(family, i, j)
        } else {
            ComponentVar::new_1d(family, i)
        };
        self.expect(b']', "']'")?;
        let e = self.parse_exponent()?;
        Ok((var, e))
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(b'a'..=b'z'))
    }

    /// One unsigned term: a coefficient, a factor product, or both.
    fn parse_term<F>(
        &mut self,
        factor: &mut impl FnMut(&mut Self) -> Result<F, ParseError>,
    ) -> Result<(Rational, Vec<F>), ParseError> {
        let mut fs = Vec::new();
        let coeff = if self.starts_factor() {
            Rational::ONE
        } else {
            let c = self.parse_coeff()?;
            if !self.eat(b'*') {
                return Ok((c, fs));
            }
            c
        };
        loop {
            fs.push(factor(self)?);
            if !self.eat(b'*') {
                break;
            }
        }
        Ok((coeff, fs))
    }

    /// A full signed sum of terms consuming the whole input.
    pub(crate) fn parse_sum<F>(
        mut self,
        mut factor: impl FnMut(&mut Self) -> Result<F, ParseError>,
    ) -> Result<Vec<(Rational, Vec<F>)>, ParseError> {
        let mut out = Vec::new();
        self.skip_ws();
        let mut negative = self.eat(b'-');
        self.skip_ws();
        loop {
            let (c, fs) = self.parse_term(&mut factor)?;
            out.push((if negative { -c } else { c }, fs));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(self.error("'+', '-', '*' or end of input")),
            }
            self.pos += 1;
            self.skip_ws();
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn format_examples() {
        let u = |i| Polynomial::var(ComponentVar::u(i));
        let two = Polynomial::constant(Rational::from_integer(2));
        let p = &(&u(1) * &u(1)) + &(&two * &(&u(0) * &u(2)));
        assert_eq!(format_polynomial(&p), "u[1]^2 + 2*u[0]*u[2]");
        assert_eq!(format_polynomial(&Polynomial::zero()), "0");
        let m = &two * &(&Polynomial::var(ComponentVar::u2(0, 0)) * &Polynomial::var(ComponentVar::u2(1, 1)));
        assert_eq!(format_polynomial(&m), "2*u[0,0]*u[1,1]");
    }

    #[test]
    fn format_signs_and_fractions() {
        let p = parse_polynomial("-u[0] - 1/2*u[1]^3 + 7").unwrap();
        assert_eq!(format_polynomial(&p), "7 - u[0] - 1/2*u[1]^3");
        let q = parse_polynomial("-3").unwrap();
        assert_eq!(format_polynomial(&q), "-3");
    }

    #[test]
    fn parse_examples() {
        let p = parse_polynomial("u[1]^2 + 2*u[0]*u[2]").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coeff(&Monomial::power(ComponentVar::u(1), 2)), Rational::ONE);
        assert!(parse_polynomial("0").unwrap().is_zero());
        assert_eq!(parse_polynomial("u[0] + v[0,1]*u[0]").unwrap().to_string(), "u[0] + u[0]*v[0,1]");
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = parse_polynomial("u[1,]").unwrap_err();
        assert_eq!(e.position, 4);
        assert!(e.expected.contains("index"));
        assert_eq!(parse_polynomial("u[1] +").unwrap_err().position, 6);
        assert_eq!(parse_polynomial("U[1]").unwrap_err().position, 0);
        assert!(parse_polynomial("u[1]^0").is_err());
        assert!(parse_polynomial("2/0*u[1]").is_err());
        assert!(parse_polynomial("u[1] u[2]").is_err());
        assert!(parse_polynomial("").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let var = prop_oneof![
            (0u32..4).prop_map(ComponentVar::u),
            (0u32..3, 0u32..3).prop_map(|(i, j)| ComponentVar::u2(i, j)),
            (0u32..3).prop_map(|i| ComponentVar::new_1d('v', i)),
        ];
        let mono = prop::collection::vec((var, 1u32..4), 0..4).prop_map(Monomial::from_factors);
        let coeff = (-20i64..20, 1i64..6).prop_map(|(n, d)| Rational::new(n, d));
        prop::collection::vec((mono, coeff), 0..6).prop_map(Polynomial::from_terms)
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(p in arb_poly()) {
            let text = format_polynomial(&p);
            prop_assert_eq!(parse_polynomial(&text).unwrap(), p);
        }
    }
}
