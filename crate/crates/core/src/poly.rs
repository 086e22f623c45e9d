//! Sparse bivariate polynomials with unbounded integer coefficients.
//!
//! `x` marks uncovered vertices and `y` matched edges, but the arithmetic here
//! knows nothing about graphs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent pair `(x-degree, y-degree)`.
pub type Exponents = (u32, u32);

/// Polynomial in `x` and `y` over the integers. No zero coefficient is ever
/// stored, so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::monomial(0, 0, 1)
    }

    pub fn monomial(i: u32, j: u32, c: impl Into<BigInt>) -> Self {
        let mut p = Poly::zero();
        p.add_term(i, j, c.into());
        p
    }

    /// `x^i`
    pub fn x_pow(i: u32) -> Self {
        Poly::monomial(i, 0, 1)
    }

    /// Builds a polynomial from `(i, j, c)` triples; repeated exponents add up.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (u32, u32, C)>) -> Self {
        let mut p = Poly::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c.into());
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: descending `x`-degree, then descending `y`-degree.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &BigInt)> + '_ {
        self.terms.iter().rev().map(|(&e, c)| (e, c))
    }

    /// `m_{i,j}`, zero when absent.
    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiplies by `x^i y^j`.
    pub fn mul_monomial(&self, i: u32, j: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((a + i, b + j), v.clone()))
                .collect(),
        }
    }

    /// Partial derivative with respect to `x`.
    pub fn differentiate_x(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), v)| ((i - 1, j), v * BigInt::from(i)))
                .collect(),
        }
    }

    pub fn evaluate(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * x.pow(i) * y.pow(j))
            .sum()
    }

    /// True if every term has `i + 2j == weight`.
    pub fn is_homogeneous(&self, weight: u32) -> bool {
        self.terms.keys().all(|&(i, j)| i + 2 * j == weight)
    }

    /// Drops every term whose `x`-degree is zero.
    pub fn without_x_free_terms(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&e, v)| (e, v.clone()))
                .collect(),
        }
    }

    /// `[i, j, "coefficient"]` triples in canonical order.
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial serializes")
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(mut self, rhs: Poly) -> Poly {
        for ((i, j), c) in rhs.terms {
            self.add_term(i, j, c);
        }
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(&e, v)| (e, -v)).collect(),
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(i, j), d) in &rhs.terms {
                out.add_term(a + i, b + j, c * d);
            }
        }
        out
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, var: char, exp: u32, first: &mut bool) -> fmt::Result {
    match exp {
        0 => return Ok(()),
        1 if *first => write!(f, "{var}")?,
        1 => write!(f, "*{var}")?,
        _ if *first => write!(f, "{var}^{exp}")?,
        _ => write!(f, "*{var}^{exp}")?,
    }
    *first = false;
    Ok(())
}

/// `x^4 + 4*x^2*y + 2*y^2`; the zero polynomial prints as `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, ((i, j), c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut first = true;
            if !magnitude.is_one() || (i == 0 && j == 0) {
                write!(f, "{magnitude}")?;
                first = false;
            }
            write_var(f, 'x', i, &mut first)?;
            write_var(f, 'y', j, &mut first)?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start)
            .then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ASCII digits"))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let at = self.pos;
        self.digits()
            .ok_or_else(|| Error::parse(at, "expected an exponent after `^`"))?
            .parse()
            .map_err(|_| Error::parse(at, "exponent too large"))
    }

    /// One factor `x^a`, `y^b` or a decimal coefficient.
    fn factor(&mut self, coef: &mut BigInt, exps: &mut Exponents) -> Result<()> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                exps.0 += self.exponent()?;
            }
            Some(b'y') => {
                self.pos += 1;
                exps.1 += self.exponent()?;
            }
            Some(b) if b.is_ascii_digit() => {
                let d: BigInt = self.digits().expect("peeked a digit").parse().expect("digits");
                *coef *= d;
            }
            Some(_) => return Err(Error::parse(self.pos, "expected `x`, `y` or a number")),
            None => return Err(Error::parse(self.pos, "unexpected end of input")),
        }
        Ok(())
    }

    fn term(&mut self) -> Result<(Exponents, BigInt)> {
        let mut coef = BigInt::one();
        let mut exps = (0, 0);
        self.factor(&mut coef, &mut exps)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut coef, &mut exps)?;
        }
        Ok((exps, coef))
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut out = Poly::zero();
        let mut negative = false;
        if let Some(b @ (b'+' | b'-')) = self.peek() {
            negative = b == b'-';
            self.pos += 1;
        }
        loop {
            let ((i, j), c) = self.term()?;
            out.add_term(i, j, if negative { -c } else { c });
            match self.peek() {
                None => return Ok(out),
                Some(b @ (b'+' | b'-')) => {
                    negative = b == b'-';
                    self.pos += 1;
                }
                Some(_) => return Err(Error::parse(self.pos, "expected `+`, `-` or end of input")),
            }
        }
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Poly> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
        .poly()
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms().map(|((i, j), c)| (i, j, c.to_string())))
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Poly, D::Error> {
        let raw: Vec<(u32, u32, String)> = Vec::deserialize(d)?;
        let mut out = Poly::zero();
        for (i, j, c) in raw {
            let c: BigInt = c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient `{c}`")))?;
            if out.terms.contains_key(&(i, j)) {
                return Err(D::Error::custom(format!("repeated exponent pair ({i}, {j})")));
            }
            out.add_term(i, j, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn cancellation() {
        assert!((&p("x^2") + &p("-x^2")).is_zero());
    }

    #[test]
    fn product_of_triangle_and_edge() {
        assert_eq!(&p("x^3 + 3*x*y") * &p("x^2 + y"), p("x^5 + 4*x^3*y + 3*x*y^2"));
    }

    #[test]
    fn mul_monomial_of_one() {
        assert_eq!(Poly::one().mul_monomial(0, 1), p("y"));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x^4 + 4*x^2*y + 2*y^2").differentiate_x(), p("4*x^3 + 8*x*y"));
        assert!(p("y^3").differentiate_x().is_zero());
        assert_eq!(Poly::x_pow(7).differentiate_x(), Poly::monomial(6, 0, 7));
    }

    #[test]
    fn coefficients() {
        let q = p("x^2+y");
        assert_eq!(q.coefficient(0, 1), BigInt::from(1));
        assert_eq!(q.coefficient(1, 0), BigInt::from(0));
    }

    #[test]
    fn evaluation() {
        let q = p("x^4 + 3*x^2*y + y^2");
        assert_eq!(q.evaluate(&1.into(), &1.into()), BigInt::from(5));
        assert_eq!(p("7 + x*y").evaluate(&0.into(), &0.into()), BigInt::from(7));
    }

    #[test]
    fn text_format() {
        let q = Poly::from_terms([(4, 0, 1), (2, 1, 4), (0, 2, 2)]);
        assert_eq!(q.to_string(), "x^4 + 4*x^2*y + 2*y^2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p("x^2+y"), Poly::from_terms([(2, 0, 1), (0, 1, 1)]));
        assert_eq!(p("-x - 3*y + 5").to_string(), "-x - 3*y + 5");
        assert_eq!(p("2*x*3*x"), Poly::monomial(2, 0, 6));
        assert_eq!(p("0"), Poly::zero());
    }

    #[test]
    fn parse_errors_report_position() {
        assert!(matches!("x^2 +".parse::<Poly>(), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!("x^ + y".parse::<Poly>(), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!("x z".parse::<Poly>(), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!("".parse::<Poly>(), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn json_form() {
        let q = p("x^4 + 4*x^2*y + 2*y^2");
        let js = serde_json::to_string(&q).unwrap();
        assert_eq!(js, r#"[[4,0,"1"],[2,1,"4"],[0,2,"2"]]"#);
        assert_eq!(serde_json::from_str::<Poly>(&js).unwrap(), q);
        assert!(serde_json::from_str::<Poly>(r#"[[1,0,"x"]]"#).is_err());
        assert!(serde_json::from_str::<Poly>(r#"[[1,0,"1"],[1,0,"2"]]"#).is_err());
    }
}
