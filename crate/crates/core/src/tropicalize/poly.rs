//! Polynomials with exact coefficients and a small expression parser.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::f1algebra::{Monoid, Monomial};
use crate::semiring::{format_rational, parse_rational, Rat};
use crate::valuation::ring::{RatFunc, Residue, RingElement, UPoly};

/// Coefficient field `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffField {
    Rationals,
    /// `Q(t)`; the name `t` is reserved for the transcendental.
    RationalFunctions,
    /// `F_p`.
    Prime(u64),
}

impl CoeffField {
    pub fn zero(&self) -> RingElement {
        self.from_rational(&Rat::from_integer(0.into()))
            .expect("zero is always representable")
    }

    pub fn one(&self) -> RingElement {
        self.from_rational(&Rat::from_integer(1.into()))
            .expect("one is always representable")
    }

    pub fn from_rational(&self, q: &Rat) -> Result<RingElement> {
        match self {
            CoeffField::Rationals => Ok(RingElement::Rational(q.clone())),
            CoeffField::RationalFunctions => Ok(RingElement::RationalFunction(RatFunc::poly(
                UPoly::constant(q.clone()),
            ))),
            CoeffField::Prime(p) => {
                let proto = RingElement::Residue(Residue::new(*p, vec![0, 1], &[0])?);
                proto.constant_like(q)
            }
        }
    }

    /// The transcendental `t` of `Q(t)`.
    pub fn t(&self) -> Option<RingElement> {
        match self {
            CoeffField::RationalFunctions => {
                Some(RingElement::RationalFunction(RatFunc::poly(UPoly::t())))
            }
            _ => None,
        }
    }

    pub fn contains(&self, c: &RingElement) -> bool {
        matches!(
            (self, c),
            (CoeffField::Rationals, RingElement::Rational(_))
                | (
                    CoeffField::RationalFunctions,
                    RingElement::RationalFunction(_)
                )
                | (CoeffField::Prime(_), RingElement::Residue(_))
        )
    }
}

/// Finitely supported map from monoid elements to nonzero coefficients.
///
/// Keys are exponent vectors for polynomial rings and elements of `M(A)`
/// for the universal embedding.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KPoly {
    terms: BTreeMap<Monomial, RingElement>,
}

impl KPoly {
    pub fn zero() -> Self {
        KPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn term(m: Monomial, c: RingElement) -> Self {
        let mut p = KPoly::zero();
        p.add_term(m, c).expect("single term");
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, RingElement)>) -> Result<Self> {
        let mut p = KPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c)?;
        }
        Ok(p)
    }

    /// Adds `c·m`, dropping the absorbing element and zero coefficients.
    pub fn add_term(&mut self, m: Monomial, c: RingElement) -> Result<()> {
        if m == Monomial::Zero || c.is_zero() {
            return Ok(());
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old.add(&c)?;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
        Ok(())
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, RingElement> {
        &self.terms
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

    /// Largest term in the monomial order.
    pub fn leading(&self) -> Option<(&Monomial, &RingElement)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> u64 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        KPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    /// `c·m·self` in the monoid `monoid`.
    pub fn scale(&self, monoid: &Monoid, c: &RingElement, m: &Monomial) -> Result<Self> {
        let mut out = KPoly::zero();
        for (mu, a) in &self.terms {
            out.add_term(monoid.mul(m, mu)?, a.mul(c)?)?;
        }
        Ok(out)
    }

    pub fn mul(&self, monoid: &Monoid, o: &Self) -> Result<Self> {
        let mut out = KPoly::zero();
        for (m, c) in &o.terms {
            for (mu, a) in &self.terms {
                out.add_term(monoid.mul(m, mu)?, a.mul(c)?)?;
            }
        }
        Ok(out)
    }

    pub fn format(&self, monoid: &Monoid) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = monoid.format_monomial(m);
            let mut coeff = c.to_string();
            let negative = coeff.starts_with('-') && !coeff.contains(['+', ' ']);
            if negative {
                coeff.remove(0);
            }
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let needs_parens = coeff.contains(['+', '-', ' ']);
            let coeff = if needs_parens {
                format!("({coeff})")
            } else {
                coeff
            };
            if mono.is_empty() {
                out.push_str(&coeff);
            } else if coeff == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{coeff}*{mono}"));
            }
        }
        out
    }
}

/// Parsed arithmetic expression over named atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(Rat),
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u64),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < cs.len()
                && (cs[i].is_ascii_digit()
                    || (cs[i] == '/' && i + 1 < cs.len() && cs[i + 1].is_ascii_digit()))
            {
                i += 1;
            }
            out.push(Tok::Num(cs[start..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::parse(format!(
                "unexpected character `{c}` in `{text}`"
            )));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err(&self, what: &str) -> Error {
        Error::parse(format!("{what} in `{}`", self.text))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(Tok::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if op == '+' {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                }
                // Juxtaposition such as `2x` or `x(y+1)`.
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('(')) => {}
                _ => break,
            }
            let rhs = self.unary()?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if let Some(Tok::Op('-')) = self.peek() {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) if !n.contains('/') => {
                    self.pos += 1;
                    let k: u64 = n.parse().map_err(|_| self.err("exponent too large"))?;
                    return Ok(Expr::Pow(Box::new(base), k));
                }
                _ => return Err(self.err("exponent must be a non-negative integer")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(parse_rational(&n)?))
            }
            Some(Tok::Ident(v)) => {
                self.pos += 1;
                Ok(Expr::Var(v))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(self.err("missing `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.err("expected a number, name or `(`")),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::parse("empty expression"));
    }
    let mut p = Parser { toks, pos: 0, text };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// A structure an expression can be evaluated in.
pub trait ExprTarget {
    type Value: Clone;
    fn num(&self, q: &Rat) -> Result<Self::Value>;
    fn var(&self, name: &str) -> Result<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn neg(&self, a: &Self::Value) -> Result<Self::Value>;
}

impl Expr {
    pub fn eval<T: ExprTarget>(&self, t: &T) -> Result<T::Value> {
        Ok(match self {
            Expr::Num(q) => t.num(q)?,
            Expr::Var(v) => t.var(v)?,
            Expr::Add(a, b) => t.add(&a.eval(t)?, &b.eval(t)?)?,
            Expr::Sub(a, b) => t.add(&a.eval(t)?, &t.neg(&b.eval(t)?)?)?,
            Expr::Mul(a, b) => t.mul(&a.eval(t)?, &b.eval(t)?)?,
            Expr::Neg(a) => t.neg(&a.eval(t)?)?,
            Expr::Pow(a, k) => {
                let base = a.eval(t)?;
                let mut acc = t.num(&Rat::from_integer(1.into()))?;
                for _ in 0..*k {
                    acc = t.mul(&acc, &base)?;
                }
                acc
            }
        })
    }
}

/// Polynomials over `k` in the variables of a free monoid.
pub struct PolyRing<'a> {
    pub field: CoeffField,
    pub monoid: &'a Monoid,
}

impl ExprTarget for PolyRing<'_> {
    type Value = KPoly;

    fn num(&self, q: &Rat) -> Result<KPoly> {
        Ok(KPoly::term(self.monoid.one(), self.field.from_rational(q)?))
    }

    fn var(&self, name: &str) -> Result<KPoly> {
        if let Monoid::Free(f) = self.monoid {
            if let Some(i) = f.var_index(name) {
                return Ok(KPoly::term(f.var(i), self.field.one()));
            }
        }
        if name == "t" {
            if let Some(t) = self.field.t() {
                return Ok(KPoly::term(self.monoid.one(), t));
            }
        }
        Err(Error::parse(format!("unknown variable `{name}`")))
    }

    fn add(&self, a: &KPoly, b: &KPoly) -> Result<KPoly> {
        a.add(b)
    }

    fn mul(&self, a: &KPoly, b: &KPoly) -> Result<KPoly> {
        a.mul(self.monoid, b)
    }

    fn neg(&self, a: &KPoly) -> Result<KPoly> {
        Ok(a.neg())
    }
}

/// Elements of `k` itself (constants and `t`).
pub struct Scalars(pub CoeffField);

impl ExprTarget for Scalars {
    type Value = RingElement;

    fn num(&self, q: &Rat) -> Result<RingElement> {
        self.0.from_rational(q)
    }

    fn var(&self, name: &str) -> Result<RingElement> {
        match (name, self.0.t()) {
            ("t", Some(t)) => Ok(t),
            _ => Err(Error::parse(format!("`{name}` is not a scalar"))),
        }
    }

    fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        a.add(b)
    }

    fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        a.mul(b)
    }

    fn neg(&self, a: &RingElement) -> Result<RingElement> {
        Ok(a.neg())
    }
}

pub fn parse_poly(field: CoeffField, monoid: &Monoid, text: &str) -> Result<KPoly> {
    parse_expr(text)?.eval(&PolyRing { field, monoid })
}

pub fn parse_scalar(field: CoeffField, text: &str) -> Result<RingElement> {
    parse_expr(text)?.eval(&Scalars(field))
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) => write!(f, "{}", format_rational(q)),
            Expr::Var(v) => f.write_str(v),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Neg(a) => write!(f, "-{a}"),
            Expr::Pow(a, k) => write!(f, "{a}^{k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{int, rat};

    #[test]
    fn parses_polynomials() {
        let m = Monoid::free(["x", "y"]).unwrap();
        let p = parse_poly(CoeffField::Rationals, &m, "x^2 - 2").unwrap();
        assert_eq!(p.format(&m), "x^2 - 2");
        let q = parse_poly(CoeffField::Rationals, &m, "(x + y)^2 - 2x y - y*y").unwrap();
        assert_eq!(q.format(&m), "x^2");
        let r = parse_poly(CoeffField::Rationals, &m, "1/2 x - -3").unwrap();
        assert_eq!(r.format(&m), "1/2*x + 3");
        assert!(parse_poly(CoeffField::Rationals, &m, "z + 1").is_err());
        assert!(parse_poly(CoeffField::Rationals, &m, "x^y").is_err());
        assert!(parse_poly(CoeffField::Rationals, &m, "(x + 1").is_err());
        assert!(parse_poly(CoeffField::Rationals, &m, "x + ").is_err());
        assert!(parse_poly(CoeffField::Rationals, &m, "x $ 1").is_err());
    }

    #[test]
    fn coefficient_fields() {
        let m = Monoid::free(["x"]).unwrap();
        let p = parse_poly(CoeffField::RationalFunctions, &m, "t x + t^2").unwrap();
        assert_eq!(p.len(), 2);
        let f3 = parse_poly(CoeffField::Prime(3), &m, "x + 4").unwrap();
        assert_eq!(f3, parse_poly(CoeffField::Prime(3), &m, "x + 1").unwrap());
        assert!(parse_poly(CoeffField::Prime(3), &m, "x + 1/3").is_err());
        assert_eq!(
            parse_scalar(CoeffField::Rationals, "-3/4").unwrap(),
            RingElement::Rational(rat(-3, 4))
        );
        assert_eq!(
            parse_scalar(CoeffField::Rationals, "2^3 - 1").unwrap(),
            RingElement::Rational(int(7))
        );
    }

    #[test]
    fn leading_term_is_grlex_largest() {
        let m = Monoid::free(["x", "y"]).unwrap();
        let p = parse_poly(CoeffField::Rationals, &m, "y + x + 1").unwrap();
        assert_eq!(m.format_monomial(p.leading().unwrap().0), "x");
        let q = parse_poly(CoeffField::Rationals, &m, "y^2 - x^3 - 1").unwrap();
        assert_eq!(m.format_monomial(q.leading().unwrap().0), "x^3");
    }
}
