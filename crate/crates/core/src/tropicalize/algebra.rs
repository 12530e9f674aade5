//! Coordinate rings: finite rings given by tables, or `k[x_1..x_n]/I` with
//! `I` given by a Gröbner basis for the graded lexicographic order.

use std::fmt;

use crate::error::{Error, Result};
use crate::f1algebra::{Monoid, Monomial};
use crate::semiring::Rat;
use crate::valuation::ring::{FiniteRing, RingElement};

use super::poly::{parse_expr, CoeffField, ExprTarget, KPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyQuotient {
    field: CoeffField,
    ring: Monoid,
    relations: Vec<KPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineAlgebra {
    Quotient(PolyQuotient),
    Finite(FiniteRing),
}

/// Element of an [`AffineAlgebra`]: a normal form or a table index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgElem {
    Poly(PolyKey),
    Finite(usize),
}

/// Normal-form polynomial with a total order for use as a map key.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyKey(pub KPoly);

impl PartialOrd for PolyKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PolyKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a = self.0.terms().iter().map(|(m, c)| (m, c.to_string()));
        let b = other.0.terms().iter().map(|(m, c)| (m, c.to_string()));
        a.cmp(b)
    }
}

fn divides(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn exps(m: &Monomial) -> &[u64] {
    match m {
        Monomial::Exp(e) => e,
        _ => &[],
    }
}

impl PolyQuotient {
    /// `k[vars]/(relations)`. The relations must form a Gröbner basis for
    /// graded lexicographic order; this is verified with Buchberger's
    /// S-pair criterion.
    pub fn new<S: Into<String>>(
        field: CoeffField,
        vars: impl IntoIterator<Item = S>,
        relations: &[&str],
    ) -> Result<Self> {
        let ring = Monoid::free(vars)?;
        let mut rels = Vec::new();
        for r in relations {
            let p = super::poly::parse_poly(field, &ring, r)?;
            if !p.is_zero() {
                rels.push(make_monic(&p)?);
            }
        }
        let q = PolyQuotient {
            field,
            ring,
            relations: rels,
        };
        q.check_groebner()?;
        Ok(q)
    }

    pub fn field(&self) -> CoeffField {
        self.field
    }

    pub fn ring(&self) -> &Monoid {
        &self.ring
    }

    pub fn vars(&self) -> &[String] {
        match &self.ring {
            Monoid::Free(f) => f.vars(),
            _ => unreachable!("quotient rings are built over free monoids"),
        }
    }

    pub fn relations(&self) -> &[KPoly] {
        &self.relations
    }

    /// Remainder of full division by the relations.
    pub fn normal_form(&self, f: &KPoly) -> Result<KPoly> {
        let mut p = f.clone();
        let mut r = KPoly::zero();
        while let Some((m, c)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let divisor = self
                .relations
                .iter()
                .find(|g| divides(exps(g.leading().unwrap().0), exps(&m)));
            match divisor {
                Some(g) => {
                    let lm = exps(g.leading().unwrap().0);
                    let q: Vec<u64> = exps(&m).iter().zip(lm).map(|(a, b)| a - b).collect();
                    p = p.sub(&g.scale(&self.ring, &c, &Monomial::Exp(q))?)?;
                }
                None => {
                    r.add_term(m.clone(), c.clone())?;
                    p = p.sub(&KPoly::term(m, c))?;
                }
            }
        }
        Ok(r)
    }

    fn check_groebner(&self) -> Result<()> {
        for (i, f) in self.relations.iter().enumerate() {
            for g in &self.relations[i + 1..] {
                let (mf, mg) = (exps(f.leading().unwrap().0), exps(g.leading().unwrap().0));
                let lcm: Vec<u64> = mf.iter().zip(mg).map(|(a, b)| *a.max(b)).collect();
                let one = self.field.one();
                let sf = f.scale(
                    &self.ring,
                    &one,
                    &Monomial::Exp(lcm.iter().zip(mf).map(|(a, b)| a - b).collect()),
                )?;
                let sg = g.scale(
                    &self.ring,
                    &one,
                    &Monomial::Exp(lcm.iter().zip(mg).map(|(a, b)| a - b).collect()),
                )?;
                if !self.normal_form(&sf.sub(&sg)?)?.is_zero() {
                    return Err(Error::usage(
                        "relations are not a Gröbner basis for graded lexicographic order; supply one",
                    ));
                }
            }
        }
        Ok(())
    }
}

fn make_monic(p: &KPoly) -> Result<KPoly> {
    let (_, c) = p.leading().expect("nonzero");
    let inv = c
        .inv()
        .ok_or_else(|| Error::usage("leading coefficient is not invertible"))?;
    let mut out = KPoly::zero();
    for (m, a) in p.terms() {
        out.add_term(m.clone(), a.mul(&inv)?)?;
    }
    Ok(out)
}

impl AffineAlgebra {
    pub fn quotient(q: PolyQuotient) -> Self {
        AffineAlgebra::Quotient(q)
    }

    pub fn finite(r: FiniteRing) -> Self {
        AffineAlgebra::Finite(r)
    }

    /// Coefficient field over which the algebra is presented. For a finite
    /// ring this is its prime field.
    pub fn field(&self) -> Result<CoeffField> {
        match self {
            AffineAlgebra::Quotient(q) => Ok(q.field),
            AffineAlgebra::Finite(r) => {
                let p = r.prime_subring().len() as u64;
                if crate::valuation::ring::is_prime(p) {
                    Ok(CoeffField::Prime(p))
                } else {
                    Err(Error::usage(format!(
                        "ring has characteristic {p}, which is not prime"
                    )))
                }
            }
        }
    }

    /// Integral domains only; finite rings are checked, quotients are taken
    /// on trust from the fixture.
    pub fn is_integral(&self) -> bool {
        match self {
            AffineAlgebra::Finite(r) => {
                crate::f1algebra::is_integral(&crate::f1algebra::multiplicative_monoid(r))
            }
            AffineAlgebra::Quotient(_) => true,
        }
    }

    pub fn zero(&self) -> AlgElem {
        match self {
            AffineAlgebra::Quotient(_) => AlgElem::Poly(PolyKey(KPoly::zero())),
            AffineAlgebra::Finite(r) => AlgElem::Finite(r.zero()),
        }
    }

    pub fn one(&self) -> AlgElem {
        match self {
            AffineAlgebra::Quotient(q) => {
                AlgElem::Poly(PolyKey(KPoly::term(q.ring.one(), q.field.one())))
            }
            AffineAlgebra::Finite(r) => AlgElem::Finite(r.one()),
        }
    }

    pub fn is_zero(&self, a: &AlgElem) -> bool {
        *a == self.zero()
    }

    fn check(&self, a: &AlgElem) -> Result<()> {
        match (self, a) {
            (AffineAlgebra::Quotient(_), AlgElem::Poly(_)) => Ok(()),
            (AffineAlgebra::Finite(r), AlgElem::Finite(i)) if *i < r.len() => Ok(()),
            _ => Err(Error::usage("element does not belong to this algebra")),
        }
    }

    pub fn add(&self, a: &AlgElem, b: &AlgElem) -> Result<AlgElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (AffineAlgebra::Quotient(_), AlgElem::Poly(x), AlgElem::Poly(y)) => {
                AlgElem::Poly(PolyKey(x.0.add(&y.0)?))
            }
            (AffineAlgebra::Finite(r), AlgElem::Finite(x), AlgElem::Finite(y)) => {
                AlgElem::Finite(r.add(*x, *y))
            }
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, a: &AlgElem, b: &AlgElem) -> Result<AlgElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (AffineAlgebra::Quotient(q), AlgElem::Poly(x), AlgElem::Poly(y)) => {
                AlgElem::Poly(PolyKey(q.normal_form(&x.0.mul(&q.ring, &y.0)?)?))
            }
            (AffineAlgebra::Finite(r), AlgElem::Finite(x), AlgElem::Finite(y)) => {
                AlgElem::Finite(r.mul(*x, *y))
            }
            _ => unreachable!(),
        })
    }

    pub fn neg(&self, a: &AlgElem) -> Result<AlgElem> {
        self.check(a)?;
        Ok(match (self, a) {
            (AffineAlgebra::Quotient(_), AlgElem::Poly(x)) => AlgElem::Poly(PolyKey(x.0.neg())),
            (AffineAlgebra::Finite(r), AlgElem::Finite(x)) => AlgElem::Finite(r.neg(*x)),
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, a: &AlgElem, b: &AlgElem) -> Result<AlgElem> {
        self.add(a, &self.neg(b)?)
    }

    pub fn pow(&self, a: &AlgElem, k: u64) -> Result<AlgElem> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// Image of a scalar `λ ∈ k` under the structure map `k -> A`.
    pub fn scalar(&self, c: &RingElement) -> Result<AlgElem> {
        match self {
            AffineAlgebra::Quotient(q) => {
                if !q.field.contains(c) {
                    return Err(Error::usage(format!(
                        "scalar {c} is not in the coefficient field"
                    )));
                }
                Ok(AlgElem::Poly(PolyKey(KPoly::term(q.ring.one(), c.clone()))))
            }
            AffineAlgebra::Finite(r) => {
                let CoeffField::Prime(p) = self.field()? else {
                    unreachable!()
                };
                let n = (0..p)
                    .find(|&n| {
                        CoeffField::Prime(p)
                            .from_rational(&Rat::from_integer(n.into()))
                            .ok()
                            .as_ref()
                            == Some(c)
                    })
                    .ok_or_else(|| Error::usage(format!("scalar {c} is not in F_{p}")))?;
                let mut acc = r.zero();
                for _ in 0..n {
                    acc = r.add(acc, r.one());
                }
                Ok(AlgElem::Finite(acc))
            }
        }
    }

    /// Parses an element: an expression in the variables for quotients, an
    /// element name for finite rings.
    pub fn parse_element(&self, text: &str) -> Result<AlgElem> {
        match self {
            AffineAlgebra::Quotient(_) => parse_expr(text)?.eval(self),
            AffineAlgebra::Finite(r) => r
                .index_of(text.trim())
                .map(AlgElem::Finite)
                .ok_or_else(|| Error::parse(format!("unknown ring element `{text}`"))),
        }
    }

    pub fn format_element(&self, a: &AlgElem) -> String {
        match (self, a) {
            (AffineAlgebra::Quotient(q), AlgElem::Poly(p)) => p.0.format(&q.ring),
            (AffineAlgebra::Finite(r), AlgElem::Finite(i)) => r.names()[*i].clone(),
            _ => format!("{a:?}"),
        }
    }

    /// All elements of a finite algebra.
    pub fn elements(&self) -> Option<Vec<AlgElem>> {
        match self {
            AffineAlgebra::Finite(r) => Some((0..r.len()).map(AlgElem::Finite).collect()),
            AffineAlgebra::Quotient(_) => None,
        }
    }

    /// The scalars of `k` inside a finite algebra (its prime field).
    pub fn prime_scalars(&self) -> Result<Vec<RingElement>> {
        match self.field()? {
            CoeffField::Prime(p) => (0..p)
                .map(|n| CoeffField::Prime(p).from_rational(&Rat::from_integer(n.into())))
                .collect(),
            _ => Err(Error::usage(
                "only finite algebras have a finite scalar field",
            )),
        }
    }
}

impl ExprTarget for AffineAlgebra {
    type Value = AlgElem;

    fn num(&self, q: &Rat) -> Result<AlgElem> {
        self.scalar(&self.field()?.from_rational(q)?)
    }

    fn var(&self, name: &str) -> Result<AlgElem> {
        match self {
            AffineAlgebra::Quotient(q) => {
                if let Monoid::Free(f) = &q.ring {
                    if let Some(i) = f.var_index(name) {
                        let x = KPoly::term(f.var(i), q.field.one());
                        return Ok(AlgElem::Poly(PolyKey(q.normal_form(&x)?)));
                    }
                }
                if let (Some(t), "t") = (q.field.t(), name) {
                    return self.scalar(&t);
                }
                Err(Error::parse(format!("unknown variable `{name}`")))
            }
            AffineAlgebra::Finite(_) => self.parse_element(name),
        }
    }

    fn add(&self, a: &AlgElem, b: &AlgElem) -> Result<AlgElem> {
        AffineAlgebra::add(self, a, b)
    }

    fn mul(&self, a: &AlgElem, b: &AlgElem) -> Result<AlgElem> {
        AffineAlgebra::mul(self, a, b)
    }

    fn neg(&self, a: &AlgElem) -> Result<AlgElem> {
        AffineAlgebra::neg(self, a)
    }
}

impl fmt::Display for AffineAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineAlgebra::Quotient(q) => {
                let rels: Vec<String> = q.relations.iter().map(|r| r.format(&q.ring)).collect();
                write!(f, "k[{}]/({})", q.vars().join(", "), rels.join(", "))
            }
            AffineAlgebra::Finite(r) => write!(f, "finite ring of order {}", r.len()),
        }
    }
}
