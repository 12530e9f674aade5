//! Valuation points `α: A -> T` of an algebra and the map `π` sending them to
//! points of a tropicalization.

use std::collections::BTreeSet;

use serde::Serialize;

use super::algebra::{AffineAlgebra, AlgElem, PolyKey};
use super::embedding::{Embedding, TPoint};
use super::poly::{CoeffField, KPoly};
use crate::error::{Error, Result};
use crate::f1algebra::{exponent_vectors, Monoid, Monomial};
use crate::semiring::{int, rat, Rat, SemiringTag, SemiringValue};
use crate::valuation::ring::RingElement;
use crate::valuation::Valuation;

/// A candidate map `α: A -> T`.
#[derive(Debug, Clone, PartialEq)]
pub enum AlgebraPoint {
    /// `a ↦ ν(a(p))` for a `k`-point `p` of `X`.
    Eval {
        point: Vec<RingElement>,
        valuation: Valuation,
    },
    /// `Σ c_e x^e ↦ max (ν(c_e) + w·e)` on normal forms.
    Weight {
        weights: Vec<Rat>,
        valuation: Valuation,
    },
    /// One value per element of a finite ring.
    Table { values: Vec<SemiringValue> },
}

fn eval_poly(f: &KPoly, point: &[RingElement], field: CoeffField) -> Result<RingElement> {
    let mut acc = field.zero();
    for (m, c) in f.terms() {
        let Monomial::Exp(e) = m else {
            return Err(Error::usage("cannot evaluate a non-polynomial term"));
        };
        let mut t = c.clone();
        for (x, k) in point.iter().zip(e) {
            for _ in 0..*k {
                t = t.mul(x)?;
            }
        }
        acc = acc.add(&t)?;
    }
    Ok(acc)
}

impl AlgebraPoint {
    /// Evaluation at a `k`-point, which must satisfy the relations of `A`.
    pub fn eval_at(
        algebra: &AffineAlgebra,
        point: Vec<RingElement>,
        valuation: Valuation,
    ) -> Result<Self> {
        let AffineAlgebra::Quotient(q) = algebra else {
            return Err(Error::usage("evaluation points need a presented algebra"));
        };
        if point.len() != q.vars().len() {
            return Err(Error::usage(format!(
                "point needs {} coordinates, got {}",
                q.vars().len(),
                point.len()
            )));
        }
        if let Some(c) = point.iter().find(|c| !q.field().contains(c)) {
            return Err(Error::usage(format!(
                "coordinate {c} is not in the coefficient field"
            )));
        }
        for r in q.relations() {
            if !eval_poly(r, &point, q.field())?.is_zero() {
                return Err(Error::usage(format!(
                    "point does not satisfy {}",
                    r.format(q.ring())
                )));
            }
        }
        Ok(AlgebraPoint::Eval { point, valuation })
    }

    pub fn weight(
        algebra: &AffineAlgebra,
        weights: Vec<Rat>,
        valuation: Valuation,
    ) -> Result<Self> {
        let AffineAlgebra::Quotient(q) = algebra else {
            return Err(Error::usage("weight points need a presented algebra"));
        };
        if weights.len() != q.vars().len() {
            return Err(Error::usage(format!(
                "need {} weights, got {}",
                q.vars().len(),
                weights.len()
            )));
        }
        if valuation.target() != SemiringTag::Trop {
            return Err(Error::usage(
                "weight points take values in the tropical semiring",
            ));
        }
        Ok(AlgebraPoint::Weight { weights, valuation })
    }

    pub fn table(algebra: &AffineAlgebra, values: Vec<SemiringValue>) -> Result<Self> {
        let AffineAlgebra::Finite(r) = algebra else {
            return Err(Error::usage("table points need a finite algebra"));
        };
        if values.len() != r.len() {
            return Err(Error::usage(format!(
                "need {} values, got {}",
                r.len(),
                values.len()
            )));
        }
        if values.iter().any(|v| v.tag() != values[0].tag()) {
            return Err(Error::usage("table values must share a semiring"));
        }
        Ok(AlgebraPoint::Table { values })
    }

    pub fn tag(&self) -> SemiringTag {
        match self {
            AlgebraPoint::Eval { valuation, .. } => valuation.target(),
            AlgebraPoint::Weight { .. } => SemiringTag::Trop,
            AlgebraPoint::Table { values } => {
                values.first().map(|v| v.tag()).unwrap_or(SemiringTag::Trop)
            }
        }
    }

    /// The valuation on scalars this point is meant to extend.
    pub fn scalar_valuation(&self) -> Option<&Valuation> {
        match self {
            AlgebraPoint::Eval { valuation, .. } | AlgebraPoint::Weight { valuation, .. } => {
                Some(valuation)
            }
            AlgebraPoint::Table { .. } => None,
        }
    }

    pub fn value(&self, algebra: &AffineAlgebra, a: &AlgElem) -> Result<SemiringValue> {
        match (self, algebra, a) {
            (
                AlgebraPoint::Eval { point, valuation },
                AffineAlgebra::Quotient(q),
                AlgElem::Poly(p),
            ) => valuation.apply(&eval_poly(&p.0, point, q.field())?),
            (
                AlgebraPoint::Weight { weights, valuation },
                AffineAlgebra::Quotient(_),
                AlgElem::Poly(p),
            ) => {
                let mut best = SemiringValue::zero(SemiringTag::Trop);
                for (m, c) in p.0.terms() {
                    let Monomial::Exp(e) = m else {
                        unreachable!("normal forms are polynomials")
                    };
                    let w: Rat = weights
                        .iter()
                        .zip(e)
                        .map(|(w, k)| w * Rat::from_integer((*k).into()))
                        .sum();
                    best = best.add(&valuation.apply(c)?.mul(&SemiringValue::trop(w))?)?;
                }
                Ok(best)
            }
            (AlgebraPoint::Table { values }, AffineAlgebra::Finite(_), AlgElem::Finite(i)) => {
                Ok(values[*i].clone())
            }
            _ => Err(Error::usage(
                "point and element belong to different kinds of algebra",
            )),
        }
    }
}

/// Elements and scalars on which the valuation-point conditions are tested.
#[derive(Debug, Clone)]
pub struct PointSample {
    pub elements: Vec<AlgElem>,
    pub scalars: Vec<RingElement>,
}

fn default_scalars(field: CoeffField) -> Result<Vec<RingElement>> {
    Ok(match field {
        CoeffField::Rationals => [int(2), int(3), int(-1), rat(1, 2), rat(-3, 4)]
            .iter()
            .map(|q| RingElement::Rational(q.clone()))
            .collect(),
        CoeffField::RationalFunctions => {
            let t = field.t().expect("Q(t) has t");
            let one = field.one();
            vec![
                t.clone(),
                t.add(&one)?,
                field.from_rational(&int(2))?,
                field.from_rational(&int(-1))?,
                t.mul(&t)?,
            ]
        }
        CoeffField::Prime(p) => (1..p)
            .map(|n| field.from_rational(&int(n as i64)))
            .collect::<Result<_>>()?,
    })
}

/// All elements of a finite algebra; for a presented algebra, normal forms
/// of monomials of degree at most two and a few of their sums, about 25
/// elements in all, plus small scalars.
pub fn default_sample(algebra: &AffineAlgebra) -> Result<PointSample> {
    let field = algebra.field()?;
    if let Some(elements) = algebra.elements() {
        return Ok(PointSample {
            elements,
            scalars: algebra
                .prime_scalars()?
                .into_iter()
                .filter(|c| !c.is_zero())
                .collect(),
        });
    }
    let AffineAlgebra::Quotient(q) = algebra else {
        unreachable!()
    };
    let mut basis: Vec<AlgElem> = Vec::new();
    for e in exponent_vectors(q.vars().len(), 2) {
        let nf = AlgElem::Poly(PolyKey(
            q.normal_form(&KPoly::term(Monomial::Exp(e), field.one()))?,
        ));
        if !algebra.is_zero(&nf) && !basis.contains(&nf) {
            basis.push(nf);
        }
    }
    let mut seen: BTreeSet<AlgElem> = basis.iter().cloned().collect();
    let mut elements = basis.clone();
    let coeffs = [int(1), int(-1), int(2)];
    'outer: for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            for c in &coeffs {
                if elements.len() >= 25 {
                    break 'outer;
                }
                let x = algebra.add(
                    a,
                    &algebra.mul(&algebra.scalar(&field.from_rational(c)?)?, b)?,
                )?;
                if !algebra.is_zero(&x) && seen.insert(x.clone()) {
                    elements.push(x);
                }
            }
        }
    }
    Ok(PointSample {
        elements,
        scalars: default_scalars(field)?,
    })
}

/// Outcome of the valuation-point test on a sample.
#[derive(Debug, Clone, Serialize)]
pub struct PointReport {
    pub is_valuation: bool,
    pub scalar_compatible: bool,
    /// `α(a+b) ≤ α(a) + α(b)` on every sampled pair.
    pub first: bool,
    /// `α(b) ≤ α(a) + α(a+b)` on every sampled pair.
    pub second: bool,
    /// `α(a) ≤ α(b) + α(a+b)` on every sampled pair.
    pub third: bool,
    /// The first family holding everywhere forces the other two.
    pub redundancy_holds: bool,
    pub checked_pairs: usize,
    pub witness: Option<String>,
}

/// Tests whether `α` is a valuation extending `ν` on the sample: the max of
/// `α(a), α(b), α(a+b)` must be attained twice for all sampled `a, b`, and
/// `α(λa) = ν(λ)α(a)`. A map that is not multiplicative, or that misplaces
/// `0` or `1`, is not a candidate at all and yields a usage error.
pub fn is_valuation_point(
    algebra: &AffineAlgebra,
    alpha: &AlgebraPoint,
    valuation: &Valuation,
    sample: &PointSample,
) -> Result<PointReport> {
    let tag = alpha.tag();
    if valuation.target() != tag {
        return Err(Error::usage(
            "point and valuation take values in different semirings",
        ));
    }
    let fmt = |a: &AlgElem| algebra.format_element(a);
    if !alpha.value(algebra, &algebra.zero())?.is_bottom() {
        return Err(Error::usage("α(0) is not the bottom element"));
    }
    if !alpha.value(algebra, &algebra.one())?.is_one() {
        return Err(Error::usage("α(1) is not the unit"));
    }
    let vals: Vec<SemiringValue> = sample
        .elements
        .iter()
        .map(|a| alpha.value(algebra, a))
        .collect::<Result<_>>()?;
    for (a, va) in sample.elements.iter().zip(&vals) {
        for (b, vb) in sample.elements.iter().zip(&vals) {
            if alpha.value(algebra, &algebra.mul(a, b)?)? != va.mul(vb)? {
                return Err(Error::usage(format!(
                    "α is not multiplicative at ({}) * ({})",
                    fmt(a),
                    fmt(b)
                )));
            }
        }
    }
    let mut witness = None;
    let mut scalar_compatible = true;
    for l in &sample.scalars {
        let vl = valuation.apply(l)?;
        let la = algebra.scalar(l)?;
        for (a, va) in sample.elements.iter().zip(&vals) {
            if alpha.value(algebra, &algebra.mul(&la, a)?)? != vl.mul(va)? {
                scalar_compatible = false;
                witness.get_or_insert_with(|| {
                    format!("α({l} * ({})) differs from ν({l}) α({})", fmt(a), fmt(a))
                });
            }
        }
    }
    let (mut first, mut second, mut third) = (true, true, true);
    let mut checked_pairs = 0;
    for (a, va) in sample.elements.iter().zip(&vals) {
        for (b, vb) in sample.elements.iter().zip(&vals) {
            checked_pairs += 1;
            let vs = alpha.value(algebra, &algebra.add(a, b)?)?;
            if !vs.leq(&va.add(vb)?)? {
                first = false;
                witness.get_or_insert_with(|| {
                    format!(
                        "α(({}) + ({})) exceeds α({}) + α({})",
                        fmt(a),
                        fmt(b),
                        fmt(a),
                        fmt(b)
                    )
                });
            }
            if !vb.leq(&va.add(&vs)?)? {
                second = false;
                witness.get_or_insert_with(|| {
                    format!(
                        "α({}) exceeds α({}) + α(({}) + ({}))",
                        fmt(b),
                        fmt(a),
                        fmt(a),
                        fmt(b)
                    )
                });
            }
            if !va.leq(&vb.add(&vs)?)? {
                third = false;
                witness.get_or_insert_with(|| {
                    format!(
                        "α({}) exceeds α({}) + α(({}) + ({}))",
                        fmt(a),
                        fmt(b),
                        fmt(a),
                        fmt(b)
                    )
                });
            }
        }
    }
    Ok(PointReport {
        is_valuation: scalar_compatible && first && second && third,
        scalar_compatible,
        first,
        second,
        third,
        redundancy_holds: !first || (second && third),
        checked_pairs,
        witness,
    })
}

/// `π(α)`: the point `b ↦ α(image of b)` of the tropicalization.
pub fn pi_map(e: &Embedding, alpha: &AlgebraPoint) -> Result<TPoint> {
    let a = e.algebra();
    let values = e
        .images()
        .iter()
        .map(|x| alpha.value(a, x))
        .collect::<Result<Vec<_>>>()?;
    if matches!(e.monoid().as_ref(), Monoid::Rationals) {
        return Err(Error::usage(
            "π is only computed for free and table monoids",
        ));
    }
    TPoint::new(e.monoid().clone(), values)
}
