//! Job-file schemas and their conversion into library values.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;

use crate::bendcalc::{SearchBudget, TropPoly};
use crate::error::{Error, Result};
use crate::f1algebra::{Monoid, MonoidHom, Monomial, TableMonoid};
use crate::semiring::{parse_rational, Rat, SemiringTag, SemiringValue};
use crate::tropicalize::{
    parse_scalar, AffineAlgebra, AlgElem, AlgebraPoint, CoeffField, DiagramEdge, Embedding,
    PolyQuotient, TPoint,
};
use crate::valuation::ring::{FiniteRing, RingElement};
use crate::valuation::{Valuation, ValuationKind};

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BudgetSpec {
    pub degree: Option<u32>,
    pub chain: Option<usize>,
    pub frontier: Option<usize>,
    pub context: Option<usize>,
}

impl BudgetSpec {
    /// Fields set in `over` win over those set here, which win over the
    /// defaults.
    pub fn resolve(&self, over: &BudgetSpec) -> Result<SearchBudget> {
        let d = SearchBudget::default();
        let b = SearchBudget {
            max_multiplier_degree: over
                .degree
                .or(self.degree)
                .unwrap_or(d.max_multiplier_degree),
            max_chain_length: over.chain.or(self.chain).unwrap_or(d.max_chain_length),
            frontier_cap: over.frontier.or(self.frontier).unwrap_or(d.frontier_cap),
            max_context_size: over.context.or(self.context).unwrap_or(d.max_context_size),
        };
        b.validate()?;
        Ok(b)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum RingSpec {
    /// `k[vars]/(relations)`, relations a graded-lex Gröbner basis.
    Quotient {
        field: String,
        #[serde(default)]
        vars: Vec<String>,
        #[serde(default)]
        relations: Vec<String>,
    },
    /// A named finite ring such as `F4` or `Z/6`.
    Finite {
        name: String,
    },
    Zmod {
        n: u64,
    },
    /// `F_p[t]/(modulus)`, coefficients lowest degree first.
    Gf {
        p: u64,
        modulus: Vec<u64>,
    },
    Tables {
        elements: Vec<String>,
        zero: String,
        one: String,
        add: Vec<Vec<String>>,
        mul: Vec<Vec<String>>,
    },
}

pub fn parse_field(text: &str) -> Result<CoeffField> {
    let t = text.trim();
    match t {
        "Q" | "QQ" => Ok(CoeffField::Rationals),
        "Q(t)" => Ok(CoeffField::RationalFunctions),
        _ => {
            let p = t
                .strip_prefix("F_")
                .or_else(|| t.strip_prefix('F'))
                .and_then(|s| s.parse::<u64>().ok())
                .ok_or_else(|| {
                    Error::parse(format!(
                        "unknown coefficient field `{t}`; use Q, Q(t) or F<p>"
                    ))
                })?;
            if !crate::valuation::ring::is_prime(p) {
                return Err(Error::usage(format!("F{p}: {p} is not prime")));
            }
            Ok(CoeffField::Prime(p))
        }
    }
}

fn lookup(names: &[String], name: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| Error::usage(format!("unknown element `{name}`")))
}

fn table(names: &[String], t: &[Vec<String>]) -> Result<Vec<Vec<usize>>> {
    t.iter()
        .map(|row| row.iter().map(|x| lookup(names, x)).collect())
        .collect()
}

impl RingSpec {
    pub fn build(&self) -> Result<AffineAlgebra> {
        Ok(match self {
            RingSpec::Quotient {
                field,
                vars,
                relations,
            } => {
                let rels: Vec<&str> = relations.iter().map(String::as_str).collect();
                AffineAlgebra::quotient(PolyQuotient::new(
                    parse_field(field)?,
                    vars.iter().cloned(),
                    &rels,
                )?)
            }
            RingSpec::Finite { name } => AffineAlgebra::finite(FiniteRing::named(name)?),
            RingSpec::Zmod { n } => AffineAlgebra::finite(FiniteRing::zmod(*n)?),
            RingSpec::Gf { p, modulus } => AffineAlgebra::finite(FiniteRing::gf(*p, modulus)?),
            RingSpec::Tables {
                elements,
                zero,
                one,
                add,
                mul,
            } => AffineAlgebra::finite(FiniteRing::from_tables(
                elements.clone(),
                lookup(elements, zero)?,
                lookup(elements, one)?,
                table(elements, add)?,
                table(elements, mul)?,
            )?),
        })
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ValuationSpec {
    Trivial {
        #[serde(default)]
        target: Option<String>,
    },
    PAdic {
        p: u64,
    },
    TAdic,
    Lex {
        outer: Box<ValuationSpec>,
        inner: Box<ValuationSpec>,
    },
}

impl ValuationSpec {
    pub fn build(&self) -> Result<Valuation> {
        match self {
            ValuationSpec::Trivial { target: None } => Ok(Valuation::trivial()),
            ValuationSpec::Trivial { target: Some(t) } => Ok(Valuation::trivial_into(t.parse()?)),
            ValuationSpec::PAdic { p } => Valuation::p_adic(*p),
            ValuationSpec::TAdic => Ok(Valuation::t_adic()),
            ValuationSpec::Lex { outer, inner } => Valuation::lex(outer.build()?, inner.build()?),
        }
    }
}

/// The field a valuation is naturally defined on.
pub fn domain_field(v: &Valuation) -> CoeffField {
    match v.kind() {
        ValuationKind::TAdic => CoeffField::RationalFunctions,
        ValuationKind::Lex(outer, _) if *outer.kind() == ValuationKind::TAdic => {
            CoeffField::RationalFunctions
        }
        _ => CoeffField::Rationals,
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum MonoidSpec {
    Free {
        vars: Vec<String>,
    },
    Table {
        elements: Vec<String>,
        zero: String,
        one: String,
        table: Vec<Vec<String>>,
    },
}

impl MonoidSpec {
    pub fn build(&self) -> Result<Monoid> {
        match self {
            MonoidSpec::Free { vars } => Monoid::free(vars.iter().cloned()),
            MonoidSpec::Table {
                elements,
                zero,
                one,
                table: t,
            } => Ok(Monoid::Table(TableMonoid::new(
                elements.clone(),
                lookup(elements, zero)?,
                lookup(elements, one)?,
                table(elements, t)?,
            )?)),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub ring: RingSpec,
    pub valuation: ValuationSpec,
    pub monoid: MonoidSpec,
    #[serde(default)]
    pub images: BTreeMap<String, String>,
    #[serde(default)]
    pub kernel: Vec<String>,
}

impl EmbeddingSpec {
    pub fn build(&self) -> Result<Embedding> {
        let e = Embedding::from_text(
            Arc::new(self.ring.build()?),
            self.valuation.build()?,
            Arc::new(self.monoid.build()?),
            &self.images,
            &self.kernel,
        )?;
        Ok(match &self.name {
            Some(n) => e.with_name(n.clone()),
            None => e,
        })
    }
}

/// A product of factors such as `u*v^2`, `x[w]` or `1`.
pub fn parse_monomial(monoid: &Monoid, text: &str) -> Result<Monomial> {
    let t = text.trim();
    if t == "1" {
        return Ok(monoid.one());
    }
    let mut m = monoid.one();
    for f in t.split('*') {
        m = monoid.mul(&m, &monoid.parse_factor(f)?)?;
    }
    Ok(m)
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub from: usize,
    pub to: usize,
    /// Image of each generator of the source monoid in the target monoid.
    pub map: BTreeMap<String, String>,
}

impl EdgeSpec {
    pub fn build(&self, nodes: &[Embedding]) -> Result<DiagramEdge> {
        let (Some(src), Some(tgt)) = (nodes.get(self.from), nodes.get(self.to)) else {
            return Err(Error::usage(format!(
                "edge {} -> {} refers to a missing node",
                self.from, self.to
            )));
        };
        let assignment = self
            .map
            .iter()
            .map(|(k, v)| Ok((k.clone(), parse_monomial(tgt.monoid(), v)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let psi = MonoidHom::from_assignment(src.monoid(), tgt.monoid(), &assignment)?;
        Ok(DiagramEdge {
            from: self.from,
            to: self.to,
            psi,
        })
    }
}

/// A map `A -> T` in job syntax.
#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum AlgebraPointSpec {
    /// Coordinates of a `k`-point of `X`.
    Eval(Vec<String>),
    /// Monomial weights on normal forms.
    Weights(Vec<String>),
    /// Value of each element of a finite ring.
    Table(BTreeMap<String, String>),
}

impl AlgebraPointSpec {
    pub fn build(&self, a: &AffineAlgebra, v: &Valuation) -> Result<AlgebraPoint> {
        match self {
            AlgebraPointSpec::Eval(xs) => {
                let field = a.field()?;
                let pt = xs
                    .iter()
                    .map(|x| parse_scalar(field, x))
                    .collect::<Result<Vec<_>>>()?;
                AlgebraPoint::eval_at(a, pt, v.clone())
            }
            AlgebraPointSpec::Weights(ws) => {
                let w = ws
                    .iter()
                    .map(|x| parse_rational(x))
                    .collect::<Result<Vec<Rat>>>()?;
                AlgebraPoint::weight(a, w, v.clone())
            }
            AlgebraPointSpec::Table(values) => {
                let AffineAlgebra::Finite(r) = a else {
                    return Err(Error::usage("table points need a finite ring"));
                };
                for k in values.keys() {
                    lookup(r.names(), k)?;
                }
                let vals = r
                    .names()
                    .iter()
                    .map(|n| match values.get(n) {
                        Some(t) => SemiringValue::parse(v.target(), t),
                        None => Err(Error::usage(format!("no value for element `{n}`"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                AlgebraPoint::table(a, vals)
            }
        }
    }
}

/// A point of `B` given by name, values in the semiring syntax.
pub fn build_tpoint(
    monoid: &Arc<Monoid>,
    tag: SemiringTag,
    values: &BTreeMap<String, String>,
) -> Result<TPoint> {
    let names: Vec<String> = match monoid.as_ref() {
        Monoid::Free(f) => f.vars().to_vec(),
        Monoid::Table(t) => t.names().to_vec(),
        Monoid::Rationals => return Err(Error::usage("points on M(Q) are not supported")),
    };
    for k in values.keys() {
        lookup(&names, k)?;
    }
    let vals = names
        .iter()
        .enumerate()
        .map(|(i, n)| match (values.get(n), monoid.as_ref()) {
            (Some(t), _) => SemiringValue::parse(tag, t),
            (None, Monoid::Table(t)) if i == t.zero_index() => Ok(SemiringValue::zero(tag)),
            _ => Err(Error::usage(format!("no value for `{n}`"))),
        })
        .collect::<Result<Vec<_>>>()?;
    TPoint::new(monoid.clone(), vals)
}

/// Elements and scalars of a sampled algebra.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleSpec {
    pub elements: Vec<String>,
    #[serde(default)]
    pub scalars: Vec<String>,
}

impl SampleSpec {
    pub fn build(&self, a: &AffineAlgebra) -> Result<(Vec<AlgElem>, Vec<RingElement>)> {
        let field = a.field()?;
        let els = self
            .elements
            .iter()
            .map(|e| a.parse_element(e))
            .collect::<Result<Vec<_>>>()?;
        let sc = self
            .scalars
            .iter()
            .map(|s| parse_scalar(field, s))
            .collect::<Result<Vec<_>>>()?;
        Ok((els, sc))
    }
}

pub fn parse_trop(monoid: &Arc<Monoid>, tag: SemiringTag, text: &str) -> Result<TropPoly> {
    TropPoly::parse(monoid.clone(), tag, text)
}
