//! Generalized valuations into idempotent semirings.
//!
//! Sign convention: the target semirings are max-plus, so the `p`-adic
//! valuation sends `a` to `-v_p(a)` and the `t`-adic valuation sends `f` to
//! `-ord_t(f)`. Larger values mean larger absolute value, which makes every
//! valuation order-preserving into `(max, +)`.
//!
//! A map `ν: R → S` is a valuation when
//! `ν(0) = -inf`, `ν(1) = 1_S`, `ν(ab) = ν(a)ν(b)`, `ν(-a) = ν(a)` and
//! `ν(a+b) + ν(a) + ν(b) = ν(a) + ν(b)`.

pub mod ring;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semiring::{int, Rat, SemiringTag, SemiringValue};
use ring::{rat_valuation, FiniteRing, RingElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValuationKind {
    /// Nonzero elements go to the unit.
    Trivial,
    /// `a ↦ -v_p(a)` on `Q`.
    PAdic(u64),
    /// `f ↦ -ord_t(f)` on `Q(t)`.
    TAdic,
    /// Rank-2 composite: the outer valuation, then the inner valuation on the
    /// residue (the initial coefficient for `t`-adic outer).
    Lex(Box<Valuation>, Box<Valuation>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation {
    kind: ValuationKind,
    target: SemiringTag,
}

impl Valuation {
    pub fn trivial() -> Self {
        Valuation {
            kind: ValuationKind::Trivial,
            target: SemiringTag::Trop,
        }
    }

    /// Trivial valuation into another semiring (e.g. `Bool`).
    pub fn trivial_into(target: SemiringTag) -> Self {
        Valuation {
            kind: ValuationKind::Trivial,
            target,
        }
    }

    pub fn p_adic(p: u64) -> Result<Self> {
        if !ring::is_prime(p) {
            return Err(Error::usage(format!("{p} is not prime")));
        }
        Ok(Valuation {
            kind: ValuationKind::PAdic(p),
            target: SemiringTag::Trop,
        })
    }

    pub fn t_adic() -> Self {
        Valuation {
            kind: ValuationKind::TAdic,
            target: SemiringTag::Trop,
        }
    }

    /// Lexicographic composite. Supported shapes: `t`-adic outer with a
    /// trivial or `p`-adic inner, and `p`-adic outer with a trivial inner.
    pub fn lex(outer: Valuation, inner: Valuation) -> Result<Self> {
        let ok = matches!(
            (&outer.kind, &inner.kind),
            (
                ValuationKind::TAdic,
                ValuationKind::Trivial | ValuationKind::PAdic(_)
            ) | (ValuationKind::PAdic(_), ValuationKind::Trivial)
        );
        if !ok || outer.target != SemiringTag::Trop || inner.target != SemiringTag::Trop {
            return Err(Error::usage("unsupported lex composite: use t-adic outer with trivial/p-adic inner, or p-adic outer with trivial inner"));
        }
        Ok(Valuation {
            kind: ValuationKind::Lex(Box::new(outer), Box::new(inner)),
            target: SemiringTag::Rank2,
        })
    }

    pub fn kind(&self) -> &ValuationKind {
        &self.kind
    }

    pub fn target(&self) -> SemiringTag {
        self.target
    }

    /// Value on a nonzero rational as an exact rational (finite part).
    fn rank1(&self, a: &RingElement) -> Result<Option<Rat>> {
        if a.is_zero() {
            return Ok(None);
        }
        Ok(Some(match (&self.kind, a) {
            (ValuationKind::Trivial, _) => int(0),
            (ValuationKind::PAdic(p), RingElement::Rational(r)) => int(-rat_valuation(r, *p)),
            (ValuationKind::TAdic, RingElement::RationalFunction(f)) => {
                int(-f.ord().expect("nonzero"))
            }
            (ValuationKind::TAdic, RingElement::Rational(_)) => int(0),
            _ => return Err(Error::usage(format!("valuation does not apply to `{a}`"))),
        }))
    }

    /// Applies the valuation.
    pub fn apply(&self, a: &RingElement) -> Result<SemiringValue> {
        if a.is_zero() {
            return Ok(SemiringValue::zero(self.target));
        }
        match &self.kind {
            ValuationKind::Trivial => Ok(SemiringValue::one(self.target)),
            ValuationKind::PAdic(_) | ValuationKind::TAdic => {
                Ok(SemiringValue::trop(self.rank1(a)?.expect("nonzero")))
            }
            ValuationKind::Lex(outer, inner) => {
                let first = outer.rank1(a)?.expect("nonzero");
                let residue = match (&outer.kind, a) {
                    (ValuationKind::TAdic, RingElement::RationalFunction(f)) => {
                        RingElement::Rational(f.initial_coefficient().expect("nonzero"))
                    }
                    (ValuationKind::TAdic, RingElement::Rational(r)) => {
                        RingElement::Rational(r.clone())
                    }
                    // p-adic outer only pairs with a trivial inner.
                    _ => a.clone(),
                };
                let second = inner.rank1(&residue)?.expect("nonzero residue");
                Ok(SemiringValue::rank2(first, second))
            }
        }
    }
}

/// A candidate valuation on a finite ring, given by its value on every element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationTable {
    ring: FiniteRing,
    values: Vec<SemiringValue>,
}

impl ValuationTable {
    pub fn new(ring: FiniteRing, values: Vec<SemiringValue>) -> Result<Self> {
        if values.len() != ring.len() {
            return Err(Error::usage(
                "valuation table must assign a value to every ring element",
            ));
        }
        if let Some(v) = values.first() {
            let tag = v.tag();
            if values.iter().any(|x| x.tag() != tag) {
                return Err(Error::usage("valuation table values must share a semiring"));
            }
        }
        Ok(ValuationTable { ring, values })
    }

    /// The trivial valuation on a finite ring.
    pub fn trivial(ring: FiniteRing) -> Self {
        let values = (0..ring.len())
            .map(|i| {
                if i == ring.zero() {
                    SemiringValue::zero(SemiringTag::Trop)
                } else {
                    SemiringValue::one(SemiringTag::Trop)
                }
            })
            .collect();
        ValuationTable { ring, values }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn values(&self) -> &[SemiringValue] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &SemiringValue {
        &self.values[i]
    }

    pub fn tag(&self) -> SemiringTag {
        self.values[0].tag()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Zero,
    One,
    Multiplicative,
    Negation,
    Subadditive,
    /// `ν(a+b) <= ν(a) + ν(b)`, the order-theoretic form of subadditivity.
    Orientation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checked_pairs: usize,
    pub violations: Vec<AxiomViolation>,
    /// True when the identity form and the order form of subadditivity agree
    /// on every checked pair.
    pub subadditivity_forms_agree: bool,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Shared axiom checker over an abstract ring.
struct AxiomChecker<E, V, A, M, N>
where
    V: Fn(&E) -> Result<SemiringValue>,
    A: Fn(&E, &E) -> Result<E>,
    M: Fn(&E, &E) -> Result<E>,
    N: Fn(&E) -> E,
{
    value: V,
    add: A,
    mul: M,
    neg: N,
    _e: std::marker::PhantomData<E>,
}

impl<E: std::fmt::Display, V, A, M, N> AxiomChecker<E, V, A, M, N>
where
    V: Fn(&E) -> Result<SemiringValue>,
    A: Fn(&E, &E) -> Result<E>,
    M: Fn(&E, &E) -> Result<E>,
    N: Fn(&E) -> E,
{
    fn run(&self, zero: &E, one: &E, tag: SemiringTag, pairs: &[(E, E)]) -> Result<AxiomReport> {
        let mut violations = Vec::new();
        let mut forms_agree = true;
        let v0 = (self.value)(zero)?;
        if v0 != SemiringValue::zero(tag) {
            violations.push(AxiomViolation {
                axiom: Axiom::Zero,
                witness: format!("ν(0) = {v0}"),
            });
        }
        let v1 = (self.value)(one)?;
        if v1 != SemiringValue::one(tag) {
            violations.push(AxiomViolation {
                axiom: Axiom::One,
                witness: format!("ν(1) = {v1}"),
            });
        }
        for (a, b) in pairs {
            let va = (self.value)(a)?;
            let vb = (self.value)(b)?;
            let vab = (self.value)(&(self.mul)(a, b)?)?;
            if vab != va.mul(&vb)? {
                violations.push(AxiomViolation {
                    axiom: Axiom::Multiplicative,
                    witness: format!("ν({a}·{b}) = {vab} but ν({a})ν({b}) = {}", va.mul(&vb)?),
                });
            }
            for x in [a, b] {
                let vx = (self.value)(x)?;
                let vn = (self.value)(&(self.neg)(x))?;
                if vx != vn {
                    violations.push(AxiomViolation {
                        axiom: Axiom::Negation,
                        witness: format!("ν(-{x}) = {vn} ≠ {vx}"),
                    });
                }
            }
            let vsum = (self.value)(&(self.add)(a, b)?)?;
            let rhs = va.add(&vb)?;
            let identity = vsum.add(&rhs)? == rhs;
            let order = vsum.leq(&rhs)?;
            forms_agree &= identity == order;
            if !identity {
                violations.push(AxiomViolation {
                    axiom: Axiom::Subadditive,
                    witness: format!("ν({a}+{b}) + ν({a}) + ν({b}) = {} ≠ {rhs}", vsum.add(&rhs)?),
                });
            }
            if !order {
                violations.push(AxiomViolation {
                    axiom: Axiom::Orientation,
                    witness: format!("ν({a}+{b}) = {vsum} exceeds {rhs}"),
                });
            }
        }
        violations.sort_by_key(|x| x.axiom);
        violations.dedup_by(|x, y| x.axiom == y.axiom && x.witness == y.witness);
        Ok(AxiomReport {
            checked_pairs: pairs.len(),
            violations,
            subadditivity_forms_agree: forms_agree,
        })
    }
}

/// Checks the valuation axioms on the sampled pairs. Zero and one are taken
/// from the ring of the first sampled element.
pub fn check_axioms(val: &Valuation, sample: &[(RingElement, RingElement)]) -> Result<AxiomReport> {
    let Some((first, _)) = sample.first() else {
        return Err(Error::usage("axiom check needs at least one sampled pair"));
    };
    let checker = AxiomChecker {
        value: |a: &RingElement| val.apply(a),
        add: |a: &RingElement, b: &RingElement| a.add(b),
        mul: |a: &RingElement, b: &RingElement| a.mul(b),
        neg: |a: &RingElement| a.neg(),
        _e: std::marker::PhantomData,
    };
    checker.run(&first.zero_like(), &first.one_like(), val.target(), sample)
}

/// Exhaustive axiom check of a table on a finite ring.
pub fn check_table_axioms(table: &ValuationTable) -> Result<AxiomReport> {
    let ring = table.ring();
    let names = ring.names();
    #[derive(Clone)]
    struct Named<'a>(usize, &'a [String]);
    impl std::fmt::Display for Named<'_> {
        fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
            f.write_str(&self.1[self.0])
        }
    }
    let pairs: Vec<(Named, Named)> = (0..ring.len())
        .flat_map(|a| (0..ring.len()).map(move |b| (Named(a, names), Named(b, names))))
        .collect();
    let checker = AxiomChecker {
        value: |a: &Named| Ok(table.value(a.0).clone()),
        add: |a: &Named, b: &Named| Ok(Named(ring.add(a.0, b.0), names)),
        mul: |a: &Named, b: &Named| Ok(Named(ring.mul(a.0, b.0), names)),
        neg: |a: &Named| Named(ring.neg(a.0), names),
        _e: std::marker::PhantomData,
    };
    checker.run(
        &Named(ring.zero(), names),
        &Named(ring.one(), names),
        table.tag(),
        &pairs,
    )
}
