//! The universal embedding `X -> Spec k[M(A)]` and its tropicalization.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::algebra::{AffineAlgebra, AlgElem, PolyKey};
use super::embedding::{trop_of_poly, Embedding, TropPresentation};
use super::poly::{CoeffField, KPoly};
use crate::error::{Error, Result};
use crate::f1algebra::{multiplicative_monoid, Monoid, Monomial};
use crate::semiring::Rat;
use crate::valuation::ring::RingElement;
use crate::valuation::Valuation;

/// Which elements of `A` the kernel generators may mention.
#[derive(Debug, Clone)]
pub enum Sample {
    /// Every element; finite algebras only.
    All,
    /// A finite sample of elements and scalars.
    Elements {
        elements: Vec<AlgElem>,
        scalars: Vec<RingElement>,
    },
}

fn is_rationals(a: &AffineAlgebra) -> bool {
    matches!(a, AffineAlgebra::Quotient(q) if q.vars().is_empty() && q.field() == CoeffField::Rationals)
}

fn supported(a: &AffineAlgebra) -> Result<()> {
    match a {
        AffineAlgebra::Finite(r) if r.has_zero_divisors() => Err(Error::usage(
            "the universal embedding is implemented for finite fields and Q only",
        )),
        AffineAlgebra::Finite(_) => a.field().map(|_| ()),
        _ if is_rationals(a) => Ok(()),
        _ => Err(Error::usage(
            "the universal embedding is implemented for finite fields and Q only",
        )),
    }
}

/// The monoid `M(A)`: a table for finite fields, `M(Q)` for the rationals.
pub fn universal_monoid(a: &AffineAlgebra) -> Result<Monoid> {
    supported(a)?;
    Ok(match a {
        AffineAlgebra::Finite(r) => Monoid::Table(multiplicative_monoid(r)),
        _ => Monoid::Rationals,
    })
}

/// The basis element `x_a` of `k[M(A)]`.
pub fn element_monomial(a: &AffineAlgebra, x: &AlgElem) -> Result<Monomial> {
    if a.is_zero(x) {
        return Ok(Monomial::Zero);
    }
    match (a, x) {
        (AffineAlgebra::Finite(_), AlgElem::Finite(i)) => Ok(Monomial::Elem(*i)),
        (AffineAlgebra::Quotient(_), AlgElem::Poly(p)) => match p.0.terms().values().next() {
            Some(RingElement::Rational(q)) if p.0.len() == 1 => Ok(Monomial::Rat(q.clone())),
            _ => Err(Error::usage("element is not a rational number")),
        },
        _ => Err(Error::usage("element does not belong to the algebra")),
    }
}

/// The rational `q` as an element of `A = Q`.
pub fn rational_element(q: &Rat) -> AlgElem {
    let p = KPoly::term(Monomial::Exp(Vec::new()), RingElement::Rational(q.clone()));
    AlgElem::Poly(PolyKey(p))
}

/// Generators of the kernel of `k[M(A)] -> A` restricted to the sample:
/// `λ x_a - x_{λa}` for scalars `λ ∉ {0, 1}`, and `x_a + x_b + x_c` for
/// every unordered triple with `a + b + c = 0` (repeated entries merge into
/// one coefficient, zero entries vanish).
pub fn universal_kernel_generators(a: &AffineAlgebra, sample: &Sample) -> Result<Vec<KPoly>> {
    supported(a)?;
    let field = a.field()?;
    let (elements, scalars) = match sample {
        Sample::All => {
            let Some(all) = a.elements() else {
                return Err(Error::usage("an infinite algebra needs an explicit sample"));
            };
            (all, a.prime_scalars()?)
        }
        Sample::Elements { elements, scalars } => (elements.clone(), scalars.clone()),
    };
    let elements: Vec<AlgElem> = {
        let mut seen = BTreeSet::new();
        elements
            .into_iter()
            .filter(|x| seen.insert(x.clone()))
            .collect()
    };
    let in_sample: BTreeSet<&AlgElem> = elements.iter().collect();
    let mut out: BTreeSet<PolyKey> = BTreeSet::new();
    let one = field.one();
    for l in &scalars {
        if !field.contains(l) {
            return Err(Error::usage(format!(
                "scalar {l} is not in the coefficient field"
            )));
        }
        if l.is_zero() || *l == one {
            continue;
        }
        let la = a.scalar(l)?;
        for x in elements.iter().filter(|x| !a.is_zero(x)) {
            let y = a.mul(&la, x)?;
            if !in_sample.contains(&y) {
                continue;
            }
            let mut p = KPoly::term(element_monomial(a, x)?, l.clone());
            p.add_term(element_monomial(a, &y)?, one.neg())?;
            if !p.is_zero() {
                out.insert(PolyKey(p));
            }
        }
    }
    for (i, x) in elements.iter().enumerate() {
        for y in &elements[i..] {
            let z = a.neg(&a.add(x, y)?)?;
            if !in_sample.contains(&z) {
                continue;
            }
            let mut p = KPoly::zero();
            for e in [x, y, &z] {
                p.add_term(element_monomial(a, e)?, one.clone())?;
            }
            if !p.is_zero() {
                out.insert(PolyKey(p));
            }
        }
    }
    Ok(out.into_iter().map(|k| k.0).collect())
}

/// `X -> Spec k[M(A)]` with the sampled kernel generators.
pub fn universal_embedding(
    a: Arc<AffineAlgebra>,
    valuation: Valuation,
    sample: &Sample,
) -> Result<Embedding> {
    let monoid = Arc::new(universal_monoid(&a)?);
    let images = a.elements().unwrap_or_default();
    let kernel = universal_kernel_generators(&a, sample)?;
    Ok(Embedding::new(a, valuation, monoid, images, kernel)?.with_name("universal"))
}

/// The congruence on `T[M(A)]` generated by the bends of the tropicalized
/// universal kernel generators.
pub fn universal_trop(
    a: Arc<AffineAlgebra>,
    valuation: Valuation,
    sample: &Sample,
) -> Result<TropPresentation> {
    let e = universal_embedding(a, valuation, sample)?;
    let basis = e
        .kernel()
        .iter()
        .map(|g| trop_of_poly(g, e.valuation(), e.monoid()))
        .collect::<Result<Vec<_>>>()?;
    TropPresentation::from_basis(e.monoid().clone(), e.tag(), basis, None)
}
