//! Embeddings `X -> Spec k[B]`, their tropicalizations and `T`-points.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::Serialize;

use super::algebra::{AffineAlgebra, AlgElem, PolyKey};
use super::linalg::{binomial, for_each_subset, null_space, rref};
use super::poly::{parse_poly, KPoly};
use crate::bendcalc::{contains, Congruence, RelationPair, SearchBudget, TropPoly, Verdict};
use crate::error::{Error, Result};
use crate::f1algebra::{exponent_vectors, Monoid, MonoidHom, Monomial};
use crate::semiring::{max_attained_twice, SemiringTag, SemiringValue};
use crate::valuation::{Valuation, ValuationKind};

/// Largest number of coordinate subsets the circuit search will visit.
pub const DEFAULT_SUBSET_CAP: u128 = 250_000;

/// A monoid `B` with a multiplicative map `B -> A` whose image generates
/// `A`, and generators of the kernel of `k[B] -> A`.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub name: Option<String>,
    algebra: Arc<AffineAlgebra>,
    valuation: Valuation,
    monoid: Arc<Monoid>,
    images: Vec<AlgElem>,
    kernel: Vec<KPoly>,
}

impl Embedding {
    /// `images` lists the image of each variable (free `B`) or of each
    /// element (table `B`); it is empty for `B = M(Q)`, whose elements map
    /// to themselves.
    pub fn new(
        algebra: Arc<AffineAlgebra>,
        valuation: Valuation,
        monoid: Arc<Monoid>,
        images: Vec<AlgElem>,
        kernel: Vec<KPoly>,
    ) -> Result<Self> {
        let field = algebra.field()?;
        if matches!(algebra.as_ref(), AffineAlgebra::Finite(_))
            && *valuation.kind() != ValuationKind::Trivial
        {
            return Err(Error::usage(
                "finite algebras only carry the trivial valuation",
            ));
        }
        match monoid.as_ref() {
            Monoid::Free(f) => {
                if images.len() != f.rank() {
                    return Err(Error::usage(format!(
                        "expected {} images, got {}",
                        f.rank(),
                        images.len()
                    )));
                }
            }
            Monoid::Table(t) => {
                if images.len() != t.len() {
                    return Err(Error::usage(format!(
                        "expected {} images, got {}",
                        t.len(),
                        images.len()
                    )));
                }
                if !algebra.is_zero(&images[t.zero_index()])
                    || images[t.one_index()] != algebra.one()
                {
                    return Err(Error::usage("monoid map must send 0 to 0 and 1 to 1"));
                }
                for a in 0..t.len() {
                    for b in 0..t.len() {
                        if images[t.mul_index(a, b)] != algebra.mul(&images[a], &images[b])? {
                            return Err(Error::usage(format!(
                                "monoid map is not multiplicative at {} * {}",
                                t.names()[a],
                                t.names()[b]
                            )));
                        }
                    }
                }
            }
            Monoid::Rationals => {
                if !images.is_empty()
                    || field != super::poly::CoeffField::Rationals
                    || !matches!(algebra.as_ref(), AffineAlgebra::Quotient(q) if q.vars().is_empty())
                {
                    return Err(Error::usage("M(Q) embeds only the rationals themselves"));
                }
            }
        }
        let e = Embedding {
            name: None,
            algebra,
            valuation,
            monoid,
            images,
            kernel: Vec::new(),
        };
        for g in &kernel {
            for c in g.terms().values() {
                if !field.contains(c) {
                    return Err(Error::usage(format!(
                        "kernel coefficient {c} is not in the coefficient field"
                    )));
                }
            }
            if !e.algebra.is_zero(&e.ev(g)?) {
                return Err(Error::usage(format!(
                    "kernel generator {} does not vanish on the algebra",
                    g.format(&e.monoid)
                )));
            }
        }
        e.check_generates()?;
        Ok(Embedding { kernel, ..e })
    }

    /// Builds an embedding from text: `images` maps variable (or element)
    /// names of `B` to expressions in `A`, and `kernel` lists polynomials in
    /// the variables of `B`.
    pub fn from_text(
        algebra: Arc<AffineAlgebra>,
        valuation: Valuation,
        monoid: Arc<Monoid>,
        images: &BTreeMap<String, String>,
        kernel: &[String],
    ) -> Result<Self> {
        let names: Vec<String> = match monoid.as_ref() {
            Monoid::Free(f) => f.vars().to_vec(),
            Monoid::Table(t) => t.names().to_vec(),
            Monoid::Rationals => Vec::new(),
        };
        for k in images.keys() {
            if !names.contains(k) {
                return Err(Error::usage(format!(
                    "image given for unknown generator `{k}`"
                )));
            }
        }
        let mut imgs = Vec::new();
        for (i, n) in names.iter().enumerate() {
            let img = match (images.get(n), monoid.as_ref()) {
                (Some(text), _) => algebra.parse_element(text)?,
                (None, Monoid::Table(t)) if i == t.zero_index() => algebra.zero(),
                (None, Monoid::Table(t)) if i == t.one_index() => algebra.one(),
                _ => return Err(Error::usage(format!("no image for generator `{n}`"))),
            };
            imgs.push(img);
        }
        let field = algebra.field()?;
        let kernel = kernel
            .iter()
            .map(|s| parse_poly(field, &monoid, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra, valuation, monoid, imgs, kernel)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn algebra(&self) -> &Arc<AffineAlgebra> {
        &self.algebra
    }

    pub fn valuation(&self) -> &Valuation {
        &self.valuation
    }

    pub fn monoid(&self) -> &Arc<Monoid> {
        &self.monoid
    }

    pub fn images(&self) -> &[AlgElem] {
        &self.images
    }

    pub fn kernel(&self) -> &[KPoly] {
        &self.kernel
    }

    /// Image of a monoid element in `A`.
    pub fn ev_monomial(&self, m: &Monomial) -> Result<AlgElem> {
        let a = &self.algebra;
        match (self.monoid.as_ref(), m) {
            (_, Monomial::Zero) => Ok(a.zero()),
            (Monoid::Free(_), Monomial::Exp(e)) if e.len() == self.images.len() => {
                let mut acc = a.one();
                for (img, k) in self.images.iter().zip(e) {
                    acc = a.mul(&acc, &a.pow(img, *k)?)?;
                }
                Ok(acc)
            }
            (Monoid::Table(t), Monomial::Elem(i)) if *i < t.len() => Ok(self.images[*i].clone()),
            (Monoid::Rationals, Monomial::Rat(q)) => {
                a.scalar(&crate::valuation::ring::RingElement::Rational(q.clone()))
            }
            _ => Err(Error::usage(format!(
                "`{m}` is not an element of the embedding's monoid"
            ))),
        }
    }

    /// Image of an element of `k[B]` in `A`.
    pub fn ev(&self, f: &KPoly) -> Result<AlgElem> {
        let a = &self.algebra;
        let mut acc = a.zero();
        for (m, c) in f.terms() {
            acc = a.add(&acc, &a.mul(&a.scalar(c)?, &self.ev_monomial(m)?)?)?;
        }
        Ok(acc)
    }

    /// For finite `A`, the images must generate `A` as a `k`-algebra.
    fn check_generates(&self) -> Result<()> {
        let Some(all) = self.algebra.elements() else {
            return Ok(());
        };
        let a = &self.algebra;
        let mut reached: BTreeSet<AlgElem> = BTreeSet::new();
        reached.insert(a.zero());
        reached.insert(a.one());
        let gens: Vec<AlgElem> = match self.monoid.as_ref() {
            Monoid::Rationals => Vec::new(),
            _ => self.images.clone(),
        };
        reached.extend(gens.iter().cloned());
        loop {
            let cur: Vec<AlgElem> = reached.iter().cloned().collect();
            let before = reached.len();
            for x in &cur {
                for y in &cur {
                    reached.insert(a.add(x, y)?);
                    reached.insert(a.mul(x, y)?);
                }
            }
            if reached.len() == before {
                break;
            }
        }
        if reached.len() != all.len() {
            return Err(Error::usage("the images do not generate the algebra"));
        }
        Ok(())
    }

    pub fn tag(&self) -> SemiringTag {
        self.valuation.target()
    }
}

/// Coefficient-wise valuation `Σ λ_i x_{b_i} ↦ Σ ν(λ_i) x_{b_i}`.
pub fn trop_of_poly(f: &KPoly, valuation: &Valuation, monoid: &Arc<Monoid>) -> Result<TropPoly> {
    let terms = f
        .terms()
        .iter()
        .map(|(m, c)| Ok((m.clone(), valuation.apply(c)?)))
        .collect::<Result<Vec<_>>>()?;
    TropPoly::from_terms(monoid.clone(), valuation.target(), terms)
}

/// Default truncation degree: largest kernel generator degree plus two.
pub fn default_degree(e: &Embedding) -> u64 {
    e.kernel.iter().map(KPoly::degree).max().unwrap_or(0) + 2
}

/// Circuits (minimal-support elements) of the span of all monomial
/// multiples of the kernel generators of degree at most `d`, normalized so
/// the largest monomial has coefficient one.
pub fn ideal_circuits(e: &Embedding, d: u64, cap: u128) -> Result<Vec<KPoly>> {
    let Monoid::Free(f) = e.monoid.as_ref() else {
        return Err(Error::usage(
            "truncated tropicalization needs a free monoid",
        ));
    };
    let field = e.algebra.field()?;
    let zero = field.zero();
    let monos: Vec<Monomial> = {
        let mut v: Vec<Monomial> = exponent_vectors(f.rank(), d)
            .into_iter()
            .map(Monomial::Exp)
            .collect();
        v.sort();
        v
    };
    let index: BTreeMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let n = monos.len();
    let mut rows = Vec::new();
    for g in &e.kernel {
        if g.is_zero() || g.degree() > d {
            continue;
        }
        for m in exponent_vectors(f.rank(), d - g.degree()) {
            let mg = g.scale(&e.monoid, &field.one(), &Monomial::Exp(m))?;
            let mut row = vec![zero.clone(); n];
            for (mu, c) in mg.terms() {
                row[index[mu]] = c.clone();
            }
            rows.push(row);
        }
    }
    let (basis, _) = rref(rows, n)?;
    let r = basis.len();
    if r == 0 {
        return Ok(Vec::new());
    }
    let subsets = binomial(n, r - 1);
    if subsets > cap {
        return Err(Error::resource(format!(
            "degree-{d} slice has dimension {r} in {n} monomials: {subsets} coordinate subsets exceed the cap of {cap}"
        )));
    }
    let mut found: BTreeSet<PolyKey> = BTreeSet::new();
    for_each_subset(n, r - 1, |z| {
        let mt: Vec<Vec<_>> = z
            .iter()
            .map(|&j| basis.iter().map(|row| row[j].clone()).collect())
            .collect();
        let ns = null_space(mt, r, &zero)?;
        if ns.len() != 1 {
            return Ok(());
        }
        let y = &ns[0];
        let mut v = vec![zero.clone(); n];
        for (yi, row) in y.iter().zip(&basis) {
            if yi.is_zero() {
                continue;
            }
            for (vj, bj) in v.iter_mut().zip(row) {
                *vj = vj.add(&yi.mul(bj)?)?;
            }
        }
        let Some(lead) = v.iter().rev().find(|c| !c.is_zero()) else {
            return Ok(());
        };
        let inv = lead.inv().expect("nonzero field element");
        let mut p = KPoly::zero();
        for (c, m) in v.iter().zip(&monos) {
            p.add_term(m.clone(), c.mul(&inv)?)?;
        }
        found.insert(PolyKey(p));
        Ok(())
    })?;
    Ok(found.into_iter().map(|k| k.0).collect())
}

/// Tropicalizations of the circuits of the degree-`d` truncation of the
/// ideal, deduplicated and sorted.
pub fn trop_ideal_truncated(e: &Embedding, d: u64) -> Result<Vec<TropPoly>> {
    trop_ideal_truncated_capped(e, d, DEFAULT_SUBSET_CAP)
}

pub fn trop_ideal_truncated_capped(e: &Embedding, d: u64, cap: u128) -> Result<Vec<TropPoly>> {
    let mut out: Vec<TropPoly> = ideal_circuits(e, d, cap)?
        .iter()
        .map(|c| trop_of_poly(c, &e.valuation, &e.monoid))
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// The congruence generated by bend relations of a tropicalized ideal.
#[derive(Debug, Clone)]
pub struct TropPresentation {
    pub monoid: Arc<Monoid>,
    pub tag: SemiringTag,
    pub basis: Vec<TropPoly>,
    pub congruence: Congruence,
    /// Truncation degree, or `None` when the basis is not degree-truncated.
    pub degree: Option<u64>,
}

impl TropPresentation {
    pub fn from_basis(
        monoid: Arc<Monoid>,
        tag: SemiringTag,
        basis: Vec<TropPoly>,
        degree: Option<u64>,
    ) -> Result<Self> {
        let congruence = Congruence::from_bends(monoid.clone(), tag, &basis)?;
        Ok(TropPresentation {
            monoid,
            tag,
            basis,
            congruence,
            degree,
        })
    }
}

impl Serialize for TropPresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let gens: Vec<(&TropPoly, &TropPoly)> = self
            .congruence
            .generators()
            .iter()
            .map(|p| (&p.lhs, &p.rhs))
            .collect();
        let mut st = s.serialize_struct("TropPresentation", 4)?;
        st.serialize_field("semiring", &self.tag)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("generators", &gens)?;
        st.end()
    }
}

pub fn trop_presentation(e: &Embedding, d: u64) -> Result<TropPresentation> {
    let basis = trop_ideal_truncated(e, d)?;
    TropPresentation::from_basis(e.monoid.clone(), e.tag(), basis, Some(d))
}

/// A multiplicative map `B -> S` sending `0` to bottom: one value per
/// variable of a free monoid, or per element of a table monoid.
#[derive(Clone)]
pub struct TPoint {
    monoid: Arc<Monoid>,
    values: Vec<SemiringValue>,
}

impl PartialEq for TPoint {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values && crate::bendcalc::same_monoid(&self.monoid, &other.monoid)
    }
}

impl Eq for TPoint {}

impl PartialOrd for TPoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TPoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.values.cmp(&other.values)
    }
}

impl std::hash::Hash for TPoint {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.values.hash(state);
    }
}

impl fmt::Debug for TPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .named()
            .into_iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        write!(f, "TPoint({})", parts.join(", "))
    }
}

impl TPoint {
    pub fn new(monoid: Arc<Monoid>, values: Vec<SemiringValue>) -> Result<Self> {
        if let Some(v) = values.first() {
            if values.iter().any(|x| x.tag() != v.tag()) {
                return Err(Error::usage("point values must share a semiring"));
            }
        }
        match monoid.as_ref() {
            Monoid::Free(f) => {
                if values.len() != f.rank() {
                    return Err(Error::usage(format!(
                        "point needs {} values, got {}",
                        f.rank(),
                        values.len()
                    )));
                }
            }
            Monoid::Table(t) => {
                if values.len() != t.len() {
                    return Err(Error::usage(format!(
                        "point needs {} values, got {}",
                        t.len(),
                        values.len()
                    )));
                }
                if !values[t.zero_index()].is_bottom() || !values[t.one_index()].is_one() {
                    return Err(Error::usage(
                        "point must send 0 to bottom and 1 to the unit",
                    ));
                }
                for a in 0..t.len() {
                    for b in 0..t.len() {
                        if values[t.mul_index(a, b)] != values[a].mul(&values[b])? {
                            return Err(Error::usage(format!(
                                "point is not multiplicative at {} * {}",
                                t.names()[a],
                                t.names()[b]
                            )));
                        }
                    }
                }
            }
            Monoid::Rationals => {
                return Err(Error::usage(
                    "points on M(Q) are valuations; use a finite sample",
                ))
            }
        }
        Ok(TPoint { monoid, values })
    }

    pub fn monoid(&self) -> &Arc<Monoid> {
        &self.monoid
    }

    pub fn values(&self) -> &[SemiringValue] {
        &self.values
    }

    /// Generator names with their values (the zero element is omitted).
    pub fn named(&self) -> Vec<(String, SemiringValue)> {
        match self.monoid.as_ref() {
            Monoid::Free(f) => f
                .vars()
                .iter()
                .cloned()
                .zip(self.values.iter().cloned())
                .collect(),
            Monoid::Table(t) => t
                .names()
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != t.zero_index())
                .map(|(i, n)| (n.clone(), self.values[i].clone()))
                .collect(),
            Monoid::Rationals => Vec::new(),
        }
    }

    pub fn value(&self, m: &Monomial) -> Result<SemiringValue> {
        let tag = self
            .values
            .first()
            .map(|v| v.tag())
            .unwrap_or(SemiringTag::Trop);
        match (self.monoid.as_ref(), m) {
            (_, Monomial::Zero) => Ok(SemiringValue::zero(tag)),
            (Monoid::Free(_), Monomial::Exp(e)) if e.len() == self.values.len() => {
                Ok(crate::bendcalc::monomial_value(m, &self.values, tag))
            }
            (Monoid::Table(_), Monomial::Elem(i)) if *i < self.values.len() => {
                Ok(self.values[*i].clone())
            }
            _ => Err(Error::usage(format!(
                "`{m}` is not an element of the point's monoid"
            ))),
        }
    }

    pub fn eval(&self, f: &TropPoly) -> Result<SemiringValue> {
        if !crate::bendcalc::same_monoid(f.monoid(), &self.monoid) {
            return Err(Error::usage(
                "polynomial and point live over different monoids",
            ));
        }
        f.eval_with(|m| self.value(m))
    }

    /// Values of the individual terms of `f` at this point.
    pub fn term_values(&self, f: &TropPoly) -> Result<Vec<SemiringValue>> {
        f.terms()
            .iter()
            .map(|(m, c)| c.mul(&self.value(m)?))
            .collect()
    }
}

impl Serialize for TPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let named = self.named();
        let mut map = s.serialize_map(Some(named.len()))?;
        for (k, v) in &named {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// True iff at every basis polynomial the maximum of the term values is
/// bottom or attained at least twice.
pub fn settheoretic_member(point: &TPoint, basis: &[TropPoly]) -> Result<bool> {
    for f in basis {
        if !max_attained_twice(&point.term_values(f)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `point` lies in `V(f ~ g) = {x : f(x) = g(x)}`.
pub fn eval_relation(f: &TropPoly, g: &TropPoly, point: &TPoint) -> Result<bool> {
    f.compatible(g)?;
    Ok(point.eval(f)? == point.eval(g)?)
}

/// Image of a tropical polynomial under a monoid map.
pub fn push_forward(psi: &MonoidHom, f: &TropPoly, target: &Arc<Monoid>) -> Result<TropPoly> {
    let terms = f
        .terms()
        .iter()
        .map(|(m, c)| Ok((psi.apply(m)?, c.clone())))
        .collect::<Result<Vec<_>>>()?;
    TropPoly::from_terms(target.clone(), f.tag(), terms)
}

/// A source generator pushed into the target presentation, with the verdict
/// of the membership search there.
#[derive(Debug, Clone, Serialize)]
pub struct PushedGenerator {
    pub pair: RelationPair,
    pub verdict: Verdict,
}

/// Maps induced by a monoid map `ψ: B -> B'` between two embeddings of the
/// same `X`.
///
/// Direction: on semirings `ψ` pushes `S[B]` into `S[B']`, so on points it
/// pulls back: a point `q: B' -> S` of the target tropicalization gives the
/// point `q ∘ ψ: B -> S` of the source tropicalization.
#[derive(Debug, Clone)]
pub struct InducedMap {
    psi: MonoidHom,
    source_monoid: Arc<Monoid>,
    pub pushed: Vec<PushedGenerator>,
}

impl InducedMap {
    /// `q ↦ q ∘ ψ`.
    pub fn pull_back(&self, q: &TPoint) -> Result<TPoint> {
        let values = match self.source_monoid.as_ref() {
            Monoid::Free(f) => (0..f.rank())
                .map(|i| q.value(&self.psi.apply(&f.var(i))?))
                .collect::<Result<Vec<_>>>()?,
            Monoid::Table(t) => (0..t.len())
                .map(|i| q.value(&self.psi.apply(&t.monomial(i))?))
                .collect::<Result<Vec<_>>>()?,
            Monoid::Rationals => return Err(Error::usage("cannot pull points back to M(Q)")),
        };
        TPoint::new(self.source_monoid.clone(), values)
    }

    pub fn all_proven(&self) -> bool {
        self.pushed.iter().all(|p| p.verdict.is_proven())
    }
}

/// Checks that `ψ: B -> B'` is compatible with both maps to the same `A`.
pub fn check_commutes(psi: &MonoidHom, source: &Embedding, target: &Embedding) -> Result<()> {
    if !Arc::ptr_eq(&source.algebra, &target.algebra) && *source.algebra != *target.algebra {
        return Err(Error::usage("embeddings are of different algebras"));
    }
    if psi.source() != source.monoid.as_ref() || psi.target() != target.monoid.as_ref() {
        return Err(Error::usage("monoid map does not match the embeddings"));
    }
    let gens: Vec<Monomial> = match source.monoid.as_ref() {
        Monoid::Free(f) => (0..f.rank()).map(|i| f.var(i)).collect(),
        Monoid::Table(t) => (0..t.len()).map(|i| t.monomial(i)).collect(),
        Monoid::Rationals => return Err(Error::usage("monoid maps out of M(Q) are not supported")),
    };
    for g in &gens {
        if target.ev_monomial(&psi.apply(g)?)? != source.ev_monomial(g)? {
            return Err(Error::usage(format!(
                "monoid map does not commute with the maps to the algebra at {}",
                source.monoid.format_monomial(g)
            )));
        }
    }
    Ok(())
}

/// Checks that `ψ` commutes with the maps to `A`, pushes every generator of
/// the source presentation into the target monoid and searches for it in
/// the target congruence.
pub fn induced_map(
    psi: &MonoidHom,
    source: &Embedding,
    source_pres: &TropPresentation,
    target: &Embedding,
    target_pres: &TropPresentation,
    budget: &SearchBudget,
) -> Result<InducedMap> {
    check_commutes(psi, source, target)?;
    let mut pushed = Vec::new();
    for p in source_pres.congruence.generators() {
        let pair = RelationPair::new(
            push_forward(psi, &p.lhs, &target.monoid)?,
            push_forward(psi, &p.rhs, &target.monoid)?,
        )?;
        let verdict = contains(&target_pres.congruence, &pair, budget)?;
        pushed.push(PushedGenerator { pair, verdict });
    }
    Ok(InducedMap {
        psi: psi.clone(),
        source_monoid: source.monoid.clone(),
        pushed,
    })
}

#[cfg(test)]
mod tests {
    use super::super::algebra::PolyQuotient;
    use super::super::poly::CoeffField;
    use super::*;
    use crate::semiring::{int, rat};

    pub(crate) fn quadratic(kind: &str) -> Embedding {
        let a = Arc::new(AffineAlgebra::quotient(
            PolyQuotient::new(CoeffField::Rationals, ["x"], &["x^2 - 2"]).unwrap(),
        ));
        let v2 = Valuation::p_adic(2).unwrap();
        let (vars, images, kernel): (Vec<&str>, Vec<(&str, &str)>, Vec<&str>) = match kind {
            "u" => (vec!["u"], vec![("u", "x")], vec!["u^2 - 2"]),
            "uv" => (
                vec!["u", "v"],
                vec![("u", "x"), ("v", "x + 1")],
                vec!["u^2 - 2", "v - u - 1"],
            ),
            "uw" => (
                vec!["u", "w"],
                vec![("u", "x"), ("w", "2x")],
                vec!["u^2 - 2", "w - 2u"],
            ),
            _ => unreachable!(),
        };
        let m = Arc::new(Monoid::free(vars).unwrap());
        let images = images
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        let kernel: Vec<String> = kernel.into_iter().map(String::from).collect();
        Embedding::from_text(a, v2, m, &images, &kernel).unwrap()
    }

    fn line() -> Embedding {
        let a = Arc::new(AffineAlgebra::quotient(
            PolyQuotient::new(CoeffField::Rationals, ["x", "y"], &["x + y + 1"]).unwrap(),
        ));
        let m = Arc::new(Monoid::free(["X", "Y"]).unwrap());
        let images = [("X", "x"), ("Y", "y")]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        Embedding::from_text(
            a,
            Valuation::trivial(),
            m,
            &images,
            &["X + Y + 1".to_string()],
        )
        .unwrap()
    }

    fn tp(e: &Embedding, s: &str) -> TropPoly {
        TropPoly::parse(e.monoid().clone(), e.tag(), s).unwrap()
    }

    #[test]
    fn trop_of_poly_examples() {
        let e = quadratic("u");
        let t = trop_of_poly(&e.kernel()[0], e.valuation(), e.monoid()).unwrap();
        assert_eq!(t, tp(&e, "u^2 + (-1)"));
        let l = line();
        let t = trop_of_poly(&l.kernel()[0], l.valuation(), l.monoid()).unwrap();
        assert_eq!(t, tp(&l, "X + Y + 0"));
        assert!(trop_of_poly(&KPoly::zero(), l.valuation(), l.monoid())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn kernel_must_vanish() {
        let a = Arc::new(AffineAlgebra::quotient(
            PolyQuotient::new(CoeffField::Rationals, ["x"], &["x^2 - 2"]).unwrap(),
        ));
        let m = Arc::new(Monoid::free(["u"]).unwrap());
        let images = [("u".to_string(), "x".to_string())].into();
        let err = Embedding::from_text(
            a.clone(),
            Valuation::trivial(),
            m.clone(),
            &images,
            &["u^2 - 3".to_string()],
        );
        assert!(err.is_err());
        let missing = Embedding::from_text(a, Valuation::trivial(), m, &BTreeMap::new(), &[]);
        assert!(missing.is_err());
    }

    #[test]
    fn truncated_trop_examples() {
        let e = quadratic("u");
        let basis = trop_ideal_truncated(&e, 2).unwrap();
        assert!(basis.contains(&tp(&e, "u^2 + (-1)")));
        let l = line();
        assert_eq!(
            trop_ideal_truncated(&l, 1).unwrap(),
            vec![tp(&l, "X + Y + 0")]
        );
        assert!(trop_ideal_truncated(&l, 0).unwrap().is_empty());
        // Degree 2 adds the multiples by X and Y and the circuits between them.
        let b2 = trop_ideal_truncated(&l, 2).unwrap();
        assert!(b2.contains(&tp(&l, "X^2 + X*Y + X")));
        assert!(b2.iter().all(|f| f.len() >= 2));
        assert!(matches!(
            trop_ideal_truncated_capped(&l, 4, 10),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn circuits_vanish_and_have_minimal_support() {
        let e = quadratic("uv");
        let circuits = ideal_circuits(&e, 3, DEFAULT_SUBSET_CAP).unwrap();
        assert!(!circuits.is_empty());
        for c in &circuits {
            assert!(e.algebra().is_zero(&e.ev(c).unwrap()));
            for d in &circuits {
                let sc: BTreeSet<_> = c.terms().keys().collect();
                let sd: BTreeSet<_> = d.terms().keys().collect();
                assert!(
                    !(sd.is_subset(&sc) && sd != sc),
                    "support of a circuit strictly contains another"
                );
            }
        }
    }

    #[test]
    fn presentation_of_quadratic_and_line() {
        let e = quadratic("u");
        let p = trop_presentation(&e, 2).unwrap();
        let f = tp(&e, "u^2 + (-1)");
        let gens = p.congruence.generators();
        assert!(gens.iter().any(|g| g.lhs == f && g.rhs == tp(&e, "u^2")));
        assert!(gens.iter().any(|g| g.lhs == f && g.rhs == tp(&e, "(-1)")));
        let l = line();
        assert_eq!(
            trop_presentation(&l, 1)
                .unwrap()
                .congruence
                .generators()
                .len(),
            3
        );
    }

    #[test]
    fn settheoretic_member_on_the_line() {
        let l = line();
        let basis = vec![tp(&l, "X + Y + 0")];
        let pt = |x: i64, y: i64| {
            TPoint::new(
                l.monoid().clone(),
                vec![SemiringValue::trop_int(x), SemiringValue::trop_int(y)],
            )
            .unwrap()
        };
        assert!(settheoretic_member(&pt(0, 0), &basis).unwrap());
        assert!(!settheoretic_member(&pt(1, 0), &basis).unwrap());
        assert!(settheoretic_member(&pt(-3, 0), &basis).unwrap());
    }

    #[test]
    fn eval_relation_examples() {
        let m = Arc::new(Monoid::free(["x"]).unwrap());
        let t = SemiringTag::Trop;
        let a = rat(3, 2);
        let f = TropPoly::parse(
            m.clone(),
            t,
            &format!("x + ({})", crate::semiring::format_rational(&a)),
        )
        .unwrap();
        let g = TropPoly::parse(m.clone(), t, "x").unwrap();
        let at = |v| TPoint::new(m.clone(), vec![SemiringValue::trop(v)]).unwrap();
        assert!(eval_relation(&f, &g, &at(&a + int(1))).unwrap());
        assert!(!eval_relation(&f, &g, &at(&a - int(1))).unwrap());
        let b = int(2);
        let f = TropPoly::parse(m.clone(), t, "x + 2").unwrap();
        let g = TropPoly::parse(m.clone(), t, "2").unwrap();
        assert!(eval_relation(&f, &g, &at(b)).unwrap());
    }

    #[test]
    fn induced_map_forgets_a_coordinate() {
        let e1 = quadratic("u");
        let e2 = quadratic("uv");
        let psi = MonoidHom::new(
            e1.monoid().as_ref().clone(),
            e2.monoid().as_ref().clone(),
            vec![Monomial::Exp(vec![1, 0])],
        )
        .unwrap();
        let p1 = trop_presentation(&e1, 2).unwrap();
        let p2 = trop_presentation(&e2, 2).unwrap();
        let map = induced_map(&psi, &e1, &p1, &e2, &p2, &SearchBudget::default()).unwrap();
        assert!(map.all_proven());
        let q = TPoint::new(
            e2.monoid().clone(),
            vec![SemiringValue::trop(rat(-1, 2)), SemiringValue::trop_int(0)],
        )
        .unwrap();
        assert_eq!(
            map.pull_back(&q).unwrap().values(),
            &[SemiringValue::trop(rat(-1, 2))]
        );
        // u -> v does not commute with the maps to A.
        let bad = MonoidHom::new(
            e1.monoid().as_ref().clone(),
            e2.monoid().as_ref().clone(),
            vec![Monomial::Exp(vec![0, 1])],
        )
        .unwrap();
        assert!(induced_map(&bad, &e1, &p1, &e2, &p2, &SearchBudget::default()).is_err());
        // The identity induces the identity.
        let id = MonoidHom::identity(e2.monoid()).unwrap();
        let map = induced_map(&id, &e2, &p2, &e2, &p2, &SearchBudget::default()).unwrap();
        assert_eq!(map.pull_back(&q).unwrap(), q);
        assert!(map.all_proven());
    }
}
