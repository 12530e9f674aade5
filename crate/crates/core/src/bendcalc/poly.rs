use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::f1algebra::{Monoid, Monomial};
use crate::semiring::{SemiringTag, SemiringValue};

/// Element of `S[M]`: a finitely supported map from monoid elements to
/// semiring values.
///
/// Canonical form: no bottom coefficients, no term on the absorbing element,
/// support ordered by the monomial order (graded lexicographic for free
/// monoids). Two polynomials are equal iff their canonical forms are.
#[derive(Clone)]
pub struct TropPoly {
    monoid: Arc<Monoid>,
    tag: SemiringTag,
    terms: BTreeMap<Monomial, SemiringValue>,
}

impl PartialEq for TropPoly {
    fn eq(&self, other: &Self) -> bool {
        self.tag == other.tag
            && self.terms == other.terms
            && same_monoid(&self.monoid, &other.monoid)
    }
}

impl Eq for TropPoly {}

impl std::hash::Hash for TropPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.tag.hash(state);
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl PartialOrd for TropPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order on canonical forms, used only for deterministic tie-breaks.
impl Ord for TropPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }
}

impl fmt::Debug for TropPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TropPoly({self})")
    }
}

pub(crate) fn same_monoid(a: &Arc<Monoid>, b: &Arc<Monoid>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl TropPoly {
    pub fn zero(monoid: Arc<Monoid>, tag: SemiringTag) -> Self {
        TropPoly {
            monoid,
            tag,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from terms, merging repeated monomials by
    /// semiring addition and dropping bottom coefficients.
    pub fn from_terms(
        monoid: Arc<Monoid>,
        tag: SemiringTag,
        terms: impl IntoIterator<Item = (Monomial, SemiringValue)>,
    ) -> Result<Self> {
        let mut p = TropPoly::zero(monoid, tag);
        for (m, c) in terms {
            if !p.monoid.contains(&m) {
                return Err(Error::usage(format!(
                    "`{m}` is not an element of the polynomial's monoid"
                )));
            }
            if c.tag() != tag {
                return Err(Error::usage(format!(
                    "coefficient {c} is not in the {tag} semiring"
                )));
            }
            p.insert_max(m, c);
        }
        Ok(p)
    }

    /// Single term `c·m`.
    pub fn term(monoid: Arc<Monoid>, m: Monomial, c: SemiringValue) -> Result<Self> {
        let tag = c.tag();
        Self::from_terms(monoid, tag, [(m, c)])
    }

    /// The monomial `m` with unit coefficient.
    pub fn monomial(monoid: Arc<Monoid>, tag: SemiringTag, m: Monomial) -> Result<Self> {
        Self::from_terms(monoid, tag, [(m, SemiringValue::one(tag))])
    }

    /// Trusted insert: merges by max, skips bottom and the absorbing element.
    pub(crate) fn insert_max(&mut self, m: Monomial, c: SemiringValue) {
        if c.is_bottom() || m == Monomial::Zero {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                if c > *old {
                    *old = c;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn monoid(&self) -> &Arc<Monoid> {
        &self.monoid
    }

    pub fn tag(&self) -> SemiringTag {
        self.tag
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, SemiringValue> {
        &self.terms
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `m`, bottom when absent.
    pub fn coeff(&self, m: &Monomial) -> SemiringValue {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| SemiringValue::zero(self.tag))
    }

    pub fn compatible(&self, other: &Self) -> Result<()> {
        if self.tag != other.tag {
            return Err(Error::usage(format!(
                "semiring mismatch: {} vs {}",
                self.tag, other.tag
            )));
        }
        if !same_monoid(&self.monoid, &other.monoid) {
            return Err(Error::usage("polynomials live over different monoids"));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_max(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// `c·m·self`.
    pub fn scale(&self, c: &SemiringValue, m: &Monomial) -> Result<Self> {
        if c.tag() != self.tag {
            return Err(Error::usage("scalar from a different semiring"));
        }
        if !self.monoid.contains(m) {
            return Err(Error::usage(format!(
                "`{m}` is not an element of the polynomial's monoid"
            )));
        }
        Ok(self.scale_unchecked(c, m))
    }

    pub(crate) fn scale_unchecked(&self, c: &SemiringValue, m: &Monomial) -> Self {
        let mut out = TropPoly::zero(self.monoid.clone(), self.tag);
        if c.is_bottom() {
            return out;
        }
        for (mu, a) in &self.terms {
            let prod = a.mul(c).expect("tags agree");
            out.insert_max(self.monoid.mul_unchecked(m, mu), prod);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = TropPoly::zero(self.monoid.clone(), self.tag);
        for (m, c) in &other.terms {
            for (mu, a) in &self.terms {
                out.insert_max(self.monoid.mul_unchecked(m, mu), a.mul(c)?);
            }
        }
        Ok(out)
    }

    /// Canonical order: `self <= other` iff `self + other = other`,
    /// i.e. coefficient-wise domination.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.compatible(other)?;
        Ok(self.leq_unchecked(other))
    }

    pub(crate) fn leq_unchecked(&self, other: &Self) -> bool {
        self.terms
            .iter()
            .all(|(m, c)| other.terms.get(m).is_some_and(|d| c <= d))
    }

    /// `self` with the term on `m` deleted.
    pub fn without(&self, m: &Monomial) -> Self {
        let mut out = self.clone();
        out.terms.remove(m);
        out
    }

    /// Semiring sum of `coeff · value(monomial)` over the support.
    pub fn eval_with(
        &self,
        mut value: impl FnMut(&Monomial) -> Result<SemiringValue>,
    ) -> Result<SemiringValue> {
        let mut acc = SemiringValue::zero(self.tag);
        for (m, c) in &self.terms {
            let v = value(m)?;
            acc = acc.add(&c.mul(&v)?)?;
        }
        Ok(acc)
    }

    /// Parses text such as `(-1) + 2*X^2*Y`. Terms are separated by `+`,
    /// factors by `*`; a factor that starts with a digit, `-`, `(` or `[` is
    /// a coefficient, anything else is a monoid factor.
    pub fn parse(monoid: Arc<Monoid>, tag: SemiringTag, text: &str) -> Result<Self> {
        let mut p = TropPoly::zero(monoid.clone(), tag);
        let t = text.trim();
        if t.is_empty() {
            return Err(Error::parse("empty polynomial"));
        }
        for term in split_top(t, '+')? {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::parse(format!("empty term in `{text}`")));
            }
            let mut coeff = SemiringValue::one(tag);
            let mut mono = monoid.one();
            for factor in split_top(term, '*')? {
                let factor = factor.trim();
                let first = factor
                    .chars()
                    .next()
                    .ok_or_else(|| Error::parse(format!("empty factor in `{term}`")))?;
                if first.is_ascii_digit() || matches!(first, '-' | '(' | '[') {
                    coeff = coeff.mul(&SemiringValue::parse(tag, factor)?)?;
                } else {
                    let f = monoid.parse_factor(factor)?;
                    mono = monoid.mul_unchecked(&mono, &f);
                }
            }
            p.insert_max(mono, coeff);
        }
        Ok(p)
    }
}

/// Splits on `sep` outside parentheses and brackets.
fn split_top(text: &str, sep: char) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::parse(format!("unbalanced brackets in `{text}`")));
                }
            }
            c if c == sep && depth == 0 => {
                parts.push(&text[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::parse(format!("unbalanced brackets in `{text}`")));
    }
    parts.push(&text[start..]);
    Ok(parts)
}

impl fmt::Display for TropPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("-inf");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mono = self.monoid.format_monomial(m);
            let coeff = c.to_string();
            let coeff = if coeff.starts_with('-') {
                format!("({coeff})")
            } else {
                coeff
            };
            if mono.is_empty() {
                f.write_str(&coeff)?;
            } else if c.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{coeff}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl serde::Serialize for TropPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
