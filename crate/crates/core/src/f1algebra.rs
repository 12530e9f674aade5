//! Monoids-with-zero (F1-algebras).
//!
//! A [`Monoid`] is one of:
//!
//! * a free monoid on named variables, elements are exponent vectors;
//! * a finite monoid given by a multiplication table, e.g. `M(A)` of a
//!   finite ring;
//! * the multiplicative monoid `M(Q)` of the rationals, used for the
//!   universal embedding of `Q` itself.
//!
//! Every monoid has the absorbing element [`Monomial::Zero`]. In scalar
//! extensions `B ⊗ S` the zero monomial is identified with the additive unit,
//! so polynomial code drops terms on it.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::semiring::{format_rational, parse_rational, Rat};
use crate::valuation::ring::FiniteRing;

/// An element of a monoid-with-zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Monomial {
    Zero,
    /// Exponent vector in a free monoid.
    Exp(Vec<u64>),
    /// Index of a nonzero element in a table monoid.
    Elem(usize),
    /// Nonzero rational in `M(Q)`.
    Rat(Rat),
}

impl Monomial {
    pub fn total_degree(&self) -> u64 {
        match self {
            Monomial::Exp(e) => e.iter().sum(),
            _ => 0,
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Monomial::Zero => 0,
            Monomial::Exp(_) => 1,
            Monomial::Elem(_) => 2,
            Monomial::Rat(_) => 3,
        }
    }
}

/// Graded lexicographic order on exponent vectors, index order on table
/// elements, numeric order on rationals.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Monomial::Exp(a), Monomial::Exp(b)) => {
                let da: u64 = a.iter().sum();
                let db: u64 = b.iter().sum();
                da.cmp(&db).then_with(|| a.cmp(b))
            }
            (Monomial::Elem(a), Monomial::Elem(b)) => a.cmp(b),
            (Monomial::Rat(a), Monomial::Rat(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeMonoid {
    vars: Vec<String>,
}

impl FreeMonoid {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || !v.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::usage(format!("invalid variable name `{v}`")));
            }
            if !v.chars().next().unwrap().is_alphabetic() {
                return Err(Error::usage(format!(
                    "variable name must start with a letter: `{v}`"
                )));
            }
            if vars[..i].contains(v) {
                return Err(Error::usage(format!("duplicate variable `{v}`")));
            }
        }
        Ok(FreeMonoid { vars })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn rank(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// The generator `x_i` as an exponent vector.
    pub fn var(&self, i: usize) -> Monomial {
        let mut e = vec![0; self.vars.len()];
        e[i] = 1;
        Monomial::Exp(e)
    }
}

/// A finite commutative monoid-with-zero given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableMonoid {
    elements: Vec<String>,
    zero: usize,
    one: usize,
    table: Vec<Vec<usize>>,
}

impl TableMonoid {
    /// Validates identity, absorbing zero, commutativity and associativity.
    pub fn new(
        elements: Vec<String>,
        zero: usize,
        one: usize,
        table: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let m = elements.len();
        if m == 0 || zero >= m || one >= m {
            return Err(Error::usage(
                "table monoid needs valid zero and one indices",
            ));
        }
        if table.len() != m
            || table
                .iter()
                .any(|row| row.len() != m || row.iter().any(|&x| x >= m))
        {
            return Err(Error::usage(format!(
                "multiplication table must be {m}x{m} with entries in range"
            )));
        }
        for a in 0..m {
            if table[one][a] != a {
                return Err(Error::usage(format!(
                    "`{}` is not an identity: fails on `{}`",
                    elements[one], elements[a]
                )));
            }
            if table[zero][a] != zero {
                return Err(Error::usage(format!(
                    "`{}` is not absorbing: fails on `{}`",
                    elements[zero], elements[a]
                )));
            }
            for b in 0..m {
                if table[a][b] != table[b][a] {
                    return Err(Error::usage(format!(
                        "table not commutative at ({}, {})",
                        elements[a], elements[b]
                    )));
                }
                for c in 0..m {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::usage(format!(
                            "table not associative at ({}, {}, {})",
                            elements[a], elements[b], elements[c]
                        )));
                    }
                }
            }
        }
        Ok(TableMonoid {
            elements,
            zero,
            one,
            table,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.elements
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    pub fn one_index(&self) -> usize {
        self.one
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// Element `i` as a monomial, mapping the zero index to [`Monomial::Zero`].
    pub fn monomial(&self, i: usize) -> Monomial {
        if i == self.zero {
            Monomial::Zero
        } else {
            Monomial::Elem(i)
        }
    }

    pub fn index(&self, m: &Monomial) -> Option<usize> {
        match m {
            Monomial::Zero => Some(self.zero),
            Monomial::Elem(i) if *i < self.len() && *i != self.zero => Some(*i),
            _ => None,
        }
    }

    pub fn nonzero_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| i != self.zero)
    }
}

/// Integrality: nonzero elements are closed under multiplication and
/// cancellative. For a finite monoid cancellativity means the nonzero part
/// is a group, so the group completion is never built.
pub fn is_integral(m: &TableMonoid) -> bool {
    let nz: Vec<usize> = m.nonzero_indices().collect();
    for &a in &nz {
        for &b in &nz {
            if m.mul_index(a, b) == m.zero {
                return false;
            }
            for &c in &nz {
                if b != c && m.mul_index(a, b) == m.mul_index(a, c) {
                    return false;
                }
            }
        }
    }
    true
}

/// The multiplicative monoid `M(A)` of a finite ring.
pub fn multiplicative_monoid(ring: &FiniteRing) -> TableMonoid {
    let n = ring.len();
    let table = (0..n)
        .map(|a| (0..n).map(|b| ring.mul(a, b)).collect())
        .collect();
    TableMonoid::new(ring.names().to_vec(), ring.zero(), ring.one(), table)
        .expect("ring multiplication is a commutative monoid with absorbing zero")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Monoid {
    Free(FreeMonoid),
    Table(TableMonoid),
    Rationals,
}

impl Monoid {
    pub fn free<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Result<Self> {
        Ok(Monoid::Free(FreeMonoid::new(vars)?))
    }

    pub fn one(&self) -> Monomial {
        match self {
            Monoid::Free(f) => Monomial::Exp(vec![0; f.rank()]),
            Monoid::Table(t) => t.monomial(t.one),
            Monoid::Rationals => Monomial::Rat(Rat::one()),
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        match (self, m) {
            (_, Monomial::Zero) => true,
            (Monoid::Free(f), Monomial::Exp(e)) => e.len() == f.rank(),
            (Monoid::Table(t), Monomial::Elem(i)) => *i < t.len() && *i != t.zero,
            (Monoid::Rationals, Monomial::Rat(r)) => !r.is_zero(),
            _ => false,
        }
    }

    fn check(&self, m: &Monomial) -> Result<()> {
        if self.contains(m) {
            Ok(())
        } else {
            Err(Error::usage(format!(
                "`{m:?}` is not an element of this monoid"
            )))
        }
    }

    /// Product of two elements; zero is absorbing.
    pub fn mul(&self, a: &Monomial, b: &Monomial) -> Result<Monomial> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &Monomial, b: &Monomial) -> Monomial {
        match (self, a, b) {
            (_, Monomial::Zero, _) | (_, _, Monomial::Zero) => Monomial::Zero,
            (Monoid::Free(_), Monomial::Exp(x), Monomial::Exp(y)) => {
                Monomial::Exp(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            (Monoid::Table(t), Monomial::Elem(x), Monomial::Elem(y)) => {
                t.monomial(t.mul_index(*x, *y))
            }
            (Monoid::Rationals, Monomial::Rat(x), Monomial::Rat(y)) => Monomial::Rat(x * y),
            _ => unreachable!("membership checked by caller"),
        }
    }

    pub fn pow(&self, a: &Monomial, k: u64) -> Result<Monomial> {
        self.check(a)?;
        Ok(match (self, a) {
            (Monoid::Free(_), Monomial::Exp(e)) => Monomial::Exp(e.iter().map(|x| x * k).collect()),
            _ => {
                let mut acc = self.one();
                let mut base = a.clone();
                let mut k = k;
                while k > 0 {
                    if k & 1 == 1 {
                        acc = self.mul_unchecked(&acc, &base);
                    }
                    base = self.mul_unchecked(&base, &base);
                    k >>= 1;
                }
                acc
            }
        })
    }

    /// Candidate monomial multipliers of degree at most `max_degree`, used by
    /// the congruence search.
    pub fn multipliers(&self, max_degree: u32) -> Vec<Monomial> {
        match self {
            Monoid::Free(f) => exponent_vectors(f.rank(), max_degree as u64)
                .into_iter()
                .map(Monomial::Exp)
                .collect(),
            Monoid::Table(t) => {
                if max_degree == 0 {
                    vec![self.one()]
                } else {
                    t.nonzero_indices().map(Monomial::Elem).collect()
                }
            }
            Monoid::Rationals => {
                let mut v = vec![self.one()];
                if max_degree > 0 {
                    v.push(Monomial::Rat(-Rat::one()));
                }
                v
            }
        }
    }

    /// Renders a monomial; the identity renders as the empty string.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        match (self, m) {
            (_, Monomial::Zero) => "0*".to_string(),
            (Monoid::Free(f), Monomial::Exp(e)) => {
                let parts: Vec<String> = f
                    .vars
                    .iter()
                    .zip(e)
                    .filter(|(_, &k)| k > 0)
                    .map(|(v, &k)| {
                        if k == 1 {
                            v.clone()
                        } else {
                            format!("{v}^{k}")
                        }
                    })
                    .collect();
                parts.join("*")
            }
            (Monoid::Table(t), Monomial::Elem(i)) => {
                if *i == t.one {
                    String::new()
                } else {
                    format!("x[{}]", t.elements[*i])
                }
            }
            (Monoid::Rationals, Monomial::Rat(r)) => {
                if r.is_one() {
                    String::new()
                } else {
                    format!("x[{}]", format_rational(r))
                }
            }
            _ => format!("{m:?}"),
        }
    }

    /// Parses a single monomial factor such as `X`, `X^2`, `x[w]`, `x[3/2]`.
    pub fn parse_factor(&self, text: &str) -> Result<Monomial> {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix("x[").and_then(|s| s.strip_suffix(']')) {
            return match self {
                Monoid::Table(tm) => tm
                    .index_of(inner.trim())
                    .map(|i| tm.monomial(i))
                    .ok_or_else(|| Error::parse(format!("unknown monoid element `{inner}`"))),
                Monoid::Rationals => {
                    let r = parse_rational(inner)?;
                    Ok(if r.is_zero() {
                        Monomial::Zero
                    } else {
                        Monomial::Rat(r)
                    })
                }
                Monoid::Free(_) => Err(Error::parse(format!(
                    "element syntax `{t}` needs a table monoid"
                ))),
            };
        }
        match self {
            Monoid::Free(f) => {
                let (name, exp) = match t.split_once('^') {
                    Some((n, e)) => {
                        let e: u64 = e
                            .trim()
                            .parse()
                            .map_err(|_| Error::parse(format!("bad exponent in `{t}`")))?;
                        (n.trim(), e)
                    }
                    None => (t, 1),
                };
                let i = f
                    .var_index(name)
                    .ok_or_else(|| Error::parse(format!("unknown variable `{name}`")))?;
                let mut e = vec![0; f.rank()];
                e[i] = exp;
                Ok(Monomial::Exp(e))
            }
            _ => Err(Error::parse(format!("cannot parse monomial `{t}`"))),
        }
    }
}

/// All exponent vectors in `N^n` of total degree at most `d`, ascending.
pub fn exponent_vectors(n: usize, d: u64) -> Vec<Vec<u64>> {
    fn rec(n: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out.sort_by_key(|a| Monomial::Exp(a.clone()));
    out
}

/// A homomorphism of monoids-with-zero.
///
/// For a free source the images of the generators are stored; for a table
/// source the image of every element is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidHom {
    source: Monoid,
    target: Monoid,
    images: Vec<Monomial>,
}

impl MonoidHom {
    pub fn new(source: Monoid, target: Monoid, images: Vec<Monomial>) -> Result<Self> {
        for im in &images {
            target.check(im)?;
        }
        match &source {
            Monoid::Free(f) => {
                if images.len() != f.rank() {
                    return Err(Error::usage(format!(
                        "free monoid hom needs {} generator images, got {}",
                        f.rank(),
                        images.len()
                    )));
                }
            }
            Monoid::Table(t) => {
                if images.len() != t.len() {
                    return Err(Error::usage("table monoid hom needs one image per element"));
                }
                if images[t.zero] != Monomial::Zero {
                    return Err(Error::usage("homomorphism must send zero to zero"));
                }
                if images[t.one] != target.one() {
                    return Err(Error::usage("homomorphism must send one to one"));
                }
                for a in 0..t.len() {
                    for b in 0..t.len() {
                        let lhs = &images[t.mul_index(a, b)];
                        let rhs = target.mul_unchecked(&images[a], &images[b]);
                        if *lhs != rhs {
                            return Err(Error::usage(format!(
                                "homomorphism does not preserve the product {} * {}",
                                t.elements[a], t.elements[b]
                            )));
                        }
                    }
                }
            }
            Monoid::Rationals => {
                return Err(Error::usage("homomorphisms out of M(Q) are not supported"))
            }
        }
        Ok(MonoidHom {
            source,
            target,
            images,
        })
    }

    /// Builds a hom from a free monoid by naming the target of each generator.
    pub fn from_assignment(
        source: &Monoid,
        target: &Monoid,
        assignment: &BTreeMap<String, Monomial>,
    ) -> Result<Self> {
        let Monoid::Free(f) = source else {
            return Err(Error::usage(
                "named assignments require a free source monoid",
            ));
        };
        let images = f
            .vars
            .iter()
            .map(|v| {
                assignment
                    .get(v)
                    .cloned()
                    .ok_or_else(|| Error::usage(format!("no image for generator `{v}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source.clone(), target.clone(), images)
    }

    pub fn identity(m: &Monoid) -> Result<Self> {
        let images = match m {
            Monoid::Free(f) => (0..f.rank()).map(|i| f.var(i)).collect(),
            Monoid::Table(t) => (0..t.len()).map(|i| t.monomial(i)).collect(),
            Monoid::Rationals => {
                return Err(Error::usage("homomorphisms out of M(Q) are not supported"))
            }
        };
        Self::new(m.clone(), m.clone(), images)
    }

    pub fn source(&self) -> &Monoid {
        &self.source
    }

    pub fn target(&self) -> &Monoid {
        &self.target
    }

    pub fn images(&self) -> &[Monomial] {
        &self.images
    }

    pub fn apply(&self, m: &Monomial) -> Result<Monomial> {
        self.source.check(m)?;
        match (&self.source, m) {
            (_, Monomial::Zero) => Ok(Monomial::Zero),
            (Monoid::Free(_), Monomial::Exp(e)) => {
                let mut acc = self.target.one();
                for (im, &k) in self.images.iter().zip(e) {
                    if k > 0 {
                        acc = self.target.mul_unchecked(&acc, &self.target.pow(im, k)?);
                    }
                }
                Ok(acc)
            }
            (Monoid::Table(_), Monomial::Elem(i)) => Ok(self.images[*i].clone()),
            _ => unreachable!("checked membership"),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monomial::Zero => f.write_str("0"),
            Monomial::Exp(e) => write!(f, "{e:?}"),
            Monomial::Elem(i) => write!(f, "#{i}"),
            Monomial::Rat(r) => f.write_str(&format_rational(r)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::ring::FiniteRing;

    #[test]
    fn free_monoid_product() {
        let m = Monoid::free(["x", "y"]).unwrap();
        let p = m
            .mul(&Monomial::Exp(vec![1, 0]), &Monomial::Exp(vec![0, 2]))
            .unwrap();
        assert_eq!(p, Monomial::Exp(vec![1, 2]));
        assert_eq!(
            m.mul(&Monomial::Zero, &Monomial::Exp(vec![3, 1])).unwrap(),
            Monomial::Zero
        );
        assert!(m
            .mul(&Monomial::Exp(vec![1]), &Monomial::Exp(vec![0, 2]))
            .is_err());
    }

    #[test]
    fn f4_units_form_cyclic_group() {
        let f4 = FiniteRing::gf(2, &[1, 1, 1]).unwrap();
        let m = Monoid::Table(multiplicative_monoid(&f4));
        let Monoid::Table(t) = &m else { unreachable!() };
        let w = t.index_of("t").unwrap();
        let w2 = t.index_of("t+1").unwrap();
        let one = t.monomial(t.one_index());
        assert_eq!(m.mul(&Monomial::Elem(w), &Monomial::Elem(w2)).unwrap(), one);
        assert_eq!(
            m.mul(&Monomial::Zero, &Monomial::Elem(w)).unwrap(),
            Monomial::Zero
        );
        assert!(m.mul(&Monomial::Elem(17), &Monomial::Elem(w)).is_err());
    }

    #[test]
    fn integrality_examples() {
        let f4 = FiniteRing::gf(2, &[1, 1, 1]).unwrap();
        assert!(is_integral(&multiplicative_monoid(&f4)));
        assert!(!is_integral(&multiplicative_monoid(
            &FiniteRing::zmod(6).unwrap()
        )));
        // Z/4: brute-force scan finds 2*2 = 0.
        let z4 = FiniteRing::zmod(4).unwrap();
        let scan = (1..4).any(|a| (1..4).any(|b| z4.mul(a, b) == z4.zero()));
        assert!(scan);
        assert!(!is_integral(&multiplicative_monoid(&z4)));
    }

    #[test]
    fn multiplicative_monoid_shapes() {
        let f2 = multiplicative_monoid(&FiniteRing::zmod(2).unwrap());
        assert_eq!(f2.len(), 2);
        let f4 = multiplicative_monoid(&FiniteRing::gf(2, &[1, 1, 1]).unwrap());
        // Nonzero part is cyclic of order 3: some element has order exactly 3.
        let one = f4.one_index();
        let gen = f4.nonzero_indices().find(|&a| a != one).unwrap();
        let sq = f4.mul_index(gen, gen);
        assert_ne!(sq, one);
        assert_eq!(f4.mul_index(sq, gen), one);
        let z6 = multiplicative_monoid(&FiniteRing::zmod(6).unwrap());
        assert_eq!(z6.mul_index(2, 3), z6.zero_index());
    }

    #[test]
    fn table_monoid_rejects_bad_tables() {
        let names = vec!["0".to_string(), "1".to_string(), "a".to_string()];
        // non-commutative entry
        let bad = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 1, 2]];
        assert!(TableMonoid::new(names.clone(), 0, 1, bad).is_err());
        let ok = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]];
        assert!(TableMonoid::new(names, 0, 1, ok).is_ok());
    }

    #[test]
    fn hom_rejects_non_multiplicative_assignment() {
        let f4 = Monoid::Table(multiplicative_monoid(
            &FiniteRing::gf(2, &[1, 1, 1]).unwrap(),
        ));
        let Monoid::Table(t) = &f4 else {
            unreachable!()
        };
        let w = t.index_of("t").unwrap();
        let w2 = t.index_of("t+1").unwrap();
        let one = t.one_index();
        // Swapping the two generators of C3 is the Frobenius: a valid hom.
        let mut imgs: Vec<Monomial> = (0..t.len()).map(|i| t.monomial(i)).collect();
        imgs.swap(w, w2);
        assert!(MonoidHom::new(f4.clone(), f4.clone(), imgs).is_ok());
        // Sending w to w but w^2 to 1 breaks w * w = w^2.
        let mut bad: Vec<Monomial> = (0..t.len()).map(|i| t.monomial(i)).collect();
        bad[w2] = t.monomial(one);
        assert!(MonoidHom::new(f4.clone(), f4.clone(), bad).is_err());
        // One must go to one, zero to zero.
        let mut bad_one: Vec<Monomial> = (0..t.len()).map(|i| t.monomial(i)).collect();
        bad_one[one] = t.monomial(w);
        assert!(MonoidHom::new(f4.clone(), f4.clone(), bad_one).is_err());
        let mut bad_zero: Vec<Monomial> = (0..t.len()).map(|i| t.monomial(i)).collect();
        bad_zero[t.zero_index()] = t.monomial(one);
        assert!(MonoidHom::new(f4.clone(), f4, bad_zero).is_err());
    }

    #[test]
    fn free_hom_applies_to_exponent_vectors() {
        let src = Monoid::free(["u"]).unwrap();
        let dst = Monoid::free(["u", "v"]).unwrap();
        let h = MonoidHom::new(src, dst, vec![Monomial::Exp(vec![1, 1])]).unwrap();
        assert_eq!(
            h.apply(&Monomial::Exp(vec![3])).unwrap(),
            Monomial::Exp(vec![3, 3])
        );
        assert_eq!(h.apply(&Monomial::Zero).unwrap(), Monomial::Zero);
    }

    #[test]
    fn grlex_ordering() {
        let mut ms = vec![
            Monomial::Exp(vec![0, 2]),
            Monomial::Exp(vec![1, 0]),
            Monomial::Exp(vec![0, 0]),
            Monomial::Exp(vec![2, 0]),
        ];
        ms.sort();
        assert_eq!(
            ms,
            vec![
                Monomial::Exp(vec![0, 0]),
                Monomial::Exp(vec![1, 0]),
                Monomial::Exp(vec![0, 2]),
                Monomial::Exp(vec![2, 0])
            ]
        );
        assert_eq!(exponent_vectors(2, 2).len(), 6);
    }
}
