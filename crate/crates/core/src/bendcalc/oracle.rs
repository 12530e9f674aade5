//! Brute-force congruence closure on a finite universe of polynomials.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::{Congruence, TropPoly};
use crate::error::{Error, Result};
use crate::f1algebra::Monomial;
use crate::semiring::SemiringValue;

pub const DEFAULT_UNIVERSE_CAP: usize = 4096;

/// Classes of a finite universe, each sorted, ordered by first member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub classes: Vec<Vec<TropPoly>>,
}

impl Partition {
    pub fn same_class(&self, a: &TropPoly, b: &TropPoly) -> Option<bool> {
        let ca = self.classes.iter().position(|c| c.contains(a))?;
        let cb = self.classes.iter().position(|c| c.contains(b))?;
        Some(ca == cb)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.0[hi] = lo;
        true
    }
}

/// Finest partition of `universe` closed under every generator instance
/// `c·m·a + h ~ c·m·b + h` whose two sides both lie in the universe, with
/// `h` ranging over the universe, `m` over monomials occurring in it, and
/// `c` over quotients of universe coefficients by generator coefficients.
pub fn oracle_closure(c: &Congruence, universe: &[TropPoly], cap: usize) -> Result<Partition> {
    if universe.len() > cap {
        return Err(Error::resource(format!(
            "universe has {} polynomials, cap is {cap}",
            universe.len()
        )));
    }
    let mut elems: Vec<TropPoly> = universe.to_vec();
    elems.sort();
    elems.dedup();
    for p in &elems {
        if p.tag() != c.tag() || !super::same_monoid(p.monoid(), c.monoid()) {
            return Err(Error::usage(
                "universe polynomial over a different monoid or semiring",
            ));
        }
    }
    let index: HashMap<&TropPoly, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();

    let monoid = c.monoid();
    let mut multipliers: BTreeSet<Monomial> =
        elems.iter().flat_map(|p| p.support().cloned()).collect();
    multipliers.insert(monoid.one());
    let mut scalars: BTreeSet<SemiringValue> = BTreeSet::new();
    scalars.insert(SemiringValue::one(c.tag()));
    for p in &elems {
        for u in p.terms().values() {
            for g in c.generators() {
                for a in g.lhs.terms().values().chain(g.rhs.terms().values()) {
                    if let Some(q) = u.div(a)? {
                        scalars.insert(q);
                    }
                }
            }
        }
    }

    let mut uf = UnionFind((0..elems.len()).collect());
    for g in c.generators() {
        for m in &multipliers {
            for s in &scalars {
                let a = g.lhs.scale(s, m)?;
                let b = g.rhs.scale(s, m)?;
                for h in &elems {
                    let (Some(&i), Some(&j)) = (index.get(&a.add(h)?), index.get(&b.add(h)?))
                    else {
                        continue;
                    };
                    uf.union(i, j);
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<TropPoly>> = HashMap::new();
    for (i, p) in elems.iter().enumerate() {
        groups.entry(uf.find(i)).or_default().push(p.clone());
    }
    let mut classes: Vec<Vec<TropPoly>> = groups.into_values().collect();
    classes.sort();
    Ok(Partition { classes })
}
