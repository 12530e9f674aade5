//! Tropical polynomials, bend relations and congruences on `S[M]`.

mod oracle;
mod poly;
mod search;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::f1algebra::{Monoid, Monomial};
use crate::semiring::{SemiringTag, SemiringValue};

pub use oracle::{oracle_closure, Partition, DEFAULT_UNIVERSE_CAP};
pub(crate) use poly::same_monoid;
pub use poly::TropPoly;
pub use search::{contains, contains_within, replay, Derivation, SearchBudget, Step, Verdict};

/// A pair `lhs ~ rhs` over a common monoid and semiring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RelationPair {
    pub lhs: TropPoly,
    pub rhs: TropPoly,
}

impl RelationPair {
    pub fn new(lhs: TropPoly, rhs: TropPoly) -> Result<Self> {
        lhs.compatible(&rhs)?;
        Ok(RelationPair { lhs, rhs })
    }

    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Congruence on `S[M]` generated by a finite list of pairs.
#[derive(Debug, Clone)]
pub struct Congruence {
    monoid: Arc<Monoid>,
    tag: SemiringTag,
    generators: Vec<RelationPair>,
    pub name: Option<String>,
}

impl Congruence {
    pub fn new(
        monoid: Arc<Monoid>,
        tag: SemiringTag,
        generators: Vec<RelationPair>,
    ) -> Result<Self> {
        for g in &generators {
            if g.lhs.tag() != tag || !same_monoid(g.lhs.monoid(), &monoid) {
                return Err(Error::usage(
                    "congruence generator over a different monoid or semiring",
                ));
            }
        }
        Ok(Congruence {
            monoid,
            tag,
            generators,
            name: None,
        })
    }

    /// Congruence generated by the bend relations of every polynomial.
    pub fn from_bends(monoid: Arc<Monoid>, tag: SemiringTag, polys: &[TropPoly]) -> Result<Self> {
        let gens = polys.iter().flat_map(bend).collect();
        Self::new(monoid, tag, gens)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn monoid(&self) -> &Arc<Monoid> {
        &self.monoid
    }

    pub fn tag(&self) -> SemiringTag {
        self.tag
    }

    pub fn generators(&self) -> &[RelationPair] {
        &self.generators
    }

    pub(crate) fn check_pair(&self, q: &RelationPair) -> Result<()> {
        if q.lhs.tag() != self.tag {
            return Err(Error::usage(format!(
                "pair is over {}, congruence over {}",
                q.lhs.tag(),
                self.tag
            )));
        }
        if !same_monoid(q.lhs.monoid(), &self.monoid) {
            return Err(Error::usage(
                "pair and congruence live over different monoids",
            ));
        }
        Ok(())
    }
}

/// Bend relations of `f`: one pair `f ~ f with b deleted` per support term.
pub fn bend(f: &TropPoly) -> Vec<RelationPair> {
    f.support()
        .map(|b| RelationPair {
            lhs: f.clone(),
            rhs: f.without(b),
        })
        .collect()
}

/// Evaluates `f` at a point given by name: one value per variable for a free
/// monoid, one value per element for a table monoid (which must then be a
/// multiplicative map to the semiring).
pub fn eval(f: &TropPoly, point: &BTreeMap<String, SemiringValue>) -> Result<SemiringValue> {
    let tag = f.tag();
    for v in point.values() {
        if v.tag() != tag {
            return Err(Error::usage(format!(
                "point value {v} is not in the {tag} semiring"
            )));
        }
    }
    match f.monoid().as_ref() {
        Monoid::Free(fm) => {
            let values: Vec<SemiringValue> = fm
                .vars()
                .iter()
                .map(|v| {
                    point
                        .get(v)
                        .cloned()
                        .ok_or_else(|| Error::usage(format!("no value for variable `{v}`")))
                })
                .collect::<Result<_>>()?;
            f.eval_with(|m| Ok(monomial_value(m, &values, tag)))
        }
        Monoid::Table(tm) => {
            let values: Vec<SemiringValue> = tm
                .names()
                .iter()
                .enumerate()
                .map(|(i, n)| {
                    if i == tm.zero_index() {
                        Ok(point
                            .get(n)
                            .cloned()
                            .unwrap_or_else(|| SemiringValue::zero(tag)))
                    } else {
                        point
                            .get(n)
                            .cloned()
                            .ok_or_else(|| Error::usage(format!("no value for element `{n}`")))
                    }
                })
                .collect::<Result<_>>()?;
            if !values[tm.zero_index()].is_bottom() || !values[tm.one_index()].is_one() {
                return Err(Error::usage(
                    "point must send 0 to bottom and 1 to the unit",
                ));
            }
            for a in 0..tm.len() {
                for b in 0..tm.len() {
                    if values[tm.mul_index(a, b)] != values[a].mul(&values[b])? {
                        return Err(Error::usage(format!(
                            "point is not multiplicative at {} * {}",
                            tm.names()[a],
                            tm.names()[b]
                        )));
                    }
                }
            }
            f.eval_with(|m| match m {
                Monomial::Elem(i) => Ok(values[*i].clone()),
                _ => Ok(SemiringValue::zero(tag)),
            })
        }
        Monoid::Rationals => Err(Error::usage(
            "evaluation on M(Q) needs a valuation; use eval_with",
        )),
    }
}

/// Value of an exponent vector at a point: `sum_i e_i * point_i`, with
/// `x^0 = 1` even when `x` is bottom.
pub(crate) fn monomial_value(
    m: &Monomial,
    values: &[SemiringValue],
    tag: SemiringTag,
) -> SemiringValue {
    match m {
        Monomial::Exp(e) => e
            .iter()
            .zip(values)
            .filter(|(k, _)| **k > 0)
            .fold(SemiringValue::one(tag), |acc, (k, v)| {
                acc.mul(&v.pow(*k)).expect("tags checked")
            }),
        _ => SemiringValue::zero(tag),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{int, max_attained_twice, rat};
    use proptest::prelude::*;

    fn xy() -> Arc<Monoid> {
        Arc::new(Monoid::free(["X", "Y"]).unwrap())
    }

    fn tp(m: &Arc<Monoid>, s: &str) -> TropPoly {
        TropPoly::parse(m.clone(), SemiringTag::Trop, s).unwrap()
    }

    fn point(pairs: &[(&str, SemiringValue)]) -> BTreeMap<String, SemiringValue> {
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect()
    }

    #[test]
    fn bend_examples() {
        let m = xy();
        let f = tp(&m, "X^2 + X*Y + Y^2");
        let rhs: Vec<String> = bend(&f).iter().map(|p| p.rhs.to_string()).collect();
        assert_eq!(rhs.len(), 3);
        for expect in ["X*Y + Y^2", "X^2 + Y^2", "X*Y + X^2"] {
            let e = tp(&m, expect);
            assert!(
                bend(&f).iter().any(|p| p.rhs == e && p.lhs == f),
                "missing {expect}"
            );
        }
        let g = tp(&m, "X^2 + (-1)");
        let pairs = bend(&g);
        assert_eq!(pairs.len(), 2);
        assert!(pairs.iter().any(|p| p.rhs == tp(&m, "X^2")));
        assert!(pairs.iter().any(|p| p.rhs == tp(&m, "(-1)")));
        assert!(bend(&TropPoly::zero(m, SemiringTag::Trop)).is_empty());
    }

    #[test]
    fn eval_examples() {
        let m = xy();
        let zero = SemiringValue::trop_int(0);
        let bot = SemiringValue::zero(SemiringTag::Trop);
        let p = point(&[("X", zero.clone()), ("Y", zero.clone())]);
        assert_eq!(eval(&tp(&m, "X + Y + 0"), &p).unwrap(), zero);
        let p = point(&[("X", SemiringValue::trop(rat(-1, 2))), ("Y", zero.clone())]);
        assert_eq!(
            eval(&tp(&m, "X^2 + (-1)"), &p).unwrap(),
            SemiringValue::trop_int(-1)
        );
        let p = point(&[("X", bot.clone()), ("Y", bot.clone())]);
        assert_eq!(
            eval(&tp(&m, "3 + X*Y"), &p).unwrap(),
            SemiringValue::trop_int(3)
        );
        assert!(eval(&tp(&m, "X*Y"), &p).unwrap().is_bottom());
        assert!(eval(&tp(&m, "X"), &point(&[("X", zero)])).is_err());
    }

    #[test]
    fn eval_on_table_monoid_checks_multiplicativity() {
        let f4 = crate::valuation::ring::FiniteRing::named("F4").unwrap();
        let m = Arc::new(Monoid::Table(crate::f1algebra::multiplicative_monoid(&f4)));
        let f = tp(&m, "x[t] + x[t+1] + (-1)");
        let trivial = point(
            &[("1", int(0)), ("t", int(0)), ("t+1", int(0))]
                .map(|(k, v)| (k, SemiringValue::trop(v))),
        );
        assert_eq!(eval(&f, &trivial).unwrap(), SemiringValue::trop_int(0));
        let bad = point(
            &[("1", int(0)), ("t", int(1)), ("t+1", int(2))]
                .map(|(k, v)| (k, SemiringValue::trop(v))),
        );
        assert!(eval(&f, &bad).is_err());
    }

    fn small_value() -> impl Strategy<Value = SemiringValue> {
        prop_oneof![
            1 => Just(SemiringValue::zero(SemiringTag::Trop)),
            4 => (-3i64..=3).prop_map(SemiringValue::trop_int),
        ]
    }

    proptest! {
        // Every bend pair of f agrees at x iff the max over the support of f
        // is attained twice or f(x) is bottom.
        #[test]
        fn bend_pairs_agree_iff_max_attained_twice(
            coeffs in proptest::collection::vec(small_value(), 1..5),
            x in small_value(),
            y in small_value(),
        ) {
            let m = xy();
            let monos = ["0", "X", "Y", "X*Y", "X^2"];
            let text: Vec<String> = coeffs.iter().zip(monos).map(|(c, mo)| format!("({c})*{mo}").replace("*0", "")).collect();
            let f = TropPoly::parse(m.clone(), SemiringTag::Trop, &text.join(" + ")).unwrap();
            let p = point(&[("X", x.clone()), ("Y", y.clone())]);
            let all_equal = bend(&f).iter().all(|r| eval(&r.lhs, &p).unwrap() == eval(&r.rhs, &p).unwrap());
            let values: Vec<SemiringValue> = f
                .terms()
                .iter()
                .map(|(mo, c)| c.mul(&monomial_value(mo, &[x.clone(), y.clone()], SemiringTag::Trop)).unwrap())
                .collect();
            prop_assert_eq!(all_equal, max_attained_twice(&values));
        }
    }
}
