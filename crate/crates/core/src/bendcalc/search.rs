//! Bounded proof search for congruence membership.
//!
//! The search saturates both endpoints under "add moves": if `c·m·a <= s`
//! for a generator `(a, b)` (either orientation), then `s = c·m·a + s` is
//! congruent to `c·m·b + s`, so `s` may grow to `s + c·m·b`. The saturation
//! `cl(s)` is the largest element of the class of `s` among polynomials
//! reachable with the allowed multipliers, hence `f ~ g` iff `cl(f) = cl(g)`.
//! A proof is found as soon as `g <= cl(f)` and `f <= cl(g)`; the chain
//! `f -> F -> F + G <- G <- g` is then spelled out step by step and replayed.

use std::collections::{BTreeSet, HashSet};

use serde::ser::SerializeStruct;
use serde::Serialize;

use super::{Congruence, RelationPair, TropPoly};
use crate::error::{Error, Result};
use crate::f1algebra::Monomial;
use crate::semiring::SemiringValue;

/// Limits for [`contains`].
///
/// `max_chain_length` bounds the number of saturation rounds, `frontier_cap`
/// the total number of moves, and `max_context_size` the support size of a
/// saturated polynomial (which is also the largest context a step can use).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub max_multiplier_degree: u32,
    pub max_context_size: usize,
    pub max_chain_length: usize,
    pub frontier_cap: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_multiplier_degree: 3,
            max_context_size: 256,
            max_chain_length: 12,
            frontier_cap: 20_000,
        }
    }
}

impl SearchBudget {
    pub fn validate(&self) -> Result<()> {
        if self.max_multiplier_degree == 0
            || self.max_context_size == 0
            || self.max_chain_length == 0
            || self.frontier_cap == 0
        {
            return Err(Error::usage("search budget bounds must be positive"));
        }
        Ok(())
    }
}

/// One rewrite `c·m·A + h ~> c·m·B + h` where `(A, B)` is generator
/// `generator` read left to right (`forward`) or right to left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub generator: usize,
    pub forward: bool,
    pub scalar: SemiringValue,
    pub multiplier: Monomial,
    pub context: TropPoly,
    pub before: TropPoly,
    pub after: TropPoly,
}

impl Serialize for Step {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mono = self.context.monoid().format_monomial(&self.multiplier);
        let mut st = s.serialize_struct("Step", 7)?;
        st.serialize_field("generator", &self.generator)?;
        st.serialize_field(
            "direction",
            if self.forward { "forward" } else { "backward" },
        )?;
        st.serialize_field("scalar", &self.scalar)?;
        st.serialize_field("multiplier", if mono.is_empty() { "1" } else { &mono })?;
        st.serialize_field("context", &self.context)?;
        st.serialize_field("before", &self.before)?;
        st.serialize_field("after", &self.after)?;
        st.end()
    }
}

/// A chain `lhs = f_0 ~ f_1 ~ ... ~ f_k = rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Derivation {
    pub lhs: TropPoly,
    pub rhs: TropPoly,
    pub steps: Vec<Step>,
}

impl Derivation {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Outcome of a membership query. `Unknown` is not a disproof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Proven(Derivation),
    Unknown {
        rounds: usize,
        moves: usize,
        reason: String,
    },
}

impl Verdict {
    pub fn is_proven(&self) -> bool {
        matches!(self, Verdict::Proven(_))
    }
}

impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Verdict::Proven(d) => {
                let mut st = s.serialize_struct("Verdict", 3)?;
                st.serialize_field("verdict", "proven")?;
                st.serialize_field("chain_length", &d.len())?;
                st.serialize_field("steps", &d.steps)?;
                st.end()
            }
            Verdict::Unknown {
                rounds,
                moves,
                reason,
            } => {
                let mut st = s.serialize_struct("Verdict", 4)?;
                st.serialize_field("verdict", "unknown")?;
                st.serialize_field("rounds", rounds)?;
                st.serialize_field("moves", moves)?;
                st.serialize_field("reason", reason)?;
                st.end()
            }
        }
    }
}

/// A generator instance `m·A -> m·B` with unit scalar.
struct Instance {
    generator: usize,
    forward: bool,
    multiplier: Monomial,
    source: TropPoly,
    target: TropPoly,
}

#[derive(Clone)]
struct Move {
    instance: usize,
    scalar: SemiringValue,
    needs: TropPoly,
    adds: TropPoly,
}

struct Side {
    start: TropPoly,
    state: TropPoly,
    moves: Vec<Move>,
}

enum Halt {
    Budget(String),
}

fn instances(
    c: &Congruence,
    budget: &SearchBudget,
    universe: Option<&BTreeSet<Monomial>>,
) -> Vec<Instance> {
    let monoid = c.monoid();
    let one = SemiringValue::one(c.tag());
    let mut out = Vec::new();
    for m in monoid.multipliers(budget.max_multiplier_degree) {
        for (i, g) in c.generators().iter().enumerate() {
            if g.is_trivial() {
                continue;
            }
            for forward in [true, false] {
                let (a, b) = if forward {
                    (&g.lhs, &g.rhs)
                } else {
                    (&g.rhs, &g.lhs)
                };
                let source = a.scale_unchecked(&one, &m);
                let target = b.scale_unchecked(&one, &m);
                if source == target {
                    continue;
                }
                if let Some(u) = universe {
                    if !source
                        .support()
                        .chain(target.support())
                        .all(|mu| u.contains(mu))
                    {
                        continue;
                    }
                }
                out.push(Instance {
                    generator: i,
                    forward,
                    multiplier: m.clone(),
                    source,
                    target,
                });
            }
        }
    }
    out
}

/// Largest scalar `c` with `c·source <= state`, or `None`.
fn best_scalar(source: &TropPoly, state: &TropPoly) -> Option<SemiringValue> {
    let mut best: Option<SemiringValue> = None;
    for (mu, a) in source.terms() {
        let s = state.terms().get(mu)?;
        let q = s.div(a).ok()??;
        best = Some(match best {
            Some(b) if b <= q => b,
            _ => q,
        });
    }
    best
}

/// Scalars that make some term of `target` hit a coefficient of `hint`.
/// Used for generators with an empty side, where any scalar is allowed.
fn matching_scalars(target: &TropPoly, hint: &TropPoly) -> Vec<SemiringValue> {
    let mut out = BTreeSet::new();
    for (mu, b) in target.terms() {
        if let Some(h) = hint.terms().get(mu) {
            if let Ok(Some(c)) = h.div(b) {
                out.insert(c);
            }
        }
    }
    out.into_iter().collect()
}

impl Side {
    fn new(start: TropPoly) -> Self {
        Side {
            state: start.clone(),
            start,
            moves: Vec::new(),
        }
    }

    /// One pass over all instances. Returns whether the state grew.
    fn round(
        &mut self,
        inst: &[Instance],
        hint: &TropPoly,
        budget: &SearchBudget,
        total_moves: &mut usize,
    ) -> std::result::Result<bool, Halt> {
        let mut changed = false;
        for (k, ins) in inst.iter().enumerate() {
            let scalars = if ins.source.is_zero() {
                let mut cs = matching_scalars(&ins.target, hint);
                cs.extend(matching_scalars(&ins.target, &self.state));
                cs.push(SemiringValue::one(self.state.tag()));
                cs.sort();
                cs.dedup();
                cs
            } else {
                best_scalar(&ins.source, &self.state).into_iter().collect()
            };
            for c in scalars {
                let adds = scale_by(&ins.target, &c);
                if adds.leq_unchecked(&self.state) {
                    continue;
                }
                let needs = scale_by(&ins.source, &c);
                self.state = self.state.add(&adds).expect("compatible");
                self.moves.push(Move {
                    instance: k,
                    scalar: c,
                    needs,
                    adds,
                });
                changed = true;
                *total_moves += 1;
                if *total_moves > budget.frontier_cap {
                    return Err(Halt::Budget(format!(
                        "move cap {} reached",
                        budget.frontier_cap
                    )));
                }
                if self.state.len() > budget.max_context_size {
                    return Err(Halt::Budget(format!(
                        "support exceeded {} terms",
                        budget.max_context_size
                    )));
                }
            }
        }
        Ok(changed)
    }

    /// Indices of a subsequence of moves that still reaches `goal`,
    /// choosing for every requirement the earliest move that supplies it.
    fn prune(&self, goal: &TropPoly) -> Vec<usize> {
        let mut needed = BTreeSet::new();
        let mut work: Vec<(Monomial, SemiringValue, usize)> = goal
            .terms()
            .iter()
            .map(|(m, c)| (m.clone(), c.clone(), self.moves.len()))
            .collect();
        let mut seen = HashSet::new();
        while let Some((mu, c, before)) = work.pop() {
            if !seen.insert((mu.clone(), c.clone(), before)) {
                continue;
            }
            if self.start.terms().get(&mu).is_some_and(|s| *s >= c) {
                continue;
            }
            let j = (0..before)
                .find(|&j| self.moves[j].adds.terms().get(&mu).is_some_and(|a| *a >= c))
                .expect("saturated state dominates the goal");
            if needed.insert(j) {
                for (nu, d) in self.moves[j].needs.terms() {
                    work.push((nu.clone(), d.clone(), j));
                }
            }
        }
        needed.into_iter().collect()
    }
}

fn scale_by(p: &TropPoly, c: &SemiringValue) -> TropPoly {
    let mut out = TropPoly::zero(p.monoid().clone(), p.tag());
    for (m, a) in p.terms() {
        out.insert_max(m.clone(), a.mul(c).expect("tags agree"));
    }
    out
}

/// Decides whether `q` lies in the congruence generated by `c`, within
/// `budget`. A `Proven` verdict carries a derivation that has been replayed.
pub fn contains(c: &Congruence, q: &RelationPair, budget: &SearchBudget) -> Result<Verdict> {
    search(c, q, budget, None)
}

/// As [`contains`], but only through polynomials supported on `universe`.
pub fn contains_within(
    c: &Congruence,
    q: &RelationPair,
    budget: &SearchBudget,
    universe: &BTreeSet<Monomial>,
) -> Result<Verdict> {
    if !q
        .lhs
        .support()
        .chain(q.rhs.support())
        .all(|m| universe.contains(m))
    {
        return Err(Error::usage(
            "pair is not supported on the given monomial universe",
        ));
    }
    search(c, q, budget, Some(universe))
}

fn search(
    c: &Congruence,
    q: &RelationPair,
    budget: &SearchBudget,
    universe: Option<&BTreeSet<Monomial>>,
) -> Result<Verdict> {
    budget.validate()?;
    c.check_pair(q)?;
    q.lhs.compatible(&q.rhs)?;
    if q.lhs == q.rhs {
        return Ok(Verdict::Proven(Derivation {
            lhs: q.lhs.clone(),
            rhs: q.rhs.clone(),
            steps: Vec::new(),
        }));
    }
    let inst = instances(c, budget, universe);
    let mut f = Side::new(q.lhs.clone());
    let mut g = Side::new(q.rhs.clone());
    let mut total = 0usize;
    let mut rounds = 0usize;
    let done = |f: &Side, g: &Side| q.rhs.leq_unchecked(&f.state) && q.lhs.leq_unchecked(&g.state);
    while !done(&f, &g) {
        if rounds == budget.max_chain_length {
            return Ok(Verdict::Unknown {
                rounds,
                moves: total,
                reason: format!("round limit {} reached", budget.max_chain_length),
            });
        }
        rounds += 1;
        let hint_f = g.state.clone();
        let cf = match f.round(&inst, &hint_f, budget, &mut total) {
            Ok(x) => x,
            Err(Halt::Budget(reason)) => {
                return Ok(Verdict::Unknown {
                    rounds,
                    moves: total,
                    reason,
                })
            }
        };
        let hint_g = f.state.clone();
        let cg = match g.round(&inst, &hint_g, budget, &mut total) {
            Ok(x) => x,
            Err(Halt::Budget(reason)) => {
                return Ok(Verdict::Unknown {
                    rounds,
                    moves: total,
                    reason,
                })
            }
        };
        if !cf && !cg && !done(&f, &g) {
            return Ok(Verdict::Unknown {
                rounds,
                moves: total,
                reason: "saturated without meeting: not congruent with these multipliers".into(),
            });
        }
    }
    let keep_f = f.prune(&q.rhs);
    let keep_g = g.prune(&q.lhs);
    let (forward, end_f) = chain(&q.lhs, &[(&f, &keep_f), (&g, &keep_g)], &inst);
    let (backward, end_g) = chain(&q.rhs, &[(&g, &keep_g), (&f, &keep_f)], &inst);
    debug_assert_eq!(end_f, end_g);
    let mut steps = forward;
    for s in backward.into_iter().rev() {
        steps.push(Step {
            forward: !s.forward,
            before: s.after,
            after: s.before,
            ..s
        });
    }
    let d = Derivation {
        lhs: q.lhs.clone(),
        rhs: q.rhs.clone(),
        steps,
    };
    replay(c, &d).expect("search produced an invalid derivation");
    Ok(Verdict::Proven(d))
}

/// Applies the kept moves of each side in turn, starting from `start`.
fn chain(
    start: &TropPoly,
    sides: &[(&Side, &Vec<usize>)],
    inst: &[Instance],
) -> (Vec<Step>, TropPoly) {
    let mut state = start.clone();
    let mut steps = Vec::new();
    for (side, keep) in sides {
        for &j in keep.iter() {
            let mv = &side.moves[j];
            let next = state.add(&mv.adds).expect("compatible");
            if next == state {
                continue;
            }
            let ins = &inst[mv.instance];
            steps.push(Step {
                generator: ins.generator,
                forward: ins.forward,
                scalar: mv.scalar.clone(),
                multiplier: ins.multiplier.clone(),
                context: state.clone(),
                before: state.clone(),
                after: next.clone(),
            });
            state = next;
        }
    }
    (steps, state)
}

/// Checks that every step is a legal generator instance and that the steps
/// link `lhs` to `rhs`.
pub fn replay(c: &Congruence, d: &Derivation) -> Result<()> {
    let mut cur = &d.lhs;
    for (k, s) in d.steps.iter().enumerate() {
        let g = c
            .generators()
            .get(s.generator)
            .ok_or_else(|| Error::usage(format!("step {k}: no generator {}", s.generator)))?;
        let (a, b) = if s.forward {
            (&g.lhs, &g.rhs)
        } else {
            (&g.rhs, &g.lhs)
        };
        if s.scalar.is_bottom() || s.scalar.tag() != c.tag() {
            return Err(Error::usage(format!(
                "step {k}: invalid scalar {}",
                s.scalar
            )));
        }
        if s.before != *cur {
            return Err(Error::usage(format!(
                "step {k}: does not start where the previous step ended"
            )));
        }
        let lhs = a.scale(&s.scalar, &s.multiplier)?.add(&s.context)?;
        let rhs = b.scale(&s.scalar, &s.multiplier)?.add(&s.context)?;
        if lhs != s.before || rhs != s.after {
            return Err(Error::usage(format!(
                "step {k}: not an instance of generator {}",
                s.generator
            )));
        }
        cur = &s.after;
    }
    if *cur != d.rhs {
        return Err(Error::usage(
            "derivation does not end at the right-hand side",
        ));
    }
    Ok(())
}
