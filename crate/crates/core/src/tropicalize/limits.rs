//! Points of tropicalizations with values in `T`, and compatible families of
//! them over a diagram of embeddings.
//!
//! A point is found by choosing, for each basis polynomial, which two terms
//! tie at the maximum. Each choice is a linear equation; once the equations
//! pin down a unique point it is checked against every polynomial. Choices
//! that leave free parameters fall back to a grid and the result is marked
//! incomplete.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use super::embedding::{
    check_commutes, settheoretic_member, trop_ideal_truncated, trop_of_poly, Embedding, TPoint,
};
use super::points::{default_sample, is_valuation_point, pi_map, AlgebraPoint};
use super::{algebra::AffineAlgebra, embedding::default_degree};
use crate::bendcalc::TropPoly;
use crate::error::{Error, Result};
use crate::f1algebra::{Monoid, MonoidHom, Monomial};
use crate::semiring::{rat, Rat, SemiringTag, SemiringValue};

/// Largest number of search nodes explored per bottom pattern.
pub const DEFAULT_NODE_CAP: usize = 200_000;
/// Largest number of grid points tried at an underdetermined leaf.
const GRID_CAP: usize = 20_000;
/// Largest monoid for which bottom patterns are enumerated.
const PATTERN_CAP: usize = 16;

/// `k/10` for `k` in `-20..=20`.
pub fn default_grid() -> Vec<Rat> {
    (-20..=20).map(|k| rat(k, 10)).collect()
}

/// Points found on one tropicalization.
#[derive(Debug, Clone, Serialize)]
pub struct PointSet {
    pub points: Vec<TPoint>,
    /// False when some branch was underdetermined (sampled on the grid) or
    /// the node cap was hit.
    pub complete: bool,
}

#[derive(Debug, Clone)]
struct Affine {
    coeffs: Vec<Rat>,
    constant: Rat,
}

/// A linear system kept in reduced row echelon form.
#[derive(Debug, Clone)]
struct System {
    n: usize,
    rows: Vec<(Vec<Rat>, Rat)>,
    pivots: Vec<usize>,
}

impl System {
    fn new(n: usize) -> Self {
        System {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `a·x = b`; `None` if inconsistent.
    fn with(&self, mut a: Vec<Rat>, mut b: Rat) -> Option<System> {
        for ((row, rhs), &p) in self.rows.iter().zip(&self.pivots) {
            if !a[p].is_zero() {
                let f = a[p].clone();
                for (x, y) in a.iter_mut().zip(row) {
                    *x -= &f * y;
                }
                b -= &f * rhs;
            }
        }
        let Some(p) = a.iter().position(|x| !x.is_zero()) else {
            return if b.is_zero() {
                Some(self.clone())
            } else {
                None
            };
        };
        let inv = a[p].recip();
        for x in a.iter_mut() {
            *x *= &inv;
        }
        b *= &inv;
        let mut out = self.clone();
        for (row, rhs) in out.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&a) {
                    *x -= &f * y;
                }
                *rhs -= &f * &b;
            }
        }
        out.rows.push((a, b));
        out.pivots.push(p);
        Some(out)
    }

    /// A particular solution and a basis of directions for the free columns.
    fn parametrize(&self) -> (Vec<Rat>, Vec<Vec<Rat>>) {
        let mut x0 = vec![Rat::zero(); self.n];
        for ((_, rhs), &p) in self.rows.iter().zip(&self.pivots) {
            x0[p] = rhs.clone();
        }
        let dirs = (0..self.n)
            .filter(|c| !self.pivots.contains(c))
            .map(|f| {
                let mut d = vec![Rat::zero(); self.n];
                d[f] = Rat::one();
                for ((row, _), &p) in self.rows.iter().zip(&self.pivots) {
                    d[p] = -row[f].clone();
                }
                d
            })
            .collect();
        (x0, dirs)
    }
}

/// The unknowns of a bottom pattern and how to turn a solution into a point.
struct Layout {
    monoid: Arc<Monoid>,
    /// Unknown index for each generator (variable or element), `None` if bottom.
    slot: Vec<Option<usize>>,
    n: usize,
}

impl Layout {
    fn term(&self, m: &Monomial, c: &SemiringValue) -> Option<Affine> {
        let constant = c.as_rational()?.clone();
        let mut coeffs = vec![Rat::zero(); self.n];
        match (self.monoid.as_ref(), m) {
            (Monoid::Free(_), Monomial::Exp(e)) => {
                for (i, k) in e.iter().enumerate() {
                    if *k > 0 {
                        coeffs[self.slot[i]?] += Rat::from_integer((*k).into());
                    }
                }
            }
            (Monoid::Table(_), Monomial::Elem(i)) => coeffs[self.slot[*i]?] = Rat::one(),
            _ => return None,
        }
        Some(Affine { coeffs, constant })
    }

    fn point(&self, x: &[Rat]) -> Result<TPoint> {
        let values = self
            .slot
            .iter()
            .map(|s| match s {
                Some(i) => SemiringValue::trop(x[*i].clone()),
                None => SemiringValue::zero(SemiringTag::Trop),
            })
            .collect();
        TPoint::new(self.monoid.clone(), values)
    }
}

/// Bottom patterns: subsets of generators sent to bottom. For a table
/// monoid the pattern must be a prime ideal so the point is multiplicative.
fn patterns(monoid: &Monoid) -> Result<Vec<Vec<bool>>> {
    let n = match monoid {
        Monoid::Free(f) => f.rank(),
        Monoid::Table(t) => t.len(),
        Monoid::Rationals => return Err(Error::usage("points on M(Q) are not enumerated")),
    };
    if n > PATTERN_CAP {
        return Err(Error::resource(format!(
            "{n} generators exceed the pattern cap of {PATTERN_CAP}"
        )));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let bottom: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
        if let Monoid::Table(t) = monoid {
            if !bottom[t.zero_index()] || bottom[t.one_index()] {
                continue;
            }
            let prime = (0..n)
                .all(|a| (0..n).all(|b| bottom[t.mul_index(a, b)] == (bottom[a] || bottom[b])));
            if !prime {
                continue;
            }
        }
        out.push(bottom);
    }
    Ok(out)
}

struct Search<'a> {
    layout: &'a Layout,
    basis: &'a [TropPoly],
    polys: Vec<Vec<Affine>>,
    grid: &'a [Rat],
    nodes: usize,
    node_cap: usize,
    complete: bool,
    found: BTreeSet<TPoint>,
}

impl Search<'_> {
    fn record(&mut self, x: &[Rat]) -> Result<()> {
        let p = self.layout.point(x)?;
        if settheoretic_member(&p, self.basis)? {
            self.found.insert(p);
        }
        Ok(())
    }

    fn leaf(&mut self, sys: &System) -> Result<()> {
        let (x0, dirs) = sys.parametrize();
        if dirs.is_empty() {
            return self.record(&x0);
        }
        self.complete = false;
        let mut grid: Vec<Rat> = self.grid.to_vec();
        if grid
            .len()
            .checked_pow(dirs.len() as u32)
            .is_none_or(|g| g > GRID_CAP)
        {
            grid.retain(|g| g.is_integer());
        }
        if grid.is_empty()
            || grid
                .len()
                .checked_pow(dirs.len() as u32)
                .is_none_or(|g| g > GRID_CAP)
        {
            grid = vec![Rat::zero()];
        }
        let mut idx = vec![0usize; dirs.len()];
        loop {
            let mut x = x0.clone();
            for (d, &k) in dirs.iter().zip(&idx) {
                for (xi, di) in x.iter_mut().zip(d) {
                    *xi += &grid[k] * di;
                }
            }
            self.record(&x)?;
            let Some(pos) = idx.iter().position(|&k| k + 1 < grid.len()) else {
                return Ok(());
            };
            idx[pos] += 1;
            for k in idx.iter_mut().take(pos) {
                *k = 0;
            }
        }
    }

    fn dfs(&mut self, k: usize, sys: System) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_cap {
            self.complete = false;
            return Ok(());
        }
        if sys.rank() == sys.n {
            return self.leaf(&sys);
        }
        if k == self.polys.len() {
            return self.leaf(&sys);
        }
        let terms = self.polys[k].clone();
        for i in 0..terms.len() {
            for j in i + 1..terms.len() {
                let a: Vec<Rat> = terms[i]
                    .coeffs
                    .iter()
                    .zip(&terms[j].coeffs)
                    .map(|(x, y)| x - y)
                    .collect();
                let b = &terms[j].constant - &terms[i].constant;
                if let Some(next) = sys.with(a, b) {
                    self.dfs(k + 1, next)?;
                }
            }
        }
        Ok(())
    }
}

/// All `T`-points of the set-theoretic tropicalization cut out by `basis`.
pub fn solve_points(
    monoid: &Arc<Monoid>,
    basis: &[TropPoly],
    grid: &[Rat],
    node_cap: usize,
) -> Result<PointSet> {
    if basis.iter().any(|f| f.tag() != SemiringTag::Trop) {
        return Err(Error::usage("point search needs tropical coefficients"));
    }
    let mut found = BTreeSet::new();
    let mut complete = true;
    for bottom in patterns(monoid)? {
        let mut slot = Vec::new();
        let mut n = 0;
        for &b in &bottom {
            slot.push(if b { None } else { Some(n) });
            n += if b { 0 } else { 1 };
        }
        let layout = Layout {
            monoid: monoid.clone(),
            slot,
            n,
        };
        let mut polys: Vec<Vec<Affine>> = Vec::new();
        let mut dead = false;
        for f in basis {
            let live: Vec<Affine> = f
                .terms()
                .iter()
                .filter_map(|(m, c)| layout.term(m, c))
                .collect();
            match live.len() {
                0 => {}
                1 => dead = true,
                _ => polys.push(live),
            }
        }
        if dead {
            continue;
        }
        polys.sort_by_key(|p| p.len());
        let mut sys = System::new(n);
        if let Monoid::Table(t) = monoid.as_ref() {
            let unit = |i: usize| {
                let mut v = vec![Rat::zero(); n];
                v[layout.slot[i].expect("finite")] += Rat::one();
                v
            };
            let mut base = vec![(unit(t.one_index()), Rat::zero())];
            for a in t.nonzero_indices().filter(|&a| !bottom[a]) {
                for b in t.nonzero_indices().filter(|&b| b >= a && !bottom[b]) {
                    let mut v = unit(t.mul_index(a, b));
                    for (x, (y, z)) in v.iter_mut().zip(unit(a).iter().zip(&unit(b))) {
                        *x -= y + z;
                    }
                    base.push((v, Rat::zero()));
                }
            }
            let mut ok = true;
            for (a, b) in base {
                match sys.with(a, b) {
                    Some(s) => sys = s,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
        }
        let mut search = Search {
            layout: &layout,
            basis,
            polys,
            grid,
            nodes: 0,
            node_cap,
            complete: true,
            found: BTreeSet::new(),
        };
        search.dfs(0, sys)?;
        complete &= search.complete;
        found.extend(search.found);
    }
    Ok(PointSet {
        points: found.into_iter().collect(),
        complete,
    })
}

/// Basis polynomials describing the tropicalization of one embedding: the
/// truncated circuits for a free monoid, the tropicalized kernel generators
/// for a table monoid.
pub fn node_basis(e: &Embedding, degree: Option<u64>) -> Result<Vec<TropPoly>> {
    match e.monoid().as_ref() {
        Monoid::Free(_) => trop_ideal_truncated(e, degree.unwrap_or_else(|| default_degree(e))),
        Monoid::Table(_) => {
            let mut v = e
                .kernel()
                .iter()
                .map(|g| trop_of_poly(g, e.valuation(), e.monoid()))
                .collect::<Result<Vec<_>>>()?;
            v.sort();
            v.dedup();
            Ok(v)
        }
        Monoid::Rationals => Err(Error::usage("limits over M(Q) are not supported")),
    }
}

/// A monoid map `ψ: B_from -> B_to` between two nodes.
#[derive(Debug, Clone)]
pub struct DiagramEdge {
    pub from: usize,
    pub to: usize,
    pub psi: MonoidHom,
}

#[derive(Debug, Clone)]
pub struct LimitOptions {
    pub degree: Option<u64>,
    pub grid: Vec<Rat>,
    pub threads: usize,
    pub node_cap: usize,
}

impl Default for LimitOptions {
    fn default() -> Self {
        LimitOptions {
            degree: None,
            grid: default_grid(),
            threads: 1,
            node_cap: DEFAULT_NODE_CAP,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NodePoints {
    pub name: String,
    pub points: PointSet,
}

/// One point per node, compatible along every edge.
pub type Family = Vec<TPoint>;

#[derive(Debug, Clone, Serialize)]
pub struct LimitResult {
    pub nodes: Vec<NodePoints>,
    pub families: Vec<Family>,
    pub complete: bool,
    /// Families `π(α)` for valuation candidates that pass the valuation test.
    pub valuation_families: Option<Vec<Family>>,
    /// Whether the two sets of families agree; `None` when no candidates
    /// are available for the algebra.
    pub matches_valuation_points: Option<bool>,
}

fn pull_back(psi: &MonoidHom, q: &TPoint, source: &Arc<Monoid>) -> Result<TPoint> {
    let values = match source.as_ref() {
        Monoid::Free(f) => (0..f.rank())
            .map(|i| q.value(&psi.apply(&f.var(i))?))
            .collect::<Result<Vec<_>>>()?,
        Monoid::Table(t) => (0..t.len())
            .map(|i| q.value(&psi.apply(&t.monomial(i))?))
            .collect::<Result<Vec<_>>>()?,
        Monoid::Rationals => return Err(Error::usage("cannot pull points back to M(Q)")),
    };
    TPoint::new(source.clone(), values)
}

fn compatible(nodes: &[Embedding], edges: &[DiagramEdge], family: &[TPoint]) -> Result<bool> {
    for e in edges {
        if e.from < family.len()
            && e.to < family.len()
            && pull_back(&e.psi, &family[e.to], nodes[e.from].monoid())? != family[e.from]
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn families(
    nodes: &[Embedding],
    edges: &[DiagramEdge],
    sets: &[Vec<TPoint>],
) -> Result<Vec<Family>> {
    let mut out = Vec::new();
    let mut cur: Vec<TPoint> = Vec::new();
    fn go(
        nodes: &[Embedding],
        edges: &[DiagramEdge],
        sets: &[Vec<TPoint>],
        cur: &mut Vec<TPoint>,
        out: &mut Vec<Family>,
    ) -> Result<()> {
        if cur.len() == sets.len() {
            out.push(cur.clone());
            return Ok(());
        }
        for p in &sets[cur.len()] {
            cur.push(p.clone());
            if compatible(nodes, edges, cur)? {
                go(nodes, edges, sets, cur, out)?;
            }
            cur.pop();
        }
        Ok(())
    }
    go(nodes, edges, sets, &mut cur, &mut out)?;
    Ok(out)
}

/// Valuation candidates on `A` extending the scalar valuation: monomial
/// weights from the grid for presented algebras, tables determined by a
/// generator of the unit group for finite fields.
pub fn valuation_candidates(e: &Embedding, grid: &[Rat]) -> Result<Option<Vec<AlgebraPoint>>> {
    let a = e.algebra().as_ref();
    match a {
        AffineAlgebra::Quotient(q) => {
            let n = q.vars().len();
            if grid
                .len()
                .checked_pow(n as u32)
                .is_none_or(|g| g > GRID_CAP)
            {
                return Ok(None);
            }
            let mut out = Vec::new();
            let mut idx = vec![0usize; n];
            loop {
                let w = idx.iter().map(|&k| grid[k].clone()).collect();
                out.push(AlgebraPoint::weight(a, w, e.valuation().clone())?);
                let Some(pos) = idx.iter().position(|&k| k + 1 < grid.len()) else {
                    return Ok(Some(out));
                };
                idx[pos] += 1;
                for k in idx.iter_mut().take(pos) {
                    *k = 0;
                }
            }
        }
        AffineAlgebra::Finite(r) => {
            if r.has_zero_divisors() {
                return Ok(None);
            }
            let units: Vec<usize> = (0..r.len()).filter(|&i| i != r.zero()).collect();
            let order = |g: usize| {
                let mut x = g;
                let mut k = 1;
                while x != r.one() {
                    x = r.mul(x, g);
                    k += 1;
                }
                k
            };
            let Some(&g) = units.iter().find(|&&g| order(g) == units.len()) else {
                return Ok(None);
            };
            let mut out = Vec::new();
            for w in grid {
                let mut values = vec![SemiringValue::zero(SemiringTag::Trop); r.len()];
                let mut x = r.one();
                for k in 0..units.len() {
                    values[x] = SemiringValue::trop(w * Rat::from_integer((k as i64).into()));
                    x = r.mul(x, g);
                }
                out.push(AlgebraPoint::table(a, values)?);
            }
            Ok(Some(out))
        }
    }
}

/// The limit of the point sets over a diagram of embeddings of one `X`,
/// compared with the images of valuation points.
pub fn limit_points(
    nodes: &[Embedding],
    edges: &[DiagramEdge],
    options: &LimitOptions,
) -> Result<LimitResult> {
    if nodes.is_empty() {
        return Err(Error::usage("diagram has no nodes"));
    }
    for e in edges {
        if e.from >= nodes.len() || e.to >= nodes.len() {
            return Err(Error::usage(format!(
                "edge {} -> {} refers to a missing node",
                e.from, e.to
            )));
        }
        check_commutes(&e.psi, &nodes[e.from], &nodes[e.to])?;
    }
    for n in nodes {
        if n.valuation().target() != SemiringTag::Trop {
            return Err(Error::usage(
                "limits are computed for valuations into the tropical semiring",
            ));
        }
    }
    let threads = options.threads.max(1).min(nodes.len());
    let mut solved: Vec<Option<Result<PointSet>>> = (0..nodes.len()).map(|_| None).collect();
    std::thread::scope(|s| {
        let chunk = nodes.len().div_ceil(threads);
        let handles: Vec<_> = nodes
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .map(|e| {
                            let basis = node_basis(e, options.degree)?;
                            solve_points(e.monoid(), &basis, &options.grid, options.node_cap)
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        let mut i = 0;
        for h in handles {
            for r in h.join().expect("solver thread panicked") {
                solved[i] = Some(r);
                i += 1;
            }
        }
    });
    let mut sets = Vec::new();
    for r in solved {
        sets.push(r.expect("every node solved")?);
    }
    let complete = sets.iter().all(|p| p.complete);
    let point_lists: Vec<Vec<TPoint>> = sets.iter().map(|p| p.points.clone()).collect();
    let fams = families(nodes, edges, &point_lists)?;

    let alg = nodes[0].algebra();
    let valuation_families = match valuation_candidates(&nodes[0], &options.grid)? {
        None => None,
        Some(cands) => {
            let sample = default_sample(alg)?;
            let mut vf = BTreeSet::new();
            for c in cands {
                let ok = matches!(is_valuation_point(alg, &c, nodes[0].valuation(), &sample), Ok(r) if r.is_valuation);
                if ok {
                    let fam = nodes
                        .iter()
                        .map(|n| pi_map(n, &c))
                        .collect::<Result<Vec<_>>>()?;
                    vf.insert(fam);
                }
            }
            Some(vf.into_iter().collect::<Vec<_>>())
        }
    };
    let matches_valuation_points = valuation_families.as_ref().map(|vf| {
        let a: BTreeSet<&Family> = vf.iter().collect();
        let b: BTreeSet<&Family> = fams.iter().collect();
        a == b
    });
    let nodes_out = nodes
        .iter()
        .zip(sets)
        .enumerate()
        .map(|(i, (n, points))| NodePoints {
            name: n.name.clone().unwrap_or_else(|| format!("node{i}")),
            points,
        })
        .collect();
    Ok(LimitResult {
        nodes: nodes_out,
        families: fams,
        complete,
        valuation_families,
        matches_valuation_points,
    })
}

#[cfg(test)]
mod tests {
    use super::super::algebra::PolyQuotient;
    use super::super::poly::CoeffField;
    use super::*;
    use crate::semiring::int;
    use crate::valuation::ring::FiniteRing;
    use crate::valuation::Valuation;
    use std::collections::BTreeMap;

    fn embed(a: &Arc<AffineAlgebra>, vars: &[&str], images: &[&str], kernel: &[&str]) -> Embedding {
        let m = Arc::new(Monoid::free(vars.iter().copied()).unwrap());
        let images: BTreeMap<String, String> = vars
            .iter()
            .zip(images)
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        let kernel: Vec<String> = kernel.iter().map(|s| s.to_string()).collect();
        Embedding::from_text(
            a.clone(),
            Valuation::p_adic(2).unwrap(),
            m,
            &images,
            &kernel,
        )
        .unwrap()
    }

    fn qsqrt2() -> Arc<AffineAlgebra> {
        Arc::new(AffineAlgebra::quotient(
            PolyQuotient::new(CoeffField::Rationals, ["x"], &["x^2 - 2"]).unwrap(),
        ))
    }

    #[test]
    fn linear_system_elimination() {
        let s = System::new(2);
        let s = s.with(vec![int(1), int(1)], int(3)).unwrap();
        assert!(s.with(vec![int(2), int(2)], int(5)).is_none());
        assert_eq!(s.with(vec![int(2), int(2)], int(6)).unwrap().rank(), 1);
        let s = s.with(vec![int(1), int(-1)], int(1)).unwrap();
        let (x, dirs) = s.parametrize();
        assert!(dirs.is_empty());
        assert_eq!(x, vec![int(2), int(1)]);
    }

    #[test]
    fn quadratic_point() {
        let a = qsqrt2();
        let e = embed(&a, &["u"], &["x"], &["u^2 - 2"]);
        let basis = node_basis(&e, Some(2)).unwrap();
        let ps = solve_points(e.monoid(), &basis, &default_grid(), DEFAULT_NODE_CAP).unwrap();
        assert!(ps.complete);
        assert_eq!(ps.points.len(), 1);
        assert_eq!(ps.points[0].values(), &[SemiringValue::trop(rat(-1, 2))]);
    }

    #[test]
    fn three_embeddings_have_one_family() {
        let a = qsqrt2();
        let nodes = vec![
            embed(&a, &["u"], &["x"], &["u^2 - 2"]),
            embed(&a, &["u", "v"], &["x", "x + 1"], &["u^2 - 2", "v - u - 1"]),
            embed(&a, &["u", "w"], &["x", "2x"], &["u^2 - 2", "w - 2u"]),
        ];
        let hom = |from: usize, to: usize| DiagramEdge {
            from,
            to,
            psi: MonoidHom::new(
                nodes[from].monoid().as_ref().clone(),
                nodes[to].monoid().as_ref().clone(),
                vec![Monomial::Exp(vec![1, 0])],
            )
            .unwrap(),
        };
        let edges = vec![hom(0, 1), hom(0, 2)];
        let opts = LimitOptions {
            threads: 3,
            ..LimitOptions::default()
        };
        let r = limit_points(&nodes, &edges, &opts).unwrap();
        assert!(r.complete);
        assert_eq!(r.families.len(), 1);
        let f = &r.families[0];
        assert_eq!(
            f[1].values(),
            &[SemiringValue::trop(rat(-1, 2)), SemiringValue::trop_int(0)]
        );
        assert_eq!(
            f[2].values(),
            &[
                SemiringValue::trop(rat(-1, 2)),
                SemiringValue::trop(rat(-3, 2))
            ]
        );
        assert_eq!(r.matches_valuation_points, Some(true));
    }

    #[test]
    fn line_is_underdetermined() {
        let a = Arc::new(AffineAlgebra::quotient(
            PolyQuotient::new(CoeffField::Rationals, ["x", "y"], &["x + y + 1"]).unwrap(),
        ));
        let m = Arc::new(Monoid::free(["X", "Y"]).unwrap());
        let images = [("X", "x"), ("Y", "y")]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        let e = Embedding::from_text(
            a,
            Valuation::trivial(),
            m,
            &images,
            &["X + Y + 1".to_string()],
        )
        .unwrap();
        let basis = node_basis(&e, Some(1)).unwrap();
        let ps = solve_points(e.monoid(), &basis, &default_grid(), DEFAULT_NODE_CAP).unwrap();
        assert!(!ps.complete);
        // Three rays of 21 grid points each, sharing the origin, plus the
        // boundary points with one coordinate at bottom.
        let finite = ps
            .points
            .iter()
            .filter(|p| p.values().iter().all(|v| !v.is_bottom()))
            .count();
        assert_eq!(finite, 61);
        assert!(ps
            .points
            .iter()
            .all(|p| settheoretic_member(p, &basis).unwrap()));
    }

    #[test]
    fn f4_universal_points() {
        let a = Arc::new(AffineAlgebra::finite(FiniteRing::named("F4").unwrap()));
        let e = super::super::universal::universal_embedding(
            a,
            Valuation::trivial(),
            &super::super::universal::Sample::All,
        )
        .unwrap();
        let basis = node_basis(&e, None).unwrap();
        let ps = solve_points(e.monoid(), &basis, &default_grid(), DEFAULT_NODE_CAP).unwrap();
        assert!(ps.complete);
        assert_eq!(ps.points.len(), 1);
        assert!(ps.points[0].named().iter().all(|(_, v)| v.is_one()));
        let r = limit_points(&[e], &[], &LimitOptions::default()).unwrap();
        assert_eq!(r.matches_valuation_points, Some(true));
    }

    #[test]
    fn table_patterns_are_prime_ideals() {
        let z4 = FiniteRing::zmod(4).unwrap();
        let m = Monoid::Table(crate::f1algebra::multiplicative_monoid(&z4));
        // In Z/4 only {0, 2} can be the bottom set.
        assert_eq!(patterns(&m).unwrap().len(), 1);
    }
}
