//! Exact coefficient rings: `Q`, finite rings given by tables (including
//! `F_p[t]/(f)`), and rational functions `Q(t)`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::semiring::{format_rational, Rat};

/// A finite commutative ring with explicit addition and multiplication tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    names: Vec<String>,
    zero: usize,
    one: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    neg: Vec<usize>,
}

impl FiniteRing {
    /// Validates the ring axioms exhaustively.
    pub fn from_tables(
        names: Vec<String>,
        zero: usize,
        one: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = names.len();
        let square = |t: &Vec<Vec<usize>>| {
            t.len() == n && t.iter().all(|r| r.len() == n && r.iter().all(|&x| x < n))
        };
        if n == 0 || zero >= n || one >= n || !square(&add) || !square(&mul) {
            return Err(Error::usage(
                "finite ring tables must be square with entries in range",
            ));
        }
        let mut neg = vec![usize::MAX; n];
        for a in 0..n {
            if add[zero][a] != a || mul[one][a] != a {
                return Err(Error::usage(
                    "zero/one are not additive/multiplicative identities",
                ));
            }
            match (0..n).find(|&b| add[a][b] == zero) {
                Some(b) => neg[a] = b,
                None => {
                    return Err(Error::usage(format!(
                        "`{}` has no additive inverse",
                        names[a]
                    )))
                }
            }
            for b in 0..n {
                if add[a][b] != add[b][a] || mul[a][b] != mul[b][a] {
                    return Err(Error::usage("finite ring must be commutative"));
                }
                for c in 0..n {
                    if add[add[a][b]][c] != add[a][add[b][c]]
                        || mul[mul[a][b]][c] != mul[a][mul[b][c]]
                    {
                        return Err(Error::usage("finite ring operations must be associative"));
                    }
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                        return Err(Error::usage("finite ring must satisfy distributivity"));
                    }
                }
            }
        }
        Ok(FiniteRing {
            names,
            zero,
            one,
            add,
            mul,
            neg,
        })
    }

    /// `Z/n`.
    pub fn zmod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::usage("Z/n needs n >= 2"));
        }
        let n = n as usize;
        let names = (0..n).map(|i| i.to_string()).collect();
        let add = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let mul = (0..n)
            .map(|a| (0..n).map(|b| (a * b) % n).collect())
            .collect();
        Self::from_tables(names, 0, 1 % n, add, mul)
    }

    /// `F_p[t]/(f)` for a monic `f` given by coefficients, lowest degree
    /// first. `f` need not be irreducible, so e.g. `F_2[t]/(t^2)` is allowed.
    pub fn gf(p: u64, modulus: &[u64]) -> Result<Self> {
        if p < 2 || !is_prime(p) {
            return Err(Error::usage(format!("{p} is not prime")));
        }
        let k = modulus
            .len()
            .checked_sub(1)
            .filter(|&k| k >= 1)
            .ok_or_else(|| Error::usage("modulus must have degree >= 1"))?;
        if modulus[k] % p != 1 {
            return Err(Error::usage("modulus must be monic"));
        }
        let size = (p as usize).pow(k as u32);
        let elems: Vec<Vec<u64>> = (0..size)
            .map(|mut i| {
                (0..k)
                    .map(|_| {
                        let c = (i % p as usize) as u64;
                        i /= p as usize;
                        c
                    })
                    .collect()
            })
            .collect();
        let index = |v: &[u64]| {
            v.iter()
                .rev()
                .fold(0usize, |acc, &c| acc * p as usize + c as usize)
        };
        let reduce = |mut prod: Vec<u64>| {
            for d in (k..prod.len()).rev() {
                let c = prod[d] % p;
                if c != 0 {
                    for (j, &m) in modulus.iter().enumerate() {
                        let sub = c * (m % p) % p;
                        prod[d - k + j] = (prod[d - k + j] + p - sub) % p;
                    }
                }
            }
            prod.truncate(k);
            prod
        };
        let add = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| {
                        index(
                            &a.iter()
                                .zip(b)
                                .map(|(x, y)| (x + y) % p)
                                .collect::<Vec<_>>(),
                        )
                    })
                    .collect()
            })
            .collect();
        let mul = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| {
                        let mut prod = vec![0u64; 2 * k];
                        for (i, x) in a.iter().enumerate() {
                            for (j, y) in b.iter().enumerate() {
                                prod[i + j] = (prod[i + j] + x * y) % p;
                            }
                        }
                        index(&reduce(prod))
                    })
                    .collect()
            })
            .collect();
        let names = elems.iter().map(|e| residue_name(e)).collect();
        let mut one = vec![0; k];
        one[0] = 1;
        Self::from_tables(names, 0, index(&one), add, mul)
    }

    /// Named fixtures: `F2`, `F3`, `F4`, `F9`, `Z/4`, `Z/6`, `F2[t]/(t^2)`.
    pub fn named(name: &str) -> Result<Self> {
        match name.replace(' ', "").as_str() {
            "F2" | "Z/2" => Self::zmod(2),
            "F3" | "Z/3" => Self::zmod(3),
            "F5" | "Z/5" => Self::zmod(5),
            "F4" => Self::gf(2, &[1, 1, 1]),
            "F9" => Self::gf(3, &[1, 0, 1]),
            "Z/4" => Self::zmod(4),
            "Z/6" => Self::zmod(6),
            "F2[t]/(t^2)" => Self::gf(2, &[0, 0, 1]),
            other => Err(Error::usage(format!(
                "unknown finite ring fixture `{other}`"
            ))),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn has_zero_divisors(&self) -> bool {
        (0..self.len()).filter(|&a| a != self.zero).any(|a| {
            (0..self.len())
                .filter(|&b| b != self.zero)
                .any(|b| self.mul(a, b) == self.zero)
        })
    }

    /// Elements of the prime subring: the multiples `n * 1`.
    pub fn prime_subring(&self) -> Vec<usize> {
        let mut out = vec![self.zero];
        let mut cur = self.one;
        while cur != self.zero && !out.contains(&cur) {
            out.push(cur);
            cur = self.add(cur, self.one);
        }
        out.sort_unstable();
        out
    }
}

fn residue_name(coeffs: &[u64]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        };
        parts.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Univariate polynomial over `Q`, coefficients lowest degree first, no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UPoly(Vec<Rat>);

impl UPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn t() -> Self {
        Self::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rat> {
        self.0.last()
    }

    /// Order of vanishing at `t = 0`.
    pub fn ord(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = Rat::zero();
        Self::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly(vec![]);
        }
        let mut out = vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.lead().unwrap().clone();
        let mut rem = self.0.clone();
        let mut quot = vec![Rat::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let c = &rem[k] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.0.iter().enumerate() {
                    rem[k - dd + j] -= &c * dc;
                }
                quot[k - dd] = c;
            }
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            Some(l) => self.scale(&(Rat::one() / l)),
            None => self.clone(),
        }
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let a = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coef = format_rational(&a);
            match i {
                0 => f.write_str(&coef)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{coef}*")?;
                    }
                    if i == 1 {
                        f.write_str("t")?
                    } else {
                        write!(f, "t^{i}")?
                    }
                }
            }
        }
        Ok(())
    }
}

/// Element of `Q(t)` in lowest terms with monic denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::usage("rational function with zero denominator"));
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: UPoly::constant(Rat::one()),
            });
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let l = den.lead().unwrap().clone();
        Ok(RatFunc {
            num: num.scale(&(Rat::one() / &l)),
            den: den.scale(&(Rat::one() / &l)),
        })
    }

    pub fn poly(p: UPoly) -> Self {
        RatFunc {
            num: p,
            den: UPoly::constant(Rat::one()),
        }
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
        .expect("nonzero denominators")
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// `ord_t(num) - ord_t(den)`; `None` for zero.
    pub fn ord(&self) -> Option<i64> {
        Some(self.num.ord()? as i64 - self.den.ord().expect("nonzero denominator") as i64)
    }

    /// Coefficient of the lowest-order term of the Laurent expansion at 0.
    pub fn initial_coefficient(&self) -> Option<Rat> {
        let n = &self.num.coeffs()[self.num.ord()?];
        let d = &self.den.coeffs()[self.den.ord().unwrap()];
        Some(n / d)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Element of `F_p[t]/(f)` with its ring data carried along.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    p: u64,
    modulus: Vec<u64>,
    coeffs: Vec<u64>,
}

impl Residue {
    pub fn new(p: u64, modulus: Vec<u64>, coeffs: &[u64]) -> Result<Self> {
        if !is_prime(p) || modulus.len() < 2 || modulus.last().copied().map(|c| c % p) != Some(1) {
            return Err(Error::usage(
                "residue ring needs prime p and monic modulus of degree >= 1",
            ));
        }
        let r = Residue {
            p,
            modulus,
            coeffs: vec![],
        };
        Ok(r.reduce(coeffs.iter().map(|c| c % p).collect()))
    }

    fn reduce(&self, mut c: Vec<u64>) -> Self {
        let k = self.modulus.len() - 1;
        let p = self.p;
        for d in (k..c.len()).rev() {
            let lead = c[d] % p;
            if lead != 0 {
                for (j, &m) in self.modulus.iter().enumerate() {
                    c[d - k + j] = (c[d - k + j] + p - lead * (m % p) % p) % p;
                }
            }
        }
        c.resize(k, 0);
        Residue {
            p,
            modulus: self.modulus.clone(),
            coeffs: c,
        }
    }

    fn same_ring(&self, o: &Self) -> Result<()> {
        if self.p == o.p && self.modulus == o.modulus {
            Ok(())
        } else {
            Err(Error::usage("residues from different rings"))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_ring(o)?;
        Ok(self.reduce(
            self.coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| (a + b) % self.p)
                .collect(),
        ))
    }

    pub fn neg(&self) -> Self {
        self.reduce(self.coeffs.iter().map(|a| (self.p - a) % self.p).collect())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.same_ring(o)?;
        let mut prod = vec![0u64; self.coeffs.len() + o.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % self.p;
            }
        }
        Ok(self.reduce(prod))
    }

    fn with_coeffs(&self, c: &[u64]) -> Self {
        self.reduce(c.iter().map(|x| x % self.p).collect())
    }
}

/// Element of one of the exact coefficient rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingElement {
    Rational(Rat),
    Residue(Residue),
    RationalFunction(RatFunc),
}

impl RingElement {
    pub fn rational(r: Rat) -> Self {
        RingElement::Rational(r)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Rational(r) => r.is_zero(),
            RingElement::Residue(r) => r.is_zero(),
            RingElement::RationalFunction(f) => f.is_zero(),
        }
    }

    /// Zero of the same ring.
    pub fn zero_like(&self) -> Self {
        match self {
            RingElement::Rational(_) => RingElement::Rational(Rat::zero()),
            RingElement::Residue(r) => RingElement::Residue(r.with_coeffs(&[])),
            RingElement::RationalFunction(_) => {
                RingElement::RationalFunction(RatFunc::poly(UPoly::new(vec![])))
            }
        }
    }

    /// One of the same ring.
    pub fn one_like(&self) -> Self {
        match self {
            RingElement::Rational(_) => RingElement::Rational(Rat::one()),
            RingElement::Residue(r) => RingElement::Residue(r.with_coeffs(&[1])),
            RingElement::RationalFunction(_) => {
                RingElement::RationalFunction(RatFunc::poly(UPoly::constant(Rat::one())))
            }
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        use RingElement::*;
        match (self, o) {
            (Rational(a), Rational(b)) => Ok(Rational(a + b)),
            (Residue(a), Residue(b)) => Ok(Residue(a.add(b)?)),
            (RationalFunction(a), RationalFunction(b)) => Ok(RationalFunction(a.add(b))),
            _ => Err(Error::usage("ring element kind mismatch")),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        use RingElement::*;
        match (self, o) {
            (Rational(a), Rational(b)) => Ok(Rational(a * b)),
            (Residue(a), Residue(b)) => Ok(Residue(a.mul(b)?)),
            (RationalFunction(a), RationalFunction(b)) => Ok(RationalFunction(a.mul(b))),
            _ => Err(Error::usage("ring element kind mismatch")),
        }
    }

    pub fn neg(&self) -> Self {
        use RingElement::*;
        match self {
            Rational(a) => Rational(-a),
            Residue(a) => Residue(a.neg()),
            RationalFunction(a) => RationalFunction(a.neg()),
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    /// Multiplicative inverse; `None` for zero and for non-units.
    pub fn inv(&self) -> Option<Self> {
        use RingElement::*;
        if self.is_zero() {
            return None;
        }
        match self {
            Rational(a) => Some(Rational(a.recip())),
            RationalFunction(f) => Some(RationalFunction(
                RatFunc::new(f.den.clone(), f.num.clone()).ok()?,
            )),
            Residue(r) => {
                let k = r.modulus.len() - 1;
                let one = r.with_coeffs(&[1]);
                let total = r.p.checked_pow(k as u32)?;
                (0..total).find_map(|mut code| {
                    let mut c = Vec::with_capacity(k);
                    for _ in 0..k {
                        c.push(code % r.p);
                        code /= r.p;
                    }
                    let cand = r.with_coeffs(&c);
                    (r.mul(&cand).ok()? == one).then_some(Residue(cand))
                })
            }
        }
    }

    /// The rational `q` viewed in the ring of `self`.
    pub fn constant_like(&self, q: &Rat) -> Result<Self> {
        use RingElement::*;
        match self {
            Rational(_) => Ok(Rational(q.clone())),
            RationalFunction(_) => Ok(RationalFunction(RatFunc::poly(UPoly::constant(q.clone())))),
            Residue(r) => {
                let p = num_bigint::BigInt::from(r.p);
                let reduce = |n: &num_bigint::BigInt| -> u64 {
                    let m = n.mod_floor(&p);
                    m.try_into().expect("reduced below p")
                };
                let num = r.with_coeffs(&[reduce(q.numer())]);
                let den = Residue(r.with_coeffs(&[reduce(q.denom())]))
                    .inv()
                    .ok_or_else(|| {
                        Error::usage(format!(
                            "{} is not invertible mod {}",
                            format_rational(q),
                            r.p
                        ))
                    })?;
                Residue(num).mul(&den)
            }
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Rational(r) => f.write_str(&format_rational(r)),
            RingElement::Residue(r) => f.write_str(&residue_name(&r.coeffs)),
            RingElement::RationalFunction(q) => write!(f, "{q}"),
        }
    }
}

/// `v_p(n)` for a nonzero integer.
pub fn int_valuation(n: &num_bigint::BigInt, p: u64) -> u64 {
    let p = num_bigint::BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// `v_p(r)` for a nonzero rational.
pub fn rat_valuation(r: &Rat, p: u64) -> i64 {
    int_valuation(r.numer(), p) as i64 - int_valuation(r.denom(), p) as i64
}
