//! Idempotent semiring values with exact rational arithmetic.
//!
//! Three value kinds are supported, selected by [`SemiringTag`]:
//!
//! * `Trop`: the max-plus semiring `(Q ∪ {-inf}, max, +)` with `0_T = -inf`
//!   and `1_T = 0`.
//! * `Bool`: the two-element semifield `{-inf, 1}` (or/and).
//! * `Rank2`: `Q² ∪ {-inf}` with lexicographic max as addition and
//!   componentwise rational addition as multiplication.
//!
//! Bottom is always a dedicated variant. No floating point is used anywhere.
//!
//! Text syntax: rationals as `p/q` or `p`, bottom as `-inf`, rank-2 values as
//! `[a, b]`, and the Boolean unit as `1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// Builds the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `p/q` or `p` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rat> {
    let t = text.trim();
    let t = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(t)
        .trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    let parse_int = |s: &str| {
        BigInt::from_str(s.trim())
            .map_err(|_| Error::parse(format!("invalid rational literal `{text}`")))
    };
    match t.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::parse(format!("zero denominator in `{text}`")));
            }
            Ok(Rat::new(parse_int(n)?, d))
        }
        None => Ok(Rat::from_integer(parse_int(t)?)),
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SemiringTag {
    Trop,
    Bool,
    Rank2,
}

impl fmt::Display for SemiringTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SemiringTag::Trop => "trop",
            SemiringTag::Bool => "bool",
            SemiringTag::Rank2 => "rank2",
        };
        f.write_str(s)
    }
}

impl FromStr for SemiringTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "trop" | "tropical" => Ok(SemiringTag::Trop),
            "bool" | "boolean" => Ok(SemiringTag::Bool),
            "rank2" | "rank-2" | "lex" => Ok(SemiringTag::Rank2),
            other => Err(Error::parse(format!("unknown semiring `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TropValue {
    Bottom,
    Finite(Rat),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoolValue {
    Bottom,
    One,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rank2Value {
    Bottom,
    Finite(Rat, Rat),
}

/// An element of one of the supported idempotent semirings.
///
/// The derived `Ord` agrees with the canonical order `a <= b iff a + b = b`
/// whenever both values share a tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SemiringValue {
    Trop(TropValue),
    Bool(BoolValue),
    Rank2(Rank2Value),
}

fn mismatch(a: &SemiringValue, b: &SemiringValue) -> Error {
    Error::usage(format!("semiring tag mismatch: {} vs {}", a.tag(), b.tag()))
}

impl SemiringValue {
    pub fn trop(r: Rat) -> Self {
        SemiringValue::Trop(TropValue::Finite(r))
    }

    pub fn trop_int(n: i64) -> Self {
        Self::trop(int(n))
    }

    pub fn rank2(a: Rat, b: Rat) -> Self {
        SemiringValue::Rank2(Rank2Value::Finite(a, b))
    }

    pub fn tag(&self) -> SemiringTag {
        match self {
            SemiringValue::Trop(_) => SemiringTag::Trop,
            SemiringValue::Bool(_) => SemiringTag::Bool,
            SemiringValue::Rank2(_) => SemiringTag::Rank2,
        }
    }

    /// The additive unit (`-inf`).
    pub fn zero(tag: SemiringTag) -> Self {
        match tag {
            SemiringTag::Trop => SemiringValue::Trop(TropValue::Bottom),
            SemiringTag::Bool => SemiringValue::Bool(BoolValue::Bottom),
            SemiringTag::Rank2 => SemiringValue::Rank2(Rank2Value::Bottom),
        }
    }

    /// The multiplicative unit.
    pub fn one(tag: SemiringTag) -> Self {
        match tag {
            SemiringTag::Trop => SemiringValue::trop(Rat::zero()),
            SemiringTag::Bool => SemiringValue::Bool(BoolValue::One),
            SemiringTag::Rank2 => SemiringValue::rank2(Rat::zero(), Rat::zero()),
        }
    }

    pub fn is_bottom(&self) -> bool {
        matches!(
            self,
            SemiringValue::Trop(TropValue::Bottom)
                | SemiringValue::Bool(BoolValue::Bottom)
                | SemiringValue::Rank2(Rank2Value::Bottom)
        )
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.tag())
    }

    /// Finite rational payload of a `Trop` value.
    pub fn as_rational(&self) -> Option<&Rat> {
        match self {
            SemiringValue::Trop(TropValue::Finite(r)) => Some(r),
            _ => None,
        }
    }

    fn check_tag(&self, other: &Self) -> Result<()> {
        if self.tag() == other.tag() {
            Ok(())
        } else {
            Err(mismatch(self, other))
        }
    }

    /// Semiring addition: max, lex-max, or logical or.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_tag(other)?;
        Ok(if self >= other {
            self.clone()
        } else {
            other.clone()
        })
    }

    /// Semiring multiplication: rational addition, bottom absorbing.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        use SemiringValue::*;
        self.check_tag(other)?;
        if self.is_bottom() || other.is_bottom() {
            return Ok(Self::zero(self.tag()));
        }
        Ok(match (self, other) {
            (Trop(TropValue::Finite(a)), Trop(TropValue::Finite(b))) => Self::trop(a + b),
            (Bool(_), Bool(_)) => Bool(BoolValue::One),
            (Rank2(Rank2Value::Finite(a1, a2)), Rank2(Rank2Value::Finite(b1, b2))) => {
                Self::rank2(a1 + b1, a2 + b2)
            }
            _ => unreachable!("tags checked above"),
        })
    }

    /// Canonical order: `a <= b` iff `a + b = b`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_tag(other)?;
        Ok(self <= other)
    }

    /// Division by a non-bottom value (these semirings are semifields).
    /// Returns `None` when dividing by bottom.
    pub fn div(&self, other: &Self) -> Result<Option<Self>> {
        use SemiringValue::*;
        self.check_tag(other)?;
        if other.is_bottom() {
            return Ok(None);
        }
        if self.is_bottom() {
            return Ok(Some(self.clone()));
        }
        Ok(Some(match (self, other) {
            (Trop(TropValue::Finite(a)), Trop(TropValue::Finite(b))) => Self::trop(a - b),
            (Bool(_), Bool(_)) => Bool(BoolValue::One),
            (Rank2(Rank2Value::Finite(a1, a2)), Rank2(Rank2Value::Finite(b1, b2))) => {
                Self::rank2(a1 - b1, a2 - b2)
            }
            _ => unreachable!("tags checked above"),
        }))
    }

    /// Multiplicative power `self^k`.
    pub fn pow(&self, k: u64) -> Self {
        use SemiringValue::*;
        if k == 0 {
            return Self::one(self.tag());
        }
        if self.is_bottom() {
            return self.clone();
        }
        let kk = Rat::from_integer(BigInt::from(k));
        match self {
            Trop(TropValue::Finite(a)) => Self::trop(a * &kk),
            Bool(_) => self.clone(),
            Rank2(Rank2Value::Finite(a, b)) => Self::rank2(a * &kk, b * &kk),
            _ => unreachable!("bottom handled above"),
        }
    }

    /// Parses a value of the given tag from its text syntax.
    pub fn parse(tag: SemiringTag, text: &str) -> Result<Self> {
        let t = text.trim();
        let t_inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if t_inner == "-inf" || t_inner == "bottom" {
            return Ok(Self::zero(tag));
        }
        match tag {
            SemiringTag::Trop => Ok(Self::trop(parse_rational(t_inner)?)),
            SemiringTag::Bool => match t_inner {
                "1" | "one" | "true" => Ok(SemiringValue::Bool(BoolValue::One)),
                _ => Err(Error::parse(format!("invalid Boolean value `{text}`"))),
            },
            SemiringTag::Rank2 => {
                let body = t_inner
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| {
                        Error::parse(format!("rank-2 value must look like `[a, b]`: `{text}`"))
                    })?;
                let (a, b) = body.split_once(',').ok_or_else(|| {
                    Error::parse(format!("rank-2 value needs two components: `{text}`"))
                })?;
                Ok(Self::rank2(parse_rational(a)?, parse_rational(b)?))
            }
        }
    }
}

impl fmt::Display for SemiringValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            v if v.is_bottom() => f.write_str("-inf"),
            SemiringValue::Trop(TropValue::Finite(r)) => f.write_str(&format_rational(r)),
            SemiringValue::Bool(_) => f.write_str("1"),
            SemiringValue::Rank2(Rank2Value::Finite(a, b)) => {
                write!(f, "[{}, {}]", format_rational(a), format_rational(b))
            }
            _ => unreachable!(),
        }
    }
}

impl Serialize for SemiringValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Sum of a sequence of values; bottom for the empty sequence.
pub fn sum<'a>(
    tag: SemiringTag,
    values: impl IntoIterator<Item = &'a SemiringValue>,
) -> Result<SemiringValue> {
    values
        .into_iter()
        .try_fold(SemiringValue::zero(tag), |acc, v| acc.add(v))
}

/// True if the maximum of `values` is bottom or is attained at least twice.
pub fn max_attained_twice(values: &[SemiringValue]) -> bool {
    let Some(top) = values.iter().max() else {
        return true;
    };
    top.is_bottom() || values.iter().filter(|v| *v == top).count() >= 2
}
