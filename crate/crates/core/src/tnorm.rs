//! Triangular norms, their dual conorms, additive generators and ordinal sums.
//!
//! Every conorm here is the dual of its t-norm under `n(a) = 1 - a`:
//! `S(a, b) = 1 - T(1 - a, 1 - b)`. The three basic norms use their closed
//! conorm forms (max, probabilistic sum, bounded sum), which agree with the
//! dual up to rounding.

use std::fmt;

use crate::frank::{self, FrankParam};
use crate::{Error, Result, UnitValue};

/// Strong negation `n(a) = 1 - a`.
pub fn negation(a: UnitValue) -> UnitValue {
    a.complement()
}

/// A value of an additive generator, in `[0, +∞]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct GeneratorValue(f64);

impl GeneratorValue {
    pub const ZERO: GeneratorValue = GeneratorValue(0.0);
    pub const INFINITY: GeneratorValue = GeneratorValue(f64::INFINITY);

    pub fn new(value: f64) -> Result<Self> {
        if value >= 0.0 {
            // Normalizes -0.0.
            Ok(GeneratorValue(value + 0.0))
        } else {
            Err(Error::InvalidGeneratorValue(value))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }
}

impl std::ops::Add for GeneratorValue {
    type Output = GeneratorValue;

    fn add(self, rhs: GeneratorValue) -> GeneratorValue {
        GeneratorValue(self.0 + rhs.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormClass {
    /// Archimedean with `f(0) = +∞`.
    Strict,
    /// Archimedean with finite `f(0)`.
    Nilpotent,
    NonArchimedean,
}

/// Which t-norm to use.
#[derive(Clone, Debug, PartialEq)]
pub enum TNormKind {
    Min,
    Product,
    Lukasiewicz,
    Frank(FrankParam),
    OrdinalSum(OrdinalSum),
}

/// One summand `[lo, hi]` of an ordinal sum with its Archimedean norm.
#[derive(Clone, Debug, PartialEq)]
pub struct OrdinalSegment {
    lo: f64,
    hi: f64,
    inner: TNormKind,
}

impl OrdinalSegment {
    pub fn new(lo: UnitValue, hi: UnitValue, inner: TNormKind) -> Result<Self> {
        if lo >= hi {
            return Err(Error::InvalidSegments(format!(
                "segment [{lo}, {hi}] is empty or reversed"
            )));
        }
        if inner.classify() == NormClass::NonArchimedean {
            return Err(Error::InvalidSegments(format!(
                "segment [{lo}, {hi}] carries a non-Archimedean norm {inner}"
            )));
        }
        Ok(OrdinalSegment {
            lo: lo.get(),
            hi: hi.get(),
            inner,
        })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn inner(&self) -> &TNormKind {
        &self.inner
    }

    fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    fn rescaled(&self, a: f64, b: f64) -> f64 {
        let width = self.hi - self.lo;
        let ra = UnitValue::clamped((a - self.lo) / width);
        let rb = UnitValue::clamped((b - self.lo) / width);
        self.lo + width * self.inner.tnorm(ra, rb).get()
    }
}

/// Validated list of ordinal-sum segments: sorted by `lo`, pairwise disjoint
/// except for shared endpoints.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct OrdinalSum {
    segments: Vec<OrdinalSegment>,
}

impl OrdinalSum {
    pub fn new(mut segments: Vec<OrdinalSegment>) -> Result<Self> {
        segments.sort_by(|x, y| x.lo.total_cmp(&y.lo));
        for pair in segments.windows(2) {
            if pair[1].lo < pair[0].hi {
                return Err(Error::InvalidSegments(format!(
                    "segments [{}, {}] and [{}, {}] overlap",
                    pair[0].lo, pair[0].hi, pair[1].lo, pair[1].hi
                )));
            }
        }
        Ok(OrdinalSum { segments })
    }

    pub fn segments(&self) -> &[OrdinalSegment] {
        &self.segments
    }

    pub fn eval(&self, a: UnitValue, b: UnitValue) -> UnitValue {
        let (x, y) = (a.get(), b.get());
        // At a shared endpoint either neighbour gives min(a, b).
        match self
            .segments
            .iter()
            .find(|s| s.contains(x) && s.contains(y))
        {
            Some(segment) => UnitValue::clamped(segment.rescaled(x, y)),
            None => UnitValue::clamped(x.min(y)),
        }
    }
}

/// Ordinal sum evaluation from a raw segment list; validates it first.
pub fn ordinal_sum_eval(
    segments: &[OrdinalSegment],
    a: UnitValue,
    b: UnitValue,
) -> Result<UnitValue> {
    Ok(OrdinalSum::new(segments.to_vec())?.eval(a, b))
}

impl TNormKind {
    pub fn frank(p: f64) -> Result<Self> {
        Ok(TNormKind::Frank(FrankParam::new(p)?))
    }

    pub fn tnorm(&self, a: UnitValue, b: UnitValue) -> UnitValue {
        let (x, y) = (a.get(), b.get());
        match self {
            TNormKind::Min => UnitValue::clamped(x.min(y)),
            TNormKind::Product => UnitValue::clamped(x * y),
            TNormKind::Lukasiewicz => UnitValue::clamped((x + y - 1.0).max(0.0).min(x.min(y))),
            TNormKind::Frank(p) => frank::frank_tnorm(*p, a, b),
            TNormKind::OrdinalSum(sum) => sum.eval(a, b),
        }
    }

    pub fn tconorm(&self, a: UnitValue, b: UnitValue) -> UnitValue {
        let (x, y) = (a.get(), b.get());
        match self {
            TNormKind::Min => UnitValue::clamped(x.max(y)),
            TNormKind::Product => UnitValue::clamped(1.0 - (1.0 - x) * (1.0 - y)),
            TNormKind::Lukasiewicz => UnitValue::clamped((x + y).min(1.0)),
            TNormKind::Frank(p) => frank::frank_tconorm(*p, a, b),
            TNormKind::OrdinalSum(_) => {
                UnitValue::clamped(1.0 - self.tnorm(a.complement(), b.complement()).get())
            }
        }
    }

    /// Min fails `T(a, a) < a`; an ordinal sum is min outside its segments.
    pub fn classify(&self) -> NormClass {
        match self {
            TNormKind::Product => NormClass::Strict,
            TNormKind::Lukasiewicz => NormClass::Nilpotent,
            TNormKind::Frank(FrankParam::Zero) => NormClass::NonArchimedean,
            TNormKind::Frank(FrankParam::Infinity) => NormClass::Nilpotent,
            TNormKind::Frank(_) => NormClass::Strict,
            TNormKind::Min | TNormKind::OrdinalSum(_) => NormClass::NonArchimedean,
        }
    }

    /// Additive generator `f`, with `f(1) = 0`.
    pub fn generator(&self, x: UnitValue) -> Result<GeneratorValue> {
        match self {
            TNormKind::Product => frank::frank_generator(FrankParam::One, x),
            TNormKind::Lukasiewicz => frank::frank_generator(FrankParam::Infinity, x),
            TNormKind::Frank(p) => frank::frank_generator(*p, x),
            TNormKind::Min | TNormKind::OrdinalSum(_) => {
                Err(Error::NotArchimedean(self.to_string()))
            }
        }
    }

    /// Pseudo-inverse `f^(-1)`: 1 on `[0, f(1)]`, `f^-1` on `[f(1), f(0)]`,
    /// 0 on `[f(0), +∞)`.
    pub fn pseudo_inverse(&self, y: GeneratorValue) -> Result<UnitValue> {
        match self {
            TNormKind::Product => frank::frank_pseudo_inverse(FrankParam::One, y),
            TNormKind::Lukasiewicz => frank::frank_pseudo_inverse(FrankParam::Infinity, y),
            TNormKind::Frank(p) => frank::frank_pseudo_inverse(*p, y),
            TNormKind::Min | TNormKind::OrdinalSum(_) => {
                Err(Error::NotArchimedean(self.to_string()))
            }
        }
    }

    /// `f^(-1)(f(a) + f(b))`.
    pub fn eval_via_generator(&self, a: UnitValue, b: UnitValue) -> Result<UnitValue> {
        let sum = self.generator(a)? + self.generator(b)?;
        self.pseudo_inverse(sum)
    }
}

impl fmt::Display for TNormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TNormKind::Min => f.write_str("min"),
            TNormKind::Product => f.write_str("product"),
            TNormKind::Lukasiewicz => f.write_str("lukasiewicz"),
            TNormKind::Frank(p) => write!(f, "frank:{p}"),
            TNormKind::OrdinalSum(sum) => {
                f.write_str("ordinal-sum(")?;
                for (i, s) in sum.segments.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "[{}, {}]:{}", s.lo, s.hi, s.inner)?;
                }
                f.write_str(")")
            }
        }
    }
}
