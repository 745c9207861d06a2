//! Analogical proportion between degrees in `[0, 1]`.
//!
//! The crisp test [`analogy_check`] asks for `T(a, d) = T(b, c)` and
//! `S(a, d) = S(b, c)` under a t-norm and its dual conorm. The two graded
//! degrees extend the Boolean dissimilarity and similarity forms with
//! `1 - |s - t|` as equivalence, `min` as the outer conjunction, and either
//! bounded difference or `min`/`max` inside.

use std::fmt;

use crate::boolean::BoolQuad;
use crate::{Error, Result, TNormKind, UnitValue};

/// The four arguments of `a : b :: c : d`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadruple {
    pub a: UnitValue,
    pub b: UnitValue,
    pub c: UnitValue,
    pub d: UnitValue,
}

impl Quadruple {
    pub fn new(a: UnitValue, b: UnitValue, c: UnitValue, d: UnitValue) -> Self {
        Quadruple { a, b, c, d }
    }

    pub fn from_f64(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Ok(Quadruple::new(
            UnitValue::new(a)?,
            UnitValue::new(b)?,
            UnitValue::new(c)?,
            UnitValue::new(d)?,
        ))
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.a.get(), self.b.get(), self.c.get(), self.d.get()]
    }
}

impl From<BoolQuad> for Quadruple {
    fn from(q: BoolQuad) -> Self {
        Quadruple::new(q.a.into(), q.b.into(), q.c.into(), q.d.into())
    }
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}::{}:{}", self.a, self.b, self.c, self.d)
    }
}

/// Absolute tolerance used to decide floating-point equality.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Tolerance(f64);

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance(1e-9);

    pub fn new(abs_tol: f64) -> Result<Self> {
        if abs_tol > 0.0 && abs_tol.is_finite() {
            Ok(Tolerance(abs_tol))
        } else {
            Err(Error::InvalidTolerance(abs_tol))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::DEFAULT
    }
}

/// Result of [`analogy_check`]. `t_residual` on its own gives the weaker,
/// t-norm-only reading.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProportionVerdict {
    pub holds: bool,
    /// `|T(a, d) - T(b, c)|`
    pub t_residual: f64,
    /// `|S(a, d) - S(b, c)|`
    pub s_residual: f64,
}

impl ProportionVerdict {
    pub fn total_residual(&self) -> f64 {
        self.t_residual + self.s_residual
    }
}

pub fn analogy_check(kind: &TNormKind, q: Quadruple, tol: Tolerance) -> ProportionVerdict {
    let t_residual = (kind.tnorm(q.a, q.d).get() - kind.tnorm(q.b, q.c).get()).abs();
    let s_residual = (kind.tconorm(q.a, q.d).get() - kind.tconorm(q.b, q.c).get()).abs();
    ProportionVerdict {
        holds: t_residual <= tol.get() && s_residual <= tol.get(),
        t_residual,
        s_residual,
    }
}

fn equivalence(s: f64, t: f64) -> f64 {
    1.0 - (s - t).abs()
}

fn bounded_difference(s: f64, t: f64) -> f64 {
    (s - t).max(0.0)
}

/// Graded dissimilarity form. Equals 1 iff `a - b = c - d`.
pub fn mv_degree_dissim(q: Quadruple) -> UnitValue {
    let [a, b, c, d] = q.to_array();
    let forward = equivalence(bounded_difference(a, b), bounded_difference(c, d));
    let backward = equivalence(bounded_difference(b, a), bounded_difference(d, c));
    UnitValue::clamped(forward.min(backward))
}

/// Graded similarity form. Equals 1 iff `min(a, d) = min(b, c)` and
/// `max(a, d) = max(b, c)`.
pub fn mv_degree_similarity(q: Quadruple) -> UnitValue {
    let [a, b, c, d] = q.to_array();
    let low = equivalence(a.min(d), b.min(c));
    let high = equivalence(a.max(d), b.max(c));
    UnitValue::clamped(low.min(high))
}

/// Goguen implication: 1 if `s = 0`, else `min(1, t / s)`.
pub fn goguen_implication(s: UnitValue, t: UnitValue) -> UnitValue {
    if s.get() == 0.0 {
        UnitValue::ONE
    } else {
        UnitValue::clamped((t.get() / s.get()).min(1.0))
    }
}

/// `|ad - bc| <= tol`.
pub fn geometric_proportion_check(q: Quadruple, tol: Tolerance) -> bool {
    let [a, b, c, d] = q.to_array();
    (a * d - b * c).abs() <= tol.get()
}
