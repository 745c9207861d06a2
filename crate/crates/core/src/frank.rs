//! Frank's family of t-norms.
//!
//! For `0 < p < ∞`, `p ≠ 1`:
//!
//! ```text
//! T_p(a, b) = log_p(1 + (p^a - 1)(p^b - 1) / (p - 1))
//! f_p(x)    = ln((p - 1) / (p^x - 1))
//! ```
//!
//! and the family's limits are `min` (p → 0), product (p → 1) and
//! Łukasiewicz (p → ∞). With `L = ln p` the generic formula is evaluated as
//! `ln_1p(expm1(aL) expm1(bL) / expm1(L)) / L`, which keeps full precision
//! near `p = 1` and does not overflow for the largest non-sentinel `p`; when
//! the ratio approaches `-1` (small `p`) a cancellation-free rewrite is used.

use std::fmt;

use crate::tnorm::GeneratorValue;
use crate::{Error, Result, UnitValue};

/// Below this `p` snaps to [`FrankParam::Zero`].
pub const ZERO_SNAP: f64 = 1e-12;
/// `|p - 1|` below this snaps to [`FrankParam::One`].
pub const ONE_SNAP: f64 = 1e-9;
/// Above this `p` snaps to [`FrankParam::Infinity`].
pub const INF_SNAP: f64 = 1e15;

/// The Frank parameter `p`, normalized so that the three limit members of the
/// family are always represented by their sentinel.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FrankParam {
    /// `p = 0`: minimum.
    Zero,
    /// `p = 1`: product.
    One,
    /// `p = +∞`: Łukasiewicz.
    Infinity,
    Finite(FiniteP),
}

/// A numeric Frank parameter strictly inside the snap windows. Only
/// [`FrankParam::new`] builds one.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct FiniteP(f64);

impl FiniteP {
    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl FrankParam {
    /// Normalizes a raw numeric parameter, snapping values close to `0`, `1`
    /// or `+∞` onto the sentinels.
    pub fn new(p: f64) -> Result<Self> {
        if p.is_nan() {
            return Err(Error::NotANumber);
        }
        if p < 0.0 {
            return Err(Error::NegativeParameter(p));
        }
        Ok(if p < ZERO_SNAP {
            FrankParam::Zero
        } else if (p - 1.0).abs() < ONE_SNAP {
            FrankParam::One
        } else if p > INF_SNAP {
            FrankParam::Infinity
        } else {
            FrankParam::Finite(FiniteP(p))
        })
    }

    /// Numeric value of `p`, with `+∞` for [`FrankParam::Infinity`].
    pub fn value(self) -> f64 {
        match self {
            FrankParam::Zero => 0.0,
            FrankParam::One => 1.0,
            FrankParam::Infinity => f64::INFINITY,
            FrankParam::Finite(p) => p.0,
        }
    }

    pub fn is_sentinel(self) -> bool {
        !matches!(self, FrankParam::Finite(_))
    }
}

impl fmt::Display for FrankParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrankParam::Zero => f.write_str("0"),
            FrankParam::One => f.write_str("1"),
            FrankParam::Infinity => f.write_str("inf"),
            FrankParam::Finite(p) => write!(f, "{}", p.0),
        }
    }
}

fn generic_tnorm(ln_p: f64, a: f64, b: f64) -> f64 {
    // Sorting makes the asymmetric branch below exactly commutative.
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let ratio = (a * ln_p).exp_m1() * (b * ln_p).exp_m1() / ln_p.exp_m1();
    if ratio > -0.5 {
        return ratio.ln_1p() / ln_p;
    }
    // For small p the ratio approaches -1 and ln_1p loses everything. Expand
    // 1 + ratio = (p^a (p^b - 1) + p^b (p^(1-b) - 1)) / (p - 1): every term
    // has the sign of ln p, so nothing cancels.
    let num =
        (a * ln_p).exp() * (b * ln_p).exp_m1() + (b * ln_p).exp() * ((1.0 - b) * ln_p).exp_m1();
    (num / ln_p.exp_m1()).ln() / ln_p
}

/// `T_p(a, b)`.
pub fn frank_tnorm(p: FrankParam, a: UnitValue, b: UnitValue) -> UnitValue {
    let (x, y) = (a.get(), b.get());
    let t = match p {
        FrankParam::Zero => x.min(y),
        FrankParam::One => x * y,
        FrankParam::Infinity => (x + y - 1.0).max(0.0).min(x.min(y)),
        FrankParam::Finite(p) => {
            // The family lies between Łukasiewicz and min.
            let upper = x.min(y);
            let lower = (x + y - 1.0).max(0.0).min(upper);
            generic_tnorm(p.0.ln(), x, y).clamp(lower, upper)
        }
    };
    UnitValue::clamped(t)
}

/// `S_p(a, b) = 1 - T_p(1 - a, 1 - b)`.
pub fn frank_tconorm(p: FrankParam, a: UnitValue, b: UnitValue) -> UnitValue {
    UnitValue::clamped(1.0 - frank_tnorm(p, a.complement(), b.complement()).get())
}

/// Additive generator `f_p`. Natural logarithm throughout.
pub fn frank_generator(p: FrankParam, x: UnitValue) -> Result<GeneratorValue> {
    let x = x.get();
    let v = match p {
        FrankParam::Zero => return Err(Error::NotArchimedean("Frank(0) = min".into())),
        FrankParam::One => -x.ln(),
        FrankParam::Infinity => 1.0 - x,
        FrankParam::Finite(p) => {
            let l = p.0.ln();
            if x == 0.0 {
                f64::INFINITY
            } else {
                (l.exp_m1() / (x * l).exp_m1()).ln()
            }
        }
    };
    // -ln(1) is -0.0 and rounding can leave tiny negatives near x = 1.
    GeneratorValue::new(v.max(0.0))
}

/// Pseudo-inverse of [`frank_generator`]: 1 at `y = 0`, 0 from `f_p(0)` on.
pub fn frank_pseudo_inverse(p: FrankParam, y: GeneratorValue) -> Result<UnitValue> {
    let y = y.get();
    let x = match p {
        FrankParam::Zero => return Err(Error::NotArchimedean("Frank(0) = min".into())),
        FrankParam::One => (-y).exp(),
        FrankParam::Infinity => 1.0 - y,
        FrankParam::Finite(p) => {
            if y.is_infinite() {
                0.0
            } else {
                let l = p.0.ln();
                (l.exp_m1() * (-y).exp()).ln_1p() / l
            }
        }
    };
    Ok(UnitValue::clamped(x))
}
