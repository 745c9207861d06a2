//! Power means and the mean-based analogical proportion.
//!
//! `M_r(x, y) = ((x^r + y^r) / 2)^(1/r)`, with the geometric mean at `r = 0`
//! and `min`/`max` as the limits at `∓∞`. Four values are in proportion for
//! exponent `r` when `M_r(a, d) = M_r(b, c)`. For `a ≤ b ≤ c ≤ d`, the
//! difference `M_r(a, d) - M_r(b, c)` is non-decreasing in `r` and runs from
//! `a - b ≤ 0` to `d - c ≥ 0`, so it has a single sign change, which
//! [`solve_r`] locates.

use std::fmt;

use crate::graded::{Quadruple, Tolerance};
use crate::solver::SolverOptions;
use crate::{Error, Result, UnitValue};

/// Below this `|r|` the mean is taken from its second-order expansion
/// around the geometric mean.
const NEAR_ZERO_R: f64 = 1e-8;
/// Largest `|r|` probed when bracketing a root.
pub const MAX_BRACKET: f64 = 512.0;
const BISECTION_WIDTH: f64 = 1e-13;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MeanParam {
    /// `r = -∞`
    Min,
    /// `r = 0`
    Geometric,
    /// `r = +∞`
    Max,
    Power(PowerExp),
}

/// A finite non-zero exponent; built by [`MeanParam::new`].
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct PowerExp(f64);

impl PowerExp {
    pub fn get(self) -> f64 {
        self.0
    }
}

impl MeanParam {
    pub const ARITHMETIC: MeanParam = MeanParam::Power(PowerExp(1.0));
    pub const HARMONIC: MeanParam = MeanParam::Power(PowerExp(-1.0));
    pub const QUADRATIC: MeanParam = MeanParam::Power(PowerExp(2.0));

    pub fn new(r: f64) -> Result<Self> {
        Ok(if r.is_nan() {
            return Err(Error::NotANumber);
        } else if r == f64::NEG_INFINITY {
            MeanParam::Min
        } else if r == f64::INFINITY {
            MeanParam::Max
        } else if r == 0.0 {
            MeanParam::Geometric
        } else {
            MeanParam::Power(PowerExp(r))
        })
    }

    pub fn value(self) -> f64 {
        match self {
            MeanParam::Min => f64::NEG_INFINITY,
            MeanParam::Geometric => 0.0,
            MeanParam::Max => f64::INFINITY,
            MeanParam::Power(r) => r.0,
        }
    }
}

impl fmt::Display for MeanParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanParam::Min => f.write_str("min"),
            MeanParam::Geometric => f.write_str("geo"),
            MeanParam::Max => f.write_str("max"),
            MeanParam::Power(r) => write!(f, "{}", r.0),
        }
    }
}

fn power_mean_raw(r: f64, x: f64, y: f64) -> f64 {
    let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
    if r == f64::NEG_INFINITY {
        return lo;
    }
    if r == f64::INFINITY {
        return hi;
    }
    if lo == hi {
        return lo;
    }
    if lo == 0.0 && r <= 0.0 {
        // Limit value for r < 0; the geometric mean is 0 as well.
        return 0.0;
    }
    if r.abs() < NEAR_ZERO_R {
        // ln M_r = (ln x + ln y)/2 + r (ln x - ln y)^2 / 8 + O(r^2)
        let (ll, lh) = (lo.ln(), hi.ln());
        let spread = ll - lh;
        return ((ll + lh) / 2.0 + r * spread * spread / 8.0).exp();
    }
    // Factor out the term that dominates: M_r = base * ((1 + t) / 2)^(1/r)
    // with t = (lo/hi)^|r| in [0, 1]. ln((1 + t)/2) = ln_1p((t - 1)/2).
    let base = if r > 0.0 { hi } else { lo };
    let half_t_minus_one = if lo == 0.0 {
        -0.5
    } else {
        (r.abs() * (lo / hi).ln()).exp_m1() / 2.0
    };
    let m = base * (half_t_minus_one.ln_1p() / r).exp();
    m.clamp(lo, hi)
}

pub fn power_mean(r: MeanParam, x: UnitValue, y: UnitValue) -> UnitValue {
    UnitValue::clamped(power_mean_raw(r.value(), x.get(), y.get()))
}

/// `M_r(a, d) - M_r(b, c)`.
fn mean_gap(r: f64, q: &Quadruple) -> f64 {
    let [a, b, c, d] = q.to_array();
    power_mean_raw(r, a, d) - power_mean_raw(r, b, c)
}

pub fn mean_residual(r: MeanParam, q: Quadruple) -> f64 {
    mean_gap(r.value(), &q).abs()
}

pub fn mean_analogy_check(r: MeanParam, q: Quadruple, tol: Tolerance) -> bool {
    mean_residual(r, q) <= tol.get()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootStatus {
    /// Arithmetic or geometric mean already within tolerance.
    Shortcut,
    /// Found by bisection inside `[-512, 512]`.
    Bracketed,
    /// No sign change inside `[-512, 512]`; the reported `r` is the better
    /// of the `min`/`max` limits.
    NoBracket,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RSolution {
    pub r: MeanParam,
    /// `|M_r(a, d) - M_r(b, c)|`
    pub residual: f64,
    pub status: RootStatus,
}

impl RSolution {
    pub fn converged(&self) -> bool {
        self.status != RootStatus::NoBracket
    }
}

fn bisect(q: &Quadruple, mut lo: f64, mut hi: f64, max_iter: usize) -> (f64, f64) {
    let mut h_lo = mean_gap(lo, q);
    let mut best = (lo, h_lo.abs());
    for _ in 0..max_iter {
        if hi - lo <= BISECTION_WIDTH {
            break;
        }
        let mid = lo + (hi - lo) / 2.0;
        if mid <= lo || mid >= hi {
            break;
        }
        let h_mid = mean_gap(mid, q);
        if h_mid.abs() < best.1 {
            best = (mid, h_mid.abs());
        }
        if h_mid == 0.0 {
            break;
        }
        if (h_mid < 0.0) == (h_lo < 0.0) {
            lo = mid;
            h_lo = h_mid;
        } else {
            hi = mid;
        }
    }
    let h_hi = mean_gap(hi, q).abs();
    if h_hi < best.1 {
        best = (hi, h_hi);
    }
    best
}

/// Finds the exponent `r` with `M_r(a, d) = M_r(b, c)`.
///
/// Intended for `a ≤ b ≤ c ≤ d`. The arithmetic mean is returned when it
/// already satisfies `opts.tol`, then the geometric mean. Otherwise the
/// bracket `[0, 1]`, `[-1, 0]`, `[1, 2]`, `[-2, -1]`, ... doubling up to
/// `±512` is searched for a sign change and bisected. An all-equal
/// quadruple returns `r = 1`.
pub fn solve_r(q: Quadruple, opts: &SolverOptions) -> RSolution {
    let tol = opts.tol.get();
    let shortcut = |r: MeanParam| {
        let residual = mean_residual(r, q);
        (residual <= tol).then_some(RSolution {
            r,
            residual,
            status: RootStatus::Shortcut,
        })
    };
    if let Some(s) = shortcut(MeanParam::ARITHMETIC).or_else(|| shortcut(MeanParam::Geometric)) {
        return s;
    }

    let mut positive = vec![0.0];
    let mut r = 1.0;
    while r <= MAX_BRACKET {
        positive.push(r);
        r *= 2.0;
    }
    let gaps: Vec<f64> = positive.iter().map(|&r| mean_gap(r, &q)).collect();
    let neg_gaps: Vec<f64> = positive.iter().map(|&r| mean_gap(-r, &q)).collect();

    let changes_sign = |x: f64, y: f64| (x < 0.0) != (y < 0.0);
    for i in 1..positive.len() {
        let candidates = [
            (positive[i - 1], positive[i], gaps[i - 1], gaps[i]),
            (-positive[i], -positive[i - 1], neg_gaps[i], neg_gaps[i - 1]),
        ];
        for (lo, hi, h_lo, h_hi) in candidates {
            if h_hi.abs() <= tol {
                return finish(hi, h_hi.abs(), RootStatus::Bracketed);
            }
            if changes_sign(h_lo, h_hi) {
                let (root, residual) = bisect(&q, lo, hi, opts.max_refine);
                return finish(root, residual, RootStatus::Bracketed);
            }
        }
    }

    let at_min = mean_residual(MeanParam::Min, q);
    let at_max = mean_residual(MeanParam::Max, q);
    let (r, residual) = if at_min <= at_max {
        (MeanParam::Min, at_min)
    } else {
        (MeanParam::Max, at_max)
    };
    RSolution {
        r,
        residual,
        status: RootStatus::NoBracket,
    }
}

fn finish(r: f64, residual: f64, status: RootStatus) -> RSolution {
    // r is finite here, so new() cannot fail.
    let r = MeanParam::new(r).unwrap_or(MeanParam::Geometric);
    RSolution {
        r,
        residual,
        status,
    }
}
