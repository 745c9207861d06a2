//! One-dimensional searches over Frank proportions.
//!
//! `diff(x) = |T(a, x) - T(b, c)| + |S(a, x) - S(b, c)|` measures how far the
//! quadruple `(a, b, c, x)` is from a proportion. For every Frank norm
//! `T + S = a + b`, which gives the lower bound
//! `diff ≥ |(a + x) - (b + c)|`: a zero requires `a + x = b + c` and equal
//! t-norm values at once. The searches therefore report the minimizer and the
//! minimum, and only call it a root when the minimum is within tolerance.

use crate::frank::FrankParam;
use crate::graded::{analogy_check, Quadruple, Tolerance};
use crate::{Error, Result, TNormKind, UnitValue};

const GOLDEN_WIDTH: f64 = 1e-13;
const P_GRID_MIN: f64 = 1e-6;
const P_GRID_MAX: f64 = 1e6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverOptions {
    pub tol: Tolerance,
    /// Coarse grid resolution before refinement.
    pub grid_steps: usize,
    /// Iteration cap for golden-section and bisection refinement.
    pub max_refine: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            tol: Tolerance::DEFAULT,
            grid_steps: 2048,
            max_refine: 200,
        }
    }
}

impl SolverOptions {
    pub fn with_tol(tol: Tolerance) -> Self {
        SolverOptions {
            tol,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid_steps < 2 {
            return Err(Error::InvalidOptions("grid_steps must be at least 2"));
        }
        Ok(())
    }
}

/// `|T(a, d) - T(b, c)| + |S(a, d) - S(b, c)|`.
pub fn diff_residual(kind: &TNormKind, q: Quadruple) -> f64 {
    analogy_check(kind, q, Tolerance::DEFAULT).total_residual()
}

/// Sampled `x ↦ diff_p(a, b, c, x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiffCurve {
    pub p: FrankParam,
    pub fixed: (UnitValue, UnitValue, UnitValue),
    /// `(x, diff)`, strictly increasing in `x`.
    pub samples: Vec<(f64, f64)>,
}

impl DiffCurve {
    /// First sample with the smallest `diff`.
    pub fn argmin(&self) -> Option<(usize, f64, f64)> {
        self.samples
            .iter()
            .enumerate()
            .min_by(|(i, x), (j, y)| x.1.total_cmp(&y.1).then(i.cmp(j)))
            .map(|(i, &(x, d))| (i, x, d))
    }
}

fn diff_at(kind: &TNormKind, a: UnitValue, b: UnitValue, c: UnitValue, x: f64) -> f64 {
    diff_residual(kind, Quadruple::new(a, b, c, UnitValue::clamped(x)))
}

fn linspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    (0..=steps)
        .map(|i| {
            if i == steps {
                hi
            } else {
                lo + (hi - lo) * (i as f64 / steps as f64)
            }
        })
        .collect()
}

fn check_range(lo: UnitValue, hi: UnitValue, steps: usize) -> Result<Vec<f64>> {
    let (l, h) = (lo.get(), hi.get());
    if l >= h {
        return Err(Error::InvalidRange {
            lo: l,
            hi: h,
            reason: "lower bound must be below upper bound",
        });
    }
    if steps < 2 {
        return Err(Error::InvalidRange {
            lo: l,
            hi: h,
            reason: "at least 2 steps are required",
        });
    }
    let xs = linspace(l, h, steps);
    if xs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidRange {
            lo: l,
            hi: h,
            reason: "too many steps for this range",
        });
    }
    Ok(xs)
}

/// Samples `diff_p` at `steps + 1` equally spaced points of `[lo, hi]`.
pub fn sweep_d(
    p: FrankParam,
    a: UnitValue,
    b: UnitValue,
    c: UnitValue,
    lo: UnitValue,
    hi: UnitValue,
    steps: usize,
) -> Result<DiffCurve> {
    let xs = check_range(lo, hi, steps)?;
    let kind = TNormKind::Frank(p);
    let samples = xs
        .into_iter()
        .map(|x| (x, diff_at(&kind, a, b, c, x)))
        .collect();
    Ok(DiffCurve {
        p,
        fixed: (a, b, c),
        samples,
    })
}

/// Golden-section search for a minimum of `f` on `[lo, hi]`. Returns the
/// best point evaluated.
pub fn golden_section<F>(f: F, mut lo: f64, mut hi: f64, max_iter: usize) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    // 1/φ
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut best = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    for _ in 0..max_iter {
        if hi - lo <= GOLDEN_WIDTH {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
            if f1 < best.1 {
                best = (x1, f1);
            }
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
            if f2 < best.1 {
                best = (x2, f2);
            }
        }
    }
    best
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DMinimum {
    pub d_star: UnitValue,
    pub min_diff: f64,
    /// `min_diff <= tol`
    pub root: bool,
}

/// Grid scan of `diff_p` over `[lo, hi]` followed by golden-section
/// refinement between the neighbours of the best grid point.
pub fn minimize_over_d(
    p: FrankParam,
    a: UnitValue,
    b: UnitValue,
    c: UnitValue,
    lo: UnitValue,
    hi: UnitValue,
    opts: &SolverOptions,
) -> Result<DMinimum> {
    opts.validate()?;
    let curve = sweep_d(p, a, b, c, lo, hi, opts.grid_steps)?;
    let (i, x_grid, d_grid) = curve.argmin().expect("sweep has at least 3 samples");
    let left = curve.samples[i.saturating_sub(1)].0;
    let right = curve.samples[(i + 1).min(curve.samples.len() - 1)].0;

    let kind = TNormKind::Frank(p);
    let (x_ref, d_ref) =
        golden_section(|x| diff_at(&kind, a, b, c, x), left, right, opts.max_refine);
    let (x, d) = if d_ref < d_grid {
        (x_ref, d_ref)
    } else {
        (x_grid, d_grid)
    };
    Ok(DMinimum {
        d_star: UnitValue::clamped(x),
        min_diff: d,
        root: d <= opts.tol.get(),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PSearchResult {
    pub best_p: FrankParam,
    pub best_residual: f64,
    /// Every evaluated parameter with residual within tolerance, ascending
    /// in `p`.
    pub solutions: Vec<FrankParam>,
}

/// Scans the Frank family for parameters that make `q` a proportion.
///
/// Evaluates the three sentinels and `opts.grid_steps` log-spaced values in
/// `[1e-6, 1e6]`, then refines every grid local minimum that is not already
/// within tolerance by golden section in `ln p`.
pub fn solve_p(q: Quadruple, opts: &SolverOptions) -> Result<PSearchResult> {
    opts.validate()?;
    let tol = opts.tol.get();
    let residual = |p: FrankParam| diff_residual(&TNormKind::Frank(p), q);

    let mut scanned: Vec<(FrankParam, f64)> =
        [FrankParam::Zero, FrankParam::One, FrankParam::Infinity]
            .into_iter()
            .map(|p| (p, residual(p)))
            .collect();

    let ln_lo = P_GRID_MIN.ln();
    let ln_hi = P_GRID_MAX.ln();
    let n = opts.grid_steps;
    let ln_grid: Vec<f64> = (0..n)
        .map(|i| {
            if i == n - 1 {
                ln_hi
            } else {
                ln_lo + (ln_hi - ln_lo) * (i as f64 / (n - 1) as f64)
            }
        })
        .collect();
    let grid: Vec<(FrankParam, f64)> = ln_grid
        .iter()
        .map(|&l| {
            let p = FrankParam::new(l.exp())?;
            Ok((p, residual(p)))
        })
        .collect::<Result<_>>()?;

    for i in 0..n {
        let r = grid[i].1;
        let left_ok = i == 0 || r <= grid[i - 1].1;
        let right_ok = i == n - 1 || r <= grid[i + 1].1;
        if !(left_ok && right_ok) || r <= tol {
            continue;
        }
        let lo = ln_grid[i.saturating_sub(1)];
        let hi = ln_grid[(i + 1).min(n - 1)];
        let objective = |l: f64| {
            FrankParam::new(l.exp())
                .map(residual)
                .unwrap_or(f64::INFINITY)
        };
        let (l, _) = golden_section(objective, lo, hi, opts.max_refine);
        let p = FrankParam::new(l.exp())?;
        scanned.push((p, residual(p)));
    }
    scanned.extend(grid);
    scanned.sort_by(|x, y| x.0.value().total_cmp(&y.0.value()));
    scanned.dedup_by(|x, y| x.0 == y.0);

    let (best_p, best_residual) = scanned
        .iter()
        .copied()
        .reduce(|best, cur| if cur.1 < best.1 { cur } else { best })
        .expect("sentinels are always scanned");
    let solutions = scanned
        .iter()
        .filter(|(_, r)| *r <= tol)
        .map(|(p, _)| *p)
        .collect();
    Ok(PSearchResult {
        best_p,
        best_residual,
        solutions,
    })
}
