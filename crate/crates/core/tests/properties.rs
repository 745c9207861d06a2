use proptest::prelude::*;

use tnorm_analogy::boolean::{pia, BoolQuad};
use tnorm_analogy::frank::{frank_tconorm, frank_tnorm};
use tnorm_analogy::graded::{
    analogy_check, geometric_proportion_check, mv_degree_dissim, mv_degree_similarity,
};
use tnorm_analogy::means::{mean_analogy_check, mean_residual, power_mean};
use tnorm_analogy::solver::{diff_residual, minimize_over_d, sweep_d, SolverOptions};
use tnorm_analogy::{FrankParam, MeanParam, Quadruple, TNormKind, Tolerance, UnitValue};

fn u(x: f64) -> UnitValue {
    UnitValue::new(x).unwrap()
}

fn unit() -> impl Strategy<Value = f64> {
    prop_oneof![
        8 => 0.0..=1.0f64,
        1 => Just(0.0),
        1 => Just(1.0),
    ]
}

/// Multiples of 1/64: sums, differences and products stay exact.
fn dyadic() -> impl Strategy<Value = f64> {
    (0u32..=64).prop_map(|k| k as f64 / 64.0)
}

fn frank_p() -> impl Strategy<Value = FrankParam> {
    prop_oneof![
        Just(FrankParam::Zero),
        Just(FrankParam::One),
        Just(FrankParam::Infinity),
        (-12.0..15.0f64).prop_map(|e| FrankParam::new(10f64.powf(e)).unwrap()),
    ]
}

fn kind() -> impl Strategy<Value = TNormKind> {
    prop_oneof![
        Just(TNormKind::Min),
        Just(TNormKind::Product),
        Just(TNormKind::Lukasiewicz),
        frank_p().prop_map(TNormKind::Frank),
    ]
}

fn quad() -> impl Strategy<Value = Quadruple> {
    (unit(), unit(), unit(), unit())
        .prop_map(|(a, b, c, d)| Quadruple::from_f64(a, b, c, d).unwrap())
}

fn dyadic_quad() -> impl Strategy<Value = Quadruple> {
    (dyadic(), dyadic(), dyadic(), dyadic())
        .prop_map(|(a, b, c, d)| Quadruple::from_f64(a, b, c, d).unwrap())
}

fn permuted(q: Quadruple, order: [usize; 4]) -> Quadruple {
    let v = q.to_array();
    Quadruple::from_f64(v[order[0]], v[order[1]], v[order[2]], v[order[3]]).unwrap()
}

proptest! {
    #[test]
    fn graded_check_restricts_to_boolean(k in kind(), bits in 0u8..16) {
        let b = BoolQuad::new(bits & 8 != 0, bits & 4 != 0, bits & 2 != 0, bits & 1 != 0);
        let v = analogy_check(&k, Quadruple::from(b), Tolerance::DEFAULT);
        prop_assert_eq!(v.holds, pia(b));
    }

    #[test]
    fn residuals_invariant_under_symmetry_and_central_permutation(k in kind(), q in quad()) {
        let base = analogy_check(&k, q, Tolerance::DEFAULT);
        for order in [[2, 3, 0, 1], [0, 2, 1, 3]] {
            let v = analogy_check(&k, permuted(q, order), Tolerance::DEFAULT);
            prop_assert_eq!(v.t_residual, base.t_residual);
            prop_assert_eq!(v.s_residual, base.s_residual);
        }
    }

    #[test]
    fn reflexive_quadruples_hold(k in kind(), a in unit(), b in unit()) {
        let v = analogy_check(&k, Quadruple::from_f64(a, b, a, b).unwrap(), Tolerance::DEFAULT);
        prop_assert_eq!(v.total_residual(), 0.0);
        prop_assert!(v.holds);
    }

    #[test]
    fn degrees_are_crisp_exactly_on_their_conditions(q in dyadic_quad()) {
        let [a, b, c, d] = q.to_array();
        prop_assert_eq!(mv_degree_dissim(q).get() == 1.0, a - b == c - d);
        let similar = a.min(d) == b.min(c) && a.max(d) == b.max(c);
        prop_assert_eq!(mv_degree_similarity(q).get() == 1.0, similar);
    }

    #[test]
    fn product_holds_exactly_on_pair_swaps(q in dyadic_quad()) {
        let [a, b, c, d] = q.to_array();
        let v = analogy_check(&TNormKind::Product, q, Tolerance::DEFAULT);
        let swapped = (a == b && d == c) || (a == c && d == b);
        prop_assert_eq!(v.total_residual() == 0.0, swapped);
    }

    #[test]
    fn frank_sum_identity(p in frank_p(), a in unit(), b in unit()) {
        let t = frank_tnorm(p, u(a), u(b)).get();
        let s = frank_tconorm(p, u(a), u(b)).get();
        prop_assert!((t + s - (a + b)).abs() <= 1e-12, "p={} a={} b={}: {}", p, a, b, t + s);
    }

    #[test]
    fn frank_residual_bounds_sum_mismatch(p in frank_p(), q in quad()) {
        let [a, b, c, d] = q.to_array();
        let gap = ((a + d) - (b + c)).abs();
        let diff = diff_residual(&TNormKind::Frank(p), q);
        prop_assert!(diff >= gap - 1e-12, "p={} {}: {} < {}", p, q, diff, gap);
        if diff <= 1e-9 {
            prop_assert!(gap <= 1e-9 + 1e-12);
        }
    }

    #[test]
    fn power_mean_is_a_mean(r in -50.0..50.0f64, x in unit(), y in unit()) {
        let m = power_mean(MeanParam::new(r).unwrap(), u(x), u(y)).get();
        prop_assert!(x.min(y) <= m && m <= x.max(y), "r={} {} {} -> {}", r, x, y, m);
        let same = power_mean(MeanParam::new(r).unwrap(), u(x), u(x)).get();
        prop_assert!((same - x).abs() <= 1e-15 * x.max(1.0));
    }

    #[test]
    fn power_mean_grows_with_r(r in -50.0..50.0f64, step in 0.0..10.0f64, x in unit(), y in unit()) {
        let lo = power_mean(MeanParam::new(r).unwrap(), u(x), u(y)).get();
        let hi = power_mean(MeanParam::new(r + step).unwrap(), u(x), u(y)).get();
        prop_assert!(lo <= hi + 1e-12, "r={} step={}: {} > {}", r, step, lo, hi);
    }

    #[test]
    fn arithmetic_and_geometric_means_match_other_checks(q in dyadic_quad()) {
        let tol = Tolerance::DEFAULT;
        let [a, b, c, d] = q.to_array();
        let arith = mean_residual(MeanParam::ARITHMETIC, q);
        prop_assert!((arith - ((a + d) - (b + c)).abs() / 2.0).abs() <= 1e-15);
        prop_assert_eq!(
            mean_analogy_check(MeanParam::ARITHMETIC, q, tol),
            analogy_check(&TNormKind::Lukasiewicz, q, tol).holds
        );
        prop_assert_eq!(
            mean_analogy_check(MeanParam::Geometric, q, tol),
            geometric_proportion_check(q, tol)
        );
    }

    #[test]
    fn minimizer_beats_its_grid(p in frank_p(), a in unit(), b in unit(), c in unit()) {
        let opts = SolverOptions { grid_steps: 64, ..SolverOptions::default() };
        let m = minimize_over_d(p, u(a), u(b), u(c), UnitValue::ZERO, UnitValue::ONE, &opts).unwrap();
        let curve = sweep_d(p, u(a), u(b), u(c), UnitValue::ZERO, UnitValue::ONE, 64).unwrap();
        for &(x, diff) in &curve.samples {
            prop_assert!(m.min_diff <= diff, "x={}: {} > {}", x, m.min_diff, diff);
        }
        prop_assert_eq!(m.root, m.min_diff <= opts.tol.get());
    }

    #[test]
    fn sweep_is_deterministic(p in frank_p(), a in unit(), b in unit(), c in unit(), steps in 2usize..200) {
        let first = sweep_d(p, u(a), u(b), u(c), UnitValue::ZERO, UnitValue::ONE, steps).unwrap();
        let second = sweep_d(p, u(a), u(b), u(c), UnitValue::ZERO, UnitValue::ONE, steps).unwrap();
        prop_assert_eq!(first.samples.len(), steps + 1);
        prop_assert_eq!(first, second);
    }
}
