//! Library results checked against independent, deliberately naive oracles.

use std::f64::consts::PI;

use landau::bounds::extract_coefficients;
use landau::maps::{Analytic, AnalyticSeries, HarmonicMap, PlanarMap};
use landau::radii::{
    family1_solve, family2_solve, theorem_radius, Family, RadiusSpec, SolverOptions, TheoremId,
    TheoremParams,
};
use landau::verify::Kernel;
use landau::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> Vec<Complex64> {
    let mut c: Vec<Complex64> = (0..=degree)
        .map(|_| Complex64::from_polar(rng.gen::<f64>(), rng.gen_range(0.0..2.0 * PI)))
        .collect();
    c[0] = Complex64::new(0.0, 0.0);
    c
}

#[test]
fn extraction_recovers_random_harmonic_polynomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let degree = rng.gen_range(1..=16);
        let h = random_poly(&mut rng, degree);
        let g = random_poly(&mut rng, degree);
        let f = HarmonicMap::new(
            AnalyticSeries::new(h.clone()),
            AnalyticSeries::new(g.clone()),
        );
        let got = extract_coefficients(|z| f.eval(z), 16, 0.5, 256).unwrap();
        for pair in &got {
            let want_a = h.get(pair.n).copied().unwrap_or_default();
            let want_b = g.get(pair.n).copied().unwrap_or_default();
            assert!(
                (pair.a - want_a).norm() < 1e-11,
                "n = {}: {} vs {}",
                pair.n,
                pair.a,
                want_a
            );
            assert!(
                (pair.b - want_b).norm() < 1e-11,
                "n = {}: {} vs {}",
                pair.n,
                pair.b,
                want_b
            );
        }
    }
}

/// First sign change of `phi` on a uniform grid of `(0, 1)`.
fn family1_grid_oracle(spec: &RadiusSpec, points: usize) -> f64 {
    let step = 1.0 / points as f64;
    (1..points)
        .map(|k| k as f64 * step)
        .find(|&r| spec.phi(r) <= 0.0)
        .map_or(1.0, |r| r - 0.5 * step)
}

#[test]
fn family1_matches_grid_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..10 {
        let spec = RadiusSpec::family1(
            rng.gen_range(0.1..1.0),
            rng.gen_range(0.1..5.0),
            rng.gen_range(0.1..10.0),
            rng.gen_range(0.1..10.0),
        );
        let got = family1_solve(&spec, SolverOptions::default()).unwrap();
        let want = family1_grid_oracle(&spec, 1_000_000);
        assert!(
            (got.rho - want).abs() <= 1e-6,
            "{spec:?}: {} vs {want}",
            got.rho
        );
    }
}

#[test]
fn family2_matches_quadratic_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let (alpha, beta): (f64, f64) = (rng.gen_range(0.01..3.0), rng.gen_range(0.01..30.0));
        // smaller root of (alpha + 3 beta) r^2 - (2 alpha + 4 beta) r + alpha
        let (a, b, c) = (alpha + 3.0 * beta, -(2.0 * alpha + 4.0 * beta), alpha);
        let want = (-b - (b * b - 4.0 * a * c).sqrt()) / (2.0 * a);
        let got = family2_solve(&RadiusSpec::family2(alpha, beta)).unwrap();
        assert!(
            (got.rho - want).abs() < 1e-12 * want.max(1.0),
            "{alpha} {beta}"
        );
    }
}

#[test]
fn single_bound_rows_shrink_as_bound_grows() {
    use TheoremId::*;
    for id in [A, B, F, G, T210, T210p, C212, C212p] {
        let mut prev = f64::INFINITY;
        for k in 0..60 {
            let m = 1.0 + 0.15 * k as f64;
            let r = theorem_radius(id, TheoremParams::single(m)).unwrap();
            assert!(r.rho <= prev, "{id} not monotone at M = {m}");
            prev = r.rho;
        }
    }
}

#[test]
fn two_bound_rows_shrink_in_each_bound() {
    use TheoremId::*;
    for id in [D, E, T26, T26p, T28, T28p] {
        for &m1 in &[0.5, 1.0, 3.0] {
            let mut prev = f64::INFINITY;
            for k in 0..40 {
                let r = theorem_radius(id, TheoremParams::pair(m1, 1.0 + 0.2 * k as f64)).unwrap();
                assert!(r.rho <= prev, "{id} not monotone in M2");
                prev = r.rho;
            }
        }
        let mut prev = f64::INFINITY;
        for k in 1..40 {
            let r = theorem_radius(id, TheoremParams::pair(0.1 * k as f64, 2.0)).unwrap();
            assert!(r.rho < prev, "{id} not monotone in M1");
            prev = r.rho;
        }
    }
}

#[test]
fn sharp_rows_are_continuous_at_unit_bound() {
    use TheoremId::*;
    // beta grows like sqrt(M - 1) for the rows with sqrt(2M^2 - 2), and the
    // smaller root then leaves 1 like sqrt(beta), so the gap is O(eps^(1/4))
    for id in [F, G, T210, T210p, C212, C212p] {
        let mut prev_gap = f64::INFINITY;
        for eps in [1e-2, 1e-4, 1e-6, 1e-8, 1e-12, 1e-14] {
            let r = theorem_radius(id, TheoremParams::single(1.0 + eps)).unwrap();
            let gap = 1.0 - r.rho;
            assert!(gap >= 0.0 && gap < prev_gap, "{id} at 1 + {eps}");
            assert!(gap <= 4.0 * eps.powf(0.25), "{id} at 1 + {eps}: gap {gap}");
            prev_gap = gap;
        }
    }
}

#[test]
fn kernel_series_match_closed_forms() {
    let z = Complex64::new(0.1, 0.0);
    for k in [
        Kernel::Extremal {
            m: 2.0,
            a: 1.0,
            n: 2,
        },
        Kernel::Extremal {
            m: 2.0,
            a: 0.7,
            n: 4,
        },
        Kernel::StripLog { m: 2.0, power: 1 },
        Kernel::StripLog { m: 2.0, power: 3 },
    ] {
        let s = k.series(64).unwrap();
        assert!((s.eval(z) - k.value(z)).norm() <= 1e-12, "{k:?}");
        assert!(
            (s.eval_derivative(z) - k.derivative(z)).norm() <= 1e-12,
            "{k:?}"
        );
    }
}

#[test]
fn classical_extremal_matches_symbolic_derivative() {
    // f = M z (1 - M z) / (M - z), f' = M^2 (1 - 2 M z + z^2) / (M - z)^2
    let m = 2.0;
    let k = Kernel::Extremal { m, a: 1.0, n: 2 };
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..100 {
        let z = Complex64::from_polar(0.95 * rng.gen::<f64>(), rng.gen_range(0.0..2.0 * PI));
        let one = Complex64::new(1.0, 0.0);
        let want = m * m * (one - 2.0 * m * z + z * z) / ((m - z) * (m - z));
        assert!((k.derivative(z) - want).norm() < 1e-13);
    }
}

proptest! {
    #[test]
    fn family1_root_brackets_sign_change(
        lam in 0.05f64..1.0, m1 in 0.0f64..5.0, c1 in 0.0f64..10.0, c2 in 0.01f64..10.0,
    ) {
        let spec = RadiusSpec::family1(lam, m1, c1, c2);
        let r = family1_solve(&spec, SolverOptions::default()).unwrap();
        prop_assert!(r.rho > 0.0 && r.rho < 1.0);
        prop_assert!(spec.phi(r.rho - 1e-9) > 0.0);
        prop_assert!(spec.phi(r.rho + 1e-9) < 0.0);
        prop_assert!(r.sigma <= lam * r.rho);
    }

    #[test]
    fn family2_root_zeroes_quadratic(alpha in 0.01f64..3.0, beta in 0.0f64..30.0) {
        let spec = RadiusSpec::family2(alpha, beta);
        let r = family2_solve(&spec).unwrap();
        prop_assert_eq!(spec.family, Family::II);
        prop_assert!(spec.quadratic_residual(r.rho).abs() <= 1e-12 * (alpha + beta));
        prop_assert!(r.sigma <= alpha * r.rho.powi(3) + 1e-15);
    }

    #[test]
    fn jacobian_is_product_of_stretches(
        re in -0.9f64..0.9, im in -0.9f64..0.9, m in 1.0f64..5.0,
    ) {
        let z = Complex64::new(re, im);
        prop_assume!(z.norm() < 0.95);
        let f = HarmonicMap::new(Kernel::StripLog { m, power: 1 }, Kernel::Extremal { m, a: 1.0, n: 2 });
        let t = f.distortion(z);
        let prod = t.big_lambda * t.lambda;
        prop_assert!((t.jacobian.abs() - prod).abs() <= 1e-14 * prod.max(f64::MIN_POSITIVE));
    }
}
