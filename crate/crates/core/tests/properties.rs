use hoc7_core::banded::{BandLu, BandedMatrix};
use hoc7_core::heat::{HeatState, Integrator, Propagator};
use hoc7_core::hopf_cole::{forward_transform, inverse_transform};
use hoc7_core::scheme::{psi_eval, stability_cascade};
use hoc7_core::spatial::{assemble_d, trapezoid_sum, GridSpec};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn stability_function_bounded_on_positive_axis(s in 0.0f64..1e8) {
        prop_assert!(psi_eval(s).abs() <= 1.0);
    }

    #[test]
    fn steps_conserve_trapezoid_mass(
        psi in proptest::collection::vec(0.01f64..10.0, 9..40),
        log_rho in -3.0f64..3.0,
    ) {
        let n = psi.len() - 1;
        let rho = 10f64.powf(log_rho);
        let p = Propagator::with_rho(&assemble_d(n).unwrap(), rho, 0.1, Integrator::Hoc7).unwrap();
        let before = trapezoid_sum(&psi, 1.0);
        let steps = 5;
        let after = p.evolve(&HeatState::new(psi, 0.0), steps).unwrap();
        let drift = (trapezoid_sum(&after.psi, 1.0) - before).abs() / before;
        // Round-off in each quadratic solve scales with its condition number.
        let kappa = stability_cascade()
            .iter()
            .map(|f| f.den.iter().rev().fold(0.0, |acc, c| acc * 64.0 * rho + c) / f.den[0])
            .fold(1.0, f64::max);
        let tol = (steps * (n + 1)) as f64 * f64::EPSILON * kappa;
        prop_assert!(drift <= tol, "drift {} tol {}", drift, tol);
    }

    #[test]
    fn steps_do_not_grow_the_trapezoid_energy(
        psi in proptest::collection::vec(-1.0f64..1.0, 9..40),
        log_rho in -3.0f64..3.0,
    ) {
        // In the cosine basis every mode is multiplied by a factor of modulus <= 1.
        let n = psi.len() - 1;
        let energy = |v: &[f64]| {
            let sq: Vec<f64> = v.iter().map(|x| x * x).collect();
            trapezoid_sum(&sq, 1.0)
        };
        let p = Propagator::with_rho(&assemble_d(n).unwrap(), 10f64.powf(log_rho), 0.1, Integrator::Hoc7).unwrap();
        let e0 = energy(&psi);
        let after = p.step(&HeatState::new(psi, 0.0)).unwrap();
        prop_assert!(energy(&after.psi) <= e0 * (1.0 + 1e-12) + 1e-300);
    }

    #[test]
    fn band_lu_solves_dominant_systems(
        n in 5usize..30,
        seed in proptest::collection::vec(-1.0f64..1.0, 200),
    ) {
        let mut a = BandedMatrix::zeros(n, 2, 3);
        let mut k = 0;
        for i in 0..n {
            for j in i.saturating_sub(2)..(i + 4).min(n) {
                let v = if i == j { 8.0 } else { seed[k % seed.len()] };
                a.set(i, j, v);
                k += 1;
            }
        }
        let x: Vec<f64> = (0..n).map(|i| seed[(i * 7) % seed.len()]).collect();
        let b = a.matvec(&x).unwrap();
        let got = BandLu::factor(&a).unwrap().solve(&b).unwrap();
        for (g, e) in got.iter().zip(&x) {
            prop_assert!((g - e).abs() < 1e-12);
        }
    }

    #[test]
    fn transform_keeps_psi_positive_and_bounded(
        amp in -5.0f64..5.0,
        log_nu in -3.0f64..0.5,
        n in 8usize..64,
    ) {
        let nu = 10f64.powf(log_nu);
        let grid = GridSpec::new(0.0, 1.0, n, 0.0, 1.0, 1).unwrap();
        let w0 = |x: f64| amp * (std::f64::consts::PI * x).sin();
        let (s, _) = forward_transform(&w0, nu, &grid).unwrap();
        prop_assert!(s.psi.iter().all(|&v| v >= 0.0 && v <= 1.0));
        prop_assert_eq!(s.psi.iter().copied().fold(0.0, f64::max), 1.0);
        if s.psi.iter().all(|&v| v > 0.0) {
            let w = inverse_transform(&s, nu, &grid).unwrap();
            prop_assert_eq!(w[0], 0.0);
            prop_assert_eq!(w[n], 0.0);
        }
    }
}
