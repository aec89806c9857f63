//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::time::{Duration, Instant};

use hoc7_core::heat::{build_propagator, HeatState, Integrator, Propagator};
use hoc7_core::hopf_cole::forward_transform;
use hoc7_core::pipeline::{run, RunConfig, RunResult};
use hoc7_core::problems::ProblemId;
use hoc7_core::published::{table, PRINTED_DENOMINATOR};
use hoc7_core::rational::{int, Rational};
use hoc7_core::scheme::{
    hermite_coefficients, psi_eval, scalar_global_error_exact, stability_boundary,
    stability_function, uniform_angles,
};
use hoc7_core::spatial::{assemble_d, eigenvalues_d, trapezoid_sum, GridSpec};
use nalgebra::DMatrix;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn within(elapsed: Duration, limit_secs: u64) -> bool {
    elapsed <= Duration::from_secs(limit_secs)
}

fn table_run(id: u8, times: Vec<f64>, integrator: Integrator) -> RunResult {
    let tab = table(id).unwrap();
    let cfg = RunConfig {
        problem: tab.problem,
        nu: tab.nu,
        h: tab.h,
        tau: tab.tau,
        times,
        integrator,
        with_exact: true,
    };
    run(&cfg).expect("table run")
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let psi = hoc7_core::scheme::derive_stability_function();
    let den: Vec<Rational> = (0..7).map(|k| psi.den.coeff(k)).collect();
    let mismatched: Vec<String> = PRINTED_DENOMINATOR
        .iter()
        .enumerate()
        .filter(|(k, &p)| den[*k] != int(p))
        .map(|(k, &p)| format!("s^{k}: derived {} printed {p}", den[k]))
        .collect();
    let s2 = psi.num.coeff(2);
    let s2_resolved = s2 == int(540 * 84);
    let mut hermite_ok = true;
    for k in 1..=5 {
        let st = hermite_coefficients(k).unwrap();
        hermite_ok &= &st.coeffs[0] + &st.coeffs[1] == int(1);
        for d in 0..=5 {
            let target = num_traits::Pow::pow(st.theta.clone(), d);
            hermite_ok &= st.apply_to_monomial(d) == target;
        }
    }
    let fast = within(start.elapsed(), 1);
    outcome(
        mismatched.is_empty() && s2_resolved && hermite_ok && fast,
        format!(
            "denominator mismatches [{}]; numerator s^2 = {s2}; hermite ok = {hermite_ok}; {:.2?}",
            mismatched.join(", "),
            start.elapsed()
        ),
    )
}

fn ac2() -> Outcome {
    let start = Instant::now();
    let errors: Vec<f64> = (3..=7).map(scalar_global_error_exact).collect();
    let orders: Vec<f64> = errors.windows(2).map(|p| (p[0] / p[1]).log2()).collect();
    let ok = orders.iter().all(|o| (6.5..=7.5).contains(o));
    let fast = within(start.elapsed(), 1);
    outcome(
        ok && fast,
        format!("orders {orders:.3?}; {:.2?}", start.elapsed()),
    )
}

fn ac3() -> Outcome {
    let start = Instant::now();
    let tab = table(1).unwrap();
    let r = table_run(1, vec![0.1], Integrator::Hoc7);
    let mut worst: f64 = 0.0;
    for e in tab.entries.iter().filter(|e| e.t == 0.1) {
        worst = worst.max((r.w_at(e.x, 0.1).unwrap() - e.present).abs());
    }
    let err = r.snapshots[0].errors.as_ref().unwrap();
    let bound = 2.0 * tab.norm_at(0.1).unwrap().linf;
    let ok = worst <= 5e-5 && err.reliable && err.linf <= bound;
    outcome(
        ok && within(start.elapsed(), 30),
        format!(
            "max |w - printed| = {worst:.3e}; Linf = {:.5e} (bound {bound:.5e}); {:.2?}",
            err.linf,
            start.elapsed()
        ),
    )
}

fn ac4() -> Outcome {
    let start = Instant::now();
    let e = *table(2).unwrap().entry(0.5, 1.0).unwrap();
    let r = table_run(2, vec![1.0], Integrator::Hoc7);
    let w = r.w_at(0.5, 1.0).unwrap();
    let fem = e.others.iter().find(|o| o.0 == "FEM").unwrap().1;
    let close = (w - e.present).abs() <= 5e-5;
    let better = (w - e.exact).abs() < (fem - e.exact).abs();
    outcome(
        close && better && within(start.elapsed(), 60),
        format!(
            "w(0.5, 1) = {w:.7}; |w - exact| = {:.2e} vs FEM {:.2e}; {:.2?}",
            (w - e.exact).abs(),
            (fem - e.exact).abs(),
            start.elapsed()
        ),
    )
}

fn ac5() -> Outcome {
    let start = Instant::now();
    let tab = table(7).unwrap();
    let r = table_run(7, vec![1.7, 3.0], Integrator::Hoc7);
    let linf = r.snapshot_at(1.7).unwrap().errors.as_ref().unwrap().linf;
    let competitor = tab.norm_at(1.7).unwrap().others[0].1;
    let printed = tab.entry(0.2, 3.0).unwrap().present;
    let w = r.w_at(0.2, 3.0).unwrap();
    let ok = 1e3 * linf <= 1.0 && 10.0 * linf <= competitor && (w - printed).abs() <= 5e-5;
    outcome(
        ok && within(start.elapsed(), 120),
        format!(
            "1e3 Linf(1.7) = {:.5}; competitor {:.5}; w(0.2, 3) = {w:.6}; {:.2?}",
            1e3 * linf,
            1e3 * competitor,
            start.elapsed()
        ),
    )
}

fn ac6() -> Outcome {
    let mut worst_dev: f64 = 0.0;
    let mut min_re = f64::INFINITY;
    let mut max_im: f64 = 0.0;
    for n in [8, 16, 32] {
        let d = assemble_d(n).unwrap().to_dense();
        let m = DMatrix::from_fn(n + 1, n + 1, |i, j| d[i][j]);
        let eig = m.complex_eigenvalues();
        let mut dense: Vec<f64> = eig.iter().map(|z| z.re).collect();
        dense.sort_by(f64::total_cmp);
        let mut closed = eigenvalues_d(n).unwrap();
        closed.sort_by(f64::total_cmp);
        for (a, b) in dense.iter().zip(&closed) {
            worst_dev = worst_dev.max((a - b).abs());
        }
        min_re = eig.iter().map(|z| z.re).fold(min_re, f64::min);
        max_im = eig.iter().map(|z| z.im.abs()).fold(max_im, f64::max);
    }
    outcome(
        worst_dev <= 1e-10 && min_re >= -1e-10 && max_im <= 1e-10,
        format!("max deviation {worst_dev:.2e}; min eigenvalue {min_re:.2e}; max |imag| {max_im:.2e}"),
    )
}

fn ac7() -> Outcome {
    let lambdas = eigenvalues_d(64).unwrap();
    let mut worst: f64 = 0.0;
    for k in 0..25 {
        let rho = 10f64.powf(-6.0 + 12.0 * k as f64 / 24.0);
        for l in &lambdas {
            worst = worst.max(psi_eval(rho * l).abs());
        }
    }
    let psi = stability_function();
    let at_zero = psi.eval_exact(&int(0)) == int(1) && psi_eval(0.0) == 1.0;
    let far = psi_eval(1e6).abs();
    let locus = stability_boundary(&uniform_angles(720)).unwrap();
    let mut locus_worst: f64 = 0.0;
    let mut locus_failures = 0;
    for slice in &locus {
        match slice {
            Ok(s) => locus_worst = locus_worst.max(s.residual),
            Err(_) => locus_failures += 1,
        }
    }
    outcome(
        worst <= 1.0 && at_zero && far <= 1e-15 && locus_failures == 0 && locus_worst <= 1e-10,
        format!(
            "max |Psi(rho lambda)| = {worst:.6}; Psi(0) exact = {at_zero}; |Psi(1e6)| = {far:.2e}; locus residual {locus_worst:.2e}, failures {locus_failures}"
        ),
    )
}

fn ac8() -> Outcome {
    let tab = table(1).unwrap();
    let grid = GridSpec::from_steps(0.0, 1.0, tab.h, 0.0, 0.1, tab.tau).unwrap();
    let d = assemble_d(grid.n).unwrap();
    let p: Propagator = build_propagator(&d, tab.nu, &grid).unwrap();
    let w0 = |x: f64| (std::f64::consts::PI * x).sin();
    let (s0, _) = forward_transform(&w0, tab.nu, &grid).unwrap();
    let before = trapezoid_sum(&s0.psi, grid.h());
    let s1 = p.evolve(&s0, 1000).unwrap();
    let drift = ((trapezoid_sum(&s1.psi, grid.h()) - before) / before).abs();

    let n = grid.n;
    let sym: Vec<f64> = grid
        .nodes()
        .iter()
        .map(|x| (-10.0 * (x - 0.5) * (x - 0.5)).exp())
        .collect();
    let s2 = p.evolve(&HeatState::new(sym, 0.0), 1000).unwrap();
    let asym = (0..=n)
        .map(|i| (s2.psi[i] - s2.psi[n - i]).abs())
        .fold(0.0, f64::max);
    outcome(
        drift <= 1e-11 && asym <= 1e-12,
        format!("relative drift {drift:.2e}; centrosymmetry defect {asym:.2e}"),
    )
}

fn sign_changes(values: &[f64]) -> usize {
    let diffs: Vec<f64> = values.windows(2).map(|p| p[1] - p[0]).collect();
    diffs.windows(2).filter(|p| p[0] * p[1] < 0.0).count()
}

fn ac9() -> Outcome {
    let cfg = |integrator| RunConfig {
        problem: ProblemId::Ex5,
        nu: 2.0,
        h: 0.0125,
        tau: 0.01,
        times: vec![0.1],
        integrator,
        with_exact: true,
    };
    let hoc = run(&cfg(Integrator::Hoc7)).unwrap();
    let cn = run(&cfg(Integrator::Cn)).unwrap();
    let linf = |r: &RunResult| r.snapshots[0].errors.as_ref().unwrap().linf;
    let tail = |r: &RunResult| {
        let w = &r.snapshots[0].w;
        sign_changes(&w[w.len() - 10..])
    };
    let (e_hoc, e_cn) = (linf(&hoc), linf(&cn));
    let (sc_hoc, sc_cn) = (tail(&hoc), tail(&cn));
    outcome(
        e_cn >= 5.0 * e_hoc && sc_cn >= 3 && sc_hoc <= 1,
        format!(
            "Linf CN {e_cn:.3e} vs hoc7 {e_hoc:.3e}; tail sign changes CN {sc_cn}, hoc7 {sc_hoc}"
        ),
    )
}

fn ac10() -> Outcome {
    let cfg = RunConfig {
        problem: ProblemId::Ex1,
        nu: 0.001,
        h: 0.0125,
        tau: 0.001,
        times: vec![10.0],
        integrator: Integrator::Hoc7,
        with_exact: true,
    };
    let r = match run(&cfg) {
        Ok(r) => r,
        Err(e) => return outcome(false, format!("run failed: {e}")),
    };
    let s = &r.snapshots[0];
    let finite = s.psi.iter().chain(&s.w).all(|v| v.is_finite());
    let positive = s.psi.iter().all(|&v| v > 0.0);
    let w_min = s.w.iter().copied().fold(f64::INFINITY, f64::min);
    let w_max = s.w.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let bounded = w_min >= 0.0 && w_max <= 1.05;
    let flagged = !s.errors.as_ref().unwrap().reliable;
    outcome(
        finite && positive && bounded && flagged,
        format!(
            "finite {finite}; psi > 0 {positive}; w in [{w_min:.3e}, {w_max:.4}]; reference flagged unreliable {flagged}"
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("AC1 coefficient oracle", ac1),
        ("AC2 ODE order", ac2),
        ("AC3 table 1", ac3),
        ("AC4 table 2", ac4),
        ("AC5 table 7", ac5),
        ("AC6 spectrum", ac6),
        ("AC7 stability", ac7),
        ("AC8 conservation and symmetry", ac8),
        ("AC9 inconsistent boundary data", ac9),
        ("AC10 small viscosity", ac10),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let o = check();
        failed += usize::from(!o.pass);
        println!("{} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
