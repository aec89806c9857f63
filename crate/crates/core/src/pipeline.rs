//! End-to-end solve: transform, evolve, invert, compare.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heat::{build_propagator, cn_build, mesh_ratio, Integrator};
use crate::hopf_cole::{forward_transform, inverse_transform};
use crate::metrics::{error_norms, ErrorReport};
use crate::problems::{get_problem, ExactSolution, ProblemId};
use crate::spatial::{assemble_d, GridSpec};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub problem: ProblemId,
    pub nu: f64,
    pub h: f64,
    pub tau: f64,
    /// Absolute report times, each `t_init + k tau` for some integer `k >= 0`.
    pub times: Vec<f64>,
    pub integrator: Integrator,
    /// Compare against the reference solution when one exists.
    pub with_exact: bool,
}

impl RunConfig {
    /// Configuration from the first registered parameter set of `problem`.
    pub fn default_for(problem: ProblemId) -> Self {
        let set = &get_problem(problem).defaults[0];
        Self {
            problem,
            nu: set.nu,
            h: set.h,
            tau: set.tau,
            times: set.times.clone(),
            integrator: Integrator::Hoc7,
            with_exact: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Snapshot {
    pub t: f64,
    pub steps: usize,
    pub psi: Vec<f64>,
    pub w: Vec<f64>,
    pub errors: Option<ErrorReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub config: RunConfig,
    pub grid: GridSpec,
    pub rho: f64,
    pub x: Vec<f64>,
    pub snapshots: Vec<Snapshot>,
}

impl RunResult {
    pub fn snapshot_at(&self, t: f64) -> Option<&Snapshot> {
        self.snapshots
            .iter()
            .find(|s| (s.t - t).abs() <= 1e-9 * t.abs().max(1.0))
    }

    /// Numeric `w` at node `x` and time `t`, if both lie on the grid.
    pub fn w_at(&self, x: f64, t: f64) -> Option<f64> {
        let i = self.grid.index_of(x)?;
        Some(self.snapshot_at(t)?.w[i])
    }
}

fn step_count(t: f64, t_init: f64, tau: f64) -> Result<usize> {
    let span = t - t_init;
    let k = (span / tau).round();
    if k < 0.0 || (k * tau - span).abs() > 1e-9 * span.abs().max(tau) {
        return Err(Error::Domain(format!(
            "report time {t} is not t_init + k tau (t_init = {t_init}, tau = {tau})"
        )));
    }
    Ok(k as usize)
}

pub fn run(config: &RunConfig) -> Result<RunResult> {
    let problem = get_problem(config.problem);
    let nu = config.nu;
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(Error::Domain(format!("viscosity must be positive, got {nu}")));
    }
    if config.times.is_empty() {
        return Err(Error::Domain("no report times given".into()));
    }
    let t_init = problem.t_init;
    let mut times = config.times.clone();
    times.sort_by(f64::total_cmp);
    times.dedup();
    let steps: Vec<usize> = times
        .iter()
        .map(|&t| step_count(t, t_init, config.tau))
        .collect::<Result<_>>()?;
    let m = steps.iter().copied().max().unwrap_or(0).max(1);

    let (a0, a1) = problem.domain;
    let spatial = GridSpec::from_steps(a0, a1, config.h, t_init, t_init + 1.0, 1.0)?;
    let grid = GridSpec::new(a0, a1, spatial.n, t_init, t_init + m as f64 * config.tau, m)?;
    let x = grid.nodes();

    let w0 = |x: f64| problem.w0(x, nu);
    let (state0, _) = forward_transform(&w0, nu, &grid)?;
    let d = assemble_d(grid.n)?;
    let propagator = match config.integrator {
        Integrator::Hoc7 => build_propagator(&d, nu, &grid)?,
        Integrator::Cn => cn_build(&d, nu, &grid)?,
    };
    let states = propagator.evolve_with_snapshots(&state0, &steps)?;

    let exact = if config.with_exact {
        let t_min = times
            .iter()
            .copied()
            .filter(|&t| t > t_init)
            .fold(f64::INFINITY, f64::min);
        if t_min.is_finite() {
            Some(problem.exact_solution(nu, t_min)?)
        } else {
            None
        }
    } else {
        None
    };

    let mut snapshots = Vec::with_capacity(times.len());
    for ((&t, &k), state) in times.iter().zip(&steps).zip(states) {
        let w = inverse_transform(&state, nu, &grid)?;
        let errors = if !config.with_exact {
            None
        } else if k == 0 {
            let reference: Vec<f64> = x.iter().map(|&xi| w0(xi)).collect();
            Some(error_norms(&x, &w, &reference, grid.h())?)
        } else {
            match &exact {
                Some(sol) if !matches!(sol, ExactSolution::None) => {
                    let mut reference = Vec::with_capacity(x.len());
                    let mut reliable = true;
                    for &xi in &x {
                        let v = sol
                            .eval(xi, t)?
                            .expect("reference solution present");
                        reliable &= v.reliable();
                        reference.push(v.value);
                    }
                    let mut report = error_norms(&x, &w, &reference, grid.h())?;
                    report.reliable = reliable;
                    Some(report)
                }
                _ => None,
            }
        };
        snapshots.push(Snapshot {
            t,
            steps: k,
            psi: state.psi,
            w,
            errors,
        });
    }

    Ok(RunResult {
        config: config.clone(),
        grid,
        rho: mesh_ratio(nu, &grid),
        x,
        snapshots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_steps_reproduce_initial_data() {
        let mut cfg = RunConfig::default_for(ProblemId::Ex1);
        cfg.times = vec![0.0];
        let r = run(&cfg).unwrap();
        let s = &r.snapshots[0];
        assert_eq!(s.steps, 0);
        assert!(s.errors.as_ref().unwrap().linf < 2e-3);
    }

    #[test]
    fn incommensurate_time_rejected() {
        let mut cfg = RunConfig::default_for(ProblemId::Ex1);
        cfg.times = vec![0.00015];
        assert!(matches!(run(&cfg), Err(Error::Domain(_))));
    }

    #[test]
    fn indivisible_step_rejected() {
        let mut cfg = RunConfig::default_for(ProblemId::Ex1);
        cfg.h = 0.3;
        assert!(run(&cfg).is_err());
    }

    #[test]
    fn ex1_midpoint_early_time() {
        let mut cfg = RunConfig::default_for(ProblemId::Ex1);
        cfg.times = vec![0.01];
        let r = run(&cfg).unwrap();
        let s = &r.snapshots[0];
        assert_eq!(s.steps, 100);
        let e = s.errors.as_ref().unwrap();
        assert!(e.reliable);
        assert!(e.linf < 1e-3, "{}", e.linf);
    }

    #[test]
    fn shifted_start_compares_at_absolute_time() {
        let mut cfg = RunConfig::default_for(ProblemId::Ex3);
        cfg.h = 0.001;
        cfg.times = vec![1.1];
        let r = run(&cfg).unwrap();
        let e = r.snapshots[0].errors.as_ref().unwrap();
        assert_eq!(r.snapshots[0].steps, 10);
        assert!(e.linf < 5e-3, "{}", e.linf);
    }
}
