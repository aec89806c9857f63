//! Refinement studies in time, space and for the scalar test equation.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{fourier_coefficients, DEFAULT_L_MAX, DEFAULT_QUAD_TOL};
use crate::heat::{build_propagator, mesh_ratio};
use crate::hopf_cole::forward_transform;
use crate::metrics::convergence_order;
use crate::scheme::scalar_global_error_exact;
use crate::spatial::{assemble_d, eigenvalue_d, GridSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StudyMode {
    Time,
    Space,
    Ode,
}

impl std::str::FromStr for StudyMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "time" => Ok(Self::Time),
            "space" => Ok(Self::Space),
            "ode" => Ok(Self::Ode),
            other => Err(Error::Domain(format!(
                "unknown study `{other}` (expected time, space or ode)"
            ))),
        }
    }
}

/// Parameters of a study on `w0 = sin(pi x)` over `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StudySpec {
    pub mode: StudyMode,
    pub nu: f64,
    pub t_end: f64,
    /// Spatial intervals for the time study, time steps for the space study.
    pub fixed: usize,
    /// Refinement levels: `M = 2^k` (time), `N = 2^k` (space), `h = 2^-k` (ode).
    pub levels: Vec<u32>,
}

impl StudySpec {
    pub fn default_for(mode: StudyMode) -> Self {
        match mode {
            StudyMode::Time => Self {
                mode,
                nu: 0.2,
                t_end: 2.0,
                fixed: 16,
                levels: vec![1, 2, 3, 4, 5],
            },
            StudyMode::Space => Self {
                mode,
                nu: 2.0,
                t_end: 0.1,
                fixed: 1000,
                levels: vec![3, 4, 5, 6, 7],
            },
            StudyMode::Ode => Self {
                mode,
                nu: 1.0,
                t_end: 1.0,
                fixed: 0,
                levels: vec![3, 4, 5, 6, 7],
            },
        }
    }

    /// Step size at refinement level `k`.
    pub fn step(&self, k: u32) -> f64 {
        let n = (1u64 << k) as f64;
        match self.mode {
            StudyMode::Time => self.t_end / n,
            StudyMode::Space | StudyMode::Ode => 1.0 / n,
        }
    }

    /// Error at level `k`.
    pub fn error(&self, k: u32) -> Result<f64> {
        match self.mode {
            StudyMode::Time => time_error(self.nu, self.fixed, self.t_end, 1 << k),
            StudyMode::Space => space_error(self.nu, 1 << k, self.t_end, self.fixed),
            StudyMode::Ode => Ok(scalar_global_error_exact(k)),
        }
    }
}

/// One row of a refinement study.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StudyRow {
    pub step: f64,
    pub error: f64,
    /// Observed order against the previous row.
    pub order: Option<f64>,
}

/// Attaches observed orders to `(step, error)` pairs.
pub fn study_rows(errors: &[(f64, f64)]) -> Result<Vec<StudyRow>> {
    let orders = if errors.len() >= 2 {
        convergence_order(errors)?
    } else {
        Vec::new()
    };
    Ok(errors
        .iter()
        .enumerate()
        .map(|(i, &(step, error))| StudyRow {
            step,
            error,
            order: if i == 0 { None } else { orders[i - 1] },
        })
        .collect())
}

/// Exact solution of `Psi' = -(rho_total / T) D Psi` at `T`, through the cosine
/// eigenbasis of `D` (orthogonal under trapezoid weights).
pub fn semi_discrete_exact(psi0: &[f64], rho_total: f64) -> Result<Vec<f64>> {
    if psi0.len() < 5 {
        return Err(Error::Dimension {
            expected: 5,
            got: psi0.len(),
        });
    }
    let n = psi0.len() - 1;
    let nf = n as f64;
    let weight = |i: usize| if i == 0 || i == n { 0.5 } else { 1.0 };
    let cosines =
        |l: usize| (0..=n).map(move |i| ((l * i % (2 * n)) as f64 * PI / nf).cos());
    let mut out = vec![0.0; n + 1];
    for l in 0..=n {
        let c: f64 = cosines(l)
            .zip(psi0)
            .enumerate()
            .map(|(i, (v, p))| weight(i) * v * p)
            .sum::<f64>()
            * weight(l)
            * 2.0
            / nf;
        let amp = c * (-rho_total * eigenvalue_d(n, l)).exp();
        for (o, v) in out.iter_mut().zip(cosines(l)) {
            *o += amp * v;
        }
    }
    Ok(out)
}

/// Max-norm error of `M` steps against the exact semi-discrete solution on a
/// fixed grid of `n` intervals.
pub fn time_error(nu: f64, n: usize, t_end: f64, m: usize) -> Result<f64> {
    let grid = GridSpec::new(0.0, 1.0, n, 0.0, t_end, m)?;
    let w0 = |x: f64| (PI * x).sin();
    let (s0, _) = forward_transform(&w0, nu, &grid)?;
    let p = build_propagator(&assemble_d(n)?, nu, &grid)?;
    let numeric = p.evolve(&s0, m)?;
    let reference = semi_discrete_exact(&s0.psi, mesh_ratio(nu, &grid) * m as f64)?;
    Ok(max_diff(&numeric.psi, &reference))
}

/// Max-norm error in `psi` against the Fourier series at `t_end`, for `n`
/// intervals and `m` time steps.
pub fn space_error(nu: f64, n: usize, t_end: f64, m: usize) -> Result<f64> {
    let grid = GridSpec::new(0.0, 1.0, n, 0.0, t_end, m)?;
    let w0 = |x: f64| (PI * x).sin();
    let (s0, ctx) = forward_transform(&w0, nu, &grid)?;
    let p = build_propagator(&assemble_d(n)?, nu, &grid)?;
    let numeric = p.evolve(&s0, m)?;
    let series = fourier_coefficients(&w0, nu, DEFAULT_L_MAX, DEFAULT_QUAD_TOL, t_end)?;
    // Both sides are exp(-W/nu) up to their own normalization.
    let rescale = (series.log_shift - ctx.log_shift).exp();
    let reference = grid
        .nodes()
        .iter()
        .map(|&x| series.psi(x, t_end).map(|v| v.value * rescale))
        .collect::<Result<Vec<f64>>>()?;
    Ok(max_diff(&numeric.psi, &reference))
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
