//! Time stepping of the semi-discrete heat system `Psi' = -(nu / 24 h^2) D Psi`.
//!
//! With `rho = nu tau / (24 h^2)` the seventh-order scheme reads
//! `den(rho D) Psi_{j+1} = num(rho D) Psi_j`, where `num/den` is the derived
//! stability function. The step is applied as a cascade of real factors
//! `q_j(rho D)^{-1} p_j(rho D)` with quadratic `q_j`; factoring the sextic
//! `den(rho D)` directly loses about `(64 rho)^6` in conditioning.
//! Crank-Nicolson on the same `D` is kept as a baseline.

use serde::{Deserialize, Serialize};

use crate::banded::{BandLu, BandedMatrix};
use crate::error::{Error, Result};
use crate::scheme::{stability_cascade, stability_function};
use crate::spatial::{eigenvalue_d, GridSpec};

/// Time integrator applied to the semi-discrete system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Integrator {
    /// The seventh-order weakly L-stable scheme.
    Hoc7,
    /// Trapezoidal rule, A-stable but not L-stable.
    Cn,
}

impl std::str::FromStr for Integrator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hoc7" => Ok(Self::Hoc7),
            "cn" => Ok(Self::Cn),
            other => Err(Error::Domain(format!("unknown scheme `{other}`"))),
        }
    }
}

impl std::fmt::Display for Integrator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Hoc7 => "hoc7",
            Self::Cn => "cn",
        })
    }
}

/// One-step map `Psi_{j+1} = L1^{-1} L2 Psi_j`, with its solves factored once.
#[derive(Clone, Debug)]
pub struct Propagator {
    integrator: Integrator,
    rho: f64,
    tau: f64,
    l1: BandedMatrix,
    l2: BandedMatrix,
    solver: Solver,
}

#[derive(Clone, Debug)]
enum Solver {
    Identity,
    /// `L1` factored as a whole (Crank-Nicolson).
    Direct(BandLu),
    /// `p_j(rho D)` and the factors of `q_j(rho D)`.
    Cascade(Vec<(BandedMatrix, BandLu)>),
}

/// Grid values of the heat-equation unknown at time `t`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeatState {
    pub psi: Vec<f64>,
    pub t: f64,
}

impl HeatState {
    pub fn new(psi: Vec<f64>, t: f64) -> Self {
        Self { psi, t }
    }
}

/// `rho = nu tau / (24 h^2)`.
pub fn mesh_ratio(nu: f64, grid: &GridSpec) -> f64 {
    let h = grid.h();
    nu * grid.tau() / (24.0 * h * h)
}

/// Seventh-order propagator for `D` on `grid` with viscosity `nu`.
pub fn build_propagator(d: &BandedMatrix, nu: f64, grid: &GridSpec) -> Result<Propagator> {
    check_inputs(d, nu, grid)?;
    Propagator::with_rho(d, mesh_ratio(nu, grid), grid.tau(), Integrator::Hoc7)
}

/// Crank-Nicolson propagator `(I + rho/2 D) Psi_{j+1} = (I - rho/2 D) Psi_j`.
pub fn cn_build(d: &BandedMatrix, nu: f64, grid: &GridSpec) -> Result<Propagator> {
    check_inputs(d, nu, grid)?;
    Propagator::with_rho(d, mesh_ratio(nu, grid), grid.tau(), Integrator::Cn)
}

fn check_inputs(d: &BandedMatrix, nu: f64, grid: &GridSpec) -> Result<()> {
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(Error::Domain(format!("viscosity must be positive, got {nu}")));
    }
    if d.dim() != grid.n + 1 {
        return Err(Error::Dimension {
            expected: grid.n + 1,
            got: d.dim(),
        });
    }
    Ok(())
}

/// Coefficients of `c(rho s)` from those of `c(s)`.
fn scaled_by(c: &[f64], rho: f64) -> Vec<f64> {
    c.iter()
        .enumerate()
        .map(|(k, a)| a * rho.powi(k as i32))
        .collect()
}

impl Propagator {
    /// Builds the propagator for an explicit mesh ratio (`rho = 0` is allowed).
    pub fn with_rho(d: &BandedMatrix, rho: f64, tau: f64, integrator: Integrator) -> Result<Self> {
        if !(rho >= 0.0) || !rho.is_finite() {
            return Err(Error::Domain(format!("mesh ratio must be >= 0, got {rho}")));
        }
        let (l1, l2) = match integrator {
            Integrator::Hoc7 => {
                let psi = stability_function();
                (
                    d.polynomial(&scaled_by(psi.den_coeffs(), rho)),
                    d.polynomial(&scaled_by(psi.num_coeffs(), rho)),
                )
            }
            Integrator::Cn => (
                d.scale(0.5 * rho).add_identity(1.0),
                d.scale(-0.5 * rho).add_identity(1.0),
            ),
        };
        let solver = match integrator {
            _ if rho == 0.0 => Solver::Identity,
            Integrator::Hoc7 => Solver::Cascade(
                stability_cascade()
                    .iter()
                    .map(|f| {
                        let q = d.polynomial(&scaled_by(&f.den, rho));
                        Ok((d.polynomial(&scaled_by(&f.num, rho)), BandLu::factor(&q)?))
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
            Integrator::Cn => Solver::Direct(BandLu::factor(&l1)?),
        };
        Ok(Self {
            integrator,
            rho,
            tau,
            l1,
            l2,
            solver,
        })
    }

    pub fn integrator(&self) -> Integrator {
        self.integrator
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn dim(&self) -> usize {
        self.l1.dim()
    }

    pub fn l1(&self) -> &BandedMatrix {
        &self.l1
    }

    pub fn l2(&self) -> &BandedMatrix {
        &self.l2
    }

    /// Amplification `mu_l` of the `l`-th cosine mode of `D` (size `N = dim - 1`).
    pub fn amplification(&self, l: usize) -> f64 {
        let n = self.dim() - 1;
        self.amplification_of(eigenvalue_d(n, l))
    }

    /// Amplification of an eigenvalue `lambda` of `D`.
    pub fn amplification_of(&self, lambda: f64) -> f64 {
        let s = self.rho * lambda;
        match self.integrator {
            Integrator::Hoc7 => stability_function().eval(s),
            Integrator::Cn => (1.0 - 0.5 * s) / (1.0 + 0.5 * s),
        }
    }

    /// `max_l |mu_l|`.
    pub fn spectral_radius(&self) -> f64 {
        let n = self.dim() - 1;
        (0..=n)
            .map(|l| self.amplification(l).abs())
            .fold(0.0, f64::max)
    }

    pub fn step(&self, state: &HeatState) -> Result<HeatState> {
        if state.psi.len() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                got: state.psi.len(),
            });
        }
        let next = match &self.solver {
            Solver::Identity => state.psi.clone(),
            Solver::Direct(lu) => {
                let mut next = vec![0.0; self.dim()];
                self.l2.matvec_into(&state.psi, &mut next);
                lu.solve_in_place(&mut next);
                next
            }
            Solver::Cascade(factors) => {
                let mut current = state.psi.clone();
                let mut next = vec![0.0; self.dim()];
                for (p, q) in factors {
                    p.matvec_into(&current, &mut next);
                    q.solve_in_place(&mut next);
                    std::mem::swap(&mut current, &mut next);
                }
                current
            }
        };
        let t = state.t + self.tau;
        if let Some(index) = next.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { t, index });
        }
        Ok(HeatState { psi: next, t })
    }

    pub fn evolve(&self, state: &HeatState, steps: usize) -> Result<HeatState> {
        let mut current = state.clone();
        for _ in 0..steps {
            current = self.step(&current)?;
        }
        Ok(current)
    }

    /// Evolves through the sorted step counts in `record_at`, returning one
    /// snapshot per entry.
    pub fn evolve_with_snapshots(
        &self,
        state: &HeatState,
        record_at: &[usize],
    ) -> Result<Vec<HeatState>> {
        let mut out = Vec::with_capacity(record_at.len());
        let mut current = state.clone();
        let mut done = 0;
        for &target in record_at {
            if target < done {
                return Err(Error::Domain("snapshot steps must be non-decreasing".into()));
            }
            current = self.evolve(&current, target - done)?;
            done = target;
            out.push(current.clone());
        }
        Ok(out)
    }
}

/// Time-level `amplification` as a free function.
pub fn amplification(p: &Propagator, l: usize) -> f64 {
    p.amplification(l)
}
