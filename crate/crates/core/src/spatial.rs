//! Uniform space-time grids and the fourth-order Neumann operator `D`.
//!
//! `D` is `-12 h^2` times the five-point second-difference stencil
//! `(-1, 16, -30, 16, -1) / 12h^2`, with the two boundary rows folded through
//! the even ghost-point reflection `psi_{-k} = psi_k`, `psi_{N+k} = psi_{N-k}`.

use serde::{Deserialize, Serialize};

use crate::banded::BandedMatrix;
use crate::error::{Error, Result};

/// Uniform grid on `[a0, a1] x [t0, t_end]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub a0: f64,
    pub a1: f64,
    /// Number of spatial sub-intervals.
    pub n: usize,
    pub t0: f64,
    pub t_end: f64,
    /// Number of time steps.
    pub m: usize,
}

impl GridSpec {
    pub fn new(a0: f64, a1: f64, n: usize, t0: f64, t_end: f64, m: usize) -> Result<Self> {
        if !(a1 > a0) || !a0.is_finite() || !a1.is_finite() {
            return Err(Error::Domain(format!("need a1 > a0, got [{a0}, {a1}]")));
        }
        if n < 4 {
            return Err(Error::Domain(format!(
                "pentadiagonal stencil needs N >= 4, got {n}"
            )));
        }
        if m == 0 {
            return Err(Error::Domain("need at least one time step".into()));
        }
        if !(t_end > t0) {
            return Err(Error::Domain(format!("need T > t0, got {t_end} <= {t0}")));
        }
        Ok(Self {
            a0,
            a1,
            n,
            t0,
            t_end,
            m,
        })
    }

    /// Grid from step sizes; `h` and `tau` must divide their intervals to `1e-9` relative.
    pub fn from_steps(a0: f64, a1: f64, h: f64, t0: f64, t_end: f64, tau: f64) -> Result<Self> {
        let n = divide_evenly(a1 - a0, h, "h")?;
        let m = divide_evenly(t_end - t0, tau, "tau")?;
        Self::new(a0, a1, n, t0, t_end, m)
    }

    pub fn h(&self) -> f64 {
        (self.a1 - self.a0) / self.n as f64
    }

    pub fn tau(&self) -> f64 {
        (self.t_end - self.t0) / self.m as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        if i == self.n {
            self.a1
        } else {
            self.a0 + i as f64 * self.h()
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..=self.n).map(|i| self.x(i)).collect()
    }

    /// Nearest grid index to `x`, if `x` lies on a node to `1e-9 h`.
    pub fn index_of(&self, x: f64) -> Option<usize> {
        let k = ((x - self.a0) / self.h()).round();
        if k < 0.0 || k > self.n as f64 {
            return None;
        }
        let k = k as usize;
        ((self.x(k) - x).abs() <= 1e-9 * self.h()).then_some(k)
    }
}

fn divide_evenly(length: f64, step: f64, name: &str) -> Result<usize> {
    if !(step > 0.0) || !(length > 0.0) {
        return Err(Error::Domain(format!("{name} must be positive")));
    }
    let k = (length / step).round();
    if k < 1.0 || ((k * step - length) / length).abs() > 1e-9 {
        return Err(Error::Domain(format!(
            "{name} = {step} does not divide the interval length {length}"
        )));
    }
    Ok(k as usize)
}

/// The `(N+1) x (N+1)` pentadiagonal operator `D`.
pub fn assemble_d(n: usize) -> Result<BandedMatrix> {
    if n < 4 {
        return Err(Error::Domain(format!("D needs N >= 4, got {n}")));
    }
    let dim = n + 1;
    let mut d = BandedMatrix::zeros(dim, 2, 2);
    for i in 2..dim - 2 {
        for (k, v) in [1.0, -16.0, 30.0, -16.0, 1.0].into_iter().enumerate() {
            d.set(i, i + k - 2, v);
        }
    }
    let top: [&[f64]; 2] = [&[30.0, -32.0, 2.0], &[-16.0, 31.0, -16.0, 1.0]];
    for (i, row) in top.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            d.set(i, j, v);
            d.set(n - i, n - j, v);
        }
    }
    Ok(d)
}

/// Closed-form spectrum `30 + 2 cos(2 l pi / N) - 32 cos(l pi / N)`, `l = 0..=N`.
pub fn eigenvalues_d(n: usize) -> Result<Vec<f64>> {
    if n < 4 {
        return Err(Error::Domain(format!("D needs N >= 4, got {n}")));
    }
    Ok((0..=n).map(|l| eigenvalue_d(n, l)).collect())
}

pub fn eigenvalue_d(n: usize, l: usize) -> f64 {
    let theta = l as f64 * std::f64::consts::PI / n as f64;
    30.0 + 2.0 * (2.0 * theta).cos() - 32.0 * theta.cos()
}

/// Trapezoid weights `(1/2, 1, ..., 1, 1/2)`, the left null vector of `D`.
pub fn trapezoid_weights(n: usize) -> Vec<f64> {
    let mut w = vec![1.0; n + 1];
    w[0] = 0.5;
    w[n] = 0.5;
    w
}

/// `h (psi_0/2 + psi_1 + ... + psi_{N-1} + psi_N/2)`, summed left to right.
pub fn trapezoid_sum(values: &[f64], h: f64) -> f64 {
    let n = values.len() - 1;
    let inner: f64 = values[1..n].iter().sum();
    h * (0.5 * values[0] + inner + 0.5 * values[n])
}
