//! The Hopf-Cole map between Burgers' equation `w_t + w w_x = (nu/2) w_xx`
//! and the heat equation `psi_t = (nu/2) psi_xx`, with `w = -nu psi_x / psi`.

use crate::error::{Error, Result};
use crate::heat::HeatState;
use crate::quadrature::{gauss_legendre5, gauss_legendre5_nodes};
use crate::spatial::GridSpec;

/// Record of a forward transform.
#[derive(Clone, Debug, PartialEq)]
pub struct TransformContext {
    pub nu: f64,
    pub grid: GridSpec,
    /// `-I(x_i) / nu` before the shift, with `I(x) = int_{a0}^{x} w0`.
    pub log_psi0: Vec<f64>,
    /// Maximum of `log_psi0`, subtracted so the largest `psi_0` equals 1.
    pub log_shift: f64,
}

/// `int_{a0}^{x_i} w0` for every node, one five-point Gauss-Legendre rule per cell.
pub fn cumulative_integral<F: Fn(f64) -> f64>(w0: &F, grid: &GridSpec) -> Result<Vec<f64>> {
    let nodes = grid.nodes();
    let mut out = Vec::with_capacity(nodes.len());
    let mut acc = 0.0;
    out.push(0.0);
    for cell in nodes.windows(2) {
        let (lo, hi) = (cell[0], cell[1]);
        if let Some(x) = gauss_legendre5_nodes(lo, hi)
            .into_iter()
            .find(|&x| !w0(x).is_finite())
        {
            return Err(Error::Domain(format!("initial data is not finite at x = {x}")));
        }
        acc += gauss_legendre5(w0, lo, hi);
        out.push(acc);
    }
    Ok(out)
}

/// Heat-equation initial data `psi_0 = exp(-(1/nu) int w0)` on the grid,
/// built in log space and normalized to a maximum of exactly 1.
pub fn forward_transform<F: Fn(f64) -> f64>(
    w0: &F,
    nu: f64,
    grid: &GridSpec,
) -> Result<(HeatState, TransformContext)> {
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(Error::Domain(format!("viscosity must be positive, got {nu}")));
    }
    if let Some(x) = grid.nodes().into_iter().find(|&x| !w0(x).is_finite()) {
        return Err(Error::Domain(format!("initial data is not finite at x = {x}")));
    }
    let integral = cumulative_integral(w0, grid)?;
    let log_psi0: Vec<f64> = integral.iter().map(|i| -i / nu).collect();
    let log_shift = log_psi0.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let psi = log_psi0.iter().map(|l| (l - log_shift).exp()).collect();
    Ok((
        HeatState::new(psi, grid.t0),
        TransformContext {
            nu,
            grid: *grid,
            log_psi0,
            log_shift,
        },
    ))
}

/// Burgers solution at the nodes: central ratio in the interior, zero at both
/// ends (the even reflection `psi_{-1} = psi_1` makes the difference vanish).
pub fn inverse_transform(state: &HeatState, nu: f64, grid: &GridSpec) -> Result<Vec<f64>> {
    let psi = &state.psi;
    if psi.len() != grid.n + 1 {
        return Err(Error::Dimension {
            expected: grid.n + 1,
            got: psi.len(),
        });
    }
    if let Some((index, &value)) = psi.iter().enumerate().find(|(_, v)| !(**v > 0.0)) {
        return Err(Error::NonPositive {
            index,
            x: grid.x(index),
            value,
        });
    }
    let factor = -nu / (2.0 * grid.h());
    let n = grid.n;
    let mut w = vec![0.0; n + 1];
    for i in 1..n {
        w[i] = factor * (psi[i + 1] - psi[i - 1]) / psi[i];
    }
    Ok(w)
}
