//! Gauss-Legendre quadrature: fixed five-point panels and an adaptive driver.

use crate::error::{Error, Result};

const GL5_NODES: [f64; 5] = [
    -0.906_179_845_938_664,
    -0.538_469_310_105_683,
    0.0,
    0.538_469_310_105_683,
    0.906_179_845_938_664,
];

const GL5_WEIGHTS: [f64; 5] = [
    0.236_926_885_056_189_1,
    0.478_628_670_499_366_5,
    0.568_888_888_888_888_9,
    0.478_628_670_499_366_5,
    0.236_926_885_056_189_1,
];

/// Five-point Gauss-Legendre rule on `[a, b]` (exact for degree <= 9).
pub fn gauss_legendre5<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    half * GL5_NODES
        .iter()
        .zip(GL5_WEIGHTS)
        .map(|(x, w)| w * f(mid + half * x))
        .sum::<f64>()
}

/// Abscissae used by [`gauss_legendre5`] on `[a, b]`.
pub fn gauss_legendre5_nodes(a: f64, b: f64) -> [f64; 5] {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    GL5_NODES.map(|x| mid + half * x)
}

/// Composite five-point rule over `panels` equal panels.
pub fn composite_gl5<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> f64 {
    let w = (b - a) / panels as f64;
    (0..panels)
        .map(|k| {
            let lo = a + k as f64 * w;
            let hi = if k + 1 == panels { b } else { lo + w };
            gauss_legendre5(f, lo, hi)
        })
        .sum()
}

/// Result of an adaptive integration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    /// Sum of the per-panel error estimates.
    pub error: f64,
}

/// Adaptive bisection of `panels` equal starting panels until the absolute
/// error estimate is below `tol`.
///
/// Each panel compares one five-point rule with the sum over its two halves;
/// the tolerance is shared in proportion to panel width.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    panels: usize,
    tol: f64,
) -> Result<Quadrature> {
    const MAX_DEPTH: u32 = 40;
    let panels = panels.max(1);
    let width = (b - a) / panels as f64;
    let mut total = Quadrature {
        value: 0.0,
        error: 0.0,
    };
    let mut unresolved = false;
    for k in 0..panels {
        let lo = a + k as f64 * width;
        let hi = if k + 1 == panels { b } else { lo + width };
        let whole = gauss_legendre5(f, lo, hi);
        let mut stack = vec![(lo, hi, whole, 0u32)];
        while let Some((lo, hi, whole, depth)) = stack.pop() {
            let mid = 0.5 * (lo + hi);
            let left = gauss_legendre5(f, lo, mid);
            let right = gauss_legendre5(f, mid, hi);
            let err = (left + right - whole).abs();
            let budget = tol * (hi - lo) / (b - a);
            if err <= budget || depth >= MAX_DEPTH {
                unresolved |= err > budget;
                total.value += left + right;
                total.error += err;
            } else {
                stack.push((mid, hi, right, depth + 1));
                stack.push((lo, mid, left, depth + 1));
            }
        }
    }
    if !total.value.is_finite() || unresolved && total.error > tol {
        return Err(Error::Quadrature {
            requested: tol,
            achieved: total.error,
        });
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl5_exact_for_degree_nine() {
        let f = |x: f64| x.powi(9) + 3.0 * x.powi(4) - 1.0;
        let exact = (2f64.powi(10) - 1.0) / 10.0 + 3.0 * (2f64.powi(5) - 1.0) / 5.0 - 1.0;
        assert!((gauss_legendre5(&f, 1.0, 2.0) - exact).abs() < 1e-12);
    }

    #[test]
    fn adaptive_handles_peaked_integrand() {
        let f = |x: f64| (-1000.0 * x * x).exp();
        let q = integrate_adaptive(&f, 0.0, 1.0, 4, 1e-13).unwrap();
        let exact = 0.5 * (std::f64::consts::PI / 1000.0).sqrt();
        assert!((q.value - exact).abs() < 1e-13);
    }

    #[test]
    fn oscillatory_integrand() {
        let l = 40.0;
        let f = |x: f64| (l * std::f64::consts::PI * x).cos() * x;
        let q = integrate_adaptive(&f, 0.0, 1.0, 160, 1e-12).unwrap();
        // int_0^1 x cos(l pi x) dx = (cos(l pi) - 1) / (l pi)^2 = 0 for even l
        assert!(q.value.abs() < 1e-12);
    }
}
