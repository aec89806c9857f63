//! Discrete error norms and observed convergence orders.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One grid point of an error comparison.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointError {
    pub x: f64,
    pub numeric: f64,
    pub exact: f64,
    pub abs_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    /// `sqrt(h sum_j |e_j|^2)` over all nodes, summed left to right.
    pub l2: f64,
    /// `max_j |e_j|`.
    pub linf: f64,
    pub pointwise: Vec<PointError>,
    /// False when the reference values could not be trusted.
    pub reliable: bool,
}

/// Error norms of `numeric` against `exact` on nodes `xs` with spacing `h`.
pub fn error_norms(xs: &[f64], numeric: &[f64], exact: &[f64], h: f64) -> Result<ErrorReport> {
    if numeric.len() != exact.len() {
        return Err(Error::Dimension {
            expected: exact.len(),
            got: numeric.len(),
        });
    }
    if xs.len() != exact.len() {
        return Err(Error::Dimension {
            expected: exact.len(),
            got: xs.len(),
        });
    }
    let pointwise: Vec<PointError> = xs
        .iter()
        .zip(numeric.iter().zip(exact))
        .map(|(&x, (&numeric, &exact))| PointError {
            x,
            numeric,
            exact,
            abs_error: (exact - numeric).abs(),
        })
        .collect();
    let mut sum = 0.0;
    let mut linf: f64 = 0.0;
    for p in &pointwise {
        sum += p.abs_error * p.abs_error;
        linf = linf.max(p.abs_error);
    }
    Ok(ErrorReport {
        l2: (h * sum).sqrt(),
        linf,
        pointwise,
        reliable: true,
    })
}

impl ErrorReport {
    /// Norms over the points of `self` whose abscissae match `xs` (to `1e-9`),
    /// keeping the weight `h`. Tabulated benchmark norms are of this kind.
    pub fn restricted(&self, xs: &[f64], h: f64) -> Self {
        let pointwise: Vec<PointError> = self
            .pointwise
            .iter()
            .filter(|p| xs.iter().any(|x| (p.x - x).abs() <= 1e-9))
            .copied()
            .collect();
        let sum: f64 = pointwise.iter().map(|p| p.abs_error * p.abs_error).sum();
        let linf = pointwise.iter().map(|p| p.abs_error).fold(0.0, f64::max);
        Self {
            l2: (h * sum).sqrt(),
            linf,
            pointwise,
            reliable: self.reliable,
        }
    }
}

/// `log2(e_k / e_{k+1})` for successive halvings; `None` where an error is zero
/// or not finite.
pub fn convergence_order(errors: &[(f64, f64)]) -> Result<Vec<Option<f64>>> {
    if errors.len() < 2 {
        return Err(Error::Domain("need at least two refinement levels".into()));
    }
    for pair in errors.windows(2) {
        let ratio = pair[0].0 / pair[1].0;
        if (ratio - 2.0).abs() > 1e-9 {
            return Err(Error::Domain(format!(
                "steps must halve between levels, got {} -> {}",
                pair[0].0, pair[1].0
            )));
        }
    }
    Ok(errors
        .windows(2)
        .map(|pair| {
            let (a, b) = (pair[0].1, pair[1].1);
            (a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()).then(|| (a / b).log2())
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identical_vectors() {
        let v = [0.1, 0.2, 0.3];
        let r = error_norms(&[0.0, 0.5, 1.0], &v, &v, 0.5).unwrap();
        assert_eq!((r.l2, r.linf), (0.0, 0.0));
    }

    #[test]
    fn single_point_perturbation() {
        let exact = [1.0, 2.0, 3.0, 4.0];
        let mut numeric = exact;
        numeric[2] += 0.25;
        let r = error_norms(&[0.0, 1.0, 2.0, 3.0], &numeric, &exact, 0.04).unwrap();
        assert_eq!(r.linf, 0.25);
        assert!((r.l2 - 0.2 * 0.25).abs() < 1e-15);
    }

    #[test]
    fn restriction_keeps_weight() {
        let xs = [0.0, 0.25, 0.5, 0.75, 1.0];
        let exact = [0.0; 5];
        let numeric = [0.0, 0.1, 0.3, 0.2, 0.0];
        let full = error_norms(&xs, &numeric, &exact, 0.25).unwrap();
        let sub = full.restricted(&[0.25, 0.75], 0.25);
        assert_eq!(sub.pointwise.len(), 2);
        assert_eq!(sub.linf, 0.2);
        assert!((sub.l2 - (0.25f64 * 0.05).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn length_mismatch() {
        assert!(error_norms(&[0.0], &[1.0, 2.0], &[1.0], 1.0).is_err());
    }

    #[test]
    fn orders() {
        let o = convergence_order(&[(0.1, 3.0 * 0.01), (0.05, 3.0 * 0.0025)]).unwrap();
        assert!((o[0].unwrap() - 2.0).abs() < 1e-12);
        let z = convergence_order(&[(0.1, 1.0), (0.05, 0.0)]).unwrap();
        assert_eq!(z, vec![None]);
        assert!(convergence_order(&[(0.1, 1.0)]).is_err());
        assert!(convergence_order(&[(0.1, 1.0), (0.03, 0.5)]).is_err());
    }

    proptest! {
        #[test]
        fn norms_are_homogeneous(
            diffs in proptest::collection::vec(-1.0f64..1.0, 2..40),
            c in -8.0f64..8.0,
        ) {
            let n = diffs.len();
            let xs: Vec<f64> = (0..n).map(|i| i as f64).collect();
            let zero = vec![0.0; n];
            let scaled: Vec<f64> = diffs.iter().map(|d| c * d).collect();
            let a = error_norms(&xs, &diffs, &zero, 0.1).unwrap();
            let b = error_norms(&xs, &scaled, &zero, 0.1).unwrap();
            prop_assert!((b.linf - c.abs() * a.linf).abs() <= 1e-15 * (1.0 + b.linf));
            prop_assert!((b.l2 - c.abs() * a.l2).abs() <= 1e-14 * (1.0 + b.l2));
            let max_point = a.pointwise.iter().map(|p| p.abs_error).fold(0.0, f64::max);
            prop_assert!(a.linf <= max_point + 1e-15);
        }
    }
}
