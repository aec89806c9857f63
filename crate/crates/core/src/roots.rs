//! Simultaneous polynomial root finding (Aberth-Ehrlich iteration).

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Evaluates `p(z)` and `p'(z)` by Horner's rule. Coefficients are lowest degree first.
pub fn horner_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All complex roots of the polynomial with the given coefficients (lowest degree first),
/// counted with multiplicity. Trailing zero coefficients must already be trimmed.
///
/// Returns the roots together with the largest scaled residual
/// `|p(z)| / sum_k |c_k| |z|^k` seen among them.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<(Vec<Complex64>, f64)> {
    let degree = coeffs.len().saturating_sub(1);
    if degree == 0 {
        return Ok((Vec::new(), 0.0));
    }
    let lead = coeffs[degree];
    if lead.norm() == 0.0 {
        return Err(Error::Domain("leading coefficient is zero".into()));
    }
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();

    // Cauchy bound for the initial circle.
    let radius = 1.0 + monic[..degree].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / degree as f64 + 0.4;
            Complex64::from_polar(0.5 * radius, angle)
        })
        .collect();

    let mut converged = false;
    for _ in 0..500 {
        let mut max_step: f64 = 0.0;
        for i in 0..degree {
            let (p, dp) = horner_with_derivative(&monic, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..degree)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if max_step < 1e-15 {
            converged = true;
            break;
        }
    }

    // Newton polish on the original polynomial.
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner_with_derivative(coeffs, *zi);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            if !step.is_finite() {
                break;
            }
            *zi -= step;
        }
    }

    let residual = z
        .iter()
        .map(|&zi| {
            let (p, _) = horner_with_derivative(coeffs, zi);
            let scale: f64 = coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.norm() * zi.norm().powi(k as i32))
                .sum();
            p.norm() / scale
        })
        .fold(0.0, f64::max);

    if !converged && residual > 1e-12 {
        return Err(Error::RootFinding { residual });
    }
    Ok((z, residual))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn cubic_with_known_roots() {
        // (z - 1)(z - 2)(z + 3) = z^3 - 7z + 6
        let (mut roots, res) = polynomial_roots(&[c(6.0), c(-7.0), c(0.0), c(1.0)]).unwrap();
        roots.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert!(res < 1e-14);
        for (r, e) in roots.iter().zip([-3.0, 1.0, 2.0]) {
            assert!((r - c(e)).norm() < 1e-12, "{r} vs {e}");
        }
    }

    #[test]
    fn complex_pair() {
        // z^2 + 1
        let (roots, _) = polynomial_roots(&[c(1.0), c(0.0), c(1.0)]).unwrap();
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert!((r.norm() - 1.0).abs() < 1e-13 && r.re.abs() < 1e-13);
        }
    }
}
