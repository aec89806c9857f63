//! Reference solutions: the Fourier-series solution on `(0, 1)` obtained through
//! the Hopf-Cole transform, and two closed-form Burgers solutions.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{gauss_legendre5, integrate_adaptive};

/// Default truncation tolerance of the series, relative to `beta_0`.
pub const DEFAULT_TERM_TOL: f64 = 1e-15;
/// Default cap on the number of series terms.
pub const DEFAULT_L_MAX: usize = 10_000;
/// Absolute tolerance for the Fourier coefficient integrals.
pub const DEFAULT_QUAD_TOL: f64 = 1e-12;
/// A series value is trusted only if its estimated relative error is below this.
pub const RELIABLE_RELATIVE_ERROR: f64 = 1e-6;

const POTENTIAL_CELLS: usize = 4096;

/// `W(x) = int_0^x w0` on `[0, 1]`: a cumulative table plus one Gauss-Legendre
/// rule inside the cell containing `x`.
struct Potential<'a, F> {
    w0: &'a F,
    table: Vec<f64>,
}

impl<'a, F: Fn(f64) -> f64> Potential<'a, F> {
    fn new(w0: &'a F) -> Result<Self> {
        let h = 1.0 / POTENTIAL_CELLS as f64;
        let mut table = Vec::with_capacity(POTENTIAL_CELLS + 1);
        let mut acc = 0.0;
        table.push(0.0);
        for k in 0..POTENTIAL_CELLS {
            acc += gauss_legendre5(w0, k as f64 * h, (k + 1) as f64 * h);
            if !acc.is_finite() {
                return Err(Error::Domain("initial data is not integrable".into()));
            }
            table.push(acc);
        }
        Ok(Self { w0, table })
    }

    fn eval(&self, x: f64) -> f64 {
        let h = 1.0 / POTENTIAL_CELLS as f64;
        let k = ((x / h).floor() as usize).min(POTENTIAL_CELLS - 1);
        let left = k as f64 * h;
        if x == left {
            return self.table[k];
        }
        self.table[k] + gauss_legendre5(self.w0, left, x)
    }
}

/// Coefficients of `psi(x, t) = beta_0 + sum_l beta_l exp(-nu l^2 pi^2 t / 2) cos(l pi x)`.
///
/// The heat data is `exp(-W(x)/nu - log_shift)`, with `log_shift` chosen so its
/// maximum is 1; the shift cancels in the Burgers ratio.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FourierSolution {
    pub nu: f64,
    pub beta0: f64,
    /// `betas[l - 1] = beta_l`.
    pub betas: Vec<f64>,
    pub l_max: usize,
    pub term_tol: f64,
    pub quad_tol: f64,
    pub log_shift: f64,
}

/// Why a series evaluation cannot be trusted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reliability {
    Reliable,
    /// The term bound was not met before the available coefficients ran out.
    TruncationLimit,
    /// The denominator is the small difference of much larger terms.
    Cancellation,
}

/// A series evaluation with its diagnostics.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub terms: usize,
    pub reliability: Reliability,
}

impl SeriesValue {
    pub fn reliable(&self) -> bool {
        self.reliability == Reliability::Reliable
    }

    /// The value, or `None` if it cannot be trusted.
    pub fn trusted(&self) -> Option<f64> {
        self.reliable().then_some(self.value)
    }
}

/// Number of terms needed so that `2 exp(-nu l^2 pi^2 t / 2) <= term_tol` for all
/// `t >= t_min`, capped at `l_max`.
pub fn terms_needed(nu: f64, t_min: f64, term_tol: f64, l_max: usize) -> usize {
    if !(t_min > 0.0) {
        return l_max;
    }
    let l = (2.0 * (2.0 / term_tol).ln() / (nu * PI * PI * t_min)).sqrt().ceil();
    if l >= l_max as f64 {
        l_max
    } else {
        l as usize
    }
}

/// Fourier coefficients of the transformed initial data on `(0, 1)`.
///
/// Only the terms needed for evaluation times `t >= t_min` are computed
/// (all `l_max` if `t_min = 0`). Each `beta_l` is integrated adaptively from
/// `max(4 l, 16)` starting panels.
pub fn fourier_coefficients<F: Fn(f64) -> f64>(
    w0: &F,
    nu: f64,
    l_max: usize,
    tol: f64,
    t_min: f64,
) -> Result<FourierSolution> {
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(Error::Domain(format!("viscosity must be positive, got {nu}")));
    }
    let potential = Potential::new(w0)?;
    let log_shift = potential
        .table
        .iter()
        .map(|w| -w / nu)
        .fold(f64::NEG_INFINITY, f64::max);
    let integrand = |x: f64| (-potential.eval(x) / nu - log_shift).exp();

    let beta0 = integrate_adaptive(&integrand, 0.0, 1.0, 16, tol)?.value;
    let count = terms_needed(nu, t_min, DEFAULT_TERM_TOL, l_max);
    let betas = (1..=count)
        .map(|l| {
            let lf = l as f64;
            let f = |x: f64| integrand(x) * (lf * PI * x).cos();
            integrate_adaptive(&f, 0.0, 1.0, (4 * l).max(16), tol).map(|q| 2.0 * q.value)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(FourierSolution {
        nu,
        beta0,
        betas,
        l_max,
        term_tol: DEFAULT_TERM_TOL,
        quad_tol: tol,
        log_shift,
    })
}

impl FourierSolution {
    /// (numerator, denominator, sum of |denominator terms|, terms, bound met).
    fn sums(&self, x: f64, t: f64) -> (f64, f64, f64, usize, bool) {
        let mut num = 0.0;
        let mut den = self.beta0;
        let mut den_abs = self.beta0.abs();
        let mut terms = 0;
        let mut bound_met = false;
        for (k, beta) in self.betas.iter().enumerate() {
            let l = (k + 1) as f64;
            let damping = (-self.nu * l * l * PI * PI * t / 2.0).exp();
            if 2.0 * damping <= self.term_tol {
                bound_met = true;
                break;
            }
            let c = beta * damping;
            num += c * l * (l * PI * x).sin();
            let d = c * (l * PI * x).cos();
            den += d;
            den_abs += d.abs();
            terms += 1;
        }
        if !bound_met && terms == self.betas.len() {
            let l = (self.betas.len() + 1) as f64;
            bound_met = 2.0 * (-self.nu * l * l * PI * PI * t / 2.0).exp() <= self.term_tol;
        }
        (num, den, den_abs, terms, bound_met)
    }

    fn classify(&self, den: f64, den_abs: f64, terms: usize, bound_met: bool) -> Reliability {
        let n = (terms + 1) as f64;
        let estimate = den_abs * n * f64::EPSILON + self.quad_tol * n;
        if !bound_met {
            Reliability::TruncationLimit
        } else if estimate > RELIABLE_RELATIVE_ERROR * den.abs() {
            Reliability::Cancellation
        } else {
            Reliability::Reliable
        }
    }

    /// Burgers solution `w(x, t) = pi nu sum(...) / (beta_0 + sum(...))`.
    pub fn eval(&self, x: f64, t: f64) -> Result<SeriesValue> {
        if !(0.0..=1.0).contains(&x) || !(t >= 0.0) {
            return Err(Error::Domain(format!("series is defined for x in [0, 1], t >= 0; got ({x}, {t})")));
        }
        let (num, den, den_abs, terms, bound_met) = self.sums(x, t);
        if den.abs() < 1e-300 {
            return Err(Error::Series(format!(
                "denominator {den:e} underflows at x = {x}, t = {t}"
            )));
        }
        let reliability = self.classify(den, den_abs, terms, bound_met);
        Ok(SeriesValue {
            value: PI * self.nu * num / den,
            terms,
            reliability,
        })
    }

    /// Heat-equation solution `psi(x, t)` in the normalized scaling.
    pub fn psi(&self, x: f64, t: f64) -> Result<SeriesValue> {
        let (_, den, den_abs, terms, bound_met) = self.sums(x, t);
        let reliability = self.classify(den, den_abs, terms, bound_met);
        Ok(SeriesValue {
            value: den,
            terms,
            reliability,
        })
    }
}

/// Free-function form of [`FourierSolution::eval`].
pub fn fourier_eval(sol: &FourierSolution, x: f64, t: f64) -> Result<SeriesValue> {
    sol.eval(x, t)
}

/// Shock-like solution `(x/t) / (1 + sqrt(t/t0) exp(x^2 / (2 nu t)))`,
/// `t0 = exp(1 / (4 nu))`, evaluated in log space.
pub fn shock_exact(x: f64, t: f64, nu: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let exponent = 0.5 * (t.ln() - 1.0 / (4.0 * nu)) + x * x / (2.0 * nu * t);
    if exponent >= 700.0 {
        (x / t) * (-exponent).exp()
    } else {
        (x / t) / (1.0 + exponent.exp())
    }
}

/// Two-mode solution on `(0, 2)`, exponents `pi^2 nu^2 t / 4` and `pi^2 nu^2 t`
/// exactly as published.
pub fn two_mode_exact(x: f64, t: f64, nu: f64) -> f64 {
    let e1 = (-PI * PI * nu * nu * t / 4.0).exp();
    let e2 = (-PI * PI * nu * nu * t).exp();
    let num = (PI * x).sin() * e1 + 4.0 * (2.0 * PI * x).sin() * e2;
    let den = 4.0 + (PI * x).cos() * e1 + 2.0 * (2.0 * PI * x).cos() * e2;
    PI * nu * num / den
}
