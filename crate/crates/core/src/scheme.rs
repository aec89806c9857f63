//! The seventh-order one-step time integrator.
//!
//! The method integrates over `[t_n, t_{n+1}]` with the closed seven-point
//! Newton-Cotes rule. The five interior stage values are predicted with
//! quintic Hermite (osculatory) interpolation from `u, u', u''` at both ends,
//! after part of the `u_n` weight is rewritten through a backward Taylor
//! expansion about `t_{n+1}`. That rewrite introduces `u''', u'''', u^(5)` at
//! the new time level and is what drives the stability function to zero at
//! infinity.
//!
//! Every coefficient is produced here in exact rational arithmetic; the
//! floating-point tables used by the solvers are rounded from these once.

use std::sync::OnceLock;

use num_complex::Complex64;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{exp_neg, int, rat, solve_exact, to_f64, RatPoly, Rational};
use crate::roots::polynomial_roots;

/// Number of sub-intervals of the Newton-Cotes rule (nodes at `k/6`).
pub const PANELS: usize = 6;

/// Weights of the closed seven-point Newton-Cotes rule on `[0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct NewtonCotesWeights {
    pub weights: [Rational; 7],
}

impl NewtonCotesWeights {
    /// Solves the moment equations `sum_j w_j (j/6)^m = 1/(m+1)`, `m = 0..6`.
    pub fn seven_point() -> Self {
        let a: Vec<Vec<Rational>> = (0..=PANELS)
            .map(|m| {
                (0..=PANELS)
                    .map(|j| Pow::pow(rat(j as i64, PANELS as i64), m as u32))
                    .collect()
            })
            .collect();
        let b: Vec<Rational> = (0..=PANELS).map(|m| rat(1, m as i64 + 1)).collect();
        let w = solve_exact(a, b).expect("Vandermonde system on distinct nodes is regular");
        Self {
            weights: std::array::from_fn(|k| w[k].clone()),
        }
    }

    /// Exact integral over `[0, 1]` of the monomial `t^d` as computed by the rule.
    pub fn integrate_monomial(&self, d: u32) -> Rational {
        self.weights
            .iter()
            .enumerate()
            .map(|(j, w)| w * Pow::pow(rat(j as i64, PANELS as i64), d))
            .fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// Quintic Hermite evaluation stencil at the fractional position `theta`.
///
/// `coeffs` multiply `(u_n, u_{n+1}, h u'_n, h u'_{n+1}, h^2 u''_n, h^2 u''_{n+1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct HermiteStencil {
    pub theta: Rational,
    pub coeffs: [Rational; 6],
}

impl HermiteStencil {
    /// Stencil at an arbitrary rational position in `[0, 1]`.
    pub fn at(theta: Rational) -> Self {
        // Rows: conditions on p(t) = sum a_i t^i, in coefficient order
        // p(0), p(1), p'(0), p'(1), p''(0), p''(1).
        let conditions: Vec<Vec<Rational>> = vec![
            (0..6).map(|i| if i == 0 { int(1) } else { int(0) }).collect(),
            (0..6).map(|_| int(1)).collect(),
            (0..6).map(|i| if i == 1 { int(1) } else { int(0) }).collect(),
            (0..6).map(|i| int(i)).collect(),
            (0..6).map(|i| if i == 2 { int(2) } else { int(0) }).collect(),
            (0..6).map(|i| int(i * (i - 1))).collect(),
        ];
        // Stencil c satisfies C^T c = (theta^i)_i.
        let transposed: Vec<Vec<Rational>> = (0..6)
            .map(|i| (0..6).map(|r| conditions[r][i].clone()).collect())
            .collect();
        let rhs: Vec<Rational> = (0..6).map(|i| Pow::pow(theta.clone(), i as u32)).collect();
        let c = solve_exact(transposed, rhs).expect("Hermite interpolation system is regular");
        Self {
            theta,
            coeffs: std::array::from_fn(|k| c[k].clone()),
        }
    }

    /// Evaluates the stencil on `u(t) = t^d` with `h = 1`.
    pub fn apply_to_monomial(&self, d: u32) -> Rational {
        let d_i = d as i64;
        let value = |t: i64| if d == 0 { int(1) } else { int(t.pow(d)) };
        let first = |t: i64| if d == 0 { int(0) } else { int(d_i * t.pow(d - 1)) };
        let second = |t: i64| {
            if d < 2 {
                int(0)
            } else {
                int(d_i * (d_i - 1) * t.pow(d - 2))
            }
        };
        let samples = [value(0), value(1), first(0), first(1), second(0), second(1)];
        self.coeffs
            .iter()
            .zip(samples.iter())
            .map(|(c, v)| c * v)
            .fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// Stencil at `theta = k/6`.
pub fn hermite_coefficients(k: usize) -> Result<HermiteStencil> {
    if !(1..=5).contains(&k) {
        return Err(Error::Domain(format!(
            "Hermite stage index must lie in 1..=5, got {k}"
        )));
    }
    Ok(HermiteStencil::at(rat(k as i64, PANELS as i64)))
}

/// Fraction of the `u_n` weight re-expressed by the backward Taylor expansion
/// about `t_{n+1}`: `(theta (1 - theta))^3`.
pub fn taylor_split(theta: &Rational) -> Rational {
    let q = theta * (int(1) - theta);
    &q * &q * &q
}

/// A corrected stage predictor: the Hermite stencil with part of its `u_n`
/// weight replaced by the fifth-order backward Taylor polynomial.
///
/// `at_start` multiplies `(u_n, h u'_n, h^2 u''_n)`; `at_end[k]` multiplies
/// `h^k u^(k)_{n+1}` for `k = 0..=5`.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrectedStage {
    pub theta: Rational,
    pub at_start: [Rational; 3],
    pub at_end: [Rational; 6],
}

impl CorrectedStage {
    pub fn new(k: usize) -> Result<Self> {
        let stencil = hermite_coefficients(k)?;
        let c = &stencil.coeffs;
        let r = taylor_split(&stencil.theta);
        let at_start = [&c[0] - &r, c[2].clone(), c[4].clone()];
        let mut factorial = int(1);
        let at_end = std::array::from_fn(|k| {
            if k > 0 {
                factorial = &factorial * int(k as i64);
            }
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            let mut v = &r * sign / &factorial;
            match k {
                0 => v += &c[1],
                1 => v += &c[3],
                2 => v += &c[5],
                _ => {}
            }
            v
        });
        Ok(Self {
            theta: stencil.theta,
            at_start,
            at_end,
        })
    }

    /// Coefficients `(A(s), B(s))` with `stage = A u_n + B u_{n+1}` on `u' = -lambda u`,
    /// `s = h lambda`, using `h^k u^(k) = (-s)^k u`.
    pub fn linear_test_form(&self) -> (RatPoly, RatPoly) {
        let neg_pow = |k: usize| if k % 2 == 0 { int(1) } else { int(-1) };
        let a = RatPoly::new(
            self.at_start
                .iter()
                .enumerate()
                .map(|(k, c)| c * neg_pow(k))
                .collect(),
        );
        let b = RatPoly::new(
            self.at_end
                .iter()
                .enumerate()
                .map(|(k, c)| c * neg_pow(k))
                .collect(),
        );
        (a, b)
    }
}

/// Rational amplification factor `Psi(s) = num(s) / den(s)` of the one-step
/// map `u_{n+1} = Psi(h lambda) u_n` on `u' = -lambda u`.
///
/// Both polynomials are scaled so that `den(0) = 453600`; with that scaling the
/// same coefficient lists define the propagator matrices `den(rho D)` and
/// `num(rho D)` of the heat solver.
#[derive(Clone, Debug)]
pub struct StabilityFunction {
    pub num: RatPoly,
    pub den: RatPoly,
    num_f64: Vec<f64>,
    den_f64: Vec<f64>,
}

impl StabilityFunction {
    pub fn new(num: RatPoly, den: RatPoly) -> Self {
        let num_f64 = num.to_f64_coeffs();
        let den_f64 = den.to_f64_coeffs();
        Self {
            num,
            den,
            num_f64,
            den_f64,
        }
    }

    pub fn num_coeffs(&self) -> &[f64] {
        &self.num_f64
    }

    pub fn den_coeffs(&self) -> &[f64] {
        &self.den_f64
    }

    pub fn degree_gap(&self) -> usize {
        self.den.degree() - self.num.degree()
    }

    pub fn eval_exact(&self, s: &Rational) -> Rational {
        self.num.eval(s) / self.den.eval(s)
    }

    pub fn eval(&self, s: f64) -> f64 {
        horner(&self.num_f64, s) / horner(&self.den_f64, s)
    }

    pub fn eval_complex(&self, s: Complex64) -> Complex64 {
        let h = |c: &[f64]| {
            c.iter()
                .rev()
                .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * s + a)
        };
        h(&self.num_f64) / h(&self.den_f64)
    }
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Substitutes the linear test equation into the corrected stages and the
/// Newton-Cotes rule and solves for `u_{n+1} / u_n`.
pub fn derive_stability_function() -> StabilityFunction {
    let nc = NewtonCotesWeights::seven_point();
    let w = &nc.weights;
    let s = RatPoly::monomial(int(1), 1);

    // u_{n+1} = u_n - s [w0 u_n + sum_k w_k (A_k u_n + B_k u_{n+1}) + w6 u_{n+1}]
    let mut explicit = RatPoly::constant(w[0].clone());
    let mut implicit = RatPoly::constant(w[PANELS].clone());
    for k in 1..PANELS {
        let (a, b) = CorrectedStage::new(k)
            .expect("stage index in range")
            .linear_test_form();
        explicit = &explicit + &a.scale(&w[k]);
        implicit = &implicit + &b.scale(&w[k]);
    }
    let one = RatPoly::constant(int(1));
    let num = &one - &(&s * &explicit);
    let den = &one + &(&s * &implicit);

    let scale = int(453_600) / den.coeff(0);
    StabilityFunction::new(num.scale(&scale), den.scale(&scale))
}

/// Shared, lazily derived stability function.
pub fn stability_function() -> &'static StabilityFunction {
    static PSI: OnceLock<StabilityFunction> = OnceLock::new();
    PSI.get_or_init(derive_stability_function)
}

/// `Psi(s)` for real `s >= 0`.
pub fn psi_eval(s: f64) -> f64 {
    stability_function().eval(s)
}

/// `Psi(s)` for complex `s`.
pub fn psi_eval_complex(s: Complex64) -> Complex64 {
    stability_function().eval_complex(s)
}

/// A real factor `p(s) / q(s)` of `Psi`, scaled so that `p(0) = q(0)`.
/// Coefficients are lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFactor {
    pub num: Vec<f64>,
    pub den: Vec<f64>,
}

impl RationalFactor {
    pub fn eval(&self, s: f64) -> f64 {
        horner(&self.num, s) / horner(&self.den, s)
    }
}

/// Real linear and quadratic factors of a polynomial, from its roots.
fn real_factors(coeffs: &[f64]) -> Result<Vec<Vec<f64>>> {
    let c: Vec<Complex64> = coeffs.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    let (roots, _) = polynomial_roots(&c)?;
    let mut out = Vec::new();
    for r in roots {
        if r.im.abs() <= 1e-9 * r.norm() {
            out.push(vec![-r.re, 1.0]);
        } else if r.im > 0.0 {
            out.push(vec![r.norm_sqr(), -2.0 * r.re, 1.0]);
        }
    }
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// `Psi(s) = prod_j p_j(s) / q_j(s)` with each factor equal to 1 at `s = 0`.
///
/// Numerator factors are matched to denominator factors so that the largest
/// `|p_j / q_j|` on `s >= 0` is as small as possible; applying the factors one
/// at a time then never amplifies any mode.
pub fn cascade_factors(psi: &StabilityFunction) -> Result<Vec<RationalFactor>> {
    let dens = real_factors(psi.den_coeffs())?;
    let mut nums = real_factors(psi.num_coeffs())?;
    if nums.len() > dens.len() {
        return Err(Error::Domain("numerator has more real factors than the denominator".into()));
    }
    nums.resize(dens.len(), vec![1.0]);
    let samples: Vec<f64> = std::iter::once(0.0)
        .chain((0..=440).map(|k| 10f64.powf(-3.0 + k as f64 / 40.0)))
        .collect();
    let build = |perm: &[usize]| -> Vec<RationalFactor> {
        perm.iter()
            .zip(&dens)
            .map(|(&i, q)| {
                let p = &nums[i];
                let scale = q[0] / p[0];
                RationalFactor {
                    num: p.iter().map(|c| c * scale).collect(),
                    den: q.clone(),
                }
            })
            .collect()
    };
    let worst = |factors: &[RationalFactor]| {
        factors
            .iter()
            .flat_map(|f| samples.iter().map(move |&s| f.eval(s).abs()))
            .fold(0.0, f64::max)
    };
    permutations(dens.len())
        .into_iter()
        .map(|perm| build(&perm))
        .filter(|f| f.iter().all(|x| x.num.len() <= x.den.len()))
        .min_by(|a, b| worst(a).total_cmp(&worst(b)))
        .ok_or_else(|| Error::Domain("no bounded factorization".into()))
}

/// Shared cascade of the derived stability function.
pub fn stability_cascade() -> &'static [RationalFactor] {
    static CASCADE: OnceLock<Vec<RationalFactor>> = OnceLock::new();
    CASCADE.get_or_init(|| {
        cascade_factors(stability_function()).expect("the derived stability function factors")
    })
}

/// One step of the scheme on `u' = -lambda u`.
pub fn scalar_step(u: f64, lambda: f64, h: f64) -> f64 {
    psi_eval(h * lambda) * u
}

/// Roots of `num(s) - e^{i theta} den(s)` for one boundary-locus angle.
#[derive(Clone, Debug)]
pub struct LocusSlice {
    pub theta: f64,
    pub roots: Vec<Complex64>,
    /// Largest `| |Psi(s*)| - 1 |` over the returned roots.
    pub residual: f64,
}

/// Traces the curve `|Psi(s)| = 1` by solving `num(s) = e^{i theta} den(s)`
/// for each sample angle.
pub fn stability_boundary(thetas: &[f64]) -> Result<Vec<Result<LocusSlice>>> {
    if thetas.is_empty() {
        return Err(Error::Domain("boundary locus needs at least one angle".into()));
    }
    let psi = stability_function();
    let num = psi.num_coeffs();
    let den = psi.den_coeffs();
    Ok(thetas
        .iter()
        .map(|&theta| {
            let rot = Complex64::from_polar(1.0, theta);
            let coeffs: Vec<Complex64> = (0..den.len())
                .map(|k| Complex64::new(num.get(k).copied().unwrap_or(0.0), 0.0) - rot * den[k])
                .collect();
            let (roots, _) = polynomial_roots(&coeffs)?;
            let residual = roots
                .iter()
                .map(|&z| (psi.eval_complex(z).norm() - 1.0).abs())
                .fold(0.0, f64::max);
            if residual > 1e-10 {
                return Err(Error::RootFinding { residual });
            }
            Ok(LocusSlice {
                theta,
                roots,
                residual,
            })
        })
        .collect())
}

/// Uniform angles `2 pi k / n`, `k = 0..n`.
pub fn uniform_angles(n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| 2.0 * std::f64::consts::PI * k as f64 / n as f64)
        .collect()
}

/// Global error at `T = 1` of the scheme on `u' = -u`, `u(0) = 1`, with
/// `h = 2^-level`, evaluated in exact arithmetic against a 60-digit `e^{-1}`.
///
/// Floating point cannot resolve these errors: at `h = 2^-5` the global
/// error is already below `1e-16`.
pub fn scalar_global_error_exact(level: u32) -> f64 {
    let psi = stability_function();
    let steps = 1u64 << level;
    let h = Rational::new(One::one(), num_bigint::BigInt::from(steps));
    let amplification = psi.eval_exact(&h);
    let u = Pow::pow(amplification, steps as u32);
    let exact = exp_neg(&int(1), 60);
    to_f64(&(u - exact).abs())
}

/// Checks of the derived function that must hold for any consistent scheme.
#[derive(Clone, Debug, PartialEq)]
pub struct ConsistencyReport {
    pub psi_at_zero_is_one: bool,
    pub degree_gap: usize,
    pub denominator_positive: bool,
    /// Number of leading Taylor coefficients of `Psi(s)` agreeing with `e^{-s}`
    /// (the one-step order plus one).
    pub taylor_agreement: usize,
}

impl ConsistencyReport {
    pub fn ok(&self) -> bool {
        self.psi_at_zero_is_one
            && self.degree_gap == 3
            && self.denominator_positive
            && self.taylor_agreement >= 8
    }
}

/// Compares `Psi(s)` with `e^{-s}` term by term.
pub fn consistency_report(psi: &StabilityFunction) -> ConsistencyReport {
    // Series of num/den: q_k = (n_k - sum_{j<k} q_j d_{k-j}) / d_0.
    let terms = 12;
    let d0 = psi.den.coeff(0);
    let mut q: Vec<Rational> = Vec::with_capacity(terms);
    for k in 0..terms {
        let mut acc = psi.num.coeff(k);
        for (j, qj) in q.iter().enumerate() {
            acc -= qj * psi.den.coeff(k - j);
        }
        q.push(acc / &d0);
    }
    let mut factorial = int(1);
    let mut agreement = 0;
    for (k, qk) in q.iter().enumerate() {
        if k > 0 {
            factorial = &factorial * int(k as i64);
        }
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        if *qk == sign / &factorial {
            agreement += 1;
        } else {
            break;
        }
    }
    ConsistencyReport {
        psi_at_zero_is_one: psi.eval_exact(&int(0)) == int(1),
        degree_gap: psi.degree_gap(),
        denominator_positive: psi.den.all_positive(),
        taylor_agreement: agreement,
    }
}

/// Leading coefficient of the local error `Psi(s) - e^{-s} = c s^p + ...`.
pub fn local_error_leading_term(psi: &StabilityFunction) -> (usize, Rational) {
    let report = consistency_report(psi);
    let p = report.taylor_agreement;
    let d0 = psi.den.coeff(0);
    let mut q: Vec<Rational> = Vec::new();
    for k in 0..=p {
        let mut acc = psi.num.coeff(k);
        for (j, qj) in q.iter().enumerate() {
            acc -= qj * psi.den.coeff(k - j);
        }
        q.push(acc / &d0);
    }
    let mut factorial = int(1);
    for k in 1..=p {
        factorial = &factorial * int(k as i64);
    }
    let sign = if p % 2 == 0 { int(1) } else { int(-1) };
    let c = &q[p] - sign / factorial;
    debug_assert!(c.is_positive() || c.is_negative());
    (p, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn newton_cotes_weights_match_published_values() {
        let nc = NewtonCotesWeights::seven_point();
        let expected = [41, 216, 27, 272, 27, 216, 41];
        for (w, e) in nc.weights.iter().zip(expected) {
            assert_eq!(*w, rat(e, 840));
        }
        let sum = nc.weights.iter().fold(int(0), |a, b| a + b);
        assert_eq!(sum, int(1));
        for k in 0..7 {
            assert_eq!(nc.weights[k], nc.weights[6 - k]);
        }
    }

    #[test]
    fn newton_cotes_exact_through_degree_seven() {
        let nc = NewtonCotesWeights::seven_point();
        for d in 0..=7 {
            assert_eq!(nc.integrate_monomial(d), rat(1, d as i64 + 1), "degree {d}");
        }
        assert_ne!(nc.integrate_monomial(8), rat(1, 9));
    }

    #[test]
    fn hermite_midpoint_stencil() {
        let s = hermite_coefficients(3).unwrap();
        let expected = [32, 32, 10, -10, 1, 1].map(|c| rat(c, 64));
        assert_eq!(s.coeffs, expected);
    }

    #[test]
    fn hermite_first_stage_forced_by_constants() {
        let s = hermite_coefficients(1).unwrap();
        let expected = [15000, 552, 2250, -210, 125, 25].map(|c| rat(c, 15552));
        assert_eq!(s.coeffs, expected);
        // The printed 1500 would break constant reproduction.
        assert_ne!(rat(1500, 15552) + rat(552, 15552), int(1));
    }

    #[test]
    fn hermite_last_stage() {
        let s = hermite_coefficients(5).unwrap();
        let expected = [552, 15000, 210, -2250, 25, 125].map(|c| rat(c, 15552));
        assert_eq!(s.coeffs, expected);
    }

    #[test]
    fn hermite_second_and_fourth_stages() {
        let s2 = hermite_coefficients(2).unwrap();
        assert_eq!(s2.coeffs, [192, 51, 48, -18, 4, 2].map(|c| rat(c, 243)));
        let s4 = hermite_coefficients(4).unwrap();
        assert_eq!(s4.coeffs, [51, 192, 18, -48, 2, 4].map(|c| rat(c, 243)));
    }

    #[test]
    fn hermite_identity_at_zero() {
        let s = HermiteStencil::at(int(0));
        assert_eq!(s.coeffs.to_vec(), ints(&[1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn hermite_rejects_out_of_range() {
        assert!(matches!(hermite_coefficients(0), Err(Error::Domain(_))));
        assert!(matches!(hermite_coefficients(6), Err(Error::Domain(_))));
    }

    #[test]
    fn hermite_reproduces_quintics_and_mirrors() {
        for k in 1..=5 {
            let s = hermite_coefficients(k).unwrap();
            assert_eq!(&s.coeffs[0] + &s.coeffs[1], int(1));
            for d in 0..=5 {
                assert_eq!(
                    s.apply_to_monomial(d),
                    Pow::pow(s.theta.clone(), d),
                    "k={k} d={d}"
                );
            }
            assert_ne!(s.apply_to_monomial(6), Pow::pow(s.theta.clone(), 6u32));
            let m = hermite_coefficients(6 - k).unwrap().coeffs;
            let c = &s.coeffs;
            assert_eq!(c[0], m[1]);
            assert_eq!(c[2], -m[3].clone());
            assert_eq!(c[4], m[5]);
        }
    }

    #[test]
    fn corrected_stages_match_published_checksums() {
        // Printed corrected predictors: coefficients of
        // u_n, u_{n+1}, h u'_n, h^2 u''_n, h u'_{n+1}, h^2 u''_{n+1} and the
        // common multiplier of the third-derivative tail.
        let published: [(i64, [Rational; 7]); 5] = [
            (46656, [int(44875), int(1781), int(6750), int(375), int(-755), rat(275, 2), int(125)]),
            (729, [int(568), int(161), int(144), int(12), int(-62), int(10), int(8)]),
            (64, [int(31), int(33), int(10), int(1), int(-11), rat(3, 2), int(1)]),
            // Printed as 20; the quartic-exact value is 16.
            (729, [int(145), int(584), int(54), int(6), int(-152), int(16), int(8)]),
            (46656, [int(1531), int(45125), int(630), int(75), int(-6875), rat(875, 2), int(125)]),
        ];
        for (k, (den, coeffs)) in published.iter().enumerate() {
            let st = CorrectedStage::new(k + 1).unwrap();
            let d = int(*den);
            let got = [
                &st.at_start[0] * &d,
                &st.at_end[0] * &d,
                &st.at_start[1] * &d,
                &st.at_start[2] * &d,
                &st.at_end[1] * &d,
                &st.at_end[2] * &d,
                &st.at_end[3] * &d * int(-6),
            ];
            assert_eq!(&got, coeffs, "stage {}", k + 1);
            // Taylor tail: -h^3/6, +h^4/24, -h^5/120 relative to the split weight.
            assert_eq!(&st.at_end[4] * &d, &coeffs[6] / int(24));
            assert_eq!(&st.at_end[5] * &d, -&coeffs[6] / int(120));
        }
    }

    #[test]
    fn derived_stability_function_coefficients() {
        let psi = derive_stability_function();
        assert_eq!(psi.num.coeffs(), ints(&[453600, -223560, 45360, -3780]).as_slice());
        assert_eq!(
            psi.den.coeffs(),
            ints(&[453600, 230040, 48600, 5400, 540, 135, 27]).as_slice()
        );
        // Numerator is 540 (840 - 414 s + 84 s^2 - 7 s^3).
        let reduced = psi.num.scale(&rat(1, 540));
        assert_eq!(reduced.coeffs(), ints(&[840, -414, 84, -7]).as_slice());
    }

    #[test]
    fn derived_function_is_seventh_order() {
        let psi = derive_stability_function();
        let report = consistency_report(&psi);
        assert!(report.ok(), "{report:?}");
        assert_eq!(report.taylor_agreement, 8);
        let (p, c) = local_error_leading_term(&psi);
        assert_eq!(p, 8);
        assert_eq!(c, rat(-1, 282240));
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi_eval(0.0), 1.0);
        let v = psi_eval(1.0);
        assert!(v > 0.0 && v < 1.0);
        let exact = to_f64(&stability_function().eval_exact(&int(1)));
        assert!((v - exact).abs() < 1e-16);
        let big = psi_eval(1e6);
        assert!(big.abs() <= 1e-15);
        assert!((big * 1e18 / -140.0 - 1.0).abs() < 1e-4);
    }

    #[test]
    fn scalar_step_cases() {
        assert_eq!(scalar_step(1.0, 0.0, 0.1), 1.0);
        assert!(scalar_step(1.0, 1e12, 1.0).abs() < 1e-30);
        let e1 = scalar_global_error_exact(3);
        let e2 = scalar_global_error_exact(4);
        let order = (e1 / e2).log2();
        assert!((6.5..=7.5).contains(&order), "order {order}");
    }

    #[test]
    fn boundary_locus_basic() {
        let slices = stability_boundary(&[0.0, 1.0, 3.0]).unwrap();
        for slice in slices {
            let slice = slice.unwrap();
            assert_eq!(slice.roots.len(), 6);
            assert!(slice.residual <= 1e-10);
        }
        let zero = stability_boundary(&[0.0]).unwrap().remove(0).unwrap();
        assert!(zero.roots.iter().any(|z| z.norm() < 1e-12));
        assert!(stability_boundary(&[]).is_err());
    }

    #[test]
    fn cascade_reproduces_psi() {
        let factors = stability_cascade();
        assert_eq!(factors.len(), 3);
        for f in factors {
            assert_eq!(f.den.len(), 3);
            assert_eq!(f.num[0], f.den[0]);
        }
        for s in [0.0, 0.3, 2.0, 17.0, 1e3, 1e6] {
            let prod: f64 = factors.iter().map(|f| f.eval(s)).product();
            assert!((prod - psi_eval(s)).abs() <= 1e-14 * psi_eval(s).abs().max(1e-3), "s = {s}");
        }
        let worst = (0..=400)
            .map(|k| 10f64.powf(-3.0 + k as f64 / 40.0))
            .flat_map(|s| factors.iter().map(move |f| f.eval(s).abs()))
            .fold(0.0, f64::max);
        assert!(worst <= 1.0 + 1e-12);
    }
}
