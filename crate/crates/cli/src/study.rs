//! Refinement studies, stability samples and the coefficient check.

use std::path::Path;

use hoc7_core::published::{
    PRINTED_DENOMINATOR, PRINTED_DENOMINATOR_ALT, PRINTED_FIRST_STAGE_U0,
    PRINTED_FOURTH_STAGE_SECOND_DERIVATIVE, PRINTED_NUMERATOR, PRINTED_NUMERATOR_ALT,
    PRINTED_NUMERATOR_FACTOR,
};
use hoc7_core::rational::{int, Rational};
use hoc7_core::scheme::{
    consistency_report, derive_stability_function, hermite_coefficients,
    local_error_leading_term, psi_eval, stability_boundary, uniform_angles, CorrectedStage,
};
use hoc7_core::studies::{study_rows, StudyRow, StudySpec};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{CliError, CliResult};
use crate::output::{csv_writer, num, opt_num};

/// Runs every level of `spec` in parallel, in level order.
pub fn converge(spec: &StudySpec) -> CliResult<Vec<StudyRow>> {
    let errors = spec
        .levels
        .par_iter()
        .map(|&k| spec.error(k).map(|e| (spec.step(k), e)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::from_core(e, "converge"))?;
    study_rows(&errors).map_err(|e| CliError::from_core(e, "converge"))
}

pub fn emit_converge(rows: &[StudyRow], out: Option<&Path>) -> CliResult<()> {
    let mut w = csv_writer(out)?;
    w.write_record(["step", "error", "order"])?;
    for r in rows {
        w.write_record([num(r.step), num(r.error), opt_num(r.order)])?;
    }
    w.flush()?;
    Ok(())
}

/// `(s, Psi(s))` on `s = 0` and a logarithmic grid over `[1e-3, 1e6]`.
pub fn psi_samples(per_decade: usize) -> Vec<(f64, f64)> {
    let per_decade = per_decade.max(1);
    let count = 9 * per_decade;
    std::iter::once((0.0, psi_eval(0.0)))
        .chain((0..=count).map(|k| {
            let s = 10f64.powf(-3.0 + k as f64 / per_decade as f64);
            (s, psi_eval(s))
        }))
        .collect()
}

/// Boundary-locus points `(theta, s)` with `|Psi(s)| = 1`.
pub fn locus_points(angles: usize) -> CliResult<Vec<(f64, Complex64)>> {
    let slices = stability_boundary(&uniform_angles(angles.max(1)))
        .map_err(|e| CliError::from_core(e, "stability"))?;
    let mut points = Vec::new();
    for slice in slices {
        let slice = slice.map_err(|e| CliError::from_core(e, "stability"))?;
        points.extend(slice.roots.iter().map(|&z| (slice.theta, z)));
    }
    Ok(points)
}

pub fn emit_stability(per_decade: usize, angles: usize, out: Option<&Path>) -> CliResult<()> {
    let samples = psi_samples(per_decade);
    let locus = locus_points(angles)?;
    let psi = hoc7_core::scheme::stability_function();
    let mut w = csv_writer(out)?;
    w.write_record(["kind", "theta", "s_re", "s_im", "psi_re", "psi_im", "abs_psi"])?;
    for (s, v) in samples {
        w.write_record([
            "sample".to_string(),
            String::new(),
            num(s),
            num(0.0),
            num(v),
            num(0.0),
            num(v.abs()),
        ])?;
    }
    for (theta, z) in locus {
        let v = psi.eval_complex(z);
        w.write_record([
            "locus".to_string(),
            num(theta),
            num(z.re),
            num(z.im),
            num(v.re),
            num(v.im),
            num(v.norm()),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Derived coefficients next to their printed variants.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientRow {
    pub label: String,
    pub derived: Rational,
    pub printed: Vec<i64>,
}

impl CoefficientRow {
    pub fn discrepancies(&self) -> Vec<i64> {
        self.printed
            .iter()
            .copied()
            .filter(|&p| int(p) != self.derived)
            .collect()
    }
}

pub fn coefficient_rows() -> CliResult<Vec<CoefficientRow>> {
    let psi = derive_stability_function();
    let mut rows = Vec::new();
    for (k, &printed) in PRINTED_DENOMINATOR.iter().enumerate() {
        let mut variants = vec![printed];
        variants.extend(PRINTED_DENOMINATOR_ALT.iter().filter(|a| a.0 == k).map(|a| a.1));
        rows.push(CoefficientRow {
            label: format!("denominator s^{k}"),
            derived: psi.den.coeff(k),
            printed: variants,
        });
    }
    for (k, &printed) in PRINTED_NUMERATOR.iter().enumerate() {
        let mut variants = vec![printed * PRINTED_NUMERATOR_FACTOR];
        variants.extend(
            PRINTED_NUMERATOR_ALT
                .iter()
                .filter(|a| a.0 == k)
                .map(|a| a.1 * PRINTED_NUMERATOR_FACTOR),
        );
        rows.push(CoefficientRow {
            label: format!("numerator s^{k}"),
            derived: psi.num.coeff(k),
            printed: variants,
        });
    }
    let first = hermite_coefficients(1).map_err(|e| CliError::from_core(e, "derive-check"))?;
    rows.push(CoefficientRow {
        label: "stage 1/6 u_n weight x 15552".into(),
        derived: &first.coeffs[0] * int(15552),
        printed: vec![PRINTED_FIRST_STAGE_U0],
    });
    let fourth = CorrectedStage::new(4).map_err(|e| CliError::from_core(e, "derive-check"))?;
    rows.push(CoefficientRow {
        label: "stage 4/6 h^2 u''_{n+1} weight x 729".into(),
        derived: &fourth.at_end[2] * int(729),
        printed: vec![PRINTED_FOURTH_STAGE_SECOND_DERIVATIVE],
    });
    Ok(rows)
}

/// Prints the comparison; fails with a numerical error if the derived
/// function is internally inconsistent.
pub fn derive_check() -> CliResult<()> {
    let rows = coefficient_rows()?;
    println!("{:<40} {:>12}  printed", "coefficient", "derived");
    for r in &rows {
        let printed: Vec<String> = r.printed.iter().map(|p| p.to_string()).collect();
        let flag = if r.discrepancies().is_empty() {
            "ok".to_string()
        } else {
            format!("DIFFERS ({})", r.discrepancies().len())
        };
        println!(
            "{:<40} {:>12}  {:<20} {flag}",
            r.label,
            r.derived.to_string(),
            printed.join(" / ")
        );
    }
    let psi = derive_stability_function();
    let report = consistency_report(&psi);
    let (order, constant) = local_error_leading_term(&psi);
    println!();
    println!("Psi(0) = 1: {}", report.psi_at_zero_is_one);
    println!("degree(den) - degree(num): {}", report.degree_gap);
    println!("denominator coefficients positive: {}", report.denominator_positive);
    println!("Taylor terms matching exp(-s): {}", report.taylor_agreement);
    println!("local error: {constant} s^{order}");
    let flagged = rows.iter().filter(|r| !r.discrepancies().is_empty()).count();
    println!("{flagged} printed coefficient(s) differ from the derivation");
    if report.ok() {
        Ok(())
    } else {
        Err(CliError::Numerical(
            "derived stability function failed its consistency checks".into(),
        ))
    }
}
