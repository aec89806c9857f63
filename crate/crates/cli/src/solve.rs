use std::time::Instant;

use hoc7_core::pipeline::{run, RunResult};
use serde::{Deserialize, Serialize};

use crate::config::{ExactMode, Format, SolveSettings};
use crate::error::{CliError, CliResult};
use crate::output::{csv_writer, in_dir, num, opt_num, write_json};

/// Everything a solve produced.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub exact_mode: ExactMode,
    pub result: RunResult,
    /// False if any reference value could not be trusted.
    pub reliable: bool,
    pub elapsed_seconds: f64,
}

pub fn solve(settings: &SolveSettings) -> CliResult<RunReport> {
    let start = Instant::now();
    let result = run(&settings.run).map_err(|e| CliError::from_core(e, "solve"))?;
    let reliable = result
        .snapshots
        .iter()
        .filter_map(|s| s.errors.as_ref())
        .all(|e| e.reliable);
    Ok(RunReport {
        exact_mode: settings.exact,
        result,
        reliable,
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Writes the report: summary CSV to stdout, plus `solution.csv`, `summary.csv`
/// (and `report.json` for JSON output) under `--out`.
pub fn emit(settings: &SolveSettings, report: &RunReport) -> CliResult<()> {
    let out = settings.out.as_deref();
    if let Some(dir) = out {
        write_solution(report, Some(&dir.join("solution.csv")))?;
        write_summary(report, Some(&dir.join("summary.csv")))?;
    }
    match settings.format {
        Format::Csv => write_summary(report, None)?,
        Format::Json => write_json(in_dir(out, "report.json").as_deref(), report)?,
    }
    if !report.reliable {
        eprintln!("warning: some reference values are unreliable; their errors are not trustworthy");
    }
    Ok(())
}

pub fn write_solution(report: &RunReport, path: Option<&std::path::Path>) -> CliResult<()> {
    let mut w = csv_writer(path)?;
    w.write_record(["t", "x", "numeric", "exact", "abs_error"])?;
    let r = &report.result;
    for s in &r.snapshots {
        for (i, (&x, &v)) in r.x.iter().zip(&s.w).enumerate() {
            let point = s.errors.as_ref().map(|e| e.pointwise[i]);
            w.write_record([
                num(s.t),
                num(x),
                num(v),
                opt_num(point.map(|p| p.exact)),
                opt_num(point.map(|p| p.abs_error)),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn write_summary(report: &RunReport, path: Option<&std::path::Path>) -> CliResult<()> {
    let mut w = csv_writer(path)?;
    w.write_record(["t", "steps", "l2", "linf", "reliable"])?;
    for s in &report.result.snapshots {
        let e = s.errors.as_ref();
        w.write_record([
            num(s.t),
            s.steps.to_string(),
            opt_num(e.map(|e| e.l2)),
            opt_num(e.map(|e| e.linf)),
            e.map(|e| e.reliable.to_string()).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
