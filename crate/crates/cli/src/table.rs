//! Reproduces a published benchmark table and reports deviations from it.

use std::path::Path;

use hoc7_core::heat::Integrator;
use hoc7_core::pipeline::{run, RunConfig, RunResult};
use hoc7_core::published::{table, PublishedTable};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::output::{csv_writer, in_dir, num, opt_num, write_json};

/// Tolerance on `|computed - printed|` for `--strict`.
pub const STRICT_TOLERANCE: f64 = 5e-5;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryDeviation {
    pub x: f64,
    pub t: f64,
    pub computed: f64,
    pub printed: f64,
    pub deviation: f64,
    pub exact: Option<f64>,
    pub printed_exact: f64,
    pub exact_deviation: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormDeviation {
    pub t: f64,
    /// Over all grid nodes.
    pub linf: f64,
    pub l2: f64,
    /// Over the tabulated abscissae only.
    pub linf_tabulated: f64,
    pub l2_tabulated: f64,
    pub printed_linf: Option<f64>,
    pub printed_l2: Option<f64>,
    pub reliable: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableReport {
    pub table: u8,
    pub config: RunConfig,
    pub entries: Vec<EntryDeviation>,
    pub norms: Vec<NormDeviation>,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub within_tolerance: bool,
}

pub fn run_table(id: u8, integrator: Integrator) -> CliResult<(TableReport, &'static PublishedTable)> {
    let published = table(id)
        .ok_or_else(|| CliError::Config(format!("no table {id} (expected 1..7)")))?;
    let config = RunConfig {
        problem: published.problem,
        nu: published.nu,
        h: published.h,
        tau: published.tau,
        times: published.times(),
        integrator,
        with_exact: true,
    };
    let result = run(&config).map_err(|e| CliError::from_core(e, &format!("table {id}")))?;
    let report = compare(id, published, &result)?;
    Ok((report, published))
}

fn compare(id: u8, published: &PublishedTable, result: &RunResult) -> CliResult<TableReport> {
    let mut entries = Vec::with_capacity(published.entries.len());
    for e in published.entries {
        let i = result
            .grid
            .index_of(e.x)
            .ok_or_else(|| CliError::Config(format!("x = {} is not a grid node", e.x)))?;
        let snap = result
            .snapshot_at(e.t)
            .ok_or_else(|| CliError::Config(format!("no snapshot at t = {}", e.t)))?;
        let computed = snap.w[i];
        let exact = snap.errors.as_ref().map(|r| r.pointwise[i].exact);
        entries.push(EntryDeviation {
            x: e.x,
            t: e.t,
            computed,
            printed: e.present,
            deviation: computed - e.present,
            exact,
            printed_exact: e.exact,
            exact_deviation: exact.map(|v| v - e.exact),
        });
    }
    let mut xs: Vec<f64> = published.entries.iter().map(|e| e.x).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    let norms = result
        .snapshots
        .iter()
        .filter_map(|s| {
            let full = s.errors.as_ref()?;
            let tab = full.restricted(&xs, result.grid.h());
            let printed = published.norm_at(s.t);
            Some(NormDeviation {
                t: s.t,
                linf: full.linf,
                l2: full.l2,
                linf_tabulated: tab.linf,
                l2_tabulated: tab.l2,
                printed_linf: printed.map(|n| n.linf),
                printed_l2: printed.map(|n| n.l2),
                reliable: full.reliable,
            })
        })
        .collect();
    let max_deviation = entries
        .iter()
        .map(|e| e.deviation.abs())
        .fold(0.0, f64::max);
    Ok(TableReport {
        table: id,
        config: result.config.clone(),
        entries,
        norms,
        max_deviation,
        tolerance: STRICT_TOLERANCE,
        within_tolerance: max_deviation <= STRICT_TOLERANCE,
    })
}

/// Table-shaped CSV (stdout unless `--out`) and, under `--out`, the deviations JSON.
pub fn emit(report: &TableReport, published: &PublishedTable, out: Option<&Path>) -> CliResult<()> {
    let csv_path = in_dir(out, &format!("table{}.csv", report.table));
    let mut w = csv_writer(csv_path.as_deref())?;
    let others: Vec<&str> = published
        .entries
        .first()
        .map(|e| e.others.iter().map(|o| o.0).collect())
        .unwrap_or_default();
    let mut header = vec![
        "x".to_string(),
        "t".into(),
        "computed".into(),
        "exact".into(),
        "printed_computed".into(),
        "printed_exact".into(),
        "deviation".into(),
    ];
    header.extend(others.iter().map(|o| format!("printed_{}", o.to_lowercase())));
    w.write_record(&header)?;
    for (dev, e) in report.entries.iter().zip(published.entries) {
        let mut row = vec![
            num(dev.x),
            num(dev.t),
            num(dev.computed),
            opt_num(dev.exact),
            num(dev.printed),
            num(dev.printed_exact),
            num(dev.deviation),
        ];
        row.extend(e.others.iter().map(|o| num(o.1)));
        w.write_record(&row)?;
    }
    w.flush()?;
    if let Some(path) = in_dir(out, &format!("table{}_deviations.json", report.table)) {
        write_json(Some(&path), report)?;
    }
    eprintln!(
        "table {}: max |computed - printed| = {:.3e} ({} tolerance {:.0e})",
        report.table,
        report.max_deviation,
        if report.within_tolerance { "within" } else { "outside" },
        report.tolerance
    );
    Ok(())
}
