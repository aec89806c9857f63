//! Solve configuration: command-line flags over an optional `key = value` file.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::Args;
use hoc7_core::heat::Integrator;
use hoc7_core::pipeline::RunConfig;
use hoc7_core::problems::{get_problem, ExactKind, ProblemId};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Args, Debug, Default, Clone, PartialEq)]
pub struct SolveArgs {
    /// Config file with `key = value` lines; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// ex1 .. ex6
    #[arg(long)]
    pub problem: Option<String>,
    #[arg(long)]
    pub nu: Option<f64>,
    /// Spatial step (alternative to --N).
    #[arg(long)]
    pub h: Option<f64>,
    /// Number of spatial intervals.
    #[arg(long = "N")]
    pub n: Option<usize>,
    /// Time step (alternative to --M).
    #[arg(long)]
    pub tau: Option<f64>,
    /// Number of time steps to --T.
    #[arg(long = "M")]
    pub m: Option<usize>,
    /// Final time; added to the report times.
    #[arg(long = "T")]
    pub t: Option<f64>,
    /// hoc7 or cn
    #[arg(long)]
    pub scheme: Option<String>,
    /// auto, fourier, closed or none
    #[arg(long)]
    pub exact: Option<String>,
    /// Comma-separated absolute report times.
    #[arg(long = "report-times", value_delimiter = ',')]
    pub report_times: Option<Vec<f64>>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// csv or json
    #[arg(long)]
    pub format: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExactMode {
    Auto,
    Fourier,
    Closed,
    None,
}

impl FromStr for ExactMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(Self::Auto),
            "fourier" => Ok(Self::Fourier),
            "closed" => Ok(Self::Closed),
            "none" => Ok(Self::None),
            other => Err(format!(
                "unknown exact mode `{other}` (expected auto, fourier, closed or none)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Csv => "csv",
            Self::Json => "json",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveSettings {
    pub run: RunConfig,
    pub exact: ExactMode,
    pub out: Option<PathBuf>,
    pub format: Format,
}

fn parse_value<T: FromStr>(value: &str, key: &str, line: usize) -> CliResult<T>
where
    T::Err: fmt::Display,
{
    value
        .parse()
        .map_err(|e| CliError::Config(format!("line {line}: bad value for `{key}`: {e}")))
}

/// Parses a config file body. Keys are the flag names without dashes.
pub fn parse_config(text: &str) -> CliResult<SolveArgs> {
    let mut args = SolveArgs::default();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| {
            CliError::Config(format!("line {line}: expected `key = value`, got `{content}`"))
        })?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "problem" => args.problem = Some(value.to_string()),
            "nu" => args.nu = Some(parse_value(value, key, line)?),
            "h" => args.h = Some(parse_value(value, key, line)?),
            "N" => args.n = Some(parse_value(value, key, line)?),
            "tau" => args.tau = Some(parse_value(value, key, line)?),
            "M" => args.m = Some(parse_value(value, key, line)?),
            "T" => args.t = Some(parse_value(value, key, line)?),
            "scheme" => args.scheme = Some(value.to_string()),
            "exact" => args.exact = Some(value.to_string()),
            "report-times" => {
                args.report_times = Some(
                    value
                        .split(',')
                        .map(|v| parse_value(v.trim(), key, line))
                        .collect::<CliResult<_>>()?,
                )
            }
            "out" => args.out = Some(PathBuf::from(value)),
            "format" => args.format = Some(value.to_string()),
            other => {
                return Err(CliError::Config(format!("line {line}: unknown key `{other}`")))
            }
        }
    }
    Ok(args)
}

/// Flag values where given, file values otherwise.
pub fn merge(flags: &SolveArgs, file: SolveArgs) -> SolveArgs {
    SolveArgs {
        config: flags.config.clone(),
        problem: flags.problem.clone().or(file.problem),
        nu: flags.nu.or(file.nu),
        h: flags.h.or(file.h),
        n: flags.n.or(file.n),
        tau: flags.tau.or(file.tau),
        m: flags.m.or(file.m),
        t: flags.t.or(file.t),
        scheme: flags.scheme.clone().or(file.scheme),
        exact: flags.exact.clone().or(file.exact),
        report_times: flags.report_times.clone().or(file.report_times),
        out: flags.out.clone().or(file.out),
        format: flags.format.clone().or(file.format),
    }
}

fn read_config(path: &Path) -> CliResult<SolveArgs> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        CliError::Config(format!("cannot read config file {}: {e}", path.display()))
    })?;
    parse_config(&text)
        .map_err(|e| CliError::Config(format!("{}: {}", path.display(), strip_prefix(&e))))
}

fn strip_prefix(e: &CliError) -> String {
    match e {
        CliError::Config(m) => m.clone(),
        other => other.to_string(),
    }
}

fn config_err(flag: &str, msg: impl fmt::Display) -> CliError {
    CliError::Config(format!("--{flag}: {msg}"))
}

/// Resolves flags and config file into a validated run.
pub fn resolve(flags: &SolveArgs) -> CliResult<SolveSettings> {
    let args = match &flags.config {
        Some(path) => merge(flags, read_config(path)?),
        None => flags.clone(),
    };
    let id: ProblemId = args
        .problem
        .as_deref()
        .ok_or_else(|| config_err("problem", "required (ex1 .. ex6)"))?
        .parse()
        .map_err(|e| config_err("problem", e))?;
    let problem = get_problem(id);
    let defaults = &problem.defaults[0];
    let (a0, a1) = problem.domain;

    let nu = args.nu.unwrap_or(defaults.nu);
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(config_err("nu", format!("must be positive, got {nu}")));
    }

    let h = match (args.h, args.n) {
        (Some(h), Some(n)) => {
            let from_n = (a1 - a0) / n as f64;
            if ((h - from_n) / from_n).abs() > 1e-12 {
                return Err(config_err("h", format!("conflicts with --N {n} (h = {from_n})")));
            }
            from_n
        }
        (Some(h), None) => h,
        (None, Some(0)) => return Err(config_err("N", "must be at least 4")),
        (None, Some(n)) => (a1 - a0) / n as f64,
        (None, None) => defaults.h,
    };
    if !(h > 0.0) || !h.is_finite() {
        return Err(config_err("h", format!("must be positive, got {h}")));
    }

    let tau = match (args.tau, args.m, args.t) {
        (Some(tau), Some(m), Some(t)) => {
            let from_m = (t - problem.t_init) / m as f64;
            if ((tau - from_m) / from_m).abs() > 1e-12 {
                return Err(config_err("tau", format!("conflicts with --M {m} (tau = {from_m})")));
            }
            from_m
        }
        (Some(tau), _, _) => tau,
        (None, Some(0), _) => return Err(config_err("M", "must be positive")),
        (None, Some(m), Some(t)) => (t - problem.t_init) / m as f64,
        (None, Some(_), None) => return Err(config_err("M", "needs --T")),
        (None, None, _) => defaults.tau,
    };
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(config_err("tau", format!("must be positive, got {tau}")));
    }

    let mut times = match (&args.report_times, args.t) {
        (Some(list), Some(t)) => list.iter().copied().chain([t]).collect(),
        (Some(list), None) => list.clone(),
        (None, Some(t)) => vec![t],
        (None, None) => defaults.times.clone(),
    };
    times.sort_by(f64::total_cmp);
    times.dedup();
    for &t in &times {
        let span = t - problem.t_init;
        let k = (span / tau).round();
        if !t.is_finite() || span < 0.0 || (k * tau - span).abs() > 1e-12 * t.abs().max(1.0) {
            return Err(config_err(
                "report-times",
                format!(
                    "{t} is not t_init + k tau (t_init = {}, tau = {tau})",
                    problem.t_init
                ),
            ));
        }
    }

    let integrator: Integrator = args
        .scheme
        .as_deref()
        .unwrap_or("hoc7")
        .parse()
        .map_err(|e| config_err("scheme", e))?;
    let exact: ExactMode = args
        .exact
        .as_deref()
        .unwrap_or("auto")
        .parse()
        .map_err(|e| config_err("exact", e))?;
    let with_exact = match (exact, problem.exact) {
        (ExactMode::None, _) => false,
        (ExactMode::Auto, kind) => kind != ExactKind::None,
        (ExactMode::Fourier, ExactKind::Fourier) => true,
        (ExactMode::Closed, ExactKind::Shock | ExactKind::TwoMode) => true,
        (mode, kind) => {
            return Err(config_err(
                "exact",
                format!("{mode:?} reference not available for {id} (has {kind:?})").to_lowercase(),
            ))
        }
    };
    let format: Format = args
        .format
        .as_deref()
        .unwrap_or("csv")
        .parse()
        .map_err(|e| config_err("format", e))?;

    Ok(SolveSettings {
        run: RunConfig {
            problem: id,
            nu,
            h,
            tau,
            times,
            integrator,
            with_exact,
        },
        exact,
        out: args.out,
        format,
    })
}
