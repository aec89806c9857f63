mod config;
mod error;
mod output;
mod solve;
mod study;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hoc7_core::heat::Integrator;
use hoc7_core::studies::{StudyMode, StudySpec};

use crate::config::SolveArgs;
use crate::error::{CliError, CliResult};

#[derive(Parser, Debug)]
#[command(name = "hoc7", version, about = "Burgers' equation via Hopf-Cole and a seventh-order heat stepper")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one of the benchmark problems.
    Solve(SolveArgs),
    /// Reproduce a published benchmark table (1..7).
    Table {
        id: u8,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit with status 4 if any value deviates by more than 5e-5.
        #[arg(long)]
        strict: bool,
        /// hoc7 or cn
        #[arg(long, default_value = "hoc7")]
        scheme: String,
    },
    /// Refinement study in time, space, or for the scalar test equation.
    Converge {
        /// time, space or ode
        #[arg(long, default_value = "time")]
        mode: String,
        /// Comma-separated refinement levels (powers of two).
        #[arg(long, value_delimiter = ',')]
        levels: Option<Vec<u32>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample the stability function and trace |Psi| = 1.
    Stability {
        /// Number of locus angles on [0, 2 pi).
        #[arg(long, default_value_t = 720)]
        angles: usize,
        /// Real-axis samples per decade over [1e-3, 1e6].
        #[arg(long, default_value_t = 10)]
        per_decade: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-derive the scheme coefficients and compare with the printed ones.
    DeriveCheck,
}

fn integrator(name: &str) -> CliResult<Integrator> {
    name.parse()
        .map_err(|e| CliError::Config(format!("--scheme: {e}")))
}

fn dispatch(command: Command) -> CliResult<()> {
    match command {
        Command::Solve(args) => {
            let settings = config::resolve(&args)?;
            let report = solve::solve(&settings)?;
            solve::emit(&settings, &report)
        }
        Command::Table {
            id,
            out,
            strict,
            scheme,
        } => {
            let (report, published) = table::run_table(id, integrator(&scheme)?)?;
            table::emit(&report, published, out.as_deref())?;
            if strict && !report.within_tolerance {
                return Err(CliError::Deviation(format!(
                    "table {id}: max deviation {:.3e} exceeds {:.0e}",
                    report.max_deviation, report.tolerance
                )));
            }
            Ok(())
        }
        Command::Converge { mode, levels, out } => {
            let mode: StudyMode = mode
                .parse()
                .map_err(|e| CliError::Config(format!("--mode: {e}")))?;
            let mut spec = StudySpec::default_for(mode);
            if let Some(levels) = levels {
                if levels.is_empty() || levels.iter().any(|&k| k == 0 || k > 20) {
                    return Err(CliError::Config("--levels: each level must be in 1..=20".into()));
                }
                spec.levels = levels;
            }
            let rows = study::converge(&spec)?;
            study::emit_converge(&rows, out.as_deref())
        }
        Command::Stability {
            angles,
            per_decade,
            out,
        } => {
            if angles == 0 {
                return Err(CliError::Config("--angles must be positive".into()));
            }
            study::emit_stability(per_decade, angles, out.as_deref())
        }
        Command::DeriveCheck => study::derive_check(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hoc7: {e}");
            e.exit_code()
        }
    }
}
