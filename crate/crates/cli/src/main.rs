//! maj-confine: spectra, mode profiles, and cross-validation for a fermion
//! confined by a linearly rising scalar mass term m + b x.
//!
//! Exit codes: 0 on success, 1 when a computation or validation fails,
//! 2 for usage and configuration errors.

mod commands;
mod config;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use commands::{CmdError, cmd_modes, cmd_spectrum, cmd_sweep, cmd_validate};
use config::{GridSpec, Method, OutputFormat, PartialConfig, RunConfig};

#[derive(Parser)]
#[command(
    name = "maj-confine",
    version,
    about = "Bound states of a fermion confined by a linear scalar mass term",
    long_about = "Computes the closed-form spectrum and mode profiles of a \
                  two-component fermion with mass term m + b x, cross-checks \
                  them against finite-difference and shooting solvers, and \
                  emits deterministic CSV/JSON reports (units: c = hbar = 1)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Flat key=value config file; command-line flags override its entries.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Mass offset m of the linear term m + b x (default 0).
    #[arg(long, allow_negative_numbers = true)]
    m: Option<f64>,
    /// Slope b of the linear term; must be positive (default 1).
    #[arg(long)]
    b: Option<f64>,
    /// Highest level index to compute (default 6).
    #[arg(long = "n-max")]
    n_max: Option<usize>,
    /// Solver selection for the spectrum command.
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Position grid as min:max:points (default: 4001 points covering
    /// 10 oscillator lengths either side of the profile center -m/b).
    /// Leading hyphens are fine: --grid -10:10:2001 parses as a grid.
    #[arg(long, value_parser = parse_grid_spec, allow_hyphen_values = true)]
    grid: Option<GridSpec>,
    /// Output format for tabular commands (validate always emits JSON lines).
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Tolerance override for validation checks (0 is allowed and makes
    /// every route-comparison check fail; algebraic identities still pass).
    #[arg(long)]
    tol: Option<f64>,
    /// Accept grids narrower than the support window for commands that can
    /// sample outside it (mode profiles). Finite differences always require
    /// the full window.
    #[arg(long)]
    allow_narrow_grid: bool,
}

fn parse_grid_spec(s: &str) -> Result<GridSpec, String> {
    s.parse()
}

impl CommonArgs {
    fn to_partial(&self) -> PartialConfig {
        PartialConfig {
            m: self.m,
            b: self.b,
            n_max: self.n_max,
            method: self.method,
            grid: self.grid,
            format: self.format,
            out: self.out.clone(),
            tol: self.tol,
            allow_narrow_grid: if self.allow_narrow_grid {
                Some(true)
            } else {
                None
            },
        }
    }

    fn resolve(&self) -> Result<RunConfig, CmdError> {
        config::resolve(self.config.as_deref(), &self.to_partial()).map_err(CmdError::Usage)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Energy spectrum table for each requested solver.
    Spectrum {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Sampled profile of one normalized stationary mode.
    Modes {
        #[command(flatten)]
        common: CommonArgs,
        /// Level index n (0 is the static zero mode).
        #[arg(long, default_value_t = 0)]
        n: usize,
    },
    /// Cross-validation battery; exits 1 if any check fails.
    Validate {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Closed-form spectra across a list of slopes, with the sqrt(b) collapse.
    Sweep {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated positive slope values, reported in this order.
        #[arg(long = "b-values", value_delimiter = ',')]
        b_values: Vec<f64>,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    if let Err(message) = init_thread_pool() {
        eprintln!("error: {message}");
        return 2;
    }
    let (result, out_path) = match &cli.command {
        Command::Spectrum { common } => (
            common.resolve().and_then(|c| cmd_spectrum(&c).map(|o| (o, 0))),
            resolved_out(common),
        ),
        Command::Modes { common, n } => (
            common.resolve().and_then(|c| cmd_modes(&c, *n).map(|o| (o, 0))),
            resolved_out(common),
        ),
        Command::Validate { common } => (
            common.resolve().and_then(|c| {
                cmd_validate(&c).map(|(output, reports)| {
                    for report in &reports {
                        eprintln!("{}", report.table_row());
                    }
                    let all_passed = reports.iter().all(|r| r.passed());
                    (output, if all_passed { 0 } else { 1 })
                })
            }),
            resolved_out(common),
        ),
        Command::Sweep { common, b_values } => (
            common
                .resolve()
                .and_then(|c| cmd_sweep(&c, b_values).map(|o| (o, 0))),
            resolved_out(common),
        ),
    };
    match result {
        Ok((output, exit)) => match emit(&output, out_path.as_deref()) {
            Ok(()) => exit,
            Err(message) => {
                eprintln!("error: {message}");
                1
            }
        },
        Err(err) => {
            eprintln!("error: {}", err.message());
            err.exit_code()
        }
    }
}

/// The --out flag wins over a config-file `out` entry, mirroring the
/// general precedence; this resolves it without re-running full resolution.
fn resolved_out(common: &CommonArgs) -> Option<PathBuf> {
    common.resolve().ok().and_then(|c| c.out)
}

fn emit(output: &str, path: Option<&std::path::Path>) -> Result<(), String> {
    match path {
        Some(path) => std::fs::write(path, output.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(output.as_bytes())
                .and_then(|_| lock.flush())
                .map_err(|e| format!("cannot write to stdout: {e}"))
        }
    }
}

/// Honors MAJ_CONFINE_THREADS for the global worker pool; unset means the
/// library default (one worker per core).
fn init_thread_pool() -> Result<(), String> {
    let value = match std::env::var("MAJ_CONFINE_THREADS") {
        Err(_) => return Ok(()),
        Ok(v) => v,
    };
    let threads: usize = value.parse().map_err(|_| {
        format!("MAJ_CONFINE_THREADS must be a positive integer (got '{value}')")
    })?;
    if threads == 0 {
        return Err("MAJ_CONFINE_THREADS must be at least 1".to_string());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| format!("cannot configure the thread pool: {e}"))
}
