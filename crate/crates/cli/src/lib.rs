//! Command-line front end: graph spectra, integrality certificates, depth,
//! single searches and parameter sweeps, written as JSON or CSV.
//!
//! Exit status: 0 on success, 2 when a run completes but a success
//! probability falls below `1 - tol`, 3 on any input or output error.

mod commands;
pub mod output;
pub mod parse;
pub mod table;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ciqw_core::{Mode, SearchError};
use serde::Serialize;
use thiserror::Error;

pub use parse::{CountArg, GraphArg, ParamsArg};
pub use table::{Preset, Row, ROW_HEADER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("output: {0}")]
    Output(String),
    #[error(transparent)]
    Search(#[from] SearchError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_INPUT
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum ModeArg {
    Circuit,
    Exact,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Circuit => Mode::Circuit,
            ModeArg::Exact => Mode::Exact,
        }
    }
}

/// Where integer eigenvalues come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Jacobi eigendecomposition, then certification.
    Numeric,
    /// Closed-form family spectrum.
    Analytic,
}

#[derive(Debug, Parser)]
#[command(name = "ciqw", version, about = "Deterministic quantum spatial search on Laplacian integral graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OutputArgs {
    /// Output format [default: json, or csv for sweep and compare].
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GraphArgs {
    /// `family:a,b`, `family(a,b)` or `file:PATH` (edge list).
    #[arg(long)]
    pub graph: GraphArg,
    /// Maximum distance from an integer accepted as integral.
    #[arg(long = "int-tol", default_value_t = ciqw_core::spectral::DEFAULT_INTEGRALITY_TOLERANCE)]
    pub int_tol: f64,
    #[arg(long, value_enum, default_value_t = Source::Numeric)]
    pub source: Source,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
#[command(group = clap::ArgGroup::new("marked_source").required(true).args(["marked", "marked_count"]))]
pub struct SearchArgs {
    #[arg(long)]
    pub graph: GraphArg,
    /// Explicit marked vertices, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub marked: Option<Vec<usize>>,
    /// Number of marked vertices chosen from `--seed`.
    #[arg(long = "marked-count", requires = "seed")]
    pub marked_count: Option<CountArg>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// `eps=P/Q` or `k=K,alpha=A[,beta=B]`; default derives exact
    /// parameters from the marked fraction.
    #[arg(long)]
    pub params: Option<ParamsArg>,
    #[arg(long, value_enum, default_value_t = ModeArg::Circuit)]
    pub mode: ModeArg,
    /// Success is asserted as probability >= 1 - tol.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long = "int-tol", default_value_t = ciqw_core::spectral::DEFAULT_INTEGRALITY_TOLERANCE)]
    pub int_tol: f64,
    /// Run circuit mode even when the spectrum is not integral.
    #[arg(long = "bypass-certification")]
    pub bypass_certification: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SweepArgs {
    /// Repeat for each graph in the grid.
    #[arg(long)]
    pub graph: Vec<GraphArg>,
    /// Marked-set sizes, comma separated: counts or `n/D` for ceil(N/D).
    #[arg(long = "marked-count", value_delimiter = ',', default_value = "1")]
    pub marked_count: Vec<CountArg>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = ModeArg::Circuit)]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long = "int-tol", default_value_t = ciqw_core::spectral::DEFAULT_INTEGRALITY_TOLERANCE)]
    pub int_tol: f64,
    #[arg(long, value_enum, default_value_t = Source::Numeric)]
    pub source: Source,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CompareArgs {
    #[arg(long, value_enum)]
    pub preset: Preset,
    /// Family size parameter per row, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long = "marked-count", default_value = "1")]
    pub marked_count: CountArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Command {
    /// List the supported graph families.
    Families {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Numeric Laplacian spectrum and its integrality verdict.
    Spectrum(GraphArgs),
    /// Integrality verdict only.
    Certify(GraphArgs),
    /// Depth of the integral spectrum and its filtering chain.
    Depth(GraphArgs),
    /// One search run.
    Search(SearchArgs),
    /// Searches over a grid of graphs and marked-set sizes.
    Sweep(SweepArgs),
    /// Closed-form cost table for a family over a range of sizes.
    Compare(CompareArgs),
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Families { output } => output,
            Command::Spectrum(a) | Command::Certify(a) | Command::Depth(a) => &a.output,
            Command::Search(a) => &a.output,
            Command::Sweep(a) => &a.output,
            Command::Compare(a) => &a.output,
        }
    }

    pub fn format(&self) -> Format {
        self.output().format.unwrap_or(match self {
            Command::Sweep(_) | Command::Compare(_) => Format::Csv,
            _ => Format::Json,
        })
    }
}

/// Rendered output and whether its assertions held.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

pub fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Families { .. } => commands::families(command.format()),
        Command::Spectrum(a) => commands::spectral(command, a, commands::Report::Spectrum),
        Command::Certify(a) => commands::spectral(command, a, commands::Report::Certify),
        Command::Depth(a) => commands::spectral(command, a, commands::Report::Depth),
        Command::Search(a) => commands::search(command, a),
        Command::Sweep(a) => table::sweep(command, a),
        Command::Compare(a) => table::compare(command, a),
    }
}

/// Parses `args`, runs, writes output, and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let written = match &cli.command.output().out {
        Some(path) => std::fs::write(path, &outcome.text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(outcome.text.as_bytes()).map_err(|e| e.to_string())
        }
    };
    if let Err(e) = written {
        eprintln!("error: output: {e}");
        return EXIT_INPUT;
    }
    if outcome.passed {
        EXIT_OK
    } else {
        EXIT_ASSERTION
    }
}
