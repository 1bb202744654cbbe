//! One-row-per-cell tables for `sweep` and `compare`.

use ciqw_core::{
    analytic_spectrum, certify_integral, depth, eigendecompose, laplacian, Certification, DepthResult, GraphSpec,
    IntegralSpectrum, MarkedSet, Mode, SearchConfig, SearchResult,
};
use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use crate::commands::realize;
use crate::output::{to_csv, to_json};
use crate::{CliError, Command, CompareArgs, CountArg, Format, Outcome, Source, SweepArgs};

/// Column order of every table, fixed.
pub const ROW_HEADER: [&str; 17] = [
    "index",
    "graph",
    "n_vertices",
    "marked",
    "epsilon",
    "k",
    "alpha",
    "queries",
    "ctqw_calls",
    "s",
    "total_evolution_time",
    "depth",
    "two_pow_depth",
    "sqrt_n_over_m",
    "depth_cost",
    "success_probability",
    "error",
];

/// A table row. Fields a failed cell never reached are empty.
///
/// `depth_cost` is `2^depth · √N`; `sqrt_n_over_m` is `√(N/|M|)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub index: usize,
    pub graph: String,
    pub n_vertices: Option<usize>,
    pub marked: Option<usize>,
    pub epsilon: Option<String>,
    pub k: Option<u64>,
    pub alpha: Option<f64>,
    pub queries: Option<u64>,
    pub ctqw_calls: Option<u64>,
    pub s: Option<u32>,
    pub total_evolution_time: Option<f64>,
    pub depth: Option<usize>,
    pub two_pow_depth: Option<u64>,
    pub sqrt_n_over_m: Option<f64>,
    pub depth_cost: Option<f64>,
    pub success_probability: Option<f64>,
    pub error: Option<String>,
}

impl Row {
    fn empty(index: usize, spec: &GraphSpec) -> Self {
        Self {
            index,
            graph: spec.to_string(),
            n_vertices: usize::try_from(spec.vertex_count()).ok(),
            marked: None,
            epsilon: None,
            k: None,
            alpha: None,
            queries: None,
            ctqw_calls: None,
            s: None,
            total_evolution_time: None,
            depth: None,
            two_pow_depth: None,
            sqrt_n_over_m: None,
            depth_cost: None,
            success_probability: None,
            error: None,
        }
    }

    pub fn failed(index: usize, spec: &GraphSpec, message: String) -> Self {
        Self {
            error: Some(message),
            ..Self::empty(index, spec)
        }
    }

    pub fn from_result(
        index: usize,
        spec: &GraphSpec,
        marked: &MarkedSet,
        result: &SearchResult,
        depth: Option<&DepthResult>,
    ) -> Self {
        let n = marked.n_vertices();
        let grover = &result.params.grover;
        let two_pow = depth.and_then(|d| 1u64.checked_shl(d.depth as u32));
        Self {
            index,
            graph: spec.to_string(),
            n_vertices: Some(n),
            marked: Some(marked.len()),
            epsilon: Some(marked.epsilon().to_string()),
            k: Some(grover.k),
            alpha: Some(grover.alpha),
            queries: Some(result.cost.oracle_queries),
            ctqw_calls: Some(result.cost.ctqw_calls),
            s: Some(result.params.phase.s),
            total_evolution_time: Some(result.cost.total_evolution_time),
            depth: depth.map(|d| d.depth),
            two_pow_depth: two_pow,
            sqrt_n_over_m: Some((n as f64 / marked.len() as f64).sqrt()),
            depth_cost: two_pow.map(|p| p as f64 * (n as f64).sqrt()),
            success_probability: Some(result.success_probability),
            error: None,
        }
    }

    pub fn passed(&self, tol: f64) -> bool {
        self.error.is_none() && self.success_probability.is_some_and(|p| p >= 1.0 - tol)
    }
}

/// A family swept over one size parameter by `compare`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Preset {
    /// `hamming(n, 2)`.
    Hypercube,
    /// `johnson(n, ⌈n^{2/3}⌉)`.
    Johnson23,
    /// `antiregular(n)`.
    Antiregular,
}

impl Preset {
    pub fn spec(self, n: usize) -> GraphSpec {
        match self {
            Preset::Hypercube => GraphSpec::Hamming { d: n, q: 2 },
            Preset::Johnson23 => {
                // Smallest k with k³ >= n², i.e. ⌈n^{2/3}⌉ without rounding error.
                let k = (1..).find(|&k: &usize| k.pow(3) >= n * n).expect("k = n works");
                GraphSpec::Johnson { n, k }
            }
            Preset::Antiregular => GraphSpec::Antiregular { n },
        }
    }
}

/// One grid cell.
#[derive(Debug, Clone)]
pub struct Cell {
    pub spec: GraphSpec,
    pub count: CountArg,
    pub seed: u64,
    pub mode: Mode,
    pub source: Source,
    pub int_tol: f64,
}

fn integral_spectrum(cell: &Cell) -> Result<IntegralSpectrum, String> {
    if cell.source == Source::Analytic && !matches!(cell.spec, GraphSpec::Custom { .. }) {
        return analytic_spectrum(&cell.spec).map_err(|e| e.to_string());
    }
    let g = realize(&cell.spec).map_err(|e| e.to_string())?;
    let sp = eigendecompose(laplacian(&g).as_matrix()).map_err(|e| e.to_string())?;
    match certify_integral(&sp, cell.int_tol).map_err(|e| e.to_string())? {
        Certification::Integral(isp) => Ok(isp),
        Certification::Rejected(r) => Err(format!("graph is not Laplacian integral: {r}")),
    }
}

fn try_cell(index: usize, cell: &Cell) -> Result<Row, String> {
    let g = realize(&cell.spec).map_err(|e| e.to_string())?;
    let n = g.n_vertices();
    let marked = MarkedSet::seeded(n, cell.count.resolve(n), cell.seed).map_err(|e| e.to_string())?;
    let isp = integral_spectrum(cell)?;
    let d = depth(&isp).map_err(|e| e.to_string())?;
    let config = SearchConfig {
        mode: cell.mode,
        integrality_tol: cell.int_tol,
        lambda_max: (cell.mode == Mode::Exact).then(|| isp.largest()),
        ..SearchConfig::default()
    };
    let result = ciqw_core::run_search(&g, &marked, &config).map_err(|e| e.to_string())?;
    Ok(Row::from_result(index, &cell.spec, &marked, &result, Some(&d)))
}

/// Runs every cell, in parallel, and returns rows in grid order. Cell
/// failures are recorded in the row's `error` column.
pub fn run_cells(cells: &[Cell]) -> Vec<Row> {
    cells
        .par_iter()
        .enumerate()
        .map(|(i, cell)| try_cell(i, cell).unwrap_or_else(|e| Row::failed(i, &cell.spec, e)))
        .collect()
}

#[derive(Serialize)]
struct TableReport<'a> {
    config: &'a Command,
    header: &'a [&'a str],
    rows: &'a [Row],
}

fn render(command: &Command, rows: &[Row], tol: f64) -> Result<Outcome, CliError> {
    let text = match command.format() {
        Format::Csv => to_csv(&ROW_HEADER, rows)?,
        Format::Json => to_json(&TableReport {
            config: command,
            header: &ROW_HEADER,
            rows,
        })?,
    };
    Ok(Outcome {
        text,
        passed: rows.iter().all(|r| r.passed(tol)),
    })
}

pub(crate) fn sweep(command: &Command, args: &SweepArgs) -> Result<Outcome, CliError> {
    let mut cells = Vec::new();
    for graph in &args.graph {
        let spec = graph.load()?;
        for &count in &args.marked_count {
            cells.push(Cell {
                spec: spec.clone(),
                count,
                seed: args.seed,
                mode: args.mode.into(),
                source: args.source,
                int_tol: args.int_tol,
            });
        }
    }
    render(command, &run_cells(&cells), args.tol)
}

pub(crate) fn compare(command: &Command, args: &CompareArgs) -> Result<Outcome, CliError> {
    let cells: Vec<Cell> = args
        .sizes
        .iter()
        .map(|&n| Cell {
            spec: args.preset.spec(n),
            count: args.marked_count,
            seed: args.seed,
            mode: Mode::Exact,
            source: Source::Analytic,
            int_tol: ciqw_core::spectral::DEFAULT_INTEGRALITY_TOLERANCE,
        })
        .collect();
    render(command, &run_cells(&cells), args.tol)
}
