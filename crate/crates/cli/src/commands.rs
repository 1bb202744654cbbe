use ciqw_core::spectral::OffendingEigenvalue;
use ciqw_core::{
    analytic_spectrum, build_graph, certify_integral, depth, eigendecompose, laplacian, Certification, CostReport,
    DepthResult, Graph, GraphSpec, MarkedSet, SearchConfig, SearchParams,
};
use serde::Serialize;

use crate::output::{to_csv, to_json};
use crate::table::{Row, ROW_HEADER};
use crate::{CliError, Command, Format, GraphArgs, Outcome, SearchArgs, Source};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Report {
    Spectrum,
    Certify,
    Depth,
}

#[derive(Serialize)]
pub(crate) struct GraphSection<'a> {
    pub n: usize,
    #[serde(flatten)]
    pub spec: &'a GraphSpec,
}

pub(crate) fn realize(spec: &GraphSpec) -> Result<Graph, CliError> {
    build_graph(spec).map_err(|e| CliError::Input(e.to_string()))
}

#[derive(Serialize)]
struct FamilyInfo {
    family: &'static str,
    params: &'static str,
    constraint: &'static str,
    vertices: &'static str,
}

const FAMILIES: &[FamilyInfo] = &[
    FamilyInfo { family: "complete", params: "n", constraint: "n >= 1", vertices: "n" },
    FamilyInfo { family: "johnson", params: "n,k", constraint: "1 <= k <= n", vertices: "C(n,k)" },
    FamilyInfo { family: "kneser", params: "n,k", constraint: "1 <= k < n/2", vertices: "C(n,k)" },
    FamilyInfo { family: "hamming", params: "d,q", constraint: "d >= 1, q >= 2", vertices: "q^d" },
    FamilyInfo { family: "grassmann", params: "q,n,k", constraint: "q prime <= 7, 1 <= k <= n", vertices: "[n,k]_q" },
    FamilyInfo { family: "rook", params: "m,n", constraint: "m, n >= 1", vertices: "m*n" },
    FamilyInfo { family: "complete_square", params: "n", constraint: "n >= 1", vertices: "4n" },
    FamilyInfo { family: "cocktail_party", params: "n", constraint: "n >= 1", vertices: "2n" },
    FamilyInfo { family: "complete_multipartite", params: "n,k", constraint: "k divides n", vertices: "n" },
    FamilyInfo { family: "star", params: "n", constraint: "n >= 1", vertices: "n+1" },
    FamilyInfo { family: "antiregular", params: "n", constraint: "n >= 2", vertices: "n" },
];

pub(crate) fn families(format: Format) -> Result<Outcome, CliError> {
    let text = match format {
        Format::Json => to_json(&serde_json::json!({ "families": FAMILIES }))?,
        Format::Csv => to_csv(&["family", "params", "constraint", "vertices"], FAMILIES)?,
    };
    Ok(Outcome { text, passed: true })
}

#[derive(Serialize)]
struct SpectrumSection {
    source: Source,
    #[serde(skip_serializing_if = "Option::is_none")]
    eigenvalues: Option<Vec<f64>>,
    certification: Certification,
}

#[derive(Serialize)]
struct SpectralReport<'a> {
    config: &'a Command,
    graph: GraphSection<'a>,
    spectrum: SpectrumSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    depth: Option<DepthResult>,
}

pub(crate) fn spectral(command: &Command, args: &GraphArgs, report: Report) -> Result<Outcome, CliError> {
    let spec = args.graph.load()?;
    let (n, eigenvalues, certification) = match args.source {
        Source::Numeric => {
            let g = realize(&spec)?;
            let sp = eigendecompose(laplacian(&g).as_matrix()).map_err(|e| CliError::Input(e.to_string()))?;
            let cert = certify_integral(&sp, args.int_tol).map_err(|e| CliError::Input(e.to_string()))?;
            (g.n_vertices(), Some(sp.eigenvalues), cert)
        }
        Source::Analytic => {
            let isp = analytic_spectrum(&spec).map_err(|e| CliError::Input(e.to_string()))?;
            (isp.dim(), None, Certification::Integral(isp))
        }
    };
    let depth = match (report, certification.integral()) {
        (Report::Depth, Some(isp)) => Some(depth(isp).map_err(|e| CliError::Input(e.to_string()))?),
        _ => None,
    };
    let text = match command.format() {
        Format::Json => to_json(&SpectralReport {
            config: command,
            graph: GraphSection { n, spec: &spec },
            spectrum: SpectrumSection {
                source: args.source,
                eigenvalues: if report == Report::Spectrum { eigenvalues.clone() } else { None },
                certification: certification.clone(),
            },
            depth: depth.clone(),
        })?,
        Format::Csv => match report {
            Report::Spectrum => spectrum_csv(eigenvalues.as_deref(), &certification)?,
            Report::Certify => certify_csv(&certification)?,
            Report::Depth => depth_csv(depth.as_ref())?,
        },
    };
    Ok(Outcome { text, passed: true })
}

fn spectrum_csv(eigenvalues: Option<&[f64]>, cert: &Certification) -> Result<String, CliError> {
    let header = ["index", "eigenvalue"];
    match (eigenvalues, cert.integral()) {
        (Some(values), _) => to_csv(&header, &values.iter().enumerate().collect::<Vec<_>>()),
        (None, Some(isp)) => {
            let expanded: Vec<(usize, f64)> = isp
                .values()
                .iter()
                .zip(isp.multiplicities())
                .flat_map(|(&v, &m)| std::iter::repeat_n(v as f64, m))
                .enumerate()
                .collect();
            to_csv(&header, &expanded)
        }
        (None, None) => to_csv::<(usize, f64)>(&header, &[]),
    }
}

fn certify_csv(cert: &Certification) -> Result<String, CliError> {
    let header = ["verdict", "value", "multiplicity", "distance"];
    let rows: Vec<(&str, f64, Option<usize>, Option<f64>)> = match cert {
        Certification::Integral(isp) => isp
            .values()
            .iter()
            .zip(isp.multiplicities())
            .map(|(&v, &m)| ("integral", v as f64, Some(m), None))
            .collect(),
        Certification::Rejected(r) => r
            .offending
            .iter()
            .map(|&OffendingEigenvalue { value, distance }| ("rejected", value, None, Some(distance)))
            .collect(),
    };
    to_csv(&header, &rows)
}

fn depth_csv(depth: Option<&DepthResult>) -> Result<String, CliError> {
    let header = ["step", "gcd", "values"];
    let rows: Vec<(usize, Option<u64>, String)> = depth
        .map(|d| {
            d.chain
                .iter()
                .enumerate()
                .map(|(i, step)| {
                    let values: Vec<String> = step.values.iter().map(u64::to_string).collect();
                    (i, step.gcd, values.join(" "))
                })
                .collect()
        })
        .unwrap_or_default();
    to_csv(&header, &rows)
}

#[derive(Serialize)]
struct MarkedSection<'a> {
    members: &'a [usize],
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

#[derive(Serialize)]
struct SearchResultSection<'a> {
    mode: ciqw_core::Mode,
    marked: MarkedSection<'a>,
    success_probability: f64,
    ancilla_residue: f64,
    vertex_distribution: &'a [f64],
    passed: bool,
}

#[derive(Serialize)]
struct SearchSection<'a> {
    params: &'a SearchParams,
    result: SearchResultSection<'a>,
    cost: &'a CostReport,
}

#[derive(Serialize)]
struct SearchReport<'a> {
    config: &'a Command,
    graph: GraphSection<'a>,
    search: SearchSection<'a>,
}

pub(crate) fn search(command: &Command, args: &SearchArgs) -> Result<Outcome, CliError> {
    let spec = args.graph.load()?;
    let g = realize(&spec)?;
    let n = g.n_vertices();
    let marked = match (&args.marked, args.marked_count, args.seed) {
        (Some(list), None, _) => MarkedSet::new(n, list.iter().copied())?,
        (None, Some(count), Some(seed)) => MarkedSet::seeded(n, count.resolve(n), seed)?,
        _ => return Err(CliError::Input("give exactly one of --marked or --marked-count with --seed".into())),
    };
    let config = SearchConfig {
        mode: args.mode.into(),
        params: args.params.as_ref().map(|p| p.resolve(marked.epsilon())).transpose()?,
        integrality_tol: args.int_tol,
        bypass_certification: args.bypass_certification,
        lambda_max: None,
    };
    let result = ciqw_core::run_search(&g, &marked, &config)?;
    let passed = result.success_probability >= 1.0 - args.tol;
    let text = match command.format() {
        Format::Json => to_json(&SearchReport {
            config: command,
            graph: GraphSection { n, spec: &spec },
            search: SearchSection {
                params: &result.params,
                result: SearchResultSection {
                    mode: result.mode,
                    marked: MarkedSection {
                        members: marked.members(),
                        seed: args.marked_count.and(args.seed),
                    },
                    success_probability: result.success_probability,
                    ancilla_residue: result.ancilla_residue,
                    vertex_distribution: &result.vertex_distribution,
                    passed,
                },
                cost: &result.cost,
            },
        })?,
        Format::Csv => to_csv(&ROW_HEADER, &[Row::from_result(0, &spec, &marked, &result, None)])?,
    };
    Ok(Outcome { text, passed })
}
