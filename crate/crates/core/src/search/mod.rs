//! Deterministic spatial search: exact amplitude amplification whose phase
//! shift about `|π⟩` is built from controlled quantum walks.

mod estimate;
mod grover;
mod oracle;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphs::{laplacian, Graph};
use crate::spectral::{
    certify_integral, eigendecompose, Certification, IntegralityRejection, SpectralError, Spectrum,
    DEFAULT_INTEGRALITY_TOLERANCE,
};
use crate::walk::{
    reflection_circuit, reflection_circuit_unchecked, reflection_exact, PhaseEstimationConfig, StateVector,
    WalkCounters, WalkError,
};

pub use estimate::{ctqw_gate_estimate, trotter_bound, GateEstimate, TrotterEstimate};
pub use grover::{iteration_bound, k_opt, long_params, GroverParams};
pub use oracle::{oracle_phase, oracle_via_standard, MarkedSet};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("marked set is empty")]
    EmptyMarkedSet,
    #[error("marked vertex {vertex} out of range for {n} vertices")]
    MarkedOutOfRange { vertex: usize, n: usize },
    #[error("marked set is over {marked} vertices but the graph has {graph}")]
    MarkedSizeMismatch { marked: usize, graph: usize },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("graph is not Laplacian integral: {0}")]
    NonIntegral(IntegralityRejection),
    #[error("invalid epsilon: {0}")]
    InvalidEpsilon(String),
    #[error("{0}")]
    InvalidInput(String),
    #[error("flag qubit not in |0⟩ (residue {0:e})")]
    FlagNotReset(f64),
    #[error(transparent)]
    Walk(#[from] WalkError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// How the phase shift `e^{iβ|π⟩⟨π|}` is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Phase-estimation circuit on `ancilla ⊗ vertex`, counting every
    /// controlled walk.
    Circuit,
    /// Closed-form operator on the vertex register; costs are nominal.
    Exact,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub mode: Mode,
    /// Replaces the exact parameters derived from `|M|/N`.
    pub params: Option<GroverParams>,
    pub integrality_tol: f64,
    /// Runs circuit mode on a graph that fails certification.
    pub bypass_certification: bool,
    /// In exact mode, a known largest Laplacian eigenvalue; skips the
    /// eigendecomposition.
    pub lambda_max: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            mode: Mode::Circuit,
            params: None,
            integrality_tol: DEFAULT_INTEGRALITY_TOLERANCE,
            bypass_certification: false,
            lambda_max: None,
        }
    }
}

impl SearchConfig {
    pub fn with_mode(mode: Mode) -> Self {
        Self {
            mode,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchParams {
    #[serde(flatten)]
    pub grover: GroverParams,
    /// Largest Laplacian eigenvalue used to size the ancilla register.
    pub lambda_max: f64,
    #[serde(flatten)]
    pub phase: PhaseEstimationConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CostReport {
    pub oracle_queries: u64,
    pub ctqw_calls: u64,
    pub total_evolution_time: f64,
    pub per_reflection_time: f64,
    /// True when the walk figures were tallied during simulation rather
    /// than taken from the closed form.
    pub counted: bool,
}

impl CostReport {
    /// `k` oracle queries, `2s` controlled walks and `4π(1 - 2^{-s})`
    /// evolution time per phase shift.
    pub fn nominal(k: u64, phase: &PhaseEstimationConfig) -> Self {
        let per_reflection_time = phase.reflection_time();
        Self {
            oracle_queries: k,
            ctqw_calls: 2 * phase.s as u64 * k,
            total_evolution_time: k as f64 * per_reflection_time,
            per_reflection_time,
            counted: false,
        }
    }

    fn counted(k: u64, phase: &PhaseEstimationConfig, counters: &WalkCounters) -> Self {
        Self {
            oracle_queries: k,
            ctqw_calls: counters.ctqw_calls,
            total_evolution_time: counters.evolution_time,
            per_reflection_time: phase.reflection_time(),
            counted: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchResult {
    pub mode: Mode,
    pub params: SearchParams,
    /// Probability of measuring a marked vertex.
    pub success_probability: f64,
    /// Measurement distribution over vertices, ancillas traced out.
    pub vertex_distribution: Vec<f64>,
    /// Norm of the ancilla sectors other than `|0^s⟩`; zero in exact mode.
    pub ancilla_residue: f64,
    pub cost: CostReport,
    #[serde(skip)]
    pub final_state: StateVector,
}

fn check_graph(graph: &Graph, marked: &MarkedSet) -> Result<(), SearchError> {
    if marked.n_vertices() != graph.n_vertices() {
        return Err(SearchError::MarkedSizeMismatch {
            marked: marked.n_vertices(),
            graph: graph.n_vertices(),
        });
    }
    let components = graph.component_count();
    if components != 1 {
        return Err(SearchError::Disconnected { components });
    }
    Ok(())
}

/// Eigendecomposition plus the largest eigenvalue to size the ancillas:
/// the certified integer when integral, the raw value when bypassing.
fn certified_spectrum(graph: &Graph, config: &SearchConfig) -> Result<(Spectrum, f64), SearchError> {
    let sp = eigendecompose(laplacian(graph).as_matrix())?;
    match certify_integral(&sp, config.integrality_tol)? {
        Certification::Integral(integral) => {
            let largest = integral.largest() as f64;
            Ok((sp, largest))
        }
        Certification::Rejected(rejection) if !config.bypass_certification => Err(SearchError::NonIntegral(rejection)),
        Certification::Rejected(_) => {
            let largest = sp.largest();
            Ok((sp, largest))
        }
    }
}

/// `k` rounds of `e^{iβ|π⟩⟨π|}·e^{iαΠ_M}` from the uniform state.
pub fn run_search(graph: &Graph, marked: &MarkedSet, config: &SearchConfig) -> Result<SearchResult, SearchError> {
    check_graph(graph, marked)?;
    let grover = match config.params {
        Some(p) => p,
        None => long_params(marked.epsilon())?,
    };
    let n = graph.n_vertices();

    let (spectrum, lambda_max) = match (config.mode, config.lambda_max) {
        (Mode::Exact, Some(lambda)) => (None, lambda as f64),
        _ => {
            let (sp, lambda) = certified_spectrum(graph, config)?;
            (Some(sp), lambda)
        }
    };
    let phase = PhaseEstimationConfig::for_largest_eigenvalue(lambda_max);
    let params = SearchParams {
        grover,
        lambda_max,
        phase,
    };

    let (state, cost) = match config.mode {
        Mode::Exact => {
            let mut state = StateVector::uniform(n);
            for _ in 0..grover.k {
                oracle_phase(&mut state, marked, grover.alpha)?;
                reflection_exact(&mut state, grover.beta)?;
            }
            (state, CostReport::nominal(grover.k, &phase))
        }
        Mode::Circuit => {
            let sp = spectrum.expect("circuit mode always decomposes");
            let mut state = StateVector::joint(phase.s, 0, &StateVector::uniform(n))?;
            let mut counters = WalkCounters::default();
            for _ in 0..grover.k {
                oracle_phase(&mut state, marked, grover.alpha)?;
                if config.bypass_certification {
                    reflection_circuit_unchecked(&mut state, &sp, &phase, grover.beta, &mut counters)?;
                } else {
                    reflection_circuit(&mut state, &sp, &phase, grover.beta, &mut counters)?;
                }
            }
            (state, CostReport::counted(grover.k, &phase, &counters))
        }
    };

    let vertex_distribution = state.vertex_distribution();
    let success_probability = marked.members().iter().map(|&v| vertex_distribution[v]).sum();
    Ok(SearchResult {
        mode: config.mode,
        params,
        success_probability,
        vertex_distribution,
        ancilla_residue: state.ancilla_residue(),
        cost,
        final_state: state,
    })
}
