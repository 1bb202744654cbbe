//! Laplacian integral graphs, their spectra, controlled quantum walks, and
//! deterministic spatial search built on them.

pub mod combinatorics;
pub mod graphs;
pub mod matrix;
pub mod search;
pub mod spectral;
pub mod walk;

pub use graphs::{build_graph, laplacian, Graph, GraphError, GraphSpec, LaplacianMatrix, VertexLabel};
pub use matrix::{ComplexMatrix, RealMatrix};
pub use search::{
    ctqw_gate_estimate, long_params, run_search, trotter_bound, CostReport, GroverParams, MarkedSet, Mode,
    SearchConfig, SearchError, SearchParams, SearchResult,
};
pub use spectral::{
    analytic_spectrum, certify_integral, depth, eigendecompose, Certification, DepthResult, IntegralSpectrum,
    IntegralityRejection, SpectralError, Spectrum,
};
pub use walk::{PhaseEstimationConfig, StateVector, WalkCounters, WalkError};
