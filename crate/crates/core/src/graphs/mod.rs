//! Graph families, concrete graphs, and their Laplacians.
//!
//! A [`GraphSpec`] names a parametrized family instance; [`build_graph`] realizes
//! it as a simple undirected [`Graph`] whose vertices are ordered
//! lexicographically by their canonical labels.

mod edge_list;
mod families;
mod subspaces;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::RealMatrix;

pub use edge_list::{parse_edge_list, serialize_graph};
pub use families::build_graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid parameters for {family}: {constraint}")]
    InvalidParameters {
        family: &'static str,
        constraint: String,
    },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph too large to realize: {0}")]
    TooLarge(String),
}

/// A parametrized graph family instance.
///
/// Serialized as `{"family": "...", "params": {...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case")]
pub enum GraphSpec {
    /// K_n.
    Complete { n: usize },
    /// k-subsets of [n], adjacent when they share k-1 elements.
    Johnson { n: usize, k: usize },
    /// k-subsets of [n], adjacent when disjoint; requires 2k < n.
    Kneser { n: usize, k: usize },
    /// d-tuples over [q], adjacent when they differ in one coordinate.
    Hamming { d: usize, q: usize },
    /// k-dimensional subspaces of F_q^n, adjacent when they meet in dimension k-1.
    Grassmann { q: usize, n: usize, k: usize },
    /// K_m □ K_n.
    Rook { m: usize, n: usize },
    /// K_n □ C_4.
    CompleteSquare { n: usize },
    /// K_2n minus a perfect matching.
    CocktailParty { n: usize },
    /// n vertices in k equal classes, adjacent across classes.
    CompleteMultipartite { n: usize, k: usize },
    /// K_{1,n}.
    Star { n: usize },
    /// The connected antiregular graph on n vertices.
    Antiregular { n: usize },
    /// An explicit edge list on `n` vertices.
    Custom { n: usize, edges: Vec<(usize, usize)> },
}

impl GraphSpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            GraphSpec::Complete { .. } => "complete",
            GraphSpec::Johnson { .. } => "johnson",
            GraphSpec::Kneser { .. } => "kneser",
            GraphSpec::Hamming { .. } => "hamming",
            GraphSpec::Grassmann { .. } => "grassmann",
            GraphSpec::Rook { .. } => "rook",
            GraphSpec::CompleteSquare { .. } => "complete_square",
            GraphSpec::CocktailParty { .. } => "cocktail_party",
            GraphSpec::CompleteMultipartite { .. } => "complete_multipartite",
            GraphSpec::Star { .. } => "star",
            GraphSpec::Antiregular { .. } => "antiregular",
            GraphSpec::Custom { .. } => "custom",
        }
    }

    /// Checks the family's parameter constraints.
    pub fn validate(&self) -> Result<(), GraphError> {
        families::validate(self)
    }

    /// Number of vertices the realized graph will have, computed without
    /// building it. Saturates at `u64::MAX`.
    pub fn vertex_count(&self) -> u64 {
        families::vertex_count(self)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Complete { n } => write!(f, "complete({n})"),
            GraphSpec::Johnson { n, k } => write!(f, "johnson({n},{k})"),
            GraphSpec::Kneser { n, k } => write!(f, "kneser({n},{k})"),
            GraphSpec::Hamming { d, q } => write!(f, "hamming({d},{q})"),
            GraphSpec::Grassmann { q, n, k } => write!(f, "grassmann({q},{n},{k})"),
            GraphSpec::Rook { m, n } => write!(f, "rook({m},{n})"),
            GraphSpec::CompleteSquare { n } => write!(f, "complete_square({n})"),
            GraphSpec::CocktailParty { n } => write!(f, "cocktail_party({n})"),
            GraphSpec::CompleteMultipartite { n, k } => write!(f, "complete_multipartite({n},{k})"),
            GraphSpec::Star { n } => write!(f, "star({n})"),
            GraphSpec::Antiregular { n } => write!(f, "antiregular({n})"),
            GraphSpec::Custom { n, edges } => write!(f, "custom({n};{} edges)", edges.len()),
        }
    }
}

/// Canonical name of a vertex: the subset, tuple, or flattened basis matrix
/// it stands for. Vertex order is the lexicographic order of labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexLabel(pub Vec<u32>);

/// A simple undirected graph with vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: Vec<VertexLabel>,
}

impl Graph {
    /// Builds a graph from an edge list, labelling vertex `i` as `[i]`.
    ///
    /// Edges are normalized to `(min, max)` and sorted.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let labels = (0..n).map(|i| VertexLabel(vec![i as u32])).collect();
        Ok(Self {
            n,
            edges: normalized,
            labels,
        })
    }

    /// Replaces vertex labels. The caller guarantees one label per vertex.
    pub(crate) fn with_labels(mut self, labels: Vec<VertexLabel>) -> Self {
        debug_assert_eq!(labels.len(), self.n);
        self.labels = labels;
        self
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// Sorted edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Number of connected components (an empty graph has none).
    pub fn component_count(&self) -> usize {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut components = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn laplacian(&self) -> LaplacianMatrix {
        laplacian(self)
    }
}

/// `L = D - A` of a simple graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LaplacianMatrix(RealMatrix);

impl LaplacianMatrix {
    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn as_matrix(&self) -> &RealMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> RealMatrix {
        self.0
    }
}

impl std::ops::Index<(usize, usize)> for LaplacianMatrix {
    type Output = f64;

    fn index(&self, idx: (usize, usize)) -> &f64 {
        &self.0[idx]
    }
}

/// Laplacian with entries `-1` on edges, `0` on non-edges, and the degree on
/// the diagonal.
pub fn laplacian(g: &Graph) -> LaplacianMatrix {
    let mut m = RealMatrix::zeros(g.n);
    for &(u, v) in &g.edges {
        m[(u, v)] = -1.0;
        m[(v, u)] = -1.0;
        m[(u, u)] += 1.0;
        m[(v, v)] += 1.0;
    }
    LaplacianMatrix(m)
}

/// Whether `g` consists of a single connected component.
pub fn is_connected(g: &Graph) -> bool {
    g.is_connected()
}
