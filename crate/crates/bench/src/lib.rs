//! Benchmark fixtures.

use ciqw_core::{build_graph, Graph, GraphSpec, MarkedSet};

/// Graphs spanning the sizes the simulator is meant for.
pub fn fixtures() -> Vec<(GraphSpec, Graph)> {
    [
        GraphSpec::Johnson { n: 6, k: 2 },
        GraphSpec::Hamming { d: 5, q: 2 },
        GraphSpec::Kneser { n: 7, k: 3 },
        GraphSpec::Antiregular { n: 24 },
    ]
    .into_iter()
    .map(|spec| {
        let g = build_graph(&spec).expect("fixture parameters are valid");
        (spec, g)
    })
    .collect()
}

/// One marked vertex, fixed seed.
pub fn single_mark(g: &Graph) -> MarkedSet {
    MarkedSet::seeded(g.n_vertices(), 1, 1).expect("fixtures are nonempty")
}
