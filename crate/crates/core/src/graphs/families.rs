use std::collections::BTreeSet;

use super::subspaces::{rank_mod, rref_subspaces};
use super::{Graph, GraphError, GraphSpec, VertexLabel};
use crate::combinatorics::{binomial, combinations, gaussian_binomial, is_prime};

/// Upper bound on realized graph size.
const MAX_VERTICES: u64 = 1 << 20;
/// Families built by testing every vertex pair are capped lower.
const MAX_PAIRWISE_VERTICES: u64 = 1 << 14;

fn invalid(family: &'static str, constraint: impl Into<String>) -> GraphError {
    GraphError::InvalidParameters {
        family,
        constraint: constraint.into(),
    }
}

pub(super) fn validate(spec: &GraphSpec) -> Result<(), GraphError> {
    let name = spec.family_name();
    match *spec {
        GraphSpec::Complete { n } | GraphSpec::CompleteSquare { n } | GraphSpec::CocktailParty { n } | GraphSpec::Star { n } => {
            if n < 1 {
                return Err(invalid(name, "n >= 1"));
            }
        }
        GraphSpec::Johnson { n, k } => {
            if k < 1 || k > n {
                return Err(invalid(name, "1 <= k <= n"));
            }
        }
        GraphSpec::Kneser { n, k } => {
            if k < 1 || k > n {
                return Err(invalid(name, "1 <= k <= n"));
            }
            if 2 * k >= n {
                return Err(invalid(name, "k < n/2"));
            }
        }
        GraphSpec::Hamming { d, q } => {
            if d < 1 {
                return Err(invalid(name, "d >= 1"));
            }
            if q < 2 {
                return Err(invalid(name, "q >= 2"));
            }
        }
        GraphSpec::Grassmann { q, n, k } => {
            if !is_prime(q as u64) || q > 7 {
                return Err(invalid(name, "q must be a prime <= 7"));
            }
            if k < 1 || k > n {
                return Err(invalid(name, "1 <= k <= n"));
            }
        }
        GraphSpec::Rook { m, n } => {
            if m < 1 || n < 1 {
                return Err(invalid(name, "m >= 1 and n >= 1"));
            }
        }
        GraphSpec::CompleteMultipartite { n, k } => {
            if n < 1 || k < 1 {
                return Err(invalid(name, "n >= 1 and k >= 1"));
            }
            if n % k != 0 {
                return Err(invalid(name, "k divides n"));
            }
        }
        GraphSpec::Antiregular { n } => {
            if n < 2 {
                return Err(invalid(name, "N >= 2"));
            }
        }
        GraphSpec::Custom { .. } => {}
    }
    Ok(())
}

pub(super) fn vertex_count(spec: &GraphSpec) -> u64 {
    let count: u128 = match *spec {
        GraphSpec::Complete { n } | GraphSpec::Antiregular { n } | GraphSpec::CompleteMultipartite { n, .. } => n as u128,
        GraphSpec::Custom { n, .. } => n as u128,
        GraphSpec::Johnson { n, k } | GraphSpec::Kneser { n, k } => binomial(n as i64, k as i64),
        GraphSpec::Hamming { d, q } => (q as u128).checked_pow(d as u32).unwrap_or(u128::MAX),
        GraphSpec::Grassmann { q, n, k } => gaussian_binomial(n as i64, k as i64, q as u64),
        GraphSpec::Rook { m, n } => (m as u128) * (n as u128),
        GraphSpec::CompleteSquare { n } => 4 * n as u128,
        GraphSpec::CocktailParty { n } => 2 * n as u128,
        GraphSpec::Star { n } => n as u128 + 1,
    };
    count.min(u64::MAX as u128) as u64
}

/// Realizes a family instance as a concrete graph.
///
/// Vertices are sorted lexicographically by label. Subsets use elements of
/// `{1..n}`; tuples, products, and Grassmann bases use 0-based coordinates;
/// antiregular vertices are labelled by insertion order.
pub fn build_graph(spec: &GraphSpec) -> Result<Graph, GraphError> {
    validate(spec)?;
    let count = vertex_count(spec);
    if count > MAX_VERTICES {
        return Err(GraphError::TooLarge(format!("{spec} has {count} vertices")));
    }
    let pairwise_guard = |spec: &GraphSpec| {
        if count > MAX_PAIRWISE_VERTICES {
            Err(GraphError::TooLarge(format!("{spec} has {count} vertices")))
        } else {
            Ok(())
        }
    };
    match *spec {
        GraphSpec::Complete { n } => {
            let labels = (0..n as u32).map(|i| vec![i]).collect();
            Ok(from_predicate(labels, |_, _| true))
        }
        GraphSpec::Johnson { n, k } => {
            pairwise_guard(spec)?;
            Ok(from_predicate(combinations(n, k), |a, b| intersection_size(a, b) == k - 1))
        }
        GraphSpec::Kneser { n, k } => {
            pairwise_guard(spec)?;
            Ok(from_predicate(combinations(n, k), |a, b| intersection_size(a, b) == 0))
        }
        GraphSpec::Hamming { d, q } => Ok(hamming(d, q)),
        GraphSpec::Grassmann { q, n, k } => {
            pairwise_guard(spec)?;
            Ok(grassmann(q as u32, n, k))
        }
        GraphSpec::Rook { m, n } => {
            let labels = pairs(m, n);
            Ok(from_predicate(labels, |a, b| (a[0] == b[0]) != (a[1] == b[1])))
        }
        GraphSpec::CompleteSquare { n } => {
            // (u, c): u a vertex of K_n, c a position on the 4-cycle.
            let labels = pairs(n, 4);
            Ok(from_predicate(labels, |a, b| {
                if a[0] == b[0] {
                    (a[1] + 4 - b[1]) % 4 == 1 || (b[1] + 4 - a[1]) % 4 == 1
                } else {
                    a[1] == b[1]
                }
            }))
        }
        GraphSpec::CocktailParty { n } => Ok(from_predicate(pairs(n, 2), |a, b| a[0] != b[0])),
        GraphSpec::CompleteMultipartite { n, k } => {
            // (class, member)
            Ok(from_predicate(pairs(k, n / k), |a, b| a[0] != b[0]))
        }
        GraphSpec::Star { n } => {
            let labels = (0..=n as u32).map(|i| vec![i]).collect();
            Ok(from_predicate(labels, |a, b| a[0] == 0 || b[0] == 0))
        }
        GraphSpec::Antiregular { n } => Ok(antiregular(n)),
        GraphSpec::Custom { n, ref edges } => Graph::from_edges(n, edges.iter().copied()),
    }
}

fn intersection_size(a: &[u32], b: &[u32]) -> usize {
    // Both sorted.
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

fn pairs(a: usize, b: usize) -> Vec<Vec<u32>> {
    (0..a as u32)
        .flat_map(|x| (0..b as u32).map(move |y| vec![x, y]))
        .collect()
}

/// Sorts labels and connects every pair satisfying `adjacent`.
fn from_predicate(mut labels: Vec<Vec<u32>>, adjacent: impl Fn(&[u32], &[u32]) -> bool) -> Graph {
    labels.sort();
    let n = labels.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adjacent(&labels[u], &labels[v]) {
                edges.push((u, v));
            }
        }
    }
    finish(n, edges, labels)
}

fn finish(n: usize, edges: Vec<(usize, usize)>, labels: Vec<Vec<u32>>) -> Graph {
    Graph::from_edges(n, edges)
        .expect("family builders produce simple graphs")
        .with_labels(labels.into_iter().map(VertexLabel).collect())
}

/// Tuples in lexicographic order coincide with mixed-radix index order, so
/// neighbours are found by changing one digit.
fn hamming(d: usize, q: usize) -> Graph {
    let n = q.pow(d as u32);
    let mut labels = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n * d * (q - 1) / 2);
    for idx in 0..n {
        let mut digits = vec![0u32; d];
        let mut rest = idx;
        for pos in (0..d).rev() {
            digits[pos] = (rest % q) as u32;
            rest /= q;
        }
        for (pos, &digit) in digits.iter().enumerate() {
            let weight = q.pow((d - 1 - pos) as u32);
            let own = digit as usize;
            for other in own + 1..q {
                edges.push((idx, idx + (other - own) * weight));
            }
        }
        labels.push(digits);
    }
    finish(n, edges, labels)
}

fn grassmann(q: u32, n: usize, k: usize) -> Graph {
    let mut bases = rref_subspaces(q, n, k);
    bases.sort_by_key(|b| b.concat());
    let count = bases.len();
    let mut edges = Vec::new();
    for u in 0..count {
        for v in u + 1..count {
            let stacked: Vec<Vec<u32>> = bases[u].iter().chain(&bases[v]).cloned().collect();
            // dim(A ∩ B) = 2k - dim(A + B) = k - 1
            if rank_mod(stacked, q) == k + 1 {
                edges.push((u, v));
            }
        }
    }
    let labels = bases.iter().map(|b| b.concat()).collect();
    finish(count, edges, labels)
}

/// Grows A_n from A_2 = K_2. The new vertex joins every vertex of degree
/// above floor(m/2) plus the more recently added of the two vertices whose
/// degree equals floor(m/2), m being the current vertex count.
fn antiregular(n: usize) -> Graph {
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::from([1]), BTreeSet::from([0])];
    for m in 2..n {
        let dup = m / 2;
        let mut targets: Vec<usize> = (0..m).filter(|&u| adj[u].len() > dup).collect();
        let tied = (0..m)
            .filter(|&u| adj[u].len() == dup)
            .max()
            .expect("antiregular graphs have a duplicated degree");
        targets.push(tied);
        adj.push(BTreeSet::new());
        for u in targets {
            adj[u].insert(m);
            adj[m].insert(u);
        }
    }
    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
        .collect();
    finish(n, edges, (0..n as u32).map(|i| vec![i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degree_multiset(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn triangle() {
        let g = build_graph(&GraphSpec::Complete { n: 3 }).unwrap();
        assert_eq!(g.n_vertices(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn antiregular_four() {
        let g = build_graph(&GraphSpec::Antiregular { n: 4 }).unwrap();
        assert_eq!(degree_multiset(&g), vec![1, 2, 2, 3]);
    }

    #[test]
    fn antiregular_degree_structure() {
        for n in 2..=12 {
            let g = build_graph(&GraphSpec::Antiregular { n }).unwrap();
            let degrees = degree_multiset(&g);
            let distinct: BTreeSet<usize> = degrees.iter().copied().collect();
            assert_eq!(distinct.len(), n - 1, "N={n}");
            let dup = n / 2;
            assert_eq!(degrees.iter().filter(|&&d| d == dup).count(), 2, "N={n}");
            assert!(g.is_connected());
        }
    }

    #[test]
    fn johnson_four_two_by_brute_force() {
        // Independent enumeration of 2-subsets of {1..4} with |S ∩ S'| = 1.
        let mut subsets = Vec::new();
        for a in 1..=4 {
            for b in a + 1..=4 {
                subsets.push([a, b]);
            }
        }
        let brute_degrees: Vec<usize> = subsets
            .iter()
            .map(|s| {
                subsets
                    .iter()
                    .filter(|t| s != *t && s.iter().filter(|x| t.contains(x)).count() == 1)
                    .count()
            })
            .collect();
        assert_eq!(brute_degrees, vec![4; 6]);
        let g = build_graph(&GraphSpec::Johnson { n: 4, k: 2 }).unwrap();
        assert_eq!(g.n_vertices(), 6);
        assert_eq!(g.degrees(), brute_degrees);
        assert_eq!(g.labels()[0].0, vec![1, 2]);
    }

    #[test]
    fn regular_degrees() {
        let cases: Vec<(GraphSpec, usize)> = vec![
            (GraphSpec::Rook { m: 2, n: 3 }, 3),
            (GraphSpec::Rook { m: 3, n: 4 }, 5),
            (GraphSpec::CompleteSquare { n: 3 }, 4),
            (GraphSpec::CompleteSquare { n: 5 }, 6),
            (GraphSpec::CocktailParty { n: 4 }, 6),
            (GraphSpec::CompleteMultipartite { n: 6, k: 3 }, 4),
            (GraphSpec::Hamming { d: 3, q: 3 }, 6),
            (GraphSpec::Kneser { n: 5, k: 2 }, 3),
            (GraphSpec::Kneser { n: 7, k: 3 }, 4),
            (GraphSpec::Johnson { n: 6, k: 3 }, 9),
            // q [k]_q [n-k]_q
            (GraphSpec::Grassmann { q: 2, n: 3, k: 1 }, 6),
            (GraphSpec::Grassmann { q: 2, n: 4, k: 2 }, 18),
            (GraphSpec::Grassmann { q: 3, n: 3, k: 1 }, 12),
        ];
        for (spec, degree) in cases {
            let g = build_graph(&spec).unwrap();
            assert_eq!(g.n_vertices() as u64, spec.vertex_count(), "{spec}");
            assert!(g.degrees().iter().all(|&d| d == degree), "{spec}");
        }
    }

    #[test]
    fn star_shape() {
        let g = build_graph(&GraphSpec::Star { n: 4 }).unwrap();
        assert_eq!(g.degrees(), vec![4, 1, 1, 1, 1]);
    }

    #[test]
    fn hamming_labels_are_sorted_tuples() {
        let g = build_graph(&GraphSpec::Hamming { d: 2, q: 3 }).unwrap();
        let labels: Vec<_> = g.labels().to_vec();
        let mut sorted = labels.clone();
        sorted.sort();
        assert_eq!(labels, sorted);
        assert_eq!(g.edges().len(), 9 * 4 / 2);
    }

    #[test]
    fn invalid_parameters_are_named() {
        let cases = [
            (GraphSpec::Johnson { n: 3, k: 4 }, "1 <= k <= n"),
            (GraphSpec::Kneser { n: 4, k: 2 }, "k < n/2"),
            (GraphSpec::Grassmann { q: 4, n: 3, k: 1 }, "prime"),
            (GraphSpec::CompleteMultipartite { n: 7, k: 3 }, "divides"),
            (GraphSpec::Antiregular { n: 1 }, "N >= 2"),
        ];
        for (spec, needle) in cases {
            let err = build_graph(&spec).unwrap_err();
            assert!(err.to_string().contains(needle), "{err}");
        }
    }

    #[test]
    fn deterministic() {
        let spec = GraphSpec::Grassmann { q: 3, n: 3, k: 2 };
        assert_eq!(build_graph(&spec).unwrap(), build_graph(&spec).unwrap());
    }

    #[test]
    fn too_large_is_refused() {
        assert!(matches!(
            build_graph(&GraphSpec::Hamming { d: 30, q: 2 }),
            Err(GraphError::TooLarge(_))
        ));
    }
}
