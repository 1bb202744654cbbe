//! Plain-text edge lists: a header line `n <count>` followed by one `u v`
//! pair per line. Blank lines and `#` comments are ignored.

use super::{Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| GraphError::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(count) = n else {
            match fields.as_slice() {
                ["n", count] => {
                    n = Some(count.parse().map_err(|_| err(format!("bad vertex count {count:?}")))?);
                    continue;
                }
                _ => return Err(err("expected header `n <count>`".into())),
            }
        };
        let [u, v] = fields.as_slice() else {
            return Err(err(format!("expected `u v`, found {line:?}")));
        };
        let parse = |s: &str| s.parse::<usize>().map_err(|_| err(format!("bad vertex {s:?}")));
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(err(GraphError::Loop(u).to_string()));
        }
        if let Some(&w) = [u, v].iter().find(|&&w| w >= count) {
            return Err(err(GraphError::VertexOutOfRange { vertex: w, n: count }.to_string()));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(err(GraphError::DuplicateEdge(key.0, key.1).to_string()));
        }
        edges.push(key);
    }
    let n = n.ok_or(GraphError::Parse {
        line: 0,
        message: "missing header `n <count>`".into(),
    })?;
    Graph::from_edges(n, edges)
}

/// Header plus edges in sorted order, one per line.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n_vertices());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
