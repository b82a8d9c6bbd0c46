use std::collections::HashSet;
use std::fmt::Write;

use super::InputError;
use crate::graph::Graph;

fn line_err(line: usize, msg: impl Into<String>) -> InputError {
    InputError::Line { line, msg: msg.into() }
}

/// Parses the `nodes <N>` + `<u> <v>` format. `#` lines and blank lines are
/// skipped; every error names its 1-based line.
pub fn parse_edge_list(text: &str) -> Result<Graph, InputError> {
    let mut n = None;
    let mut pairs = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let Some(n) = n else {
            match fields.as_slice() {
                ["nodes", count] => {
                    let count: usize = count.parse().map_err(|_| line_err(line, "invalid node count"))?;
                    if count == 0 {
                        return Err(line_err(line, "node count must be positive"));
                    }
                    n = Some(count);
                    continue;
                }
                _ => return Err(line_err(line, "expected header 'nodes <N>'")),
            }
        };
        let [a, b] = fields.as_slice() else {
            return Err(line_err(line, "expected two node ids"));
        };
        let (u, v) = match (a.parse::<usize>(), b.parse::<usize>()) {
            (Ok(u), Ok(v)) => (u, v),
            _ => return Err(line_err(line, "invalid node id")),
        };
        if let Some(&x) = [u, v].iter().find(|&&x| x >= n) {
            return Err(line_err(line, format!("node {x} out of range for {n} nodes")));
        }
        if u == v {
            return Err(line_err(line, format!("self-loop on node {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(line_err(line, format!("duplicate edge ({u}, {v})")));
        }
        pairs.push((u, v));
    }
    let n = n.ok_or(InputError::MissingHeader)?;
    Ok(Graph::from_edge_list(n, &pairs).expect("edges validated line by line"))
}

/// Canonical form: header, then edges `u < v` in sorted order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("nodes {}\n", g.node_count());
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}
