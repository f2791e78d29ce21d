//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! n m
//! u v      (m lines, 0-based, single space)
//! ```
//!
//! Everything after a `#` is a comment; blank lines are ignored. The file
//! must end with a newline.

use super::{Graph, GraphError};

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), GraphError> {
    let err = |message: String| GraphError::Parse {
        line: lineno,
        message,
    };
    let mut it = line.split(' ');
    let (a, b) = match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => (a, b),
        _ => return Err(err(format!("expected two integers separated by one space, got {line:?}"))),
    };
    let a = a
        .parse::<usize>()
        .map_err(|e| err(format!("bad integer {a:?}: {e}")))?;
    let b = b
        .parse::<usize>()
        .map_err(|e| err(format!("bad integer {b:?}: {e}")))?;
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    if !text.ends_with('\n') {
        return Err(GraphError::Parse {
            line: text.lines().count().max(1),
            message: "missing trailing newline".into(),
        });
    }
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim_end_matches('\r').trim_end();
        if content.is_empty() {
            continue;
        }
        let pair = parse_pair(content, lineno)?;
        match header {
            None => header = Some(pair),
            Some(_) => edges.push((pair, lineno)),
        }
    }
    let (n, m) = header.ok_or(GraphError::Parse {
        line: 1,
        message: "missing \"n m\" header".into(),
    })?;
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: edges.last().map_or(1, |&(_, l)| l),
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    // Validate edge by edge so errors carry the offending line.
    let mut seen = std::collections::HashSet::with_capacity(m);
    for &((u, v), lineno) in &edges {
        let check = if u >= n || v >= n {
            Err(GraphError::VertexOutOfRange { vertex: u.max(v), n })
        } else if u == v {
            Err(GraphError::SelfLoop(u))
        } else if !seen.insert(super::edge(u, v)) {
            Err(GraphError::DuplicateEdge(u.min(v), u.max(v)))
        } else {
            Ok(())
        };
        check.map_err(|e| GraphError::Parse {
            line: lineno,
            message: e.to_string(),
        })?;
    }
    Graph::new(n, edges.into_iter().map(|(pair, _)| pair))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
