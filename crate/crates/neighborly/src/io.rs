//! Edge-list graph files.
//!
//! One `u v` pair per line, whitespace separated, 0-based. Blank lines and
//! lines starting with `#` are skipped. An edge may be listed in either or
//! both orientations; the vertex count is one more than the largest index.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use neighborly_core::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    let mut num_vertices = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| EdgeListError::Parse { line: i + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(parse_err(format!("expected two vertices, found {}", fields.len())));
        };
        let u: usize = a.parse().map_err(|_| parse_err(format!("bad vertex {a:?}")))?;
        let v: usize = b.parse().map_err(|_| parse_err(format!("bad vertex {b:?}")))?;
        num_vertices = num_vertices.max(u + 1).max(v + 1);
        // the reverse orientation of an edge already read is the same edge
        if seen.contains(&(v, u)) && u != v {
            continue;
        }
        seen.insert((u, v));
        edges.push((u, v));
    }
    Ok(Graph::from_edges(num_vertices, edges)?)
}

pub fn read_edge_list(path: &Path) -> Result<Graph, EdgeListError> {
    let text = fs::read_to_string(path).map_err(|source| EdgeListError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_edge_list(&text)
}

/// Edge list text for `g`, one edge per line with `u < v`.
pub fn format_edge_list(g: &Graph) -> String {
    g.edges().map(|(u, v)| format!("{u} {v}\n")).collect()
}
