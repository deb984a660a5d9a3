//! Graph files: a JSON object
//!
//! ```json
//! {"vertices": 4, "edges": [[0, 1], [1, 2], [2, 3]], "name": "path 4"}
//! ```
//!
//! `vertices` is the vertex count, `edges` lists 0-indexed endpoint pairs and
//! `name` is an optional family tag. Unknown fields are rejected. Edges may
//! appear in any order and either orientation; they are canonicalized on load.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Deserialize;

use super::{canonical_edges, Graph};
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    name: Option<String>,
}

pub(crate) fn json_error(source: &str, e: &serde_json::Error) -> Error {
    Error::Parse {
        path: source.to_string(),
        position: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    }
}

/// Parses graph-file text; `source` names the input in error messages.
pub fn parse_graph(text: &str, source: &str) -> Result<Graph> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| json_error(source, &e))?;
    let edges = canonical_edges(file.vertices, file.edges.iter().map(|&[a, b]| (a, b))).map_err(|f| Error::Parse {
        path: source.to_string(),
        position: format!("edges[{}]", f.index),
        message: f.message,
    })?;
    Ok(Graph::from_canonical(file.vertices, edges, file.name))
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_graph(&text, &path.display().to_string())
}

/// Renders the graph-file text, one edge per line.
pub fn write_graph(g: &Graph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{{");
    if let Some(name) = g.name() {
        let _ = writeln!(s, "  \"name\": {},", serde_json::Value::from(name));
    }
    let _ = writeln!(s, "  \"vertices\": {},", g.vertex_count());
    if g.edges().is_empty() {
        let _ = writeln!(s, "  \"edges\": []");
    } else {
        let _ = writeln!(s, "  \"edges\": [");
        for (i, (u, v)) in g.edges().iter().enumerate() {
            let sep = if i + 1 < g.edge_count() { "," } else { "" };
            let _ = writeln!(s, "    [{u}, {v}]{sep}");
        }
        let _ = writeln!(s, "  ]");
    }
    s.push_str("}\n");
    s
}

pub fn save_graph(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, write_graph(g)).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn loads_k2() {
        let g = parse_graph(r#"{"vertices": 2, "edges": [[0, 1]]}"#, "t").unwrap();
        assert_eq!(g, Graph::new(2, [(0, 1)]).unwrap());
    }

    #[test]
    fn self_loop_is_a_positioned_parse_error() {
        let err = parse_graph(r#"{"vertices": 2, "edges": [[0, 1], [1, 1]]}"#, "t").unwrap_err();
        match err {
            Error::Parse { position, message, .. } => {
                assert_eq!(position, "edges[1]");
                assert!(message.contains("self-loop"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_and_unknown_fields() {
        let err = parse_graph("{\"vertices\": 2,\n \"edges\": [[0, 1, 2]]}", "t").unwrap_err();
        assert!(matches!(err, Error::Parse { ref position, .. } if position.starts_with("line 2")));
        assert!(parse_graph(r#"{"vertices": 2, "edges": [], "weights": []}"#, "t").is_err());
        assert!(parse_graph(r#"{"vertices": 2, "edges": [[0, 1], [1, 0]]}"#, "t").is_err());
        assert!(parse_graph(r#"{"vertices": 2, "edges": [[0, 5]]}"#, "t").is_err());
    }

    #[test]
    fn round_trip_through_text() {
        for f in [Family::Wheel(6), Family::Bistar(2, 3), Family::Path(2)] {
            let g = f.build().unwrap();
            assert_eq!(parse_graph(&write_graph(&g), "t").unwrap(), g);
        }
        let bare = Graph::new(3, []).unwrap();
        assert_eq!(parse_graph(&write_graph(&bare), "t").unwrap(), bare);
    }

    #[test]
    fn permuted_edges_load_identically() {
        let a = parse_graph(r#"{"vertices": 4, "edges": [[0, 1], [1, 2], [2, 3]]}"#, "t").unwrap();
        let b = parse_graph(r#"{"vertices": 4, "edges": [[3, 2], [1, 0], [2, 1]]}"#, "t").unwrap();
        assert_eq!(a.edges(), b.edges());
    }
}
