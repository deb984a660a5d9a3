//! Simple undirected graphs with a canonical edge order.
//!
//! Edges are stored as `(u, v)` with `u < v`, sorted lexicographically. Edge
//! labelings are plain arrays aligned to that order, so the order is part of
//! every file format.

mod families;
mod io;

pub use families::Family;
pub(crate) use io::json_error;
pub use io::{load_graph, parse_graph, save_graph, write_graph};

use crate::error::{Error, Result};

/// Per-vertex lists of incident edge indices, in increasing edge index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceIndex {
    lists: Vec<Vec<usize>>,
}

impl IncidenceIndex {
    fn build(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut lists = vec![Vec::new(); vertex_count];
        for (i, &(u, v)) in edges.iter().enumerate() {
            lists[u].push(i);
            lists[v].push(i);
        }
        IncidenceIndex { lists }
    }

    pub fn of(&self, v: usize) -> &[usize] {
        &self.lists[v]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    name: Option<String>,
    incidence: IncidenceIndex,
}

/// Problem with the edge at position `index` of the input list.
pub(crate) struct EdgeFault {
    pub(crate) index: usize,
    pub(crate) message: String,
}

pub(crate) fn canonical_edges(
    vertex_count: usize,
    edges: impl IntoIterator<Item = (usize, usize)>,
) -> Result<Vec<(usize, usize)>, EdgeFault> {
    let mut out: Vec<(usize, usize, usize)> = Vec::new();
    for (index, (a, b)) in edges.into_iter().enumerate() {
        if a == b {
            return Err(EdgeFault {
                index,
                message: format!("self-loop [{a}, {b}]"),
            });
        }
        if a >= vertex_count || b >= vertex_count {
            return Err(EdgeFault {
                index,
                message: format!("endpoint out of range in [{a}, {b}] with {vertex_count} vertices"),
            });
        }
        out.push((a.min(b), a.max(b), index));
    }
    out.sort_unstable();
    if let Some(w) = out.windows(2).find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
        return Err(EdgeFault {
            index: w[0].2.max(w[1].2),
            message: format!("duplicate edge [{}, {}]", w[1].0, w[1].1),
        });
    }
    Ok(out.into_iter().map(|(u, v, _)| (u, v)).collect())
}

impl Graph {
    /// Builds a graph, canonicalizing endpoint order and edge order.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let edges = canonical_edges(vertex_count, edges)
            .map_err(|f| Error::invalid(format!("edge {}: {}", f.index, f.message)))?;
        Ok(Self::from_canonical(vertex_count, edges, None))
    }

    pub(crate) fn from_canonical(vertex_count: usize, edges: Vec<(usize, usize)>, name: Option<String>) -> Self {
        let incidence = IncidenceIndex::build(vertex_count, &edges);
        Graph {
            vertex_count,
            edges,
            name,
            incidence,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// `m(G)`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn incidence(&self) -> &IncidenceIndex {
        &self.incidence
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count {
            return Err(Error::invalid(format!(
                "vertex {v} out of range for a graph with {} vertices",
                self.vertex_count
            )));
        }
        Ok(())
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.incidence.of(v).len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count).map(|v| self.incidence.of(v).len()).collect()
    }

    /// `Δ(G)`; 0 for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count)
            .map(|v| self.incidence.of(v).len())
            .max()
            .unwrap_or(0)
    }

    pub fn incident_edges(&self, v: usize) -> Result<&[usize]> {
        self.check_vertex(v)?;
        Ok(self.incidence.of(v))
    }

    /// The family this graph was generated from, if its name parses as a
    /// family spec and the edge set really is that family's.
    pub fn family(&self) -> Option<Family> {
        let family: Family = self.name.as_deref()?.parse().ok()?;
        let built = family.build().ok()?;
        (built.edges == self.edges && built.vertex_count == self.vertex_count).then_some(family)
    }

    /// Adds a new vertex adjacent to `at`; returns the graph and the new vertex.
    pub fn with_pendant(&self, at: usize) -> Result<(Graph, usize)> {
        self.check_vertex(at)?;
        let v = self.vertex_count;
        let g = Graph::new(v + 1, self.edges.iter().copied().chain([(at, v)]))?;
        Ok((g, v))
    }

    /// Attaches a path on `len` new vertices to `at`, adding `len` edges.
    pub fn with_path(&self, at: usize, len: usize) -> Result<Graph> {
        self.check_vertex(at)?;
        let n = self.vertex_count;
        let new_edges = (0..len).map(|i| if i == 0 { (at, n) } else { (n + i - 1, n + i) });
        Graph::new(n + len, self.edges.iter().copied().chain(new_edges))
    }

    /// Index of edge `{u, v}` in canonical order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }
}
