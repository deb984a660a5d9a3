//! Every graph is an induced subgraph of an AR-graph.
//!
//! Attach a pendant vertex `v` to vertex 0, giving `G′`. Take an optimal
//! labeling of `G′` with maximum `ARI(G′)`; it misses exactly
//! `l = ARI(G′) − m(G′)` labels of `{1..ARI(G′)}`. Attaching a path of `l`
//! new vertices to `v` and giving its edges those missing labels keeps every
//! vertex AR (new vertices have degree at most 2, and `v` gets two labels),
//! and the result uses exactly `{1..m(H)}`.

use serde::Serialize;

use crate::check::{is_ar_labeling, Labeling};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{ari, is_ar_graph, Decision, SearchConfig};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    /// Vertices and edges of the AR supergraph; the input graph is induced on
    /// its first vertices.
    #[serde(serialize_with = "edges_of")]
    pub graph: Graph,
    pub labeling: Labeling,
    /// The pendant vertex, or `None` when the input was already AR.
    pub pendant: Option<usize>,
    /// Number of vertices on the attached path.
    pub path_len: usize,
}

fn edges_of<S: serde::Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Graph", 2)?;
    st.serialize_field("vertices", &g.vertex_count())?;
    st.serialize_field("edges", g.edges())?;
    st.end()
}

/// Builds an AR-graph containing `g` as an induced subgraph, with a labeling
/// by `{1..m(H)}`. Returns `None` if the budget runs out.
pub fn embed_in_ar_graph(g: &Graph, cfg: &SearchConfig) -> Result<Option<Embedding>> {
    match is_ar_graph(g, cfg)? {
        Decision::Yes { witness } => {
            return Ok(Some(Embedding {
                graph: g.clone(),
                labeling: witness,
                pendant: None,
                path_len: 0,
            }))
        }
        Decision::Unknown => return Ok(None),
        Decision::No => {}
    }
    if g.vertex_count() == 0 {
        return Err(Error::invalid("cannot attach a pendant to a graph with no vertices"));
    }
    let (augmented, v) = g.with_pendant(0)?;
    let result = ari(&augmented, cfg)?;
    let (Some(index), Some(witness)) = (result.value(), result.witness) else {
        return Ok(None);
    };
    let path_len = (index - augmented.edge_count() as u64) as usize;
    let h = augmented.with_path(v, path_len)?;

    let mut labels = vec![0u64; h.edge_count()];
    for (e, &(a, b)) in augmented.edges().iter().enumerate() {
        let f = h.edge_index(a, b).expect("augmented edge in H");
        labels[f] = witness.label(e);
    }
    let mut missing = (1..=index).filter(|l| !witness.labels().contains(l));
    let n = augmented.vertex_count();
    for i in 0..path_len {
        let (a, b) = if i == 0 { (v, n) } else { (n + i - 1, n + i) };
        let f = h.edge_index(a, b).expect("path edge in H");
        labels[f] = missing.next().expect("one missing label per path edge");
    }
    let labeling = Labeling::new(labels)?;
    let verdict = is_ar_labeling(&h, &labeling)?;
    if !verdict.ok || labeling.max_label() != h.edge_count() as u64 {
        return Err(Error::Internal(format!("embedding failed verification: {verdict}")));
    }
    Ok(Some(Embedding {
        graph: h,
        labeling,
        pendant: Some(v),
        path_len,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn ar_graph_is_returned_unchanged() {
        let p4 = Family::Path(4).build().unwrap();
        let e = embed_in_ar_graph(&p4, &SearchConfig::default()).unwrap().unwrap();
        assert_eq!(e.graph, p4);
        assert_eq!(e.pendant, None);
        assert_eq!(e.labeling.max_label(), 3);
    }

    #[test]
    fn star_is_embedded() {
        let s3 = Family::Star(3).build().unwrap();
        let e = embed_in_ar_graph(&s3, &SearchConfig::default()).unwrap().unwrap();
        assert_eq!(e.pendant, Some(4));
        assert!(is_ar_labeling(&e.graph, &e.labeling).unwrap().ok);
        assert_eq!(e.labeling.max_label(), e.graph.edge_count() as u64);
        // The original edges and vertices are untouched.
        for &(a, b) in s3.edges() {
            assert!(e.graph.edge_index(a, b).is_some());
        }
        for a in 0..4 {
            for b in a + 1..4 {
                assert_eq!(e.graph.edge_index(a, b).is_some(), s3.edge_index(a, b).is_some());
            }
        }
    }
}
