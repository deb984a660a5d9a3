//! Lower bounds on the AR-index that need no search.

use crate::error::{Error, Result};
use crate::es::es_bound;
use crate::graph::Graph;

/// Least admissible maximum label at each vertex: `ES(deg v)`.
pub(crate) fn vertex_requirements(g: &Graph) -> Vec<u64> {
    g.degrees().into_iter().map(es_bound).collect()
}

/// Label-capacity test for labels `{1..k}`.
///
/// Every vertex `v` needs an incident label of at least `ES(deg v)`, and a
/// label value sits on one edge, so it serves at most two vertices. For each
/// threshold `t`, the vertices needing a label `≥ t` must fit in
/// `2·(k − t + 1)`. Returns false when some threshold overflows (k refuted).
pub fn counting_prune(g: &Graph, k: u64) -> bool {
    let mut need = vertex_requirements(g);
    need.retain(|&r| r > 0);
    need.sort_unstable_by(|a, b| b.cmp(a));
    // need[i] is the (i+1)-th largest requirement; checking t = need[i]
    // covers every threshold since counts only change there.
    for (i, &t) in need.iter().enumerate() {
        let count = (i + 1) as u64;
        let capacity = if t > k { 0 } else { 2 * (k - t + 1) };
        if count > capacity {
            return false;
        }
    }
    true
}

/// The largest `k0` such that every `k < k0` is refuted by injectivity
/// (`k < m`), by `ES(Δ)`, or by [`counting_prune`].
pub fn ari_lower_bound(g: &Graph) -> Result<u64> {
    if g.edge_count() == 0 {
        return Err(Error::invalid("the AR-index needs at least one edge"));
    }
    let mut k = (g.edge_count() as u64).max(es_bound(g.max_degree()));
    while !counting_prune(g, k) {
        k += 1;
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn g(f: Family) -> Graph {
        f.build().unwrap()
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(ari_lower_bound(&g(Family::Star(5))).unwrap(), 13);
        assert!(ari_lower_bound(&g(Family::Complete(6))).unwrap() >= 13);
        assert_eq!(ari_lower_bound(&g(Family::Path(4))).unwrap(), 3);
        assert!(ari_lower_bound(&Graph::new(2, []).unwrap()).is_err());
    }

    #[test]
    fn multipartite_capacity_argument() {
        let k333 = g(Family::CompleteMultipartite(vec![3, 3, 3]));
        assert!(!counting_prune(&k333, 27));
        assert!(counting_prune(&k333, 28));
        assert_eq!(ari_lower_bound(&k333).unwrap(), 28);
    }

    #[test]
    fn star_capacity() {
        assert!(counting_prune(&g(Family::Star(3)), 4));
        assert!(!counting_prune(&g(Family::Star(3)), 3));
    }

    #[test]
    fn prune_is_monotone_in_k() {
        for f in [
            Family::Complete(6),
            Family::CompleteBipartite(5, 5),
            Family::Wheel(9),
            Family::CompleteMultipartite(vec![3, 3, 3]),
        ] {
            let graph = g(f);
            let mut seen_true = false;
            for k in 1..80 {
                let ok = counting_prune(&graph, k);
                assert!(!seen_true || ok);
                seen_true |= ok;
            }
        }
    }
}
