#![allow(dead_code)]

use arindex::graph::{Family, Graph};

/// Enumerates all subset sums and marks them in a table.
pub fn naive_dss(s: &[u64]) -> bool {
    let total = s.iter().sum::<u64>() as usize;
    let mut small = [false; 1024];
    let mut large = Vec::new();
    let seen: &mut [bool] = if total < small.len() {
        &mut small
    } else {
        large.resize(total + 1, false);
        &mut large
    };
    (0u64..1 << s.len()).all(|m| {
        let sum = (0..s.len()).filter(|&i| m >> i & 1 == 1).map(|i| s[i]).sum::<u64>() as usize;
        !std::mem::replace(&mut seen[sum], true)
    })
}

/// Labels at `v`, read straight off the edge list.
pub fn labels_at(g: &Graph, labels: &[u64], v: usize) -> Vec<u64> {
    (0..g.edge_count())
        .filter(|&e| {
            let (a, b) = g.edge(e);
            a == v || b == v
        })
        .map(|e| labels[e])
        .collect()
}

/// Injective, positive, and every vertex sees a DSS set.
pub fn naive_ar_labeling(g: &Graph, labels: &[u64]) -> bool {
    if labels.len() != g.edge_count() || labels.contains(&0) {
        return false;
    }
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == labels.len()
        && (0..g.vertex_count()).all(|v| {
            let here = labels_at(g, labels, v);
            here.is_empty() || naive_dss(&here)
        })
}

/// Tries every injective assignment of labels from `{1..k}` in edge order,
/// rejecting a prefix as soon as some vertex's assigned labels collide.
pub fn oracle_feasible(g: &Graph, k: u64) -> bool {
    fn rec(g: &Graph, k: u64, e: usize, labels: &mut Vec<u64>) -> bool {
        if e == g.edge_count() {
            return true;
        }
        let (u, v) = g.edge(e);
        for l in 1..=k {
            if labels.contains(&l) {
                continue;
            }
            labels.push(l);
            let ok = [u, v].iter().all(|&w| naive_dss(&labels_at_prefix(g, labels, w)));
            if ok && rec(g, k, e + 1, labels) {
                return true;
            }
            labels.pop();
        }
        false
    }
    rec(g, k, 0, &mut Vec::new())
}

fn labels_at_prefix(g: &Graph, labels: &[u64], v: usize) -> Vec<u64> {
    g.incident_edges(v)
        .unwrap()
        .iter()
        .filter(|&&f| f < labels.len())
        .map(|&f| labels[f])
        .collect()
}

pub fn oracle_ari(g: &Graph) -> u64 {
    (g.edge_count() as u64..).find(|&k| oracle_feasible(g, k)).unwrap()
}

/// Every family member with between 1 and 6 edges.
pub fn small_family_graphs() -> Vec<Family> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push(Family::Star(n));
    }
    for n in 2..=7 {
        out.push(Family::Path(n));
    }
    for n in 3..=6 {
        out.push(Family::Cycle(n));
    }
    for n in 2..=4 {
        out.push(Family::Complete(n));
    }
    for a in 1..=4 {
        for b in a..=4 {
            if a + b < 6 {
                out.push(Family::Bistar(a, b));
            }
        }
    }
    for m in 1..=6 {
        for n in m..=6 {
            if m * n <= 6 {
                out.push(Family::CompleteBipartite(m, n));
            }
        }
    }
    for parts in [vec![1, 1, 1], vec![1, 1, 2], vec![1, 1, 1, 1]] {
        out.push(Family::CompleteMultipartite(parts));
    }
    out.push(Family::Wheel(4));
    out
}
