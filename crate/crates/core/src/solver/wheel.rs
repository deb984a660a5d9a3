//! AR-labelings of wheels with maximum label `ES(n − 1)`.
//!
//! The hub has degree `n − 1`, so `ES(n − 1)` is a lower bound. The spokes
//! take a DSS witness with that maximum. Every rim vertex then sees its spoke
//! and two rim labels, which form a DSS set iff the three are distinct and no
//! one is the sum of the other two. From `n = 8` on there are enough spare
//! labels below `ES(n − 1)` for a greedy fill of the rim: first a matching of
//! the rim cycle, then the remaining rim edges with the smallest feasible
//! unused label.

use std::time::Duration;

use serde::Serialize;

use crate::budget::Deadline;
use crate::check::{is_ar_labeling, Labeling};
use crate::dss::{is_dss, DssSet};
use crate::error::{Error, Result};
use crate::es::{conway_guy_set, es, known_es, EsConfig};
use crate::graph::{Family, Graph};

use super::{feasibility, Feasibility, SearchConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WheelMethod {
    /// Spokes from the witness, rim by matching then greedy fill.
    Greedy,
    /// Spokes from the witness, rim by backtracking.
    SpokesFixedSearch,
    /// Unrestricted backtracking with labels up to `ES(n − 1)`.
    FullSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WheelLabeling {
    pub n: usize,
    pub es: u64,
    pub labeling: Labeling,
    pub method: WheelMethod,
    /// True when the greedy fill was attempted and got stuck.
    pub greedy_failed: bool,
}

/// A DSS set of size `j` with maximum `ES(j)`.
fn spoke_witness(j: usize, budget: Option<Duration>) -> Result<DssSet> {
    if let Some(v) = known_es(j) {
        let cg = conway_guy_set(j)?;
        if cg.max_element() == v {
            return Ok(cg);
        }
    }
    let rec = es(j, &EsConfig { budget, threads: 1 })?;
    if !rec.is_exact() {
        return Err(Error::UnsupportedSize(format!(
            "ES({j}) is not available within the budget (only [{}, {}])",
            rec.lower, rec.upper
        )));
    }
    Ok(rec.witness)
}

fn fits_at(labels_here: &[u64], l: u64) -> bool {
    let mut set: Vec<u64> = labels_here.iter().copied().filter(|&x| x != 0).collect();
    if set.contains(&l) {
        return false;
    }
    set.push(l);
    is_dss(&set).unwrap_or(false)
}

/// Rim edge indices in cycle order: `(1,2), (2,3), …, (r−1,r), (r,1)`.
fn rim_edges(g: &Graph, rim: usize) -> Vec<usize> {
    (1..=rim)
        .map(|i| {
            let j = if i == rim { 1 } else { i + 1 };
            g.edge_index(i, j).expect("wheel rim edge")
        })
        .collect()
}

fn greedy(g: &Graph, spokes: &DssSet, k: u64) -> Option<Vec<u64>> {
    let rim = g.vertex_count() - 1;
    let mut labels = vec![0u64; g.edge_count()];
    for (i, &s) in spokes.elements().iter().enumerate() {
        labels[g.edge_index(0, i + 1)?] = s;
    }
    let cycle = rim_edges(g, rim);
    // Even positions form a matching; an odd rim leaves its last edge out.
    let matching: Vec<usize> = cycle.iter().copied().step_by(2).take(rim / 2).collect();
    let rest: Vec<usize> = cycle.iter().copied().filter(|e| !matching.contains(e)).collect();
    for e in matching.into_iter().chain(rest) {
        let (u, v) = g.edge(e);
        let at = |w: usize, labels: &[u64]| -> Vec<u64> { g.incidence().of(w).iter().map(|&f| labels[f]).collect() };
        let l =
            (1..=k).find(|&l| !labels.contains(&l) && fits_at(&at(u, &labels), l) && fits_at(&at(v, &labels), l))?;
        labels[e] = l;
    }
    Some(labels)
}

/// Labels `W_n` (`n ≥ 6`) with maximum label `ES(n − 1)`.
///
/// For `n ≥ 8` the greedy fill runs first; if it fails the rim is searched
/// with the spokes fixed, then without restrictions. `n = 6, 7` go straight
/// to the unrestricted search.
pub fn label_wheel(n: usize, cfg: &SearchConfig) -> Result<WheelLabeling> {
    if n < 6 {
        return Err(Error::invalid(format!("label_wheel needs n >= 6, got {n}")));
    }
    let g = Family::Wheel(n).build()?;
    let spokes = spoke_witness(n - 1, cfg.budget)?;
    let k = spokes.max_element();
    let deadline = Deadline::after(cfg.budget);
    let done = |labels: Vec<u64>, method, greedy_failed| -> Result<WheelLabeling> {
        let labeling = Labeling::new(labels)?;
        let verdict = is_ar_labeling(&g, &labeling)?;
        if !verdict.ok || labeling.max_label() != k {
            return Err(Error::Internal(format!(
                "wheel {n} labeling failed verification: {verdict}"
            )));
        }
        Ok(WheelLabeling {
            n,
            es: k,
            labeling,
            method,
            greedy_failed,
        })
    };

    let mut greedy_failed = false;
    if n >= 8 {
        match greedy(&g, &spokes, k) {
            Some(labels) => return done(labels, WheelMethod::Greedy, false),
            None => greedy_failed = true,
        }
        let fixed = spokes
            .elements()
            .iter()
            .enumerate()
            .map(|(i, &s)| (g.edge_index(0, i + 1).expect("spoke"), s))
            .collect();
        let attempt = feasibility(&g, k, fixed, false, cfg, deadline)?;
        match attempt.result {
            Feasibility::Found { labeling } => {
                return done(labeling.labels().to_vec(), WheelMethod::SpokesFixedSearch, true)
            }
            Feasibility::TimedOut => return Err(timed_out(n)),
            _ => {}
        }
    }
    let attempt = feasibility(&g, k, Vec::new(), false, cfg, deadline)?;
    match attempt.result {
        Feasibility::Found { labeling } => done(labeling.labels().to_vec(), WheelMethod::FullSearch, greedy_failed),
        Feasibility::TimedOut => Err(timed_out(n)),
        Feasibility::Refuted | Feasibility::RefutedByBound => {
            Err(Error::Internal(format!("no AR-labeling of wheel {n} with maximum {k}")))
        }
    }
}

fn timed_out(n: usize) -> Error {
    Error::UnsupportedSize(format!("wheel {n}: budget exhausted before a labeling was found"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_wheels_by_search() {
        let cfg = SearchConfig::default();
        let w6 = label_wheel(6, &cfg).unwrap();
        assert_eq!((w6.es, w6.method), (13, WheelMethod::FullSearch));
        let w7 = label_wheel(7, &cfg).unwrap();
        assert_eq!(w7.labeling.max_label(), 24);
    }

    #[test]
    fn larger_wheels_by_greedy() {
        let cfg = SearchConfig::default();
        for (n, es) in [(8, 44), (9, 84), (10, 161)] {
            let w = label_wheel(n, &cfg).unwrap();
            assert_eq!(w.labeling.max_label(), es);
            assert_eq!(w.method, WheelMethod::Greedy, "wheel {n}");
        }
    }

    #[test]
    fn rejects_small_n() {
        assert!(label_wheel(5, &SearchConfig::default()).is_err());
    }
}
