//! Exact AR-index computation and AR-graph decisions.
//!
//! `ARI(G)` is the least `k` admitting an AR-labeling into `{1..k}`. The
//! solver starts from [`ari_lower_bound`] and raises `k` until the
//! backtracking search finds a labeling; every smaller `k` is refuted either
//! by a bound or by exhausted search, so an exact result is certified.

mod bounds;
mod cover;
mod embed;
mod search;
mod wheel;

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

pub use bounds::{ari_lower_bound, counting_prune};
pub use cover::{disjoint_dss_cover, dss_cover_candidates, CoverOutcome};
pub use embed::{embed_in_ar_graph, Embedding};
pub use search::SearchStats;
pub use wheel::{label_wheel, WheelLabeling, WheelMethod};

use crate::budget::Deadline;
use crate::check::{is_ar_labeling, Labeling};
use crate::error::{Error, Result};
use crate::es::conway_guy_u;
use crate::graph::Graph;
use search::{to_labeling, Outcome, Problem};

/// Default cap on the number of edges the solver accepts.
pub const DEFAULT_MAX_EDGES: usize = 40;

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    /// Wall-clock budget for one call; `None` runs to completion.
    pub budget: Option<Duration>,
    /// Worker threads; 1 runs serially.
    pub threads: usize,
    /// For edge-transitive families, put the largest label on edge 0
    /// whenever some edge must carry it.
    pub symmetry_breaking: bool,
    pub max_edges: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: None,
            threads: 1,
            symmetry_breaking: false,
            max_edges: DEFAULT_MAX_EDGES,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(budget: Duration) -> Self {
        SearchConfig {
            budget: Some(budget),
            ..SearchConfig::default()
        }
    }

    fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.threads == 0 {
            return Err(Error::invalid("threads must be at least 1"));
        }
        if self.budget == Some(Duration::ZERO) {
            return Err(Error::invalid("budget must be positive"));
        }
        if g.edge_count() > self.max_edges {
            return Err(Error::UnsupportedSize(format!(
                "{} edges exceeds the solver cap of {}",
                g.edge_count(),
                self.max_edges
            )));
        }
        Ok(())
    }
}

/// Result of a fixed-`k` feasibility search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Feasibility {
    /// A verified AR-labeling with labels in `{1..k}`.
    Found {
        labeling: Labeling,
    },
    /// `k` is below the injectivity, `ES(Δ)` or counting bound.
    RefutedByBound,
    /// Exhaustive search found nothing.
    Refuted,
    TimedOut,
}

impl Feasibility {
    pub fn labeling(&self) -> Option<&Labeling> {
        match self {
            Feasibility::Found { labeling } => Some(labeling),
            _ => None,
        }
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Feasibility::Refuted | Feasibility::RefutedByBound)
    }
}

/// One `k` tried by the solver: what happened and what it cost.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Attempt {
    pub k: u64,
    pub result: Feasibility,
    pub stats: SearchStats,
    pub millis: u128,
}

fn verified(g: &Graph, labels: Vec<u64>, k: u64) -> Result<Labeling> {
    let l = to_labeling(labels);
    let verdict = is_ar_labeling(g, &l)?;
    if !verdict.ok || l.max_label() > k {
        return Err(Error::Internal(format!(
            "search produced an invalid labeling {l} for k = {k}: {verdict}"
        )));
    }
    Ok(l)
}

pub(crate) fn feasibility(
    g: &Graph,
    k: u64,
    fixed: Vec<(usize, u64)>,
    below_refuted: bool,
    cfg: &SearchConfig,
    deadline: Deadline,
) -> Result<Attempt> {
    cfg.check_graph(g)?;
    let start = Instant::now();
    let lb = ari_lower_bound(g)?;
    if k < lb {
        return Ok(Attempt {
            k,
            result: Feasibility::RefutedByBound,
            stats: SearchStats::default(),
            millis: start.elapsed().as_millis(),
        });
    }
    // With k − 1 refuted, any labeling into {1..k} uses k.
    let require_k = below_refuted || k == lb;
    let mut fixed = fixed;
    if require_k && fixed.is_empty() && cfg.symmetry_breaking && g.family().is_some_and(|f| f.is_edge_transitive()) {
        fixed.push((0, k));
    }
    let problem = Problem {
        g,
        k,
        fixed,
        require_k,
        threads: cfg.threads,
        deadline,
    };
    let (outcome, stats) = search::run(&problem);
    let result = match outcome {
        Outcome::Found(labels) => Feasibility::Found {
            labeling: verified(g, labels, k)?,
        },
        Outcome::Refuted => Feasibility::Refuted,
        Outcome::TimedOut => Feasibility::TimedOut,
    };
    Ok(Attempt {
        k,
        result,
        stats,
        millis: start.elapsed().as_millis(),
    })
}

/// Searches for an AR-labeling of `g` with distinct labels from `{1..k}`.
pub fn find_ar_labeling(g: &Graph, k: u64, cfg: &SearchConfig) -> Result<Attempt> {
    feasibility(g, k, Vec::new(), false, cfg, Deadline::after(cfg.budget))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AriStatus {
    Exact,
    BoundsOnlyTimeout,
}

/// The AR-index of a graph, or an interval when the budget ran out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AriResult {
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
    pub status: AriStatus,
    /// Certified lower bound; equals `upper` when exact.
    pub lower: u64,
    /// Upper bound: the witness maximum when exact, otherwise the Conway–Guy
    /// bound on `ES(m)` (labeling all edges by a DSS set is always AR).
    pub upper: u64,
    /// Present iff exact.
    pub witness: Option<Labeling>,
    pub attempts: Vec<Attempt>,
}

impl AriResult {
    pub fn value(&self) -> Option<u64> {
        (self.status == AriStatus::Exact).then_some(self.upper)
    }

    pub fn is_ar_graph(&self) -> Option<bool> {
        self.value().map(|v| v == self.edges as u64)
    }

    pub fn is_almost_ar(&self) -> Option<bool> {
        self.value().map(|v| v == self.edges as u64 + 1)
    }
}

impl fmt::Display for AriResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "ARI({}) = {v}", self.graph),
            None => write!(
                f,
                "ARI({}) in [{}, {}] (budget exhausted)",
                self.graph, self.lower, self.upper
            ),
        }
    }
}

fn graph_label(g: &Graph) -> String {
    g.name()
        .map(str::to_string)
        .unwrap_or_else(|| format!("graph on {} vertices, {} edges", g.vertex_count(), g.edge_count()))
}

/// Computes `ARI(g)` by raising `k` from the lower bound until a labeling exists.
pub fn ari(g: &Graph, cfg: &SearchConfig) -> Result<AriResult> {
    cfg.check_graph(g)?;
    let deadline = Deadline::after(cfg.budget);
    let lb = ari_lower_bound(g)?;
    let upper_bound = conway_guy_u(g.edge_count())?;
    let mut attempts = Vec::new();
    let mut k = lb;
    loop {
        let attempt = feasibility(g, k, Vec::new(), true, cfg, deadline)?;
        let result = attempt.result.clone();
        attempts.push(attempt);
        match result {
            Feasibility::Found { labeling } => {
                return Ok(AriResult {
                    graph: graph_label(g),
                    vertices: g.vertex_count(),
                    edges: g.edge_count(),
                    status: AriStatus::Exact,
                    lower: k,
                    upper: k,
                    witness: Some(labeling),
                    attempts,
                });
            }
            Feasibility::Refuted | Feasibility::RefutedByBound => {
                if k >= upper_bound {
                    return Err(Error::Internal(format!(
                        "k = {k} refuted although a DSS labeling with maximum {upper_bound} exists"
                    )));
                }
                k += 1;
            }
            Feasibility::TimedOut => {
                return Ok(AriResult {
                    graph: graph_label(g),
                    vertices: g.vertex_count(),
                    edges: g.edge_count(),
                    status: AriStatus::BoundsOnlyTimeout,
                    lower: k,
                    upper: upper_bound,
                    witness: None,
                    attempts,
                });
            }
        }
    }
}

/// Three-valued answer: a timeout is never reported as "no".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "answer", rename_all = "kebab-case")]
pub enum Decision {
    Yes { witness: Labeling },
    No,
    Unknown,
}

impl Decision {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Decision::Yes { .. } => Some(true),
            Decision::No => Some(false),
            Decision::Unknown => None,
        }
    }

    fn from_feasibility(f: Feasibility) -> Decision {
        match f {
            Feasibility::Found { labeling } => Decision::Yes { witness: labeling },
            Feasibility::Refuted | Feasibility::RefutedByBound => Decision::No,
            Feasibility::TimedOut => Decision::Unknown,
        }
    }
}

/// Whether `g` has an AR-labeling into `{1..m}`.
pub fn is_ar_graph(g: &Graph, cfg: &SearchConfig) -> Result<Decision> {
    if g.edge_count() == 0 {
        return Ok(Decision::Yes {
            witness: Labeling::new(Vec::new())?,
        });
    }
    let a = find_ar_labeling(g, g.edge_count() as u64, cfg)?;
    Ok(Decision::from_feasibility(a.result))
}

/// Whether `ARI(g) = m + 1`.
pub fn is_almost_ar(g: &Graph, cfg: &SearchConfig) -> Result<Decision> {
    match is_ar_graph(g, cfg)? {
        Decision::Yes { .. } => Ok(Decision::No),
        Decision::Unknown => Ok(Decision::Unknown),
        Decision::No => {
            let a = find_ar_labeling(g, g.edge_count() as u64 + 1, cfg)?;
            Ok(Decision::from_feasibility(a.result))
        }
    }
}
