//! Backtracking search for an AR-labeling with labels in `{1..k}`.
//!
//! Edges are assigned in a fixed order (decreasing endpoint-degree sum, ties
//! by canonical index), labels ascending. Each vertex keeps a stack of
//! subset-sum bitmaps, one per assigned incident edge, so a label is admissible
//! at a vertex iff it does not collide with the current bitmap. After every
//! assignment each unfinished vertex must still have enough admissible labels
//! to reach its degree, their total must allow `2^deg` distinct sums, and the
//! largest must be able to reach `ES(deg)`.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::{Deadline, Ticker};
use crate::check::Labeling;
use crate::dss::{or_shifted, overlaps_shifted, words_for};
use crate::graph::Graph;

use super::bounds::vertex_requirements;

/// Counters from one search; serialized into refutation logs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    /// Candidate labels rejected by a subset-sum collision at an endpoint.
    pub collision_prunes: u64,
    /// Assignments rejected by the per-vertex look-ahead.
    pub lookahead_prunes: u64,
}

impl SearchStats {
    pub(crate) fn add(&mut self, o: &SearchStats) {
        self.nodes += o.nodes;
        self.collision_prunes += o.collision_prunes;
        self.lookahead_prunes += o.lookahead_prunes;
    }
}

pub(crate) enum Outcome {
    Found(Vec<u64>),
    Refuted,
    TimedOut,
}

/// A fixed-`k` search instance.
pub(crate) struct Problem<'g> {
    pub g: &'g Graph,
    pub k: u64,
    /// Labels fixed before the search starts, by edge index.
    pub fixed: Vec<(usize, u64)>,
    /// Some edge must carry `k` (because `k − 1` is already refuted).
    pub require_k: bool,
    pub threads: usize,
    pub deadline: Deadline,
}

#[derive(Clone)]
struct Engine<'g> {
    g: &'g Graph,
    k: u64,
    order: Vec<usize>,
    need_max: Vec<u64>,
    need_sum: Vec<u64>,
    deg: Vec<usize>,
    width: Vec<usize>,
    offset: Vec<usize>,
    bits: Vec<u64>,
    level: Vec<usize>,
    sum: Vec<u64>,
    /// Largest assigned label per vertex and level, at `max_off[w] + level`.
    max_stack: Vec<u64>,
    max_off: Vec<usize>,
    labels: Vec<u64>,
    used: Vec<u64>,
    require_k: bool,
    stats: SearchStats,
}

pub(crate) fn edge_order(g: &Graph) -> Vec<usize> {
    let deg = g.degrees();
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.edge(e);
        (std::cmp::Reverse(deg[u] + deg[v]), e)
    });
    order
}

impl<'g> Engine<'g> {
    fn new(g: &'g Graph, k: u64, require_k: bool) -> Self {
        let deg = g.degrees();
        let need_max = vertex_requirements(g);
        let need_sum = deg
            .iter()
            .map(|&d| if d >= 64 { u64::MAX } else { (1u64 << d) - 1 })
            .collect();
        let mut width = Vec::with_capacity(deg.len());
        let mut offset = Vec::with_capacity(deg.len());
        let mut max_off = Vec::with_capacity(deg.len());
        let (mut total, mut total_max) = (0, 0);
        for &d in &deg {
            let w = words_for((d as u64).saturating_mul(k));
            width.push(w);
            offset.push(total);
            max_off.push(total_max);
            total += w * (d + 1);
            total_max += d + 1;
        }
        let mut bits = vec![0u64; total];
        for v in 0..deg.len() {
            bits[offset[v]] = 1;
        }
        Engine {
            g,
            k,
            order: edge_order(g),
            need_max,
            need_sum,
            width,
            offset,
            bits,
            level: vec![0; deg.len()],
            sum: vec![0; deg.len()],
            max_stack: vec![0; total_max],
            max_off,
            deg,
            labels: vec![0; g.edge_count()],
            used: vec![0; words_for(k)],
            require_k,
            stats: SearchStats::default(),
        }
    }

    #[inline]
    fn cur(&self, w: usize) -> &[u64] {
        let start = self.offset[w] + self.level[w] * self.width[w];
        &self.bits[start..start + self.width[w]]
    }

    #[inline]
    fn fits(&self, w: usize, l: u64) -> bool {
        !overlaps_shifted(self.cur(w), l as usize)
    }

    #[inline]
    fn is_used(&self, l: u64) -> bool {
        self.used[(l / 64) as usize] >> (l % 64) & 1 == 1
    }

    fn push_vertex(&mut self, w: usize, l: u64) {
        let lvl = self.level[w];
        let width = self.width[w];
        let start = self.offset[w] + lvl * width;
        let (lo, hi) = self.bits.split_at_mut(start + width);
        let next = &mut hi[..width];
        next.copy_from_slice(&lo[start..]);
        or_shifted(next, l as usize);
        let prev_max = self.max_stack[self.max_off[w] + lvl];
        self.max_stack[self.max_off[w] + lvl + 1] = prev_max.max(l);
        self.level[w] = lvl + 1;
        self.sum[w] += l;
    }

    fn assign(&mut self, e: usize, l: u64) {
        let (u, v) = self.g.edge(e);
        self.push_vertex(u, l);
        self.push_vertex(v, l);
        self.used[(l / 64) as usize] |= 1 << (l % 64);
        self.labels[e] = l;
    }

    fn unassign(&mut self, e: usize) {
        let l = self.labels[e];
        let (u, v) = self.g.edge(e);
        for w in [u, v] {
            self.level[w] -= 1;
            self.sum[w] -= l;
        }
        self.used[(l / 64) as usize] &= !(1 << (l % 64));
        self.labels[e] = 0;
    }

    /// Necessary conditions for completing vertex `w`.
    fn vertex_can_finish(&self, w: usize) -> bool {
        let remaining = self.deg[w] - self.level[w];
        if remaining == 0 {
            return true;
        }
        let mut found = 0;
        let mut top_sum = 0u64;
        let mut top = 0;
        let mut l = self.k;
        while l >= 1 {
            if !self.is_used(l) && self.fits(w, l) {
                if found == 0 {
                    top = l;
                }
                found += 1;
                top_sum += l;
                if found == remaining {
                    break;
                }
            }
            l -= 1;
        }
        if found < remaining {
            return false;
        }
        let cur_max = self.max_stack[self.max_off[w] + self.level[w]];
        self.sum[w] + top_sum >= self.need_sum[w] && cur_max.max(top) >= self.need_max[w]
    }

    fn lookahead(&self) -> bool {
        if !(0..self.deg.len()).all(|w| self.vertex_can_finish(w)) {
            return false;
        }
        if self.require_k && !self.is_used(self.k) {
            let k = self.k;
            let placeable = (0..self.labels.len()).any(|e| {
                let (u, v) = self.g.edge(e);
                self.labels[e] == 0 && self.fits(u, k) && self.fits(v, k)
            });
            if !placeable {
                return false;
            }
        }
        true
    }

    fn try_label(&mut self, e: usize, l: u64) -> bool {
        if self.is_used(l) {
            return false;
        }
        let (u, v) = self.g.edge(e);
        if !self.fits(u, l) || !self.fits(v, l) {
            self.stats.collision_prunes += 1;
            return false;
        }
        self.assign(e, l);
        if !self.lookahead() {
            self.stats.lookahead_prunes += 1;
            self.unassign(e);
            return false;
        }
        true
    }

    fn next_free(&self, pos: usize) -> Option<usize> {
        (pos..self.order.len()).find(|&p| self.labels[self.order[p]] == 0)
    }

    fn dfs(&mut self, pos: usize, ticker: &mut Ticker) -> bool {
        self.stats.nodes += 1;
        if ticker.tick() {
            return false;
        }
        let Some(pos) = self.next_free(pos) else {
            return true;
        };
        let e = self.order[pos];
        for l in 1..=self.k {
            if self.try_label(e, l) {
                if self.dfs(pos + 1, ticker) {
                    return true;
                }
                self.unassign(e);
                if ticker.timed_out() {
                    return false;
                }
            }
        }
        false
    }
}

/// Runs the search. Statistics are returned even when nothing is found.
pub(crate) fn run(p: &Problem) -> (Outcome, SearchStats) {
    let mut engine = Engine::new(p.g, p.k, p.require_k);
    for &(e, l) in &p.fixed {
        if l == 0 || l > p.k || engine.labels[e] != 0 || !engine.try_label(e, l) {
            return (Outcome::Refuted, engine.stats);
        }
    }
    if !engine.lookahead() {
        engine.stats.lookahead_prunes += 1;
        return (Outcome::Refuted, engine.stats);
    }
    let stop = AtomicBool::new(false);
    let Some(first) = engine.next_free(0) else {
        return (Outcome::Found(engine.labels.clone()), engine.stats);
    };
    if p.threads <= 1 {
        let mut ticker = Ticker::new(p.deadline, &stop);
        let found = engine.dfs(0, &mut ticker);
        let out = if found {
            Outcome::Found(engine.labels.clone())
        } else if ticker.timed_out() {
            Outcome::TimedOut
        } else {
            Outcome::Refuted
        };
        return (out, engine.stats);
    }

    // Split on the label of the first free edge; the first success in label
    // order matches the serial witness.
    let e = engine.order[first];
    let stats = Mutex::new(engine.stats);
    let timed_out = AtomicBool::new(false);
    let candidates: Vec<u64> = (1..=p.k).collect();
    let run_branch = |l: u64| -> Option<Vec<u64>> {
        let mut local = engine.clone();
        local.stats = SearchStats::default();
        let mut ticker = Ticker::new(p.deadline, &stop);
        let mut result = None;
        if local.try_label(e, l) {
            if local.dfs(first + 1, &mut ticker) {
                result = Some(local.labels.clone());
            } else if ticker.timed_out() {
                timed_out.store(true, Ordering::Relaxed);
            }
        }
        stats.lock().expect("stats lock").add(&local.stats);
        result
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(p.threads).build();
    let found = match pool {
        Ok(pool) => pool.install(|| candidates.par_iter().find_map_first(|&l| run_branch(l))),
        Err(_) => candidates.iter().find_map(|&l| run_branch(l)),
    };
    let stats = stats.into_inner().expect("stats lock");
    let out = match found {
        Some(labels) => Outcome::Found(labels),
        None if timed_out.load(Ordering::Relaxed) => Outcome::TimedOut,
        None => Outcome::Refuted,
    };
    (out, stats)
}

pub(crate) fn to_labeling(labels: Vec<u64>) -> Labeling {
    Labeling::new(labels).expect("search assigns positive labels")
}
