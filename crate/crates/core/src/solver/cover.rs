//! Disjoint DSS covers: `m` pairwise-disjoint `n`-element DSS subsets of
//! `{1..mn}`.
//!
//! In an AR-labeling of `K_{m,n}` with labels `{1..mn}` the `m` vertices of
//! degree `n` carry disjoint DSS label sets that together use every label, so
//! a cover must exist. Since `m·n` elements are split into `m` sets of size
//! `n`, any such family is an exact cover and is found with Algorithm X over
//! bitmasks, branching on the element with the fewest remaining candidates.

use std::sync::atomic::AtomicBool;

use serde::Serialize;

use crate::budget::{Deadline, Ticker};
use crate::dss::{for_each_dss_set, DssSet};
use crate::error::{Error, Result};

use super::SearchConfig;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum CoverOutcome {
    Found { sets: Vec<DssSet> },
    None,
    TimedOut,
}

impl CoverOutcome {
    pub fn sets(&self) -> Option<&[DssSet]> {
        match self {
            CoverOutcome::Found { sets } => Some(sets),
            _ => None,
        }
    }
}

fn mask_of(s: &[u64]) -> u64 {
    s.iter().fold(0, |m, &x| m | 1 << (x - 1))
}

fn elements_of(mut mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while mask != 0 {
        out.push(u64::from(mask.trailing_zeros()) + 1);
        mask &= mask - 1;
    }
    out
}

fn check_args(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::invalid("m and n must be positive"));
    }
    if m > n {
        return Err(Error::invalid(format!(
            "expected m <= n, got m = {m}, n = {n}; orient K_(m,n) with the larger part second"
        )));
    }
    if m * n > 64 {
        return Err(Error::UnsupportedSize(format!("m * n = {} exceeds 64", m * n)));
    }
    Ok(())
}

/// Bitmasks (bit `x − 1` for element `x`) of all `n`-element DSS subsets of `{1..mn}`.
pub fn dss_cover_candidates(m: usize, n: usize) -> Result<Vec<u64>> {
    check_args(m, n)?;
    let mut out = Vec::new();
    for_each_dss_set(n, (m * n) as u64, |s| out.push(mask_of(s)))?;
    Ok(out)
}

struct Search<'a> {
    universe: u64,
    ticker: Ticker<'a>,
    chosen: Vec<u64>,
}

impl Search<'_> {
    fn solve(&mut self, covered: u64, candidates: &[u64]) -> bool {
        if covered == self.universe {
            return true;
        }
        if self.ticker.tick() {
            return false;
        }
        let mut counts = [0u32; 64];
        for &c in candidates {
            let mut bits = c;
            while bits != 0 {
                counts[bits.trailing_zeros() as usize] += 1;
                bits &= bits - 1;
            }
        }
        let mut open = self.universe & !covered;
        let mut best = (u32::MAX, 0);
        while open != 0 {
            let bit = open.trailing_zeros() as usize;
            if counts[bit] < best.0 {
                best = (counts[bit], bit);
            }
            open &= open - 1;
        }
        if best.0 == 0 {
            return false;
        }
        let pivot = 1u64 << best.1;
        for &c in candidates.iter().filter(|&&c| c & pivot != 0) {
            let rest: Vec<u64> = candidates.iter().copied().filter(|&d| d & c == 0).collect();
            self.chosen.push(c);
            if self.solve(covered | c, &rest) {
                return true;
            }
            self.chosen.pop();
            if self.ticker.timed_out() {
                return false;
            }
        }
        false
    }
}

/// Searches for `m` pairwise-disjoint `n`-element DSS subsets of `{1..mn}`.
///
/// Requires `m ≤ n` and `mn ≤ 64`. Sets are returned sorted by least element.
pub fn disjoint_dss_cover(m: usize, n: usize, cfg: &SearchConfig) -> Result<CoverOutcome> {
    let candidates = dss_cover_candidates(m, n)?;
    let stop = AtomicBool::new(false);
    let universe = if m * n == 64 { u64::MAX } else { (1u64 << (m * n)) - 1 };
    let mut search = Search {
        universe,
        ticker: Ticker::new(Deadline::after(cfg.budget), &stop),
        chosen: Vec::new(),
    };
    if search.solve(0, &candidates) {
        let mut sets: Vec<DssSet> = search
            .chosen
            .iter()
            .map(|&c| DssSet::new(&elements_of(c)))
            .collect::<Result<_>>()?;
        sets.sort_by_key(|s| s.elements()[0]);
        Ok(CoverOutcome::Found { sets })
    } else if search.ticker.timed_out() {
        Ok(CoverOutcome::TimedOut)
    } else {
        Ok(CoverOutcome::None)
    }
}
