//! The ES-sequence: `ES(n)` is the least possible maximum of an `n`-element
//! distinct-subset-sum set.
//!
//! Exact values come from a depth-first search over candidate maxima, with
//! analytic lower bounds and Conway–Guy sets as upper-bound witnesses.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::{Deadline, Ticker};
use crate::dss::{is_dss, or_shifted, overlaps_shifted, words_for, DssSet};
use crate::error::{Error, Result};

/// Values of the sequence established in the literature, `ES(1)..=ES(9)`.
pub const KNOWN_ES: [u64; 9] = [1, 2, 4, 7, 13, 24, 44, 84, 161];

/// `ES(n)` from [`KNOWN_ES`], if listed.
pub fn known_es(n: usize) -> Option<u64> {
    n.checked_sub(1).and_then(|i| KNOWN_ES.get(i)).copied()
}

fn pow2(n: u32) -> Result<u64> {
    1u64.checked_shl(n)
        .filter(|_| n < 64)
        .ok_or_else(|| Error::range(format!("2^{n} does not fit in 64 bits")))
}

/// `⌈(2^n − 1) / n⌉`: `n` elements with maximum `x` give at most `n·x` as the
/// largest sum, and `2^n` distinct sums need `2^n − 1 ≤ n·x`.
pub fn erdos_counting_lb(n: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let p = pow2(n)? - 1;
    Ok(p.div_ceil(u64::from(n)))
}

fn ceil_sqrt(v: u128) -> u128 {
    if v == 0 {
        return 0;
    }
    let mut r = (v as f64).sqrt() as u128;
    while r * r > v {
        r -= 1;
    }
    while r * r < v {
        r += 1;
    }
    r
}

/// `⌈2^n / (4√n)⌉`, computed exactly: the result is the least `q` with
/// `16·n·q² ≥ 4^n`.
pub fn erdos_moser_lb(n: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    pow2(n)?;
    let four_n: u128 = 1u128 << (2 * n);
    let q = ceil_sqrt(four_n.div_ceil(16 * u128::from(n)));
    u64::try_from(q).map_err(|_| Error::range("bound does not fit in 64 bits"))
}

/// Integer rounding of `√(2k)` to the nearest integer; `8k` is never an odd
/// square so there are no ties.
fn conway_guy_offset(k: u64) -> u64 {
    let s = (8 * u128::from(k)) as f64;
    let mut r = s.sqrt() as u128;
    let t = 8 * u128::from(k);
    while r * r > t {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= t {
        r += 1;
    }
    r.div_ceil(2) as u64
}

fn conway_guy_prefix(n: usize) -> Result<Vec<u64>> {
    let mut u = vec![0u64; n + 1];
    if n >= 1 {
        u[1] = 1;
    }
    for k in 1..n {
        let r = conway_guy_offset(k as u64) as usize;
        u[k + 1] = u[k]
            .checked_mul(2)
            .and_then(|d| d.checked_sub(u[k - r]))
            .ok_or_else(|| Error::range(format!("Conway-Guy u({}) overflows 64 bits", k + 1)))?;
    }
    Ok(u)
}

/// The Conway–Guy sequence `u(0) = 0, u(1) = 1, u(k+1) = 2u(k) − u(k − r(k))`,
/// with `r(k)` the nearest integer to `√(2k)`.
pub fn conway_guy_u(n: usize) -> Result<u64> {
    Ok(conway_guy_prefix(n)?[n])
}

/// The Conway–Guy set `{u(n) − u(n−i) : 1 ≤ i ≤ n}`, checked to be DSS.
pub fn conway_guy_set(n: usize) -> Result<DssSet> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let u = conway_guy_prefix(n)?;
    let mut elements: Vec<u64> = (1..=n).map(|i| u[n] - u[n - i]).collect();
    elements.sort_unstable();
    if !is_dss(&elements)? {
        return Err(Error::Internal(format!(
            "Conway-Guy set for n = {n} has a subset-sum collision"
        )));
    }
    Ok(DssSet::from_sorted_unchecked(elements))
}

/// A sound lower bound on `ES(n)` without search: the literature value when
/// listed, otherwise the analytic bounds and monotonicity from `ES(9)`.
/// `es_bound(0) = 0`.
pub fn es_bound(n: usize) -> u64 {
    if n == 0 {
        return 0;
    }
    if let Some(v) = known_es(n) {
        return v;
    }
    let from_known = KNOWN_ES[8] + (n as u64 - 9);
    match u32::try_from(n) {
        Ok(m) if m < 64 => {
            let c = erdos_counting_lb(m).unwrap_or(0);
            let em = erdos_moser_lb(m).unwrap_or(0);
            from_known.max(c).max(em)
        }
        _ => u64::MAX,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EsStatus {
    /// Exact, certified by exhaustive search in this run.
    Computed,
    /// Exact, taken from the literature; the witness is still verified here.
    Known,
    /// Only an interval is established.
    BoundOnly,
}

impl fmt::Display for EsStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EsStatus::Computed => "computed",
            EsStatus::Known => "known",
            EsStatus::BoundOnly => "bound-only",
        })
    }
}

/// One entry of the ES-sequence.
///
/// For exact records `lower == upper == ES(n)`. The witness always has `n`
/// elements and maximum `upper`; for bound-only records it is the Conway–Guy set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EsRecord {
    pub n: usize,
    pub status: EsStatus,
    pub lower: u64,
    pub upper: u64,
    pub witness: DssSet,
    /// Search nodes expanded for this `n` (0 when not searched).
    pub nodes: u64,
}

impl EsRecord {
    pub fn value(&self) -> Option<u64> {
        (self.status != EsStatus::BoundOnly).then_some(self.upper)
    }

    pub fn is_exact(&self) -> bool {
        self.status != EsStatus::BoundOnly
    }
}

impl fmt::Display for EsRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "ES({}) = {v} [{}] witness {}", self.n, self.status, self.witness),
            None => write!(
                f,
                "ES({}) in [{}, {}] [{}] best witness {}",
                self.n, self.lower, self.upper, self.status, self.witness
            ),
        }
    }
}

/// Search parameters for [`es`] and [`es_table`].
#[derive(Clone, Copy, Debug)]
pub struct EsConfig {
    pub budget: Option<Duration>,
    /// Worker threads for the per-maximum search; 1 runs serially.
    pub threads: usize,
}

impl Default for EsConfig {
    fn default() -> Self {
        EsConfig {
            budget: None,
            threads: 1,
        }
    }
}

enum Outcome {
    Found(Vec<u64>),
    Exhausted,
    TimedOut,
}

/// Depth-first search for an `n`-element DSS set with maximum exactly `x`.
/// Elements are chosen in decreasing order, larger candidates first.
struct MaxSearch<'a> {
    n: usize,
    /// `floor[j]`: lower bound on `ES(j)`, the least possible maximum of the
    /// `j` smallest elements.
    floor: &'a [u64],
    width: usize,
    pow: u64,
}

impl MaxSearch<'_> {
    fn run_from(&self, chosen: &[u64], ticker: &mut Ticker) -> Outcome {
        let mut levels = vec![0u64; self.width * (self.n + 1)];
        levels[0] = 1;
        let mut stack = Vec::with_capacity(self.n);
        let mut sum = 0;
        for (d, &a) in chosen.iter().enumerate() {
            let (lo, hi) = levels.split_at_mut((d + 1) * self.width);
            let cur = &lo[d * self.width..];
            if overlaps_shifted(cur, a as usize) {
                return Outcome::Exhausted;
            }
            hi[..self.width].copy_from_slice(cur);
            or_shifted(&mut hi[..self.width], a as usize);
            stack.push(a);
            sum += a;
        }
        if self.rec(&mut levels, &mut stack, sum, ticker) {
            let mut v = stack;
            v.sort_unstable();
            Outcome::Found(v)
        } else if ticker.timed_out() {
            Outcome::TimedOut
        } else {
            Outcome::Exhausted
        }
    }

    fn rec(&self, levels: &mut [u64], stack: &mut Vec<u64>, sum: u64, ticker: &mut Ticker) -> bool {
        if ticker.tick() {
            return false;
        }
        let depth = stack.len();
        let j = self.n - depth;
        if j == 0 {
            return true;
        }
        let c = *stack.last().expect("the maximum is always chosen first");
        let floor = self.floor[j].max(j as u64);
        if c == 0 || c - 1 < floor {
            return false;
        }
        let mut y = c - 1;
        loop {
            // Largest possible remaining total with y as the next element.
            let rest = j as u64 * y - (j as u64 * (j as u64 - 1)) / 2;
            if sum + rest < self.pow - 1 {
                return false;
            }
            let (lo, hi) = levels.split_at_mut((depth + 1) * self.width);
            let cur = &lo[depth * self.width..];
            if !overlaps_shifted(cur, y as usize) {
                let next = &mut hi[..self.width];
                next.copy_from_slice(cur);
                or_shifted(next, y as usize);
                stack.push(y);
                if self.rec(levels, stack, sum + y, ticker) {
                    return true;
                }
                stack.pop();
                if ticker.timed_out() {
                    return false;
                }
            }
            if y == floor {
                return false;
            }
            y -= 1;
        }
    }
}

fn search_max(
    n: usize,
    x: u64,
    floor: &[u64],
    threads: usize,
    deadline: Deadline,
    stop: &AtomicBool,
    nodes: &AtomicU64,
) -> Outcome {
    if n == 1 {
        return Outcome::Found(vec![x]);
    }
    let total = x.saturating_mul(n as u64);
    let search = MaxSearch {
        n,
        floor,
        width: words_for(total),
        pow: 1u64 << n,
    };
    if threads <= 1 {
        let mut ticker = Ticker::new(deadline, stop);
        let out = search.run_from(&[x], &mut ticker);
        nodes.fetch_add(ticker.nodes, Ordering::Relaxed);
        return out;
    }
    // Split on the second-largest element, largest first; the first success in
    // that order is the serial witness.
    let lo = floor[n - 1].max(1);
    let seconds: Vec<u64> = (lo..x).rev().collect();
    let timed_out = AtomicBool::new(false);
    let found = seconds.par_iter().find_map_first(|&y| {
        let mut ticker = Ticker::new(deadline, stop);
        let out = search.run_from(&[x, y], &mut ticker);
        nodes.fetch_add(ticker.nodes, Ordering::Relaxed);
        match out {
            Outcome::Found(v) => Some(v),
            Outcome::TimedOut => {
                timed_out.store(true, Ordering::Relaxed);
                None
            }
            Outcome::Exhausted => None,
        }
    });
    match found {
        Some(v) => Outcome::Found(v),
        None if timed_out.load(Ordering::Relaxed) => Outcome::TimedOut,
        None => Outcome::Exhausted,
    }
}

fn analytic_lower(n: usize) -> u64 {
    let m = n as u32;
    erdos_counting_lb(m)
        .unwrap_or(1)
        .max(erdos_moser_lb(m).unwrap_or(1))
        .max(n as u64)
}

/// Computes records for `1..=n_max` bottom-up. Each search prunes with the
/// values computed below it, never with the literature table.
fn search_up_to(n_max: usize, cfg: &EsConfig) -> Result<Vec<EsRecord>> {
    if n_max == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    if n_max >= 64 {
        return Err(Error::range(format!("n = {n_max} is beyond 64-bit sums")));
    }
    let deadline = Deadline::after(cfg.budget);
    let stop = AtomicBool::new(false);
    let mut floor = vec![0u64; n_max + 1];
    let mut exact = true;
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let upper = conway_guy_u(n)?;
        let mut lower = analytic_lower(n).max(floor[n - 1] + 1);
        let nodes = AtomicU64::new(0);
        let mut result = None;
        if exact {
            let mut x = lower;
            while x <= upper {
                match search_max(n, x, &floor, cfg.threads, deadline, &stop, &nodes) {
                    Outcome::Found(v) => {
                        result = Some(v);
                        break;
                    }
                    Outcome::Exhausted => {
                        x += 1;
                        lower = x;
                    }
                    Outcome::TimedOut => break,
                }
            }
        }
        let nodes = nodes.into_inner();
        let record = match result {
            Some(v) => {
                floor[n] = v[n - 1];
                EsRecord {
                    n,
                    status: EsStatus::Computed,
                    lower: v[n - 1],
                    upper: v[n - 1],
                    witness: DssSet::new(&v)?,
                    nodes,
                }
            }
            None => {
                if lower > upper {
                    return Err(Error::Internal(format!(
                        "search refuted every maximum up to the Conway-Guy bound for n = {n}"
                    )));
                }
                exact = false;
                floor[n] = lower;
                EsRecord {
                    n,
                    status: EsStatus::BoundOnly,
                    lower,
                    upper,
                    witness: conway_guy_set(n)?,
                    nodes,
                }
            }
        };
        out.push(record);
    }
    Ok(out)
}

/// Computes `ES(n)` with a witness, or the best interval if the budget runs out.
pub fn es(n: usize, cfg: &EsConfig) -> Result<EsRecord> {
    let mut all = search_up_to(n, cfg)?;
    Ok(all.pop().expect("n >= 1 records"))
}

/// Records for `1..=n_max`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct EsTable {
    pub records: BTreeMap<usize, EsRecord>,
}

impl EsTable {
    pub fn get(&self, n: usize) -> Option<&EsRecord> {
        self.records.get(&n)
    }
}

/// Computes what the budget allows and fills the rest from the literature
/// (`n ≤ 9`, with verified Conway–Guy witnesses) or as bound-only records.
pub fn es_table(n_max: usize, cfg: &EsConfig) -> Result<EsTable> {
    let computed = search_up_to(n_max, cfg)?;
    let mut table = EsTable::default();
    for mut rec in computed {
        if rec.status == EsStatus::BoundOnly {
            if let Some(v) = known_es(rec.n) {
                let witness = conway_guy_set(rec.n)?;
                if witness.max_element() != v {
                    return Err(Error::Internal(format!(
                        "Conway-Guy set for n = {} has maximum {} but ES = {v}",
                        rec.n,
                        witness.max_element()
                    )));
                }
                rec.status = EsStatus::Known;
                rec.lower = v;
                rec.upper = v;
                rec.witness = witness;
            } else {
                rec.lower = rec.lower.max(es_bound(rec.n));
            }
        }
        table.records.insert(rec.n, rec);
    }
    Ok(table)
}
