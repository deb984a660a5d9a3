//! Distinct-subset-sum (DSS) sets and the subset-sum occupancy bitmap.
//!
//! A set `{a_1 < ... < a_n}` of positive integers is DSS when its `2^n`
//! subset sums (the empty subset included) are pairwise distinct. All checks
//! here go through the occupancy bitmap: bit `s` is set iff some subset sums
//! to `s`. Adding an element `a` keeps the set DSS iff the bitmap and the
//! bitmap shifted up by `a` are disjoint, since the new sums are exactly the
//! old sums plus `a`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest element total for which a bitmap is allocated (32 MiB of bits).
pub const MAX_BITSET_SUM: u64 = 1 << 28;

/// Beyond the bitmap limit, sets up to this size are checked by sorting all sums.
const MAX_NAIVE_LEN: usize = 26;

pub(crate) fn words_for(total: u64) -> usize {
    (total / 64 + 1) as usize
}

/// True iff `words & (words << shift)` is nonzero.
#[inline]
pub(crate) fn overlaps_shifted(words: &[u64], shift: usize) -> bool {
    let ws = shift / 64;
    let bs = shift % 64;
    let n = words.len();
    if ws >= n {
        return false;
    }
    for i in ws..n {
        let src = i - ws;
        let mut w = words[src] << bs;
        if bs != 0 && src > 0 {
            w |= words[src - 1] >> (64 - bs);
        }
        if w & words[i] != 0 {
            return true;
        }
    }
    false
}

/// `words |= words << shift`, truncated to the slice length.
#[inline]
pub(crate) fn or_shifted(words: &mut [u64], shift: usize) {
    let ws = shift / 64;
    let bs = shift % 64;
    let n = words.len();
    if ws >= n {
        return;
    }
    for i in (ws..n).rev() {
        let src = i - ws;
        let mut w = words[src] << bs;
        if bs != 0 && src > 0 {
            w |= words[src - 1] >> (64 - bs);
        }
        words[i] |= w;
    }
}

/// Sorts, and rejects zeros and duplicates.
fn normalize(elements: &[u64]) -> Result<Vec<u64>> {
    let mut v = elements.to_vec();
    v.sort_unstable();
    if v.first() == Some(&0) {
        return Err(Error::invalid("elements must be positive integers"));
    }
    if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::invalid(format!("duplicate element {}", w[0])));
    }
    Ok(v)
}

fn checked_total(elements: &[u64]) -> Result<u64> {
    elements.iter().try_fold(0u64, |acc, &a| {
        acc.checked_add(a)
            .ok_or_else(|| Error::range("sum of elements overflows 64 bits"))
    })
}

/// Occupancy bitmap over the achievable subset sums of a set of positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumBitset {
    words: Vec<u64>,
    total: u64,
}

impl Default for SumBitset {
    fn default() -> Self {
        SumBitset::new()
    }
}

impl SumBitset {
    /// The bitmap of the empty set: only the empty sum 0.
    pub fn new() -> Self {
        SumBitset {
            words: vec![1],
            total: 0,
        }
    }

    /// Sum of all elements, which is also the highest set bit.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn contains(&self, sum: u64) -> bool {
        if sum > self.total {
            return false;
        }
        self.words[(sum / 64) as usize] >> (sum % 64) & 1 == 1
    }

    /// Number of distinct subset sums.
    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Achievable sums in increasing order.
    pub fn sums(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as u64;
                w &= w - 1;
                Some(i as u64 * 64 + b)
            })
        })
    }

    /// Whether adding `label` keeps every subset sum distinct.
    pub fn can_extend(&self, label: u64) -> Result<bool> {
        if label == 0 {
            return Err(Error::invalid("label must be a positive integer"));
        }
        if label > self.total {
            return Ok(true);
        }
        Ok(!overlaps_shifted(&self.words, label as usize))
    }

    /// Adds `label` to the underlying set, whether or not the result stays DSS.
    pub fn insert(&mut self, label: u64) -> Result<()> {
        if label == 0 {
            return Err(Error::invalid("label must be a positive integer"));
        }
        let total = self
            .total
            .checked_add(label)
            .ok_or_else(|| Error::range("sum of elements overflows 64 bits"))?;
        if total > MAX_BITSET_SUM {
            return Err(Error::range(format!(
                "subset-sum total {total} exceeds the bitmap limit {MAX_BITSET_SUM}"
            )));
        }
        self.words.resize(words_for(total), 0);
        or_shifted(&mut self.words, label as usize);
        self.total = total;
        Ok(())
    }
}

/// Builds the occupancy bitmap of `elements`.
pub fn sum_bitset(elements: &[u64]) -> Result<SumBitset> {
    let v = normalize(elements)?;
    let total = checked_total(&v)?;
    if total > MAX_BITSET_SUM {
        return Err(Error::range(format!(
            "subset-sum total {total} exceeds the bitmap limit {MAX_BITSET_SUM}"
        )));
    }
    let mut bits = SumBitset {
        words: vec![0; words_for(total)],
        total: 0,
    };
    bits.words[0] = 1;
    for &a in &v {
        or_shifted(&mut bits.words, a as usize);
        bits.total += a;
    }
    Ok(bits)
}

/// Decides whether `elements` has pairwise distinct subset sums.
pub fn is_dss(elements: &[u64]) -> Result<bool> {
    if elements.is_empty() {
        return Err(Error::invalid("element set must be nonempty"));
    }
    let v = normalize(elements)?;
    let total = checked_total(&v)?;
    // 2^n distinct sums need room in [0, total].
    if v.len() < 64 && total < (1u64 << v.len()) - 1 {
        return Ok(false);
    }
    if total <= MAX_BITSET_SUM {
        let mut words = vec![0u64; words_for(total)];
        words[0] = 1;
        for &a in &v {
            if overlaps_shifted(&words, a as usize) {
                return Ok(false);
            }
            or_shifted(&mut words, a as usize);
        }
        return Ok(true);
    }
    if v.len() > MAX_NAIVE_LEN {
        return Err(Error::range(format!(
            "{} elements with total {total} is beyond the supported size",
            v.len()
        )));
    }
    let mut sums = vec![0u64];
    for &a in &v {
        let shifted: Vec<u64> = sums.iter().map(|s| s + a).collect();
        sums.extend(shifted);
    }
    sums.sort_unstable();
    Ok(sums.windows(2).all(|w| w[0] != w[1]))
}

/// Finds two distinct index subsets of `labels` with equal sums by listing all
/// `2^d` sums. The returned masks are disjoint and the first is smaller.
pub fn colliding_subsets(labels: &[u64]) -> Option<(u64, u64)> {
    assert!(labels.len() < 32, "naive collision search needs fewer than 32 labels");
    let mut seen: std::collections::HashMap<u64, u64> = std::collections::HashMap::with_capacity(1 << labels.len());
    for mask in 0u64..(1u64 << labels.len()) {
        let sum: u64 = (0..labels.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| labels[i])
            .sum();
        if let Some(&prev) = seen.get(&sum) {
            let common = prev & mask;
            let (a, b) = (prev & !common, mask & !common);
            return Some((a.min(b), a.max(b)));
        }
        seen.insert(sum, mask);
    }
    None
}

/// A strictly increasing set of positive integers with distinct subset sums.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct DssSet {
    elements: Vec<u64>,
}

impl DssSet {
    /// Validates and sorts `elements`.
    pub fn new(elements: &[u64]) -> Result<Self> {
        if !is_dss(elements)? {
            return Err(Error::invalid(format!(
                "{elements:?} does not have distinct subset sums"
            )));
        }
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        Ok(DssSet { elements })
    }

    /// Caller guarantees sorted, positive and DSS.
    pub(crate) fn from_sorted_unchecked(elements: Vec<u64>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        DssSet { elements }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_element(&self) -> u64 {
        self.elements.last().copied().unwrap_or(0)
    }

    pub fn sum(&self) -> u64 {
        self.elements.iter().sum()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

impl TryFrom<Vec<u64>> for DssSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        DssSet::new(&v)
    }
}

impl From<DssSet> for Vec<u64> {
    fn from(s: DssSet) -> Vec<u64> {
        s.elements
    }
}

impl fmt::Display for DssSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

/// All `size`-element DSS subsets of `{1..cap}` in lexicographic order.
pub fn enumerate_dss_sets(size: usize, cap: u64) -> Result<Vec<DssSet>> {
    let mut out = Vec::new();
    for_each_dss_set(size, cap, |s| out.push(DssSet::from_sorted_unchecked(s.to_vec())))?;
    Ok(out)
}

/// Streaming form of [`enumerate_dss_sets`]; `visit` sees each set as a sorted slice.
pub fn for_each_dss_set(size: usize, cap: u64, mut visit: impl FnMut(&[u64])) -> Result<()> {
    if size == 0 {
        return Err(Error::invalid("set size must be at least 1"));
    }
    if (size as u64) > cap {
        return Err(Error::invalid(format!(
            "cannot choose {size} distinct elements from 1..={cap}"
        )));
    }
    let bound = (size as u64)
        .checked_mul(cap)
        .filter(|&t| t <= MAX_BITSET_SUM)
        .ok_or_else(|| Error::range("size * cap exceeds the bitmap limit"))?;
    let width = words_for(bound);
    // levels[d] holds the sums of the first d chosen elements
    let mut levels = vec![0u64; width * (size + 1)];
    levels[0] = 1;
    let mut chosen = Vec::with_capacity(size);
    enumerate_rec(size, cap, 1, width, &mut levels, &mut chosen, &mut visit);
    Ok(())
}

fn enumerate_rec(
    size: usize,
    cap: u64,
    start: u64,
    width: usize,
    levels: &mut [u64],
    chosen: &mut Vec<u64>,
    visit: &mut impl FnMut(&[u64]),
) {
    let depth = chosen.len();
    if depth == size {
        visit(chosen);
        return;
    }
    let remaining = (size - depth) as u64;
    let last = cap + 1 - remaining;
    for a in start..=last {
        let (lo, hi) = levels.split_at_mut((depth + 1) * width);
        let cur = &lo[depth * width..];
        if overlaps_shifted(cur, a as usize) {
            continue;
        }
        let next = &mut hi[..width];
        next.copy_from_slice(cur);
        or_shifted(next, a as usize);
        chosen.push(a);
        enumerate_rec(size, cap, a + 1, width, levels, chosen, visit);
        chosen.pop();
    }
}
