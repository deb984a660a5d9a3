use std::collections::HashSet;

use arindex::dss::{colliding_subsets, enumerate_dss_sets, is_dss, sum_bitset, DssSet, SumBitset};
use proptest::prelude::*;

/// All `2^n` subset sums, listed.
fn subset_sums(s: &[u64]) -> Vec<u64> {
    (0u64..1 << s.len())
        .map(|m| (0..s.len()).filter(|&i| m >> i & 1 == 1).map(|i| s[i]).sum())
        .collect()
}

fn oracle(s: &[u64]) -> bool {
    let sums = subset_sums(s);
    sums.iter().collect::<HashSet<_>>().len() == sums.len()
}

fn distinct_set(max_len: usize, cap: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::btree_set(1..=cap, 1..=max_len).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #[test]
    fn matches_naive_oracle(s in distinct_set(9, 200)) {
        prop_assert_eq!(is_dss(&s).unwrap(), oracle(&s));
    }

    #[test]
    fn collision_pair_is_valid(s in distinct_set(8, 40)) {
        match colliding_subsets(&s) {
            None => prop_assert!(oracle(&s)),
            Some((a, b)) => {
                prop_assert!(a != b && a & b == 0 && a < b);
                let sum = |m: u64| (0..s.len()).filter(|&i| m >> i & 1 == 1).map(|i| s[i]).sum::<u64>();
                prop_assert_eq!(sum(a), sum(b));
            }
        }
    }

    #[test]
    fn incremental_equals_full(s in distinct_set(10, 300)) {
        let mut inc = SumBitset::new();
        let mut still_dss = true;
        for &a in &s {
            still_dss &= inc.can_extend(a).unwrap();
            inc.insert(a).unwrap();
        }
        let full = sum_bitset(&s).unwrap();
        prop_assert_eq!(inc.sums().collect::<Vec<_>>(), full.sums().collect::<Vec<_>>());
        prop_assert_eq!(still_dss, oracle(&s));
    }

    #[test]
    fn popcount_is_power_of_two_iff_dss(s in distinct_set(9, 100)) {
        let bits = sum_bitset(&s).unwrap();
        let distinct: HashSet<u64> = subset_sums(&s).into_iter().collect();
        prop_assert_eq!(bits.count(), distinct.len() as u64);
        prop_assert_eq!(bits.count() == 1 << s.len(), oracle(&s));
    }

    #[test]
    fn subsets_of_dss_sets_are_dss(s in distinct_set(8, 120), mask in any::<u8>()) {
        prop_assume!(oracle(&s));
        let sub: Vec<u64> = s.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
        prop_assume!(!sub.is_empty());
        prop_assert!(is_dss(&sub).unwrap());
    }

    #[test]
    fn dss_set_round_trips_through_json(s in distinct_set(6, 60)) {
        prop_assume!(oracle(&s));
        let set = DssSet::new(&s).unwrap();
        let text = serde_json::to_string(&set).unwrap();
        let back: DssSet = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, set);
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for size in 1..=5 {
        for cap in size as u64..=14 {
            let got: Vec<Vec<u64>> = enumerate_dss_sets(size, cap)
                .unwrap()
                .iter()
                .map(|s| s.elements().to_vec())
                .collect();
            let mut want = Vec::new();
            for mask in 0u32..1 << cap {
                if mask.count_ones() as usize == size {
                    let s: Vec<u64> = (0..cap).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                    if oracle(&s) {
                        want.push(s);
                    }
                }
            }
            want.sort();
            assert_eq!(got, want, "size {size}, cap {cap}");
        }
    }
}

#[test]
fn rejects_bad_input() {
    assert!(is_dss(&[]).is_err());
    assert!(is_dss(&[0, 1]).is_err());
    assert!(is_dss(&[2, 2]).is_err());
    assert!(DssSet::new(&[1, 2, 3]).is_err());
    assert!(serde_json::from_str::<DssSet>("[1, 2, 3]").is_err());
}
