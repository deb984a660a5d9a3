use arindex::dss::is_dss;
use arindex::es::{conway_guy_u, erdos_counting_lb, erdos_moser_lb, es, es_table, EsConfig, EsStatus, KNOWN_ES};

/// Smallest maximum of an `n`-element DSS subset, by scanning all subsets of
/// `{1..x}` for growing `x`.
fn brute_es(n: usize) -> u64 {
    for x in n as u64.. {
        for mask in 0u64..1 << (x - 1) {
            if mask.count_ones() as usize + 1 != n {
                continue;
            }
            let mut s: Vec<u64> = (0..x - 1).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            s.push(x);
            let mut sums: Vec<u64> = (0u64..1 << n)
                .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).map(|i| s[i]).sum())
                .collect();
            sums.sort_unstable();
            sums.dedup();
            if sums.len() == 1 << n {
                return x;
            }
        }
    }
    unreachable!()
}

#[test]
fn search_agrees_with_brute_force() {
    for n in 1..=5 {
        let rec = es(n, &EsConfig::default()).unwrap();
        assert_eq!(rec.status, EsStatus::Computed);
        assert_eq!(rec.value(), Some(brute_es(n)), "n = {n}");
    }
}

#[test]
fn computed_values_are_monotone_and_bounded() {
    let table = es_table(7, &EsConfig::default()).unwrap();
    let mut prev = 0;
    for n in 1..=7 {
        let rec = table.get(n).unwrap();
        assert_eq!(rec.status, EsStatus::Computed);
        let v = rec.value().unwrap();
        assert!(v > prev, "ES({n}) = {v} not above ES({}) = {prev}", n - 1);
        prev = v;
        let lb = erdos_counting_lb(n as u32)
            .unwrap()
            .max(erdos_moser_lb(n as u32).unwrap());
        assert!(lb <= v && v <= conway_guy_u(n).unwrap(), "n = {n}");
        assert_eq!(rec.witness.len(), n);
        assert_eq!(rec.witness.max_element(), v);
        assert!(is_dss(rec.witness.elements()).unwrap());
        assert_eq!(v, KNOWN_ES[n - 1]);
    }
}

#[test]
fn growth_used_by_the_wheel_construction() {
    for j in 7..=9 {
        assert!(KNOWN_ES[j - 1] > 6 * j as u64);
    }
    for j in 9..=30u32 {
        assert!(erdos_counting_lb(j).unwrap() > 6 * u64::from(j));
    }
}

#[test]
fn bound_only_beyond_the_budget() {
    let cfg = EsConfig {
        budget: Some(std::time::Duration::from_millis(50)),
        threads: 1,
    };
    let table = es_table(12, &cfg).unwrap();
    assert_eq!(table.get(9).unwrap().value(), Some(161));
    for n in 10..=12 {
        let rec = table.get(n).unwrap();
        assert_eq!(rec.status, EsStatus::BoundOnly);
        assert!(rec.lower >= erdos_counting_lb(n as u32).unwrap());
        assert!(rec.lower <= rec.upper);
        assert!(is_dss(rec.witness.elements()).unwrap());
    }
}

#[test]
fn parallel_matches_serial() {
    let serial = es(6, &EsConfig::default()).unwrap();
    let parallel = es(
        6,
        &EsConfig {
            budget: None,
            threads: 3,
        },
    )
    .unwrap();
    assert_eq!(serial.value(), parallel.value());
    assert!(is_dss(parallel.witness.elements()).unwrap());
}
