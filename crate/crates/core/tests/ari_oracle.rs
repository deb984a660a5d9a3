mod support;

use arindex::check::is_ar_labeling;
use arindex::es::known_es;
use arindex::graph::Family;
use arindex::solver::{ari, ari_lower_bound, find_ar_labeling, SearchConfig};
use support::small_family_graphs;

#[test]
fn exact_results_respect_the_degree_and_size_bounds() {
    let cfg = SearchConfig::default();
    let mut families = small_family_graphs();
    families.extend([
        Family::Bistar(3, 3),
        Family::Complete(5),
        Family::CompleteBipartite(3, 3),
        Family::CompleteMultipartite(vec![2, 2, 2]),
        Family::Wheel(6),
        Family::Cycle(9),
    ]);
    for f in families {
        let g = f.build().unwrap();
        let v = ari(&g, &cfg).unwrap().value().unwrap();
        assert!(known_es(g.max_degree()).unwrap() <= v, "{f}");
        if let Some(es_m) = known_es(g.edge_count()) {
            assert!(v <= es_m, "{f}");
        }
        if v > g.edge_count() as u64 {
            assert!(find_ar_labeling(&g, v - 1, &cfg).unwrap().result.is_refuted());
        }
    }
}

#[test]
fn parallel_and_serial_agree() {
    let serial = SearchConfig::default();
    let parallel = SearchConfig { threads: 4, ..serial };
    for f in small_family_graphs()
        .into_iter()
        .chain([Family::Bistar(3, 3), Family::CompleteBipartite(3, 4)])
    {
        let g = f.build().unwrap();
        let a = ari(&g, &serial).unwrap();
        let b = ari(&g, &parallel).unwrap();
        assert_eq!((a.value(), a.status), (b.value(), b.status), "{f}");
        assert!(is_ar_labeling(&g, b.witness.as_ref().unwrap()).unwrap().ok);
    }
}

#[test]
fn symmetry_breaking_preserves_answers() {
    let plain = SearchConfig::default();
    let sym = SearchConfig {
        symmetry_breaking: true,
        ..plain
    };
    for f in [
        Family::Complete(3),
        Family::Complete(4),
        Family::Complete(5),
        Family::CompleteBipartite(2, 4),
        Family::CompleteBipartite(3, 4),
        Family::Cycle(6),
        Family::Star(5),
    ] {
        let g = f.build().unwrap();
        assert_eq!(ari(&g, &plain).unwrap().value(), ari(&g, &sym).unwrap().value(), "{f}");
        for k in [g.edge_count() as u64, ari_lower_bound(&g).unwrap()] {
            let a = find_ar_labeling(&g, k, &plain).unwrap().result;
            let b = find_ar_labeling(&g, k, &sym).unwrap().result;
            assert_eq!(a.is_refuted(), b.is_refuted(), "{f} at {k}");
        }
    }
}
