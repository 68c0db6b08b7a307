mod common;

use bchromatic::constructive::{construct_lower_bound_bcoloring, verify_bcoloring};
use bchromatic::graph::{random_c4_free_regular, Graph};
use bchromatic::oracle::{exact_b_chromatic, exists_bcoloring_with_k, OracleConfig};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..2 * n).prop_map(move |pairs| {
            Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn spectrum_matches_partition_enumeration(g in arb_graph(7)) {
        let config = OracleConfig::default();
        let spectrum = common::naive_b_spectrum(&g);
        for k in 1..=g.max_degree() + 1 {
            let out = exists_bcoloring_with_k(&g, k, &config).unwrap();
            prop_assert_eq!(out.witness.is_some(), spectrum.contains(&k), "k = {}", k);
            if let Some(w) = out.witness {
                let report = verify_bcoloring(&g, &w).unwrap();
                prop_assert!(report.is_b_coloring);
                prop_assert_eq!(report.color_count(), k);
            }
        }
        let result = exact_b_chromatic(&g, &config).unwrap();
        prop_assert_eq!(result.phi, *spectrum.last().unwrap());
    }
}

#[test]
fn corpus_matches_partition_enumeration() {
    for (name, g) in common::small_corpus() {
        let r = exact_b_chromatic(&g, &OracleConfig::default()).unwrap();
        assert_eq!(r.phi, common::naive_b_chromatic(&g), "{name}");
    }
}

#[test]
fn constructions_never_beat_the_oracle() {
    for seed in 0..10u64 {
        let n = 10 + 2 * (seed as usize % 6);
        let g = random_c4_free_regular(3, n, seed).unwrap();
        let built = construct_lower_bound_bcoloring(&g).unwrap();
        let phi = exact_b_chromatic(&g, &OracleConfig::default()).unwrap().phi;
        assert!(built.coloring.used_count() <= phi, "n={n} seed={seed}");
        assert!(phi <= 4);
    }
}
