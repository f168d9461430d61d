mod common;

use common::{fano, pairwise_intersecting, tau_by_subsets, triangle};
use crithyp::cover::cover_number;
use crithyp::generators::{complete_uniform, DEFAULT_EDGE_CAP};
use crithyp::transforms::{add_one_checked, wreath_edge_stream, wreath_product};
use crithyp::Hypergraph;
use proptest::prelude::*;

/// Small uniform factors with at most 6 vertices, so products stay under 32.
fn arb_factor() -> impl Strategy<Value = Hypergraph> {
    (2usize..=5)
        .prop_flat_map(|n| (Just(n), 1..=n.min(3)))
        .prop_flat_map(|(n, r)| {
            let edge = proptest::sample::subsequence((0..n as u32).collect::<Vec<_>>(), r);
            (Just(n), Just(r), proptest::collection::btree_set(edge, 1..5))
        })
        .prop_map(|(n, r, edges)| Hypergraph::uniform(n, r, edges.into_iter().collect()).unwrap())
}

#[test]
fn stream_matches_materialized_product() {
    let p = wreath_product(&fano(), &triangle(), DEFAULT_EDGE_CAP).unwrap();
    let mut streamed: Vec<Vec<u32>> = wreath_edge_stream(&fano(), &triangle()).unwrap().collect();
    streamed.sort();
    assert_eq!(streamed, p.edges());
}

#[test]
fn augmentation_chain_stays_critical() {
    let mut h = triangle();
    let (mut n, mut m) = (3, 3);
    for r in 2..5 {
        h = add_one_checked(&h, DEFAULT_EDGE_CAP, 1_000_000).unwrap();
        (n, m) = (n + r + 1, (r + 1) * m + 1);
        assert_eq!((h.n(), h.edge_count()), (n, m));
        assert_eq!(h.uniformity(), Some(r + 1));
        assert_eq!(cover_number(&h).unwrap().tau, r + 1);
    }
    assert_eq!((n, m), (15, 206));
}

#[test]
fn add_one_rejects_non_critical_input_in_checked_mode() {
    let k = complete_uniform(6, 3, DEFAULT_EDGE_CAP).unwrap();
    assert!(add_one_checked(&k, DEFAULT_EDGE_CAP, 1_000_000).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn wreath_counts_and_tau(h1 in arb_factor(), h2 in arb_factor()) {
        let (r1, r2) = (h1.uniformity().unwrap(), h2.uniformity().unwrap());
        prop_assume!(h1.n() * h2.n() <= 20);
        let p = wreath_product(&h1, &h2, DEFAULT_EDGE_CAP).unwrap();
        prop_assert_eq!(p.n(), h1.n() * h2.n());
        prop_assert_eq!(p.edge_count(), h1.edge_count() * h2.edge_count().pow(r1 as u32));
        prop_assert!(p.is_uniform(r1 * r2));
        prop_assert_eq!(tau_by_subsets(&p), tau_by_subsets(&h1) * tau_by_subsets(&h2));
        if pairwise_intersecting(&h1) && pairwise_intersecting(&h2) {
            prop_assert!(p.is_intersecting());
        }
    }
}
