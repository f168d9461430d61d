//! Independent brute-force references shared by the integration tests. They
//! work on plain `Vec<Vec<u32>>` edge lists and never call the solver.

#![allow(dead_code)]

use crithyp::Hypergraph;
use proptest::prelude::*;

pub fn edge_masks(h: &Hypergraph) -> Vec<u32> {
    h.edges().iter().map(|e| e.iter().fold(0u32, |m, &v| m | 1 << v)).collect()
}

/// Minimum cover size by trying every vertex subset in order of size.
pub fn tau_by_subsets(h: &Hypergraph) -> usize {
    assert!(h.n() <= 20);
    let masks = edge_masks(h);
    (0u32..1 << h.n()).filter(|s| masks.iter().all(|e| e & s != 0)).map(|s| s.count_ones() as usize).min().unwrap()
}

/// Whether every k-subset of the vertices contains an edge.
pub fn covering_by_subsets(h: &Hypergraph, k: usize) -> bool {
    let masks = edge_masks(h);
    (0u32..1 << h.n()).filter(|s| s.count_ones() as usize == k).all(|s| masks.iter().any(|e| e & s == *e))
}

pub fn pairwise_intersecting(h: &Hypergraph) -> bool {
    let masks = edge_masks(h);
    masks.iter().all(|a| masks.iter().all(|b| a & b != 0))
}

pub fn triangle() -> Hypergraph {
    Hypergraph::uniform(3, 2, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap()
}

pub fn fano() -> Hypergraph {
    let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
    Hypergraph::uniform(7, 3, lines.iter().map(|l| l.to_vec()).collect()).unwrap()
}

/// Small r-uniform hypergraphs on at most `max_n` vertices.
pub fn arb_uniform(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), 1..=n.min(4)))
        .prop_flat_map(|(n, r)| {
            let edge = proptest::sample::subsequence((0..n as u32).collect::<Vec<_>>(), r);
            (Just(n), Just(r), proptest::collection::btree_set(edge, 1..14))
        })
        .prop_map(|(n, r, edges)| Hypergraph::uniform(n, r, edges.into_iter().collect()).unwrap())
}
