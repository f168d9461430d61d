//! Greedy construction of an r-uniform hypergraph on n vertices in which every
//! (n-r+1)-set contains an edge (equivalently, cover number at least r).
//!
//! An (n-r+1)-set is tracked through its complement, an (r-1)-set `T`: the set
//! contains edge `e` exactly when `e` and `T` are disjoint.

use serde::Serialize;

use crate::bits::{VertexBits, NARROW_LIMIT};
use crate::combinatorics::{binomial, binomial_u64, Combinations};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::par;

pub const DEFAULT_SUBSET_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreedyRound {
    pub round: usize,
    pub edge: Vec<u32>,
    /// (n-r+1)-sets that received their first edge this round.
    pub newly_covered: u64,
    pub remaining: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyCover {
    pub hypergraph: Hypergraph,
    pub log: Vec<GreedyRound>,
}

/// Repeatedly adds the r-set contained in the most still-empty (n-r+1)-sets,
/// lowest lexicographic rank on ties, until none are empty.
pub fn greedy_covering(n: usize, r: usize, subset_cap: u64) -> Result<GreedyCover> {
    if r == 0 || n + 1 < 2 * r {
        return Err(Error::OutOfRange(format!("greedy covering needs n >= 2r - 1 and r >= 1, got n = {n}, r = {r}")));
    }
    if n > NARROW_LIMIT {
        return Err(Error::OutOfRange(format!("greedy covering supports at most {NARROW_LIMIT} vertices")));
    }
    let holes =
        binomial_u64(n as u64, r as u64 - 1).filter(|&c| c <= subset_cap).ok_or_else(|| Error::CapExceeded {
            what: "(n-r+1)-subsets to track",
            required: binomial(n as u64, r as u64 - 1),
            cap: subset_cap,
        })?;
    let complements: Vec<u128> = Combinations::new(n, r - 1).map(|c| u128::from_vertices(n, &c)).collect();
    let candidates: Vec<Vec<u32>> = Combinations::new(n, r).collect();
    let candidate_masks: Vec<u128> = candidates.iter().map(|c| u128::from_vertices(n, c)).collect();

    let mut open: Vec<u128> = complements;
    let mut chosen = Vec::new();
    let mut log = Vec::new();
    debug_assert_eq!(open.len() as u64, holes);
    while !open.is_empty() {
        let (best, gain) = par::argmax(candidate_masks.len(), |i| {
            let e = candidate_masks[i];
            open.iter().filter(|&&t| t & e == 0).count() as u64
        })
        .expect("at least one candidate edge");
        if gain == 0 {
            return Err(Error::Internal("greedy covering stalled".into()));
        }
        let e = candidate_masks[best];
        open.retain(|&t| t & e != 0);
        chosen.push(candidates[best].clone());
        log.push(GreedyRound {
            round: log.len() + 1,
            edge: candidates[best].clone(),
            newly_covered: gain,
            remaining: open.len() as u64,
        });
    }
    Ok(GreedyCover { hypergraph: Hypergraph::uniform(n, r, chosen)?, log })
}
