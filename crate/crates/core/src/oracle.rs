//! Brute-force ground truth for tiny parameters.
//!
//! `f(n, r)`: fewest edges of an n-vertex r-uniform intersecting hypergraph
//! with cover number r. `U(n, n-r+1, r)`: fewest edges of an n-vertex
//! r-uniform hypergraph with cover number at least r (every (n-r+1)-set
//! contains an edge).
//!
//! Both are found by iterative deepening on the edge count m, starting at the
//! de Caen ceiling. For each m, families of m candidate r-sets are enumerated
//! in lexicographic order of their index sequences, with three prunings:
//!
//! * adding s more edges raises the cover number by at most s, so a partial
//!   family with a cover of size `r - s - 1` is dead;
//! * if the partial family has an (r-1)-cover, some remaining candidate must
//!   avoid it;
//! * a partial family is dropped when swapping two vertices yields a
//!   lexicographically smaller family. The smallest family in each
//!   isomorphism class is never dropped, so the first family found is the
//!   lexicographically least valid one.

use serde::{Serialize, Serializer};

use crate::bits::{VertexBits, NARROW_LIMIT};
use crate::bounds::de_caen_ceil;
use crate::combinatorics::{binomial, binomial_u64, Combinations};
use crate::constructor::{build_critical, BuildOptions};
use crate::cover::{cover_number, search_masks};
use crate::error::{Error, Result};
use crate::format;
use crate::greedy::{self, greedy_covering};
use crate::hypergraph::{Hypergraph, DEFAULT_SUBSET_CAP};
use num_traits::ToPrimitive;

pub const DEFAULT_ORACLE_BUDGET: u64 = 1_000_000_000;
pub const DEFAULT_MAX_CANDIDATES: u64 = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Quantity {
    #[serde(rename = "f")]
    F,
    #[serde(rename = "U")]
    U,
}

#[derive(Clone, Copy, Debug)]
pub struct OracleOptions {
    pub node_budget: u64,
    /// Refuse instances with more than this many candidate edges `C(n, r)`.
    pub max_candidates: u64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { node_budget: DEFAULT_ORACLE_BUDGET, max_candidates: DEFAULT_MAX_CANDIDATES }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub quantity: Quantity,
    pub n: usize,
    pub r: usize,
    /// The exact value when `exhaustive`, otherwise the best known upper bound.
    pub value: u64,
    /// Every edge count below this was ruled out.
    pub lower: u64,
    #[serde(serialize_with = "witness_json")]
    pub witness: Hypergraph,
    pub exhaustive: bool,
    pub nodes: u64,
}

fn witness_json<S: Serializer>(h: &Hypergraph, s: S) -> std::result::Result<S::Ok, S::Error> {
    let value: serde_json::Value = serde_json::from_str(&format::to_json(h)).expect("canonical JSON parses");
    value.serialize(s)
}

pub fn brute_force_f(n: usize, r: usize, options: OracleOptions) -> Result<OracleResult> {
    run(Quantity::F, n, r, options)
}

pub fn brute_force_u(n: usize, r: usize, options: OracleOptions) -> Result<OracleResult> {
    run(Quantity::U, n, r, options)
}

struct Exhausted;

/// Lexicographic rank of an r-subset of `0..n`, from its bitmask.
struct Ranker {
    /// `offset[i][v]`: number of r-subsets whose i-th smallest element is
    /// below `v`, given that the first i elements are fixed.
    offset: Vec<Vec<usize>>,
}

impl Ranker {
    fn new(n: usize, r: usize) -> Self {
        let offset = (0..r)
            .map(|i| {
                let mut acc = 0;
                let mut row = Vec::with_capacity(n + 1);
                for v in 0..=n {
                    row.push(acc);
                    if v < n {
                        acc += binomial_u64((n - 1 - v) as u64, (r - 1 - i) as u64).unwrap_or(0) as usize;
                    }
                }
                row
            })
            .collect();
        Ranker { offset }
    }

    fn rank(&self, mask: u128) -> usize {
        let mut rank = 0;
        let mut next = 0;
        let mut rest = mask;
        let mut i = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rank += self.offset[i][v] - self.offset[i][next];
            next = v + 1;
            rest &= rest - 1;
            i += 1;
        }
        rank
    }
}

struct Search<'a> {
    n: usize,
    r: usize,
    intersecting: bool,
    masks: &'a [u128],
    ranker: Ranker,
    transpositions: Vec<(u32, u32)>,
    chosen: Vec<usize>,
    family: Vec<u128>,
    image: Vec<usize>,
    pool: Vec<u128>,
    budget: u64,
    nodes: u64,
}

fn find_cover(n: usize, family: &[u128], k: usize) -> Option<u128> {
    let mut scratch = 0;
    search_masks(n, family, k, u64::MAX, &mut scratch).expect("unbounded budget")
}

impl Search<'_> {
    fn is_transposition_minimal(&mut self) -> bool {
        for &(a, b) in &self.transpositions {
            let swap = (1u128 << a) | (1u128 << b);
            let moved = |e: &u128| (e & swap).count_ones() == 1;
            if !self.family.iter().any(moved) {
                continue;
            }
            self.image.clear();
            for e in &self.family {
                let image = if moved(e) { e ^ swap } else { *e };
                self.image.push(self.ranker.rank(image));
            }
            self.image.sort_unstable();
            if self.image < self.chosen {
                return false;
            }
        }
        true
    }

    fn compatible(&self, c: u128) -> bool {
        !self.intersecting || self.family.iter().all(|e| e & c != 0)
    }

    fn step(&mut self, start: usize, m: usize) -> std::result::Result<bool, Exhausted> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Exhausted);
        }
        let left = m - self.family.len();
        let cover = find_cover(self.n, &self.family, self.r - 1);
        if left == 0 {
            return Ok(cover.is_none());
        }
        if let Some(cover) = cover {
            if left < self.r && find_cover(self.n, &self.family, self.r - left - 1).is_some() {
                return Ok(false);
            }
            if !self.masks[start..].iter().any(|&c| c & cover == 0 && self.compatible(c)) {
                return Ok(false);
            }
            // Every completion lies inside the family plus the usable pool.
            let mut pool = std::mem::take(&mut self.pool);
            pool.clear();
            pool.extend_from_slice(&self.family);
            pool.extend(self.masks[start..].iter().copied().filter(|&c| self.compatible(c)));
            let dead = find_cover(self.n, &pool, self.r - 1).is_some();
            self.pool = pool;
            if dead {
                return Ok(false);
            }
        }
        let last = self.masks.len().saturating_sub(left);
        for idx in start..=last {
            let cand = self.masks[idx];
            if !self.compatible(cand) {
                continue;
            }
            self.chosen.push(idx);
            self.family.push(cand);
            if self.is_transposition_minimal() && self.step(idx + 1, m)? {
                return Ok(true);
            }
            self.chosen.pop();
            self.family.pop();
        }
        Ok(false)
    }
}

fn run(quantity: Quantity, n: usize, r: usize, options: OracleOptions) -> Result<OracleResult> {
    if r < 2 || n + 1 < 2 * r {
        return Err(Error::NoSuchHypergraph { n, r });
    }
    if n > NARROW_LIMIT {
        return Err(Error::OutOfRange(format!("oracle supports at most {NARROW_LIMIT} vertices")));
    }
    let total = binomial_u64(n as u64, r as u64).filter(|&c| c <= options.max_candidates).ok_or_else(|| {
        Error::CapExceeded {
            what: "oracle candidate edges",
            required: binomial(n as u64, r as u64),
            cap: options.max_candidates,
        }
    })?;
    let candidates: Vec<Vec<u32>> = Combinations::new(n, r).collect();
    let masks: Vec<u128> = candidates.iter().map(|c| u128::from_vertices(n, c)).collect();
    let transpositions = (0..n as u32).flat_map(|a| (a + 1..n as u32).map(move |b| (a, b))).collect();
    let mut search = Search {
        n,
        r,
        intersecting: quantity == Quantity::F,
        masks: &masks,
        ranker: Ranker::new(n, r),
        transpositions,
        chosen: Vec::new(),
        family: Vec::new(),
        image: Vec::new(),
        pool: Vec::new(),
        budget: options.node_budget,
        nodes: 0,
    };

    let floor = de_caen_ceil(n, r)?.to_u64().unwrap_or(u64::MAX);
    let mut m = floor;
    while m <= total {
        search.chosen.clear();
        search.family.clear();
        match search.step(0, m as usize) {
            Ok(true) => {
                let edges = search.chosen.iter().map(|&i| candidates[i].clone()).collect();
                let witness = Hypergraph::uniform(n, r, edges)?;
                verify_witness(quantity, &witness)?;
                return Ok(OracleResult {
                    quantity,
                    n,
                    r,
                    value: m,
                    lower: m,
                    witness,
                    exhaustive: true,
                    nodes: search.nodes,
                });
            }
            Ok(false) => m += 1,
            Err(Exhausted) => {
                let witness = fallback_witness(quantity, n, r)?;
                verify_witness(quantity, &witness)?;
                return Ok(OracleResult {
                    quantity,
                    n,
                    r,
                    value: witness.edge_count() as u64,
                    lower: m,
                    witness,
                    exhaustive: false,
                    nodes: search.nodes,
                });
            }
        }
    }
    Err(Error::Internal(format!("no valid family on ({n}, {r}) even with every candidate edge")))
}

fn fallback_witness(quantity: Quantity, n: usize, r: usize) -> Result<Hypergraph> {
    match quantity {
        Quantity::F => Ok(build_critical(n, r, BuildOptions::default())?.hypergraph),
        Quantity::U => Ok(greedy_covering(n, r, greedy::DEFAULT_SUBSET_CAP)?.hypergraph),
    }
}

/// Re-checks a witness with predicates independent of the search state.
fn verify_witness(quantity: Quantity, w: &Hypergraph) -> Result<()> {
    let r = w.require_uniform()?;
    let ok = match quantity {
        Quantity::F => w.is_intersecting() && cover_number(w)?.tau == r,
        Quantity::U => w.has_covering_property(w.n() - r + 1, DEFAULT_SUBSET_CAP)?,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Internal(format!("{quantity:?} witness failed independent verification")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> OracleOptions {
        OracleOptions::default()
    }

    #[test]
    fn f_examples() {
        let f32 = brute_force_f(3, 2, opts()).unwrap();
        assert_eq!((f32.value, f32.exhaustive), (3, true));
        let f53 = brute_force_f(5, 3, opts()).unwrap();
        assert_eq!(f53.value, 10);
        let f42 = brute_force_f(4, 2, opts()).unwrap();
        assert_eq!(f42.value, 3);
        assert_eq!(f42.witness.edges(), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn u_examples() {
        assert_eq!(brute_force_u(5, 3, opts()).unwrap().value, 10);
        let u93 = brute_force_u(9, 3, OracleOptions { max_candidates: 100, ..opts() }).unwrap();
        assert_eq!(u93.value, 3);
        assert_eq!(u93.witness.edges(), &[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]);
    }

    #[test]
    fn gates() {
        assert!(matches!(brute_force_f(4, 3, opts()), Err(Error::NoSuchHypergraph { .. })));
        assert!(matches!(brute_force_f(9, 3, opts()), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn budget_truncation_reports_an_interval() {
        let res = brute_force_f(7, 3, OracleOptions { node_budget: 5, ..opts() }).unwrap();
        assert!(!res.exhaustive);
        assert!(res.lower <= res.value);
        assert_eq!(res.witness.edge_count() as u64, res.value);
    }
}
