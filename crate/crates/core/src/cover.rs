//! Exact minimum vertex cover (transversal) search.
//!
//! The decision procedure branches on the lexicographically first uncovered
//! edge, trying its vertices in ascending order. Vertices rejected by earlier
//! sibling branches are excluded from later ones, and a greedy packing of
//! pairwise-disjoint uncovered edges bounds the remaining depth. The search
//! order is fixed, so results are deterministic.

use serde::Serialize;

use crate::bits::{VertexBits, WideSet, NARROW_LIMIT};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverCertificate {
    pub tau: usize,
    pub cover: Vec<u32>,
    /// Set when every smaller size was ruled out by exhaustive search.
    pub optimal: bool,
    pub nodes_explored: u64,
}

impl CoverCertificate {
    /// Checks that `cover` has `tau` vertices and meets every edge of `h`.
    pub fn covers(&self, h: &Hypergraph) -> bool {
        self.cover.len() == self.tau && is_cover(h, &self.cover)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub r: usize,
    pub intersecting: bool,
    pub certificate: CoverCertificate,
    pub critical: bool,
    /// Which condition failed, when `critical` is false.
    pub reason: Option<String>,
}

pub fn is_cover(h: &Hypergraph, vertices: &[u32]) -> bool {
    h.edges().iter().all(|e| e.iter().any(|v| vertices.contains(v)))
}

struct Exhausted;

struct Search<'a, B> {
    edges: &'a [B],
    budget: u64,
    nodes: u64,
}

impl<B: VertexBits> Search<'_, B> {
    fn branch(
        &mut self,
        cover: &mut B,
        excluded: &mut B,
        left: usize,
        n: usize,
    ) -> std::result::Result<bool, Exhausted> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Exhausted);
        }
        let mut first = None;
        let mut packing = 0;
        let mut packed = B::empty(n);
        for (i, e) in self.edges.iter().enumerate() {
            if e.intersects(cover) {
                continue;
            }
            if e.is_subset_of(excluded) {
                return Ok(false);
            }
            first.get_or_insert(i);
            if !e.intersects(&packed) {
                packing += 1;
                packed.union_with(e);
            }
        }
        let Some(first) = first else {
            return Ok(true);
        };
        if packing > left {
            return Ok(false);
        }
        let mut rejected = Vec::new();
        for v in self.edges[first].ones() {
            if excluded.contains(v) {
                continue;
            }
            cover.insert(v);
            if self.branch(cover, excluded, left - 1, n)? {
                return Ok(true);
            }
            cover.remove(v);
            excluded.insert(v);
            rejected.push(v);
        }
        for v in rejected {
            excluded.remove(v);
        }
        Ok(false)
    }
}

/// Searches for a cover of size at most `k` among the edge masks; `nodes` is
/// incremented by the nodes visited.
pub(crate) fn search_masks<B: VertexBits>(
    n: usize,
    edges: &[B],
    k: usize,
    budget: u64,
    nodes: &mut u64,
) -> std::result::Result<Option<B>, ()> {
    let mut search = Search { edges, budget, nodes: *nodes };
    let mut cover = B::empty(n);
    let mut excluded = B::empty(n);
    let outcome = search.branch(&mut cover, &mut excluded, k, n);
    *nodes = search.nodes;
    match outcome {
        Ok(true) => Ok(Some(cover)),
        Ok(false) => Ok(None),
        Err(Exhausted) => Err(()),
    }
}

fn search_hypergraph(
    h: &Hypergraph,
    k: usize,
    budget: u64,
    nodes: &mut u64,
) -> std::result::Result<Option<Vec<u32>>, ()> {
    if h.n() <= NARROW_LIMIT {
        search_masks(h.n(), &h.masks::<u128>(), k, budget, nodes).map(|c| c.map(|c| c.ones()))
    } else {
        search_masks(h.n(), &h.masks::<WideSet>(), k, budget, nodes).map(|c| c.map(|c| c.ones()))
    }
}

/// A cover with at most `k` vertices, if one exists.
pub fn cover_at_most(h: &Hypergraph, k: usize) -> Option<Vec<u32>> {
    let mut nodes = 0;
    search_hypergraph(h, k, u64::MAX, &mut nodes).unwrap_or_else(|_| unreachable!("unbounded budget"))
}

/// As [`cover_at_most`], giving up after `budget` search nodes.
pub fn cover_at_most_with_budget(h: &Hypergraph, k: usize, budget: u64) -> Result<Option<Vec<u32>>> {
    let mut nodes = 0;
    search_hypergraph(h, k, budget, &mut nodes).map_err(|_| Error::BudgetExhausted { lower: 0, upper: h.n(), nodes })
}

/// Repeatedly takes a vertex of maximum degree among uncovered edges (lowest
/// id on ties).
pub fn greedy_cover(h: &Hypergraph) -> Vec<u32> {
    let mut alive: Vec<&Vec<u32>> = h.edges().iter().collect();
    let mut cover = Vec::new();
    while !alive.is_empty() {
        let mut deg = vec![0usize; h.n()];
        for e in &alive {
            for &v in e.iter() {
                deg[v as usize] += 1;
            }
        }
        let best = (0..h.n()).max_by_key(|&v| (deg[v], std::cmp::Reverse(v))).unwrap() as u32;
        cover.push(best);
        alive.retain(|e| !e.contains(&best));
    }
    cover.sort_unstable();
    cover
}

/// Size of a greedy maximal family of pairwise-disjoint edges, scanned in
/// edge order. A lower bound on the cover number.
pub fn disjoint_packing(h: &Hypergraph) -> usize {
    let mut used = vec![false; h.n()];
    let mut count = 0;
    for e in h.edges() {
        if e.iter().all(|&v| !used[v as usize]) {
            for &v in e {
                used[v as usize] = true;
            }
            count += 1;
        }
    }
    count
}

/// Smallest k such that the k largest vertex degrees sum to at least the edge
/// count. Any cover must reach every edge, so this bounds the cover number
/// from below.
pub fn degree_lower_bound(h: &Hypergraph) -> usize {
    let mut deg = h.degrees();
    deg.sort_unstable_by(|a, b| b.cmp(a));
    let m = h.edge_count();
    let mut acc = 0;
    for (i, d) in deg.into_iter().enumerate() {
        if acc >= m {
            return i;
        }
        acc += d;
    }
    h.n()
}

pub fn cover_number(h: &Hypergraph) -> Result<CoverCertificate> {
    cover_number_with_budget(h, DEFAULT_NODE_BUDGET)
}

/// Exact cover number by iterative deepening from the packing lower bound up
/// to the greedy upper bound.
pub fn cover_number_with_budget(h: &Hypergraph, budget: u64) -> Result<CoverCertificate> {
    if h.is_empty() {
        return Ok(CoverCertificate { tau: 0, cover: vec![], optimal: true, nodes_explored: 0 });
    }
    let greedy = greedy_cover(h);
    let upper = greedy.len();
    let lower = disjoint_packing(h).max(1);
    let mut nodes = 0;
    for k in lower..upper {
        match search_hypergraph(h, k, budget, &mut nodes) {
            Ok(Some(cover)) => {
                return Ok(CoverCertificate { tau: cover.len(), cover, optimal: true, nodes_explored: nodes })
            }
            Ok(None) => {}
            Err(()) => return Err(Error::BudgetExhausted { lower: k, upper, nodes }),
        }
    }
    Ok(CoverCertificate { tau: upper, cover: greedy, optimal: true, nodes_explored: nodes })
}

/// Intersecting with cover number equal to the uniformity.
pub fn is_critical(h: &Hypergraph, budget: u64) -> Result<CriticalityReport> {
    let r = h.require_uniform()?;
    let intersecting = h.is_intersecting();
    let certificate = cover_number_with_budget(h, budget)?;
    let tau = certificate.tau;
    let reason = match (intersecting, tau == r) {
        (true, true) => None,
        (false, true) => Some("not intersecting".to_string()),
        (true, false) => Some(format!("tau={tau} < r={r}")),
        (false, false) => Some(format!("not intersecting and tau={tau} != r={r}")),
    };
    Ok(CriticalityReport { r, intersecting, critical: reason.is_none(), certificate, reason })
}
