//! The hypergraph value type and its structural predicates.

use serde::Serialize;

use crate::bits::{self, VertexBits, WideSet, NARROW_LIMIT};
use crate::combinatorics::{binomial, binomial_u64, Combinations};
use crate::error::{Error, Result};
use crate::par;

/// Default limit on the number of k-subsets [`Hypergraph::has_covering_property`]
/// will enumerate.
pub const DEFAULT_SUBSET_CAP: u64 = 10_000_000;

/// A finite hypergraph on the vertices `0..n`.
///
/// Edges are non-empty, sorted, duplicate-free vertex lists, and the edge list
/// itself is kept in lexicographic order, so two hypergraphs with the same edge
/// set compare (and serialize) identically. The optional uniformity tag is
/// validated on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    r: Option<usize>,
    edges: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypergraphStats {
    pub n: usize,
    pub r: Option<usize>,
    pub edge_count: usize,
    pub isolated_vertex_count: usize,
    pub is_intersecting: bool,
    pub tau: Option<usize>,
}

impl Hypergraph {
    /// Untagged hypergraph; edges may have mixed sizes.
    pub fn new(n: usize, edges: Vec<Vec<u32>>) -> Result<Self> {
        Self::build(n, None, edges)
    }

    /// r-uniform hypergraph; every edge must have exactly `r` vertices.
    pub fn uniform(n: usize, r: usize, edges: Vec<Vec<u32>>) -> Result<Self> {
        Self::build(n, Some(r), edges)
    }

    pub fn build(n: usize, r: Option<usize>, edges: Vec<Vec<u32>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if r == Some(0) {
            return Err(Error::OutOfRange("uniformity tag must be at least 1".into()));
        }
        let mut tagged = Vec::with_capacity(edges.len());
        for (index, mut edge) in edges.into_iter().enumerate() {
            if edge.is_empty() {
                return Err(Error::InvalidEdge { index, reason: "edge is empty".into() });
            }
            edge.sort_unstable();
            if let Some(&v) = edge.iter().find(|&&v| v as usize >= n) {
                return Err(Error::InvalidEdge { index, reason: format!("vertex {v} out of range for n = {n}") });
            }
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge { index, reason: format!("vertex {} repeated", w[0]) });
            }
            if let Some(r) = r {
                if edge.len() != r {
                    return Err(Error::InvalidEdge {
                        index,
                        reason: format!("has {} vertices but the hypergraph is {r}-uniform", edge.len()),
                    });
                }
            }
            tagged.push((edge, index));
        }
        tagged.sort_unstable();
        let duplicate = tagged.windows(2).filter(|w| w[0].0 == w[1].0).map(|w| w[1].1).min();
        if let Some(index) = duplicate {
            return Err(Error::DuplicateEdge { index });
        }
        Ok(Hypergraph { n, r, edges: tagged.into_iter().map(|(e, _)| e).collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The declared uniformity tag.
    pub fn r(&self) -> Option<usize> {
        self.r
    }

    /// The tag if present, otherwise the common edge size when all edges agree.
    pub fn uniformity(&self) -> Option<usize> {
        if self.r.is_some() {
            return self.r;
        }
        let first = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == first).then_some(first)
    }

    pub(crate) fn require_uniform(&self) -> Result<usize> {
        self.uniformity().ok_or(Error::NotUniform)
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Same edges with the uniformity tag set (validated).
    pub fn tagged(self, r: usize) -> Result<Self> {
        if let Some(index) = self.edges.iter().position(|e| e.len() != r) {
            return Err(Error::InvalidEdge {
                index,
                reason: format!("has {} vertices but the hypergraph is {r}-uniform", self.edges[index].len()),
            });
        }
        Ok(Hypergraph { r: Some(r), ..self })
    }

    pub fn is_uniform(&self, r: usize) -> bool {
        self.edges.iter().all(|e| e.len() == r)
    }

    /// True iff every pair of edges shares a vertex.
    pub fn is_intersecting(&self) -> bool {
        fn pairwise<B: VertexBits>(masks: &[B]) -> bool {
            !par::any(masks.len(), |i| masks[i + 1..].iter().any(|other| !masks[i].intersects(other)))
        }
        if self.n <= NARROW_LIMIT {
            pairwise(&self.masks::<u128>())
        } else {
            pairwise(&self.masks::<WideSet>())
        }
    }

    pub fn masks<B: VertexBits>(&self) -> Vec<B> {
        bits::masks(self.n, &self.edges)
    }

    /// Vertices lying on at least one edge, ascending.
    pub fn covered_vertices(&self) -> Vec<u32> {
        let mut seen = vec![false; self.n];
        for e in &self.edges {
            for &v in e {
                seen[v as usize] = true;
            }
        }
        (0..self.n as u32).filter(|&v| seen[v as usize]).collect()
    }

    pub fn isolated_vertex_count(&self) -> usize {
        self.n - self.covered_vertices().len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v as usize] += 1;
            }
        }
        deg
    }

    /// Same edges on `n_target` vertices.
    pub fn pad_isolated(&self, n_target: usize) -> Result<Self> {
        if n_target < self.n {
            return Err(Error::CannotShrink { from: self.n, to: n_target });
        }
        Ok(Hypergraph { n: n_target, ..self.clone() })
    }

    /// Drops isolated vertices and relabels the rest `0..m` in their original
    /// order. An edgeless input yields `n = 0`.
    pub fn remove_isolated(&self) -> Self {
        let used = self.covered_vertices();
        let mut relabel = vec![u32::MAX; self.n];
        for (new, &old) in used.iter().enumerate() {
            relabel[old as usize] = new as u32;
        }
        // The relabeling is monotone, so edge order and sortedness survive.
        let edges = self.edges.iter().map(|e| e.iter().map(|&v| relabel[v as usize]).collect()).collect();
        Hypergraph { n: used.len(), r: self.r, edges }
    }

    /// True iff every k-subset of the vertices contains an edge, checked by
    /// enumerating all `C(n, k)` subsets (refused above `cap`).
    pub fn has_covering_property(&self, k: usize, cap: u64) -> Result<bool> {
        if k > self.n {
            return Err(Error::OutOfRange(format!("k = {k} exceeds n = {}", self.n)));
        }
        let total = match binomial_u64(self.n as u64, k as u64) {
            Some(t) if t <= cap => t,
            _ => {
                return Err(Error::CapExceeded {
                    what: "k-subsets to enumerate",
                    required: binomial(self.n as u64, k as u64),
                    cap,
                })
            }
        };
        Ok(if self.n <= NARROW_LIMIT {
            every_subset_contains_edge(self.n, k, total, &self.masks::<u128>())
        } else {
            every_subset_contains_edge(self.n, k, total, &self.masks::<WideSet>())
        })
    }

    /// Summary statistics; `tau` is filled in when `tau_budget` is given and the
    /// solver finishes within it.
    pub fn stats(&self, tau_budget: Option<u64>) -> HypergraphStats {
        let tau =
            tau_budget.and_then(|budget| crate::cover::cover_number_with_budget(self, budget).ok().map(|c| c.tau));
        HypergraphStats {
            n: self.n,
            r: self.r,
            edge_count: self.edges.len(),
            isolated_vertex_count: self.isolated_vertex_count(),
            is_intersecting: self.is_intersecting(),
            tau,
        }
    }
}

fn every_subset_contains_edge<B: VertexBits>(n: usize, k: usize, total: u64, edges: &[B]) -> bool {
    let chunks = par::chunk_count(total);
    let per_chunk = total.div_ceil(chunks);
    !par::any(chunks as usize, |c| {
        let start = c as u64 * per_chunk;
        let len = per_chunk.min(total.saturating_sub(start));
        Combinations::starting_at(n, k, start).take(len as usize).any(|subset| {
            let s = B::from_vertices(n, &subset);
            !edges.iter().any(|e| e.is_subset_of(&s))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Hypergraph {
        Hypergraph::uniform(3, 2, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap()
    }

    #[test]
    fn uniformity_checks() {
        let t = triangle();
        assert!(t.is_uniform(2));
        assert!(!t.is_uniform(3));
        let empty = Hypergraph::new(4, vec![]).unwrap();
        assert!(empty.is_uniform(7));
        assert_eq!(empty.uniformity(), None);
        let mixed = Hypergraph::new(4, vec![vec![0], vec![1, 2]]).unwrap();
        assert_eq!(mixed.uniformity(), None);
    }

    #[test]
    fn construction_normalizes_order() {
        let h = Hypergraph::new(4, vec![vec![3, 2], vec![1, 0]]).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn construction_errors_name_the_edge() {
        let dup = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![1, 0]]);
        assert!(matches!(dup, Err(Error::DuplicateEdge { index: 2 })));
        let range = Hypergraph::new(3, vec![vec![0, 1], vec![1, 3]]);
        assert!(matches!(range, Err(Error::InvalidEdge { index: 1, .. })));
        let tag = Hypergraph::uniform(4, 2, vec![vec![0, 1], vec![1, 2, 3]]);
        assert!(matches!(tag, Err(Error::InvalidEdge { index: 1, .. })));
        assert!(matches!(Hypergraph::new(0, vec![]), Err(Error::NoVertices)));
        assert!(matches!(Hypergraph::new(3, vec![vec![]]), Err(Error::InvalidEdge { index: 0, .. })));
    }

    #[test]
    fn intersecting() {
        assert!(triangle().is_intersecting());
        let disjoint = Hypergraph::uniform(4, 2, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert!(!disjoint.is_intersecting());
        let wide = Hypergraph::uniform(200, 2, vec![vec![0, 199], vec![150, 199], vec![0, 150]]).unwrap();
        assert!(wide.is_intersecting());
        let wide_disjoint = Hypergraph::uniform(200, 2, vec![vec![0, 199], vec![150, 198]]).unwrap();
        assert!(!wide_disjoint.is_intersecting());
    }

    #[test]
    fn padding() {
        let t = triangle();
        let p = t.pad_isolated(4).unwrap();
        assert_eq!(p.n(), 4);
        assert_eq!(p.edges(), t.edges());
        assert_eq!(t.pad_isolated(3).unwrap(), t);
        assert!(matches!(t.pad_isolated(2), Err(Error::CannotShrink { from: 3, to: 2 })));
    }

    #[test]
    fn removing_isolated() {
        let t = triangle();
        assert_eq!(t.pad_isolated(4).unwrap().remove_isolated(), t);
        assert_eq!(t.remove_isolated(), t);
        let gappy = Hypergraph::uniform(6, 2, vec![vec![1, 3], vec![3, 5]]).unwrap();
        let trimmed = gappy.remove_isolated();
        assert_eq!(trimmed.n(), 3);
        assert_eq!(trimmed.edges(), &[vec![0, 1], vec![1, 2]]);
        assert_eq!(Hypergraph::new(5, vec![]).unwrap().remove_isolated().n(), 0);
    }

    #[test]
    fn covering_property_examples() {
        let k5: Vec<Vec<u32>> = Combinations::new(5, 3).collect();
        let k5 = Hypergraph::uniform(5, 3, k5).unwrap();
        assert!(k5.has_covering_property(3, DEFAULT_SUBSET_CAP).unwrap());
        let triples = Hypergraph::uniform(9, 3, vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]).unwrap();
        assert!(triples.has_covering_property(7, DEFAULT_SUBSET_CAP).unwrap());
        assert!(!triples.has_covering_property(6, DEFAULT_SUBSET_CAP).unwrap());
        assert!(!triangle().has_covering_property(1, DEFAULT_SUBSET_CAP).unwrap());
        assert!(triangle().has_covering_property(2, DEFAULT_SUBSET_CAP).unwrap());
    }

    #[test]
    fn covering_property_guards() {
        let t = triangle();
        assert!(matches!(t.has_covering_property(4, 10), Err(Error::OutOfRange(_))));
        let big = Hypergraph::new(40, vec![vec![0]]).unwrap();
        assert!(matches!(big.has_covering_property(20, 1000), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn stats_fields() {
        let s = triangle().pad_isolated(5).unwrap().stats(Some(1000));
        assert_eq!(s.edge_count, 3);
        assert_eq!(s.isolated_vertex_count, 2);
        assert!(s.is_intersecting);
        assert_eq!(s.tau, Some(2));
    }
}
