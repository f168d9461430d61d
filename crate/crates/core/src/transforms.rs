//! Wreath product and the one-step uniformity augmentation.

use num_bigint::BigUint;
use num_traits::One;

use crate::cover::is_critical;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::par;

/// Exact edge count of `H1 ⋊ H2`: `|E1| * |E2|^r1`.
pub fn wreath_edge_count(outer_edges: usize, inner_edges: usize, outer_uniformity: usize) -> BigUint {
    BigUint::from(outer_edges) * BigUint::from(inner_edges).pow(outer_uniformity as u32)
}

/// Vertex and edge counts after `steps` applications of [`add_one`] to an
/// `r`-uniform hypergraph with the given counts.
pub fn augmented_counts(vertices: u64, edges: BigUint, r: usize, steps: usize) -> (u64, BigUint) {
    let (mut v, mut e) = (vertices, edges);
    for u in r..r + steps {
        v += u as u64 + 1;
        e = e * (u + 1) + BigUint::one();
    }
    (v, e)
}

/// `H1 ⋊ H2`: one copy ("block") of `V(H2)` per vertex of `H1`; each edge
/// picks an edge `e` of `H1` and, for every `v` in `e`, an edge `f_v` of `H2`
/// placed in block `v`. Vertex `(v, u)` is numbered `v * |V(H2)| + u`.
///
/// The edge count is checked against `edge_cap` before anything is built.
pub fn wreath_product(outer: &Hypergraph, inner: &Hypergraph, edge_cap: u64) -> Result<Hypergraph> {
    let r1 = outer.require_uniform()?;
    let r2 = inner.require_uniform()?;
    let predicted = wreath_edge_count(outer.edge_count(), inner.edge_count(), r1);
    if predicted > BigUint::from(edge_cap) {
        return Err(Error::CapExceeded { what: "wreath product edges", required: predicted, cap: edge_cap });
    }
    let per_outer = par::map(outer.edge_count(), |i| WreathEdges::for_outer_edge(outer, inner, i).collect::<Vec<_>>());
    let edges = per_outer.into_iter().flatten().collect();
    Hypergraph::uniform(outer.n() * inner.n(), r1 * r2, edges)
}

/// Lazily enumerates the edges of `H1 ⋊ H2`, ordered by outer edge index and
/// then lexicographically by the inner edge indices chosen per block.
pub fn wreath_edge_stream<'a>(outer: &'a Hypergraph, inner: &'a Hypergraph) -> Result<WreathEdges<'a>> {
    outer.require_uniform()?;
    inner.require_uniform()?;
    Ok(WreathEdges::new(outer, inner, 0, outer.edge_count()))
}

/// Decoded form of one product edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathEdgeIndex {
    pub outer_edge: usize,
    /// Inner edge index placed in the block of each outer-edge vertex, in
    /// ascending vertex order.
    pub inner_choice: Vec<usize>,
}

impl WreathEdgeIndex {
    pub fn vertices(&self, outer: &Hypergraph, inner: &Hypergraph) -> Vec<u32> {
        let n2 = inner.n() as u32;
        outer.edges()[self.outer_edge]
            .iter()
            .zip(&self.inner_choice)
            .flat_map(|(&v, &f)| inner.edges()[f].iter().map(move |&u| v * n2 + u))
            .collect()
    }
}

pub struct WreathEdges<'a> {
    outer: &'a Hypergraph,
    inner: &'a Hypergraph,
    current: Option<WreathEdgeIndex>,
    end_outer: usize,
}

impl<'a> WreathEdges<'a> {
    fn new(outer: &'a Hypergraph, inner: &'a Hypergraph, start_outer: usize, end_outer: usize) -> Self {
        let current = (start_outer < end_outer && !inner.is_empty()).then(|| WreathEdgeIndex {
            outer_edge: start_outer,
            inner_choice: vec![0; outer.edges()[start_outer].len()],
        });
        WreathEdges { outer, inner, current, end_outer }
    }

    fn for_outer_edge(outer: &'a Hypergraph, inner: &'a Hypergraph, i: usize) -> Self {
        Self::new(outer, inner, i, i + 1)
    }

    fn step(&mut self) {
        let Some(cur) = self.current.as_mut() else { return };
        let m2 = self.inner.edge_count();
        for slot in cur.inner_choice.iter_mut().rev() {
            *slot += 1;
            if *slot < m2 {
                return;
            }
            *slot = 0;
        }
        cur.outer_edge += 1;
        if cur.outer_edge >= self.end_outer {
            self.current = None;
        } else {
            cur.inner_choice = vec![0; self.outer.edges()[cur.outer_edge].len()];
        }
    }

    /// Yields decoded indices instead of vertex lists.
    pub fn indices(mut self) -> impl Iterator<Item = WreathEdgeIndex> + 'a {
        std::iter::from_fn(move || {
            let out = self.current.clone()?;
            self.step();
            Some(out)
        })
    }
}

impl Iterator for WreathEdges<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let edge = self.current.as_ref()?.vertices(self.outer, self.inner);
        self.step();
        Some(edge)
    }
}

/// From an r-uniform critical `H`, the (r+1)-uniform hypergraph on
/// `V(H) ∪ S` with `|S| = r + 1` fresh vertices `n..n+r`, whose edges are
/// `e ∪ {v}` for every edge `e` and `v ∈ S`, plus `S` itself.
///
/// Criticality of the input is not checked; see [`add_one_checked`].
pub fn add_one(h: &Hypergraph, edge_cap: u64) -> Result<Hypergraph> {
    let r = h.require_uniform()?;
    let predicted = BigUint::from(h.edge_count()) * (r + 1) + BigUint::one();
    if predicted > BigUint::from(edge_cap) {
        return Err(Error::CapExceeded { what: "augmented edges", required: predicted, cap: edge_cap });
    }
    let n = h.n() as u32;
    let fresh: Vec<u32> = (n..=n + r as u32).collect();
    let mut edges = Vec::with_capacity(h.edge_count() * (r + 1) + 1);
    for e in h.edges() {
        for &v in &fresh {
            let mut grown = e.clone();
            grown.push(v);
            edges.push(grown);
        }
    }
    edges.push(fresh);
    Hypergraph::uniform(h.n() + r + 1, r + 1, edges)
}

/// [`add_one`] after confirming with the cover solver that the input is
/// critical.
pub fn add_one_checked(h: &Hypergraph, edge_cap: u64, node_budget: u64) -> Result<Hypergraph> {
    let report = is_critical(h, node_budget)?;
    if !report.critical {
        return Err(Error::NotCritical(report.reason.unwrap_or_default()));
    }
    add_one(h, edge_cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{cover_number, DEFAULT_NODE_BUDGET};
    use crate::generators::{projective_plane, DEFAULT_EDGE_CAP};

    fn triangle() -> Hypergraph {
        projective_plane(1).unwrap()
    }

    #[test]
    fn triangle_wreath_triangle() {
        let p = wreath_product(&triangle(), &triangle(), DEFAULT_EDGE_CAP).unwrap();
        assert_eq!((p.n(), p.edge_count(), p.r()), (9, 27, Some(4)));
        assert!(p.is_intersecting());
        assert_eq!(cover_number(&p).unwrap().tau, 4);
    }

    #[test]
    fn single_edge_inner_factor_blows_up_edges() {
        let single = Hypergraph::uniform(2, 2, vec![vec![0, 1]]).unwrap();
        let p = wreath_product(&triangle(), &single, DEFAULT_EDGE_CAP).unwrap();
        assert_eq!((p.n(), p.edge_count(), p.r()), (6, 3, Some(4)));
        assert_eq!(p.edges()[0], vec![0, 1, 2, 3]);
    }

    #[test]
    fn fano_wreath_triangle() {
        let p = wreath_product(&projective_plane(2).unwrap(), &triangle(), DEFAULT_EDGE_CAP).unwrap();
        assert_eq!((p.n(), p.edge_count(), p.r()), (21, 189, Some(6)));
        assert_eq!(cover_number(&p).unwrap().tau, 6);
    }

    #[test]
    fn wreath_cap_is_checked_first() {
        let pg3 = projective_plane(3).unwrap();
        match wreath_product(&pg3, &pg3, 1000) {
            Err(Error::CapExceeded { required, .. }) => assert_eq!(required, BigUint::from(13u64.pow(5))),
            other => panic!("unexpected {other:?}"),
        }
        let mixed = Hypergraph::new(3, vec![vec![0], vec![1, 2]]).unwrap();
        assert!(matches!(wreath_product(&mixed, &triangle(), 10), Err(Error::NotUniform)));
    }

    #[test]
    fn stream_order_and_count() {
        let t = triangle();
        let stream: Vec<_> = wreath_edge_stream(&t, &t).unwrap().collect();
        assert_eq!(stream.len(), 27);
        // Blocks 0 and 1, each holding the triangle's first edge {0, 1}.
        assert_eq!(stream[0], vec![0, 1, 3, 4]);
        let mut sorted = stream.clone();
        sorted.sort();
        let product = wreath_product(&t, &t, DEFAULT_EDGE_CAP).unwrap();
        assert_eq!(sorted, product.edges());
        let idx: Vec<_> = wreath_edge_stream(&t, &t).unwrap().indices().take(2).collect();
        assert_eq!(idx[1], WreathEdgeIndex { outer_edge: 0, inner_choice: vec![0, 1] });
    }

    #[test]
    fn add_one_examples() {
        let a = add_one(&triangle(), DEFAULT_EDGE_CAP).unwrap();
        assert_eq!((a.n(), a.edge_count(), a.r()), (6, 10, Some(3)));
        assert_eq!(cover_number(&a).unwrap().tau, 3);
        let af = add_one(&projective_plane(2).unwrap(), DEFAULT_EDGE_CAP).unwrap();
        assert_eq!((af.n(), af.edge_count(), af.r()), (11, 29, Some(4)));
        assert_eq!(cover_number(&af).unwrap().tau, 4);
        let aa = add_one(&a, DEFAULT_EDGE_CAP).unwrap();
        assert_eq!((aa.n(), aa.edge_count(), aa.r()), (10, 41, Some(4)));
        assert_eq!(cover_number(&aa).unwrap().tau, 4);
        assert_eq!(augmented_counts(3, 3u32.into(), 2, 2), (10, 41u32.into()));
    }

    #[test]
    fn checked_augmentation_rejects_non_critical_input() {
        let star = Hypergraph::uniform(4, 2, vec![vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap();
        assert!(matches!(add_one_checked(&star, 100, DEFAULT_NODE_BUDGET), Err(Error::NotCritical(_))));
        assert!(add_one_checked(&triangle(), 100, DEFAULT_NODE_BUDGET).is_ok());
    }
}
