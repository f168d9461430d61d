//! Base critical hypergraphs: complete uniform hypergraphs, projective planes
//! over prime fields, and augmented planes.

use num_bigint::BigUint;
use serde::Serialize;

use crate::combinatorics::{binomial, is_prime, largest_prime_below, Combinations};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::serde_big;
use crate::transforms::{add_one, augmented_counts};

/// Default limit on materialized edge counts.
pub const DEFAULT_EDGE_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseKind {
    ProjectivePlane,
    AugmentedProjectivePlane,
    Complete,
}

/// A recipe for an r-uniform critical hypergraph without isolated vertices,
/// with its exact size.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BaseChoice {
    pub kind: BaseKind,
    pub uniformity: usize,
    pub order_q: Option<u64>,
    pub augment_steps: usize,
    pub predicted_vertices: u64,
    #[serde(with = "serde_big")]
    pub predicted_edges: BigUint,
}

/// All r-subsets of `0..m`.
pub fn complete_uniform(m: usize, r: usize, edge_cap: u64) -> Result<Hypergraph> {
    if r == 0 || r > m {
        return Err(Error::OutOfRange(format!("complete hypergraph needs 1 <= r <= m (m = {m}, r = {r})")));
    }
    let count = binomial(m as u64, r as u64);
    if count > BigUint::from(edge_cap) {
        return Err(Error::CapExceeded { what: "complete hypergraph edges", required: count, cap: edge_cap });
    }
    Hypergraph::uniform(m, r, Combinations::new(m, r).collect())
}

/// `K_{2r-1}^{(r)}` plus one isolated vertex.
pub fn complete_critical(r: usize, edge_cap: u64) -> Result<Hypergraph> {
    if r < 2 {
        return Err(Error::OutOfRange(format!("complete_critical needs r >= 2, got {r}")));
    }
    complete_uniform(2 * r - 1, r, edge_cap)?.pad_isolated(2 * r)
}

/// The Desarguesian plane PG(2, q) for prime `q`, as the (q+1)-uniform
/// hypergraph of its lines. `q = 1` gives the triangle.
///
/// Points and lines are the normalized nonzero vectors of `F_q^3`, listed as
/// `(1, a, b)`, then `(0, 1, a)`, then `(0, 0, 1)`; a point lies on a line
/// when their dot product vanishes mod q.
pub fn projective_plane(q: u64) -> Result<Hypergraph> {
    if q == 1 {
        return Hypergraph::uniform(3, 2, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }
    if !is_prime(q) {
        return Err(Error::UnsupportedOrder { q });
    }
    let mut coords: Vec<[u64; 3]> = Vec::new();
    for a in 0..q {
        for b in 0..q {
            coords.push([1, a, b]);
        }
    }
    for a in 0..q {
        coords.push([0, 1, a]);
    }
    coords.push([0, 0, 1]);
    let lines = coords
        .iter()
        .map(|line| {
            coords
                .iter()
                .enumerate()
                .filter(|(_, p)| (p[0] * line[0] + p[1] * line[1] + p[2] * line[2]) % q == 0)
                .map(|(i, _)| i as u32)
                .collect()
        })
        .collect();
    Hypergraph::uniform(coords.len(), q as usize + 1, lines)
}

/// Every base recipe considered for uniformity `r`, unsorted.
pub fn base_candidates(r: usize) -> Vec<BaseChoice> {
    let mut out = Vec::new();
    if r < 2 {
        return out;
    }
    let q = r as u64 - 1;
    if q == 1 || is_prime(q) {
        let size = q * q + q + 1;
        out.push(BaseChoice {
            kind: BaseKind::ProjectivePlane,
            uniformity: r,
            order_q: Some(q),
            augment_steps: 0,
            predicted_vertices: size,
            predicted_edges: BigUint::from(size),
        });
    }
    if let Some(q) = largest_prime_below(r as u64 - 1) {
        let size = q * q + q + 1;
        let steps = r - q as usize - 1;
        let (vertices, edges) = augmented_counts(size, BigUint::from(size), q as usize + 1, steps);
        out.push(BaseChoice {
            kind: BaseKind::AugmentedProjectivePlane,
            uniformity: r,
            order_q: Some(q),
            augment_steps: steps,
            predicted_vertices: vertices,
            predicted_edges: edges,
        });
    }
    out.push(BaseChoice {
        kind: BaseKind::Complete,
        uniformity: r,
        order_q: None,
        augment_steps: 0,
        predicted_vertices: 2 * r as u64 - 1,
        predicted_edges: binomial(2 * r as u64 - 1, r as u64),
    });
    out
}

/// Builds the hypergraph a [`BaseChoice`] describes.
pub fn materialize(choice: &BaseChoice, edge_cap: u64) -> Result<Hypergraph> {
    if choice.predicted_edges > BigUint::from(edge_cap) {
        return Err(Error::CapExceeded {
            what: "base hypergraph edges",
            required: choice.predicted_edges.clone(),
            cap: edge_cap,
        });
    }
    let h = match choice.kind {
        BaseKind::Complete => complete_uniform(2 * choice.uniformity - 1, choice.uniformity, edge_cap)?,
        BaseKind::ProjectivePlane => projective_plane(choice.order_q.expect("plane has an order"))?,
        BaseKind::AugmentedProjectivePlane => {
            let mut h = projective_plane(choice.order_q.expect("plane has an order"))?;
            for _ in 0..choice.augment_steps {
                h = add_one(&h, edge_cap)?;
            }
            h
        }
    };
    if h.n() as u64 != choice.predicted_vertices || BigUint::from(h.edge_count()) != choice.predicted_edges {
        return Err(Error::Internal(format!(
            "base {:?} realized {} vertices, {} edges",
            choice,
            h.n(),
            h.edge_count()
        )));
    }
    Ok(h)
}

/// Cheapest base for uniformity `r`: fewest edges, then fewest vertices, then
/// kind order (plane, augmented plane, complete).
pub fn base_critical(r: usize, edge_cap: u64) -> Result<(Hypergraph, BaseChoice)> {
    if r < 2 {
        return Err(Error::OutOfRange(format!("base_critical needs r >= 2, got {r}")));
    }
    let mut candidates = base_candidates(r);
    candidates.sort_by(|a, b| base_order(a).cmp(&base_order(b)));
    let cap = BigUint::from(edge_cap);
    match candidates.iter().find(|c| c.predicted_edges <= cap) {
        Some(choice) => Ok((materialize(choice, edge_cap)?, choice.clone())),
        None => Err(Error::CapExceeded {
            what: "cheapest base hypergraph edges",
            required: candidates[0].predicted_edges.clone(),
            cap: edge_cap,
        }),
    }
}

pub(crate) fn base_order(c: &BaseChoice) -> (&BigUint, u64, BaseKind) {
    (&c.predicted_edges, c.predicted_vertices, c.kind)
}

/// Structural certificate that PG(2, q) has cover number exactly q+1: lines
/// pairwise meet in one point (so a line is a cover), and every point lies on
/// q+1 lines, so q points reach at most q(q+1) < q^2+q+1 lines.
pub fn plane_cover_number_by_counting(h: &Hypergraph) -> Option<usize> {
    let r = h.uniformity()?;
    let q = r.checked_sub(1)?;
    let m = h.edge_count();
    if m != q * q + q + 1 || h.n() != m {
        return None;
    }
    if h.degrees().iter().any(|&d| d != r) {
        return None;
    }
    let meet_once = h
        .edges()
        .iter()
        .enumerate()
        .all(|(i, a)| h.edges()[i + 1..].iter().all(|b| a.iter().filter(|v| b.contains(v)).count() == 1));
    (meet_once && q * r < m).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{cover_number, DEFAULT_NODE_BUDGET};

    #[test]
    fn complete_examples() {
        assert_eq!(complete_uniform(3, 2, DEFAULT_EDGE_CAP).unwrap().edge_count(), 3);
        assert_eq!(complete_uniform(5, 3, DEFAULT_EDGE_CAP).unwrap().edge_count(), 10);
        let k74 = complete_uniform(7, 4, DEFAULT_EDGE_CAP).unwrap();
        assert_eq!(k74.edge_count(), 35);
        assert_eq!(cover_number(&k74).unwrap().tau, 4);
        assert!(matches!(complete_uniform(30, 15, DEFAULT_EDGE_CAP), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn complete_critical_examples() {
        let c2 = complete_critical(2, DEFAULT_EDGE_CAP).unwrap();
        assert_eq!((c2.n(), c2.edge_count()), (4, 3));
        let c3 = complete_critical(3, DEFAULT_EDGE_CAP).unwrap();
        assert_eq!((c3.n(), c3.edge_count()), (6, 10));
        assert_eq!(cover_number(&c3).unwrap().tau, 3);
        let c4 = complete_critical(4, DEFAULT_EDGE_CAP).unwrap();
        assert_eq!((c4.n(), c4.edge_count()), (8, 35));
        assert_eq!(cover_number(&c4).unwrap().tau, 4);
        for r in 2..=5 {
            let h = complete_critical(r, DEFAULT_EDGE_CAP).unwrap();
            assert!(crate::cover::is_critical(&h, DEFAULT_NODE_BUDGET).unwrap().critical);
            assert!(h.edge_count() < 4usize.pow(r as u32));
        }
    }

    #[test]
    fn planes() {
        assert_eq!(projective_plane(1).unwrap(), complete_uniform(3, 2, 10).unwrap());
        let fano = projective_plane(2).unwrap();
        assert_eq!((fano.n(), fano.edge_count(), fano.r()), (7, 7, Some(3)));
        assert_eq!(cover_number(&fano).unwrap().tau, 3);
        let pg3 = projective_plane(3).unwrap();
        assert_eq!((pg3.n(), pg3.edge_count(), pg3.r()), (13, 13, Some(4)));
        assert_eq!(cover_number(&pg3).unwrap().tau, 4);
        assert!(matches!(projective_plane(4), Err(Error::UnsupportedOrder { q: 4 })));
        assert!(matches!(projective_plane(0), Err(Error::UnsupportedOrder { q: 0 })));
        let pg5 = projective_plane(5).unwrap();
        assert_eq!(plane_cover_number_by_counting(&pg5), Some(6));
        assert_eq!(plane_cover_number_by_counting(&complete_uniform(5, 3, 10).unwrap()), None);
    }

    #[test]
    fn base_selection() {
        let (h, c) = base_critical(3, DEFAULT_EDGE_CAP).unwrap();
        assert_eq!((c.kind, h.edge_count()), (BaseKind::ProjectivePlane, 7));
        let (h, c) = base_critical(2, DEFAULT_EDGE_CAP).unwrap();
        assert_eq!((c.kind, c.order_q, h.edge_count()), (BaseKind::ProjectivePlane, Some(1), 3));
        let (h, c) = base_critical(4, DEFAULT_EDGE_CAP).unwrap();
        assert_eq!((c.kind, c.order_q, h.edge_count()), (BaseKind::ProjectivePlane, Some(3), 13));
        let costs: Vec<_> = base_candidates(4).into_iter().map(|c| c.predicted_edges).collect();
        assert_eq!(costs, vec![13u32.into(), 29u32.into(), 35u32.into()]);
        let (_, c5) = base_critical(5, DEFAULT_EDGE_CAP).unwrap();
        assert_eq!((c5.kind, c5.order_q, c5.augment_steps), (BaseKind::AugmentedProjectivePlane, Some(3), 1));
        assert_eq!(c5.predicted_edges, BigUint::from(66u32));
        assert!(matches!(base_critical(4, 5), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn bases_are_critical_and_sized_as_predicted() {
        for r in 2..=8 {
            let (h, c) = base_critical(r, DEFAULT_EDGE_CAP).unwrap();
            assert_eq!(BigUint::from(h.edge_count()), c.predicted_edges);
            assert_eq!(h.n() as u64, c.predicted_vertices);
            assert_eq!(h.uniformity(), Some(r));
            assert!(h.is_intersecting());
            if r <= 6 {
                assert_eq!(cover_number(&h).unwrap().tau, r, "r = {r}");
            }
        }
    }
}
