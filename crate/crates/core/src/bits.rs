//! Fixed-width vertex sets.
//!
//! Hot loops (cover search, subset enumeration, the oracle) work on edges as
//! bitsets. Hypergraphs with at most 128 vertices use a plain `u128`; larger
//! ones fall back to [`WideSet`].

use std::fmt::Debug;

/// Maximum vertex count handled by the `u128` fast path.
pub const NARROW_LIMIT: usize = 128;

pub trait VertexBits: Clone + Eq + Debug + Send + Sync {
    fn empty(n: usize) -> Self;

    fn from_vertices(n: usize, vertices: &[u32]) -> Self {
        let mut s = Self::empty(n);
        for &v in vertices {
            s.insert(v);
        }
        s
    }

    fn insert(&mut self, v: u32);
    fn remove(&mut self, v: u32);
    fn contains(&self, v: u32) -> bool;
    fn intersects(&self, other: &Self) -> bool;
    fn is_subset_of(&self, other: &Self) -> bool;
    fn count(&self) -> usize;
    fn union_with(&mut self, other: &Self);

    /// Members in ascending order.
    fn ones(&self) -> Vec<u32>;
}

impl VertexBits for u128 {
    #[inline]
    fn empty(n: usize) -> Self {
        debug_assert!(n <= NARROW_LIMIT);
        0
    }

    #[inline]
    fn insert(&mut self, v: u32) {
        *self |= 1u128 << v;
    }

    #[inline]
    fn remove(&mut self, v: u32) {
        *self &= !(1u128 << v);
    }

    #[inline]
    fn contains(&self, v: u32) -> bool {
        (*self >> v) & 1 == 1
    }

    #[inline]
    fn intersects(&self, other: &Self) -> bool {
        self & other != 0
    }

    #[inline]
    fn is_subset_of(&self, other: &Self) -> bool {
        self & !other == 0
    }

    #[inline]
    fn count(&self) -> usize {
        self.count_ones() as usize
    }

    #[inline]
    fn union_with(&mut self, other: &Self) {
        *self |= other;
    }

    fn ones(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.count_ones() as usize);
        let mut rest = *self;
        while rest != 0 {
            out.push(rest.trailing_zeros());
            rest &= rest - 1;
        }
        out
    }
}

/// Word-vector bitset for hypergraphs beyond [`NARROW_LIMIT`] vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WideSet {
    words: Vec<u64>,
}

impl VertexBits for WideSet {
    fn empty(n: usize) -> Self {
        WideSet { words: vec![0; n.div_ceil(64).max(1)] }
    }

    #[inline]
    fn insert(&mut self, v: u32) {
        self.words[(v / 64) as usize] |= 1u64 << (v % 64);
    }

    #[inline]
    fn remove(&mut self, v: u32) {
        self.words[(v / 64) as usize] &= !(1u64 << (v % 64));
    }

    #[inline]
    fn contains(&self, v: u32) -> bool {
        (self.words[(v / 64) as usize] >> (v % 64)) & 1 == 1
    }

    fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    fn is_subset_of(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn union_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    fn ones(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (i, &w) in self.words.iter().enumerate() {
            let mut rest = w;
            while rest != 0 {
                out.push(i as u32 * 64 + rest.trailing_zeros());
                rest &= rest - 1;
            }
        }
        out
    }
}

pub fn masks<B: VertexBits>(n: usize, edges: &[Vec<u32>]) -> Vec<B> {
    edges.iter().map(|e| B::from_vertices(n, e)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip<B: VertexBits>(n: usize, vs: &[u32]) {
        let s = B::from_vertices(n, vs);
        assert_eq!(s.ones(), vs);
        assert_eq!(s.count(), vs.len());
        for &v in vs {
            assert!(s.contains(v));
        }
    }

    #[test]
    fn narrow_and_wide_agree() {
        roundtrip::<u128>(128, &[0, 5, 63, 64, 127]);
        roundtrip::<WideSet>(300, &[0, 5, 63, 64, 127, 128, 299]);
    }

    #[test]
    fn subset_and_intersection() {
        let a = WideSet::from_vertices(200, &[1, 150]);
        let b = WideSet::from_vertices(200, &[1, 2, 150]);
        let c = WideSet::from_vertices(200, &[3, 199]);
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        assert!(a.intersects(&b));
        assert!(!a.intersects(&c));
        let mut d = a.clone();
        d.union_with(&c);
        assert_eq!(d.ones(), vec![1, 3, 150, 199]);
        d.remove(150);
        assert_eq!(d.ones(), vec![1, 3, 199]);
    }
}
