//! Vertex sets backed by machine words.
//!
//! The engines are generic over [`VertexSet`] so the exhaustive search can run
//! on a single `u128` per adjacency row while certificate checks on large
//! witnesses use the growable [`BitSet`].

use std::fmt;

/// A set of vertex ids drawn from `[0, capacity)`.
pub trait VertexSet: Clone + Eq + fmt::Debug {
    /// Empty set able to hold ids below `capacity`.
    ///
    /// Panics if the representation cannot hold `capacity` ids.
    fn empty(capacity: usize) -> Self;
    fn insert(&mut self, v: usize);
    fn remove(&mut self, v: usize);
    fn contains(&self, v: usize) -> bool;
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool;
    /// Smallest member.
    fn first(&self) -> Option<usize>;
    fn intersection(&self, other: &Self) -> Self;
    fn difference(&self, other: &Self) -> Self;
    fn intersects(&self, other: &Self) -> bool;
    fn iter(&self) -> impl Iterator<Item = usize> + '_;
}

/// Largest vertex count a `u128` set can hold.
pub const WORD_SET_CAPACITY: usize = 128;

impl VertexSet for u128 {
    #[inline]
    fn empty(capacity: usize) -> Self {
        assert!(
            capacity <= WORD_SET_CAPACITY,
            "u128 vertex set cannot hold {capacity} vertices"
        );
        0
    }

    #[inline]
    fn insert(&mut self, v: usize) {
        *self |= 1u128 << v;
    }

    #[inline]
    fn remove(&mut self, v: usize) {
        *self &= !(1u128 << v);
    }

    #[inline]
    fn contains(&self, v: usize) -> bool {
        v < WORD_SET_CAPACITY && (*self >> v) & 1 == 1
    }

    #[inline]
    fn len(&self) -> usize {
        self.count_ones() as usize
    }

    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }

    #[inline]
    fn first(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }

    #[inline]
    fn intersection(&self, other: &Self) -> Self {
        self & other
    }

    #[inline]
    fn difference(&self, other: &Self) -> Self {
        self & !other
    }

    #[inline]
    fn intersects(&self, other: &Self) -> bool {
        self & other != 0
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = *self;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        })
    }
}

/// Fixed-capacity bit set over `u64` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn word_count(capacity: usize) -> usize {
        capacity.div_ceil(64)
    }

    pub fn capacity(&self) -> usize {
        self.words.len() * 64
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl VertexSet for BitSet {
    fn empty(capacity: usize) -> Self {
        BitSet {
            words: vec![0; Self::word_count(capacity)],
        }
    }

    #[inline]
    fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| (w >> (v % 64)) & 1 == 1)
    }

    fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn intersection(&self, other: &Self) -> Self {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn difference(&self, other: &Self) -> Self {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + bit)
            })
        })
    }
}

/// Builds a set holding exactly `members`.
pub fn set_of<S: VertexSet>(capacity: usize, members: impl IntoIterator<Item = usize>) -> S {
    let mut s = S::empty(capacity);
    for v in members {
        s.insert(v);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn members<S: VertexSet>(s: &S) -> Vec<usize> {
        s.iter().collect()
    }

    #[test]
    fn word_set_basics() {
        let mut s = u128::empty(128);
        s.insert(0);
        s.insert(127);
        s.insert(64);
        assert_eq!(members(&s), vec![0, 64, 127]);
        assert_eq!(s.first(), Some(0));
        s.remove(0);
        assert_eq!(s.first(), Some(64));
        assert_eq!(VertexSet::len(&s), 2);
        assert!(!s.contains(200));
    }

    #[test]
    #[should_panic]
    fn word_set_rejects_large_capacity() {
        let _ = u128::empty(129);
    }

    #[test]
    fn bitset_spans_words() {
        let s: BitSet = set_of(200, [3, 63, 64, 130, 199]);
        assert_eq!(members(&s), vec![3, 63, 64, 130, 199]);
        assert_eq!(s.len(), 5);
        assert_eq!(s.first(), Some(3));
        assert!(BitSet::empty(200).is_empty());
    }

    proptest! {
        #[test]
        fn representations_agree(a in proptest::collection::btree_set(0usize..128, 0..40),
                                 b in proptest::collection::btree_set(0usize..128, 0..40)) {
            let wa: u128 = set_of(128, a.iter().copied());
            let wb: u128 = set_of(128, b.iter().copied());
            let ba: BitSet = set_of(128, a.iter().copied());
            let bb: BitSet = set_of(128, b.iter().copied());
            prop_assert_eq!(members(&wa.intersection(&wb)), members(&ba.intersection(&bb)));
            prop_assert_eq!(members(&wa.difference(&wb)), members(&ba.difference(&bb)));
            prop_assert_eq!(wa.intersects(&wb), ba.intersects(&bb));
            prop_assert_eq!(wa.first(), ba.first());
            prop_assert_eq!(VertexSet::len(&wa), a.len());
        }
    }
}
