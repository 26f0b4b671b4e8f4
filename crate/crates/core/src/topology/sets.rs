use alloc::collections::btree_set::{self, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

/// A vertex label, read as an `n`-bit string for a graph of dimension `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Whether the vertex lies in the right half of a `dim`-dimensional network.
    pub fn in_right_half(self, dim: u32) -> bool {
        dim > 0 && (self.0 >> (dim - 1)) & 1 == 1
    }

    /// Label of the vertex inside its `(dim - 1)`-dimensional half.
    pub fn strip_top(self, dim: u32) -> VertexId {
        if dim == 0 {
            self
        } else {
            VertexId(self.0 & ((1u32 << (dim - 1)) - 1))
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

/// An unordered vertex pair, stored with `u <= v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    pub fn new(a: impl Into<VertexId>, b: impl Into<VertexId>) -> Self {
        let (a, b) = (a.into(), b.into());
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(self) -> VertexId {
        self.u
    }

    pub fn v(self) -> VertexId {
        self.v
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }
}

/// Set of vertices backed by a growable bit set.
///
/// Trailing zero words are never stored, so equality is structural.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet { words: Vec::new() }
    }

    /// All labels in `start..end`.
    pub fn from_range(start: u32, end: u32) -> Self {
        let mut set = VertexSet::new();
        for v in start..end {
            set.insert(VertexId(v));
        }
        set
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        let (w, b) = (v.index() / 64, v.index() % 64);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        let (w, b) = (v.index() / 64, v.index() % 64);
        if w >= self.words.len() {
            return false;
        }
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
        present
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        let (w, b) = (v.index() / 64, v.index() % 64);
        w < self.words.len() && self.words[w] & (1 << b) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Largest member, if any.
    pub fn max(&self) -> Option<VertexId> {
        let last = *self.words.last()?;
        let w = self.words.len() - 1;
        Some(VertexId((w * 64 + 63 - last.leading_zeros() as usize) as u32))
    }

    pub fn min(&self) -> Option<VertexId> {
        self.iter().next()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros();
                rest &= rest - 1;
                Some(VertexId(w as u32 * 64 + b))
            })
        })
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut set = VertexSet::new();
        set.extend(iter);
        set
    }
}

impl Extend<VertexId> for VertexSet {
    fn extend<I: IntoIterator<Item = VertexId>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

/// Set of unordered vertex pairs, iterated in `(u, v)` lexicographic order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    edges: BTreeSet<Edge>,
}

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet::default()
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        self.edges.insert(e)
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn union_with(&mut self, other: &EdgeSet) {
        self.edges.extend(other.edges.iter().copied());
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet { edges: iter.into_iter().collect() }
    }
}

impl Extend<Edge> for EdgeSet {
    fn extend<I: IntoIterator<Item = Edge>>(&mut self, iter: I) {
        self.edges.extend(iter);
    }
}

impl IntoIterator for EdgeSet {
    type Item = Edge;
    type IntoIter = btree_set::IntoIter<Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.into_iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn vertex_bits() {
        let v = VertexId(0b101);
        assert!(v.in_right_half(3));
        assert_eq!(v.strip_top(3), VertexId(0b01));
        assert!(!VertexId(0b011).in_right_half(3));
        assert_eq!(VertexId(0).strip_top(0), VertexId(0));
    }

    #[test]
    fn edge_is_unordered() {
        assert_eq!(Edge::new(5u32, 2u32), Edge::new(2u32, 5u32));
        assert_eq!(Edge::new(5u32, 2u32).u(), VertexId(2));
    }

    #[test]
    fn remove_keeps_equality_structural() {
        let mut a = VertexSet::new();
        a.insert(VertexId(3));
        a.insert(VertexId(200));
        a.remove(VertexId(200));
        let b: VertexSet = [VertexId(3)].into_iter().collect();
        assert_eq!(a, b);
        assert_eq!(a.max(), Some(VertexId(3)));
    }

    proptest! {
        #[test]
        fn set_matches_sorted_dedup(xs in proptest::collection::vec(0u32..500, 0..60)) {
            let set: VertexSet = xs.iter().map(|&x| VertexId(x)).collect();
            let mut expected = xs.clone();
            expected.sort_unstable();
            expected.dedup();
            let got: Vec<u32> = set.iter().map(|v| v.0).collect();
            prop_assert_eq!(&got, &expected);
            prop_assert_eq!(set.len(), expected.len());
            prop_assert_eq!(set.max().map(|v| v.0), expected.last().copied());
        }
    }
}
