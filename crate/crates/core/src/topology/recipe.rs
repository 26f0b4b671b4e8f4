use alloc::sync::Arc;
use alloc::vec::Vec;

use super::DEFAULT_MAX_DIM;
use crate::error::{HlError, Result};
use crate::rng::SplitMix64;

/// Labels are `u32`, so no recipe may exceed this dimension.
pub const MAX_LABEL_DIM: u32 = 31;

/// A perfect matching between the two halves of a node.
///
/// `map[i]` is the local index, inside the right half, of the partner of
/// local vertex `i` of the left half.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatchingPerm {
    map: Vec<u32>,
}

impl MatchingPerm {
    /// Validates that `map` is a permutation of `0..map.len()`.
    pub fn new(map: Vec<u32>) -> Result<Self> {
        let len = map.len();
        let mut seen = alloc::vec![false; len];
        for (index, &image) in map.iter().enumerate() {
            let slot = seen
                .get_mut(image as usize)
                .ok_or(HlError::ImageOutOfRange { index, image, len })?;
            if *slot {
                return Err(HlError::DuplicateImage { index, image });
            }
            *slot = true;
        }
        Ok(MatchingPerm { map })
    }

    pub fn identity(len: usize) -> Self {
        MatchingPerm { map: (0..len as u32).collect() }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.map
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.map
    }

    /// Right-half partner of left-half local index `i`.
    pub fn image(&self, i: usize) -> u32 {
        self.map[i]
    }
}

/// Which child of a node a path step descends into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    Left,
    Right,
}

/// Recursive construction of an HL-network.
///
/// Subrecipes are reference counted, so recipes that reuse the same half
/// (like [`hypercube`]) stay small no matter the dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Recipe {
    /// The single-vertex network of dimension 0.
    Leaf,
    Node(Arc<Node>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Node {
    dim: u32,
    left: Recipe,
    right: Recipe,
    matching: MatchingPerm,
}

impl Node {
    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn left(&self) -> &Recipe {
        &self.left
    }

    pub fn right(&self) -> &Recipe {
        &self.right
    }

    pub fn matching(&self) -> &MatchingPerm {
        &self.matching
    }
}

impl Recipe {
    pub fn dim(&self) -> u32 {
        match self {
            Recipe::Leaf => 0,
            Recipe::Node(node) => node.dim,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Recipe::Leaf)
    }

    pub fn as_node(&self) -> Option<&Node> {
        match self {
            Recipe::Leaf => None,
            Recipe::Node(node) => Some(node),
        }
    }

    /// Borrowing counterpart of [`split`].
    pub fn parts(&self) -> Result<(&Recipe, &Recipe, &MatchingPerm)> {
        let node = self.as_node().ok_or(HlError::SplitLeaf)?;
        Ok((&node.left, &node.right, &node.matching))
    }

    /// Follows `path` from the root.
    pub fn subrecipe(&self, path: &[Branch]) -> Result<&Recipe> {
        let mut cur = self;
        for step in path {
            let (left, right, _) = cur.parts()?;
            cur = match step {
                Branch::Left => left,
                Branch::Right => right,
            };
        }
        Ok(cur)
    }

    /// Number of vertices of the materialized network.
    pub fn vertex_count(&self) -> u64 {
        1u64 << self.dim()
    }
}

/// Joins two equal-dimension recipes with a perfect matching.
pub fn compose(left: Recipe, right: Recipe, matching: MatchingPerm) -> Result<Recipe> {
    let (ld, rd) = (left.dim(), right.dim());
    if ld != rd {
        return Err(HlError::DimensionMismatch { left: ld, right: rd });
    }
    if ld >= MAX_LABEL_DIM {
        return Err(HlError::DimensionTooLarge { dim: ld + 1, max: MAX_LABEL_DIM });
    }
    let expected = 1usize << ld;
    if matching.len() != expected {
        return Err(HlError::MatchingLength { expected, found: matching.len() });
    }
    Ok(Recipe::Node(Arc::new(Node { dim: ld + 1, left, right, matching })))
}

/// Inverse of [`compose`].
pub fn split(r: &Recipe) -> Result<(Recipe, Recipe, MatchingPerm)> {
    let (left, right, matching) = r.parts()?;
    Ok((left.clone(), right.clone(), matching.clone()))
}

/// The `n`-cube: identity matchings at every level, one shared half per level.
pub fn hypercube(n: u32) -> Result<Recipe> {
    hypercube_with_max_dim(n, DEFAULT_MAX_DIM)
}

pub fn hypercube_with_max_dim(n: u32, max_dim: u32) -> Result<Recipe> {
    let max = max_dim.min(MAX_LABEL_DIM);
    if n > max {
        return Err(HlError::DimensionTooLarge { dim: n, max });
    }
    let mut r = Recipe::Leaf;
    for d in 0..n {
        r = compose(r.clone(), r, MatchingPerm::identity(1 << d))?;
    }
    Ok(r)
}

/// A member of `HL_n` with every matching drawn uniformly at random.
///
/// Each node shuffles with its own [`SplitMix64::for_node`] substream, so the
/// result is a pure function of `(n, seed)`.
pub fn random_hl(n: u32, seed: u64) -> Result<Recipe> {
    random_hl_with_max_dim(n, seed, DEFAULT_MAX_DIM)
}

pub fn random_hl_with_max_dim(n: u32, seed: u64, max_dim: u32) -> Result<Recipe> {
    let max = max_dim.min(MAX_LABEL_DIM);
    if n > max {
        return Err(HlError::DimensionTooLarge { dim: n, max });
    }
    random_node(n, seed, 1)
}

fn random_node(dim: u32, seed: u64, position: u64) -> Result<Recipe> {
    if dim == 0 {
        return Ok(Recipe::Leaf);
    }
    let left = random_node(dim - 1, seed, 2 * position)?;
    let right = random_node(dim - 1, seed, 2 * position + 1)?;
    let mut map: Vec<u32> = (0..1u32 << (dim - 1)).collect();
    SplitMix64::for_node(seed, position).shuffle(&mut map);
    compose(left, right, MatchingPerm { map })
}

/// The 3-dimensional HL-network that is not the 3-cube: two 4-cycles joined
/// by the matching `[0, 1, 3, 2]`.
pub fn g84() -> Recipe {
    let c4 = hypercube(2).expect("dimension 2 is within bounds");
    compose(c4.clone(), c4, MatchingPerm { map: alloc::vec![0, 1, 3, 2] })
        .expect("halves have equal dimension and a length-4 matching")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn compose_two_leaves_gives_k2() {
        let r = compose(Recipe::Leaf, Recipe::Leaf, MatchingPerm::new(vec![0]).unwrap()).unwrap();
        assert_eq!(r.dim(), 1);
    }

    #[test]
    fn compose_rejects_short_matching() {
        let c4 = hypercube(2).unwrap();
        let err = compose(c4.clone(), c4, MatchingPerm::new(vec![0, 1, 2]).unwrap()).unwrap_err();
        assert_eq!(err, HlError::MatchingLength { expected: 4, found: 3 });
    }

    #[test]
    fn compose_rejects_unequal_halves() {
        let err = compose(hypercube(2).unwrap(), hypercube(1).unwrap(), MatchingPerm::identity(4))
            .unwrap_err();
        assert_eq!(err, HlError::DimensionMismatch { left: 2, right: 1 });
    }

    #[test]
    fn matching_must_be_a_permutation() {
        assert_eq!(
            MatchingPerm::new(vec![0, 0, 1, 2]).unwrap_err(),
            HlError::DuplicateImage { index: 1, image: 0 }
        );
        assert_eq!(
            MatchingPerm::new(vec![0, 4, 1, 2]).unwrap_err(),
            HlError::ImageOutOfRange { index: 1, image: 4, len: 4 }
        );
    }

    #[test]
    fn split_inverts_compose() {
        let l = random_hl(3, 1).unwrap();
        let r = random_hl(3, 2).unwrap();
        let m = MatchingPerm::new(vec![7, 6, 5, 4, 3, 2, 1, 0]).unwrap();
        let node = compose(l.clone(), r.clone(), m.clone()).unwrap();
        assert_eq!(split(&node).unwrap(), (l, r, m));
    }

    #[test]
    fn split_hypercube_gives_identity() {
        let (l, r, m) = split(&hypercube(3).unwrap()).unwrap();
        assert_eq!(l, hypercube(2).unwrap());
        assert_eq!(r, hypercube(2).unwrap());
        assert_eq!(m, MatchingPerm::identity(4));
    }

    #[test]
    fn split_leaf_fails() {
        assert_eq!(split(&Recipe::Leaf).unwrap_err(), HlError::SplitLeaf);
        assert_eq!(hypercube(0).unwrap(), Recipe::Leaf);
    }

    #[test]
    fn random_hl_is_deterministic() {
        assert_eq!(random_hl(6, 99).unwrap(), random_hl(6, 99).unwrap());
        assert_ne!(random_hl(6, 99).unwrap(), random_hl(6, 100).unwrap());
    }

    #[test]
    fn dimension_guards() {
        assert!(matches!(random_hl(21, 0), Err(HlError::DimensionTooLarge { dim: 21, max: 20 })));
        assert!(matches!(hypercube(21), Err(HlError::DimensionTooLarge { dim: 21, max: 20 })));
        assert_eq!(hypercube_with_max_dim(22, 22).unwrap().dim(), 22);
        assert!(matches!(hypercube_with_max_dim(32, 40), Err(HlError::DimensionTooLarge { max: 31, .. })));
    }

    #[test]
    fn subrecipe_follows_path() {
        let r = g84();
        let sub = r.subrecipe(&[Branch::Right, Branch::Left]).unwrap();
        assert_eq!(sub.dim(), 1);
        assert!(r.subrecipe(&[Branch::Left; 4]).is_err());
    }
}
