use alloc::string::String;
use core::fmt;

pub type Result<T, E = HlError> = core::result::Result<T, E>;

/// Everything that can go wrong in the core crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HlError {
    /// The two halves handed to `compose` have different dimensions.
    DimensionMismatch { left: u32, right: u32 },
    /// A matching does not have `2^d` entries for `d`-dimensional halves.
    MatchingLength { expected: usize, found: usize },
    /// A matching maps two left vertices to the same right vertex.
    DuplicateImage { index: usize, image: u32 },
    /// A matching entry points outside the right half.
    ImageOutOfRange { index: usize, image: u32, len: usize },
    /// A dimension exceeds the configured resource guard.
    DimensionTooLarge { dim: u32, max: u32 },
    SplitLeaf,
    /// A vertex label does not belong to the graph.
    ForeignVertex { vertex: u32, vertex_count: u64 },
    /// An edge set contains a pair that is not an edge of the graph.
    NotAnEdge { u: u32, v: u32 },
    /// A graph handed to a constructor violates a structural invariant.
    InvalidGraph(String),
    /// A precondition on a numeric argument does not hold.
    Domain(String),
    /// A graph is too large for an exhaustive routine.
    GraphTooLarge { vertices: usize, max: usize },
    /// 64-bit arithmetic overflowed.
    Overflow,
}

impl fmt::Display for HlError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HlError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: left half has dim {left}, right half has dim {right}")
            }
            HlError::MatchingLength { expected, found } => {
                write!(f, "matching has length {found}, expected {expected}")
            }
            HlError::DuplicateImage { index, image } => {
                write!(f, "matching is not a permutation: image {image} repeated at index {index}")
            }
            HlError::ImageOutOfRange { index, image, len } => {
                write!(f, "matching entry {image} at index {index} is outside 0..{len}")
            }
            HlError::DimensionTooLarge { dim, max } => {
                write!(f, "dimension {dim} exceeds the maximum of {max}")
            }
            HlError::SplitLeaf => f.write_str("cannot split a leaf recipe"),
            HlError::ForeignVertex { vertex, vertex_count } => {
                write!(f, "vertex {vertex} is not in a graph with {vertex_count} vertices")
            }
            HlError::NotAnEdge { u, v } => write!(f, "({u}, {v}) is not an edge of the graph"),
            HlError::InvalidGraph(msg) => write!(f, "invalid graph: {msg}"),
            HlError::Domain(msg) => write!(f, "domain violation: {msg}"),
            HlError::GraphTooLarge { vertices, max } => {
                write!(f, "graph has {vertices} vertices, limit is {max}")
            }
            HlError::Overflow => f.write_str("arithmetic overflow"),
        }
    }
}

impl core::error::Error for HlError {}

pub(crate) fn domain(msg: impl Into<String>) -> HlError {
    HlError::Domain(msg.into())
}
