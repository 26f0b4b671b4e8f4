//! Recipes, materialized graphs, and the basic induced/boundary edge queries.
//!
//! Vertex labels follow the prefix rule: inside a subrecipe of dimension `d`
//! occupying labels `base..base + 2^d`, the left half gets `base..base + 2^(d-1)`
//! (top bit 0) and the right half the rest. The matching of a node is stored
//! left to right, in local indices of the two halves.

mod graph;
mod recipe;
mod sets;

pub use graph::{boundary_edges, induced_edge_count, materialize, materialize_with_max_dim, Graph};
pub use recipe::{
    compose, g84, hypercube, hypercube_with_max_dim, random_hl, random_hl_with_max_dim, split, Branch, MatchingPerm, Node,
    Recipe, MAX_LABEL_DIM,
};
pub use sets::{Edge, EdgeSet, VertexId, VertexSet};

/// Default resource guard for anything that allocates `2^n` vertices.
pub const DEFAULT_MAX_DIM: u32 = 20;
