//! Hypercube-like (HL) interconnection networks.
//!
//! An HL-network of dimension `n` is either a single vertex (`n = 0`) or two
//! HL-networks of dimension `n - 1` joined by a perfect matching. This crate
//! builds such networks from recursive [`Recipe`]s, evaluates the closed-form
//! extremal edge function [`e_g`](extremal::e_g) and the `(g+1)`-component
//! edge connectivity [`c_lambda`](extremal::c_lambda), constructs the optimal
//! induced subgraphs and minimum component cuts, and ships brute-force
//! [`oracle`]s that validate all of it at small scale.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports,
//! parallel searches and the command-line harness live in the `hlnet` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod extremal;
pub mod ms;
pub mod oracle;
pub mod rng;
pub mod topology;

pub use error::{HlError, Result};
pub use extremal::{c_lambda, decompose, delta_e, e_g, CLambda, CLambdaMode, Decomposition};
pub use ms::{algorithm_ms, build_component_cut, verify_cut, CutReport, MsBlock, MsTrace};
pub use topology::{
    compose, g84, hypercube, materialize, random_hl, split, Branch, Edge, EdgeSet, Graph,
    MatchingPerm, Recipe, VertexId, VertexSet, DEFAULT_MAX_DIM,
};
