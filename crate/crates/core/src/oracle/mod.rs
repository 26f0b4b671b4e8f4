//! Brute-force ground truth for small networks.
//!
//! Nothing here evaluates the closed-form formulas: the pruning bounds only
//! use degrees and the edges already placed, so the searches stay logically
//! independent of what they are used to validate.
//!
//! Both searches are anytime. When the node or time budget runs out they stop
//! with [`SearchStatus::Incomplete`] and the best witness found so far, which
//! is a valid lower bound (induced edges) or upper bound (cut size).

mod components;
mod cut;
mod induced;
mod iso;

use core::time::Duration;

use alloc::vec::Vec;

pub use components::{components_after, is_bipartite, PartitionWitness};
pub use cut::{
    min_component_edge_cut, min_component_edge_cut_from_prefix, min_component_edge_cut_with_clock,
    rgs_prefixes, CutWitness,
};
pub use induced::{max_induced_edges, max_induced_edges_with_clock};
pub use iso::{isomorphic_small, ISO_MAX_VERTICES};

use crate::error::{domain, HlError, Result};
use crate::topology::{Graph, VertexId};

/// Exhaustive searches work on 64-bit vertex masks.
pub const SEARCH_MAX_VERTICES: usize = 64;

/// Elapsed time since a search started. `no_std` callers provide their own.
pub trait Clock {
    fn elapsed(&self) -> Duration;
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes_expanded: Option<u64>,
    /// Needs a [`Clock`]; see the `*_with_clock` entry points.
    pub time_budget: Option<Duration>,
}

impl SearchLimits {
    pub fn unlimited() -> Self {
        SearchLimits::default()
    }

    pub fn nodes(max: u64) -> Self {
        SearchLimits { max_nodes_expanded: Some(max), time_budget: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchStatus {
    Complete,
    /// Budget exhausted; the value is the best found so far.
    Incomplete,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome<W> {
    pub value: u64,
    pub witness: W,
    pub status: SearchStatus,
    pub nodes_expanded: u64,
}

pub(crate) struct Budget<'a> {
    limits: SearchLimits,
    clock: Option<&'a dyn Clock>,
    pub(crate) nodes: u64,
    pub(crate) exhausted: bool,
}

impl<'a> Budget<'a> {
    pub(crate) fn new(limits: &SearchLimits, clock: Option<&'a dyn Clock>) -> Result<Self> {
        if limits.time_budget.is_some() && clock.is_none() {
            return Err(domain("a time budget needs a clock"));
        }
        Ok(Budget { limits: *limits, clock, nodes: 0, exhausted: false })
    }

    /// Counts one expanded node; false once the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.limits.max_nodes_expanded.is_some_and(|m| self.nodes > m) {
            self.exhausted = true;
        } else if self.nodes.is_multiple_of(1024) {
            if let (Some(budget), Some(clock)) = (self.limits.time_budget, self.clock) {
                self.exhausted = clock.elapsed() >= budget;
            }
        }
        !self.exhausted
    }

    pub(crate) fn status(&self) -> SearchStatus {
        if self.exhausted {
            SearchStatus::Incomplete
        } else {
            SearchStatus::Complete
        }
    }
}

/// Neighborhoods as bit masks.
pub(crate) fn adjacency_masks(graph: &Graph) -> Result<Vec<u64>> {
    let count = graph.vertex_count();
    if count > SEARCH_MAX_VERTICES {
        return Err(HlError::GraphTooLarge { vertices: count, max: SEARCH_MAX_VERTICES });
    }
    Ok(graph
        .vertices()
        .map(|v| graph.neighbors(v).fold(0u64, |m, w: VertexId| m | 1 << w.0))
        .collect())
}
