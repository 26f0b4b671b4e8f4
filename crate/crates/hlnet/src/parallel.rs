//! Oracle searches on the rayon pool, with a wall-clock budget.

use std::time::{Duration, Instant};

use hlnet_core::oracle::{
    self, rgs_prefixes, Clock, CutWitness, SearchLimits, SearchOutcome, SearchStatus,
};
use hlnet_core::{Graph, VertexSet};
use rayon::prelude::*;

use crate::error::Result;

/// Time since construction.
#[derive(Debug, Clone, Copy)]
pub struct StdClock(Instant);

impl StdClock {
    pub fn start() -> Self {
        StdClock(Instant::now())
    }
}

impl Clock for StdClock {
    fn elapsed(&self) -> Duration {
        self.0.elapsed()
    }
}

/// Prefix length used to split the partition space across workers.
const SPLIT_DEPTH: usize = 6;

/// [`oracle::min_component_edge_cut`] split over restricted-growth-string
/// prefixes and run in parallel.
///
/// Each prefix subtree is searched independently and the first optimum in
/// prefix order wins, so value and witness match the sequential search for
/// any thread count. A node budget applies to each subtree separately; the
/// time budget is shared.
pub fn min_component_edge_cut(graph: &Graph, parts: usize, limits: &SearchLimits) -> Result<SearchOutcome<CutWitness>> {
    let clock = StdClock::start();
    let depth = SPLIT_DEPTH.min(graph.vertex_count());
    let prefixes = rgs_prefixes(depth, parts.max(1), graph.vertex_count());
    if parts == 0 || parts > graph.vertex_count() || prefixes.is_empty() {
        return Ok(oracle::min_component_edge_cut_with_clock(graph, parts, limits, &clock)?);
    }
    let outcomes = prefixes
        .par_iter()
        .map(|p| oracle::min_component_edge_cut_from_prefix(graph, parts, p, limits, Some(&clock)))
        .collect::<Result<Vec<_>, _>>()?;
    let nodes = outcomes.iter().map(|o| o.nodes_expanded).sum();
    let incomplete = outcomes.iter().any(|o| o.status == SearchStatus::Incomplete);
    let mut best = outcomes
        .into_iter()
        .reduce(|a, b| if b.value < a.value { b } else { a })
        .expect("at least one prefix");
    best.nodes_expanded = nodes;
    if incomplete {
        best.status = SearchStatus::Incomplete;
    }
    Ok(best)
}

/// [`oracle::max_induced_edges`] with the time budget enforced.
pub fn max_induced_edges(graph: &Graph, k: usize, limits: &SearchLimits) -> Result<SearchOutcome<VertexSet>> {
    let clock = StdClock::start();
    Ok(oracle::max_induced_edges_with_clock(graph, k, limits, &clock)?)
}
