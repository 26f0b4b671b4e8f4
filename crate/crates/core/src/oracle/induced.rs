use alloc::format;
use alloc::vec::Vec;

use super::{adjacency_masks, Budget, Clock, SearchLimits, SearchOutcome};
use crate::error::{domain, Result};
use crate::topology::{Graph, VertexId, VertexSet};

/// Exact maximum of `|E(G[X])|` over all `k`-subsets `X`.
///
/// Subsets are enumerated as increasing vertex sequences. Adding the `j`-th
/// vertex gains at most `min(j, n)` edges, which bounds every completion; a
/// branch is cut once that bound cannot beat the incumbent. Among optimal
/// subsets the lexicographically smallest is returned.
pub fn max_induced_edges(graph: &Graph, k: usize, limits: &SearchLimits) -> Result<SearchOutcome<VertexSet>> {
    run(graph, k, Budget::new(limits, None)?)
}

pub fn max_induced_edges_with_clock(
    graph: &Graph,
    k: usize,
    limits: &SearchLimits,
    clock: &dyn Clock,
) -> Result<SearchOutcome<VertexSet>> {
    run(graph, k, Budget::new(limits, Some(clock))?)
}

struct Search<'a> {
    adj: Vec<u64>,
    k: usize,
    /// `gain_bound[j]` = sum of `min(i, n)` for `i` in `j..k`
    gain_bound: Vec<u64>,
    best: u64,
    witness: u64,
    budget: Budget<'a>,
}

fn run(graph: &Graph, k: usize, budget: Budget<'_>) -> Result<SearchOutcome<VertexSet>> {
    let count = graph.vertex_count();
    if k == 0 || k > count {
        return Err(domain(format!("max_induced_edges requires 1 <= k <= {count}, got k = {k}")));
    }
    let adj = adjacency_masks(graph)?;
    let n = graph.degree() as u64;
    let mut gain_bound = alloc::vec![0u64; k + 1];
    for j in (0..k).rev() {
        gain_bound[j] = gain_bound[j + 1] + (j as u64).min(n);
    }
    // the lexicographically first subset seeds the incumbent
    let first = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let best = induced(&adj, first);
    let mut search = Search { adj, k, gain_bound, best, witness: first, budget };
    search.dfs(0, 0, 0, 0);

    let witness = (0..count as u32).filter(|&v| search.witness >> v & 1 == 1).map(VertexId).collect();
    Ok(SearchOutcome {
        value: search.best,
        witness,
        status: search.budget.status(),
        nodes_expanded: search.budget.nodes,
    })
}

fn induced(adj: &[u64], set: u64) -> u64 {
    let twice: u32 = (0..adj.len()).filter(|&v| set >> v & 1 == 1).map(|v| (adj[v] & set).count_ones()).sum();
    twice as u64 / 2
}

impl Search<'_> {
    fn dfs(&mut self, next: usize, chosen: u64, size: usize, edges: u64) {
        if !self.budget.tick() {
            return;
        }
        if size == self.k {
            if edges > self.best {
                self.best = edges;
                self.witness = chosen;
            }
            return;
        }
        if edges + self.gain_bound[size] <= self.best {
            return;
        }
        let need = self.k - size;
        let count = self.adj.len();
        if count - next < need {
            return;
        }
        for v in next..=count - need {
            let gain = (self.adj[v] & chosen).count_ones() as u64;
            self.dfs(v + 1, chosen | 1 << v, size + 1, edges + gain);
            if self.budget.exhausted {
                return;
            }
        }
    }
}
