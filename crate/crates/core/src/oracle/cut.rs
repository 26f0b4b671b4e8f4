use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{adjacency_masks, Budget, Clock, PartitionWitness, SearchLimits, SearchOutcome};
use crate::error::{domain, Result};
use crate::topology::Graph;

/// A minimum-cut witness: the partition and its restricted growth string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    pub partition: PartitionWitness,
    /// `rgs[v]` is the block of vertex `v`; blocks appear in order 0, 1, 2, ...
    pub rgs: Vec<u8>,
}

/// Exact `parts`-component edge connectivity: the minimum number of cross
/// edges over all partitions of `V` into exactly `parts` nonempty blocks.
///
/// Merging surplus components into blocks never adds cross edges, so this
/// equals the minimum over cuts leaving at least `parts` components.
/// Partitions are enumerated as restricted growth strings; a branch is cut
/// when the cross edges placed so far plus, for every unplaced vertex, its
/// cheapest placement against the placed vertices cannot beat the incumbent.
/// Among optimal partitions the lexicographically smallest string is returned.
pub fn min_component_edge_cut(graph: &Graph, parts: usize, limits: &SearchLimits) -> Result<SearchOutcome<CutWitness>> {
    min_component_edge_cut_from_prefix(graph, parts, &[], limits, None)
}

pub fn min_component_edge_cut_with_clock(
    graph: &Graph,
    parts: usize,
    limits: &SearchLimits,
    clock: &dyn Clock,
) -> Result<SearchOutcome<CutWitness>> {
    min_component_edge_cut_from_prefix(graph, parts, &[], limits, Some(clock))
}

/// Searches only the partitions whose string starts with `prefix`.
///
/// Splitting the space by the prefixes of [`rgs_prefixes`] and keeping the
/// first optimum in prefix order reproduces the sequential result exactly.
pub fn min_component_edge_cut_from_prefix(
    graph: &Graph,
    parts: usize,
    prefix: &[u8],
    limits: &SearchLimits,
    clock: Option<&dyn Clock>,
) -> Result<SearchOutcome<CutWitness>> {
    let count = graph.vertex_count();
    if parts == 0 || parts > count {
        return Err(domain(format!("min_component_edge_cut requires 1 <= parts <= {count}, got {parts}")));
    }
    let adj = adjacency_masks(graph)?;
    let budget = Budget::new(limits, clock)?;
    let used = check_prefix(prefix, parts, count)?;

    let mut rgs = vec![0u8; count];
    rgs[..prefix.len()].copy_from_slice(prefix);
    let mut blocks = vec![0u64; parts];
    for (v, &b) in prefix.iter().enumerate() {
        blocks[b as usize] |= 1 << v;
    }
    let mut cost = 0;
    for v in 0..prefix.len() {
        let earlier = (1u64 << v) - 1;
        cost += (adj[v] & earlier & !blocks[rgs[v] as usize]).count_ones() as u64;
    }

    // incumbent: the first string extending the prefix
    let mut first = rgs.clone();
    let mut open = used;
    for (v, slot) in first.iter_mut().enumerate().skip(prefix.len()) {
        *slot = if count - v > parts - open { 0 } else { open += 1; (open - 1) as u8 };
    }
    let best = cut_cost(&adj, &first);

    let mut search = Search { adj, parts, blocks, rgs, best, witness: first, budget };
    search.dfs(prefix.len(), used, cost);

    let labels: Vec<u32> = search.witness.iter().map(|&b| b as u32).collect();
    Ok(SearchOutcome {
        value: search.best,
        witness: CutWitness { partition: PartitionWitness::from_labels(graph, &labels), rgs: search.witness },
        status: search.budget.status(),
        nodes_expanded: search.budget.nodes,
    })
}

/// All feasible string prefixes of length `len`, in lexicographic order.
pub fn rgs_prefixes(len: usize, parts: usize, vertex_count: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(cur: &mut Vec<u8>, used: usize, len: usize, parts: usize, count: usize, out: &mut Vec<Vec<u8>>) {
        if count - cur.len() < parts.saturating_sub(used) {
            return;
        }
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for b in 0..=used.min(parts - 1) {
            cur.push(b as u8);
            rec(cur, used.max(b + 1), len, parts, count, out);
            cur.pop();
        }
    }
    if parts >= 1 && len <= vertex_count {
        rec(&mut cur, 0, len, parts, vertex_count, &mut out);
    }
    out
}

fn check_prefix(prefix: &[u8], parts: usize, count: usize) -> Result<usize> {
    let mut used = 0usize;
    for (v, &b) in prefix.iter().enumerate() {
        let b = b as usize;
        if b > used || b >= parts {
            return Err(domain(format!("prefix entry {b} at position {v} is not a restricted growth string over {parts} blocks")));
        }
        used = used.max(b + 1);
    }
    if prefix.len() > count || count - prefix.len() < parts - used {
        return Err(domain("prefix cannot be completed to the requested number of blocks"));
    }
    Ok(used)
}

fn cut_cost(adj: &[u64], rgs: &[u8]) -> u64 {
    let mut cost = 0;
    for (v, &m) in adj.iter().enumerate() {
        for w in v + 1..adj.len() {
            if m >> w & 1 == 1 && rgs[v] != rgs[w] {
                cost += 1;
            }
        }
    }
    cost
}

struct Search<'a> {
    adj: Vec<u64>,
    parts: usize,
    blocks: Vec<u64>,
    rgs: Vec<u8>,
    best: u64,
    witness: Vec<u8>,
    budget: Budget<'a>,
}

impl Search<'_> {
    fn dfs(&mut self, v: usize, used: usize, cost: u64) {
        if !self.budget.tick() {
            return;
        }
        let count = self.adj.len();
        if v == count {
            if used == self.parts && cost < self.best {
                self.best = cost;
                self.witness.copy_from_slice(&self.rgs);
            }
            return;
        }
        if count - v < self.parts - used {
            return;
        }
        let placed = if v == 64 { u64::MAX } else { (1u64 << v) - 1 };
        if cost + self.remaining_bound(v, used, placed) >= self.best {
            return;
        }
        let must_open = count - v == self.parts - used;
        if !must_open {
            for b in 0..used {
                let add = (self.adj[v] & placed & !self.blocks[b]).count_ones() as u64;
                self.place(v, b, used, cost + add);
                if self.budget.exhausted {
                    return;
                }
            }
        }
        if used < self.parts {
            let add = (self.adj[v] & placed).count_ones() as u64;
            self.place(v, used, used + 1, cost + add);
        }
    }

    fn place(&mut self, v: usize, b: usize, used: usize, cost: u64) {
        self.blocks[b] |= 1 << v;
        self.rgs[v] = b as u8;
        self.dfs(v + 1, used, cost);
        self.blocks[b] &= !(1 << v);
    }

    /// Each unplaced vertex adds at least its cheapest placement cost against
    /// the placed vertices; edges among unplaced vertices add nothing negative.
    fn remaining_bound(&self, v: usize, used: usize, placed: u64) -> u64 {
        if used == 0 {
            return 0;
        }
        (v..self.adj.len())
            .map(|w| {
                let nb = self.adj[w] & placed;
                self.blocks[..used].iter().map(|&blk| (nb & !blk).count_ones()).min().unwrap_or(0) as u64
            })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::HlError;
    use crate::oracle::SearchStatus;
    use crate::topology::{g84, hypercube, materialize};

    /// Every string of length `count` over `parts` symbols, no pruning.
    fn brute(graph: &Graph, parts: usize) -> u64 {
        let adj = adjacency_masks(graph).unwrap();
        let count = adj.len();
        let mut best = u64::MAX;
        let total = (parts as u64).pow(count as u32);
        for code in 0..total {
            let mut c = code;
            let labels: Vec<u8> = (0..count).map(|_| { let b = (c % parts as u64) as u8; c /= parts as u64; b }).collect();
            let mut seen = vec![false; parts];
            labels.iter().for_each(|&b| seen[b as usize] = true);
            if seen.iter().all(|&s| s) {
                best = best.min(cut_cost(&adj, &labels));
            }
        }
        best
    }

    #[test]
    fn q3_bipartition() {
        let g = materialize(&hypercube(3).unwrap()).unwrap();
        let out = min_component_edge_cut(&g, 2, &SearchLimits::unlimited()).unwrap();
        assert_eq!(out.value, 3);
        assert_eq!(out.status, SearchStatus::Complete);
        assert_eq!(out.witness.partition.cross_edges.len(), 3);
        // lexicographically smallest optimum isolates the last vertex
        assert_eq!(out.witness.rgs, [0, 0, 0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn q3_three_parts() {
        let g = materialize(&hypercube(3).unwrap()).unwrap();
        assert_eq!(min_component_edge_cut(&g, 3, &SearchLimits::unlimited()).unwrap().value, 5);
    }

    #[test]
    fn agrees_with_unpruned_enumeration() {
        for r in [hypercube(3).unwrap(), g84()] {
            let g = materialize(&r).unwrap();
            for parts in 1..=4 {
                let out = min_component_edge_cut(&g, parts, &SearchLimits::unlimited()).unwrap();
                assert_eq!(out.value, brute(&g, parts), "parts = {parts}");
                assert_eq!(out.witness.partition.blocks.len(), parts);
                assert_eq!(out.witness.partition.cross_edges.len() as u64, out.value);
            }
        }
    }

    #[test]
    fn all_singletons_cut_everything() {
        let g = materialize(&g84()).unwrap();
        assert_eq!(min_component_edge_cut(&g, 8, &SearchLimits::unlimited()).unwrap().value, 12);
        let one = min_component_edge_cut(&g, 1, &SearchLimits::unlimited()).unwrap();
        assert_eq!(one.value, 0);
        assert_eq!(one.witness.partition.blocks.len(), 1);
        assert!(min_component_edge_cut(&g, 9, &SearchLimits::unlimited()).is_err());
    }

    #[test]
    fn prefixes_reproduce_sequential_result() {
        let g = materialize(&hypercube(4).unwrap()).unwrap();
        let whole = min_component_edge_cut(&g, 3, &SearchLimits::unlimited()).unwrap();
        let prefixes = rgs_prefixes(5, 3, 16);
        assert_eq!(prefixes[0], [0, 0, 0, 0, 0]);
        assert!(prefixes.windows(2).all(|w| w[0] < w[1]));
        let mut best: Option<SearchOutcome<CutWitness>> = None;
        for p in &prefixes {
            let out = min_component_edge_cut_from_prefix(&g, 3, p, &SearchLimits::unlimited(), None).unwrap();
            if best.as_ref().is_none_or(|b| out.value < b.value) {
                best = Some(out);
            }
        }
        let best = best.unwrap();
        assert_eq!(best.value, whole.value);
        assert_eq!(best.witness, whole.witness);
    }

    #[test]
    fn bad_prefixes() {
        let g = materialize(&hypercube(2).unwrap()).unwrap();
        assert!(matches!(
            min_component_edge_cut_from_prefix(&g, 2, &[1], &SearchLimits::unlimited(), None),
            Err(HlError::Domain(_))
        ));
        assert!(min_component_edge_cut_from_prefix(&g, 4, &[0, 0], &SearchLimits::unlimited(), None).is_err());
    }

    #[test]
    fn budget_exhaustion_gives_upper_bound() {
        let g = materialize(&hypercube(4).unwrap()).unwrap();
        let out = min_component_edge_cut(&g, 4, &SearchLimits::nodes(10)).unwrap();
        assert_eq!(out.status, SearchStatus::Incomplete);
        assert_eq!(out.witness.partition.cross_edges.len() as u64, out.value);
        assert_eq!(out.witness.partition.blocks.len(), 4);
    }
}
