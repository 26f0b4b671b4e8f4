use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::topology::{Edge, EdgeSet, Graph, VertexId, VertexSet};

/// A partition of the vertex set and the edges running between its blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionWitness {
    /// Nonempty, disjoint, covering; ordered by smallest label.
    pub blocks: Vec<VertexSet>,
    pub cross_edges: EdgeSet,
}

impl PartitionWitness {
    /// Builds the witness for a block assignment `labels[v]`, where labels
    /// are numbered in order of first appearance.
    pub(crate) fn from_labels(graph: &Graph, labels: &[u32]) -> Self {
        let count = labels.iter().max().map_or(0, |&m| m as usize + 1);
        let mut blocks = vec![VertexSet::new(); count];
        for (v, &b) in labels.iter().enumerate() {
            blocks[b as usize].insert(VertexId(v as u32));
        }
        let cross_edges = graph
            .edges()
            .filter(|e| labels[e.u().index()] != labels[e.v().index()])
            .collect();
        PartitionWitness { blocks, cross_edges }
    }
}

/// Connected components of `graph - removed`.
pub fn components_after(graph: &Graph, removed: &EdgeSet) -> Result<PartitionWitness> {
    graph.check_edges(removed)?;
    let count = graph.vertex_count();
    let mut label = vec![u32::MAX; count];
    let mut next = 0u32;
    let mut stack = Vec::new();
    for start in 0..count {
        if label[start] != u32::MAX {
            continue;
        }
        label[start] = next;
        stack.push(VertexId(start as u32));
        while let Some(v) = stack.pop() {
            for w in graph.neighbors(v) {
                if label[w.index()] == u32::MAX && !removed.contains(Edge::new(v, w)) {
                    label[w.index()] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    Ok(PartitionWitness::from_labels(graph, &label))
}

/// Whether the graph has a proper 2-coloring (no odd cycle).
pub fn is_bipartite(graph: &Graph) -> bool {
    let mut color = vec![u8::MAX; graph.vertex_count()];
    for start in graph.vertices() {
        if color[start.index()] != u8::MAX {
            continue;
        }
        color[start.index()] = 0;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in graph.neighbors(v) {
                if color[w.index()] == u8::MAX {
                    color[w.index()] = 1 - color[v.index()];
                    stack.push(w);
                } else if color[w.index()] == color[v.index()] {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::HlError;
    use crate::ms::build_component_cut_in;
    use crate::topology::{g84, hypercube, materialize, random_hl};

    #[test]
    fn no_removal_is_one_block() {
        let g = materialize(&random_hl(5, 2).unwrap()).unwrap();
        let p = components_after(&g, &EdgeSet::new()).unwrap();
        assert_eq!(p.blocks, vec![VertexSet::from_range(0, 32)]);
        assert!(p.cross_edges.is_empty());
    }

    #[test]
    fn isolating_one_vertex() {
        for r in [hypercube(3).unwrap(), g84()] {
            let g = materialize(&r).unwrap();
            for v in g.vertices() {
                let removed: EdgeSet = g.neighbors(v).map(|w| Edge::new(v, w)).collect();
                let p = components_after(&g, &removed).unwrap();
                assert_eq!(p.blocks.len(), 2);
                let single: VertexSet = [v].into_iter().collect();
                assert!(p.blocks.contains(&single));
                assert_eq!(p.cross_edges, removed);
                assert_eq!(p.blocks[0].min(), Some(VertexId(0)));
            }
        }
    }

    #[test]
    fn component_cut_leaves_singletons() {
        for n in 8..=10 {
            let r = random_hl(n, n as u64).unwrap();
            let g = materialize(&r).unwrap();
            for gval in [1u64, 3, 16, 17] {
                let cut = build_component_cut_in(&g, &r, gval).unwrap();
                let p = components_after(&g, &cut).unwrap();
                let singles = p.blocks.iter().filter(|b| b.len() == 1).count() as u64;
                assert_eq!(singles, gval);
                assert!(p.blocks.len() as u64 > gval);
            }
        }
    }

    #[test]
    fn rejects_non_edges() {
        let g = materialize(&hypercube(2).unwrap()).unwrap();
        let bad: EdgeSet = [Edge::new(0u32, 3u32)].into_iter().collect();
        assert_eq!(components_after(&g, &bad).unwrap_err(), HlError::NotAnEdge { u: 0, v: 3 });
    }

    #[test]
    fn bipartiteness() {
        assert!(is_bipartite(&materialize(&hypercube(4).unwrap()).unwrap()));
        assert!(!is_bipartite(&materialize(&g84()).unwrap()));
    }
}
