//! Extremal subgraph selection and the minimum `(g+1)`-component edge cut.
//!
//! [`algorithm_ms`] picks nested sub-networks `D_0, ..., D_s` of dimensions
//! `t_0 > ... > t_s` (the binary expansion of `g`). Step `i` walks left from the
//! current search space until it reaches a `(t_i + 1)`-dimensional subrecipe
//! `T_i`, takes its left half as `D_i`, and continues in the right half `D*_i`.
//! Every vertex of a later block has exactly one matching partner in each
//! earlier block, which is what makes the union induce exactly `e_g` edges.
//!
//! [`build_component_cut`] removes every edge touching the selection, which
//! isolates all `g` selected vertices at a cost of `n*g - e_g` edges.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{domain, HlError, Result};
use crate::extremal::{decompose, e_g};
use crate::oracle::components_after;
use crate::topology::{
    boundary_edges, materialize, Branch, Edge, EdgeSet, Graph, Recipe, VertexId, VertexSet,
};

/// One selected block `D_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MsBlock {
    /// Path from the root recipe to the subrecipe `D_i`.
    pub path: Vec<Branch>,
    pub dim: u32,
    pub vertices: VertexSet,
}

impl MsBlock {
    /// The contiguous label range covered by the block.
    pub fn label_range(&self) -> core::ops::Range<u32> {
        let start = self.vertices.min().map_or(0, |v| v.0);
        start..start + (1u32 << self.dim)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MsTrace {
    pub dim: u32,
    pub g: u64,
    pub blocks: Vec<MsBlock>,
    pub union: VertexSet,
}

/// Selects `g` vertices inducing `e_g` edges in the network built by `r`.
pub fn algorithm_ms(r: &Recipe, g: u64) -> Result<MsTrace> {
    let dim = r.dim();
    if g == 0 || g >= 1u64 << dim {
        return Err(domain(format!("algorithm_ms requires 1 <= g < 2^{dim}, got g = {g}")));
    }
    let decomposition = decompose(g)?;
    let mut blocks = Vec::with_capacity(decomposition.len());
    let mut union = VertexSet::new();

    // current search space D*_{i-1}: subrecipe, its path, and its first label
    let mut space = r;
    let mut path = Vec::new();
    let mut base = 0u32;
    for &t in decomposition.exponents() {
        while space.dim() > t + 1 {
            space = space.parts()?.0;
            path.push(Branch::Left);
        }
        debug_assert_eq!(space.dim(), t + 1);
        let (_, right, _) = space.parts()?;
        let mut block_path = path.clone();
        block_path.push(Branch::Left);
        let vertices = VertexSet::from_range(base, base + (1 << t));
        union.union_with(&vertices);
        blocks.push(MsBlock { path: block_path, dim: t, vertices });

        space = right;
        path.push(Branch::Right);
        base += 1 << t;
    }
    Ok(MsTrace { dim, g, blocks, union })
}

/// Edges with at least one endpoint in `x`: the boundary plus the induced edges.
pub fn cut_around(graph: &Graph, x: &VertexSet) -> Result<EdgeSet> {
    let mut cut = boundary_edges(graph, x)?;
    for v in x.iter() {
        for w in graph.neighbors(v) {
            if v < w && x.contains(w) {
                cut.insert(Edge::new(v, w));
            }
        }
    }
    Ok(cut)
}

/// The cut `F = E_X ∪ E(G[X])` for the selection `X` of [`algorithm_ms`].
pub fn build_component_cut(r: &Recipe, g: u64) -> Result<EdgeSet> {
    let graph = materialize(r)?;
    build_component_cut_in(&graph, r, g)
}

/// Like [`build_component_cut`], reusing an already materialized `graph` of `r`.
pub fn build_component_cut_in(graph: &Graph, r: &Recipe, g: u64) -> Result<EdgeSet> {
    if graph.dim() != r.dim() {
        return Err(domain(format!(
            "graph has dimension {}, recipe has dimension {}",
            graph.dim(),
            r.dim()
        )));
    }
    let trace = algorithm_ms(r, g)?;
    cut_around(graph, &trace.union)
}

/// Verification record for a candidate component edge cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutReport {
    pub cut_size: u64,
    pub component_count: u64,
    pub isolated_count: u64,
    /// `n * target_g - e_{target_g}`.
    pub predicted_size: u64,
    pub matches_prediction: bool,
}

/// Counts the components of `graph - cut` by traversal and compares `|cut|`
/// against `n * target_g - e_{target_g}`.
pub fn verify_cut(graph: &Graph, cut: &EdgeSet, target_g: u64) -> Result<CutReport> {
    let components = components_after(graph, cut)?;
    let isolated_count = components.blocks.iter().filter(|b| b.len() == 1).count() as u64;
    let predicted_size = (graph.dim() as u64)
        .checked_mul(target_g)
        .and_then(|ng| ng.checked_sub(e_g(target_g).ok()?))
        .ok_or(HlError::Overflow)?;
    let cut_size = cut.len() as u64;
    Ok(CutReport {
        cut_size,
        component_count: components.blocks.len() as u64,
        isolated_count,
        predicted_size,
        matches_prediction: cut_size == predicted_size,
    })
}

/// Number of edges between two vertex sets.
pub fn edges_between(graph: &Graph, a: &VertexSet, b: &VertexSet) -> u64 {
    a.iter()
        .map(|v| graph.neighbors(v).filter(|&w: &VertexId| b.contains(w)).count() as u64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{g84, hypercube, induced_edge_count, random_hl};

    #[test]
    fn power_of_two_selects_one_subcube() {
        let r = hypercube(4).unwrap();
        let trace = algorithm_ms(&r, 4).unwrap();
        assert_eq!(trace.blocks.len(), 1);
        assert_eq!(trace.union, VertexSet::from_range(0, 4));
        assert_eq!(trace.blocks[0].path, [Branch::Left, Branch::Left]);
        let g = materialize(&r).unwrap();
        assert_eq!(induced_edge_count(&g, &trace.union).unwrap(), 4);
    }

    #[test]
    fn seven_vertices_induce_nine_edges() {
        let recipes = [hypercube(8).unwrap()]
            .into_iter()
            .chain((0..5).map(|s| random_hl(8, s).unwrap()));
        for r in recipes {
            let graph = materialize(&r).unwrap();
            let trace = algorithm_ms(&r, 7).unwrap();
            assert_eq!(trace.union.len(), 7);
            assert_eq!(induced_edge_count(&graph, &trace.union).unwrap(), 9);
        }
    }

    #[test]
    fn block_structure() {
        for seed in 0..4 {
            let r = random_hl(9, seed).unwrap();
            let graph = materialize(&r).unwrap();
            let trace = algorithm_ms(&r, 0b1011_0101).unwrap();
            let dims: Vec<u32> = trace.blocks.iter().map(|b| b.dim).collect();
            assert_eq!(dims, [7, 5, 4, 2, 0]);
            for (i, a) in trace.blocks.iter().enumerate() {
                assert_eq!(a.vertices.len(), 1 << a.dim);
                assert_eq!(r.subrecipe(&a.path).unwrap().dim(), a.dim);
                let internal = induced_edge_count(&graph, &a.vertices).unwrap();
                assert_eq!(internal, (a.dim as u64) << a.dim.saturating_sub(1));
                for b in &trace.blocks[i + 1..] {
                    assert!(a.vertices.is_disjoint(&b.vertices));
                    assert_eq!(edges_between(&graph, &a.vertices, &b.vertices), 1 << b.dim);
                }
            }
        }
    }

    #[test]
    fn range_errors() {
        let r = hypercube(3).unwrap();
        assert!(algorithm_ms(&r, 0).is_err());
        assert!(algorithm_ms(&r, 8).is_err());
        assert!(algorithm_ms(&r, 7).is_ok());
        assert!(build_component_cut(&r, 8).is_err());
    }

    #[test]
    fn single_vertex_cut() {
        let r = random_hl(6, 11).unwrap();
        let cut = build_component_cut(&r, 1).unwrap();
        assert_eq!(cut.len(), 6);
        assert!(cut.iter().all(|e| e.u() == VertexId(0)));
    }

    #[test]
    fn cut_on_q8_isolates_five() {
        let r = hypercube(8).unwrap();
        let graph = materialize(&r).unwrap();
        let cut = build_component_cut_in(&graph, &r, 5).unwrap();
        let report = verify_cut(&graph, &cut, 5).unwrap();
        assert_eq!(report.cut_size, 35);
        assert_eq!(report.isolated_count, 5);
        assert_eq!(report.component_count, 6);
        assert!(report.matches_prediction);
    }

    #[test]
    fn verify_empty_cut() {
        let graph = materialize(&g84()).unwrap();
        let report = verify_cut(&graph, &EdgeSet::new(), 0).unwrap();
        assert_eq!(report.component_count, 1);
        assert_eq!(report.isolated_count, 0);
        assert!(report.matches_prediction);
    }

    #[test]
    fn verify_two_adjacent_vertices() {
        // Q_3: vertices 0 and 1 are adjacent; removing all their edges leaves
        // 2 + 2 boundary edges each plus the shared one, five in total
        let graph = materialize(&hypercube(3).unwrap()).unwrap();
        let x = VertexSet::from_range(0, 2);
        let cut = cut_around(&graph, &x).unwrap();
        assert_eq!(cut.len(), 5);
        let report = verify_cut(&graph, &cut, 2).unwrap();
        assert_eq!(report.component_count, 3);
        assert_eq!(report.isolated_count, 2);
        assert_eq!(report.predicted_size, 5);
        assert!(report.matches_prediction);

        // only the boundary: {0, 1} stays together as a K2
        let boundary = boundary_edges(&graph, &x).unwrap();
        let report = verify_cut(&graph, &boundary, 2).unwrap();
        assert_eq!((report.cut_size, report.component_count, report.isolated_count), (4, 2, 0));
        assert!(!report.matches_prediction);
    }

    #[test]
    fn verify_rejects_non_edges() {
        let graph = materialize(&hypercube(3).unwrap()).unwrap();
        let bogus: EdgeSet = [Edge::new(0u32, 7u32)].into_iter().collect();
        assert_eq!(verify_cut(&graph, &bogus, 1).unwrap_err(), HlError::NotAnEdge { u: 0, v: 7 });
    }

    #[test]
    fn deterministic() {
        let r = random_hl(10, 3).unwrap();
        assert_eq!(algorithm_ms(&r, 27).unwrap(), algorithm_ms(&r, 27).unwrap());
    }
}
