use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::recipe::{Recipe, MAX_LABEL_DIM};
use super::sets::{Edge, EdgeSet, VertexId, VertexSet};
use super::DEFAULT_MAX_DIM;
use crate::error::{HlError, Result};

/// A materialized `n`-regular HL-network on labels `0..2^n`.
///
/// Neighbor lists are stored flat, `n` slots per vertex. For graphs built by
/// [`materialize`], slot `d - 1` of a vertex holds its partner in the matching
/// of the enclosing `d`-dimensional subrecipe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    dim: u32,
    adj: Vec<u32>,
}

impl Graph {
    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Vertex degree, equal to the dimension.
    pub fn degree(&self) -> usize {
        self.dim as usize
    }

    pub fn vertex_count(&self) -> usize {
        1usize << self.dim
    }

    pub fn edge_count(&self) -> u64 {
        (self.dim as u64) << self.dim.saturating_sub(1)
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.index() < self.vertex_count()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count() as u32).map(VertexId)
    }

    #[inline]
    pub fn neighbor_slice(&self, v: VertexId) -> &[u32] {
        let n = self.degree();
        &self.adj[v.index() * n..(v.index() + 1) * n]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.neighbor_slice(v).iter().map(|&w| VertexId(w))
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.contains_vertex(u) && self.neighbor_slice(u).contains(&v.0)
    }

    /// Every edge once, ordered by `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices().flat_map(move |u| {
            let mut higher: Vec<u32> = self.neighbor_slice(u).iter().copied().filter(|&w| w > u.0).collect();
            higher.sort_unstable();
            higher.into_iter().map(move |w| Edge::new(u, VertexId(w)))
        })
    }

    /// Builds a graph from an explicit edge list, checking that it is simple,
    /// `dim`-regular on `2^dim` vertices, and connected.
    pub fn from_edges(dim: u32, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if dim > MAX_LABEL_DIM {
            return Err(HlError::DimensionTooLarge { dim, max: MAX_LABEL_DIM });
        }
        let count = 1usize << dim;
        let n = dim as usize;
        let mut adj = vec![0u32; count * n];
        let mut fill = vec![0usize; count];
        let mut seen = EdgeSet::new();
        for e in edges {
            let (u, v) = e.endpoints();
            for w in [u, v] {
                if w.index() >= count {
                    return Err(HlError::ForeignVertex { vertex: w.0, vertex_count: count as u64 });
                }
            }
            if u == v {
                return Err(HlError::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if !seen.insert(e) {
                return Err(HlError::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
            for (a, b) in [(u, v), (v, u)] {
                if fill[a.index()] == n {
                    return Err(HlError::InvalidGraph(format!("vertex {a} has degree above {dim}")));
                }
                adj[a.index() * n + fill[a.index()]] = b.0;
                fill[a.index()] += 1;
            }
        }
        if let Some(v) = fill.iter().position(|&f| f != n) {
            return Err(HlError::InvalidGraph(format!(
                "vertex {v} has degree {}, expected {dim}",
                fill[v]
            )));
        }
        for v in 0..count {
            adj[v * n..(v + 1) * n].sort_unstable();
        }
        let g = Graph { dim, adj };
        if !g.is_connected() {
            return Err(HlError::InvalidGraph("graph is not connected".into()));
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        let count = self.vertex_count();
        let mut seen = vec![false; count];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbor_slice(VertexId(v)) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == count
    }

    /// Checks every structural invariant: symmetric, irreflexive, simple,
    /// `n`-regular and connected.
    pub fn validate(&self) -> Result<()> {
        Graph::from_edges(self.dim, self.edges()).map(|_| ())?;
        for u in self.vertices() {
            for w in self.neighbors(u) {
                if !self.has_edge(w, u) {
                    return Err(HlError::InvalidGraph(format!("edge ({u}, {w}) is not symmetric")));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.max() {
            Some(v) if !self.contains_vertex(v) => Err(HlError::ForeignVertex {
                vertex: v.0,
                vertex_count: self.vertex_count() as u64,
            }),
            _ => Ok(()),
        }
    }

    pub(crate) fn check_edges(&self, edges: &EdgeSet) -> Result<()> {
        for e in edges.iter() {
            let (u, v) = e.endpoints();
            if !self.has_edge(u, v) {
                return Err(HlError::NotAnEdge { u: u.0, v: v.0 });
            }
        }
        Ok(())
    }
}

/// Builds the graph of a recipe under the default dimension guard.
pub fn materialize(r: &Recipe) -> Result<Graph> {
    materialize_with_max_dim(r, DEFAULT_MAX_DIM)
}

pub fn materialize_with_max_dim(r: &Recipe, max_dim: u32) -> Result<Graph> {
    let dim = r.dim();
    let max = max_dim.min(MAX_LABEL_DIM);
    if dim > max {
        return Err(HlError::DimensionTooLarge { dim, max });
    }
    let n = dim as usize;
    let mut adj = vec![0u32; n << dim];
    fill(r, 0, n, &mut adj);
    Ok(Graph { dim, adj })
}

fn fill(r: &Recipe, base: u32, n: usize, adj: &mut [u32]) {
    let Some(node) = r.as_node() else { return };
    let slot = node.dim() as usize - 1;
    let half = 1u32 << slot;
    fill(node.left(), base, n, adj);
    fill(node.right(), base + half, n, adj);
    for (i, &j) in node.matching().as_slice().iter().enumerate() {
        let u = base + i as u32;
        let v = base + half + j;
        adj[u as usize * n + slot] = v;
        adj[v as usize * n + slot] = u;
    }
}

/// Number of edges with both endpoints in `x`.
pub fn induced_edge_count(g: &Graph, x: &VertexSet) -> Result<u64> {
    g.check_set(x)?;
    let twice: u64 = x
        .iter()
        .map(|v| g.neighbor_slice(v).iter().filter(|&&w| x.contains(VertexId(w))).count() as u64)
        .sum();
    Ok(twice / 2)
}

/// Edges with exactly one endpoint in `x`.
pub fn boundary_edges(g: &Graph, x: &VertexSet) -> Result<EdgeSet> {
    g.check_set(x)?;
    Ok(x.iter()
        .flat_map(|v| {
            g.neighbor_slice(v)
                .iter()
                .filter(|&&w| !x.contains(VertexId(w)))
                .map(move |&w| Edge::new(v, VertexId(w)))
        })
        .collect())
}
