use alloc::vec;
use alloc::vec::Vec;

use crate::error::{HlError, Result};
use crate::topology::Graph;

pub const ISO_MAX_VERTICES: usize = 16;

/// Exact isomorphism test for graphs on at most 16 vertices.
///
/// Vertices are first split by an invariant (triangles through the vertex and
/// the number of vertices at distance two); the backtracking then only maps
/// vertices with equal invariants and checks adjacency against every vertex
/// already mapped.
pub fn isomorphic_small(a: &Graph, b: &Graph) -> Result<bool> {
    for g in [a, b] {
        if g.vertex_count() > ISO_MAX_VERTICES {
            return Err(HlError::GraphTooLarge { vertices: g.vertex_count(), max: ISO_MAX_VERTICES });
        }
    }
    if a.dim() != b.dim() {
        return Ok(false);
    }
    let (adj_a, adj_b) = (masks(a), masks(b));
    let (inv_a, inv_b) = (invariants(&adj_a), invariants(&adj_b));
    let mut sorted_a = inv_a.clone();
    let mut sorted_b = inv_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return Ok(false);
    }
    let order = bfs_order(&adj_a);
    let mut map = vec![usize::MAX; adj_a.len()];
    Ok(extend(&adj_a, &adj_b, &inv_a, &inv_b, &order, 0, &mut map, 0))
}

fn masks(g: &Graph) -> Vec<u32> {
    g.vertices().map(|v| g.neighbors(v).fold(0u32, |m, w| m | 1 << w.0)).collect()
}

fn invariants(adj: &[u32]) -> Vec<(u32, u32, u32)> {
    (0..adj.len())
        .map(|v| {
            let nb = adj[v];
            let triangles: u32 = (0..adj.len()).filter(|&w| nb >> w & 1 == 1).map(|w| (adj[w] & nb).count_ones()).sum();
            let reach2 = (0..adj.len()).filter(|&w| nb >> w & 1 == 1).fold(0u32, |m, w| m | adj[w]);
            let dist2 = (reach2 & !nb & !(1 << v)).count_ones();
            (nb.count_ones(), triangles / 2, dist2)
        })
        .collect()
}

fn bfs_order(adj: &[u32]) -> Vec<usize> {
    let mut order = Vec::with_capacity(adj.len());
    let mut seen = 0u32;
    for start in 0..adj.len() {
        if seen >> start & 1 == 1 {
            continue;
        }
        seen |= 1 << start;
        order.push(start);
        let mut i = order.len() - 1;
        while i < order.len() {
            let v = order[i];
            for w in 0..adj.len() {
                if adj[v] >> w & 1 == 1 && seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    adj_a: &[u32],
    adj_b: &[u32],
    inv_a: &[(u32, u32, u32)],
    inv_b: &[(u32, u32, u32)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used_b: u32,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..adj_b.len() {
        if used_b >> w & 1 == 1 || inv_a[v] != inv_b[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| (adj_a[v] >> u & 1) == (adj_b[w] >> map[u] & 1));
        if consistent {
            map[v] = w;
            if extend(adj_a, adj_b, inv_a, inv_b, order, depth + 1, map, used_b | 1 << w) {
                return true;
            }
            map[v] = usize::MAX;
        }
    }
    false
}
