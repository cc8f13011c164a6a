//! Compact bitmask view of a graph for the exhaustive searches.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::limits;

pub(crate) struct Dense {
    pub n: usize,
    /// Dense index to vertex id.
    pub ids: Vec<VertexId>,
    /// Vertex id to dense index, `usize::MAX` for dead slots.
    pub index: Vec<usize>,
    /// Dense endpoints of every live edge, in edge id order.
    pub ends: Vec<(usize, usize)>,
    pub edge_ids: Vec<EdgeId>,
    /// Edge id to position in `ends`, `usize::MAX` for dead ids.
    pub edge_index: Vec<usize>,
    /// Neighbor masks of the underlying simple graph.
    pub adj: Vec<u64>,
    /// `(edge position, neighbor)` per vertex.
    pub inc: Vec<Vec<(usize, usize)>>,
}

impl Dense {
    pub fn new(g: &Graph) -> Result<Dense> {
        limits::check_mask(g.order())?;
        let ids: Vec<VertexId> = g.vertices().collect();
        let n = ids.len();
        let mut index = vec![usize::MAX; g.vertex_bound()];
        for (i, &v) in ids.iter().enumerate() {
            index[v] = i;
        }
        let mut ends = Vec::with_capacity(g.size());
        let mut edge_ids = Vec::with_capacity(g.size());
        let mut edge_index = vec![usize::MAX; g.edge_bound()];
        let mut adj = vec![0u64; n];
        let mut inc = vec![Vec::new(); n];
        for (e, u, v) in g.edges() {
            let (a, b) = (index[u], index[v]);
            edge_index[e.0] = ends.len();
            inc[a].push((ends.len(), b));
            inc[b].push((ends.len(), a));
            ends.push((a, b));
            edge_ids.push(e);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Dense {
            n,
            ids,
            index,
            ends,
            edge_ids,
            edge_index,
            adj,
            inc,
        })
    }

    pub fn full_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn ids_of(&self, mask: u64) -> Vec<VertexId> {
        bits(mask).map(|i| self.ids[i]).collect()
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Does the subgraph induced by `mask` have a perfect matching?
pub(crate) fn matchable(adj: &[u64], mask: u64) -> bool {
    if mask.count_ones() % 2 == 1 {
        return false;
    }
    matchable_rec(adj, mask)
}

fn matchable_rec(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let Some(v) = pick_min_degree(adj, mask) else {
        return false;
    };
    let rest = mask & !(1 << v);
    for u in bits(adj[v] & rest) {
        if matchable_rec(adj, rest & !(1 << u)) {
            return true;
        }
    }
    false
}

/// Vertex of least degree inside `mask`; `None` if some vertex is isolated.
fn pick_min_degree(adj: &[u64], mask: u64) -> Option<usize> {
    let mut best = usize::MAX;
    let mut best_deg = u32::MAX;
    for v in bits(mask) {
        let d = (adj[v] & mask).count_ones();
        if d == 0 {
            return None;
        }
        if d < best_deg {
            best_deg = d;
            best = v;
            if d == 1 {
                break;
            }
        }
    }
    Some(best)
}

/// Is the subgraph induced by `mask` connected? The empty mask counts as
/// connected.
pub(crate) fn connected_within(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v] & mask;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == mask
}
