//! Loopless multigraphs with stable vertex and edge identities.
//!
//! Vertices are dense integers and edges live in an indexed list. Deleting a
//! vertex or an edge leaves a tombstone, so ids are never reused within one
//! graph's lifetime. Contractions, reduction traces and family certificates
//! all refer to edges by id, which is why this matters.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(into = "GraphRecord", try_from = "GraphRecord")]
pub struct Graph {
    alive: Vec<bool>,
    edges: Vec<Option<(VertexId, VertexId)>>,
    adj: Vec<Vec<(EdgeId, VertexId)>>,
}

/// Two graphs are equal when they have the same live vertices and the same
/// live edges under the same ids; incidence list order is ignored.
impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.vertices().eq(other.vertices()) && self.edges().eq(other.edges())
    }
}

impl Eq for Graph {}

/// Serialized form of a [`Graph`]: live vertices, and every live edge as
/// `[id, u, v]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphRecord {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(usize, VertexId, VertexId)>,
}

impl From<Graph> for GraphRecord {
    fn from(g: Graph) -> Self {
        GraphRecord {
            vertices: g.vertices().collect(),
            edges: g.edges().map(|(e, u, v)| (e.0, u, v)).collect(),
        }
    }
}

impl TryFrom<GraphRecord> for Graph {
    type Error = Error;

    fn try_from(r: GraphRecord) -> Result<Graph> {
        let bound = r.vertices.iter().map(|&v| v + 1).max().unwrap_or(0);
        let mut g = Graph::new(bound);
        let live: BTreeSet<VertexId> = r.vertices.iter().copied().collect();
        for v in 0..bound {
            if !live.contains(&v) {
                g.alive[v] = false;
            }
        }
        let mut edges = r.edges;
        edges.sort_unstable();
        for (id, u, v) in edges {
            if id < g.edges.len() {
                return Err(Error::InvalidSpec("duplicate edge id".into()));
            }
            g.edges.resize(id, None);
            let e = g.add_edge(u, v)?;
            debug_assert_eq!(e.0, id);
        }
        Ok(g)
    }
}

/// A cut `∂(X)`: the shore `X` and every edge with exactly one end in it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cut {
    pub shore: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Cut {
    /// A cut is trivial when one of its shores is a single vertex.
    pub fn is_trivial(&self, g: &Graph) -> bool {
        self.shore.len() == 1 || self.shore.len() + 1 == g.order()
    }

    pub fn complement(&self, g: &Graph) -> Vec<VertexId> {
        let inside: BTreeSet<_> = self.shore.iter().copied().collect();
        g.vertices().filter(|v| !inside.contains(v)).collect()
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            alive: vec![true; n],
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.alive.push(true);
        self.adj.push(Vec::new());
        self.alive.len() - 1
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.require_vertex(u)?;
        self.require_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        let id = EdgeId(self.edges.len());
        self.edges.push(Some((u, v)));
        self.adj[u].push((id, v));
        self.adj[v].push((id, u));
        Ok(id)
    }

    pub fn remove_edge(&mut self, e: EdgeId) -> Result<(VertexId, VertexId)> {
        let (u, v) = self.endpoints(e).ok_or(Error::NoSuchEdge(e))?;
        self.edges[e.0] = None;
        self.adj[u].retain(|&(f, _)| f != e);
        self.adj[v].retain(|&(f, _)| f != e);
        Ok((u, v))
    }

    /// Removes `v` together with its incident edges.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<()> {
        self.require_vertex(v)?;
        let incident: Vec<EdgeId> = self.adj[v].iter().map(|&(e, _)| e).collect();
        for e in incident {
            self.remove_edge(e)?;
        }
        self.alive[v] = false;
        Ok(())
    }

    /// Moves the `from` end of edge `e` to vertex `to`, keeping the id.
    pub(crate) fn reattach(&mut self, e: EdgeId, from: VertexId, to: VertexId) -> Result<()> {
        let (u, v) = self.endpoints(e).ok_or(Error::NoSuchEdge(e))?;
        let other = if u == from {
            v
        } else if v == from {
            u
        } else {
            return Err(Error::pre("edge is not incident with the vertex being moved"));
        };
        self.require_vertex(to)?;
        if other == to {
            return Err(Error::Loop(to));
        }
        self.edges[e.0] = Some(if u == from { (to, v) } else { (u, to) });
        self.adj[from].retain(|&(f, _)| f != e);
        self.adj[to].push((e, other));
        for slot in self.adj[other].iter_mut() {
            if slot.0 == e {
                slot.1 = to;
            }
        }
        Ok(())
    }

    fn require_vertex(&self, v: VertexId) -> Result<()> {
        if self.has_vertex(v) {
            Ok(())
        } else {
            Err(Error::NoSuchVertex(v))
        }
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.alive.get(v).copied().unwrap_or(false)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.endpoints(e).is_some()
    }

    pub fn endpoints(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        self.edges.get(e.0).copied().flatten()
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> Option<VertexId> {
        let (a, b) = self.endpoints(e)?;
        if a == v {
            Some(b)
        } else if b == v {
            Some(a)
        } else {
            None
        }
    }

    /// Number of live vertices.
    pub fn order(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    /// Number of live edges.
    pub fn size(&self) -> usize {
        self.edges.iter().filter(|e| e.is_some()).count()
    }

    /// One past the largest vertex id ever allocated.
    pub fn vertex_bound(&self) -> usize {
        self.alive.len()
    }

    /// One past the largest edge id ever allocated.
    pub fn edge_bound(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive.iter().enumerate().filter(|(_, &a)| a).map(|(v, _)| v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.map(|(u, v)| (EdgeId(i), u, v)))
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges().map(|(e, _, _)| e).collect()
    }

    /// Incident edges of `v` as `(edge, neighbor)` pairs.
    pub fn incident(&self, v: VertexId) -> &[(EdgeId, VertexId)] {
        self.adj.get(v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident(v).len()
    }

    /// Distinct neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let set: BTreeSet<VertexId> = self.incident(v).iter().map(|&(_, u)| u).collect();
        set.into_iter().collect()
    }

    /// Number of edges joining `u` and `v`.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.incident(u).iter().filter(|&&(_, w)| w == v).count()
    }

    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self
            .incident(u)
            .iter()
            .filter(|&&(_, w)| w == v)
            .map(|&(e, _)| e)
            .collect();
        out.sort();
        out
    }

    pub fn is_simple(&self) -> bool {
        self.vertices().all(|v| self.neighbors(v).len() == self.degree(v))
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertex_bound()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &(_, u) in self.incident(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-coloring of the live vertices, if one exists. `side[v]` is 0 or 1
    /// for live vertices; entries of dead slots are meaningless.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.vertex_bound()];
        for s in self.vertices() {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &(_, u) in self.incident(v) {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        queue.push_back(u);
                    } else if side[u] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Drops parallel copies, keeping the smallest edge id of every class.
    pub fn underlying_simple(&self) -> Graph {
        let mut g = self.clone();
        let mut seen = BTreeSet::new();
        for (e, u, v) in self.edges() {
            if !seen.insert((u.min(v), u.max(v))) {
                g.remove_edge(e).expect("edge is live");
            }
        }
        g
    }

    /// Relabels live vertices to `0..n` and edges to `0..m`, both in id order.
    /// Returns the new graph plus the old vertex and edge id of each new index.
    pub fn compact(&self) -> (Graph, Vec<VertexId>, Vec<EdgeId>) {
        let verts: Vec<VertexId> = self.vertices().collect();
        let mut index = vec![usize::MAX; self.vertex_bound()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(verts.len());
        let mut emap = Vec::with_capacity(self.size());
        for (e, u, v) in self.edges() {
            g.add_edge(index[u], index[v]).expect("live endpoints");
            emap.push(e);
        }
        (g, verts, emap)
    }

    /// Copy with the given vertices (and their edges) deleted; ids preserved.
    pub fn without_vertices(&self, remove: &[VertexId]) -> Graph {
        let mut g = self.clone();
        for &v in remove {
            if g.has_vertex(v) {
                g.remove_vertex(v).expect("vertex is live");
            }
        }
        g
    }

    /// Copy with the given edges deleted; ids preserved.
    pub fn without_edges(&self, remove: &[EdgeId]) -> Graph {
        let mut g = self.clone();
        for &e in remove {
            if g.has_edge(e) {
                g.remove_edge(e).expect("edge is live");
            }
        }
        g
    }

    /// The subgraph made of the given vertices and edges, ids preserved.
    /// Every listed edge must have both ends among the listed vertices.
    pub fn subgraph(&self, vertices: &[VertexId], edges: &[EdgeId]) -> Result<Graph> {
        let keep_v: BTreeSet<VertexId> = vertices.iter().copied().collect();
        let keep_e: BTreeSet<EdgeId> = edges.iter().copied().collect();
        for &v in &keep_v {
            self.require_vertex(v)?;
        }
        let mut g = self.clone();
        for (e, u, v) in self.edges() {
            if !keep_e.contains(&e) {
                g.remove_edge(e)?;
            } else if !keep_v.contains(&u) || !keep_v.contains(&v) {
                return Err(Error::pre("subgraph edge leaves the vertex set"));
            }
        }
        for &e in &keep_e {
            if !self.has_edge(e) {
                return Err(Error::NoSuchEdge(e));
            }
        }
        for v in self.vertices() {
            if !keep_v.contains(&v) {
                g.remove_vertex(v)?;
            }
        }
        Ok(g)
    }

    /// The cut `∂(X)` for shore `X`.
    pub fn cut(&self, shore: &[VertexId]) -> Result<Cut> {
        let inside = self.shore_set(shore)?;
        let edges = self
            .edges()
            .filter(|&(_, u, v)| inside.contains(&u) != inside.contains(&v))
            .map(|(e, _, _)| e)
            .collect();
        Ok(Cut {
            shore: inside.into_iter().collect(),
            edges,
        })
    }

    fn shore_set(&self, shore: &[VertexId]) -> Result<BTreeSet<VertexId>> {
        let inside: BTreeSet<VertexId> = shore.iter().copied().collect();
        for &v in &inside {
            self.require_vertex(v)?;
        }
        if inside.is_empty() || inside.len() >= self.order() {
            return Err(Error::InvalidShore);
        }
        Ok(inside)
    }

    /// `G/X`: shrinks the shore to a single contraction vertex, which reuses
    /// the smallest id in `X`. Cut edges keep their ids, edges inside `X`
    /// disappear and parallel edges are kept.
    pub fn contract_shore(&self, shore: &[VertexId]) -> Result<Graph> {
        let inside = self.shore_set(shore)?;
        let hub = *inside.iter().next().expect("nonempty shore");
        let mut g = self.clone();
        for (e, u, v) in self.edges() {
            match (inside.contains(&u), inside.contains(&v)) {
                (true, true) => {
                    g.remove_edge(e)?;
                }
                (true, false) if u != hub => g.reattach(e, u, hub)?,
                (false, true) if v != hub => g.reattach(e, v, hub)?,
                _ => {}
            }
        }
        for &v in inside.iter().skip(1) {
            g.remove_vertex(v)?;
        }
        Ok(g)
    }

    /// Edge multiset keyed by sorted endpoint pairs.
    pub fn edge_multiset(&self) -> BTreeMap<(VertexId, VertexId), usize> {
        let mut out = BTreeMap::new();
        for (_, u, v) in self.edges() {
            *out.entry((u.min(v), u.max(v))).or_insert(0) += 1;
        }
        out
    }

    /// A 64-bit FNV-1a digest of the live vertex and edge lists.
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut feed = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x0000_0100_0000_01b3);
            }
        };
        for v in self.vertices() {
            feed(v as u64);
        }
        feed(u64::MAX);
        for (e, u, v) in self.edges() {
            feed(e.0 as u64);
            feed(u as u64);
            feed(v as u64);
        }
        h
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn loops_are_rejected() {
        let mut g = Graph::new(2);
        assert_eq!(g.add_edge(1, 1), Err(Error::Loop(1)));
        assert_eq!(g.add_edge(0, 2), Err(Error::NoSuchVertex(2)));
    }

    #[test]
    fn deleted_ids_are_not_reused() {
        let mut g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        g.remove_edge(EdgeId(0)).unwrap();
        assert_eq!(g.add_edge(0, 2).unwrap(), EdgeId(2));
        g.remove_vertex(1).unwrap();
        assert_eq!(g.add_vertex(), 3);
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn multiplicity_counts_parallel_edges() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.multiplicity(0, 1), 3);
        assert!(!g.is_simple());
        assert_eq!(g.underlying_simple().size(), 1);
    }

    #[test]
    fn contracting_two_adjacent_vertices_of_c4() {
        // C4 = 0-1-2-3-0, shore {0,1}: edge 0-1 vanishes, 1-2 and 3-0 become
        // edges at the contraction vertex 0, 2-3 survives. Result: triangle.
        let g = catalog::cycle(4);
        let h = g.contract_shore(&[0, 1]).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.size(), 3);
        assert_eq!(h.endpoints(EdgeId(1)), Some((0, 2)));
        assert_eq!(h.endpoints(EdgeId(2)), Some((2, 3)));
        assert_eq!(h.endpoints(EdgeId(3)), Some((3, 0)));
        assert!(!h.has_edge(EdgeId(0)));
    }

    #[test]
    fn trivial_shore_contraction_is_identity_up_to_ids() {
        let g = catalog::cube();
        let h = g.contract_shore(&[5]).unwrap();
        assert_eq!(h, g);
    }

    #[test]
    fn empty_or_full_shore_is_rejected() {
        let g = catalog::k4();
        assert_eq!(g.contract_shore(&[]), Err(Error::InvalidShore));
        assert_eq!(g.contract_shore(&[0, 1, 2, 3]), Err(Error::InvalidShore));
    }

    #[test]
    fn contractions_share_cut_edges_and_partition_the_rest() {
        let g = catalog::two_triangle_cubic();
        let cut = g.cut(&[1, 2, 3]).unwrap();
        let a = g.contract_shore(&cut.shore).unwrap();
        let b = g.contract_shore(&cut.complement(&g)).unwrap();
        let ea: BTreeSet<EdgeId> = a.edge_ids().into_iter().collect();
        let eb: BTreeSet<EdgeId> = b.edge_ids().into_iter().collect();
        let shared: Vec<EdgeId> = ea.intersection(&eb).copied().collect();
        assert_eq!(shared, cut.edges);
        assert_eq!(ea.len() + eb.len() - shared.len(), g.size());
    }

    #[test]
    fn two_coloring_detects_odd_cycles() {
        assert!(catalog::cube().is_bipartite());
        assert!(!catalog::k4().is_bipartite());
    }
}
