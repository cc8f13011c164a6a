//! Series and parallel reductions, bicontraction and bisplitting, retracts,
//! and thin edges.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::decomposition;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::matching;

/// One reduction applied to a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ReductionStep {
    /// `removed` was deleted; `kept` joins the same two vertices.
    Parallel { removed: EdgeId, kept: EdgeId },
    /// The path `w x y z` was replaced by the new edge `inserted` joining
    /// `w` and `z`.
    Series {
        path: [VertexId; 4],
        removed: [EdgeId; 3],
        inserted: EdgeId,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub start: u64,
    pub end: u64,
    pub steps: Vec<ReductionStep>,
    /// The terminal graph is `K2`.
    pub k2_degenerate: bool,
}

impl ReductionTrace {
    /// Applies the steps to `g`, which must have fingerprint `start`.
    pub fn replay(&self, g: &Graph) -> Result<Graph> {
        if g.fingerprint() != self.start {
            return Err(Error::FingerprintMismatch);
        }
        let mut h = g.clone();
        for step in &self.steps {
            h = match *step {
                ReductionStep::Parallel { removed, .. } => parallel_reduce_once(&h, removed)?,
                ReductionStep::Series {
                    path,
                    removed,
                    inserted,
                } => {
                    if series_edges(&h, &path)? != removed || h.edge_bound() != inserted.0 {
                        return Err(Error::internal("trace does not match the graph"));
                    }
                    series_reduce_once(&h, &path)?
                }
            };
        }
        if h.fingerprint() != self.end {
            return Err(Error::internal("replay ended at a different graph"));
        }
        Ok(h)
    }
}

/// `G - e`, where `e` has a parallel partner.
pub fn parallel_reduce_once(g: &Graph, e: EdgeId) -> Result<Graph> {
    parallel_partner(g, e)?;
    Ok(g.without_edges(&[e]))
}

fn parallel_partner(g: &Graph, e: EdgeId) -> Result<EdgeId> {
    let (u, v) = g.endpoints(e).ok_or(Error::NoSuchEdge(e))?;
    g.edges_between(u, v)
        .into_iter()
        .find(|&f| f != e)
        .ok_or_else(|| Error::pre("edge has no parallel partner"))
}

/// The three edges of the path `w x y z`, checking that `x` and `y` have
/// degree two and `w != z`.
fn series_edges(g: &Graph, path: &[VertexId; 4]) -> Result<[EdgeId; 3]> {
    let [w, x, y, z] = *path;
    for v in path {
        if !g.has_vertex(*v) {
            return Err(Error::NoSuchVertex(*v));
        }
    }
    if g.degree(x) != 2 || g.degree(y) != 2 {
        return Err(Error::pre("inner path vertices must have degree two"));
    }
    if w == z {
        return Err(Error::Loop(w));
    }
    let one = |a, b| -> Result<EdgeId> {
        match g.edges_between(a, b).as_slice() {
            [e] => Ok(*e),
            _ => Err(Error::pre("consecutive path vertices must be joined by one edge")),
        }
    };
    Ok([one(w, x)?, one(x, y)?, one(y, z)?])
}

/// `G - P + e` for the path `P = w x y z`. The new edge takes the next
/// unused edge id.
pub fn series_reduce_once(g: &Graph, path: &[VertexId; 4]) -> Result<Graph> {
    series_edges(g, path)?;
    let mut h = g.without_vertices(&path[1..3]);
    h.add_edge(path[0], path[3])?;
    Ok(h)
}

/// Simple, with the degree-two vertices forming a stable set.
pub fn is_irreducible(g: &Graph) -> bool {
    g.is_simple() && g.edges().all(|(_, u, v)| g.degree(u) != 2 || g.degree(v) != 2)
}

fn next_parallel(g: &Graph) -> Option<(EdgeId, EdgeId)> {
    let mut first = alloc::collections::BTreeMap::new();
    for (e, u, v) in g.edges() {
        match first.entry((u.min(v), u.max(v))) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(e);
            }
            alloc::collections::btree_map::Entry::Occupied(slot) => return Some((e, *slot.get())),
        }
    }
    None
}

fn next_series(g: &Graph) -> Option<[VertexId; 4]> {
    for x in g.vertices() {
        if g.degree(x) != 2 {
            continue;
        }
        let nbrs = g.neighbors(x);
        for (i, &y) in nbrs.iter().enumerate() {
            if g.degree(y) != 2 {
                continue;
            }
            let w = nbrs[1 - i];
            let z = g.neighbors(y).into_iter().find(|&t| t != x)?;
            return Some([w, x, y, z]);
        }
    }
    None
}

/// Exhaustive parallel and series reduction. Parallel reductions always run
/// first (deleting the larger id of each parallel pair), then the first
/// series path found scanning vertices in id order.
pub fn to_irreducible(g: &Graph) -> Result<(Graph, ReductionTrace)> {
    if !matching::is_matching_covered(g) {
        return Err(Error::pre("graph is not matching covered"));
    }
    let mut h = g.clone();
    let mut steps = Vec::new();
    loop {
        if let Some((removed, kept)) = next_parallel(&h) {
            h = parallel_reduce_once(&h, removed)?;
            steps.push(ReductionStep::Parallel { removed, kept });
            continue;
        }
        if let Some(path) = next_series(&h) {
            let removed = series_edges(&h, &path)?;
            let inserted = EdgeId(h.edge_bound());
            h = series_reduce_once(&h, &path)?;
            steps.push(ReductionStep::Series {
                path,
                removed,
                inserted,
            });
            continue;
        }
        break;
    }
    let k2_degenerate = h.order() == 2 && h.size() == 1;
    let trace = ReductionTrace {
        start: g.fingerprint(),
        end: h.fingerprint(),
        steps,
        k2_degenerate,
    };
    Ok((h, trace))
}

/// `G/v0`: contracts both edges at the degree-two vertex `v0`. The
/// contraction vertex reuses the smallest of the three ids; multiplicities
/// are kept.
pub fn bicontract(g: &Graph, v0: VertexId) -> Result<Graph> {
    let (v1, v2) = bicontraction_ends(g, v0)?;
    g.contract_shore(&[v0, v1, v2])
}

/// The two neighbours of a degree-two vertex with distinct neighbours.
pub fn bicontraction_ends(g: &Graph, v0: VertexId) -> Result<(VertexId, VertexId)> {
    if !g.has_vertex(v0) {
        return Err(Error::NoSuchVertex(v0));
    }
    if g.degree(v0) != 2 {
        return Err(Error::pre("bicontraction needs a vertex of degree two"));
    }
    let n = g.incident(v0);
    let (a, b) = (n[0].1, n[1].1);
    if a == b {
        return Err(Error::pre("bicontraction needs two distinct neighbours"));
    }
    Ok((a.min(b), a.max(b)))
}

/// Splits `v` into `v` (keeping the edges not in `part`) and a new vertex
/// `v2` (taking `part`), then joins both to a new vertex `v0`. Returns the
/// graph and `v0`.
pub fn bisplit(g: &Graph, v: VertexId, part: &[EdgeId]) -> Result<(Graph, VertexId)> {
    if !g.has_vertex(v) {
        return Err(Error::NoSuchVertex(v));
    }
    let part: BTreeSet<EdgeId> = part.iter().copied().collect();
    let incident: BTreeSet<EdgeId> = g.incident(v).iter().map(|&(e, _)| e).collect();
    if !part.is_subset(&incident) {
        return Err(Error::pre("partition must consist of edges at the split vertex"));
    }
    if part.len() < 2 || incident.len() - part.len() < 2 {
        return Err(Error::pre("both sides of the split need at least two edges"));
    }
    let mut h = g.clone();
    let v2 = h.add_vertex();
    for &e in &part {
        h.reattach(e, v, v2)?;
    }
    let v0 = h.add_vertex();
    h.add_edge(v0, v)?;
    h.add_edge(v0, v2)?;
    Ok((h, v0))
}

/// Bicontracts every vertex of degree two (with distinct neighbours), in id
/// order, until none is left.
pub fn retract(h: &Graph) -> Result<Graph> {
    let mut g = h.clone();
    loop {
        let next = g
            .vertices()
            .find(|&v| g.degree(v) == 2 && bicontraction_ends(&g, v).is_ok());
        let Some(v) = next else { break };
        g = bicontract(&g, v)?;
    }
    Ok(g)
}

fn require_simple_brick(g: &Graph) -> Result<()> {
    if !g.is_simple() || !matching::is_matching_covered(g) || !decomposition::is_brick(g)? {
        return Err(Error::pre("input must be a simple brick"));
    }
    Ok(())
}

/// Removable edges, each with its retract.
fn removable_with_retracts(g: &Graph) -> Result<Vec<(EdgeId, Graph)>> {
    require_simple_brick(g)?;
    matching::removable_edges(g)?
        .into_iter()
        .map(|e| Ok((e, retract(&g.without_edges(&[e]))?)))
        .collect()
}

/// Removable edges whose retract is a brick.
pub fn thin_edges(g: &Graph) -> Result<Vec<EdgeId>> {
    let mut out = Vec::new();
    for (e, j) in removable_with_retracts(g)? {
        if decomposition::is_brick(&j)? {
            out.push(e);
        }
    }
    Ok(out)
}

/// Thin edges whose retract is also simple.
pub fn strictly_thin_edges(g: &Graph) -> Result<Vec<EdgeId>> {
    let mut out = Vec::new();
    for (e, j) in removable_with_retracts(g)? {
        if j.is_simple() && decomposition::is_brick(&j)? {
            out.push(e);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::iso::is_isomorphic;
    use alloc::vec;

    #[test]
    fn parallel() {
        let mut g = catalog::k2();
        g.add_edge(0, 1).unwrap();
        let h = parallel_reduce_once(&g, EdgeId(1)).unwrap();
        assert_eq!(h, catalog::k2());
        assert!(parallel_reduce_once(&catalog::cycle(4), EdgeId(0)).is_err());
    }

    #[test]
    fn series() {
        let c6 = catalog::cycle(6);
        let c4 = series_reduce_once(&c6, &[0, 1, 2, 3]).unwrap();
        assert!(is_isomorphic(&c4, &catalog::cycle(4)).unwrap());
        let c2 = series_reduce_once(&catalog::cycle(4), &[0, 1, 2, 3]).unwrap();
        assert_eq!((c2.order(), c2.size(), c2.multiplicity(0, 3)), (2, 2, 2));
        assert!(series_reduce_once(&catalog::k4(), &[0, 1, 2, 3]).is_err());
        let cube = catalog::cube();
        let sub = catalog::subdivide(&cube, EdgeId(0), 2);
        assert_eq!(sub.order(), 10);
        let (back, trace) = to_irreducible(&sub).unwrap();
        assert!(is_isomorphic(&back, &cube).unwrap());
        assert_eq!(trace.steps.len(), 1);
    }

    #[test]
    fn even_cycles_collapse_to_k2() {
        for n in [4, 6, 8] {
            let (h, trace) = to_irreducible(&catalog::cycle(n)).unwrap();
            assert!(trace.k2_degenerate);
            assert_eq!((h.order(), h.size()), (2, 1));
            assert_eq!(trace.replay(&catalog::cycle(n)).unwrap(), h);
        }
    }

    #[test]
    fn irreducible_graphs_are_fixed() {
        for g in [catalog::w5_minus(), catalog::k4(), catalog::r8_minus(), catalog::k2()] {
            let (h, trace) = to_irreducible(&g).unwrap();
            assert!(trace.steps.is_empty());
            assert_eq!(h, g);
            assert!(is_irreducible(&h));
        }
    }

    #[test]
    fn bisubdivided_k4_reduces_to_k4() {
        let g = catalog::subdivide(&catalog::subdivide(&catalog::k4(), EdgeId(0), 2), EdgeId(1), 2);
        let (h, trace) = to_irreducible(&g).unwrap();
        assert!(is_isomorphic(&h, &catalog::k4()).unwrap());
        assert!(!trace.k2_degenerate);
        let json = serde_json::to_string(&trace).unwrap();
        assert!(json.contains("\"kind\":\"series\""));
    }

    #[test]
    fn bicontraction() {
        let c2 = bicontract(&catalog::cycle(4), 1).unwrap();
        assert_eq!((c2.order(), c2.size()), (2, 2));
        let c4 = bicontract(&catalog::cycle(6), 3).unwrap();
        assert!(is_isomorphic(&c4, &catalog::cycle(4)).unwrap());
        assert!(bicontract(&catalog::k4(), 0).is_err());
    }

    #[test]
    fn bisplit_round_trip() {
        let w5 = catalog::wheel(5);
        let hub: Vec<EdgeId> = w5.incident(0).iter().map(|&(e, _)| e).collect();
        let (g, v0) = bisplit(&w5, 0, &hub[..2]).unwrap();
        assert_eq!(g.order(), 8);
        assert!(is_isomorphic(&bicontract(&g, v0).unwrap(), &w5).unwrap());
        assert!(bisplit(&catalog::k4(), 0, &[EdgeId(0)]).is_err());
    }

    #[test]
    fn r8_retract_is_k4_with_multiple_edges() {
        let g = catalog::r8();
        let j = retract(&g.without_edges(&[catalog::R8_REMOVABLE])).unwrap();
        assert!(!j.is_simple());
        assert!(is_isomorphic(&j.underlying_simple(), &catalog::k4()).unwrap());
        assert_eq!(thin_edges(&g).unwrap(), vec![catalog::R8_REMOVABLE]);
        assert!(strictly_thin_edges(&g).unwrap().is_empty());
    }

    #[test]
    fn r10_strictly_thin_edges() {
        let g = catalog::r10();
        let st = strictly_thin_edges(&g).unwrap();
        assert_eq!(st, catalog::R10_STRICTLY_THIN.to_vec());
        for e in st {
            let j = retract(&g.without_edges(&[e])).unwrap();
            assert!(is_isomorphic(&j, &catalog::wheel(5)).unwrap());
        }
    }

    #[test]
    fn petersen_has_no_thin_edges() {
        let p = catalog::petersen();
        let j = retract(&p.without_edges(&[EdgeId(0)])).unwrap();
        assert_eq!(j.order(), 6);
        assert_eq!(decomposition::brick_count(&j).unwrap(), 2);
        assert!(thin_edges(&p).unwrap().is_empty());
    }
}
