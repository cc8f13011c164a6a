//! Perfect matchings, conformality and the brute-force cycle-extendability
//! oracle, plus removable edges, doubletons and double ears.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::cycles::{self, CycleWitness, Parity};
use crate::dense::{self, Dense};
use crate::ear::Ear;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::limits;

/// Every perfect matching of a graph, each as a sorted list of edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectMatchingSet {
    pub matchings: Vec<Vec<EdgeId>>,
    pub fingerprint: u64,
}

impl PerfectMatchingSet {
    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    pub fn matches(&self, g: &Graph) -> bool {
        self.fingerprint == g.fingerprint()
    }

    /// Edges that lie in at least one of the matchings.
    pub fn covered_edges(&self) -> BTreeSet<EdgeId> {
        self.matchings.iter().flatten().copied().collect()
    }
}

pub fn enumerate_perfect_matchings(g: &Graph) -> Result<PerfectMatchingSet> {
    limits::check_desk(g.order())?;
    let d = Dense::new(g)?;
    let mut found = Vec::new();
    let mut current = Vec::new();
    if d.n % 2 == 0 {
        pm_rec(&d, d.full_mask(), &mut current, &mut found);
    }
    let mut matchings: Vec<Vec<EdgeId>> = found
        .into_iter()
        .map(|m: Vec<usize>| {
            let mut ids: Vec<EdgeId> = m.into_iter().map(|p| d.edge_ids[p]).collect();
            ids.sort_unstable();
            ids
        })
        .collect();
    matchings.sort();
    Ok(PerfectMatchingSet {
        matchings,
        fingerprint: g.fingerprint(),
    })
}

fn pm_rec(d: &Dense, mask: u64, current: &mut Vec<usize>, found: &mut Vec<Vec<usize>>) {
    if mask == 0 {
        found.push(current.clone());
        return;
    }
    let mut best = usize::MAX;
    let mut best_deg = u32::MAX;
    for v in dense::bits(mask) {
        let deg = (d.adj[v] & mask).count_ones();
        if deg < best_deg {
            best_deg = deg;
            best = v;
        }
    }
    if best_deg == 0 {
        return;
    }
    for &(p, u) in &d.inc[best] {
        if mask & (1 << u) != 0 {
            current.push(p);
            pm_rec(d, mask & !(1 << best) & !(1 << u), current, found);
            current.pop();
        }
    }
}

/// Does `g` have a perfect matching? The empty graph does.
pub fn is_matchable(g: &Graph) -> bool {
    match Dense::new(g) {
        Ok(d) => dense::matchable(&d.adj, d.full_mask()),
        Err(_) => generic_matchable(g),
    }
}

/// Plain backtracking for graphs beyond the bitmask width.
fn generic_matchable(g: &Graph) -> bool {
    fn rec(g: &Graph, covered: &mut [bool], remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let mut best = None;
        let mut best_deg = usize::MAX;
        for v in g.vertices().filter(|&v| !covered[v]) {
            let deg = g.neighbors(v).into_iter().filter(|&u| !covered[u]).count();
            if deg < best_deg {
                best_deg = deg;
                best = Some(v);
            }
        }
        let v = best.expect("some vertex is uncovered");
        if best_deg == 0 {
            return false;
        }
        covered[v] = true;
        for u in g.neighbors(v) {
            if !covered[u] {
                covered[u] = true;
                if rec(g, covered, remaining - 2) {
                    return true;
                }
                covered[u] = false;
            }
        }
        covered[v] = false;
        false
    }
    if g.order() % 2 == 1 {
        return false;
    }
    let mut covered = vec![false; g.vertex_bound()];
    rec(g, &mut covered, g.order())
}

/// Matching covered on the vertex set `vmask` with simple adjacency `adj`
/// (already restricted to the edges under consideration): at least two
/// vertices, connected, and every edge in some perfect matching.
pub(crate) fn mcg_masks(adj: &[u64], vmask: u64) -> bool {
    if vmask.count_ones() < 2 || vmask.count_ones() % 2 == 1 {
        return false;
    }
    if !dense::connected_within(adj, vmask) {
        return false;
    }
    for a in dense::bits(vmask) {
        for b in dense::bits(adj[a] & vmask) {
            if a < b && !dense::matchable(adj, vmask & !(1 << a) & !(1 << b)) {
                return false;
            }
        }
    }
    true
}

pub fn is_matching_covered(g: &Graph) -> bool {
    match Dense::new(g) {
        Ok(d) => mcg_masks(&d.adj, d.full_mask()),
        Err(_) => {
            g.order() >= 2
                && g.is_connected()
                && g.edges()
                    .all(|(_, u, v)| generic_matchable(&g.without_vertices(&[u, v])))
        }
    }
}

/// Is the subgraph spanned by `h` conformal, i.e. is `G - h` matchable?
pub fn is_conformal_subgraph(g: &Graph, h: &[VertexId]) -> bool {
    is_matchable(&g.without_vertices(h))
}

/// Conformality by the other characterisation: an even cycle is conformal
/// iff some perfect matching contains one of its two alternating halves.
pub fn is_conformal_by_matchings(pms: &PerfectMatchingSet, c: &CycleWitness) -> bool {
    if !c.even {
        return false;
    }
    let half = |parity: usize| -> Vec<EdgeId> {
        c.edges
            .iter()
            .enumerate()
            .filter(|(i, _)| i % 2 == parity)
            .map(|(_, &e)| e)
            .collect()
    };
    let (a, b) = (half(0), half(1));
    pms.matchings.iter().any(|m| {
        let set: BTreeSet<EdgeId> = m.iter().copied().collect();
        a.iter().all(|e| set.contains(e)) || b.iter().all(|e| set.contains(e))
    })
}

pub fn enumerate_even_cycles(g: &Graph) -> Result<Vec<CycleWitness>> {
    cycles::enumerate_cycles(g, Parity::Even)
}

/// Outcome of the exhaustive oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "witness")]
pub enum OracleVerdict {
    #[serde(rename = "CE")]
    CycleExtendable,
    #[serde(rename = "NotCE")]
    NotCycleExtendable(CycleWitness),
}

impl OracleVerdict {
    pub fn is_ce(&self) -> bool {
        matches!(self, OracleVerdict::CycleExtendable)
    }
}

/// Every non-conformal even cycle of `g`, in canonical cycle order.
pub fn nonconformal_even_cycles(g: &Graph) -> Result<Vec<CycleWitness>> {
    limits::check_desk(g.order())?;
    let d = Dense::new(g)?;
    let full = d.full_mask();
    let cap = limits::cycle_cap();
    let mut seen = 0usize;
    let mut memo: BTreeMap<u64, bool> = BTreeMap::new();
    let mut bad = Vec::new();
    let flow = cycles::for_each_cycle(&d, Parity::Even, |p, e, mask| {
        seen += 1;
        if seen > cap {
            return ControlFlow::Break(());
        }
        let ok = *memo
            .entry(mask)
            .or_insert_with(|| dense::matchable(&d.adj, full & !mask));
        if !ok {
            bad.push(cycles::witness(&d, p, e));
        }
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(Error::CycleCapExceeded(cap));
    }
    cycles::sort_cycles(&mut bad);
    Ok(bad)
}

/// Decides cycle-extendability by checking every even cycle.
pub fn brute_force_cycle_extendable(g: &Graph) -> Result<OracleVerdict> {
    if !is_matching_covered(g) {
        return Err(Error::pre("graph is not matching covered"));
    }
    Ok(match nonconformal_even_cycles(g)?.into_iter().next() {
        Some(c) => OracleVerdict::NotCycleExtendable(c),
        None => OracleVerdict::CycleExtendable,
    })
}

pub fn count_nonconformal_even_cycles(g: &Graph) -> Result<usize> {
    if !is_matching_covered(g) {
        return Err(Error::pre("graph is not matching covered"));
    }
    Ok(nonconformal_even_cycles(g)?.len())
}

/// A conformal cycle through both `e` and `f`; the first one in canonical
/// cycle order.
pub fn conformal_cycle_through(g: &Graph, e: EdgeId, f: EdgeId) -> Result<CycleWitness> {
    if e == f {
        return Err(Error::pre("edges must be distinct"));
    }
    if !g.has_edge(e) {
        return Err(Error::NoSuchEdge(e));
    }
    if !g.has_edge(f) {
        return Err(Error::NoSuchEdge(f));
    }
    if !is_matching_covered(g) {
        return Err(Error::pre("graph is not matching covered"));
    }
    limits::check_desk(g.order())?;
    let d = Dense::new(g)?;
    let (pe, pf) = (d.edge_index[e.0], d.edge_index[f.0]);
    let full = d.full_mask();
    let mut found: Vec<CycleWitness> = Vec::new();
    let _ = cycles::for_each_cycle(&d, Parity::Even, |p, es, mask| {
        if es.contains(&pe) && es.contains(&pf) && dense::matchable(&d.adj, full & !mask) {
            found.push(cycles::witness(&d, p, es));
        }
        ControlFlow::Continue(())
    });
    cycles::sort_cycles(&mut found);
    found
        .into_iter()
        .next()
        .ok_or_else(|| Error::internal("no conformal cycle through two edges"))
}

/// Edges whose deletion leaves a matching covered graph.
pub fn removable_edges(g: &Graph) -> Result<Vec<EdgeId>> {
    limits::check_desk(g.order())?;
    let mut out = Vec::new();
    for e in g.edge_ids() {
        if is_matching_covered(&g.without_edges(&[e])) {
            out.push(e);
        }
    }
    Ok(out)
}

/// Pairs of non-removable edges whose joint deletion leaves a matching
/// covered graph. Pairs are ordered `(smaller id, larger id)`.
pub fn removable_doubletons(g: &Graph) -> Result<Vec<(EdgeId, EdgeId)>> {
    let removable: BTreeSet<EdgeId> = removable_edges(g)?.into_iter().collect();
    let fixed: Vec<EdgeId> = g.edge_ids().into_iter().filter(|e| !removable.contains(e)).collect();
    let mut out = Vec::new();
    for (i, &a) in fixed.iter().enumerate() {
        for &b in &fixed[i + 1..] {
            if is_matching_covered(&g.without_edges(&[a, b])) {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

/// Maximal odd paths whose interior vertices have degree two and whose ends
/// have degree at least three. Each is reported once, starting at its
/// smaller end (ties broken by the first edge id).
pub fn bare_odd_paths(g: &Graph) -> Vec<Ear> {
    let mut out = Vec::new();
    let mut seen: BTreeSet<EdgeId> = BTreeSet::new();
    for s in g.vertices().filter(|&v| g.degree(v) >= 3) {
        for &(e0, u0) in g.incident(s) {
            if seen.contains(&e0) {
                continue;
            }
            let mut vertices = vec![s];
            let mut edges = vec![e0];
            let mut prev_edge = e0;
            let mut cur = u0;
            while g.degree(cur) == 2 && cur != s {
                vertices.push(cur);
                let &(e, next) = g
                    .incident(cur)
                    .iter()
                    .find(|&&(f, _)| f != prev_edge)
                    .expect("degree two");
                edges.push(e);
                prev_edge = e;
                cur = next;
            }
            vertices.push(cur);
            seen.insert(e0);
            seen.insert(prev_edge);
            if cur == s || edges.len() % 2 == 0 {
                continue;
            }
            let ear = Ear { vertices, edges };
            out.push(ear.canonical());
        }
    }
    out.sort();
    out
}

/// Deletes the edges and interior vertices of each ear.
pub fn remove_ears(g: &Graph, ears: &[&Ear]) -> Graph {
    let mut h = g.clone();
    for ear in ears {
        for &e in &ear.edges {
            if h.has_edge(e) {
                h.remove_edge(e).expect("live edge");
            }
        }
        for &v in ear.interior() {
            if h.has_vertex(v) {
                h.remove_vertex(v).expect("live vertex");
            }
        }
    }
    h
}

/// Odd paths with degree-two interior whose deletion leaves a matching
/// covered graph. Besides bare paths this includes, for an even cycle, the
/// complement of any one edge (leaving `K2`).
pub fn removable_single_ears(g: &Graph) -> Result<Vec<Ear>> {
    limits::check_desk(g.order())?;
    let mut out: Vec<Ear> = bare_odd_paths(g)
        .into_iter()
        .filter(|p| is_matching_covered(&remove_ears(g, &[p])))
        .collect();
    if g.is_connected() && g.order() >= 4 && g.order().is_multiple_of(2) && g.vertices().all(|v| g.degree(v) == 2) {
        let c = cycles::enumerate_cycles(g, Parity::Any)?;
        if let Some(c) = c.first() {
            let k = c.len();
            for i in 0..k {
                let vertices: Vec<VertexId> = (0..k).map(|j| c.vertices[(i + 1 + j) % k]).collect();
                let edges: Vec<EdgeId> = (0..k - 1).map(|j| c.edges[(i + 1 + j) % k]).collect();
                out.push(Ear { vertices, edges }.canonical());
            }
        }
    }
    out.sort();
    Ok(out)
}

/// A pair of vertex-disjoint odd paths.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DoubleEar {
    pub first: Ear,
    pub second: Ear,
}

impl DoubleEar {
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self.first.edges.iter().chain(&self.second.edges).copied().collect();
        out.sort_unstable();
        out
    }

    pub fn remove_from(&self, g: &Graph) -> Graph {
        remove_ears(g, &[&self.first, &self.second])
    }
}

/// Removable double ears: vertex-disjoint odd paths with degree-two
/// interiors, neither removable on its own, whose joint deletion leaves a
/// matching covered graph.
pub fn removable_double_ears(g: &Graph) -> Result<Vec<DoubleEar>> {
    limits::check_desk(g.order())?;
    let paths = bare_odd_paths(g);
    let single: Vec<bool> = paths
        .iter()
        .map(|p| is_matching_covered(&remove_ears(g, &[p])))
        .collect();
    let mut out = Vec::new();
    for i in 0..paths.len() {
        if single[i] {
            continue;
        }
        for j in i + 1..paths.len() {
            if single[j] || !paths[i].is_disjoint(&paths[j]) {
                continue;
            }
            if is_matching_covered(&remove_ears(g, &[&paths[i], &paths[j]])) {
                out.push(DoubleEar {
                    first: paths[i].clone(),
                    second: paths[j].clone(),
                });
            }
        }
    }
    Ok(out)
}

/// A removable double ear whose deletion leaves a bipartite graph, if any.
pub fn is_near_bipartite(g: &Graph) -> Result<Option<DoubleEar>> {
    if !is_matching_covered(g) || g.is_bipartite() {
        return Ok(None);
    }
    Ok(removable_double_ears(g)?
        .into_iter()
        .find(|r| r.remove_from(g).is_bipartite()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn matching_counts() {
        assert_eq!(enumerate_perfect_matchings(&catalog::k4()).unwrap().len(), 3);
        assert_eq!(enumerate_perfect_matchings(&catalog::cycle(6)).unwrap().len(), 2);
        assert_eq!(enumerate_perfect_matchings(&catalog::cube()).unwrap().len(), 9);
        assert_eq!(
            enumerate_perfect_matchings(&catalog::two_triangle_cubic())
                .unwrap()
                .len(),
            6
        );
        assert_eq!(enumerate_perfect_matchings(&catalog::cycle(2)).unwrap().len(), 2);
        assert!(enumerate_perfect_matchings(&catalog::complete(5)).unwrap().is_empty());
    }

    #[test]
    fn matchability() {
        assert!(is_matchable(&catalog::k2()));
        assert!(!is_matchable(&catalog::complete(5)));
        assert!(is_matchable(&catalog::petersen().without_vertices(&[0, 1])));
        assert!(is_matchable(&Graph::new(0)));
    }

    #[test]
    fn matching_covered_examples() {
        assert!(is_matching_covered(&catalog::k2()));
        assert!(!is_matching_covered(&catalog::path(4)));
        assert!(is_matching_covered(&catalog::cube()));
        assert!(is_matching_covered(&catalog::cycle(2)));
        assert!(!is_matching_covered(&Graph::new(2)));
    }

    #[test]
    fn conformal_subgraphs() {
        assert!(is_conformal_subgraph(&catalog::cycle(4), &[0, 1, 2, 3]));
        assert!(is_conformal_subgraph(&catalog::cycle(6), &[0, 1]));
    }

    #[test]
    fn cube_oracle() {
        let cube = catalog::cube();
        let bad = nonconformal_even_cycles(&cube).unwrap();
        assert_eq!(bad.len(), 4);
        assert!(bad.iter().all(|c| c.len() == 6));
        let verdict = brute_force_cycle_extendable(&cube).unwrap();
        match verdict {
            OracleVerdict::NotCycleExtendable(c) => {
                assert_eq!(c, bad[0]);
                assert!(!is_conformal_subgraph(&cube, &c.vertices));
            }
            OracleVerdict::CycleExtendable => panic!("cube is not cycle-extendable"),
        }
    }

    #[test]
    fn small_oracle_verdicts() {
        assert!(brute_force_cycle_extendable(&catalog::cycle(4)).unwrap().is_ce());
        assert!(brute_force_cycle_extendable(&catalog::w5_minus()).unwrap().is_ce());
        assert!(brute_force_cycle_extendable(&catalog::k2()).unwrap().is_ce());
        assert_eq!(count_nonconformal_even_cycles(&catalog::cycle(6)).unwrap(), 0);
        assert!(brute_force_cycle_extendable(&catalog::path(4)).is_err());
    }

    #[test]
    fn pentagonal_prism_minus_edge_has_one_bad_cycle() {
        let g = catalog::pentagonal_prism_minus_edge();
        assert_eq!(enumerate_even_cycles(&g).unwrap().len(), 12);
        assert_eq!(count_nonconformal_even_cycles(&g).unwrap(), 1);
    }

    #[test]
    fn conformal_cycles_through_pairs() {
        let c4 = catalog::cycle(4);
        let c = conformal_cycle_through(&c4, EdgeId(0), EdgeId(2)).unwrap();
        assert_eq!(c.len(), 4);
        let k4 = catalog::k4();
        // Edges 0 = 01 and 5 = 23 are disjoint.
        let c = conformal_cycle_through(&k4, EdgeId(0), EdgeId(5)).unwrap();
        assert_eq!(c.len(), 4);
        let p = catalog::petersen();
        // Edges 01 and 23 of the outer cycle are at distance 2.
        let c = conformal_cycle_through(&p, EdgeId(0), EdgeId(6)).unwrap();
        assert!(c.contains_edge(EdgeId(0)) && c.contains_edge(EdgeId(6)));
        assert!(is_conformal_subgraph(&p, &c.vertices));
    }

    #[test]
    fn removable_edges_of_r8_and_prism() {
        assert_eq!(removable_edges(&catalog::r8()).unwrap(), vec![catalog::R8_REMOVABLE]);
        let prism = catalog::prism(3);
        assert!(removable_edges(&prism).unwrap().is_empty());
        let doubletons = removable_doubletons(&prism).unwrap();
        // {w_i w_{i+1}, z_i z_{i+1}}: edge 3i joins w_i w_{i+1}, 3i+1 joins z_i z_{i+1}.
        let expected: Vec<(EdgeId, EdgeId)> = (0..3).map(|i| (EdgeId(3 * i), EdgeId(3 * i + 1))).collect();
        assert_eq!(doubletons, expected);
    }

    #[test]
    fn r8_minus_doubleton_and_near_bipartite() {
        let g = catalog::r8_minus();
        let doubletons = removable_doubletons(&g).unwrap();
        assert!(doubletons.contains(&(EdgeId(9), EdgeId(10))));
        let r = is_near_bipartite(&g).unwrap().expect("near-bipartite");
        assert!(r.remove_from(&g).is_bipartite());
    }

    #[test]
    fn wheels_are_not_near_bipartite() {
        assert!(is_near_bipartite(&catalog::wheel(5)).unwrap().is_none());
        assert!(removable_double_ears(&catalog::cycle(4)).unwrap().is_empty());
    }

    #[test]
    fn even_cycle_single_ears() {
        let ears = removable_single_ears(&catalog::cycle(4)).unwrap();
        assert_eq!(ears.len(), 4);
        assert!(ears.iter().all(|e| e.len() == 3));
    }
}
