//! K2,3 bisubdivisions, mixed and osculating bicycles, and isolating
//! cycles.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::cycles::{self, CycleWitness, Parity};
use crate::dense::{self, Dense};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::limits;
use crate::reduction;

/// Three internally disjoint even `u`-`v` paths: a bisubdivision of K2,3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K23Witness {
    pub u: VertexId,
    pub v: VertexId,
    pub paths: [Vec<VertexId>; 3],
}

impl K23Witness {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut interiors = BTreeSet::new();
        for p in &self.paths {
            if p.len() < 3 || p.len() % 2 == 0 || p[0] != self.u || p[p.len() - 1] != self.v {
                return false;
            }
            if p.windows(2).any(|w| g.multiplicity(w[0], w[1]) == 0) {
                return false;
            }
            for &x in &p[1..p.len() - 1] {
                if x == self.u || x == self.v || !interiors.insert(x) {
                    return false;
                }
            }
        }
        self.u != self.v
    }
}

/// A bisubdivision of K2,3 in `g`, if there is one. Pairs `u < v` are tried
/// in order; for each, paths are found by backtracking with their first
/// interior vertices increasing.
pub fn find_k23_bisubdivision(g: &Graph) -> Result<Option<K23Witness>> {
    limits::check_desk(g.order())?;
    let d = Dense::new(g)?;
    for u in 0..d.n {
        for v in u + 1..d.n {
            let mut found = Vec::new();
            if k23_paths(&d, u, v, (1 << u) | (1 << v), 0, &mut found) {
                let paths = found
                    .into_iter()
                    .map(|p: Vec<usize>| p.into_iter().map(|i| d.ids[i]).collect())
                    .collect::<Vec<_>>();
                let paths: [Vec<VertexId>; 3] = paths.try_into().expect("three paths");
                return Ok(Some(K23Witness {
                    u: d.ids[u],
                    v: d.ids[v],
                    paths,
                }));
            }
        }
    }
    Ok(None)
}

fn k23_paths(d: &Dense, u: usize, v: usize, used: u64, min_first: usize, found: &mut Vec<Vec<usize>>) -> bool {
    if found.len() == 3 {
        return true;
    }
    for w in dense::bits(d.adj[u] & !used) {
        if w < min_first {
            continue;
        }
        let mut path = alloc::vec![u, w];
        if extend_even(d, v, used | (1 << w), &mut path, found) {
            return true;
        }
    }
    false
}

fn extend_even(d: &Dense, v: usize, used: u64, path: &mut Vec<usize>, found: &mut Vec<Vec<usize>>) -> bool {
    let x = *path.last().expect("nonempty");
    // `path` has `len - 1` edges; closing adds one more.
    if d.adj[x] & (1 << v) != 0 && path.len().is_multiple_of(2) {
        let mut closed = path.clone();
        closed.push(v);
        let first = closed[1];
        found.push(closed);
        if k23_paths(d, path[0], v, used, first + 1, found) {
            return true;
        }
        found.pop();
    }
    for y in dense::bits(d.adj[x] & !used) {
        path.push(y);
        let ok = extend_even(d, v, used | (1 << y), path, found);
        path.pop();
        if ok {
            return true;
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BicycleKind {
    Mixed,
    OddOsculating,
    EvenOsculating,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicycleWitness {
    pub first: CycleWitness,
    pub second: CycleWitness,
    pub kind: BicycleKind,
}

impl BicycleWitness {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        if !self.first.is_valid_in(g) || !self.second.is_valid_in(g) {
            return false;
        }
        let a = self.first.vertex_set();
        let b = self.second.vertex_set();
        let common = a.intersection(&b).count();
        let (p, q) = (self.first.len() % 2, self.second.len() % 2);
        match self.kind {
            BicycleKind::Mixed => common == 0 && p == 1 && q == 0 && self.second.len() >= 4,
            BicycleKind::OddOsculating => common == 1 && p == 1 && q == 1,
            BicycleKind::EvenOsculating => common == 1 && p == 0 && q == 0,
        }
    }
}

fn masked_cycles(g: &Graph) -> Result<Vec<(CycleWitness, u64)>> {
    let d = Dense::new(g)?;
    let cap = limits::cycle_cap();
    let mut out = Vec::new();
    let flow = cycles::for_each_cycle(&d, Parity::Any, |p, e, mask| {
        if out.len() >= cap {
            return ControlFlow::Break(());
        }
        out.push((cycles::witness(&d, p, e), mask));
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(Error::CycleCapExceeded(cap));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// A vertex-disjoint pair of an odd cycle and an even cycle of length at
/// least four, first in canonical cycle order.
pub fn find_mixed_bicycle(g: &Graph) -> Result<Option<BicycleWitness>> {
    limits::check_desk(g.order())?;
    let all = masked_cycles(g)?;
    let odd: Vec<_> = all.iter().filter(|c| c.0.len() % 2 == 1).collect();
    let even: Vec<_> = all.iter().filter(|c| c.0.len() % 2 == 0 && c.0.len() >= 4).collect();
    for o in &odd {
        if let Some(e) = even.iter().find(|e| e.1 & o.1 == 0) {
            return Ok(Some(BicycleWitness {
                first: o.0.clone(),
                second: e.0.clone(),
                kind: BicycleKind::Mixed,
            }));
        }
    }
    Ok(None)
}

/// Two cycles of the requested parity meeting exactly at `at`, the first
/// containing every edge of `required.0` and the second every edge of
/// `required.1`. `Parity::Any` accepts either parity as long as both agree.
pub fn find_osculating_bicycle(
    g: &Graph,
    at: VertexId,
    parity: Parity,
    required: (&[EdgeId], &[EdgeId]),
) -> Result<Option<BicycleWitness>> {
    limits::check_desk(g.order())?;
    if !g.has_vertex(at) {
        return Err(Error::NoSuchVertex(at));
    }
    let d = Dense::new(g)?;
    let bit = 1u64 << d.index[at];
    let through: Vec<_> = masked_cycles(g)?
        .into_iter()
        .filter(|c| c.1 & bit != 0 && parity_admits(parity, c.0.len()))
        .collect();
    let has_all = |c: &CycleWitness, req: &[EdgeId]| req.iter().all(|&e| c.contains_edge(e));
    for q in through.iter().filter(|c| has_all(&c.0, required.0)) {
        let partner = through
            .iter()
            .find(|r| r.1 & q.1 == bit && r.0.len() % 2 == q.0.len() % 2 && has_all(&r.0, required.1));
        if let Some(r) = partner {
            let kind = if q.0.len() % 2 == 1 {
                BicycleKind::OddOsculating
            } else {
                BicycleKind::EvenOsculating
            };
            return Ok(Some(BicycleWitness {
                first: q.0.clone(),
                second: r.0.clone(),
                kind,
            }));
        }
    }
    Ok(None)
}

fn parity_admits(p: Parity, len: usize) -> bool {
    match p {
        Parity::Any => true,
        Parity::Even => len.is_multiple_of(2),
        Parity::Odd => len % 2 == 1,
    }
}

/// Does the cycle contain every neighbour of `v`? `v` must avoid it.
pub fn is_v_isolating(g: &Graph, c: &CycleWitness, v: VertexId) -> Result<bool> {
    if !g.has_vertex(v) {
        return Err(Error::NoSuchVertex(v));
    }
    if c.contains_vertex(v) {
        return Err(Error::pre("vertex lies on the cycle"));
    }
    Ok(g.neighbors(v).iter().all(|&u| c.contains_vertex(u)))
}

/// Looks for an osculating bicycle of `G/x0` at the contraction vertex whose
/// cycles both pass from the side of one neighbour of `x0` to the other, so
/// that neither is a cycle of `G`. Returns their union, an `x0`-isolating
/// even cycle of `G`.
pub fn check_osculating_transfer(g: &Graph, x0: VertexId) -> Result<Option<CycleWitness>> {
    let (x1, x2) = reduction::bicontraction_ends(g, x0)?;
    let j = reduction::bicontract(g, x0)?;
    let x = x0.min(x1);
    let side1: BTreeSet<EdgeId> = g.incident(x1).iter().map(|&(e, _)| e).collect();
    let side2: BTreeSet<EdgeId> = g.incident(x2).iter().map(|&(e, _)| e).collect();
    let d = Dense::new(&j)?;
    let bit = 1u64 << d.index[x];
    let crossing = |c: &CycleWitness| {
        let at: Vec<EdgeId> = c
            .edges
            .iter()
            .copied()
            .filter(|e| side1.contains(e) || side2.contains(e))
            .collect();
        at.len() == 2 && at.iter().filter(|e| side1.contains(e)).count() == 1
    };
    let through: Vec<_> = masked_cycles(&j)?
        .into_iter()
        .filter(|c| c.1 & bit != 0 && crossing(&c.0))
        .collect();
    for (i, q) in through.iter().enumerate() {
        for r in &through[i + 1..] {
            if r.1 & q.1 == bit && r.0.len() % 2 == q.0.len() % 2 {
                let edges: Vec<EdgeId> = q.0.edges.iter().chain(&r.0.edges).copied().collect();
                let c = CycleWitness::from_edge_set(g, &edges)?;
                if !c.even || !is_v_isolating(g, &c, x0)? {
                    return Err(Error::internal("osculating transfer produced a bad cycle"));
                }
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

/// Independent K2,3 search used to cross-check [`find_k23_bisubdivision`]:
/// lists every even path between each pair, then looks for three with
/// disjoint interiors. Exponential; only for small graphs.
pub fn k23_by_path_triples(g: &Graph) -> Result<bool> {
    let d = Dense::new(g)?;
    for u in 0..d.n {
        for v in u + 1..d.n {
            let mut interiors = Vec::new();
            all_paths(&d, v, u, 1 << u, 0, &mut interiors);
            for m in interiors.iter_mut() {
                *m &= !(1 << u);
            }
            for i in 0..interiors.len() {
                for j in i + 1..interiors.len() {
                    if interiors[i] & interiors[j] != 0 {
                        continue;
                    }
                    for k in j + 1..interiors.len() {
                        if interiors[k] & (interiors[i] | interiors[j]) == 0 {
                            return Ok(true);
                        }
                    }
                }
            }
        }
    }
    Ok(false)
}

fn all_paths(d: &Dense, v: usize, x: usize, used: u64, edges: usize, out: &mut Vec<u64>) {
    for y in dense::bits(d.adj[x] & !used) {
        if y == v {
            if (edges + 1).is_multiple_of(2) && edges >= 1 {
                out.push(used);
            }
            continue;
        }
        all_paths(d, v, y, used | (1 << y), edges + 1, out);
    }
}
