//! Cycle witnesses and exhaustive cycle enumeration.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::dense::Dense;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::limits;

/// A cycle given as a closed vertex walk. Edge `edges[i]` joins
/// `vertices[i]` and `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CycleWitness {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub even: bool,
}

impl CycleWitness {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Self {
        let even = edges.len().is_multiple_of(2);
        CycleWitness { vertices, edges, even }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices.iter().copied().collect()
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.edges.iter().copied().collect()
    }

    /// Is this a genuine cycle of `g`: distinct vertices, length at least two,
    /// consecutive vertices joined by the listed edges, parity flag correct?
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        if k < 2 || self.edges.len() != k || self.even != k.is_multiple_of(2) {
            return false;
        }
        if self.vertex_set().len() != k || self.edge_set().len() != k {
            return false;
        }
        (0..k).all(|i| {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
            match g.endpoints(self.edges[i]) {
                Some((u, v)) => (u, v) == (a, b) || (u, v) == (b, a),
                None => false,
            }
        })
    }

    /// Builds a witness from an edge set that forms a single cycle in `g`.
    pub fn from_edge_set(g: &Graph, edges: &[EdgeId]) -> Result<CycleWitness> {
        if edges.len() < 2 {
            return Err(Error::pre("a cycle needs at least two edges"));
        }
        let mut ends = Vec::with_capacity(edges.len());
        for &e in edges {
            ends.push(g.endpoints(e).ok_or(Error::NoSuchEdge(e))?);
        }
        let start = ends.iter().map(|&(u, v)| u.min(v)).min().expect("nonempty");
        let mut used = vec![false; edges.len()];
        let mut vertices = vec![start];
        let mut order = Vec::with_capacity(edges.len());
        let mut cur = start;
        for _ in 0..edges.len() {
            // Among unused edges at `cur`, take the smallest id; on the first
            // step this fixes a direction.
            let next = (0..edges.len())
                .filter(|&i| !used[i] && (ends[i].0 == cur || ends[i].1 == cur))
                .min_by_key(|&i| edges[i]);
            let Some(i) = next else {
                return Err(Error::pre("edge set is not a cycle"));
            };
            used[i] = true;
            order.push(edges[i]);
            cur = if ends[i].0 == cur { ends[i].1 } else { ends[i].0 };
            vertices.push(cur);
        }
        if cur != start {
            return Err(Error::pre("edge set is not a cycle"));
        }
        vertices.pop();
        let w = CycleWitness::new(vertices, order);
        if w.is_valid_in(g) {
            Ok(w)
        } else {
            Err(Error::pre("edge set is not a cycle"))
        }
    }

    fn sort_key(&self) -> (Vec<VertexId>, &[VertexId], &[EdgeId]) {
        let mut set = self.vertices.clone();
        set.sort_unstable();
        (set, &self.vertices, &self.edges)
    }
}

/// Which cycles to report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Any,
    Even,
    Odd,
}

impl Parity {
    fn admits(self, len: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Even => len.is_multiple_of(2),
            Parity::Odd => len % 2 == 1,
        }
    }
}

/// Walks every cycle of the dense view exactly once. The callback gets the
/// dense vertex sequence (starting at its smallest vertex), the edge
/// positions, and the vertex mask.
pub(crate) fn for_each_cycle<F>(d: &Dense, parity: Parity, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[usize], &[usize], u64) -> ControlFlow<()>,
{
    let mut path = Vec::with_capacity(d.n);
    let mut epath = Vec::with_capacity(d.n);
    for s in 0..d.n {
        path.clear();
        epath.clear();
        path.push(s);
        extend(d, s, 1u64 << s, parity, &mut path, &mut epath, &mut f)?;
    }
    ControlFlow::Continue(())
}

fn extend<F>(
    d: &Dense,
    s: usize,
    mask: u64,
    parity: Parity,
    path: &mut Vec<usize>,
    epath: &mut Vec<usize>,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize], &[usize], u64) -> ControlFlow<()>,
{
    let v = *path.last().expect("path starts at the anchor");
    for &(e, u) in &d.inc[v] {
        if u == s {
            // Close the cycle; each cycle is seen in two directions and we
            // keep the one whose first edge precedes its closing edge.
            if let Some(&first) = epath.first() {
                if first < e && parity.admits(epath.len() + 1) {
                    epath.push(e);
                    let r = f(path, epath, mask);
                    epath.pop();
                    r?;
                }
            }
        } else if u > s && mask & (1 << u) == 0 {
            path.push(u);
            epath.push(e);
            let r = extend(d, s, mask | (1 << u), parity, path, epath, f);
            path.pop();
            epath.pop();
            r?;
        }
    }
    ControlFlow::Continue(())
}

pub(crate) fn witness(d: &Dense, path: &[usize], epath: &[usize]) -> CycleWitness {
    CycleWitness::new(
        path.iter().map(|&i| d.ids[i]).collect(),
        epath.iter().map(|&p| d.edge_ids[p]).collect(),
    )
}

/// All cycles of `g` with the requested parity, in the canonical order:
/// sorted vertex set first, then vertex sequence, then edge ids. Each cycle
/// starts at its smallest vertex.
pub fn enumerate_cycles(g: &Graph, parity: Parity) -> Result<Vec<CycleWitness>> {
    enumerate_cycles_capped(g, parity, limits::cycle_cap())
}

/// [`enumerate_cycles`] with an explicit cycle-count cap.
pub fn enumerate_cycles_capped(g: &Graph, parity: Parity, cap: usize) -> Result<Vec<CycleWitness>> {
    limits::check_desk(g.order())?;
    let d = Dense::new(g)?;
    let mut out = Vec::new();
    let flow = for_each_cycle(&d, parity, |p, e, _| {
        if out.len() >= cap {
            return ControlFlow::Break(());
        }
        out.push(witness(&d, p, e));
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(Error::CycleCapExceeded(cap));
    }
    sort_cycles(&mut out);
    Ok(out)
}

pub(crate) fn sort_cycles(cycles: &mut [CycleWitness]) {
    cycles.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

/// Counts cycles by length; index `k` holds the number of `k`-cycles.
pub fn cycle_length_census(g: &Graph) -> Result<Vec<usize>> {
    limits::check_desk(g.order())?;
    let d = Dense::new(g)?;
    let cap = limits::cycle_cap();
    let mut census = vec![0usize; g.order() + 1];
    let mut total = 0usize;
    let flow = for_each_cycle(&d, Parity::Any, |_, e, _| {
        total += 1;
        if total > cap {
            return ControlFlow::Break(());
        }
        census[e.len()] += 1;
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(Error::CycleCapExceeded(cap));
    }
    Ok(census)
}
