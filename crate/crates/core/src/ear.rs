//! Ears and ear decompositions.
//!
//! The decomposition search is defined by its order: at every step single
//! ears are tried by increasing length and then by vertex sequence; double
//! ears (pairs of vertex-disjoint single ears) are tried only when no single
//! ear gives a matching covered conformal subgraph. The theorem guarantees
//! success, so the backtracking is a safety net rather than a working part.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::cycles::CycleWitness;
use crate::dense::{self, Dense};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::limits;
use crate::matching;

/// An odd path given by its vertex sequence; `edges[i]` joins `vertices[i]`
/// and `vertices[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Ear {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Ear {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn ends(&self) -> (VertexId, VertexId) {
        (self.vertices[0], *self.vertices.last().expect("nonempty path"))
    }

    pub fn interior(&self) -> &[VertexId] {
        let k = self.vertices.len();
        if k <= 2 {
            &[]
        } else {
            &self.vertices[1..k - 1]
        }
    }

    pub fn is_disjoint(&self, other: &Ear) -> bool {
        let mine: BTreeSet<VertexId> = self.vertices.iter().copied().collect();
        other.vertices.iter().all(|v| !mine.contains(v))
    }

    /// The same path read from its smaller end.
    pub fn canonical(mut self) -> Ear {
        let (a, b) = self.ends();
        let flip = b < a || (a == b && self.edges.last() < self.edges.first());
        if flip {
            self.vertices.reverse();
            self.edges.reverse();
        }
        self
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let k = self.edges.len();
        if k == 0 || self.vertices.len() != k + 1 {
            return false;
        }
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        if distinct.len() != k + 1 {
            return false;
        }
        (0..k).all(|i| match g.endpoints(self.edges[i]) {
            Some((u, v)) => {
                let (a, b) = (self.vertices[i], self.vertices[i + 1]);
                (u, v) == (a, b) || (u, v) == (b, a)
            }
            None => false,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum EarStep {
    Single { ear: Ear },
    Double { first: Ear, second: Ear },
}

impl EarStep {
    pub fn ears(&self) -> Vec<&Ear> {
        match self {
            EarStep::Single { ear } => vec![ear],
            EarStep::Double { first, second } => vec![first, second],
        }
    }

    pub fn is_double(&self) -> bool {
        matches!(self, EarStep::Double { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarDecomposition {
    pub start: CycleWitness,
    pub steps: Vec<EarStep>,
}

impl EarDecomposition {
    /// The subgraphs `G_0 ⊂ G_1 ⊂ … ⊂ G_r` as subgraphs of `g`.
    pub fn prefixes(&self, g: &Graph) -> Result<Vec<Graph>> {
        let mut vs: BTreeSet<VertexId> = self.start.vertices.iter().copied().collect();
        let mut es: BTreeSet<EdgeId> = self.start.edges.iter().copied().collect();
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let snapshot = |vs: &BTreeSet<VertexId>, es: &BTreeSet<EdgeId>| {
            let v: Vec<_> = vs.iter().copied().collect();
            let e: Vec<_> = es.iter().copied().collect();
            g.subgraph(&v, &e)
        };
        out.push(snapshot(&vs, &es)?);
        for step in &self.steps {
            for ear in step.ears() {
                vs.extend(ear.vertices.iter().copied());
                es.extend(ear.edges.iter().copied());
            }
            out.push(snapshot(&vs, &es)?);
        }
        Ok(out)
    }

    /// Checks every defining condition: the start is an even cycle, each
    /// step adds genuine ears of the previous subgraph, every prefix is
    /// matching covered and conformal, and the last prefix is `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if !self.start.even || !self.start.is_valid_in(g) {
            return Err(Error::pre("start is not an even cycle of the graph"));
        }
        let prefixes = self.prefixes(g)?;
        for (i, h) in prefixes.iter().enumerate() {
            if !matching::is_matching_covered(h) {
                return Err(Error::pre("prefix is not matching covered"));
            }
            let vs: Vec<VertexId> = h.vertices().collect();
            if !matching::is_conformal_subgraph(g, &vs) {
                return Err(Error::pre("prefix is not conformal"));
            }
            if i > 0 {
                let prev = &prefixes[i - 1];
                let ears = self.steps[i - 1].ears();
                if ears.len() == 2 && !ears[0].is_disjoint(ears[1]) {
                    return Err(Error::pre("double ear is not vertex-disjoint"));
                }
                for ear in ears {
                    let (a, b) = ear.ends();
                    let ok = ear.is_valid_in(g)
                        && ear.len() % 2 == 1
                        && prev.has_vertex(a)
                        && prev.has_vertex(b)
                        && ear.interior().iter().all(|&v| !prev.has_vertex(v))
                        && ear.edges.iter().all(|&e| !prev.has_edge(e));
                    if !ok {
                        return Err(Error::pre("step is not an ear of the previous subgraph"));
                    }
                }
            }
        }
        let last = prefixes.last().expect("at least the start");
        if last.order() != g.order() || last.size() != g.size() {
            return Err(Error::pre("decomposition does not reach the graph"));
        }
        Ok(())
    }

    pub fn double_ear_count(&self) -> usize {
        self.steps.iter().filter(|s| s.is_double()).count()
    }
}

struct State {
    vmask: u64,
    in_h: Vec<bool>,
    hadj: Vec<u64>,
    edges_left: usize,
}

/// A dense ear: vertex sequence and edge positions.
#[derive(Clone)]
struct DEar {
    path: Vec<usize>,
    edges: Vec<usize>,
}

struct Search<'a> {
    d: &'a Dense,
    full: u64,
}

impl Search<'_> {
    /// All ears of exactly `len` edges, in order of vertex sequence.
    fn ears_of_length(&self, st: &State, len: usize) -> Vec<DEar> {
        let mut out = Vec::new();
        for a in dense::bits(st.vmask) {
            let mut path = vec![a];
            let mut edges = Vec::new();
            self.walk(st, len, &mut path, &mut edges, 1 << a, &mut out);
        }
        out.sort_by(|x, y| (&x.path, &x.edges).cmp(&(&y.path, &y.edges)));
        out
    }

    fn walk(
        &self,
        st: &State,
        len: usize,
        path: &mut Vec<usize>,
        edges: &mut Vec<usize>,
        used: u64,
        out: &mut Vec<DEar>,
    ) {
        let v = *path.last().expect("nonempty");
        let a = path[0];
        for &(p, u) in &self.d.inc[v] {
            if st.in_h[p] || used & (1 << u) != 0 {
                continue;
            }
            let in_h = st.vmask & (1 << u) != 0;
            if edges.len() + 1 == len {
                if in_h && a < u {
                    path.push(u);
                    edges.push(p);
                    out.push(DEar {
                        path: path.clone(),
                        edges: edges.clone(),
                    });
                    path.pop();
                    edges.pop();
                }
            } else if !in_h {
                path.push(u);
                edges.push(p);
                self.walk(st, len, path, edges, used | (1 << u), out);
                path.pop();
                edges.pop();
            }
        }
    }

    fn apply(&self, st: &State, ears: &[&DEar]) -> State {
        let mut next = State {
            vmask: st.vmask,
            in_h: st.in_h.clone(),
            hadj: st.hadj.clone(),
            edges_left: st.edges_left,
        };
        for ear in ears {
            for &v in &ear.path {
                next.vmask |= 1 << v;
            }
            for &p in &ear.edges {
                let (a, b) = self.d.ends[p];
                next.in_h[p] = true;
                next.hadj[a] |= 1 << b;
                next.hadj[b] |= 1 << a;
                next.edges_left -= 1;
            }
        }
        next
    }

    fn acceptable(&self, st: &State) -> bool {
        matching::mcg_masks(&st.hadj, st.vmask) && dense::matchable(&self.d.adj, self.full & !st.vmask)
    }

    fn grow(&self, st: &State, steps: &mut Vec<Vec<DEar>>) -> bool {
        if st.edges_left == 0 {
            return st.vmask == self.full;
        }
        let mut any_single = false;
        let mut all_singles = Vec::new();
        for len in (1..=self.d.n).step_by(2) {
            let ears = self.ears_of_length(st, len);
            for ear in &ears {
                let next = self.apply(st, &[ear]);
                if self.acceptable(&next) {
                    any_single = true;
                    steps.push(vec![ear.clone()]);
                    if self.grow(&next, steps) {
                        return true;
                    }
                    steps.pop();
                }
            }
            all_singles.extend(ears);
        }
        if any_single {
            return false;
        }
        let mut pairs = Vec::new();
        for i in 0..all_singles.len() {
            for j in i + 1..all_singles.len() {
                let mi: u64 = all_singles[i].path.iter().fold(0, |m, &v| m | 1 << v);
                let mj: u64 = all_singles[j].path.iter().fold(0, |m, &v| m | 1 << v);
                if mi & mj == 0 {
                    pairs.push((all_singles[i].edges.len() + all_singles[j].edges.len(), i, j));
                }
            }
        }
        pairs.sort_unstable();
        for (_, i, j) in pairs {
            let next = self.apply(st, &[&all_singles[i], &all_singles[j]]);
            if self.acceptable(&next) {
                steps.push(vec![all_singles[i].clone(), all_singles[j].clone()]);
                if self.grow(&next, steps) {
                    return true;
                }
                steps.pop();
            }
        }
        false
    }
}

/// Extends the conformal even cycle `c` to an ear decomposition of `g`.
pub fn extend_ear_decomposition(g: &Graph, c: &CycleWitness) -> Result<EarDecomposition> {
    limits::check_desk(g.order())?;
    if !c.even || !c.is_valid_in(g) {
        return Err(Error::pre("start must be an even cycle of the graph"));
    }
    if !matching::is_matching_covered(g) {
        return Err(Error::pre("graph is not matching covered"));
    }
    if !matching::is_conformal_subgraph(g, &c.vertices) {
        return Err(Error::pre("start cycle is not conformal"));
    }
    let d = Dense::new(g)?;
    let search = Search {
        d: &d,
        full: d.full_mask(),
    };
    let mut in_h = vec![false; d.ends.len()];
    let mut hadj = vec![0u64; d.n];
    let mut vmask = 0u64;
    for (i, &v) in c.vertices.iter().enumerate() {
        vmask |= 1 << d.index[v];
        let p = d.edge_index[c.edges[i].0];
        in_h[p] = true;
        let (a, b) = d.ends[p];
        hadj[a] |= 1 << b;
        hadj[b] |= 1 << a;
    }
    let st = State {
        vmask,
        in_h,
        hadj,
        edges_left: d.ends.len() - c.len(),
    };
    let mut steps = Vec::new();
    if !search.grow(&st, &mut steps) {
        return Err(Error::internal("ear decomposition search failed"));
    }
    let to_ear = |e: &DEar| Ear {
        vertices: e.path.iter().map(|&i| d.ids[i]).collect(),
        edges: e.edges.iter().map(|&p| d.edge_ids[p]).collect(),
    };
    let steps = steps
        .into_iter()
        .map(|s| match s.as_slice() {
            [one] => EarStep::Single { ear: to_ear(one) },
            [a, b] => EarStep::Double {
                first: to_ear(a),
                second: to_ear(b),
            },
            _ => unreachable!("steps hold one or two ears"),
        })
        .collect();
    Ok(EarDecomposition {
        start: c.clone(),
        steps,
    })
}
