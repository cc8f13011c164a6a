//! Planarity testing, combinatorial embeddings and Kuratowski witnesses.
//!
//! Each biconnected block of the underlying simple graph is embedded with
//! the Demoucron–Malgrange–Pertuiset face-splitting procedure. Block
//! rotations are glued at cut vertices and parallel edges are slotted next
//! to their representative, so every copy bounds a face of length two.
//! A non-planar graph gets a Kuratowski subdivision found by deleting edges
//! greedily while the graph stays non-planar.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::limits;

/// A face as a closed walk: `edges[i]` leads from `vertices[i]` to
/// `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarEmbedding {
    /// Cyclic order of incident edges at every vertex.
    pub rotation: BTreeMap<VertexId, Vec<EdgeId>>,
    pub faces: Vec<Face>,
    pub f_odd: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of `K5` or `K3,3` inside a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<VertexId>,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Planarity {
    Planar(PlanarEmbedding),
    NonPlanar(KuratowskiWitness),
}

/// Simple graph on compact indices.
struct Simple {
    ids: Vec<VertexId>,
    adj: Vec<BTreeSet<usize>>,
}

impl Simple {
    fn new(g: &Graph) -> Simple {
        let ids: Vec<VertexId> = g.vertices().collect();
        let mut index = vec![usize::MAX; g.vertex_bound()];
        for (i, &v) in ids.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![BTreeSet::new(); ids.len()];
        for (_, u, v) in g.edges() {
            adj[index[u]].insert(index[v]);
            adj[index[v]].insert(index[u]);
        }
        Simple { ids, adj }
    }

    fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Biconnected blocks as edge lists.
    fn blocks(&self) -> Vec<Vec<(usize, usize)>> {
        struct St<'a> {
            s: &'a Simple,
            disc: Vec<usize>,
            low: Vec<usize>,
            time: usize,
            stack: Vec<(usize, usize)>,
            out: Vec<Vec<(usize, usize)>>,
        }
        fn dfs(st: &mut St, v: usize, parent: usize) {
            st.time += 1;
            st.disc[v] = st.time;
            st.low[v] = st.time;
            let nbrs: Vec<usize> = st.s.adj[v].iter().copied().collect();
            for u in nbrs {
                if st.disc[u] == 0 {
                    st.stack.push((v, u));
                    dfs(st, u, v);
                    st.low[v] = st.low[v].min(st.low[u]);
                    if st.low[u] >= st.disc[v] {
                        let mut block = Vec::new();
                        while let Some(e) = st.stack.pop() {
                            block.push(e);
                            if e == (v, u) {
                                break;
                            }
                        }
                        st.out.push(block);
                    }
                } else if u != parent && st.disc[u] < st.disc[v] {
                    st.stack.push((v, u));
                    st.low[v] = st.low[v].min(st.disc[u]);
                }
            }
        }
        let n = self.ids.len();
        let mut st = St {
            s: self,
            disc: vec![0; n],
            low: vec![0; n],
            time: 0,
            stack: Vec::new(),
            out: Vec::new(),
        };
        for v in 0..n {
            if st.disc[v] == 0 {
                dfs(&mut st, v, usize::MAX);
            }
        }
        st.out
    }
}

/// Faces of a planar embedding of a 2-connected simple block, as cyclic
/// vertex lists with a consistent orientation; `None` if not planar.
fn embed_block(n: usize, block: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let mut adj = vec![BTreeSet::new(); n];
    let mut in_block = vec![false; n];
    for &(u, v) in block {
        adj[u].insert(v);
        adj[v].insert(u);
        in_block[u] = true;
        in_block[v] = true;
    }
    let key = |u: usize, v: usize| (u.min(v), u.max(v));
    // Initial cycle through the smallest edge.
    let (a, b) = block.iter().map(|&(u, v)| key(u, v)).min()?;
    let path = bfs_path(&adj, a, b, |x, y| key(x, y) != (a, b), |_| true)?;
    let mut faces = vec![path.clone(), path.iter().rev().copied().collect::<Vec<_>>()];
    let mut in_h = vec![false; n];
    let mut embedded: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..path.len() {
        in_h[path[i]] = true;
        embedded.insert(key(path[i], path[(i + 1) % path.len()]));
    }
    let total: BTreeSet<(usize, usize)> = block.iter().map(|&(u, v)| key(u, v)).collect();
    while embedded.len() < total.len() {
        // Fragments: (attachments, representative path).
        let mut fragments: Vec<(BTreeSet<usize>, Vec<usize>)> = Vec::new();
        for &(u, v) in &total {
            if !embedded.contains(&(u, v)) && in_h[u] && in_h[v] {
                fragments.push(([u, v].into_iter().collect(), vec![u, v]));
            }
        }
        let mut seen = vec![false; n];
        for s in 0..n {
            if !in_block[s] || in_h[s] || seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            let mut attach = BTreeSet::new();
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if in_h[y] {
                        attach.insert(y);
                    } else if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            let inside: BTreeSet<usize> = comp.iter().copied().collect();
            let mut it = attach.iter();
            let x = *it.next()?;
            let y = *it.next()?;
            let p = bfs_path(&adj, x, y, |_, _| true, |z| inside.contains(&z))?;
            fragments.push((attach, p));
        }
        let admissible: Vec<Vec<usize>> = fragments
            .iter()
            .map(|(att, _)| {
                (0..faces.len())
                    .filter(|&f| att.iter().all(|v| faces[f].contains(v)))
                    .collect()
            })
            .collect();
        if admissible.iter().any(Vec::is_empty) {
            return None;
        }
        let pick = (0..fragments.len()).find(|&i| admissible[i].len() == 1).unwrap_or(0);
        let f = admissible[pick][0];
        let p = &fragments[pick].1;
        let face = faces.swap_remove(f);
        let (x, y) = (p[0], *p.last().expect("path"));
        let i = face.iter().position(|&v| v == x).expect("attachment on face");
        let j = face.iter().position(|&v| v == y).expect("attachment on face");
        let k = face.len();
        let interior = &p[1..p.len() - 1];
        let mut one = Vec::new();
        let mut t = i;
        loop {
            one.push(face[t]);
            if t == j {
                break;
            }
            t = (t + 1) % k;
        }
        one.extend(interior.iter().rev());
        let mut two = Vec::new();
        let mut t = j;
        loop {
            two.push(face[t]);
            if t == i {
                break;
            }
            t = (t + 1) % k;
        }
        two.extend(interior.iter());
        faces.push(one);
        faces.push(two);
        for w in 0..p.len() {
            in_h[p[w]] = true;
            if w + 1 < p.len() {
                embedded.insert(key(p[w], p[w + 1]));
            }
        }
    }
    Some(faces)
}

/// Shortest path from `a` to `b` using edges allowed by `edge_ok`, with all
/// interior vertices satisfying `inner_ok`. A direct edge counts only if the
/// interior filter admits no vertices at all, so callers that need a path
/// through a fragment pass a filter that excludes the ends.
fn bfs_path(
    adj: &[BTreeSet<usize>],
    a: usize,
    b: usize,
    edge_ok: impl Fn(usize, usize) -> bool,
    inner_ok: impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([a]);
    prev[a] = a;
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if !edge_ok(x, y) {
                continue;
            }
            if y == b && (x != a || inner_ok(usize::MAX)) {
                let mut path = vec![b];
                let mut z = x;
                while z != a {
                    path.push(z);
                    z = prev[z];
                }
                path.push(a);
                path.reverse();
                return Some(path);
            }
            if prev[y] == usize::MAX && y != b && inner_ok(y) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Planarity of the underlying simple graph on compact indices.
fn simple_planar(s: &Simple) -> Option<Vec<Vec<usize>>> {
    let n = s.ids.len();
    if n >= 3 && s.edge_count() > 3 * n - 6 {
        return None;
    }
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in s.blocks() {
        if block.len() == 1 {
            let (u, v) = block[0];
            rot[u].push(v);
            rot[v].push(u);
            continue;
        }
        let faces = embed_block(n, &block)?;
        let mut next: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for f in &faces {
            let k = f.len();
            for i in 0..k {
                next.insert((f[(i + 1) % k], f[i]), f[(i + 2) % k]);
            }
        }
        let mut verts: BTreeSet<usize> = BTreeSet::new();
        for &(u, v) in &block {
            verts.insert(u);
            verts.insert(v);
        }
        for v in verts {
            let start = *next
                .keys()
                .find(|&&(c, _)| c == v)
                .map(|(_, u)| u)
                .expect("vertex lies on a face");
            let mut u = start;
            loop {
                rot[v].push(u);
                u = next[&(v, u)];
                if u == start {
                    break;
                }
            }
        }
    }
    Some(rot)
}

/// Faces traced from an edge rotation: leaving `v` after arriving by `e`,
/// take the edge that follows `e` in the rotation at `v`.
pub fn faces_from_rotation(g: &Graph, rotation: &BTreeMap<VertexId, Vec<EdgeId>>) -> Vec<Face> {
    let mut used: BTreeSet<(EdgeId, VertexId)> = BTreeSet::new();
    let mut faces = Vec::new();
    for (e, u, v) in g.edges() {
        for (from, _) in [(u, v), (v, u)] {
            if used.contains(&(e, from)) {
                continue;
            }
            let mut face = Face {
                vertices: Vec::new(),
                edges: Vec::new(),
            };
            let (mut cur_e, mut cur_from) = (e, from);
            while used.insert((cur_e, cur_from)) {
                face.vertices.push(cur_from);
                face.edges.push(cur_e);
                let to = g.other_end(cur_e, cur_from).expect("incident");
                let rot = &rotation[&to];
                let pos = rot.iter().position(|&f| f == cur_e).expect("edge in rotation");
                cur_e = rot[(pos + 1) % rot.len()];
                cur_from = to;
            }
            faces.push(face);
        }
    }
    faces
}

pub fn count_odd_faces(emb: &PlanarEmbedding) -> usize {
    emb.faces.iter().filter(|f| f.len() % 2 == 1).count()
}

/// Is every component of `g` planar?
pub fn is_planar(g: &Graph) -> Result<bool> {
    limits::check_desk(g.order())?;
    Ok(simple_planar(&Simple::new(g)).is_some())
}

/// A planar embedding of a connected graph, or a Kuratowski witness.
pub fn compute_embedding(g: &Graph) -> Result<Planarity> {
    limits::check_desk(g.order())?;
    if !g.is_connected() {
        return Err(Error::pre("graph must be connected"));
    }
    let s = Simple::new(g);
    let Some(rot) = simple_planar(&s) else {
        return kuratowski(g).map(Planarity::NonPlanar);
    };
    let mut index = vec![usize::MAX; g.vertex_bound()];
    for (i, &v) in s.ids.iter().enumerate() {
        index[v] = i;
    }
    let mut rotation: BTreeMap<VertexId, Vec<EdgeId>> = BTreeMap::new();
    for (i, &v) in s.ids.iter().enumerate() {
        let mut order = Vec::new();
        for &j in &rot[i] {
            let copies = g.edges_between(v, s.ids[j]);
            // Copies follow the representative at the smaller end and
            // precede it, reversed, at the larger one.
            if v < s.ids[j] {
                order.extend(copies);
            } else {
                order.extend(copies.into_iter().skip(1).rev());
                order.push(g.edges_between(v, s.ids[j])[0]);
            }
        }
        rotation.insert(v, order);
    }
    let mut faces = faces_from_rotation(g, &rotation);
    if g.size() == 0 {
        faces.push(Face {
            vertices: Vec::new(),
            edges: Vec::new(),
        });
    }
    if faces.len() + g.order() != g.size() + 2 {
        return Err(Error::internal("embedding violates Euler's formula"));
    }
    let mut emb = PlanarEmbedding {
        rotation,
        faces,
        f_odd: 0,
    };
    emb.f_odd = count_odd_faces(&emb);
    Ok(Planarity::Planar(emb))
}

/// Finds a Kuratowski subdivision in a non-planar graph.
pub fn kuratowski(g: &Graph) -> Result<KuratowskiWitness> {
    limits::check_desk(g.order())?;
    let mut h = g.underlying_simple();
    if simple_planar(&Simple::new(&h)).is_some() {
        return Err(Error::pre("graph is planar"));
    }
    for e in h.edge_ids() {
        let trial = h.without_edges(&[e]);
        if simple_planar(&Simple::new(&trial)).is_none() {
            h = trial;
        }
    }
    let vertices: Vec<VertexId> = h.vertices().filter(|&v| h.degree(v) > 0).collect();
    let branch: Vec<VertexId> = vertices.iter().copied().filter(|&v| h.degree(v) >= 3).collect();
    let kind = match (
        branch.len(),
        branch.iter().all(|&v| h.degree(v) == 4),
        branch.iter().all(|&v| h.degree(v) == 3),
    ) {
        (5, true, _) => KuratowskiKind::K5,
        (6, _, true) => KuratowskiKind::K33,
        _ => return Err(Error::internal("minimal non-planar subgraph is not a Kuratowski graph")),
    };
    Ok(KuratowskiWitness {
        kind,
        branch_vertices: branch,
        vertices,
        edges: h.edge_ids(),
    })
}
