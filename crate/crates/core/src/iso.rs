//! Multigraph isomorphism by colour refinement and individualisation.
//!
//! Colours are ranks of sorted signatures, so refining two isomorphic graphs
//! separately yields identical traces. A trace mismatch prunes a branch and a
//! completed labelling is always verified edge by edge.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::limits::MASK_CAP;

struct Mat {
    n: usize,
    ids: Vec<VertexId>,
    mult: Vec<u32>,
    nbrs: Vec<Vec<usize>>,
}

impl Mat {
    fn new(g: &Graph) -> Mat {
        let ids: Vec<VertexId> = g.vertices().collect();
        let n = ids.len();
        let mut index = vec![usize::MAX; g.vertex_bound()];
        for (i, &v) in ids.iter().enumerate() {
            index[v] = i;
        }
        let mut mult = vec![0u32; n * n];
        for (_, u, v) in g.edges() {
            let (a, b) = (index[u], index[v]);
            mult[a * n + b] += 1;
            mult[b * n + a] += 1;
        }
        let nbrs = (0..n)
            .map(|a| (0..n).filter(|&b| mult[a * n + b] > 0).collect())
            .collect();
        Mat { n, ids, mult, nbrs }
    }

    fn m(&self, a: usize, b: usize) -> u32 {
        self.mult[a * self.n + b]
    }

    /// Refines `colors` to a stable partition; returns one digest per round.
    fn refine(&self, colors: &mut [u32]) -> Vec<u64> {
        let mut trace = Vec::new();
        let mut classes = distinct(colors);
        loop {
            let mut sigs: Vec<(Vec<u32>, usize)> = (0..self.n)
                .map(|v| {
                    let mut around: Vec<u32> = self.nbrs[v].iter().flat_map(|&u| [colors[u], self.m(v, u)]).collect();
                    pair_sort(&mut around);
                    let mut sig = Vec::with_capacity(around.len() + 1);
                    sig.push(colors[v]);
                    sig.extend(around);
                    (sig, v)
                })
                .collect();
            sigs.sort();
            let mut h = Fnv::new();
            let mut rank = 0u32;
            for i in 0..sigs.len() {
                if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                    rank += 1;
                }
                colors[sigs[i].1] = rank;
                for &x in &sigs[i].0 {
                    h.feed(x as u64);
                }
                h.feed(u64::MAX);
            }
            trace.push(h.finish());
            let now = rank as usize + 1;
            if now == classes || self.n == 0 {
                return trace;
            }
            classes = now;
        }
    }
}

/// Sorts a flat list of `(colour, multiplicity)` pairs.
fn pair_sort(v: &mut Vec<u32>) {
    let mut pairs: Vec<(u32, u32)> = v.chunks(2).map(|c| (c[0], c[1])).collect();
    pairs.sort_unstable();
    v.clear();
    for (a, b) in pairs {
        v.push(a);
        v.push(b);
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Fnv(u64);

impl Fnv {
    fn new() -> Fnv {
        Fnv(0xcbf2_9ce4_8422_2325)
    }

    fn feed(&mut self, x: u64) {
        for b in x.to_le_bytes() {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }

    fn finish(&self) -> u64 {
        self.0
    }
}

fn search(a: &Mat, b: &Mat, ca: &mut [u32], cb: &mut [u32]) -> Option<Vec<usize>> {
    if a.refine(ca) != b.refine(cb) {
        return None;
    }
    // Smallest colour class with more than one member.
    let mut counts = vec![0usize; a.n];
    for &c in ca.iter() {
        counts[c as usize] += 1;
    }
    let target = (0..a.n).find(|&c| counts[c] > 1);
    let Some(target) = target else {
        let mut map = vec![0usize; a.n];
        for v in 0..a.n {
            map[v] = (0..b.n).find(|&w| cb[w] == ca[v]).expect("same colours");
        }
        let ok = (0..a.n).all(|x| (0..a.n).all(|y| a.m(x, y) == b.m(map[x], map[y])));
        return ok.then_some(map);
    };
    let v = (0..a.n).find(|&v| ca[v] as usize == target).expect("class is nonempty");
    let fresh = a.n as u32;
    for w in (0..b.n).filter(|&w| cb[w] as usize == target) {
        let mut na = ca.to_vec();
        let mut nb = cb.to_vec();
        na[v] = fresh;
        nb[w] = fresh;
        if let Some(map) = search(a, b, &mut na, &mut nb) {
            return Some(map);
        }
    }
    None
}

/// An isomorphism `g → h` preserving edge multiplicities, as pairs
/// `(vertex of g, vertex of h)` sorted by the first entry.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<(VertexId, VertexId)>>> {
    for x in [g, h] {
        if x.order() > MASK_CAP {
            return Err(Error::CapExceeded {
                order: x.order(),
                cap: MASK_CAP,
            });
        }
    }
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(None);
    }
    let (a, b) = (Mat::new(g), Mat::new(h));
    let mut ca = vec![0u32; a.n];
    let mut cb = vec![0u32; b.n];
    Ok(search(&a, &b, &mut ca, &mut cb).map(|map| (0..a.n).map(|i| (a.ids[i], b.ids[map[i]])).collect()))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

/// An isomorphism invariant: equal for isomorphic graphs, and in practice
/// distinct for most non-isomorphic pairs.
pub fn invariant(g: &Graph) -> u64 {
    let a = Mat::new(g);
    let mut colors = vec![0u32; a.n];
    let trace = a.refine(&mut colors);
    let mut h = Fnv::new();
    h.feed(g.order() as u64);
    h.feed(g.size() as u64);
    for t in trace {
        h.feed(t);
    }
    h.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::EdgeId;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<_> = g.edges().map(|(_, u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(g.order(), &edges).unwrap()
    }

    #[test]
    fn relabelled_k4() {
        let g = catalog::k4();
        assert!(is_isomorphic(&g, &relabel(&g, &[2, 0, 3, 1])).unwrap());
    }

    #[test]
    fn hexagon_versus_two_triangles() {
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&catalog::cycle(6), &two).unwrap());
    }

    #[test]
    fn petersen_is_kneser() {
        let map = find_isomorphism(&catalog::petersen(), &catalog::kneser_5_2())
            .unwrap()
            .expect("isomorphic");
        assert_eq!(map.len(), 10);
    }

    #[test]
    fn multiplicities_matter() {
        let a = Graph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (2, 0)]).unwrap();
        let b = Graph::from_edges(3, &[(0, 1), (1, 2), (1, 2), (2, 0)]).unwrap();
        let c = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0), (2, 0)]).unwrap();
        assert!(is_isomorphic(&a, &b).unwrap());
        assert!(is_isomorphic(&a, &c).unwrap());
        let d = Graph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (1, 2)]).unwrap();
        assert!(!is_isomorphic(&a, &d).unwrap());
    }

    #[test]
    fn cubic_graphs_on_eight_vertices() {
        let cube = catalog::cube();
        assert!(is_isomorphic(&cube, &catalog::prism(4)).unwrap());
        let k44 = catalog::complete_bipartite(4, 4);
        let pm = [EdgeId(0), EdgeId(5), EdgeId(10), EdgeId(15)];
        assert!(is_isomorphic(&cube, &k44.without_edges(&pm)).unwrap());
        let mut mobius = catalog::cycle(8);
        for i in 0..4 {
            mobius.add_edge(i, i + 4).unwrap();
        }
        assert_eq!(invariant(&cube), invariant(&mobius));
        assert!(!is_isomorphic(&cube, &mobius).unwrap());
    }
}
