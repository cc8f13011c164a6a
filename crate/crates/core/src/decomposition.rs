//! Tight cuts, the tight cut decomposition, bricks and braces, and the
//! even and alternating cycle spaces.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::cycles::{self, Parity};
use crate::dense::{self, Dense};
use crate::error::{Error, Result};
use crate::gf2::Gf2Basis;
use crate::graph::{Cut, Graph, VertexId};
use crate::iso;
use crate::limits;
use crate::matching::{self, PerfectMatchingSet};

/// Does every perfect matching meet the cut in exactly one edge?
pub fn is_tight(g: &Graph, pms: &PerfectMatchingSet, c: &Cut) -> Result<bool> {
    if !pms.matches(g) {
        return Err(Error::FingerprintMismatch);
    }
    let cut: BTreeSet<_> = c.edges.iter().copied().collect();
    Ok(pms
        .matchings
        .iter()
        .all(|m| m.iter().filter(|e| cut.contains(e)).count() == 1))
}

/// Order in which candidate shores are examined.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum CutPolicy {
    /// Two-vertex-cut shortcut first, then the smallest shore, ties broken
    /// lexicographically.
    #[default]
    SmallestShore,
    /// Brute force only, largest shores first, reverse lexicographic.
    LargestShore,
}

/// Perfect matchings as dense vertex-pair lists, for fast cut counting.
struct PairMatchings {
    d: Dense,
    pairs: Vec<Vec<(usize, usize)>>,
}

impl PairMatchings {
    fn new(g: &Graph) -> Result<PairMatchings> {
        let pms = matching::enumerate_perfect_matchings(g)?;
        let d = Dense::new(g)?;
        let pairs = pms
            .matchings
            .iter()
            .map(|m| m.iter().map(|e| d.ends[d.edge_index[e.0]]).collect())
            .collect();
        Ok(PairMatchings { d, pairs })
    }

    fn tight(&self, shore: u64) -> bool {
        self.pairs.iter().all(|m| {
            m.iter()
                .filter(|&&(a, b)| ((shore >> a) & 1) != ((shore >> b) & 1))
                .count()
                == 1
        })
    }
}

/// Calls `f` on every `k`-subset of `0..n` as a mask, in lexicographic
/// order of the sorted member lists (or the reverse).
fn for_each_subset(n: usize, k: usize, reverse: bool, f: &mut dyn FnMut(u64) -> ControlFlow<u64>) -> Option<u64> {
    fn rec(
        n: usize,
        k: usize,
        start: usize,
        acc: u64,
        reverse: bool,
        f: &mut dyn FnMut(u64) -> ControlFlow<u64>,
    ) -> ControlFlow<u64> {
        if k == 0 {
            return f(acc);
        }
        if reverse {
            for i in (start..=n - k).rev() {
                rec(n, k - 1, i + 1, acc | (1 << i), reverse, f)?;
            }
        } else {
            for i in start..=n - k {
                rec(n, k - 1, i + 1, acc | (1 << i), reverse, f)?;
            }
        }
        ControlFlow::Continue(())
    }
    if k > n {
        return None;
    }
    match rec(n, k, 0, 0, reverse, f) {
        ControlFlow::Break(m) => Some(m),
        ControlFlow::Continue(()) => None,
    }
}

/// A nontrivial tight cut, if `g` has one.
pub fn find_nontrivial_tight_cut(g: &Graph) -> Result<Option<Cut>> {
    find_nontrivial_tight_cut_with(g, CutPolicy::SmallestShore)
}

pub fn find_nontrivial_tight_cut_with(g: &Graph, policy: CutPolicy) -> Result<Option<Cut>> {
    limits::check_desk(g.order())?;
    if !matching::is_matching_covered(g) {
        return Err(Error::pre("graph is not matching covered"));
    }
    let n = g.order();
    if n < 6 {
        return Ok(None);
    }
    let pm = PairMatchings::new(g)?;
    if policy == CutPolicy::SmallestShore {
        if let Some(shore) = two_vertex_cut_shore(g, &pm) {
            return g.cut(&pm.d.ids_of(shore)).map(Some);
        }
    }
    let sizes: Vec<usize> = (3..=n / 2).filter(|k| k % 2 == 1).collect();
    let ordered: Vec<usize> = match policy {
        CutPolicy::SmallestShore => sizes,
        CutPolicy::LargestShore => sizes.into_iter().rev().collect(),
    };
    let reverse = policy == CutPolicy::LargestShore;
    for k in ordered {
        let hit = for_each_subset(n, k, reverse, &mut |m| {
            if pm.tight(m) {
                ControlFlow::Break(m)
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(m) = hit {
            return g.cut(&pm.d.ids_of(m)).map(Some);
        }
    }
    Ok(None)
}

/// The shortcut through a 2-vertex cut `{u, v}`: a nontrivial odd component
/// `J` of `G - u - v` gives the shore `V(J)`, an even one gives
/// `V(J) + u`. Candidates are verified against the matchings.
fn two_vertex_cut_shore(g: &Graph, pm: &PairMatchings) -> Option<u64> {
    let d = &pm.d;
    let n = d.n;
    let full = d.full_mask();
    for u in 0..n {
        for v in u + 1..n {
            let rest = full & !(1 << u) & !(1 << v);
            let comps = components_within(&d.adj, rest);
            if comps.len() < 2 {
                continue;
            }
            for comp in comps {
                let size = comp.count_ones() as usize;
                let shore = if size % 2 == 1 { comp } else { comp | (1 << u) };
                let k = shore.count_ones() as usize;
                if k >= 3 && n - k >= 3 && pm.tight(shore) {
                    let _ = g;
                    return Some(shore);
                }
            }
        }
    }
    None
}

fn components_within(adj: &[u64], mask: u64) -> Vec<u64> {
    let mut left = mask;
    let mut out = Vec::new();
    while left != 0 {
        let s = left.trailing_zeros() as usize;
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in dense::bits(frontier) {
                next |= adj[v] & mask;
            }
            frontier = next & !seen;
            seen |= next;
        }
        out.push(seen);
        left &= !seen;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PieceKind {
    Brick,
    Brace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub kind: PieceKind,
    pub petersen: bool,
    pub graph: Graph,
}

/// How the pieces arose: each split records the shore and the cut.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "lowercase")]
pub enum DecompositionTree {
    Piece {
        index: usize,
    },
    Split {
        shore: Vec<VertexId>,
        cut: Cut,
        /// The contraction that shrinks the complement (keeps the shore).
        shore_side: Box<DecompositionTree>,
        /// The contraction that shrinks the shore.
        other_side: Box<DecompositionTree>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionSummary {
    pub pieces: Vec<Piece>,
    pub b: usize,
    pub p: usize,
    pub tree: DecompositionTree,
}

pub fn tight_cut_decomposition(g: &Graph) -> Result<DecompositionSummary> {
    tight_cut_decomposition_with(g, CutPolicy::SmallestShore)
}

pub fn tight_cut_decomposition_with(g: &Graph, policy: CutPolicy) -> Result<DecompositionSummary> {
    if !matching::is_matching_covered(g) {
        return Err(Error::pre("graph is not matching covered"));
    }
    let mut pieces = Vec::new();
    let tree = split(g, policy, &mut pieces)?;
    let b = pieces.iter().filter(|p: &&Piece| p.kind == PieceKind::Brick).count();
    let p = pieces.iter().filter(|p| p.petersen).count();
    Ok(DecompositionSummary { pieces, b, p, tree })
}

fn split(g: &Graph, policy: CutPolicy, pieces: &mut Vec<Piece>) -> Result<DecompositionTree> {
    match find_nontrivial_tight_cut_with(g, policy)? {
        None => {
            let kind = if g.is_bipartite() {
                PieceKind::Brace
            } else {
                PieceKind::Brick
            };
            let petersen = kind == PieceKind::Brick && is_petersen(g)?;
            pieces.push(Piece {
                kind,
                petersen,
                graph: g.clone(),
            });
            Ok(DecompositionTree::Piece {
                index: pieces.len() - 1,
            })
        }
        Some(cut) => {
            let other = cut.complement(g);
            let keep_shore = g.contract_shore(&other)?;
            let keep_other = g.contract_shore(&cut.shore)?;
            let shore_side = split(&keep_shore, policy, pieces)?;
            let other_side = split(&keep_other, policy, pieces)?;
            Ok(DecompositionTree::Split {
                shore: cut.shore.clone(),
                cut,
                shore_side: Box::new(shore_side),
                other_side: Box::new(other_side),
            })
        }
    }
}

/// Is the underlying simple graph the Petersen graph?
pub fn is_petersen(g: &Graph) -> Result<bool> {
    let s = g.underlying_simple();
    if s.order() != 10 || s.size() != 15 || s.vertices().any(|v| s.degree(v) != 3) {
        return Ok(false);
    }
    if girth(&s) != Some(5) {
        return Ok(false);
    }
    iso::is_isomorphic(&s, &catalog::petersen())
}

/// Length of a shortest cycle of a simple graph.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in g.vertices() {
        let mut dist = vec![usize::MAX; g.vertex_bound()];
        let mut parent_edge = vec![None; g.vertex_bound()];
        dist[s] = 0;
        let mut queue = alloc::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &(e, y) in g.incident(x) {
                if Some(e) == parent_edge[x] {
                    continue;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent_edge[y] = Some(e);
                    queue.push_back(y);
                } else {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

pub fn is_brick(g: &Graph) -> Result<bool> {
    Ok(!g.is_bipartite() && find_nontrivial_tight_cut(g)?.is_none())
}

pub fn is_brace(g: &Graph) -> Result<bool> {
    Ok(g.is_bipartite() && find_nontrivial_tight_cut(g)?.is_none())
}

/// Number of bricks in the tight cut decomposition.
pub fn brick_count(g: &Graph) -> Result<usize> {
    Ok(tight_cut_decomposition(g)?.b)
}

pub fn is_near_brick(g: &Graph) -> Result<bool> {
    Ok(brick_count(g)? == 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceRanks {
    pub dim_cycle: usize,
    pub dim_even: usize,
    pub dim_alt: usize,
}

/// Ranks over GF(2) of the spaces spanned by all cycles, the even cycles and
/// the conformal cycles.
pub fn space_ranks(g: &Graph) -> Result<SpaceRanks> {
    limits::check_desk(g.order())?;
    let d = Dense::new(g)?;
    let full = d.full_mask();
    let m = d.ends.len();
    let mut all = Gf2Basis::new(m);
    let mut even = Gf2Basis::new(m);
    let mut alt = Gf2Basis::new(m);
    let cap = limits::cycle_cap();
    let mut seen = 0usize;
    let flow = cycles::for_each_cycle(&d, Parity::Any, |_, es, mask| {
        seen += 1;
        if seen > cap {
            return ControlFlow::Break(());
        }
        let v = all.vector(es.iter().copied());
        all.insert(v.clone());
        if es.len() % 2 == 0 {
            // A conformal cycle is even; only cycles that are new to the even
            // span can raise either rank, but the alternating span needs the
            // conformality test regardless.
            even.insert(v.clone());
            if dense::matchable(&d.adj, full & !mask) {
                alt.insert(v);
            }
        }
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(Error::CycleCapExceeded(cap));
    }
    let ranks = SpaceRanks {
        dim_cycle: all.rank(),
        dim_even: even.rank(),
        dim_alt: alt.rank(),
    };
    let expected = g.size() + g.components().len() - g.order();
    if ranks.dim_cycle != expected {
        return Err(Error::internal("cycle space rank disagrees with |E| - |V| + c"));
    }
    Ok(ranks)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarvalhoLittleCheck {
    pub ranks: SpaceRanks,
    pub b: usize,
    pub p: usize,
    /// `dim_alt < dim_even` exactly when `b + p > 1`.
    pub holds: bool,
}

pub fn carvalho_little(g: &Graph) -> Result<CarvalhoLittleCheck> {
    if !matching::is_matching_covered(g) {
        return Err(Error::pre("graph is not matching covered"));
    }
    let ranks = space_ranks(g)?;
    let dec = tight_cut_decomposition(g)?;
    Ok(CarvalhoLittleCheck {
        ranks,
        b: dec.b,
        p: dec.p,
        holds: (ranks.dim_alt < ranks.dim_even) == (dec.b + dec.p > 1),
    })
}

/// `(dim_alt < dim_even) ⟺ (b + p > 1)`; false only on a bug.
pub fn verify_carvalho_little(g: &Graph) -> Result<bool> {
    Ok(carvalho_little(g)?.holds)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple_classes(dec: &DecompositionSummary) -> Vec<Graph> {
        dec.pieces.iter().map(|p| p.graph.underlying_simple()).collect()
    }

    #[test]
    fn trivial_cuts_are_tight() {
        let g = catalog::cube();
        let pms = matching::enumerate_perfect_matchings(&g).unwrap();
        for v in g.vertices() {
            assert!(is_tight(&g, &pms, &g.cut(&[v]).unwrap()).unwrap());
        }
        // A face of the cube: some matching uses three of its four cut edges
        // plus... no, a 4-shore cut is even; take a face plus one vertex.
        let face_plus = g.cut(&[0, 1, 2, 3, 4]).unwrap();
        assert!(!is_tight(&g, &pms, &face_plus).unwrap());
        let other = catalog::k4();
        assert!(matches!(
            is_tight(&other, &pms, &face_plus),
            Err(Error::FingerprintMismatch)
        ));
    }

    #[test]
    fn cube_face_cut_is_not_tight() {
        let g = catalog::cube();
        let pms = matching::enumerate_perfect_matchings(&g).unwrap();
        let face = g.cut(&[0, 1, 2, 3]).unwrap();
        // The matching of the four edges across the face meets it four times.
        assert!(!is_tight(&g, &pms, &face).unwrap());
    }

    #[test]
    fn two_triangle_cubic_cuts() {
        let g = catalog::two_triangle_cubic();
        let pms = matching::enumerate_perfect_matchings(&g).unwrap();
        assert!(is_tight(&g, &pms, &g.cut(&[1, 2, 3]).unwrap()).unwrap());
        assert!(is_tight(&g, &pms, &g.cut(&[5, 6, 7]).unwrap()).unwrap());
        let cut = find_nontrivial_tight_cut(&g).unwrap().unwrap();
        assert!(cut.shore == vec![1, 2, 3] || cut.shore == vec![5, 6, 7]);
    }

    #[test]
    fn two_triangle_cubic_decomposes_into_two_k4_and_k33() {
        let dec = tight_cut_decomposition(&catalog::two_triangle_cubic()).unwrap();
        assert_eq!(dec.b, 2);
        assert_eq!(dec.p, 0);
        let pieces = simple_classes(&dec);
        assert_eq!(pieces.len(), 3);
        let k4s = pieces
            .iter()
            .filter(|p| iso::is_isomorphic(p, &catalog::k4()).unwrap())
            .count();
        let k33s = pieces
            .iter()
            .filter(|p| iso::is_isomorphic(p, &catalog::k33()).unwrap())
            .count();
        assert_eq!((k4s, k33s), (2, 1));
        assert!(!is_near_brick(&catalog::two_triangle_cubic()).unwrap());
    }

    #[test]
    fn bricks_and_braces() {
        assert!(find_nontrivial_tight_cut(&catalog::k4()).unwrap().is_none());
        assert!(is_brick(&catalog::k4()).unwrap());
        assert!(is_brace(&catalog::cycle(4)).unwrap());
        assert!(is_brick(&catalog::wheel(5)).unwrap());
        assert!(is_brace(&catalog::k33()).unwrap());
        assert!(is_near_brick(&catalog::r8_minus()).unwrap());
        assert!(find_nontrivial_tight_cut(&catalog::cycle(6)).unwrap().is_some());
        let p = tight_cut_decomposition(&catalog::petersen()).unwrap();
        assert_eq!((p.b, p.p, p.pieces.len()), (1, 1, 1));
    }

    #[test]
    fn policies_agree_on_two_triangle_cubic() {
        let a = tight_cut_decomposition_with(&catalog::two_triangle_cubic(), CutPolicy::SmallestShore).unwrap();
        let b = tight_cut_decomposition_with(&catalog::two_triangle_cubic(), CutPolicy::LargestShore).unwrap();
        assert_eq!(a.pieces.len(), b.pieces.len());
        assert_eq!(a.b, b.b);
    }

    #[test]
    fn ranks() {
        let r = space_ranks(&catalog::cycle(4)).unwrap();
        assert_eq!((r.dim_cycle, r.dim_even, r.dim_alt), (1, 1, 1));
        let r = space_ranks(&catalog::k4()).unwrap();
        assert_eq!((r.dim_cycle, r.dim_even, r.dim_alt), (3, 2, 2));
        let r = space_ranks(&catalog::cube()).unwrap();
        assert_eq!((r.dim_cycle, r.dim_even, r.dim_alt), (5, 5, 5));
        let r = space_ranks(&catalog::petersen()).unwrap();
        assert_eq!((r.dim_cycle, r.dim_even, r.dim_alt), (6, 5, 4));
        let r = space_ranks(&catalog::two_triangle_cubic()).unwrap();
        assert_eq!((r.dim_cycle, r.dim_even, r.dim_alt), (6, 5, 4));
        let r = space_ranks(&catalog::r8()).unwrap();
        assert_eq!((r.dim_cycle, r.dim_even, r.dim_alt), (5, 4, 4));
    }

    #[test]
    fn carvalho_little_examples() {
        for g in [
            catalog::two_triangle_cubic(),
            catalog::petersen(),
            catalog::cycle(6),
            catalog::k4(),
            catalog::cube(),
        ] {
            assert!(verify_carvalho_little(&g).unwrap());
        }
        let c = carvalho_little(&catalog::two_triangle_cubic()).unwrap();
        assert!(c.ranks.dim_alt < c.ranks.dim_even);
        let c = carvalho_little(&catalog::cycle(6)).unwrap();
        assert_eq!(c.ranks.dim_alt, c.ranks.dim_even);
    }

    #[test]
    fn summary_round_trips_through_json() {
        let dec = tight_cut_decomposition(&catalog::two_triangle_cubic()).unwrap();
        let json = serde_json::to_string(&dec).unwrap();
        let back: DecompositionSummary = serde_json::from_str(&json).unwrap();
        assert_eq!(back, dec);
    }
}
