mod common;

use cyclex_core::decomposition::{self, CutPolicy, PieceKind};
use cyclex_core::graph::Graph;
use cyclex_core::iso::is_isomorphic;
use cyclex_core::planar::{self, Planarity};
use cyclex_core::{catalog, matching};

fn ce(g: &Graph) -> bool {
    matching::brute_force_cycle_extendable(g).unwrap().is_ce()
}

/// Underlying simple pieces, matched up to isomorphism.
fn same_pieces(a: &[Graph], b: &[Graph]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| {
        let x = x.underlying_simple();
        let hit = (0..b.len()).find(|&j| !used[j] && is_isomorphic(&x, &b[j].underlying_simple()).unwrap());
        hit.map(|j| used[j] = true).is_some()
    })
}

fn nontrivial_tight_cuts(g: &Graph) -> Vec<Vec<usize>> {
    let pms = matching::enumerate_perfect_matchings(g).unwrap();
    let vs: Vec<usize> = g.vertices().collect();
    let n = vs.len();
    let mut out = Vec::new();
    // Shores containing the first vertex, odd and with odd complement.
    for mask in 0u32..(1 << (n - 1)) {
        let shore: Vec<usize> = std::iter::once(vs[0])
            .chain((1..n).filter(|i| mask >> (i - 1) & 1 == 1).map(|i| vs[i]))
            .collect();
        if shore.len().is_multiple_of(2) || shore.len() < 3 || n - shore.len() < 3 {
            continue;
        }
        let cut = g.cut(&shore).unwrap();
        if decomposition::is_tight(g, &pms, &cut).unwrap() {
            out.push(shore);
        }
    }
    out
}

#[test]
fn decomposition_is_independent_of_the_cut_policy() {
    for g in common::mcg(8) {
        let a = decomposition::tight_cut_decomposition_with(g, CutPolicy::SmallestShore).unwrap();
        let b = decomposition::tight_cut_decomposition_with(g, CutPolicy::LargestShore).unwrap();
        let pa: Vec<Graph> = a.pieces.into_iter().map(|p| p.graph).collect();
        let pb: Vec<Graph> = b.pieces.into_iter().map(|p| p.graph).collect();
        assert!(same_pieces(&pa, &pb));
        assert_eq!((a.b, a.p), (b.b, b.p));
    }
}

#[test]
fn large_simple_pieces_are_three_connected() {
    for g in common::mcg(8) {
        for p in decomposition::tight_cut_decomposition(g).unwrap().pieces {
            if p.graph.is_simple() && p.graph.order() >= 6 {
                assert!(common::is_three_connected(&p.graph));
            }
        }
    }
}

#[test]
fn tight_cut_contractions_inherit_cycle_extendability() {
    let mut checked = 0;
    for g in common::mcg(8).into_iter().filter(|g| ce(g)) {
        for shore in nontrivial_tight_cuts(g) {
            let other = g.cut(&shore).unwrap().complement(g);
            assert!(ce(&g.contract_shore(&shore).unwrap()));
            assert!(ce(&g.contract_shore(&other).unwrap()));
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn near_brick_cuts_split_into_bipartite_and_near_brick() {
    let mut checked = 0;
    for g in common::mcg(8) {
        if !decomposition::is_near_brick(g).unwrap() {
            continue;
        }
        for shore in nontrivial_tight_cuts(g) {
            let other = g.cut(&shore).unwrap().complement(g);
            let a = g.contract_shore(&shore).unwrap();
            let b = g.contract_shore(&other).unwrap();
            let ok = |x: &Graph, y: &Graph| x.is_bipartite() && decomposition::is_near_brick(y).unwrap();
            assert!(ok(&a, &b) || ok(&b, &a));
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn planar_near_bipartite_graphs_have_two_or_four_odd_faces() {
    let mut checked = 0;
    for g in common::mcg(8) {
        if matching::is_near_bipartite(g).unwrap().is_none() {
            continue;
        }
        if let Planarity::Planar(emb) = planar::compute_embedding(g).unwrap() {
            assert!(emb.f_odd == 2 || emb.f_odd == 4);
            checked += 1;
        }
    }
    assert!(checked > 0);
    let Planarity::Planar(emb) = planar::compute_embedding(&catalog::r8_minus()).unwrap() else {
        panic!("R8- is planar")
    };
    assert_eq!(emb.f_odd, 4);
}

#[test]
fn ce_graphs_are_bipartite_or_non_petersen_near_bricks() {
    for g in common::mcg(8).into_iter().filter(|g| ce(g)) {
        let s = decomposition::tight_cut_decomposition(g).unwrap();
        assert!(g.is_bipartite() || (s.b == 1 && s.p == 0));
    }
}

#[test]
fn simple_planar_ce_graphs_of_min_degree_three_are_bricks() {
    let mut checked = 0;
    for g in common::mcg(8) {
        if g.min_degree() >= 3 && planar::is_planar(g).unwrap() && ce(g) {
            assert!(decomposition::is_brick(g).unwrap());
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn piece_kinds_match_bipartiteness() {
    for g in common::mcg(6) {
        for p in decomposition::tight_cut_decomposition(g).unwrap().pieces {
            assert_eq!(p.kind == PieceKind::Brace, p.graph.is_bipartite());
        }
    }
}
