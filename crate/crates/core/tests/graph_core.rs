mod common;

use std::collections::BTreeSet;

use cyclex_core::graph::{EdgeId, Graph};
use cyclex_core::iso::{self, is_isomorphic};
use cyclex_core::planar::{self, Planarity};
use cyclex_core::{catalog, Error};
use proptest::prelude::*;

/// A connected multigraph: a spanning path plus random extra edges, some
/// of them doubled.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            prop::collection::vec(any::<bool>(), pairs),
            prop::collection::vec(0..pairs, 0..3),
        )
            .prop_map(|(n, bits, doubled)| {
                let mut g = Graph::new(n);
                for v in 1..n {
                    g.add_edge(v - 1, v).unwrap();
                }
                let mut k = 0;
                let mut all = Vec::new();
                for j in 1..n {
                    for i in 0..j {
                        all.push((i, j));
                        if bits[k] && i + 1 != j {
                            g.add_edge(i, j).unwrap();
                        }
                        k += 1;
                    }
                }
                for d in doubled {
                    let (i, j) = all[d];
                    g.add_edge(i, j).unwrap();
                }
                g
            })
    })
}

fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().map(|(_, u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.order(), &edges).unwrap()
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn euler_formula_and_odd_face_parity(g in connected_graph(9)) {
        if let Planarity::Planar(emb) = planar::compute_embedding(&g).unwrap() {
            prop_assert_eq!(emb.faces.len() + g.order(), g.size() + 2);
            prop_assert_eq!(emb.f_odd % 2, 0);
            prop_assert_eq!(planar::count_odd_faces(&emb), emb.f_odd);
            let total: usize = emb.faces.iter().map(|f| f.len()).sum();
            prop_assert_eq!(total, 2 * g.size());
        } else {
            // K5 and K3,3 are the smallest non-planar graphs.
            prop_assert!(g.order() >= 5 && g.underlying_simple().size() >= 9);
        }
    }

    #[test]
    fn contractions_share_exactly_the_cut(g in connected_graph(9), mask in any::<u32>()) {
        let shore: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
        if shore.is_empty() || shore.len() == g.order() {
            prop_assert_eq!(g.contract_shore(&shore).unwrap_err(), Error::InvalidShore);
            return Ok(());
        }
        let cut = g.cut(&shore).unwrap();
        let other = cut.complement(&g);
        let a: BTreeSet<EdgeId> = g.contract_shore(&shore).unwrap().edge_ids().into_iter().collect();
        let b: BTreeSet<EdgeId> = g.contract_shore(&other).unwrap().edge_ids().into_iter().collect();
        let cut_edges: BTreeSet<EdgeId> = cut.edges.iter().copied().collect();
        let all: BTreeSet<EdgeId> = g.edge_ids().into_iter().collect();
        prop_assert_eq!(a.intersection(&b).copied().collect::<BTreeSet<_>>(), cut_edges);
        prop_assert_eq!(a.union(&b).copied().collect::<BTreeSet<_>>(), all);
    }

    #[test]
    fn isomorphism_is_an_equivalence(
        (g, p, q) in connected_graph(9).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), permutation(n), permutation(n))
        })
    ) {
        let h = permuted(&g, &p);
        let k = permuted(&h, &q);
        prop_assert!(is_isomorphic(&g, &g).unwrap());
        prop_assert!(is_isomorphic(&g, &h).unwrap());
        prop_assert!(is_isomorphic(&h, &g).unwrap());
        prop_assert!(is_isomorphic(&h, &k).unwrap() && is_isomorphic(&g, &k).unwrap());
        prop_assert_eq!(iso::invariant(&g), iso::invariant(&k));
        let map = iso::find_isomorphism(&g, &h).unwrap().unwrap();
        for (a, b) in map {
            prop_assert_eq!(g.degree(a), h.degree(b));
        }
    }
}

#[test]
fn corpus_classes_are_pairwise_non_isomorphic() {
    for level in common::levels().iter().take(6) {
        for (i, a) in level.iter().enumerate() {
            for b in &level[i + 1..] {
                assert!(!is_isomorphic(a, b).unwrap());
            }
        }
    }
}

#[test]
fn embedding_examples() {
    let Planarity::Planar(k4) = planar::compute_embedding(&catalog::k4()).unwrap() else {
        panic!()
    };
    assert_eq!((k4.faces.len(), k4.f_odd), (4, 4));
    let Planarity::Planar(cube) = planar::compute_embedding(&catalog::cube()).unwrap() else {
        panic!()
    };
    assert_eq!((cube.faces.len(), cube.f_odd), (6, 0));
    let Planarity::Planar(c4) = planar::compute_embedding(&catalog::cycle(4)).unwrap() else {
        panic!()
    };
    assert_eq!(c4.f_odd, 0);
    match planar::compute_embedding(&catalog::k33()).unwrap() {
        Planarity::NonPlanar(w) => assert_eq!(w.kind, planar::KuratowskiKind::K33),
        Planarity::Planar(_) => panic!("K3,3 embedded"),
    }
}

#[test]
fn contraction_of_a_c4_edge() {
    // Shrinking two adjacent vertices of C4 leaves a triangle: the two
    // crossing edges plus the far edge.
    let c4 = catalog::cycle(4);
    let h = c4.contract_shore(&[0, 1]).unwrap();
    assert_eq!((h.order(), h.size()), (3, 3));
    assert!(is_isomorphic(&h, &catalog::cycle(3)).unwrap());
    let same = c4.contract_shore(&[2]).unwrap();
    assert!(is_isomorphic(&same, &c4).unwrap());
}
