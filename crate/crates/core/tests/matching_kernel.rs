mod common;

use cyclex_core::cycles::{self, Parity};
use cyclex_core::matching;
use cyclex_core::{catalog, ear};
use proptest::prelude::*;

#[test]
fn conformality_definitions_agree() {
    for g in common::even(6).filter(|g| matching::is_matchable(g)) {
        let pms = matching::enumerate_perfect_matchings(g).unwrap();
        for c in matching::enumerate_even_cycles(g).unwrap() {
            assert_eq!(
                matching::is_conformal_subgraph(g, &c.vertices),
                matching::is_conformal_by_matchings(&pms, &c),
            );
        }
    }
}

#[test]
fn matching_covered_iff_every_edge_on_a_conformal_cycle() {
    for g in common::even(6).filter(|g| g.order() > 2 && matching::is_matchable(g)) {
        let conformal: Vec<_> = matching::enumerate_even_cycles(g)
            .unwrap()
            .into_iter()
            .filter(|c| matching::is_conformal_subgraph(g, &c.vertices))
            .collect();
        let covered = g
            .edge_ids()
            .into_iter()
            .all(|e| conformal.iter().any(|c| c.contains_edge(e)));
        assert_eq!(covered, matching::is_matching_covered(g));
    }
}

#[test]
fn any_two_edges_share_a_conformal_cycle() {
    for g in common::mcg(6).into_iter().filter(|g| g.order() > 2) {
        let edges = g.edge_ids();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                let c = matching::conformal_cycle_through(g, e, f).unwrap();
                assert!(c.is_valid_in(g) && c.contains_edge(e) && c.contains_edge(f));
                assert!(matching::is_conformal_subgraph(g, &c.vertices));
            }
        }
    }
}

#[test]
fn doubletons_meet_even_cycles_in_zero_or_two_edges() {
    let mut checked = 0;
    for g in common::mcg(8) {
        if matching::is_near_bipartite(g).unwrap().is_none() {
            continue;
        }
        for (a, b) in matching::removable_doubletons(g).unwrap() {
            for c in cycles::enumerate_cycles(g, Parity::Even).unwrap() {
                let meet = c.contains_edge(a) as usize + c.contains_edge(b) as usize;
                assert!(meet != 1);
            }
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn ear_decompositions_from_r8_minus() {
    let g = catalog::r8_minus();
    for c in matching::enumerate_even_cycles(&g).unwrap() {
        if matching::is_conformal_subgraph(&g, &c.vertices) {
            let d = ear::extend_ear_decomposition(&g, &c).unwrap();
            d.validate(&g).unwrap();
            for p in d.prefixes(&g).unwrap() {
                assert!(matching::is_matching_covered(&p));
            }
        }
    }
}

#[test]
fn k2_is_matching_covered_and_ce() {
    let k2 = catalog::k2();
    assert!(matching::is_matching_covered(&k2));
    assert!(matching::brute_force_cycle_extendable(&k2).unwrap().is_ce());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// A parallel edge never changes the oracle's verdict.
    #[test]
    fn parallel_edges_preserve_the_verdict(pick in any::<prop::sample::Index>(), edge in any::<prop::sample::Index>()) {
        let all = common::mcg(8);
        let g = all[pick.index(all.len())];
        let edges = g.edge_ids();
        let (u, v) = g.endpoints(edges[edge.index(edges.len())]).unwrap();
        let mut h = g.clone();
        h.add_edge(u, v).unwrap();
        prop_assert!(matching::is_matching_covered(&h));
        prop_assert_eq!(
            matching::brute_force_cycle_extendable(g).unwrap().is_ce(),
            matching::brute_force_cycle_extendable(&h).unwrap().is_ce()
        );
    }
}
