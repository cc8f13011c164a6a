mod common;

use cyclex_core::graph::{EdgeId, Graph};
use cyclex_core::iso::is_isomorphic;
use cyclex_core::reduction::{self, ReductionStep};
use cyclex_core::{catalog, decomposition, matching, patterns, planar};
use proptest::prelude::*;

fn ce(g: &Graph) -> bool {
    matching::brute_force_cycle_extendable(g).unwrap().is_ce()
}

fn k23_based(g: &Graph) -> bool {
    patterns::find_k23_bisubdivision(g).unwrap().is_some()
}

#[test]
fn reduction_preserves_cycle_extendability() {
    for g in common::mcg(8) {
        let (h, trace) = reduction::to_irreducible(g).unwrap();
        assert!(reduction::is_irreducible(&h));
        assert!(matching::is_matching_covered(&h));
        assert_eq!(ce(g), ce(&h));
        assert_eq!(trace.replay(g).unwrap(), h);
        assert_eq!(trace.k2_degenerate, h.order() == 2);
    }
}

#[test]
fn parallel_steps_come_first() {
    let mut g = catalog::subdivide(&catalog::k4(), EdgeId(0), 2);
    g.add_edge(1, 2).unwrap();
    let (h, trace) = reduction::to_irreducible(&g).unwrap();
    assert!(matches!(trace.steps[0], ReductionStep::Parallel { .. }));
    assert!(trace.steps.iter().any(|s| matches!(s, ReductionStep::Series { .. })));
    assert!(is_isomorphic(&h, &catalog::k4()).unwrap());
}

#[test]
fn bisplit_then_bicontract_round_trips() {
    let mut checked = 0;
    for g in common::mcg(6) {
        for v in g.vertices() {
            let inc: Vec<EdgeId> = g.incident(v).iter().map(|&(e, _)| e).collect();
            if inc.len() < 4 {
                continue;
            }
            for mask in 0u32..(1 << inc.len()) {
                let part: Vec<EdgeId> = (0..inc.len()).filter(|i| mask >> i & 1 == 1).map(|i| inc[i]).collect();
                if part.len() < 2 || inc.len() - part.len() < 2 {
                    continue;
                }
                let (h, v0) = reduction::bisplit(g, v, &part).unwrap();
                let back = reduction::bicontract(&h, v0).unwrap();
                assert!(is_isomorphic(&back, g).unwrap());
                // K2,3-basedness lifts from the bicontraction.
                if k23_based(g) {
                    assert!(k23_based(&h));
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn bicontraction_ends_reject_bad_vertices() {
    assert!(reduction::bicontract(&catalog::k4(), 0).is_err());
    let mut g = catalog::k2();
    g.add_edge(0, 1).unwrap();
    assert!(reduction::bicontraction_ends(&g, 0).is_err());
}

fn is_wheel_or_prism(g: &Graph) -> bool {
    let n = g.order();
    (n.is_multiple_of(2) && is_isomorphic(g, &catalog::wheel(n - 1)).unwrap())
        || (n % 4 == 2 && is_isomorphic(g, &catalog::prism(n / 2)).unwrap())
}

/// Ladder with rungs `a_i b_i` (`a_i = i`, `b_i = 3 + i`), capped by apexes
/// `6` and `7` joined to each other.
fn staircase8() -> Graph {
    let edges = [
        (0, 3),
        (1, 4),
        (2, 5),
        (0, 1),
        (1, 2),
        (3, 4),
        (4, 5),
        (6, 0),
        (6, 3),
        (7, 2),
        (7, 5),
        (6, 7),
    ];
    Graph::from_edges(8, &edges).unwrap()
}

/// Path `0..6` with hub `6` on the even positions and the last vertex, hub
/// `7` on the odd positions and the first vertex.
fn truncated_biwheel8() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 1)).collect();
    edges.extend([(6, 0), (6, 2), (6, 4), (6, 5), (7, 1), (7, 3), (7, 5), (7, 0)]);
    Graph::from_edges(8, &edges).unwrap()
}

#[test]
fn planar_bricks_outside_the_exceptional_families_have_strictly_thin_edges() {
    let exceptional = [staircase8(), truncated_biwheel8()];
    assert!(is_isomorphic(&exceptional[0], &catalog::r8()).unwrap());
    let mut checked = 0;
    let mut exceptions = 0;
    for g in common::mcg(8) {
        if !g.is_simple() || !planar::is_planar(g).unwrap() || !decomposition::is_brick(g).unwrap() {
            continue;
        }
        let strict = reduction::strictly_thin_edges(g).unwrap();
        if is_wheel_or_prism(g) {
            continue;
        }
        if exceptional.iter().any(|x| is_isomorphic(g, x).unwrap()) {
            assert!(strict.is_empty());
            exceptions += 1;
            continue;
        }
        assert!(!strict.is_empty());
        let thin = reduction::thin_edges(g).unwrap();
        assert!(strict.iter().all(|e| thin.contains(e)));
        checked += 1;
    }
    assert_eq!(exceptions, 2);
    assert!(checked > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Bisubdividing an edge and doubling another reduces to the same
    /// terminal, up to isomorphism, with the same verdict.
    #[test]
    fn reduction_is_confluent_on_variants(
        pick in any::<prop::sample::Index>(),
        sub in any::<prop::sample::Index>(),
        dbl in any::<prop::sample::Index>(),
    ) {
        let all = common::mcg(6);
        let g = all[pick.index(all.len())];
        let edges = g.edge_ids();
        let mut h = catalog::subdivide(g, edges[sub.index(edges.len())], 2);
        let (u, v) = g.endpoints(edges[dbl.index(edges.len())]).unwrap();
        h.add_edge(u, v).unwrap();
        prop_assert!(matching::is_matching_covered(&h));
        let (a, _) = reduction::to_irreducible(g).unwrap();
        let (b, _) = reduction::to_irreducible(&h).unwrap();
        prop_assert!(is_isomorphic(&a, &b).unwrap());
        prop_assert_eq!(ce(g), ce(&h));
    }
}
