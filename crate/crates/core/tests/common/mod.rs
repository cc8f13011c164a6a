#![allow(dead_code)]

use std::sync::OnceLock;

use cyclex_core::generate;
use cyclex_core::graph::Graph;
use cyclex_core::matching;

/// Connected simple graphs on 1..=8 vertices, by order.
pub fn levels() -> &'static [Vec<Graph>] {
    static LEVELS: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    LEVELS.get_or_init(|| generate::connected_graphs_up_to(8).unwrap())
}

/// Connected simple graphs of even order up to `n_max`.
pub fn even(n_max: usize) -> impl Iterator<Item = &'static Graph> {
    levels()
        .iter()
        .enumerate()
        .filter(move |(i, _)| (i + 1) % 2 == 0 && *i < n_max)
        .flat_map(|(_, l)| l.iter())
}

/// Matching covered graphs of the exhaustive corpus up to `n_max`.
pub fn mcg(n_max: usize) -> Vec<&'static Graph> {
    static ALL: OnceLock<Vec<Graph>> = OnceLock::new();
    ALL.get_or_init(|| even(8).filter(|g| matching::is_matching_covered(g)).cloned().collect())
        .iter()
        .filter(|g| g.order() <= n_max)
        .collect()
}

pub fn is_two_connected(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && g.vertices().all(|v| g.without_vertices(&[v]).is_connected())
}

pub fn is_three_connected(g: &Graph) -> bool {
    let vs: Vec<_> = g.vertices().collect();
    if vs.len() < 4 || !g.is_connected() {
        return false;
    }
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.without_vertices(&[a, b]).is_connected()))
}
