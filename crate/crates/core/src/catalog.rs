//! Named graphs used throughout the tests and the CLI.
//!
//! Vertex numbering is fixed; several tests refer to specific ids.

use alloc::vec::Vec;

use crate::graph::{EdgeId, Graph};

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("catalog graphs are well formed")
}

pub fn k2() -> Graph {
    build(2, &[(0, 1)])
}

/// `C_n` on `0..n`, edge `i` joins `i` and `i+1 mod n`. `cycle(2)` is a
/// pair of parallel edges.
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    build(n, &edges)
}

pub fn k4() -> Graph {
    complete(4)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    build(a + b, &edges)
}

pub fn k33() -> Graph {
    complete_bipartite(3, 3)
}

/// The 3-cube: vertices are 3-bit words, adjacent when they differ in one bit.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in [1, 2, 4] {
            let v = u ^ bit;
            if u < v {
                edges.push((u, v));
            }
        }
    }
    build(8, &edges)
}

/// Outer 5-cycle `0..5`, spokes `i, i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

/// Kneser graph `K(5,2)`: 2-subsets of a 5-set, adjacent when disjoint.
pub fn kneser_5_2() -> Graph {
    let mut subsets = Vec::new();
    for a in 0..5u32 {
        for b in a + 1..5 {
            subsets.push((1u32 << a) | (1 << b));
        }
    }
    let mut edges = Vec::new();
    for i in 0..subsets.len() {
        for j in i + 1..subsets.len() {
            if subsets[i] & subsets[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    build(subsets.len(), &edges)
}

/// Odd wheel: hub `0`, rim `1..=k` in order.
pub fn wheel(k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((0, 1 + i));
        edges.push((1 + i, 1 + (i + 1) % k));
    }
    build(k + 1, &edges)
}

/// Odd prism: cycles `w_i = i` and `z_i = k + i`, rungs `w_i z_i`.
pub fn prism(k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    build(2 * k, &edges)
}

/// Cubic graph with two triangles `{1,2,3}` and `{5,6,7}`; its tight cut
/// decomposition gives two `K4`s and one `K_{3,3}`.
pub fn two_triangle_cubic() -> Graph {
    build(
        10,
        &[
            (1, 2),
            (2, 3),
            (3, 1),
            (5, 6),
            (6, 7),
            (7, 5),
            (9, 8),
            (9, 0),
            (9, 4),
            (5, 4),
            (6, 0),
            (7, 8),
            (1, 4),
            (3, 8),
            (2, 0),
        ],
    )
}

/// Bipartite half biwheel on six vertices: path `0..=4`, hub `5`.
pub fn half_biwheel6() -> Graph {
    build(6, &[(0, 5), (5, 2), (0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
}

/// `W5^-`: hub `0`, rim `1-2-3-4-5`, no spoke to `3`.
pub fn w5_minus() -> Graph {
    build(
        6,
        &[(1, 2), (0, 1), (0, 2), (0, 4), (0, 5), (2, 3), (3, 4), (4, 5), (5, 1)],
    )
}

/// The bicorn `R8`. Its unique removable edge is [`R8_REMOVABLE`].
pub fn r8() -> Graph {
    build(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 5),
            (5, 4),
            (4, 3),
            (3, 0),
            (3, 7),
            (7, 6),
            (6, 2),
            (7, 0),
            (5, 6),
            (1, 4),
        ],
    )
}

pub const R8_REMOVABLE: EdgeId = EdgeId(11);

/// `R8 - e`, the smallest hexagon half biwheel.
pub fn r8_minus() -> Graph {
    let mut g = r8();
    g.remove_edge(R8_REMOVABLE).expect("edge exists");
    g
}

/// The tricorn `R10`: center `0`, triangles `{1,8,9}`, `{3,4,5}`, `{2,6,7}`.
/// Its strictly thin edges are [`R10_STRICTLY_THIN`].
pub fn r10() -> Graph {
    build(
        10,
        &[
            (1, 8),
            (8, 9),
            (9, 1),
            (3, 4),
            (4, 5),
            (5, 3),
            (2, 6),
            (6, 7),
            (7, 2),
            (9, 5),
            (4, 7),
            (6, 8),
            (1, 0),
            (0, 2),
            (0, 3),
        ],
    )
}

pub const R10_STRICTLY_THIN: [EdgeId; 3] = [EdgeId(1), EdgeId(4), EdgeId(7)];

/// Pentagonal prism with one rung removed: inner cycle on even ids, outer on
/// odd ids, rungs `(2i, 2i+1)` except `(2, 3)`.
pub fn pentagonal_prism_minus_edge() -> Graph {
    build(
        10,
        &[
            (0, 2),
            (2, 4),
            (4, 6),
            (6, 8),
            (8, 0),
            (1, 3),
            (3, 5),
            (5, 7),
            (7, 9),
            (9, 1),
            (0, 1),
            (4, 5),
            (6, 7),
            (8, 9),
        ],
    )
}

/// Half biwheel of order eight: path `0..=6`, hub `7`.
pub fn half_biwheel8() -> Graph {
    build(
        8,
        &[
            (0, 7),
            (7, 2),
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 7),
            (4, 5),
            (5, 6),
            (6, 7),
        ],
    )
}

/// Bowtie: triangles `0-1-2` and `0-3-4` sharing vertex `0`.
pub fn bowtie() -> Graph {
    build(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
}

/// Subdivide edge `e` with `k` new vertices; the new path keeps `e`'s id on
/// its first segment.
pub fn subdivide(g: &Graph, e: EdgeId, k: usize) -> Graph {
    let mut h = g.clone();
    let (u, v) = h.remove_edge(e).expect("edge exists");
    let mut prev = u;
    for _ in 0..k {
        let w = h.add_vertex();
        h.add_edge(prev, w).expect("fresh vertex");
        prev = w;
    }
    h.add_edge(prev, v).expect("distinct ends");
    h
}
