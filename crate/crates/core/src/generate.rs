//! Exhaustive enumeration of small connected simple graphs.
//!
//! Graphs on `n` vertices come from graphs on `n - 1` vertices by adding a
//! vertex joined to a nonempty subset of the old ones. Every connected graph
//! arises this way (delete a non-cut vertex), and duplicates are dropped by
//! bucketing on [`iso::invariant`] and testing isomorphism within a bucket.
//! The output order is deterministic.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso;

/// Largest order accepted; there are about a million connected graphs on
/// ten vertices, far beyond desk scale.
pub const MAX_EXHAUSTIVE: usize = 9;

/// Isomorphism classes seen so far, bucketed by invariant.
#[derive(Default)]
pub struct IsoSet {
    buckets: BTreeMap<u64, Vec<usize>>,
    graphs: Vec<Graph>,
}

impl IsoSet {
    pub fn new() -> IsoSet {
        IsoSet::default()
    }

    /// Adds `g` unless an isomorphic graph is present; returns whether it
    /// was added.
    pub fn insert(&mut self, g: Graph) -> Result<bool> {
        let key = iso::invariant(&g);
        let bucket = self.buckets.entry(key).or_default();
        for &i in bucket.iter() {
            if iso::is_isomorphic(&self.graphs[i], &g)? {
                return Ok(false);
            }
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
        Ok(true)
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.graphs
    }
}

/// One graph per isomorphism class of connected simple graphs on `n`
/// vertices.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_graphs_up_to(n)?.pop().unwrap_or_default())
}

/// Entry `i` holds the connected simple graphs on `i + 1` vertices.
pub fn connected_graphs_up_to(n_max: usize) -> Result<Vec<Vec<Graph>>> {
    if n_max > MAX_EXHAUSTIVE {
        return Err(Error::CapExceeded {
            order: n_max,
            cap: MAX_EXHAUSTIVE,
        });
    }
    if n_max == 0 {
        return Ok(Vec::new());
    }
    let mut levels = vec![vec![Graph::new(1)]];
    for n in 2..=n_max {
        let mut set = IsoSet::new();
        for g in &levels[n - 2] {
            for subset in 1u32..(1u32 << (n - 1)) {
                let mut h = g.clone();
                let v = h.add_vertex();
                for u in 0..n - 1 {
                    if subset >> u & 1 == 1 {
                        h.add_edge(u, v)?;
                    }
                }
                set.insert(h)?;
            }
        }
        levels.push(set.into_graphs());
    }
    Ok(levels)
}
