//! Incremental row reduction over GF(2).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

/// A basis kept in echelon form, keyed by each row's highest set bit.
#[derive(Clone, Debug, Default)]
pub struct Gf2Basis {
    rows: BTreeMap<usize, Vec<u64>>,
    width: usize,
}

impl Gf2Basis {
    /// A basis for vectors with `width` coordinates.
    pub fn new(width: usize) -> Self {
        Gf2Basis {
            rows: BTreeMap::new(),
            width,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// A zero vector of the right length.
    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.width.div_ceil(64)]
    }

    /// Vector with the given coordinates set.
    pub fn vector<I: IntoIterator<Item = usize>>(&self, ones: I) -> Vec<u64> {
        let mut v = self.zero();
        for i in ones {
            v[i / 64] ^= 1 << (i % 64);
        }
        v
    }

    /// Reduces `v` against the basis; returns whether it was independent
    /// (and was therefore added).
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        while let Some(p) = top_bit(&v) {
            match self.rows.get(&p) {
                Some(row) => {
                    for (a, b) in v.iter_mut().zip(row) {
                        *a ^= b;
                    }
                }
                None => {
                    self.rows.insert(p, v);
                    return true;
                }
            }
        }
        false
    }

    /// Is `v` in the span of the basis?
    pub fn contains(&self, v: &[u64]) -> bool {
        let mut v = v.to_vec();
        while let Some(p) = top_bit(&v) {
            match self.rows.get(&p) {
                Some(row) => {
                    for (a, b) in v.iter_mut().zip(row) {
                        *a ^= b;
                    }
                }
                None => return false,
            }
        }
        true
    }
}

fn top_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .rev()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dependent_vectors_do_not_raise_rank() {
        let mut b = Gf2Basis::new(130);
        assert!(b.insert(b.vector([0, 1])));
        assert!(b.insert(b.vector([1, 129])));
        assert!(!b.insert(b.vector([0, 129])));
        assert!(!b.insert(b.zero()));
        assert_eq!(b.rank(), 2);
        assert!(b.contains(&b.vector([0, 129])));
        assert!(!b.contains(&b.vector([5])));
    }
}
