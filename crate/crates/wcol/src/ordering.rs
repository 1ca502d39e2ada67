//! Linear vertex orderings.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderingError {
    #[error("sequence of length {got} is not a permutation of 0..{expected}")]
    NotAPermutation { got: usize, expected: usize },
}

/// A permutation of the vertices `0..n`, queryable in both directions:
/// `at(i)` is the vertex in position `i`, `position(v)` its inverse.
///
/// Smaller position means earlier, i.e. smaller with respect to the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    seq: Vec<usize>,
    pos: Vec<usize>,
}

impl VertexOrdering {
    pub fn identity(n: usize) -> Self {
        VertexOrdering { seq: (0..n).collect(), pos: (0..n).collect() }
    }

    pub fn from_sequence(seq: Vec<usize>) -> Result<Self, OrderingError> {
        let n = seq.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(OrderingError::NotAPermutation { got: n, expected: n });
            }
            pos[v] = i;
        }
        Ok(VertexOrdering { seq, pos })
    }

    /// A seeded uniformly random ordering; identical seeds give identical
    /// orderings on every platform.
    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seq: Vec<usize> = (0..n).collect();
        seq.shuffle(&mut rng);
        VertexOrdering::from_sequence(seq).unwrap()
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// The vertex placed at position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.seq[i]
    }

    /// The position of vertex `v`.
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    /// Vertices in order, earliest first.
    pub fn sequence(&self) -> &[usize] {
        &self.seq
    }

    /// True iff `u` is placed strictly before `v`.
    pub fn before(&self, u: usize, v: usize) -> bool {
        self.pos[u] < self.pos[v]
    }

    /// Rank-order restriction to a subgraph: `vertices[i]` is the host vertex
    /// behind local vertex `i`, and local vertices are ordered exactly as
    /// their hosts are in `self`.
    pub fn restrict(&self, vertices: &[usize]) -> VertexOrdering {
        let mut locals: Vec<usize> = (0..vertices.len()).collect();
        locals.sort_by_key(|&i| self.pos[vertices[i]]);
        VertexOrdering::from_sequence(locals).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_invert_sequence() {
        let o = VertexOrdering::from_sequence(vec![2, 0, 3, 1]).unwrap();
        assert_eq!(o.at(0), 2);
        assert_eq!(o.position(2), 0);
        assert_eq!(o.position(1), 3);
        assert!(o.before(2, 1));
        for i in 0..o.len() {
            assert_eq!(o.position(o.at(i)), i);
        }
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(VertexOrdering::from_sequence(vec![0, 0, 1]).is_err());
        assert!(VertexOrdering::from_sequence(vec![0, 3]).is_err());
    }

    #[test]
    fn random_is_seed_deterministic() {
        let a = VertexOrdering::random(20, 7);
        let b = VertexOrdering::random(20, 7);
        let c = VertexOrdering::random(20, 8);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn restriction_preserves_relative_order() {
        // Host order (4, 1, 3, 0, 2) restricted to hosts {1, 2, 4}:
        // 4 first, then 1, then 2.
        let o = VertexOrdering::from_sequence(vec![4, 1, 3, 0, 2]).unwrap();
        let r = o.restrict(&[1, 2, 4]);
        assert_eq!(r.sequence(), &[2, 0, 1]);
    }
}
