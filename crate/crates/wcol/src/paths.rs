//! Orderings of paths with matching upper and lower bounds.
//!
//! Three constructions live here:
//!
//! * [`path_td_ordering`] — places the middle vertex first and recurses into
//!   both halves, realizing the treedepth `⌈log₂(n+1)⌉` at radius ∞.
//! * [`block_ordering`] — places every r-th vertex first, then orders each
//!   leftover block of at most `r-1` vertices by treedepth. The resulting
//!   ordering satisfies `wcol_r ≤ ⌈log₂ r⌉ + 2` however long the path is.
//! * [`path_lower_witness`] — for *any* ordering of a path on at least `2r`
//!   vertices, finds a vertex that weakly r-reaches at least
//!   `⌈log₂(r+1)⌉ + 1` vertices. The two bounds meet when r is a power of 2.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;
use crate::ordering::VertexOrdering;
use crate::radius::Radius;
use crate::reach::{wreach_set, wreach_sets};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("witness needs a path on at least 2r = {min} vertices, got {n}")]
    TooShort { n: usize, min: usize },
}

/// Smallest `t` with `2^t >= x`.
pub(crate) fn ceil_log2(x: u64) -> u32 {
    match x {
        0 | 1 => 0,
        _ => u64::BITS - (x - 1).leading_zeros(),
    }
}

/// The path on vertices `0..n` with edges `i — i+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathGraph {
    n: usize,
}

impl PathGraph {
    pub fn new(n: usize) -> Self {
        PathGraph { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> Graph {
        Graph::path(self.n)
    }
}

/// The treedepth of the n-vertex path, `⌈log₂(n+1)⌉`.
///
/// This is also its weak ∞-coloring number. `n = 0` is degenerate and gives 0.
pub fn path_td_value(n: usize) -> usize {
    ceil_log2(n as u64 + 1) as usize
}

/// An ordering of the path realizing `wcol_∞ = path_td_value(n)`: the middle
/// vertex of each segment comes first, halves are processed breadth-first, so
/// every vertex is preceded by all its recursion ancestors. Even-length
/// segments take the left of the two middle candidates (`⌈len/2⌉`-th vertex).
pub fn path_td_ordering(p: &PathGraph) -> VertexOrdering {
    let mut seq = Vec::with_capacity(p.n);
    let mut segments = VecDeque::new();
    if p.n > 0 {
        segments.push_back((0, p.n - 1));
    }
    while let Some((lo, hi)) = segments.pop_front() {
        let len = hi - lo + 1;
        let mid = lo + len.div_ceil(2) - 1;
        seq.push(mid);
        if mid > lo {
            segments.push_back((lo, mid - 1));
        }
        if mid < hi {
            segments.push_back((mid + 1, hi));
        }
    }
    VertexOrdering::from_sequence(seq).unwrap()
}

/// The anchored block ordering for radius `r ≥ 1`.
///
/// Every r-th vertex (0-based ids `r-1, 2r-1, …`) is an anchor; anchors come
/// first in path order. Removing them leaves blocks of at most `r-1`
/// consecutive vertices, each ordered by [`path_td_ordering`] and emitted
/// left to right. A vertex then weakly r-reaches at most 2 anchors plus its
/// recursion ancestors inside its block, giving `wcol_r ≤ ⌈log₂ r⌉ + 2`.
/// At `r = 1` every vertex is an anchor and the ordering is the identity.
pub fn block_ordering(p: &PathGraph, r: usize) -> VertexOrdering {
    assert!(r >= 1, "block ordering needs radius r >= 1");
    let n = p.n;
    let anchors: Vec<usize> = (r - 1..n).step_by(r).collect();
    let mut seq = anchors.clone();
    let mut block_start = 0;
    for i in 0..=anchors.len() {
        let block_end = if i < anchors.len() { anchors[i] } else { n }; // exclusive
        let len = block_end - block_start;
        if len > 0 {
            let local = path_td_ordering(&PathGraph::new(len));
            seq.extend(local.sequence().iter().map(|&j| block_start + j));
        }
        block_start = block_end + 1;
    }
    VertexOrdering::from_sequence(seq).unwrap()
}

/// A vertex certified to have a large weak r-reach set, together with that
/// set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    pub vertex: usize,
    pub reach: Vec<usize>,
}

/// For any ordering σ of a path on `n ≥ 2r` vertices, returns a vertex whose
/// weak r-reach set has at least `⌈log₂(r+1)⌉ + 1` elements.
///
/// The σ-minimum vertex v₀ splits the path; a side with at least `r` vertices
/// exists (ties prefer the left side). Among the `r` vertices of that side
/// closest to v₀, the one with the largest weak ∞-reach inside the subpath
/// (ties toward the smaller id) already collects `⌈log₂(r+1)⌉` vertices
/// within distance `r - 1`, and v₀ itself is one step further.
pub fn path_lower_witness(
    p: &PathGraph,
    sigma: &VertexOrdering,
    r: usize,
) -> Result<PathWitness, PathError> {
    assert!(r >= 1, "witness needs radius r >= 1");
    let n = p.n;
    if n < 2 * r {
        return Err(PathError::TooShort { n, min: 2 * r });
    }
    let v0 = sigma.at(0);
    // Left side has v0 vertices, right side n - 1 - v0; one of them has ≥ r.
    let q_block: Vec<usize> =
        if v0 >= r { (v0 - r..v0).collect() } else { (v0 + 1..=v0 + r).collect() };
    let sub = p.graph().induced(&q_block).unwrap();
    let restricted = sigma.restrict(&q_block);
    let inner_sets = wreach_sets(&sub.graph, &restricted, Radius::Infinity);
    // Ties go to the smaller vertex id; block ids ascend with local index.
    let mut best_local = 0;
    for i in 1..q_block.len() {
        if inner_sets[i].len() > inner_sets[best_local].len() {
            best_local = i;
        }
    }
    let vertex = q_block[best_local];
    let reach = wreach_set(&p.graph(), sigma, vertex, Radius::Finite(r));
    Ok(PathWitness { vertex, reach })
}

/// The vertices of `g` in path order, if `g` is a path (or a single vertex);
/// the endpoint with the smaller id comes first.
pub fn path_sequence(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 || g.m() != n - 1 || !g.is_connected() {
        return None;
    }
    if (0..n).any(|v| g.degree(v) > 2) {
        return None;
    }
    if n == 1 {
        return Some(vec![0]);
    }
    let start = (0..n).find(|&v| g.degree(v) == 1).unwrap();
    let mut seq = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start)[0];
    while seq.len() < n {
        seq.push(cur);
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev);
        match next {
            Some(w) => {
                prev = cur;
                cur = w;
            }
            None => break,
        }
    }
    (seq.len() == n).then_some(seq)
}
