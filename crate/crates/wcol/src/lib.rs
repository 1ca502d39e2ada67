//! Weak coloring numbers for graphs of bounded simple treewidth.
//!
//! The crate is organized around one pipeline: build or load a graph, produce
//! a linear vertex ordering with a certified guarantee, and evaluate (or
//! exactly minimize) generalized coloring numbers under that ordering.
//!
//! * [`graph`], [`ordering`], [`radius`], [`bfs`] — basic types.
//! * [`reach`] — weak/strong r-reachability, `wcol`/`scol` under an ordering,
//!   degeneracy orderings.
//! * [`paths`] — treedepth-optimal orderings of paths, the block ordering that
//!   achieves `wcol_r ≤ ⌈log₂ r⌉ + 2`, and the matching lower-bound witness.
//! * [`decomposition`] — tree decompositions, the `k`-simple property, minor
//!   operations, layer decompositions, and a random simple-`k`-tree generator.
//! * [`stw`] — the layered ordering achieving
//!   `wcol_r ≤ (r+1)^(k-1) (⌈log₂ r⌉ + 2)` on graphs of simple treewidth `k`.
//! * [`lowerbound`] — the layered family `G_{r,k}` whose every ordering has a
//!   vertex weakly r-reaching `g(r,k)` vertices, plus the witness procedure.
//! * [`exact`] — branch-and-bound exact `wcol`/`scol` and exact treedepth.
//! * [`io`] — file formats shared with the command-line tool.

pub mod bfs;
pub mod decomposition;
pub mod exact;
pub mod graph;
pub mod io;
pub mod lowerbound;
pub mod ordering;
pub mod paths;
pub mod radius;
pub mod reach;
pub mod stw;

pub use bfs::{bfs_layering, BfsLayering};

pub use graph::{Graph, Subgraph};
pub use ordering::VertexOrdering;
pub use radius::Radius;
