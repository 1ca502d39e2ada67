//! Weak and strong r-reachability under a vertex ordering.
//!
//! For an ordering σ and radius r, a vertex `u` is *weakly r-reachable* from
//! `v` if some u–v path of length at most r has `u` as its σ-smallest vertex.
//! `u` is *strongly r-reachable* if additionally every internal vertex of the
//! path lies σ-after `v`. Reach sets here always contain `v` itself, so the
//! maximum set size at radius 1 is the usual coloring number (degeneracy + 1)
//! in both the weak and the strong case.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;
use crate::ordering::VertexOrdering;
use crate::radius::Radius;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReachError {
    #[error("ordering covers {sigma} vertices but the graph has {n}")]
    LengthMismatch { sigma: usize, n: usize },
    #[error("maximum over an empty graph is undefined")]
    EmptyGraph,
}

/// Which reachability notion an operation uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReachKind {
    Weak,
    Strong,
}

fn check_len(g: &Graph, sigma: &VertexOrdering) {
    assert_eq!(
        sigma.len(),
        g.n(),
        "ordering covers {} vertices but the graph has {}",
        sigma.len(),
        g.n()
    );
}

/// Weak r-reach sets of every vertex, each sorted ascending by vertex id.
///
/// Finite radii use one position-restricted BFS per source: a BFS from `u`
/// confined to vertices placed at or after `u` visits exactly the vertices
/// that weakly reach `u`, so the whole sweep costs O(n·(n+m)). The unbounded
/// case instead merges suffix components while scanning σ backwards.
pub fn wreach_sets(g: &Graph, sigma: &VertexOrdering, r: Radius) -> Vec<Vec<usize>> {
    check_len(g, sigma);
    let n = g.n();
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); n];
    match r.effective(n) {
        Some(depth) => {
            let mut dist = vec![usize::MAX; n];
            let mut touched = Vec::new();
            let mut queue = VecDeque::new();
            for i in 0..n {
                let u = sigma.at(i);
                dist[u] = 0;
                touched.clear();
                touched.push(u);
                queue.clear();
                queue.push_back(u);
                sets[u].push(u);
                while let Some(x) = queue.pop_front() {
                    if dist[x] == depth {
                        continue;
                    }
                    for &w in g.neighbors(x) {
                        if dist[w] == usize::MAX && sigma.position(w) > i {
                            dist[w] = dist[x] + 1;
                            touched.push(w);
                            queue.push_back(w);
                            sets[w].push(u);
                        }
                    }
                }
                for &w in &touched {
                    dist[w] = usize::MAX;
                }
            }
        }
        None => {
            // Scan σ from the back. When u is activated, its component among
            // the already-active (σ-larger) vertices is exactly the set of
            // vertices that weakly ∞-reach u.
            let mut dsu = Dsu::new(n);
            let mut active = vec![false; n];
            for i in (0..n).rev() {
                let u = sigma.at(i);
                active[u] = true;
                for &w in g.neighbors(u) {
                    if active[w] {
                        dsu.union(u, w);
                    }
                }
                for &v in dsu.members(u) {
                    sets[v].push(u);
                }
            }
        }
    }
    for set in &mut sets {
        set.sort_unstable();
    }
    sets
}

/// The weak r-reach set of a single vertex, sorted ascending.
///
/// Runs a bounded max-min relaxation from `v`: after d rounds, each vertex w
/// holds the largest achievable "minimum position along a walk" over walks
/// v→w of length ≤ d. `u` weakly reaches exactly when its own position is
/// achievable, i.e. some walk avoids everything placed before `u`.
pub fn wreach_set(g: &Graph, sigma: &VertexOrdering, v: usize, r: Radius) -> Vec<usize> {
    check_len(g, sigma);
    let n = g.n();
    let rounds = r.effective(n).unwrap_or(n.saturating_sub(1));
    let mut best: Vec<Option<usize>> = vec![None; n];
    best[v] = Some(sigma.position(v));
    let mut frontier = vec![v];
    for _ in 0..rounds {
        let mut next = Vec::new();
        for &x in &frontier {
            let bx = best[x].unwrap();
            for &w in g.neighbors(x) {
                let cand = bx.min(sigma.position(w));
                if best[w].is_none_or(|cur| cand > cur) {
                    best[w] = Some(cand);
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        next.dedup();
        frontier = next;
    }
    (0..n).filter(|&u| best[u] == Some(sigma.position(u))).collect()
}

/// `max_v |WReach_r[v]|`, the weak r-coloring number realized by σ.
pub fn wcol_under(g: &Graph, sigma: &VertexOrdering, r: Radius) -> Result<usize, ReachError> {
    if sigma.len() != g.n() {
        return Err(ReachError::LengthMismatch { sigma: sigma.len(), n: g.n() });
    }
    if g.n() == 0 {
        return Err(ReachError::EmptyGraph);
    }
    Ok(wreach_sets(g, sigma, r).iter().map(Vec::len).max().unwrap())
}

/// The strong r-reach set of `v`, sorted ascending: `v` itself plus every
/// earlier vertex joined to `v` by a path of length ≤ r whose internal
/// vertices all lie after `v`.
pub fn sreach_set(g: &Graph, sigma: &VertexOrdering, v: usize, r: Radius) -> Vec<usize> {
    check_len(g, sigma);
    let n = g.n();
    let mut out = vec![v];
    if r != Radius::Finite(0) {
        // Internal vertices live strictly after v, so a BFS through that
        // suffix finds every qualifying path; depth d vertices yield targets
        // at path length d+1.
        let max_internal_depth = r.effective(n).unwrap_or(n).saturating_sub(1);
        let pv = sigma.position(v);
        let mut seen = vec![false; n];
        seen[v] = true;
        let mut found = vec![false; n];
        let mut queue = VecDeque::from([(v, 0usize)]);
        while let Some((x, d)) = queue.pop_front() {
            for &w in g.neighbors(x) {
                if sigma.position(w) < pv {
                    if !found[w] {
                        found[w] = true;
                        out.push(w);
                    }
                } else if !seen[w] && w != v && d < max_internal_depth {
                    seen[w] = true;
                    queue.push_back((w, d + 1));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// All strong r-reach sets; `sets[v]` is sorted ascending.
pub fn sreach_sets(g: &Graph, sigma: &VertexOrdering, r: Radius) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| sreach_set(g, sigma, v, r)).collect()
}

/// `max_v |SReach_r[v]|`, the strong r-coloring number realized by σ.
pub fn scol_under(g: &Graph, sigma: &VertexOrdering, r: Radius) -> Result<usize, ReachError> {
    if sigma.len() != g.n() {
        return Err(ReachError::LengthMismatch { sigma: sigma.len(), n: g.n() });
    }
    if g.n() == 0 {
        return Err(ReachError::EmptyGraph);
    }
    Ok((0..g.n()).map(|v| sreach_set(g, sigma, v, r).len()).max().unwrap())
}

/// A greedy min-degree elimination ordering and the value `degeneracy + 1`,
/// which equals the minimum of `wcol_under(g, ·, 1)` over all orderings.
/// Ties among minimum-degree vertices break toward the smallest id.
pub fn degeneracy_ordering(g: &Graph) -> (VertexOrdering, usize) {
    let n = g.n();
    if n == 0 {
        return (VertexOrdering::identity(0), 0);
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut buckets: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
    for v in 0..n {
        buckets[deg[v]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    let mut max_removal_degree = 0;
    let mut cur = 0;
    for _ in 0..n {
        while buckets[cur].is_empty() {
            cur += 1;
        }
        let v = *buckets[cur].iter().next().unwrap();
        buckets[cur].remove(&v);
        removed[v] = true;
        max_removal_degree = max_removal_degree.max(cur);
        removal.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                buckets[deg[w]].remove(&w);
                deg[w] -= 1;
                buckets[deg[w]].insert(w);
            }
        }
        cur = cur.saturating_sub(1);
    }
    removal.reverse();
    (VertexOrdering::from_sequence(removal).unwrap(), max_removal_degree + 1)
}

/// Disjoint-set union with explicit member lists, merged smaller-into-larger.
struct Dsu {
    parent: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), members: (0..n).map(|v| vec![v]).collect() }
    }

    fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = v;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.members[ra].len() < self.members[rb].len() {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        let moved = std::mem::take(&mut self.members[rb]);
        self.members[ra].extend(moved);
    }

    fn members(&mut self, v: usize) -> &[usize] {
        let r = self.find(v);
        &self.members[r]
    }
}
