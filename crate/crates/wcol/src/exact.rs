//! Exact minimization of coloring numbers and treedepth on small graphs.
//!
//! The coloring-number search walks ordering prefixes in lexicographic order.
//! Once a vertex is placed, its weak (or strong) r-reach set is already
//! determined: every unplaced vertex sits after the whole prefix, and reach
//! membership only depends on whether intermediate vertices sit before or
//! after the candidates, not on their exact order. A prefix dies as soon as a
//! placed vertex's reach exceeds the incumbent.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::graph::Graph;
use crate::ordering::VertexOrdering;
use crate::radius::Radius;
use crate::reach::{degeneracy_ordering, scol_under, wcol_under, ReachKind};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("graph is empty")]
    EmptyGraph,
    #[error("graph on {n} vertices exceeds the bitmask word width of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("forest covers {forest} vertices but the graph has {n}")]
    ForestMismatch { forest: usize, n: usize },
    #[error("parent map contains a cycle")]
    CyclicParent,
    #[error("parent {p} out of range for forest on {n} vertices")]
    ParentOutOfRange { p: usize, n: usize },
}

/// Whether a search ran to completion or gave up at its node budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Optimal,
    /// The node budget ran out; `value`/`ordering` carry the best incumbent,
    /// which is a valid upper bound but not certified minimal.
    BudgetExhausted,
}

/// Result of an exact coloring-number search. When `status` is `Optimal`,
/// `value` is the true minimum over all orderings, `ordering` the
/// lexicographically smallest one attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactColoring {
    pub value: usize,
    pub ordering: VertexOrdering,
    pub nodes_explored: u64,
    pub status: SearchStatus,
}

/// Minimizes `wcol_under` (or `scol_under`) over all vertex orderings.
///
/// The incumbent starts from the degeneracy ordering, a cheap valid upper
/// bound. `budget` caps the number of prefix extensions evaluated.
pub fn exact_min_coloring(
    g: &Graph,
    r: Radius,
    kind: ReachKind,
    budget: Option<u64>,
) -> Result<ExactColoring, ExactError> {
    let n = g.n();
    if n == 0 {
        return Err(ExactError::EmptyGraph);
    }
    let (seed_ord, _) = degeneracy_ordering(g);
    let seed_val = match kind {
        ReachKind::Weak => wcol_under(g, &seed_ord, r),
        ReachKind::Strong => scol_under(g, &seed_ord, r),
    }
    .expect("nonempty graph");

    let mut search = Search {
        g,
        r_eff: r.effective(n),
        kind,
        budget,
        pos: vec![None; n],
        prefix: Vec::with_capacity(n),
        best_val: seed_val,
        best_seq: seed_ord.sequence().to_vec(),
        from_search: false,
        nodes: 0,
        exhausted: false,
    };
    search.dfs(0);

    Ok(ExactColoring {
        value: search.best_val,
        ordering: VertexOrdering::from_sequence(search.best_seq).unwrap(),
        nodes_explored: search.nodes,
        status: if search.exhausted { SearchStatus::BudgetExhausted } else { SearchStatus::Optimal },
    })
}

/// Exact weak r-coloring number: minimum of `wcol_under` over all orderings.
pub fn exact_wcol(g: &Graph, r: Radius, budget: Option<u64>) -> Result<ExactColoring, ExactError> {
    exact_min_coloring(g, r, ReachKind::Weak, budget)
}

/// Exact strong r-coloring number: minimum of `scol_under` over all orderings.
pub fn exact_scol(g: &Graph, r: Radius, budget: Option<u64>) -> Result<ExactColoring, ExactError> {
    exact_min_coloring(g, r, ReachKind::Strong, budget)
}

struct Search<'a> {
    g: &'a Graph,
    r_eff: Option<usize>,
    kind: ReachKind,
    budget: Option<u64>,
    pos: Vec<Option<usize>>,
    prefix: Vec<usize>,
    best_val: usize,
    best_seq: Vec<usize>,
    from_search: bool,
    nodes: u64,
    exhausted: bool,
}

impl Search<'_> {
    fn dfs(&mut self, cur_max: usize) {
        let n = self.g.n();
        if self.prefix.len() == n {
            let improves = cur_max < self.best_val
                || (cur_max == self.best_val && !self.from_search);
            if improves {
                self.best_val = cur_max;
                self.best_seq = self.prefix.clone();
                self.from_search = true;
            }
            return;
        }
        for x in 0..n {
            if self.exhausted {
                return;
            }
            if self.pos[x].is_some() {
                continue;
            }
            if let Some(b) = self.budget {
                if self.nodes >= b {
                    self.exhausted = true;
                    return;
                }
            }
            self.nodes += 1;
            let depth = self.prefix.len();
            self.pos[x] = Some(depth);
            self.prefix.push(x);
            let w = match self.kind {
                ReachKind::Weak => self.weak_reach_size(x),
                ReachKind::Strong => self.strong_reach_size(x),
            };
            // Reaches of already-placed vertices never change, so any
            // completion of this prefix scores at least w.
            let dead = w > self.best_val || (w == self.best_val && self.from_search);
            if !dead {
                self.dfs(cur_max.max(w));
            }
            self.prefix.pop();
            self.pos[x] = None;
        }
    }

    /// |WReach_r[x]| in any completion of the current prefix (x placed last).
    /// Candidates are the placed vertices; a BFS from each candidate u over
    /// vertices placed at-or-after u — unplaced counts as after — decides
    /// whether u reaches x within r.
    fn weak_reach_size(&self, x: usize) -> usize {
        let n = self.g.n();
        let mut count = 0;
        let mut dist = vec![usize::MAX; n];
        for &u in &self.prefix {
            let pu = self.pos[u].unwrap();
            dist.fill(usize::MAX);
            dist[u] = 0;
            let mut queue = VecDeque::from([u]);
            let mut reached = u == x;
            'bfs: while let Some(y) = queue.pop_front() {
                if let Some(limit) = self.r_eff {
                    if dist[y] == limit {
                        continue;
                    }
                }
                for &w in self.g.neighbors(y) {
                    if dist[w] == usize::MAX && self.pos[w].map_or(true, |p| p >= pu) {
                        dist[w] = dist[y] + 1;
                        if w == x {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if reached {
                count += 1;
            }
        }
        count
    }

    /// |SReach_r[x]| in any completion: x plus the placed vertices reachable
    /// through unplaced (σ-later) internal vertices within r steps.
    fn strong_reach_size(&self, x: usize) -> usize {
        if self.r_eff == Some(0) {
            return 1;
        }
        let n = self.g.n();
        let max_internal = self.r_eff.unwrap_or(n).saturating_sub(1);
        let mut found = vec![false; n];
        let mut seen = vec![false; n];
        seen[x] = true;
        let mut count = 1;
        let mut queue = VecDeque::from([(x, 0usize)]);
        while let Some((y, d)) = queue.pop_front() {
            for &w in self.g.neighbors(y) {
                match self.pos[w] {
                    Some(_) if w != x => {
                        if !found[w] {
                            found[w] = true;
                            count += 1;
                        }
                    }
                    None if !seen[w] && d < max_internal => {
                        seen[w] = true;
                        queue.push_back((w, d + 1));
                    }
                    _ => {}
                }
            }
        }
        count
    }
}

/// A rooted spanning forest given by parent pointers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationForest {
    parent: Vec<Option<usize>>,
}

impl EliminationForest {
    /// Validates that the parent map is acyclic and in range.
    pub fn new(parent: Vec<Option<usize>>) -> Result<Self, ExactError> {
        let n = parent.len();
        let mut state = vec![0u8; n]; // 0 unvisited, 1 in progress, 2 done
        for start in 0..n {
            let mut v = start;
            let mut chain = Vec::new();
            while state[v] == 0 {
                state[v] = 1;
                chain.push(v);
                match parent[v] {
                    Some(p) if p < n => {
                        if state[p] == 1 {
                            return Err(ExactError::CyclicParent);
                        }
                        v = p;
                        if state[v] == 2 {
                            break;
                        }
                    }
                    Some(p) => return Err(ExactError::ParentOutOfRange { p, n }),
                    None => break,
                }
            }
            for c in chain {
                state[c] = 2;
            }
        }
        Ok(EliminationForest { parent })
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.parent[v].is_none()).collect()
    }

    /// Number of vertices on the longest root-to-leaf chain.
    pub fn height(&self) -> usize {
        let n = self.len();
        let mut depth = vec![0usize; n];
        let mut best = 0;
        for v in 0..n {
            let mut d = depth[v];
            if d == 0 {
                // Walk up to a vertex of known depth, then unwind.
                let mut chain = vec![v];
                let mut top = v;
                while let Some(p) = self.parent[top] {
                    if depth[p] != 0 {
                        break;
                    }
                    chain.push(p);
                    top = p;
                }
                let base = self.parent[top].map_or(0, |p| depth[p]);
                for (i, &u) in chain.iter().rev().enumerate() {
                    depth[u] = base + i + 1;
                }
                d = depth[v];
            }
            best = best.max(d);
        }
        best
    }

    /// True iff `v` is an ancestor of `w` (or equal).
    fn is_ancestor(&self, v: usize, w: usize) -> bool {
        let mut cur = Some(w);
        while let Some(x) = cur {
            if x == v {
                return true;
            }
            cur = self.parent[x];
        }
        false
    }
}

/// True iff every edge of `g` joins an ancestor-descendant pair of `f`, i.e.
/// `g` is a subgraph of the forest's closure.
pub fn check_elimination_forest(g: &Graph, f: &EliminationForest) -> Result<bool, ExactError> {
    if f.len() != g.n() {
        return Err(ExactError::ForestMismatch { forest: f.len(), n: g.n() });
    }
    Ok(g.edges().iter().all(|&(u, v)| f.is_ancestor(u, v) || f.is_ancestor(v, u)))
}

/// Result of the exact treedepth computation: the minimum height of an
/// elimination forest whose closure contains the graph, plus such a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactTreedepth {
    pub value: usize,
    pub forest: EliminationForest,
    pub nodes_explored: u64,
}

/// Exact treedepth by memoized deletion of root candidates.
///
/// Subproblems are vertex subsets as bitmasks, so `n` is capped at 64; the
/// memo only ever holds connected subsets. Practical for general graphs up to
/// n ≈ 16 and for sparse graphs (e.g. paths) well beyond.
pub fn exact_treedepth(g: &Graph) -> Result<ExactTreedepth, ExactError> {
    let n = g.n();
    if n > 64 {
        return Err(ExactError::TooLarge { n, max: 64 });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | (1 << w)))
        .collect();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    let mut solver = TdSolver { adj, memo: HashMap::new(), nodes: 0 };
    let mut value = 0;
    for comp in solver.components(full) {
        value = value.max(solver.solve(comp));
    }
    let mut parent = vec![None; n];
    for comp in solver.components(full) {
        solver.assign(comp, None, &mut parent);
    }
    let forest = EliminationForest::new(parent).expect("solver emits a valid forest");
    Ok(ExactTreedepth { value, forest, nodes_explored: solver.nodes })
}

struct TdSolver {
    adj: Vec<u64>,
    memo: HashMap<u64, (usize, usize)>, // connected mask -> (value, best root)
    nodes: u64,
}

impl TdSolver {
    fn components(&self, mask: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = mask;
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            loop {
                let mut grown = comp;
                let mut bits = comp;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    grown |= self.adj[v] & mask;
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Treedepth of the connected subgraph induced by `mask`.
    fn solve(&mut self, mask: u64) -> usize {
        if mask.count_ones() == 1 {
            return 1;
        }
        if let Some(&(val, _)) = self.memo.get(&mask) {
            return val;
        }
        self.nodes += 1;
        let mut best = (usize::MAX, 0);
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = mask & !(1u64 << v);
            let mut val = 1;
            for comp in self.components(rest) {
                val = val.max(1 + self.solve(comp));
            }
            if val < best.0 {
                best = (val, v);
            }
        }
        self.memo.insert(mask, best);
        best.0
    }

    fn assign(&mut self, mask: u64, above: Option<usize>, parent: &mut [Option<usize>]) {
        let root = if mask.count_ones() == 1 {
            mask.trailing_zeros() as usize
        } else {
            self.solve(mask);
            self.memo[&mask].1
        };
        parent[root] = above;
        let rest = mask & !(1u64 << root);
        for comp in self.components(rest) {
            self.assign(comp, Some(root), parent);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_wcol_c4_radius2() {
        let res = exact_wcol(&Graph::cycle(4), Radius::Finite(2), None).unwrap();
        assert_eq!(res.value, 3);
        assert_eq!(res.status, SearchStatus::Optimal);
        assert_eq!(res.ordering.sequence(), &[0, 2, 1, 3]);
        assert_eq!(wcol_under(&Graph::cycle(4), &res.ordering, Radius::Finite(2)), Ok(3));
    }

    #[test]
    fn exact_wcol_paths() {
        for (n, r, expect) in [(2, 1, 2), (4, 2, 3), (8, 4, 4)] {
            let res = exact_wcol(&Graph::path(n), Radius::Finite(r), None).unwrap();
            assert_eq!(res.value, expect, "P_{n} r={r}");
            assert_eq!(res.status, SearchStatus::Optimal);
        }
    }

    #[test]
    fn exact_scol_c4_radius2() {
        let res = exact_scol(&Graph::cycle(4), Radius::Finite(2), None).unwrap();
        assert_eq!(res.value, 3);
        assert_eq!(scol_under(&Graph::cycle(4), &res.ordering, Radius::Finite(2)), Ok(3));
    }

    #[test]
    fn exact_radius1_is_degeneracy() {
        for g in [Graph::cycle(5), Graph::complete(4), Graph::path(6)] {
            let (_, c) = degeneracy_ordering(&g);
            let res = exact_wcol(&g, Radius::Finite(1), None).unwrap();
            assert_eq!(res.value, c);
        }
    }

    #[test]
    fn budget_exhaustion_is_explicit() {
        let res = exact_wcol(&Graph::cycle(6), Radius::Finite(2), Some(3)).unwrap();
        assert_eq!(res.status, SearchStatus::BudgetExhausted);
        assert!(res.nodes_explored <= 3);
        // Incumbent is still a valid upper bound with a replayable witness.
        assert_eq!(
            wcol_under(&Graph::cycle(6), &res.ordering, Radius::Finite(2)),
            Ok(res.value)
        );
    }

    #[test]
    fn treedepth_small_graphs() {
        assert_eq!(exact_treedepth(&Graph::path(7)).unwrap().value, 3);
        assert_eq!(exact_treedepth(&Graph::cycle(4)).unwrap().value, 3);
        assert_eq!(exact_treedepth(&Graph::complete(4)).unwrap().value, 4);
        assert_eq!(exact_treedepth(&Graph::new(1)).unwrap().value, 1);
        assert_eq!(exact_treedepth(&Graph::new(0)).unwrap().value, 0);
    }

    #[test]
    fn treedepth_witness_replays() {
        for g in [Graph::path(9), Graph::cycle(7), Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4)]).unwrap()] {
            let res = exact_treedepth(&g).unwrap();
            assert!(check_elimination_forest(&g, &res.forest).unwrap());
            assert_eq!(res.forest.height(), res.value);
        }
    }

    #[test]
    fn treedepth_matches_path_formula() {
        for n in 1..=20 {
            let res = exact_treedepth(&Graph::path(n)).unwrap();
            assert_eq!(res.value, crate::paths::path_td_value(n), "n={n}");
        }
    }

    #[test]
    fn forest_validation() {
        assert!(EliminationForest::new(vec![Some(1), Some(2), Some(0)]).is_err());
        let f = EliminationForest::new(vec![None, Some(0), Some(1), Some(0)]).unwrap();
        assert_eq!(f.roots(), vec![0]);
        assert_eq!(f.height(), 3);
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 3)]).unwrap();
        assert!(check_elimination_forest(&g, &f).unwrap());
        let h = Graph::from_edges(4, [(2, 3)]).unwrap();
        assert!(!check_elimination_forest(&h, &f).unwrap());
        assert!(check_elimination_forest(&Graph::new(2), &f).is_err());
    }
}
