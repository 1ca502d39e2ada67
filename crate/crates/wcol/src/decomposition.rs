//! Tree decompositions, the k-simple property, and the operations that
//! preserve it: vertex deletions, edge contractions, and the reduction of a
//! BFS layer to a decomposition of one order lower.
//!
//! A decomposition is *k-simple* when its width is at most `k` and no set of
//! `k` vertices appears in more than two bags. Graphs admitting one — the
//! subgraphs of simple k-trees — have "simple treewidth" at most `k`; paths
//! (k = 1), outerplanar graphs (k = 2) and planar treewidth-3 graphs (k = 3)
//! are the first interesting levels.

use std::collections::{BTreeSet, HashMap, VecDeque};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bfs::BfsLayering;
use crate::graph::{Graph, GraphError, Subgraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TdError {
    #[error("decomposition must have at least one node")]
    NoNodes,
    #[error("tree edge ({s}, {t}) out of range for {nodes} nodes")]
    TreeEdgeOutOfRange { s: usize, t: usize, nodes: usize },
    #[error("{edges} tree edges cannot form a tree on {nodes} nodes")]
    WrongEdgeCount { edges: usize, nodes: usize },
    #[error("tree edges do not connect all {nodes} nodes")]
    TreeDisconnected { nodes: usize },
    #[error("bag {node} contains vertex {v}, but the graph has {n} vertices")]
    BagVertexOutOfRange { node: usize, v: usize, n: usize },
    #[error("vertex {v} appears in no bag")]
    VertexUncovered { v: usize },
    #[error("nodes whose bags contain vertex {v} do not induce a subtree")]
    SubtreeDisconnected { v: usize },
    #[error("edge ({u}, {v}) is covered by no bag")]
    EdgeUncovered { u: usize, v: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LayerError {
    #[error("layer {i} exceeds the layering depth {depth}")]
    LayerOutOfRange { i: usize, depth: usize },
    #[error("invalid input decomposition: {0}")]
    Invalid(#[from] TdError),
    #[error("input decomposition is not {k}-simple")]
    NotKSimple { k: usize },
    #[error("ball vertex after pruning is missing from bag {node}; input was not a valid layering")]
    BallNotEverywhere { node: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShadowError {
    #[error("shadow needs a layer index i >= 1")]
    LayerZero,
    #[error("vertex {v} is not in any layer >= {i}")]
    OutsideUpperLayers { v: usize, i: usize },
    #[error("shadow is not a clique: {u} and {v} are non-adjacent (graph not chordal, or not a component)")]
    NotAClique { u: usize, v: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KtreeError {
    #[error("k must be at least 1")]
    BadK,
    #[error("a simple {k}-tree needs at least {min} vertices, got {n}")]
    TooSmall { k: usize, n: usize, min: usize },
}

/// A tree decomposition: `bags[t]` is the vertex set of node `t`, and
/// `tree_edges` connect the nodes into a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub tree_edges: Vec<(usize, usize)>,
    pub bags: Vec<BTreeSet<usize>>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<BTreeSet<usize>>, tree_edges: Vec<(usize, usize)>) -> Self {
        TreeDecomposition { tree_edges, bags }
    }

    /// Convenience constructor from bag slices.
    pub fn from_bags<I, B>(bags: I, tree_edges: Vec<(usize, usize)>) -> Self
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = usize>,
    {
        TreeDecomposition {
            tree_edges,
            bags: bags.into_iter().map(|b| b.into_iter().collect()).collect(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    /// Maximum bag size minus one; -1 for a decomposition of the empty graph.
    pub fn width(&self) -> isize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0) as isize - 1
    }

    /// Checks, in order: the nodes form a tree, bags are in range, every
    /// vertex is covered, every vertex's nodes induce a subtree, and every
    /// edge lies in some bag. The first violation is reported.
    pub fn validate(&self, g: &Graph) -> Result<(), TdError> {
        let nodes = self.node_count();
        if nodes == 0 {
            return Err(TdError::NoNodes);
        }
        for &(s, t) in &self.tree_edges {
            if s >= nodes || t >= nodes {
                return Err(TdError::TreeEdgeOutOfRange { s, t, nodes });
            }
        }
        if self.tree_edges.len() != nodes - 1 {
            return Err(TdError::WrongEdgeCount { edges: self.tree_edges.len(), nodes });
        }
        let tree_adj = self.tree_adjacency();
        let mut seen = vec![false; nodes];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(t) = queue.pop_front() {
            for &s in &tree_adj[t] {
                if !seen[s] {
                    seen[s] = true;
                    reached += 1;
                    queue.push_back(s);
                }
            }
        }
        if reached != nodes {
            return Err(TdError::TreeDisconnected { nodes });
        }

        let n = g.n();
        for (t, bag) in self.bags.iter().enumerate() {
            if let Some(&v) = bag.iter().find(|&&v| v >= n) {
                return Err(TdError::BagVertexOutOfRange { node: t, v, n });
            }
        }
        let mut nodes_of: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (t, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                nodes_of[v].push(t);
            }
        }
        for v in 0..n {
            if nodes_of[v].is_empty() {
                return Err(TdError::VertexUncovered { v });
            }
        }
        for v in 0..n {
            // BFS over the tree restricted to nodes containing v.
            let mut seen = vec![false; nodes];
            let start = nodes_of[v][0];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut count = 1;
            while let Some(t) = queue.pop_front() {
                for &s in &tree_adj[t] {
                    if !seen[s] && self.bags[s].contains(&v) {
                        seen[s] = true;
                        count += 1;
                        queue.push_back(s);
                    }
                }
            }
            if count != nodes_of[v].len() {
                return Err(TdError::SubtreeDisconnected { v });
            }
        }
        for (u, v) in g.edges() {
            if !nodes_of[u].iter().any(|&t| self.bags[t].contains(&v)) {
                return Err(TdError::EdgeUncovered { u, v });
            }
        }
        Ok(())
    }

    /// Width at most `k` and no k-subset of vertices in more than two bags.
    /// Bag sizes are then at most `k+1`, so each bag contributes at most
    /// `k+1` subsets and counting stays linear in the decomposition size.
    pub fn is_k_simple(&self, k: usize) -> bool {
        assert!(k >= 1, "k-simple is defined for k >= 1");
        if self.width() > k as isize {
            return false;
        }
        let mut count: HashMap<Vec<usize>, u32> = HashMap::new();
        for bag in &self.bags {
            let items: Vec<usize> = bag.iter().copied().collect();
            if items.len() == k {
                let c = count.entry(items).or_insert(0);
                *c += 1;
                if *c > 2 {
                    return false;
                }
            } else if items.len() == k + 1 {
                for skip in 0..items.len() {
                    let mut sub = items.clone();
                    sub.remove(skip);
                    let c = count.entry(sub).or_insert(0);
                    *c += 1;
                    if *c > 2 {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count()];
        for &(s, t) in &self.tree_edges {
            adj[s].push(t);
            adj[t].push(s);
        }
        adj
    }

    /// Keeps tree edges normalized `(min, max)` and sorted.
    fn normalize_edges(&mut self) {
        for e in &mut self.tree_edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        self.tree_edges.sort_unstable();
    }
}

/// The supergraph of `g` in which every bag of `td` induces a clique. The
/// decomposition stays valid for the result, which is chordal whenever the
/// decomposition is valid: it realizes the result as an intersection graph
/// of subtrees. Panics if a bag mentions a vertex outside `g`.
pub fn chordal_fill(g: &Graph, td: &TreeDecomposition) -> Graph {
    let mut out = g.clone();
    for bag in &td.bags {
        let items: Vec<usize> = bag.iter().copied().collect();
        for (i, &u) in items.iter().enumerate() {
            for &v in &items[i + 1..] {
                out.add_edge(u, v).expect("bag vertex outside graph");
            }
        }
    }
    out
}

/// Chordality via maximum-cardinality search: the reverse visit order is a
/// perfect elimination ordering iff the graph is chordal.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut pos = vec![usize::MAX; n];
    for step in 0..n {
        let mut v = usize::MAX;
        for u in 0..n {
            if pos[u] == usize::MAX && (v == usize::MAX || weight[u] > weight[v]) {
                v = u;
            }
        }
        pos[v] = n - 1 - step;
        for &w in g.neighbors(v) {
            if pos[w] == usize::MAX {
                weight[w] += 1;
            }
        }
    }
    for v in 0..n {
        let later: Vec<usize> =
            g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&m) = later.iter().min_by_key(|&&w| pos[w]) else { continue };
        for &w in &later {
            if w != m && !g.has_edge(m, w) {
                return false;
            }
        }
    }
    true
}

/// Deletes `v` from the graph and from every bag; ids above `v` shift down in
/// both. Returns `None` (a no-op) when `v` is not a graph vertex. Validity
/// and k-simplicity carry over to the result.
pub fn delete_vertex(
    g: &Graph,
    td: &TreeDecomposition,
    v: usize,
) -> Option<(Graph, TreeDecomposition)> {
    if v >= g.n() {
        return None;
    }
    let g2 = g.delete_vertex(v).expect("checked range");
    let bags = td
        .bags
        .iter()
        .map(|bag| {
            bag.iter().filter(|&&x| x != v).map(|&x| if x > v { x - 1 } else { x }).collect()
        })
        .collect();
    Some((g2, TreeDecomposition { tree_edges: td.tree_edges.clone(), bags }))
}

/// Contracts the graph edge `uv`; the merged vertex keeps the smaller id and
/// replaces both endpoints in every bag. Tree edges whose bags become nested
/// are then contracted away until none remain, which restores k-simplicity.
pub fn contract_edge(
    g: &Graph,
    td: &TreeDecomposition,
    u: usize,
    v: usize,
) -> Result<(Graph, TreeDecomposition), GraphError> {
    let g2 = g.contract_edge(u, v)?;
    let (w, z) = (u.min(v), u.max(v));
    let map = |x: usize| {
        if x == z {
            w
        } else if x > z {
            x - 1
        } else {
            x
        }
    };
    let bags = td.bags.iter().map(|bag| bag.iter().map(|&x| map(x)).collect()).collect();
    let mut td2 = TreeDecomposition { tree_edges: td.tree_edges.clone(), bags };
    td2.normalize_edges();
    reduce_nested_tree_edges(&mut td2);
    Ok((g2, td2))
}

/// Contracts tree edges with nested bags until none remain. Each pass scans
/// the normalized edge list in order and restarts after a contraction, so the
/// result is deterministic.
fn reduce_nested_tree_edges(td: &mut TreeDecomposition) {
    loop {
        let mut hit = None;
        for &(s, t) in &td.tree_edges {
            if td.bags[s].is_subset(&td.bags[t]) {
                hit = Some((s, t));
                break;
            }
            if td.bags[t].is_subset(&td.bags[s]) {
                hit = Some((t, s));
                break;
            }
        }
        match hit {
            Some((dead, keep)) => remove_tree_node(td, dead, Some(keep)),
            None => break,
        }
    }
}

/// Removes node `dead`; its incident edges are re-attached to `into` if
/// given (contraction) or simply dropped (leaf removal). Node ids above
/// `dead` shift down by one.
fn remove_tree_node(td: &mut TreeDecomposition, dead: usize, into: Option<usize>) {
    td.bags.remove(dead);
    let mut edges = Vec::with_capacity(td.tree_edges.len().saturating_sub(1));
    for &(a, b) in &td.tree_edges {
        let sub = |x: usize| if x == dead { into.expect("leaf has one edge") } else { x };
        if a == dead || b == dead {
            if into.is_none() {
                continue; // leaf removal drops its single edge
            }
            let (a, b) = (sub(a), sub(b));
            if a == b {
                continue; // the contracted edge itself
            }
            edges.push((a, b));
        } else {
            edges.push((a, b));
        }
    }
    for e in &mut edges {
        let shift = |x: usize| if x > dead { x - 1 } else { x };
        *e = (shift(e.0), shift(e.1));
    }
    td.tree_edges = edges;
    td.normalize_edges();
}

/// Removes leaves whose bag is contained in their neighbor's bag, repeatedly,
/// scanning node ids in ascending order. Empty leaf bags are a special case
/// and disappear too. A single surviving node is never removed.
pub fn prune_subset_leaves(td: &mut TreeDecomposition) {
    loop {
        let nodes = td.node_count();
        if nodes <= 1 {
            return;
        }
        let mut degree = vec![0usize; nodes];
        let mut neighbor = vec![usize::MAX; nodes];
        for &(s, t) in &td.tree_edges {
            degree[s] += 1;
            degree[t] += 1;
            neighbor[s] = t;
            neighbor[t] = s;
        }
        let target = (0..nodes)
            .find(|&t| degree[t] == 1 && td.bags[t].is_subset(&td.bags[neighbor[t]]));
        match target {
            Some(t) => remove_tree_node(td, t, None),
            None => return,
        }
    }
}

/// The neighborhood in layer `i-1` of a connected component of the union of
/// layers `>= i`. In a connected chordal graph this set is always a clique;
/// a non-clique outcome is reported as an error since it falsifies the
/// preconditions.
pub fn shadow(
    g: &Graph,
    layering: &BfsLayering,
    i: usize,
    component: &[usize],
) -> Result<Vec<usize>, ShadowError> {
    if i == 0 {
        return Err(ShadowError::LayerZero);
    }
    for &v in component {
        if layering.layer_of[v].is_none_or(|l| l < i) {
            return Err(ShadowError::OutsideUpperLayers { v, i });
        }
    }
    let mut result = BTreeSet::new();
    for &v in component {
        for &w in g.neighbors(v) {
            if layering.layer_of[w] == Some(i - 1) {
                result.insert(w);
            }
        }
    }
    let items: Vec<usize> = result.into_iter().collect();
    for (a, &u) in items.iter().enumerate() {
        for &v in &items[a + 1..] {
            if !g.has_edge(u, v) {
                return Err(ShadowError::NotAClique { u, v });
            }
        }
    }
    Ok(items)
}

/// Connected components of the subgraph induced by all layers `>= i`,
/// each sorted ascending, ordered by minimum vertex.
pub fn upper_layer_components(g: &Graph, layering: &BfsLayering, i: usize) -> Vec<Vec<usize>> {
    let keep: Vec<usize> = (0..g.n())
        .filter(|&v| layering.layer_of[v].is_some_and(|l| l >= i))
        .collect();
    let sub = g.induced(&keep).expect("ascending vertex list");
    sub.graph
        .connected_components()
        .into_iter()
        .map(|comp| comp.into_iter().map(|l| sub.vertices[l]).collect())
        .collect()
}

/// A decomposition of one BFS layer, expressed on the induced subgraph of
/// that layer (vertices ascending).
#[derive(Debug, Clone)]
pub struct LayerDecomposition {
    pub subgraph: Subgraph,
    pub td: TreeDecomposition,
}

/// Reduces a k-simple decomposition of `g` to a (k-1)-simple decomposition of
/// the subgraph induced by BFS layer `i`.
///
/// The construction follows the minor operations: delete everything beyond
/// layer `i`, contract the ball of layers `< i` to a single vertex ρ along a
/// BFS spanning tree, prune nested leaves until ρ sits in every bag, and
/// finally delete ρ. Every k-subset of a bag in the result paired with ρ was
/// a (k+1)-subset before, which bounds multiplicities by those of the input.
pub fn layer_decomposition(
    g: &Graph,
    td: &TreeDecomposition,
    layering: &BfsLayering,
    i: usize,
    k: usize,
) -> Result<LayerDecomposition, LayerError> {
    if i > layering.depth() {
        return Err(LayerError::LayerOutOfRange { i, depth: layering.depth() });
    }
    td.validate(g)?;
    if !td.is_k_simple(k) {
        return Err(LayerError::NotKSimple { k });
    }

    let n = g.n();
    let mut cg = g.clone();
    let mut ctd = td.clone();
    let mut cur: Vec<Option<usize>> = (0..n).map(Some).collect();

    // Drop layers beyond i (and anything outside the root's component),
    // descending so pending ids stay stable.
    for v in (0..n).rev() {
        let beyond = layering.layer_of[v].is_none_or(|l| l > i);
        if beyond {
            let cv = cur[v].take().expect("not yet deleted");
            let (g2, td2) = delete_vertex(&cg, &ctd, cv).expect("tracked id in range");
            cg = g2;
            ctd = td2;
            for slot in cur.iter_mut().flatten() {
                if *slot > cv {
                    *slot -= 1;
                }
            }
        }
    }

    if i >= 1 {
        // Contract the ball onto the root, layer by layer in BFS order; the
        // spanning-tree parent of a vertex is its smallest neighbor one
        // layer down.
        for l in 1..i {
            for &b in &layering.layers[l] {
                let parent = g
                    .neighbors(b)
                    .iter()
                    .copied()
                    .find(|&w| layering.layer_of[w] == Some(l - 1))
                    .expect("BFS layer l has a neighbor in layer l-1");
                let ca = cur[parent].expect("ball vertex alive");
                let cb = cur[b].expect("ball vertex alive");
                let (g2, td2) = contract_edge(&cg, &ctd, ca, cb)?;
                cg = g2;
                ctd = td2;
                let (w, z) = (ca.min(cb), ca.max(cb));
                for slot in cur.iter_mut().flatten() {
                    if *slot == z {
                        *slot = w;
                    } else if *slot > z {
                        *slot -= 1;
                    }
                }
            }
        }
        prune_subset_leaves(&mut ctd);
        let rho = cur[layering.root].expect("root alive");
        if let Some(node) = (0..ctd.node_count()).find(|&t| !ctd.bags[t].contains(&rho)) {
            return Err(LayerError::BallNotEverywhere { node });
        }
        let (g2, td2) = delete_vertex(&cg, &ctd, rho).expect("tracked id in range");
        cg = g2;
        ctd = td2;
        for v in 0..n {
            if layering.layer_of[v].is_some_and(|l| l < i) {
                cur[v] = None;
            } else if let Some(slot) = cur[v].as_mut() {
                if *slot > rho {
                    *slot -= 1;
                }
            }
        }
    }
    prune_subset_leaves(&mut ctd);

    // Survivors are exactly layer i, in ascending original id; deletions and
    // min-keeping contractions preserve relative order, so the current graph
    // is the canonical induced subgraph.
    let expected = g.induced(&layering.layers[i]).expect("layer list ascending");
    debug_assert_eq!(cg, expected.graph, "layer graph mismatch");
    Ok(LayerDecomposition { subgraph: expected, td: ctd })
}

/// Restriction of a decomposition to an induced subgraph: bag contents are
/// intersected with the kept vertices and relabeled to local ids.
pub fn restrict_to_subgraph(td: &TreeDecomposition, sub: &Subgraph) -> TreeDecomposition {
    let mut local = HashMap::new();
    for (l, &v) in sub.vertices.iter().enumerate() {
        local.insert(v, l);
    }
    let bags = td
        .bags
        .iter()
        .map(|bag| bag.iter().filter_map(|v| local.get(v).copied()).collect())
        .collect();
    TreeDecomposition { tree_edges: td.tree_edges.clone(), bags }
}

/// The attachment history of a randomly grown simple k-tree: vertex `v` was
/// glued onto the clique recorded with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleKTreeTrace {
    pub k: usize,
    pub seed: u64,
    pub attach_log: Vec<(usize, Vec<usize>)>,
}

/// Grows a uniformly random simple k-tree on `n` vertices: starting from
/// K_{k+1}, each new vertex is glued onto a k-clique drawn uniformly from
/// those never used before. Every k-clique hosts at most one new vertex,
/// which is exactly what keeps the natural decomposition k-simple.
/// Identical seeds reproduce identical outputs.
pub fn random_simple_ktree(
    k: usize,
    n: usize,
    seed: u64,
) -> Result<(Graph, TreeDecomposition, SimpleKTreeTrace), KtreeError> {
    if k < 1 {
        return Err(KtreeError::BadK);
    }
    if n < k + 1 {
        return Err(KtreeError::TooSmall { k, n, min: k + 1 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::complete(k + 1);
    g.add_vertices(n - (k + 1));
    let mut bags: Vec<BTreeSet<usize>> = vec![(0..=k).collect()];
    let mut tree_edges = Vec::new();
    // Unused k-cliques, each with the node whose bag introduced it.
    let mut unused: Vec<(Vec<usize>, usize)> = (0..=k)
        .map(|skip| ((0..=k).filter(|&x| x != skip).collect(), 0))
        .collect();
    let mut attach_log = Vec::new();
    for v in k + 1..n {
        let idx = rng.random_range(0..unused.len());
        let (clique, host) = unused.swap_remove(idx);
        for &c in &clique {
            g.add_edge(c, v).expect("in range");
        }
        let node = bags.len();
        bags.push(clique.iter().copied().chain([v]).collect());
        tree_edges.push((host, node));
        for skip in 0..k {
            let mut next: Vec<usize> =
                clique.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &c)| c).collect();
            next.push(v);
            next.sort_unstable();
            unused.push((next, node));
        }
        attach_log.push((v, clique));
    }
    let td = TreeDecomposition { tree_edges, bags };
    Ok((g, td, SimpleKTreeTrace { k, seed, attach_log }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3_td() -> TreeDecomposition {
        TreeDecomposition::from_bags([vec![0, 1], vec![1, 2]], vec![(0, 1)])
    }

    #[test]
    fn validate_accepts_and_orders_diagnostics() {
        let p3 = Graph::path(3);
        assert_eq!(p3_td().validate(&p3), Ok(()));

        let td = TreeDecomposition::from_bags([vec![0, 1]], vec![]);
        assert_eq!(td.validate(&p3), Err(TdError::VertexUncovered { v: 2 }));

        let td = TreeDecomposition::from_bags([vec![0], vec![1, 2], vec![0]], vec![(0, 1), (1, 2)]);
        assert_eq!(td.validate(&p3), Err(TdError::SubtreeDisconnected { v: 0 }));

        let td = TreeDecomposition::from_bags([vec![0], vec![1], vec![2]], vec![(0, 1), (1, 2)]);
        assert_eq!(td.validate(&p3), Err(TdError::EdgeUncovered { u: 0, v: 1 }));

        let td = TreeDecomposition::from_bags([vec![0, 1], vec![1, 2]], vec![]);
        assert_eq!(td.validate(&p3), Err(TdError::WrongEdgeCount { edges: 0, nodes: 2 }));

        let td = TreeDecomposition::from_bags(
            [vec![0, 1], vec![1, 2], vec![1], vec![1]],
            vec![(0, 1), (2, 3), (2, 3)],
        );
        assert_eq!(td.validate(&p3), Err(TdError::TreeDisconnected { nodes: 4 }));

        let td = TreeDecomposition { tree_edges: vec![], bags: vec![] };
        assert_eq!(td.validate(&Graph::new(0)), Err(TdError::NoNodes));
    }

    #[test]
    fn width_edge_cases() {
        assert_eq!(p3_td().width(), 1);
        let empty_bag = TreeDecomposition::from_bags([Vec::<usize>::new()], vec![]);
        assert_eq!(empty_bag.width(), -1);
        let singletons = TreeDecomposition::from_bags([vec![0], vec![1]], vec![(0, 1)]);
        assert_eq!(singletons.width(), 0);
    }

    #[test]
    fn k_simple_counts_subsets() {
        assert!(p3_td().is_k_simple(1));

        // A star's natural decomposition repeats the center three times.
        let star_td = TreeDecomposition::from_bags(
            [vec![0, 1], vec![0, 2], vec![0, 3]],
            vec![(0, 1), (1, 2)],
        );
        assert!(!star_td.is_k_simple(1));
        assert!(star_td.is_k_simple(2));

        let tri = TreeDecomposition::from_bags([vec![0, 1, 2]], vec![]);
        assert!(tri.is_k_simple(2));
        assert!(!tri.is_k_simple(1)); // width 2 > 1
    }

    #[test]
    fn chordal_fill_and_chordality() {
        assert!(!is_chordal(&Graph::cycle(4)));
        assert!(is_chordal(&Graph::path(6)));
        assert!(is_chordal(&Graph::complete(5)));
        assert!(is_chordal(&Graph::new(0)));
        let mut c5_chord = Graph::cycle(5);
        c5_chord.add_edge(0, 2).unwrap();
        assert!(!is_chordal(&c5_chord)); // 0-2-3-4 is still an induced C_4

        let c4 = Graph::cycle(4);
        let td = TreeDecomposition::from_bags([vec![0, 1, 2], vec![0, 2, 3]], vec![(0, 1)]);
        let filled = chordal_fill(&c4, &td);
        assert!(filled.has_edge(0, 2));
        assert_eq!(filled.m(), 5);
        assert!(is_chordal(&filled));
        assert_eq!(td.validate(&filled), Ok(()));
    }

    #[test]
    fn delete_vertex_on_bags() {
        let p3 = Graph::path(3);
        let (g2, td2) = delete_vertex(&p3, &p3_td(), 2).unwrap();
        assert_eq!(g2.edges(), vec![(0, 1)]);
        assert_eq!(td2, TreeDecomposition::from_bags([vec![0, 1], vec![1]], vec![(0, 1)]));
        assert_eq!(td2.validate(&g2), Ok(()));
        assert!(td2.is_k_simple(1));

        assert!(delete_vertex(&p3, &p3_td(), 3).is_none());

        // Deleting the only vertex leaves a decomposition of the empty graph.
        let k1 = Graph::new(1);
        let td = TreeDecomposition::from_bags([vec![0]], vec![]);
        let (g2, td2) = delete_vertex(&k1, &td, 0).unwrap();
        assert_eq!(g2.n(), 0);
        assert_eq!(td2.width(), -1);
        assert_eq!(td2.validate(&g2), Ok(()));
    }

    #[test]
    fn contract_edge_reduces_nested_bags() {
        let p3 = Graph::path(3);
        let (g2, td2) = contract_edge(&p3, &p3_td(), 1, 2).unwrap();
        assert_eq!(g2.edges(), vec![(0, 1)]);
        assert_eq!(td2, TreeDecomposition::from_bags([vec![0, 1]], vec![]));

        let p5 = Graph::path(5);
        let td5 = TreeDecomposition::from_bags(
            [vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4]],
            vec![(0, 1), (1, 2), (2, 3)],
        );
        let (g2, td2) = contract_edge(&p5, &td5, 2, 3).unwrap();
        assert_eq!(g2.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            td2,
            TreeDecomposition::from_bags(
                [vec![0, 1], vec![1, 2], vec![2, 3]],
                vec![(0, 1), (1, 2)]
            )
        );
        assert_eq!(td2.validate(&g2), Ok(()));
        assert!(td2.is_k_simple(1));

        assert!(contract_edge(&p5, &td5, 0, 2).is_err());
    }

    #[test]
    fn shadow_is_clique_on_chordal_inputs() {
        // Star with center 0, filled along bags {0,1,2}, {0,2,3}.
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let td = TreeDecomposition::from_bags([vec![0, 1, 2], vec![0, 2, 3]], vec![(0, 1)]);
        let filled = chordal_fill(&star, &td);
        let layering = crate::bfs::bfs_layering(&filled, 1);
        assert_eq!(layering.layers, vec![vec![1], vec![0, 2], vec![3]]);
        assert_eq!(shadow(&filled, &layering, 2, &[3]), Ok(vec![0, 2]));
        assert_eq!(shadow(&filled, &layering, 1, &[0, 2, 3]), Ok(vec![1]));
        assert_eq!(shadow(&filled, &layering, 1, &[]), Ok(vec![]));
        assert_eq!(shadow(&filled, &layering, 0, &[0]), Err(ShadowError::LayerZero));
        assert_eq!(
            shadow(&filled, &layering, 2, &[0]),
            Err(ShadowError::OutsideUpperLayers { v: 0, i: 2 })
        );

        // C_4 is not chordal and its far layer sees a non-clique shadow.
        let c4 = Graph::cycle(4);
        let layering = crate::bfs::bfs_layering(&c4, 0);
        assert_eq!(
            shadow(&c4, &layering, 2, &[2]),
            Err(ShadowError::NotAClique { u: 1, v: 3 })
        );
    }

    #[test]
    fn upper_layer_component_enumeration() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let layering = crate::bfs::bfs_layering(&star, 1);
        assert_eq!(upper_layer_components(&star, &layering, 2), vec![vec![2], vec![3]]);
        assert_eq!(upper_layer_components(&star, &layering, 1), vec![vec![0, 2, 3]]);
    }

    #[test]
    fn layer_decomposition_on_triangle() {
        let tri = Graph::complete(3);
        let td = TreeDecomposition::from_bags([vec![0, 1, 2]], vec![]);
        let layering = crate::bfs::bfs_layering(&tri, 0);

        let ld = layer_decomposition(&tri, &td, &layering, 1, 2).unwrap();
        assert_eq!(ld.subgraph.vertices, vec![1, 2]);
        assert_eq!(ld.subgraph.graph.edges(), vec![(0, 1)]);
        assert_eq!(ld.td, TreeDecomposition::from_bags([vec![0, 1]], vec![]));
        assert_eq!(ld.td.validate(&ld.subgraph.graph), Ok(()));
        assert!(ld.td.is_k_simple(1));

        let ld0 = layer_decomposition(&tri, &td, &layering, 0, 2).unwrap();
        assert_eq!(ld0.subgraph.vertices, vec![0]);
        assert_eq!(ld0.td, TreeDecomposition::from_bags([vec![0]], vec![]));

        assert!(matches!(
            layer_decomposition(&tri, &td, &layering, 5, 2),
            Err(LayerError::LayerOutOfRange { .. })
        ));
    }

    #[test]
    fn layer_decomposition_with_deeper_ball() {
        // Path decomposition of P_6, layers from vertex 0, layer 2 = {2}.
        let p6 = Graph::path(6);
        let bags: Vec<Vec<usize>> = (0..5).map(|j| vec![j, j + 1]).collect();
        let td = TreeDecomposition::from_bags(bags, (0..4).map(|j| (j, j + 1)).collect());
        let layering = crate::bfs::bfs_layering(&p6, 0);
        for i in 0..=5 {
            let ld = layer_decomposition(&p6, &td, &layering, i, 1).unwrap();
            assert_eq!(ld.subgraph.vertices, vec![i]);
            assert_eq!(ld.td.validate(&ld.subgraph.graph), Ok(()));
            assert_eq!(ld.td.node_count(), 1);
        }
    }

    #[test]
    fn random_ktree_shapes() {
        let (g, td, trace) = random_simple_ktree(1, 5, 42).unwrap();
        assert_eq!((g.n(), g.m()), (5, 4));
        assert!(g.is_connected());
        assert!((0..5).all(|v| g.degree(v) <= 2), "a simple 1-tree is a path");
        assert_eq!(td.validate(&g), Ok(()));
        assert!(td.is_k_simple(1));
        assert_eq!(trace.attach_log.len(), 3);

        let (g, td, _) = random_simple_ktree(2, 3, 0).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(td.node_count(), 1);

        assert_eq!(random_simple_ktree(0, 5, 0), Err(KtreeError::BadK));
        assert_eq!(random_simple_ktree(3, 2, 0), Err(KtreeError::TooSmall { k: 3, n: 2, min: 4 }));
    }

    #[test]
    fn random_ktree_is_valid_and_simple() {
        for k in 1..=4 {
            for seed in 0..6 {
                let n = k + 1 + (seed as usize % 3) * 7 + 4;
                let (g, td, _) = random_simple_ktree(k, n, seed).unwrap();
                assert_eq!(td.validate(&g), Ok(()), "k={k} seed={seed}");
                assert!(td.is_k_simple(k), "k={k} seed={seed}");
                assert_eq!(td.width(), k as isize);
                assert!(is_chordal(&g));
            }
        }
    }

    #[test]
    fn random_ktree_seed_determinism() {
        let a = random_simple_ktree(3, 30, 9).unwrap();
        let b = random_simple_ktree(3, 30, 9).unwrap();
        assert_eq!(a.0, b.0);
        assert_eq!(a.1, b.1);
    }

    #[test]
    fn restriction_to_component() {
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        let td = TreeDecomposition::from_bags(
            [vec![0, 1], vec![1, 2], vec![3, 4]],
            vec![(0, 1), (1, 2)],
        );
        let sub = g.induced(&[3, 4]).unwrap();
        let restricted = restrict_to_subgraph(&td, &sub);
        assert_eq!(restricted.bags[2], BTreeSet::from([0, 1]));
        assert_eq!(restricted.validate(&sub.graph), Ok(()));
    }
}
