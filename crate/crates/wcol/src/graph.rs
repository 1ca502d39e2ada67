//! Finite simple undirected graphs on vertices `0..n`.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    OutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v} rejected")]
    SelfLoop { v: usize },
    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("vertex list must be strictly increasing and in range")]
    BadVertexList,
}

/// Simple undirected graph. Adjacency lists are kept sorted ascending;
/// self-loops and parallel edges are rejected at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Inserts the edge `uv`. Re-inserting an existing edge is a no-op;
    /// returns whether the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::OutOfRange { v: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { v: u });
        }
        if self.has_edge(u, v) {
            return Ok(false);
        }
        let iu = self.adj[u].partition_point(|&w| w < v);
        self.adj[u].insert(iu, v);
        let iv = self.adj[v].partition_point(|&w| w < u);
        self.adj[v].insert(iv, u);
        self.m += 1;
        Ok(true)
    }

    /// Appends `count` isolated vertices, returning the id of the first one.
    pub fn add_vertices(&mut self, count: usize) -> usize {
        let first = self.n();
        self.adj.resize(first + count, Vec::new());
        first
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// All edges as pairs `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Connected components, each sorted ascending, ordered by minimum vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `vertices`, which must be strictly increasing.
    /// New vertex `i` corresponds to `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Subgraph, GraphError> {
        let n = self.n();
        if !vertices.windows(2).all(|w| w[0] < w[1]) || vertices.iter().any(|&v| v >= n) {
            return Err(GraphError::BadVertexList);
        }
        let mut local = vec![usize::MAX; n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if w > v && local[w] != usize::MAX {
                    g.add_edge(i, local[w]).unwrap();
                }
            }
        }
        Ok(Subgraph { graph: g, vertices: vertices.to_vec() })
    }

    /// The graph with `v` and its incident edges removed. Vertices above `v`
    /// shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        let n = self.n();
        if v >= n {
            return Err(GraphError::OutOfRange { v, n });
        }
        let map = |x: usize| if x < v { x } else { x - 1 };
        let mut g = Graph::new(n - 1);
        for (a, b) in self.edges() {
            if a != v && b != v {
                g.add_edge(map(a), map(b)).unwrap();
            }
        }
        Ok(g)
    }

    /// Contracts the edge `uv`. The merged vertex keeps the smaller id;
    /// vertices above the larger id shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        let (w, z) = (u.min(v), u.max(v));
        let map = |x: usize| {
            if x == z {
                w
            } else if x < z {
                x
            } else {
                x - 1
            }
        };
        let mut g = Graph::new(self.n() - 1);
        for (a, b) in self.edges() {
            let (a, b) = (map(a), map(b));
            if a != b {
                g.add_edge(a, b).unwrap();
            }
        }
        Ok(g)
    }
}

/// An induced subgraph together with its vertex map back into the host graph:
/// local vertex `i` is host vertex `vertices[i]`, and `vertices` is ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

impl Subgraph {
    pub fn to_host(&self, local: usize) -> usize {
        self.vertices[local]
    }
}
