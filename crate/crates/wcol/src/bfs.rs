//! Breadth-first layerings.

use std::collections::VecDeque;

use crate::graph::Graph;

/// A breadth-first layering from `root`: `layer_of[v]` is the distance from
/// `root` (`None` outside the root's component), `layers[i]` lists the
/// vertices at distance `i` in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsLayering {
    pub root: usize,
    pub layer_of: Vec<Option<usize>>,
    pub layers: Vec<Vec<usize>>,
}

impl BfsLayering {
    /// Index of the last layer.
    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }
}

pub fn bfs_layering(g: &Graph, root: usize) -> BfsLayering {
    assert!(root < g.n(), "root {root} out of range");
    let mut layer_of = vec![None; g.n()];
    layer_of[root] = Some(0);
    let mut layers = vec![vec![root]];
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let d = layer_of[u].unwrap();
        for &w in g.neighbors(u) {
            if layer_of[w].is_none() {
                layer_of[w] = Some(d + 1);
                if layers.len() == d + 1 {
                    layers.push(Vec::new());
                }
                layers[d + 1].push(w);
                queue.push_back(w);
            }
        }
    }
    for layer in &mut layers {
        layer.sort_unstable();
    }
    BfsLayering { root, layer_of, layers }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_layers_by_distance() {
        let l = bfs_layering(&Graph::path(5), 2);
        assert_eq!(l.layer_of, vec![Some(2), Some(1), Some(0), Some(1), Some(2)]);
        assert_eq!(l.layers, vec![vec![2], vec![1, 3], vec![0, 4]]);
        assert_eq!(l.depth(), 2);
    }

    #[test]
    fn other_components_stay_unassigned() {
        let g = Graph::from_edges(4, [(0, 1)]).unwrap();
        let l = bfs_layering(&g, 1);
        assert_eq!(l.layer_of, vec![Some(1), Some(0), None, None]);
        assert_eq!(l.layers, vec![vec![1], vec![0]]);
    }

    #[test]
    fn single_vertex() {
        let l = bfs_layering(&Graph::new(1), 0);
        assert_eq!(l.layers, vec![vec![0]]);
        assert_eq!(l.depth(), 0);
    }
}
