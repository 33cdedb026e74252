//! Vertex-colored undirected simple graphs.

use std::collections::VecDeque;

use crate::error::CoreError;

/// An undirected simple graph where every vertex carries one color index.
///
/// Adjacency lists are kept sorted, so two graphs built from the same edge
/// set compare equal regardless of edge insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    adjacency: Vec<Vec<usize>>,
    colors: Vec<usize>,
    num_colors: usize,
}

impl ColoredGraph {
    /// Builds a graph from a color per vertex and an edge list.
    ///
    /// Rejects self-loops, duplicate edges (in either orientation), vertex ids
    /// out of range and colors `>= num_colors`. Colors in `0..num_colors` may
    /// go unused.
    pub fn new(
        num_colors: usize,
        colors: Vec<usize>,
        edges: &[(usize, usize)],
    ) -> Result<Self, CoreError> {
        let n = colors.len();
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= num_colors) {
            return Err(CoreError::ColorOutOfRange {
                vertex,
                color,
                num_colors,
            });
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(CoreError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(CoreError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(CoreError::DuplicateEdge(a, b));
            }
        }
        Ok(Self {
            adjacency,
            colors,
            num_colors,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.colors.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for (u, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    /// Same graph structure with a different coloring.
    pub fn recolored(&self, num_colors: usize, colors: Vec<usize>) -> Result<Self, CoreError> {
        if colors.len() != self.num_vertices() {
            return Err(CoreError::DimensionMismatch {
                what: "color vector",
                expected: self.num_vertices(),
                found: colors.len(),
            });
        }
        Self::new(num_colors, colors, &self.edges())
    }

    /// Subgraph induced by `vertices` (in the given order), plus the map from
    /// new ids back to original ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (ColoredGraph, Vec<usize>) {
        let mut position = vec![usize::MAX; self.num_vertices()];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adjacency[v] {
                if position[w] != usize::MAX {
                    adjacency[i].push(position[w]);
                }
            }
            adjacency[i].sort_unstable();
        }
        let colors = vertices.iter().map(|&v| self.colors[v]).collect();
        (
            ColoredGraph {
                adjacency,
                colors,
                num_colors: self.num_colors,
            },
            vertices.to_vec(),
        )
    }

    pub fn is_connected(&self) -> bool {
        self.num_vertices() <= 1 || self.components().len() == 1
    }

    /// Connected components of the whole graph.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.num_vertices()).collect();
        connected_components(self, &all).expect("all vertex ids are in range")
    }
}

/// Splits `subset` into the maximal connected pieces of the subgraph it
/// induces.
///
/// Components are returned sorted internally and ordered by their smallest
/// vertex id. Duplicate ids in `subset` are ignored.
pub fn connected_components(
    graph: &ColoredGraph,
    subset: &[usize],
) -> Result<Vec<Vec<usize>>, CoreError> {
    let n = graph.num_vertices();
    let mut inside = vec![false; n];
    for &v in subset {
        if v >= n {
            return Err(CoreError::VertexOutOfRange { vertex: v, n });
        }
        inside[v] = true;
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if !inside[start] || seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut component = Vec::new();
        while let Some(u) = queue.pop_front() {
            component.push(u);
            for &w in graph.neighbors(u) {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        component.sort_unstable();
        out.push(component);
    }
    Ok(out)
}

/// Whether `subset` induces a connected subgraph. The empty set is not
/// connected for our purposes (districts are non-empty).
pub fn is_connected_subset(graph: &ColoredGraph, subset: &[usize]) -> bool {
    match connected_components(graph, subset) {
        Ok(parts) => parts.len() == 1,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(colors: Vec<usize>, num_colors: usize) -> ColoredGraph {
        let edges: Vec<_> = (1..colors.len()).map(|i| (i - 1, i)).collect();
        ColoredGraph::new(num_colors, colors, &edges).unwrap()
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert_eq!(
            ColoredGraph::new(2, vec![0, 1], &[(0, 0)]),
            Err(CoreError::SelfLoop(0))
        );
        assert_eq!(
            ColoredGraph::new(2, vec![0, 1], &[(0, 1), (1, 0)]),
            Err(CoreError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            ColoredGraph::new(2, vec![0, 2], &[]),
            Err(CoreError::ColorOutOfRange { vertex: 1, .. })
        ));
        assert!(matches!(
            ColoredGraph::new(2, vec![0, 1], &[(0, 2)]),
            Err(CoreError::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = ColoredGraph::new(1, vec![0; 4], &[(3, 0), (0, 1), (2, 0)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.neighbors(3), &[0]);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(g.num_edges(), 3);
    }

    #[test]
    fn components_of_subsets() {
        let g = path(vec![0, 0, 0], 1);
        assert_eq!(
            connected_components(&g, &[0, 2]).unwrap(),
            vec![vec![0], vec![2]]
        );
        assert_eq!(
            connected_components(&g, &[2, 1, 0]).unwrap(),
            vec![vec![0, 1, 2]]
        );
        assert!(connected_components(&g, &[]).unwrap().is_empty());
        assert!(connected_components(&g, &[7]).is_err());
    }

    #[test]
    fn induced_subgraph_keeps_inner_edges() {
        let g = path(vec![0, 1, 0, 1], 2);
        let (sub, map) = g.induced_subgraph(&[3, 2, 0]);
        assert_eq!(map, vec![3, 2, 0]);
        assert_eq!(sub.edges(), vec![(0, 1)]);
        assert_eq!(sub.colors(), &[1, 0, 0]);
    }
}
