//! Structural facts about a graph that the solvers dispatch on.

mod branch;
mod cover;
mod nice;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::ColoredGraph;

pub use branch::{branch_decomposition, Branch, BranchDecomposition};
pub use cover::{is_vertex_cover, minimum_vertex_cover};
pub use nice::{
    forest_decomposition, nice_tree_decomposition, NiceKind, NiceNode, NiceTreeDecomposition,
    TdAxiom, TreeDecomposition,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("no vertex cover of size at most {budget}")]
    CoverBudgetExceeded { budget: usize },
    #[error("graph is not a forest; a tree decomposition must be supplied")]
    NotAForest,
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(TdAxiom),
}

/// Most specific graph class, from most to least specific.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassTag {
    Path,
    Cycle,
    Star,
    Caterpillar,
    Tree,
    Forest,
    General,
}

impl ClassTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::Path => "path",
            ClassTag::Cycle => "cycle",
            ClassTag::Star => "star",
            ClassTag::Caterpillar => "caterpillar",
            ClassTag::Tree => "tree",
            ClassTag::Forest => "forest",
            ClassTag::General => "general",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "path" => ClassTag::Path,
            "cycle" => ClassTag::Cycle,
            "star" => ClassTag::Star,
            "caterpillar" => ClassTag::Caterpillar,
            "tree" => ClassTag::Tree,
            "forest" => ClassTag::Forest,
            "general" => ClassTag::General,
            other => return Err(format!("unknown class tag `{other}`")),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub class_tag: ClassTag,
    pub is_connected: bool,
    pub num_components: usize,
    /// Number of vertices of degree at least two.
    pub degree_ge2_count: usize,
    /// Feedback edge number, `m - n + num_components`.
    pub fen: usize,
    /// Path order for paths, leaf-deleted spine for stars and caterpillars.
    pub spine: Option<Vec<usize>>,
}

pub fn classify_graph(graph: &ColoredGraph) -> StructureReport {
    let n = graph.num_vertices();
    let num_components = graph.components().len();
    let is_connected = num_components <= 1;
    let fen = graph.num_edges() + num_components - n;
    let degree_ge2_count = (0..n).filter(|&v| graph.degree(v) >= 2).count();

    let (class_tag, spine) = if is_connected && fen == 0 {
        if let Some(order) = path_order(graph) {
            (ClassTag::Path, Some(order))
        } else if let Some(center) = star_center(graph) {
            (ClassTag::Star, Some(vec![center]))
        } else if let Some(spine) = caterpillar_spine(graph) {
            (ClassTag::Caterpillar, Some(spine))
        } else {
            (ClassTag::Tree, None)
        }
    } else if is_connected && cycle_order(graph).is_some() {
        (ClassTag::Cycle, None)
    } else if fen == 0 {
        (ClassTag::Forest, None)
    } else {
        (ClassTag::General, None)
    };

    StructureReport {
        class_tag,
        is_connected,
        num_components,
        degree_ge2_count,
        fen,
        spine,
    }
}

/// Vertex order along the graph if it is a single path, starting from the
/// lower-numbered end.
pub fn path_order(graph: &ColoredGraph) -> Option<Vec<usize>> {
    let n = graph.num_vertices();
    if n == 0 || graph.num_edges() != n - 1 || (0..n).any(|v| graph.degree(v) > 2) {
        return None;
    }
    let start = (0..n).find(|&v| graph.degree(v) <= 1)?;
    let order = walk(graph, start, None);
    (order.len() == n).then_some(order)
}

/// Vertex order around the graph if it is a single cycle: starts at vertex 0
/// and continues to its smaller neighbor.
pub fn cycle_order(graph: &ColoredGraph) -> Option<Vec<usize>> {
    let n = graph.num_vertices();
    if n < 3 || graph.num_edges() != n || (0..n).any(|v| graph.degree(v) != 2) {
        return None;
    }
    let order = walk(graph, 0, Some(graph.neighbors(0)[0]));
    (order.len() == n).then_some(order)
}

/// Follows degree-two vertices from `start`, first stepping to `first` when
/// given. Stops at a dead end or on returning to `start`.
fn walk(graph: &ColoredGraph, start: usize, first: Option<usize>) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = match first.or_else(|| graph.neighbors(start).first().copied()) {
        Some(v) => v,
        None => return order,
    };
    while cur != start {
        order.push(cur);
        match graph.neighbors(cur).iter().find(|&&w| w != prev) {
            Some(&next) if graph.degree(cur) == 2 => {
                prev = cur;
                cur = next;
            }
            _ => break,
        }
    }
    order
}

/// Center of a star: a tree in which one vertex is adjacent to all others.
/// For one or two vertices the center is vertex 0.
pub fn star_center(graph: &ColoredGraph) -> Option<usize> {
    let n = graph.num_vertices();
    if n == 0 || graph.num_edges() != n - 1 {
        return None;
    }
    if n <= 2 {
        return graph.is_connected().then_some(0);
    }
    (0..n).find(|&v| graph.degree(v) == n - 1)
}

/// Spine of a caterpillar: the path left after deleting all leaves, ordered
/// from its lower-numbered end. Graphs with at most two vertices get `[0]`.
/// Returns `None` when the graph is not a caterpillar.
pub fn caterpillar_spine(graph: &ColoredGraph) -> Option<Vec<usize>> {
    let n = graph.num_vertices();
    if n == 0 || graph.num_edges() != n - 1 || !graph.is_connected() {
        return None;
    }
    if n <= 2 {
        return Some(vec![0]);
    }
    let inner: Vec<usize> = (0..n).filter(|&v| graph.degree(v) >= 2).collect();
    let mut inside = vec![false; n];
    for &v in &inner {
        inside[v] = true;
    }
    let inner_degree = |v: usize| graph.neighbors(v).iter().filter(|&&w| inside[w]).count();
    if inner.iter().any(|&v| inner_degree(v) > 2) {
        return None;
    }
    let start = *inner.iter().find(|&&v| inner_degree(v) <= 1)?;
    let mut spine = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = graph
        .neighbors(cur)
        .iter()
        .find(|&&w| inside[w] && w != prev)
    {
        spine.push(next);
        prev = cur;
        cur = next;
    }
    (spine.len() == inner.len()).then_some(spine)
}

/// A minimum feedback edge set: the edges outside a BFS spanning forest.
pub fn feedback_edge_set(graph: &ColoredGraph) -> Vec<(usize, usize)> {
    let n = graph.num_vertices();
    let mut seen = vec![false; n];
    let mut tree_edge = std::collections::HashSet::new();
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in graph.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    tree_edge.insert((u.min(w), u.max(w)));
                    queue.push_back(w);
                }
            }
        }
    }
    graph
        .edges()
        .into_iter()
        .filter(|e| !tree_edge.contains(e))
        .collect()
}

/// Whether removing `edges` from the graph leaves a forest.
pub fn is_feedback_edge_set(graph: &ColoredGraph, edges: &[(usize, usize)]) -> bool {
    let removed: std::collections::HashSet<(usize, usize)> =
        edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    if removed.iter().any(|&(u, v)| v >= graph.num_vertices() || !graph.has_edge(u, v)) {
        return false;
    }
    let mut dsu = Dsu::new(graph.num_vertices());
    graph
        .edges()
        .into_iter()
        .filter(|e| !removed.contains(e))
        .all(|(u, v)| dsu.union(u, v))
}

/// Union-find with path halving.
#[derive(Clone, Debug)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
pub(crate) mod test_graphs {
    use crate::graph::ColoredGraph;

    pub fn uncolored(n: usize, edges: &[(usize, usize)]) -> ColoredGraph {
        ColoredGraph::new(1, vec![0; n], edges).unwrap()
    }

    pub fn path(n: usize) -> ColoredGraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        uncolored(n, &edges)
    }

    pub fn cycle(n: usize) -> ColoredGraph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        uncolored(n, &edges)
    }

    pub fn star(leaves: usize) -> ColoredGraph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        uncolored(leaves + 1, &edges)
    }

    pub fn complete(n: usize) -> ColoredGraph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        uncolored(n, &edges)
    }

    /// Two P3s `0-1-2` and `3-4-5` joined by the middle edge `1-4`.
    pub fn h_graph() -> ColoredGraph {
        uncolored(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (1, 4)])
    }
}

#[cfg(test)]
mod tests {
    use super::test_graphs::*;
    use super::*;

    #[test]
    fn classify_examples() {
        let p4 = classify_graph(&path(4));
        assert_eq!(p4.class_tag, ClassTag::Path);
        assert_eq!(p4.fen, 0);
        assert_eq!(p4.spine, Some(vec![0, 1, 2, 3]));

        let c5 = classify_graph(&cycle(5));
        assert_eq!(c5.class_tag, ClassTag::Cycle);
        assert_eq!(c5.fen, 1);

        let k14 = classify_graph(&star(4));
        assert_eq!(k14.class_tag, ClassTag::Star);
        assert_eq!(k14.spine, Some(vec![0]));
        assert_eq!(k14.degree_ge2_count, 1);
    }

    #[test]
    fn small_stars_are_paths() {
        assert_eq!(classify_graph(&star(2)).class_tag, ClassTag::Path);
        assert_eq!(classify_graph(&path(1)).class_tag, ClassTag::Path);
        assert_eq!(star_center(&star(2)), Some(0));
    }

    #[test]
    fn caterpillar_and_tree() {
        let h = classify_graph(&h_graph());
        assert_eq!(h.class_tag, ClassTag::Caterpillar);
        assert_eq!(h.spine, Some(vec![1, 4]));

        // Spider with three legs of length two.
        let spider = uncolored(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        let r = classify_graph(&spider);
        assert_eq!(r.class_tag, ClassTag::Tree);
        assert_eq!(r.spine, None);
    }

    #[test]
    fn forest_and_general() {
        let forest = uncolored(5, &[(0, 1), (2, 3)]);
        let r = classify_graph(&forest);
        assert_eq!(r.class_tag, ClassTag::Forest);
        assert_eq!(r.num_components, 3);
        assert!(!r.is_connected);
        let k4 = classify_graph(&complete(4));
        assert_eq!(k4.class_tag, ClassTag::General);
        assert_eq!(k4.fen, 3);
        let two_triangles = uncolored(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert_eq!(classify_graph(&two_triangles).class_tag, ClassTag::General);
    }

    #[test]
    fn feedback_edge_examples() {
        assert!(feedback_edge_set(&path(5)).is_empty());
        assert_eq!(feedback_edge_set(&cycle(4)).len(), 1);
        let k4 = complete(4);
        let fes = feedback_edge_set(&k4);
        assert_eq!(fes.len(), 3);
        assert!(is_feedback_edge_set(&k4, &fes));
        assert!(!is_feedback_edge_set(&k4, &fes[..2]));
    }

    #[test]
    fn cycle_order_starts_at_zero() {
        assert_eq!(cycle_order(&cycle(4)), Some(vec![0, 1, 2, 3]));
        assert_eq!(cycle_order(&path(4)), None);
    }
}
