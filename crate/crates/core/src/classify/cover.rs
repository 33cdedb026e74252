//! Exact minimum vertex cover by bounded search on uncovered edges.

use super::ClassifyError;
use crate::graph::ColoredGraph;

pub fn is_vertex_cover(graph: &ColoredGraph, set: &[usize]) -> bool {
    let mut inside = vec![false; graph.num_vertices()];
    for &v in set {
        match inside.get_mut(v) {
            Some(slot) => *slot = true,
            None => return false,
        }
    }
    graph.edges().into_iter().all(|(u, v)| inside[u] || inside[v])
}

/// A minimum vertex cover (sorted), or an error if every cover is larger
/// than `budget`. Iterative deepening keeps the first cover found minimum.
pub fn minimum_vertex_cover(
    graph: &ColoredGraph,
    budget: usize,
) -> Result<Vec<usize>, ClassifyError> {
    let edges = graph.edges();
    let mut inside = vec![false; graph.num_vertices()];
    for size in 0..=budget {
        if search(&edges, &mut inside, size) {
            return Ok((0..graph.num_vertices()).filter(|&v| inside[v]).collect());
        }
    }
    Err(ClassifyError::CoverBudgetExceeded { budget })
}

fn search(edges: &[(usize, usize)], inside: &mut [bool], left: usize) -> bool {
    let Some(&(u, v)) = edges.iter().find(|&&(u, v)| !inside[u] && !inside[v]) else {
        return true;
    };
    if left == 0 {
        return false;
    }
    for w in [u, v] {
        inside[w] = true;
        if search(edges, inside, left - 1) {
            return true;
        }
        inside[w] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::super::test_graphs::*;
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(minimum_vertex_cover(&star(3), 5).unwrap(), vec![0]);
        assert_eq!(minimum_vertex_cover(&path(4), 5).unwrap().len(), 2);
        assert_eq!(minimum_vertex_cover(&cycle(5), 5).unwrap().len(), 3);
        assert!(minimum_vertex_cover(&path(1), 0).unwrap().is_empty());
    }

    #[test]
    fn budget_exceeded() {
        assert_eq!(
            minimum_vertex_cover(&complete(5), 3),
            Err(ClassifyError::CoverBudgetExceeded { budget: 3 })
        );
    }

    #[test]
    fn results_are_covers() {
        let g = h_graph();
        let c = minimum_vertex_cover(&g, 6).unwrap();
        assert!(is_vertex_cover(&g, &c));
        assert_eq!(c, vec![1, 4]);
        assert!(!is_vertex_cover(&g, &[1]));
    }
}
