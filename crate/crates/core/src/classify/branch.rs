//! Maximal paths through degree-two vertices.

use std::collections::HashSet;

use super::ClassifyError;
use crate::graph::ColoredGraph;

/// A maximal path whose inner vertices all have degree two. For a cycle
/// branch the first and last vertex coincide and are its single endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub vertices: Vec<usize>,
    pub is_cycle: bool,
}

impl Branch {
    /// Number of positions `l`, counting a cycle's endpoint twice.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        self.vertices[self.vertices.len() - 1]
    }

    /// Vertices strictly between the two ends.
    pub fn inner(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchDecomposition {
    pub branches: Vec<Branch>,
    /// Sorted set of branch endpoints.
    pub endpoints: Vec<usize>,
}

/// Splits a connected graph into branches. Endpoints are the vertices of
/// degree other than two; a graph that is a single cycle gets vertex 0 as
/// the endpoint of its one cycle branch. A single vertex has no branches.
pub fn branch_decomposition(graph: &ColoredGraph) -> Result<BranchDecomposition, ClassifyError> {
    let n = graph.num_vertices();
    if !graph.is_connected() {
        return Err(ClassifyError::Disconnected);
    }
    let mut endpoints: Vec<usize> = (0..n).filter(|&v| graph.degree(v) != 2).collect();
    let mut branches = Vec::new();
    if endpoints.is_empty() && n > 0 {
        endpoints.push(0);
        let mut vertices = super::cycle_order(graph).expect("2-regular connected graph");
        vertices.push(0);
        branches.push(Branch {
            vertices,
            is_cycle: true,
        });
        return Ok(BranchDecomposition {
            branches,
            endpoints,
        });
    }

    let mut is_endpoint = vec![false; n];
    for &x in &endpoints {
        is_endpoint[x] = true;
    }
    let mut used: HashSet<(usize, usize)> = HashSet::new();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    for &x in &endpoints {
        for &w in graph.neighbors(x) {
            if !used.insert(key(x, w)) {
                continue;
            }
            let mut vertices = vec![x, w];
            let (mut prev, mut cur) = (x, w);
            while !is_endpoint[cur] {
                let next = *graph
                    .neighbors(cur)
                    .iter()
                    .find(|&&z| z != prev)
                    .expect("inner vertices have degree two");
                used.insert(key(cur, next));
                vertices.push(next);
                prev = cur;
                cur = next;
            }
            let is_cycle = cur == x;
            branches.push(Branch { vertices, is_cycle });
        }
    }
    Ok(BranchDecomposition {
        branches,
        endpoints,
    })
}

#[cfg(test)]
mod tests {
    use super::super::test_graphs::*;
    use super::*;

    #[test]
    fn cycle_has_one_branch_at_zero() {
        let bd = branch_decomposition(&cycle(4)).unwrap();
        assert_eq!(bd.endpoints, vec![0]);
        assert_eq!(bd.branches.len(), 1);
        assert!(bd.branches[0].is_cycle);
        assert_eq!(bd.branches[0].vertices, vec![0, 1, 2, 3, 0]);
    }

    #[test]
    fn star_and_h_graph() {
        let bd = branch_decomposition(&star(3)).unwrap();
        assert_eq!(bd.branches.len(), 3);
        assert_eq!(bd.endpoints, vec![0, 1, 2, 3]);
        assert_eq!(branch_decomposition(&h_graph()).unwrap().branches.len(), 5);
    }

    #[test]
    fn path_is_one_branch() {
        let bd = branch_decomposition(&path(5)).unwrap();
        assert_eq!(bd.branches.len(), 1);
        assert_eq!(bd.branches[0].vertices, vec![0, 1, 2, 3, 4]);
        assert!(!bd.branches[0].is_cycle);
    }

    #[test]
    fn lollipop_has_cycle_branch() {
        // Triangle 0-1-2 with a tail 2-3.
        let g = uncolored(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        let bd = branch_decomposition(&g).unwrap();
        assert_eq!(bd.endpoints, vec![2, 3]);
        assert_eq!(bd.branches.len(), 2);
        let cyc = bd.branches.iter().find(|b| b.is_cycle).unwrap();
        assert_eq!(cyc.vertices, vec![2, 0, 1, 2]);
    }

    #[test]
    fn disconnected_rejected() {
        let g = uncolored(3, &[(0, 1)]);
        assert_eq!(branch_decomposition(&g), Err(ClassifyError::Disconnected));
    }

    #[test]
    fn single_vertex_has_no_branches() {
        let bd = branch_decomposition(&path(1)).unwrap();
        assert!(bd.branches.is_empty());
        assert_eq!(bd.endpoints, vec![0]);
    }
}
