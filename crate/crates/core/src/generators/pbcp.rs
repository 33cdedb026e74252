//! Perfectly balanced connected partition as a two-color instance.

use super::{Builder, GenerateError};
use crate::districting::Instance;
use crate::graph::ColoredGraph;

/// All vertices of `graph` get color 0; `n / 2` new color-1 leaves go on
/// each of `v` and `v2`. `k = 2`, `ell = 0`.
pub fn reduce_pbcp(graph: &ColoredGraph, v: usize, v2: usize) -> Result<Instance, GenerateError> {
    let n = graph.num_vertices();
    if n % 2 == 1 {
        return Err(GenerateError::OddVertexCount(n));
    }
    if v >= n || v2 >= n || v == v2 {
        return Err(GenerateError::Infeasible(format!(
            "anchors {v} and {v2} must be distinct vertices"
        )));
    }
    let mut b = Builder {
        colors: vec![0; n],
        edges: graph.edges(),
    };
    b.leaves(v, n / 2, 1);
    b.leaves(v2, n / 2, 1);
    Ok(Instance::new(b.finish(2)?, 2, 0)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_force_solve;
    use crate::solvers::Budget;

    fn p(n: usize) -> ColoredGraph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        ColoredGraph::new(1, vec![0; n], &edges).unwrap()
    }

    #[test]
    fn p4_anchors() {
        let yes = reduce_pbcp(&p(4), 1, 2).unwrap();
        assert_eq!(yes.n(), 8);
        assert!(brute_force_solve(&yes, &mut Budget::default()).unwrap().feasible);
        let no = reduce_pbcp(&p(4), 0, 1).unwrap();
        let want = brute_force_solve(&no, &mut Budget::default()).unwrap().feasible;
        // {0} + its leaves vs {1,2,3} + leaves is unbalanced; so is every other split.
        assert!(!want);
    }

    #[test]
    fn odd_order_rejected() {
        assert!(matches!(reduce_pbcp(&p(3), 0, 1), Err(GenerateError::OddVertexCount(3))));
    }
}
