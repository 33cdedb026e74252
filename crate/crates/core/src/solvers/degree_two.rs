//! Parameter p, the number of vertices of degree at least two: guess how
//! those vertices split into districts; every block plus its pendant
//! leaves is then a star with a weighted center.

use std::ops::ControlFlow;

use super::star::{star_interval, StarInterval};
use super::union::solve_disjoint_union;
use super::{Budget, Outcome, SolveError};
use crate::districting::Instance;
use crate::fairness::ColorVector;
use crate::graph::{is_connected_subset, ColoredGraph};
use crate::partitions::{blocks_of, for_each_partition};

/// Feasible district counts `0..=k` for one connected component.
fn component_counts(
    graph: &ColoredGraph,
    ell: usize,
    k: usize,
    budget: &mut Budget,
) -> Result<Vec<bool>, SolveError> {
    let n = graph.num_vertices();
    let num_colors = graph.num_colors();
    let mut counts = vec![false; k + 1];
    let fair = |members: &[usize]| {
        ColorVector::from_colors(num_colors, members.iter().map(|&v| graph.color(v))).is_fair(ell)
    };
    if n <= 2 {
        let all: Vec<usize> = (0..n).collect();
        if fair(&all) {
            counts[1] = true;
        }
        if n == 2 && k >= 2 && fair(&[0]) && fair(&[1]) {
            counts[2] = true;
        }
        return Ok(counts);
    }

    let x: Vec<usize> = (0..n).filter(|&v| graph.degree(v) >= 2).collect();
    let mut leaves_of = vec![Vec::new(); n];
    for v in (0..n).filter(|&v| graph.degree(v) == 1) {
        leaves_of[graph.neighbors(v)[0]].push(graph.color(v));
    }
    let k_primes: Vec<usize> = if ell == 0 {
        vec![k]
    } else {
        (1..=x.len().min(k)).collect()
    };
    for k_prime in k_primes {
        let result = for_each_partition(x.len(), k_prime, |rgs| {
            if let Err(e) = budget.charge(1) {
                return ControlFlow::Break(e);
            }
            let blocks = blocks_of(rgs, &x);
            let (mut lo, mut hi) = (0usize, 0usize);
            for block in &blocks {
                if !is_connected_subset(graph, block) {
                    return ControlFlow::Continue(());
                }
                let center = ColorVector::from_colors(num_colors, block.iter().map(|&v| graph.color(v)));
                let leaves: Vec<usize> = block.iter().flat_map(|&v| leaves_of[v].iter().copied()).collect();
                let iv: StarInterval = star_interval(&center, &leaves, ell);
                if !iv.feasible {
                    return ControlFlow::Continue(());
                }
                lo += iv.lo;
                hi += iv.hi;
            }
            for t in lo..=hi.min(k) {
                counts[t] = true;
            }
            ControlFlow::Continue(())
        });
        if let ControlFlow::Break(e) = result {
            return Err(e);
        }
    }
    Ok(counts)
}

/// Decision only.
pub fn solve_degree_two(instance: &Instance, budget: &mut Budget) -> Result<Outcome, SolveError> {
    let graph = instance.graph();
    let before = budget.spent();
    let mut tables = Vec::new();
    for component in graph.components() {
        let (sub, _) = graph.induced_subgraph(&component);
        tables.push(component_counts(&sub, instance.ell(), instance.k(), budget)?);
    }
    let work = budget.spent() - before;
    Ok(if solve_disjoint_union(&tables, instance.k()) {
        Outcome::yes(None, work)
    } else {
        Outcome::no(work)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(colors: Vec<usize>, num_colors: usize, edges: &[(usize, usize)], k: usize, ell: usize) -> bool {
        let g = ColoredGraph::new(num_colors, colors, edges).unwrap();
        let inst = Instance::new(g, k, ell).unwrap();
        solve_degree_two(&inst, &mut Budget::default()).unwrap().feasible
    }

    #[test]
    fn examples() {
        let claw = [(0, 1), (0, 2), (0, 3)];
        assert!(run(vec![0, 1, 1, 0], 2, &claw, 1, 0));
        assert!(!run(vec![0, 1, 1, 0], 2, &claw, 2, 0));
        assert!(run(vec![0, 1], 2, &[(0, 1)], 1, 0));
        assert!(!run(vec![0, 1], 2, &[(0, 1)], 2, 0));
        assert!(run(vec![0, 1], 2, &[(0, 1)], 2, 1));
    }

    #[test]
    fn isolated_vertices_and_components() {
        assert!(run(vec![0, 1, 0], 2, &[(0, 1)], 2, 1));
        assert!(!run(vec![0, 1, 0], 2, &[(0, 1)], 2, 0));
    }

    #[test]
    fn blocks_must_be_connected() {
        // Path 0-1-2-3: splitting {1,2} into separate blocks is allowed,
        // pairing the ends with the wrong middles is not.
        assert!(run(vec![0, 1, 1, 0], 2, &[(0, 1), (1, 2), (2, 3)], 2, 0));
        assert!(!run(vec![0, 0, 1, 1], 2, &[(0, 1), (1, 2), (2, 3)], 2, 0));
    }
}
