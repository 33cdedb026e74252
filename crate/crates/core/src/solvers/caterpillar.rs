//! Caterpillars: a segment DP over the spine where each segment is a star
//! with a weighted center. Disjoint caterpillars (pathwidth one) are
//! combined through the union table.

use super::star::{interval_from_counts, StarInterval};
use super::union::solve_disjoint_union;
use super::{not_applicable, Budget, Outcome, SolveError};
use crate::classify::caterpillar_spine;
use crate::districting::Instance;
use crate::graph::ColoredGraph;

fn check_spine(graph: &ColoredGraph, spine: &[usize]) -> Result<Vec<bool>, SolveError> {
    let n = graph.num_vertices();
    let mut on_spine = vec![false; n];
    for &v in spine {
        if v >= n || std::mem::replace(&mut on_spine[v], true) {
            return not_applicable("spine has repeated or out-of-range vertices");
        }
    }
    let tree = n > 0 && graph.num_edges() + 1 == n && graph.is_connected();
    let path = !spine.is_empty() && spine.windows(2).all(|w| graph.has_edge(w[0], w[1]));
    let legs = (0..n)
        .filter(|&v| !on_spine[v])
        .all(|v| graph.degree(v) == 1 && on_spine[graph.neighbors(v)[0]]);
    if !(tree && path && legs) {
        return not_applicable("spine does not describe a caterpillar");
    }
    Ok(on_spine)
}

/// `counts[t]` for `t <= kmax`: whether the caterpillar splits into exactly
/// `t` fair connected districts.
pub fn caterpillar_counts(
    graph: &ColoredGraph,
    spine: &[usize],
    ell: usize,
    kmax: usize,
    budget: &mut Budget,
) -> Result<Vec<bool>, SolveError> {
    let on_spine = check_spine(graph, spine)?;
    let num_colors = graph.num_colors();
    let p = spine.len();
    let leaves: Vec<Vec<usize>> = spine
        .iter()
        .map(|&u| {
            graph
                .neighbors(u)
                .iter()
                .filter(|&&w| !on_spine[w])
                .map(|&w| graph.color(w))
                .collect()
        })
        .collect();

    // segment[s][e]: spine positions s..=e merged into one weighted center.
    let mut segment = vec![vec![StarInterval::EMPTY; p]; p];
    for s in 0..p {
        let mut x = vec![0; num_colors];
        let mut xy = vec![0; num_colors];
        let mut num_leaves = 0;
        for e in s..p {
            x[graph.color(spine[e])] += 1;
            xy[graph.color(spine[e])] += 1;
            for &c in &leaves[e] {
                xy[c] += 1;
            }
            num_leaves += leaves[e].len();
            segment[s][e] = interval_from_counts(&x, &xy, num_leaves, ell);
        }
        budget.record(((p - s) * num_colors) as u64)?;
    }

    // table[i][t]: the first i spine units split into t districts.
    let mut table = vec![vec![false; kmax + 1]; p + 1];
    table[0][0] = true;
    for i in 1..=p {
        for j in 0..i {
            let iv = segment[j][i - 1];
            if !iv.feasible {
                continue;
            }
            for t in 0..=kmax {
                if !table[j][t] {
                    continue;
                }
                for t2 in iv.lo..=iv.hi.min(kmax.saturating_sub(t)) {
                    table[i][t + t2] = true;
                }
            }
        }
        budget.record((i * kmax) as u64)?;
    }
    Ok(table.swap_remove(p))
}

/// Decision only.
pub fn solve_caterpillar(
    instance: &Instance,
    spine: &[usize],
    budget: &mut Budget,
) -> Result<Outcome, SolveError> {
    let before = budget.spent();
    let counts = caterpillar_counts(instance.graph(), spine, instance.ell(), instance.k(), budget)?;
    let work = budget.spent() - before;
    Ok(if counts[instance.k()] {
        Outcome::yes(None, work)
    } else {
        Outcome::no(work)
    })
}

/// Graphs whose every component is a caterpillar.
pub fn solve_pathwidth_one(instance: &Instance, budget: &mut Budget) -> Result<Outcome, SolveError> {
    let graph = instance.graph();
    let before = budget.spent();
    let mut tables = Vec::new();
    for component in graph.components() {
        let (sub, _) = graph.induced_subgraph(&component);
        let Some(spine) = caterpillar_spine(&sub) else {
            return not_applicable("a component is not a caterpillar");
        };
        tables.push(caterpillar_counts(&sub, &spine, instance.ell(), instance.k(), budget)?);
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

    #[test]
    fn two_legged_spine() {
        // Spine 0-1, leaf 2 on 0, leaf 3 on 1.
        let g = ColoredGraph::new(2, vec![0, 0, 1, 1], &[(0, 1), (0, 2), (1, 3)]).unwrap();
        let inst = Instance::new(g, 2, 0).unwrap();
        assert!(solve_caterpillar(&inst, &[0, 1], &mut Budget::default()).unwrap().feasible);
        let one = inst.with_k(1).unwrap();
        assert!(solve_caterpillar(&one, &[0, 1], &mut Budget::default()).unwrap().feasible);
        let three = inst.with_k(3).unwrap();
        assert!(!solve_caterpillar(&three, &[0, 1], &mut Budget::default()).unwrap().feasible);
    }

    #[test]
    fn single_segment_with_several_districts() {
        // Star K1,3 as a one-vertex spine: the whole spine is one segment.
        let g = ColoredGraph::new(2, vec![0, 0, 1, 1], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let inst = Instance::new(g, 2, 1).unwrap();
        assert!(solve_caterpillar(&inst, &[0], &mut Budget::default()).unwrap().feasible);
    }

    #[test]
    fn invalid_spine() {
        let g = ColoredGraph::new(1, vec![0; 4], &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let inst = Instance::new(g, 1, 4).unwrap();
        assert!(solve_caterpillar(&inst, &[1], &mut Budget::default()).is_err());
        assert!(solve_caterpillar(&inst, &[0, 1, 2, 3], &mut Budget::default()).is_ok());
    }

    #[test]
    fn pathwidth_one_union() {
        // Two P2 components [0,1] and [1,0].
        let g = ColoredGraph::new(2, vec![0, 1, 1, 0], &[(0, 1), (2, 3)]).unwrap();
        let inst = Instance::new(g, 2, 0).unwrap();
        assert!(solve_pathwidth_one(&inst, &mut Budget::default()).unwrap().feasible);
        let one = inst.with_k(1).unwrap();
        assert!(!solve_pathwidth_one(&one, &mut Budget::default()).unwrap().feasible);
    }
}
