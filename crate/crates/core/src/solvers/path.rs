//! Dynamic program over consecutive segments of a path, and cycles by
//! trying every cut point.

use super::{not_applicable, Budget, Outcome, SolveError};
use crate::districting::{Districting, Instance};
use crate::fairness::MovTracker;
use crate::graph::ColoredGraph;

fn is_permutation(order: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    order.len() == n
        && order
            .iter()
            .all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

fn check_path(graph: &ColoredGraph, order: &[usize]) -> Result<(), SolveError> {
    let n = graph.num_vertices();
    if !is_permutation(order, n)
        || graph.num_edges() + 1 != n
        || order.windows(2).any(|w| !graph.has_edge(w[0], w[1]))
    {
        return not_applicable("order is not a Hamiltonian path of a path graph");
    }
    Ok(())
}

fn check_cycle(graph: &ColoredGraph, order: &[usize]) -> Result<(), SolveError> {
    let n = graph.num_vertices();
    if n < 3
        || !is_permutation(order, n)
        || graph.num_edges() != n
        || (0..n).any(|i| !graph.has_edge(order[i], order[(i + 1) % n]))
    {
        return not_applicable("order is not a Hamiltonian cycle of a cycle graph");
    }
    Ok(())
}

/// `table[i][t]`: the first `i` vertices of `colors` split into `t` fair
/// segments. Returns the table and the work spent.
pub(crate) fn segment_table(
    colors: &[usize],
    num_colors: usize,
    ell: usize,
    k: usize,
    budget: &mut Budget,
) -> Result<Vec<Vec<bool>>, SolveError> {
    let n = colors.len();
    let mut table = vec![vec![false; k + 1]; n + 1];
    table[0][0] = true;
    for i in 1..=n {
        // Grow the segment j+1..=i leftwards.
        let mut tracker = MovTracker::new(num_colors);
        for j in (0..i).rev() {
            tracker.push(colors[j]);
            if tracker.mov() > ell {
                continue;
            }
            for t in 1..=k.min(i) {
                if table[j][t - 1] {
                    table[i][t] = true;
                }
            }
        }
        budget.record((i * k) as u64)?;
    }
    Ok(table)
}

fn segment_fair(colors: &[usize], num_colors: usize, ell: usize) -> bool {
    let mut tracker = MovTracker::new(num_colors);
    for &c in colors {
        tracker.push(c);
    }
    tracker.mov() <= ell
}

/// Segment lengths of the leftmost-split solution, front to back.
fn backtrace(table: &[Vec<bool>], colors: &[usize], num_colors: usize, ell: usize, k: usize) -> Vec<usize> {
    let mut cuts = Vec::with_capacity(k);
    let mut end = colors.len();
    for t in (1..=k).rev() {
        let start = (0..end)
            .find(|&j| table[j][t - 1] && segment_fair(&colors[j..end], num_colors, ell))
            .expect("table entry is true");
        cuts.push(end - start);
        end = start;
    }
    cuts.reverse();
    cuts
}

fn path_solve(
    instance: &Instance,
    order: &[usize],
    budget: &mut Budget,
) -> Result<Outcome, SolveError> {
    let graph = instance.graph();
    let colors: Vec<usize> = order.iter().map(|&v| graph.color(v)).collect();
    let k = instance.k();
    let before = budget.spent();
    let table = segment_table(&colors, graph.num_colors(), instance.ell(), k, budget)?;
    let work = budget.spent() - before;
    if !table[colors.len()][k] {
        return Ok(Outcome::no(work));
    }
    let lengths = backtrace(&table, &colors, graph.num_colors(), instance.ell(), k);
    let mut assignment = vec![0; graph.num_vertices()];
    let mut pos = 0;
    for (d, len) in lengths.into_iter().enumerate() {
        for &v in &order[pos..pos + len] {
            assignment[v] = d;
        }
        pos += len;
    }
    Ok(Outcome::yes(Some(Districting::new(assignment, k)?), work))
}

/// Splits a path given in vertex order into `k` consecutive fair segments.
pub fn solve_path(
    instance: &Instance,
    order: &[usize],
    budget: &mut Budget,
) -> Result<Outcome, SolveError> {
    check_path(instance.graph(), order)?;
    path_solve(instance, order, budget)
}

/// Tries every rotation of the cycle as a path.
pub fn solve_cycle(
    instance: &Instance,
    order: &[usize],
    budget: &mut Budget,
) -> Result<Outcome, SolveError> {
    check_cycle(instance.graph(), order)?;
    let n = order.len();
    let mut work = 0;
    for r in 0..n {
        let rotated: Vec<usize> = order[r..].iter().chain(&order[..r]).copied().collect();
        let out = path_solve(instance, &rotated, budget)?;
        work += out.work;
        if out.feasible || instance.k() == 1 {
            return Ok(Outcome { work, ..out });
        }
    }
    Ok(Outcome::no(work))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::districting::verify_districting;

    fn inst(colors: Vec<usize>, num_colors: usize, cyclic: bool, k: usize, ell: usize) -> Instance {
        let n = colors.len();
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if cyclic {
            edges.push((0, n - 1));
        }
        Instance::new(ColoredGraph::new(num_colors, colors, &edges).unwrap(), k, ell).unwrap()
    }

    #[test]
    fn path_examples() {
        let i = inst(vec![0, 1, 0, 1], 2, false, 2, 0);
        let out = solve_path(&i, &[0, 1, 2, 3], &mut Budget::default()).unwrap();
        assert!(out.feasible);
        assert_eq!(out.witness.unwrap().assignment(), &[0, 0, 1, 1]);

        let mono = inst(vec![0, 0, 0], 1, false, 2, 0);
        assert!(!solve_path(&mono, &[0, 1, 2], &mut Budget::default()).unwrap().feasible);

        let whole = inst(vec![0, 0, 1, 0, 2], 3, false, 1, 5);
        assert!(solve_path(&whole, &[0, 1, 2, 3, 4], &mut Budget::default()).unwrap().feasible);
    }

    #[test]
    fn cycle_examples() {
        let c4 = inst(vec![0, 1, 0, 1], 2, true, 2, 0);
        let out = solve_cycle(&c4, &[0, 1, 2, 3], &mut Budget::default()).unwrap();
        assert!(out.feasible);
        assert!(verify_districting(&c4, &out.witness.unwrap()).unwrap().is_valid());

        let c3 = inst(vec![0, 1, 2], 3, true, 1, 0);
        assert!(solve_cycle(&c3, &[0, 1, 2], &mut Budget::default()).unwrap().feasible);

        let c3b = inst(vec![0, 0, 1], 2, true, 3, 0);
        assert!(!solve_cycle(&c3b, &[0, 1, 2], &mut Budget::default()).unwrap().feasible);
    }

    #[test]
    fn rotation_needed() {
        // Only the split {1,2},{3,0} works.
        let c4 = inst(vec![1, 1, 0, 0], 2, true, 2, 0);
        let out = solve_cycle(&c4, &[0, 1, 2, 3], &mut Budget::default()).unwrap();
        assert!(out.feasible);
        assert!(verify_districting(&c4, &out.witness.unwrap()).unwrap().is_valid());
    }

    #[test]
    fn bad_orders_rejected() {
        let i = inst(vec![0, 1, 0, 1], 2, false, 2, 0);
        assert!(solve_path(&i, &[0, 2, 1, 3], &mut Budget::default()).is_err());
        assert!(solve_cycle(&i, &[0, 1, 2, 3], &mut Budget::default()).is_err());
    }
}
