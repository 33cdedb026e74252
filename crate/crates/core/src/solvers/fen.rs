//! Cut enumeration: a solution separates its districts with at most
//! `fen + k - 1` edges, so trying all small edge sets suffices.

use super::{not_applicable, Budget, Outcome, SolveError};
use crate::classify::{is_feedback_edge_set, Dsu};
use crate::districting::{Districting, Instance};
use crate::fairness::ColorVector;

fn binomial_sum(m: usize, up_to: usize) -> u128 {
    let mut total = 0u128;
    let mut term = 1u128;
    for j in 0..=up_to.min(m) {
        total = total.saturating_add(term);
        term = term.saturating_mul((m - j) as u128) / (j as u128 + 1);
    }
    total
}

/// Advances `combo` to the next `r`-subset of `0..m` in lexicographic order.
fn next_combination(combo: &mut [usize], m: usize) -> bool {
    let r = combo.len();
    for i in (0..r).rev() {
        if combo[i] < m - r + i {
            combo[i] += 1;
            for j in i + 1..r {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn solve_fen_k(
    instance: &Instance,
    fes: &[(usize, usize)],
    budget: &mut Budget,
) -> Result<Outcome, SolveError> {
    let graph = instance.graph();
    if !is_feedback_edge_set(graph, fes) {
        return not_applicable("edges are not a feedback edge set");
    }
    let k = instance.k();
    let edges = graph.edges();
    let m = edges.len();
    let max_cut = fes.len() + k - 1;
    let components = graph.components().len();
    let min_cut = k.saturating_sub(components);
    let total = binomial_sum(m, max_cut);
    if total > u128::from(budget.limit().saturating_sub(budget.spent())) {
        return Err(SolveError::BudgetExceeded {
            limit: budget.limit(),
        });
    }

    let mut work = 0u64;
    let mut cut = vec![false; m];
    for size in min_cut..=max_cut.min(m) {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            work += 1;
            budget.charge(1)?;
            cut.iter_mut().for_each(|c| *c = false);
            for &e in &combo {
                cut[e] = true;
            }
            if let Some(d) = districts_after_cut(instance, &edges, &cut) {
                return Ok(Outcome::yes(Some(d), work));
            }
            if !next_combination(&mut combo, m) {
                break;
            }
        }
    }
    Ok(Outcome::no(work))
}

/// The components left after removing the cut edges, if there are exactly
/// `k` of them and all are fair.
fn districts_after_cut(
    instance: &Instance,
    edges: &[(usize, usize)],
    cut: &[bool],
) -> Option<Districting> {
    let graph = instance.graph();
    let n = graph.num_vertices();
    let mut dsu = Dsu::new(n);
    let mut count = n;
    for (e, &(u, v)) in edges.iter().enumerate() {
        if !cut[e] && dsu.union(u, v) {
            count -= 1;
        }
    }
    if count != instance.k() {
        return None;
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    let mut assignment = vec![0; n];
    for v in 0..n {
        let r = dsu.find(v);
        if label[r] == usize::MAX {
            label[r] = next;
            next += 1;
        }
        assignment[v] = label[r];
    }
    let d = Districting::new(assignment, count).ok()?;
    let fair = d.districts().iter().all(|members| {
        ColorVector::from_colors(graph.num_colors(), members.iter().map(|&v| graph.color(v)))
            .is_fair(instance.ell())
    });
    fair.then_some(d)
}
