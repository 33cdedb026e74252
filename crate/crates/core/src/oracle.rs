//! Exhaustive search over connected partitions; the reference every solver
//! is tested against.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use crate::districting::{Districting, Instance};
use crate::fairness::ColorVector;
use crate::graph::ColoredGraph;
use crate::solvers::{Budget, Outcome, SolveError};

pub const DEFAULT_CAP: usize = 12;

const UNSET: usize = usize::MAX;

struct Enumerator<'a, F> {
    graph: &'a ColoredGraph,
    k: usize,
    /// Close districts only when fair.
    ell: Option<usize>,
    order: Vec<usize>,
    label: Vec<usize>,
    visit: F,
    nodes: u64,
}

impl<B, F: FnMut(&[usize]) -> ControlFlow<B>> Enumerator<'_, F> {
    fn run(&mut self, pos: usize, used: usize, budget: &mut Budget) -> Result<ControlFlow<B>, SolveError> {
        self.nodes += 1;
        budget.charge(1)?;
        let n = self.order.len();
        if pos == n {
            if used == self.k && self.all_connected() {
                return Ok((self.visit)(&self.label));
            }
            return Ok(ControlFlow::Continue(()));
        }
        if n - pos < self.k - used {
            return Ok(ControlFlow::Continue(()));
        }
        let v = self.order[pos];
        let limit = if used < self.k { used + 1 } else { used };
        for d in 0..limit {
            self.label[v] = d;
            if self.alive(used.max(d + 1)) {
                if let ControlFlow::Break(b) = self.run(pos + 1, used.max(d + 1), budget)? {
                    self.label[v] = UNSET;
                    return Ok(ControlFlow::Break(b));
                }
            }
        }
        self.label[v] = UNSET;
        Ok(ControlFlow::Continue(()))
    }

    /// Components of district `d` among assigned vertices, each flagged with
    /// whether it still touches an unassigned vertex.
    fn pieces(&self, d: usize) -> Vec<(Vec<usize>, bool)> {
        let n = self.label.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in (0..n).filter(|&v| self.label[v] == d) {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut open = false;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in self.graph.neighbors(u) {
                    if self.label[w] == UNSET {
                        open = true;
                    } else if self.label[w] == d && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push((comp, open));
        }
        out
    }

    fn alive(&self, used: usize) -> bool {
        for d in 0..used {
            let pieces = self.pieces(d);
            let any_closed = pieces.iter().any(|(_, open)| !open);
            if any_closed && pieces.len() >= 2 {
                return false;
            }
            if let (Some(ell), [(members, false)]) = (self.ell, pieces.as_slice()) {
                let cv = ColorVector::from_colors(
                    self.graph.num_colors(),
                    members.iter().map(|&v| self.graph.color(v)),
                );
                if !cv.is_fair(ell) {
                    return false;
                }
            }
        }
        true
    }

    fn all_connected(&self) -> bool {
        (0..self.k).all(|d| self.pieces(d).len() == 1)
    }
}

fn bfs_order(graph: &ColoredGraph) -> Vec<usize> {
    let n = graph.num_vertices();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in graph.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

fn check_cap(graph: &ColoredGraph, cap: usize) -> Result<(), SolveError> {
    if graph.num_vertices() > cap {
        return Err(SolveError::NotApplicable(format!(
            "oracle limited to {cap} vertices, graph has {}",
            graph.num_vertices()
        )));
    }
    Ok(())
}

fn search<B>(
    graph: &ColoredGraph,
    k: usize,
    ell: Option<usize>,
    budget: &mut Budget,
    visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Result<(ControlFlow<B>, u64), SolveError> {
    let n = graph.num_vertices();
    if k == 0 || k > n {
        return Ok((ControlFlow::Continue(()), 0));
    }
    let mut e = Enumerator {
        graph,
        k,
        ell,
        order: bfs_order(graph),
        label: vec![UNSET; n],
        visit,
        nodes: 0,
    };
    let flow = e.run(0, 0, budget)?;
    Ok((flow, e.nodes))
}

/// Calls `visit` once per partition of the vertices into exactly `k`
/// non-empty connected districts, canonically labeled.
pub fn for_each_connected_partition<B>(
    graph: &ColoredGraph,
    k: usize,
    cap: usize,
    mut visit: impl FnMut(&Districting) -> ControlFlow<B>,
) -> Result<ControlFlow<B>, SolveError> {
    check_cap(graph, cap)?;
    let (flow, _) = search(graph, k, None, &mut Budget::unlimited(), |label| {
        let d = Districting::new(label.to_vec(), k).expect("labels below k");
        visit(&d.canonical())
    })?;
    Ok(flow)
}

pub fn enumerate_connected_partitions(
    graph: &ColoredGraph,
    k: usize,
) -> Result<Vec<Districting>, SolveError> {
    let mut out = Vec::new();
    let _ = for_each_connected_partition::<()>(graph, k, DEFAULT_CAP, |d| {
        out.push(d.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Calls `visit` with every valid solution of `instance`.
pub fn for_each_solution<B>(
    instance: &Instance,
    cap: usize,
    mut visit: impl FnMut(&Districting) -> ControlFlow<B>,
) -> Result<ControlFlow<B>, SolveError> {
    check_cap(instance.graph(), cap)?;
    let k = instance.k();
    let graph = instance.graph();
    let ell = instance.ell();
    let (flow, _) = search(graph, k, Some(ell), &mut Budget::unlimited(), |label| {
        let d = Districting::new(label.to_vec(), k).expect("labels below k");
        let fair = d.districts().iter().all(|m| {
            ColorVector::from_colors(graph.num_colors(), m.iter().map(|&v| graph.color(v))).is_fair(ell)
        });
        if fair {
            visit(&d.canonical())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(flow)
}

pub fn brute_force_solve(instance: &Instance, budget: &mut Budget) -> Result<Outcome, SolveError> {
    brute_force_solve_with_cap(instance, DEFAULT_CAP, budget)
}

pub fn brute_force_solve_with_cap(
    instance: &Instance,
    cap: usize,
    budget: &mut Budget,
) -> Result<Outcome, SolveError> {
    check_cap(instance.graph(), cap)?;
    let graph = instance.graph();
    let (k, ell) = (instance.k(), instance.ell());
    let (flow, nodes) = search(graph, k, Some(ell), budget, |label| {
        let d = Districting::new(label.to_vec(), k).expect("labels below k");
        let fair = d.districts().iter().all(|m| {
            ColorVector::from_colors(graph.num_colors(), m.iter().map(|&v| graph.color(v))).is_fair(ell)
        });
        if fair {
            ControlFlow::Break(d.canonical())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(match flow {
        ControlFlow::Break(d) => Outcome::yes(Some(d), nodes),
        ControlFlow::Continue(()) => Outcome::no(nodes),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::districting::verify_districting;
    use crate::partitions::for_each_partition;

    fn graph(n: usize, edges: &[(usize, usize)], colors: Option<Vec<usize>>) -> ColoredGraph {
        match colors {
            Some(c) => ColoredGraph::new(2, c, edges).unwrap(),
            None => ColoredGraph::new(1, vec![0; n], edges).unwrap(),
        }
    }

    #[test]
    fn enumeration_examples() {
        let p3 = graph(3, &[(0, 1), (1, 2)], None);
        let two = enumerate_connected_partitions(&p3, 2).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(enumerate_connected_partitions(&p3, 3).unwrap().len(), 1);
        let k3 = graph(3, &[(0, 1), (1, 2), (0, 2)], None);
        assert_eq!(enumerate_connected_partitions(&k3, 3).unwrap().len(), 1);
    }

    #[test]
    fn counts_match_filtered_set_partitions() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (4, 5)], None);
        for k in 1..=6 {
            let mut expected = 0;
            let _ = for_each_partition::<()>(6, k, |rgs| {
                let d = Districting::new(rgs.to_vec(), k).unwrap();
                if d.districts().iter().all(|m| crate::graph::is_connected_subset(&g, m)) {
                    expected += 1;
                }
                ControlFlow::Continue(())
            });
            assert_eq!(enumerate_connected_partitions(&g, k).unwrap().len(), expected);
        }
    }

    #[test]
    fn balanced_clique() {
        let edges: Vec<_> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        let g = graph(6, &edges, Some(vec![0, 0, 0, 1, 1, 1]));
        for k in 1..=6 {
            let inst = Instance::new(g.clone(), k, 0).unwrap();
            let out = brute_force_solve(&inst, &mut Budget::default()).unwrap();
            // The whole clique and a 4+2 split are balanced too.
            assert_eq!(out.feasible, k <= 3, "k = {k}");
            if let Some(w) = out.witness {
                assert!(verify_districting(&inst, &w).unwrap().is_valid());
            }
        }
    }

    #[test]
    fn path_examples() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)], Some(vec![0, 1, 0, 1]));
        assert!(brute_force_solve(&Instance::new(p4, 2, 0).unwrap(), &mut Budget::default()).unwrap().feasible);
        let p3 = graph(3, &[(0, 1), (1, 2)], None);
        assert!(!brute_force_solve(&Instance::new(p3, 2, 0).unwrap(), &mut Budget::default()).unwrap().feasible);
    }

    #[test]
    fn cap_enforced() {
        let g = graph(13, &[], None);
        assert!(brute_force_solve(&Instance::new(g, 1, 0).unwrap(), &mut Budget::default()).is_err());
    }
}
