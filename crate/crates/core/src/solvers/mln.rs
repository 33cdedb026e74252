//! Guess how the endpoint districts cut into every branch; what is left is a
//! union of paths.

use std::ops::ControlFlow;

use super::path::{segment_table, solve_cycle, solve_path};
use super::union::union_counts;
use super::{Budget, Outcome, SolveError};
use crate::classify::{BranchDecomposition, ClassifyError};
use crate::districting::Instance;
use crate::fairness::ColorVector;
use crate::graph::is_connected_subset;
use crate::partitions::for_each_partition;

const RESIDUAL: usize = usize::MAX;

struct Prepared {
    vertices: Vec<usize>,
    /// `tables[a][len][t]`: positions `a..a+len` split into `t` fair segments.
    tables: Vec<Vec<Vec<bool>>>,
}

struct Search<'a> {
    instance: &'a Instance,
    branches: Vec<Prepared>,
    block_of: Vec<usize>,
    cuts: Vec<(usize, usize)>,
    k_prime: usize,
    guesses: u64,
}

impl Search<'_> {
    fn choose(&mut self, b: usize, budget: &mut Budget) -> Result<bool, SolveError> {
        if b == self.branches.len() {
            self.guesses += 1;
            budget.charge(1)?;
            return Ok(self.evaluate());
        }
        let l = self.branches[b].vertices.len();
        for j in 1..l {
            for j2 in 1..=l - j {
                self.cuts[b] = (j, j2);
                if self.choose(b + 1, budget)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    fn evaluate(&self) -> bool {
        let graph = self.instance.graph();
        let mut district = self.block_of.clone();
        for (branch, &(j, j2)) in self.branches.iter().zip(&self.cuts) {
            let vs = &branch.vertices;
            let l = vs.len();
            let first = self.block_of[vs[0]];
            let last = self.block_of[vs[l - 1]];
            for &v in &vs[..j] {
                district[v] = first;
            }
            for &v in &vs[l - j2..] {
                district[v] = last;
            }
        }
        let mut members = vec![Vec::new(); self.k_prime];
        for (v, &d) in district.iter().enumerate() {
            if d != RESIDUAL {
                members[d].push(v);
            }
        }
        for m in &members {
            let cv = ColorVector::from_colors(graph.num_colors(), m.iter().map(|&v| graph.color(v)));
            if !cv.is_fair(self.instance.ell()) || !is_connected_subset(graph, m) {
                return false;
            }
        }
        let rest = self.instance.k() - self.k_prime;
        let tables: Vec<Vec<bool>> = self
            .branches
            .iter()
            .zip(&self.cuts)
            .filter_map(|(branch, &(j, j2))| {
                let len = branch.vertices.len() - j - j2;
                (len > 0).then(|| branch.tables[j][len].clone())
            })
            .collect();
        tables.len() <= rest && union_counts(&tables, rest)[rest]
    }
}

/// Decision only. Graphs that are a single path or cycle go to the
/// polynomial solvers.
pub fn solve_mln(
    instance: &Instance,
    bd: &BranchDecomposition,
    budget: &mut Budget,
) -> Result<Outcome, SolveError> {
    let graph = instance.graph();
    if !graph.is_connected() {
        return Err(ClassifyError::Disconnected.into());
    }
    if let [only] = bd.branches.as_slice() {
        let mut out = if only.is_cycle {
            solve_cycle(instance, &only.vertices[..only.len() - 1], budget)?
        } else {
            solve_path(instance, &only.vertices, budget)?
        };
        out.witness = None;
        return Ok(out);
    }

    let k = instance.k();
    let num_colors = graph.num_colors();
    let mut branches = Vec::with_capacity(bd.branches.len());
    for branch in &bd.branches {
        let colors: Vec<usize> = branch.inner().iter().map(|&v| graph.color(v)).collect();
        // Position a of the branch is inner index a - 1.
        let mut tables = vec![Vec::new()];
        for a in 1..branch.len() {
            let tail = colors.get(a - 1..).unwrap_or(&[]);
            tables.push(segment_table(tail, num_colors, instance.ell(), k, budget)?);
        }
        branches.push(Prepared {
            vertices: branch.vertices.clone(),
            tables,
        });
    }

    let x = &bd.endpoints;
    let mut search = Search {
        instance,
        branches,
        block_of: vec![RESIDUAL; graph.num_vertices()],
        cuts: vec![(0, 0); bd.branches.len()],
        k_prime: 0,
        guesses: 0,
    };
    for k_prime in 1..=x.len().min(k) {
        search.k_prime = k_prime;
        let found = for_each_partition(x.len(), k_prime, |rgs| {
            for (&v, &b) in x.iter().zip(rgs) {
                search.block_of[v] = b;
            }
            match search.choose(0, budget) {
                Ok(true) => ControlFlow::Break(Ok(())),
                Ok(false) => ControlFlow::Continue(()),
                Err(e) => ControlFlow::Break(Err(e)),
            }
        });
        if let ControlFlow::Break(result) = found {
            result?;
            return Ok(Outcome::yes(None, search.guesses));
        }
    }
    Ok(Outcome::no(search.guesses))
}
