//! Algorithm selection: a fixed ladder for `auto`, or a forced solver.

use std::fmt;
use std::str::FromStr;

use crate::classify::{
    branch_decomposition, caterpillar_spine, classify_graph, cycle_order, feedback_edge_set,
    forest_decomposition, minimum_vertex_cover, nice_tree_decomposition, path_order, ClassTag,
    TreeDecomposition,
};
use crate::districting::Instance;
use crate::oracle::brute_force_solve;
use crate::partitions::bell;
use crate::solvers::{
    solve_caterpillar, solve_cycle, solve_degree_two, solve_fen_k, solve_mln, solve_path,
    solve_pathwidth_one, solve_star, solve_treewidth, solve_vc, solve_vc_colors, Budget, Outcome,
    SolveError,
};

/// Rung thresholds of the auto ladder.
const TW_MAX_COLORS: usize = 3;
const FEN_K_MAX: usize = 6;
const MLN_MAX_GUESSES: u64 = 10_000_000;
const VC_MAX_COVER: usize = 5;
const DEG2_MAX_P: usize = 10;
const BRUTE_MAX_N: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Auto,
    Path,
    Cycle,
    Star,
    Caterpillar,
    Mln,
    Treewidth,
    FenK,
    Vc,
    VcColors,
    Deg2,
    Brute,
}

impl Algorithm {
    pub const ALL: [Algorithm; 12] = [
        Algorithm::Auto,
        Algorithm::Path,
        Algorithm::Cycle,
        Algorithm::Star,
        Algorithm::Caterpillar,
        Algorithm::Mln,
        Algorithm::Treewidth,
        Algorithm::FenK,
        Algorithm::Vc,
        Algorithm::VcColors,
        Algorithm::Deg2,
        Algorithm::Brute,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Path => "path",
            Algorithm::Cycle => "cycle",
            Algorithm::Star => "star",
            Algorithm::Caterpillar => "caterpillar",
            Algorithm::Mln => "mln",
            Algorithm::Treewidth => "treewidth",
            Algorithm::FenK => "fen-k",
            Algorithm::Vc => "vc",
            Algorithm::VcColors => "vc-colors",
            Algorithm::Deg2 => "deg2",
            Algorithm::Brute => "brute",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| format!("unknown algorithm `{s}`"))
    }
}

fn mln_guesses(instance: &Instance) -> Option<u64> {
    let bd = branch_decomposition(instance.graph()).ok()?;
    if bd.endpoints.len() > 15 {
        return None;
    }
    bd.branches
        .iter()
        .try_fold(bell(bd.endpoints.len()), |acc, b| acc.checked_mul((b.len() * b.len()) as u64))
}

/// The auto ladder; `None` when no rung applies.
pub fn choose(instance: &Instance) -> Option<Algorithm> {
    let g = instance.graph();
    let report = classify_graph(g);
    match report.class_tag {
        ClassTag::Path => return Some(Algorithm::Path),
        ClassTag::Cycle => return Some(Algorithm::Cycle),
        ClassTag::Star => return Some(Algorithm::Star),
        ClassTag::Caterpillar => return Some(Algorithm::Caterpillar),
        _ => {}
    }
    if report.fen == 0 {
        let caterpillars = g.components().iter().all(|c| {
            let (sub, _) = g.induced_subgraph(c);
            caterpillar_spine(&sub).is_some()
        });
        if caterpillars {
            return Some(Algorithm::Caterpillar);
        }
        if g.num_colors() <= TW_MAX_COLORS {
            return Some(Algorithm::Treewidth);
        }
    }
    if report.fen + instance.k() <= FEN_K_MAX {
        return Some(Algorithm::FenK);
    }
    if report.is_connected && mln_guesses(instance).is_some_and(|x| x <= MLN_MAX_GUESSES) {
        return Some(Algorithm::Mln);
    }
    if minimum_vertex_cover(g, VC_MAX_COVER).is_ok() {
        return Some(Algorithm::Vc);
    }
    if report.degree_ge2_count <= DEG2_MAX_P {
        return Some(Algorithm::Deg2);
    }
    if g.num_vertices() <= BRUTE_MAX_N {
        return Some(Algorithm::Brute);
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    /// The solver that ran; never `Auto`.
    pub algorithm: Algorithm,
    pub outcome: Outcome,
}

/// Runs `algorithm` (resolving `Auto` through [`choose`]). A supplied tree
/// decomposition is used by the treewidth solver; forests get one built.
pub fn run(
    instance: &Instance,
    td: Option<&TreeDecomposition>,
    algorithm: Algorithm,
    budget: &mut Budget,
) -> Result<Report, SolveError> {
    let algorithm = match algorithm {
        Algorithm::Auto => choose(instance).ok_or(SolveError::BudgetExceeded {
            limit: budget.limit(),
        })?,
        forced => forced,
    };
    let g = instance.graph();
    let na = |what: &str| SolveError::NotApplicable(what.to_string());
    let outcome = match algorithm {
        Algorithm::Auto => unreachable!("resolved above"),
        Algorithm::Path => {
            let order = path_order(g).ok_or_else(|| na("graph is not a path"))?;
            solve_path(instance, &order, budget)?
        }
        Algorithm::Cycle => {
            let order = cycle_order(g).ok_or_else(|| na("graph is not a cycle"))?;
            solve_cycle(instance, &order, budget)?
        }
        Algorithm::Star => solve_star(instance, budget)?,
        Algorithm::Caterpillar => match caterpillar_spine(g) {
            Some(spine) if g.is_connected() => solve_caterpillar(instance, &spine, budget)?,
            _ => solve_pathwidth_one(instance, budget)?,
        },
        Algorithm::Mln => {
            let bd = branch_decomposition(g)?;
            solve_mln(instance, &bd, budget)?
        }
        Algorithm::Treewidth => {
            let td = match td {
                Some(td) => td.clone(),
                None => forest_decomposition(g)
                    .map_err(|_| na("no tree decomposition given and the graph is not a forest"))?,
            };
            let ntd = nice_tree_decomposition(g, Some(&td))?;
            solve_treewidth(instance, &ntd, budget)?
        }
        Algorithm::FenK => solve_fen_k(instance, &feedback_edge_set(g), budget)?,
        Algorithm::Vc => solve_vc(instance, &minimum_vertex_cover(g, g.num_vertices())?, budget)?,
        Algorithm::VcColors => {
            solve_vc_colors(instance, &minimum_vertex_cover(g, g.num_vertices())?, budget)?
        }
        Algorithm::Deg2 => solve_degree_two(instance, budget)?,
        Algorithm::Brute => brute_force_solve(instance, budget)?,
    };
    Ok(Report { algorithm, outcome })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_random_instance, GenClass};
    use crate::graph::ColoredGraph;

    #[test]
    fn ladder_examples() {
        let p9 = gen_random_instance(GenClass::Path, 9, 2, 2, 0, 1).unwrap();
        assert_eq!(choose(&p9), Some(Algorithm::Path));
        let tree = gen_random_instance(GenClass::Tree, 10, 2, 2, 0, 1).unwrap();
        assert_eq!(choose(&tree), Some(Algorithm::Treewidth));
        let dense = gen_random_instance(GenClass::General(0.9), 40, 10, 5, 0, 3).unwrap();
        assert_eq!(choose(&dense), None);
        let mut budget = Budget::default();
        let err = run(&dense, None, Algorithm::Auto, &mut budget).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn forced_solver_must_apply() {
        let g = ColoredGraph::new(2, vec![0, 1, 0], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let inst = Instance::new(g, 1, 1).unwrap();
        let err = run(&inst, None, Algorithm::Path, &mut Budget::default()).unwrap_err();
        assert!(matches!(err, SolveError::NotApplicable(_)));
        let ok = run(&inst, None, Algorithm::Auto, &mut Budget::default()).unwrap();
        assert_eq!(ok.algorithm, Algorithm::Cycle);
        assert!(ok.outcome.feasible);
    }

    #[test]
    fn names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.as_str().parse::<Algorithm>().unwrap(), a);
        }
    }
}
