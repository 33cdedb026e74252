//! Decision procedures for fair connected districting.

pub mod caterpillar;
pub mod degree_two;
pub mod fen;
pub mod matching;
pub mod mln;
pub mod path;
pub mod star;
pub mod treewidth;
pub mod union;
pub mod vertex_cover;

use std::time::Instant;

use thiserror::Error;

use crate::classify::ClassifyError;
use crate::districting::Districting;
use crate::error::CoreError;

pub use caterpillar::{caterpillar_counts, solve_caterpillar, solve_pathwidth_one};
pub use degree_two::solve_degree_two;
pub use fen::solve_fen_k;
pub use matching::{max_weight_bipartite_matching, Matching};
pub use mln::solve_mln;
pub use path::{solve_cycle, solve_path};
pub use star::{solve_star, star_interval, StarInterval};
pub use treewidth::{solve_treewidth, solve_treewidth_with_cap, DEFAULT_STATE_CAP};
pub use union::solve_disjoint_union;
pub use vertex_cover::{solve_vc, solve_vc_colors};

/// Default work budget for the enumerative solvers.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("solver not applicable: {0}")]
    NotApplicable(String),
    #[error("work budget of {limit} units exceeded")]
    BudgetExceeded { limit: u64 },
    #[error("state budget of {limit} stored states exceeded")]
    StateBudgetExceeded { limit: usize },
    #[error("timed out")]
    Timeout,
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl SolveError {
    /// Whether the solver gave up rather than answered.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            SolveError::BudgetExceeded { .. }
                | SolveError::StateBudgetExceeded { .. }
                | SolveError::Timeout
        )
    }
}

pub(crate) fn not_applicable<T>(msg: impl Into<String>) -> Result<T, SolveError> {
    Err(SolveError::NotApplicable(msg.into()))
}

/// Result of a decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub feasible: bool,
    /// Present only for solvers that reconstruct solutions.
    pub witness: Option<Districting>,
    /// Work units spent (table cells, guesses or states, per solver).
    pub work: u64,
}

impl Outcome {
    pub fn no(work: u64) -> Self {
        Self {
            feasible: false,
            witness: None,
            work,
        }
    }

    pub fn yes(witness: Option<Districting>, work: u64) -> Self {
        Self {
            feasible: true,
            witness,
            work,
        }
    }
}

/// Cooperative work and time limit shared by a solver run.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    spent: u64,
    deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_BUDGET)
    }
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Self {
            limit,
            spent: 0,
            deadline: None,
        }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    pub fn with_deadline(mut self, deadline: Instant) -> Self {
        self.deadline = Some(deadline);
        self
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }

    /// Spends `units` of work, failing once the limit is passed. The
    /// deadline is polled every 4096 units.
    pub fn charge(&mut self, units: u64) -> Result<(), SolveError> {
        let before = self.spent;
        self.spent = self.spent.saturating_add(units);
        if self.spent > self.limit {
            return Err(SolveError::BudgetExceeded { limit: self.limit });
        }
        if self.deadline.is_some() && (before >> 12 != self.spent >> 12) {
            self.check_deadline()?;
        }
        Ok(())
    }

    /// Counts work without enforcing the limit; used by polynomial solvers.
    pub fn record(&mut self, units: u64) -> Result<(), SolveError> {
        let before = self.spent;
        self.spent = self.spent.saturating_add(units);
        if self.deadline.is_some() && (before >> 12 != self.spent >> 12) {
            self.check_deadline()?;
        }
        Ok(())
    }

    pub fn check_deadline(&self) -> Result<(), SolveError> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(SolveError::Timeout),
            _ => Ok(()),
        }
    }
}
