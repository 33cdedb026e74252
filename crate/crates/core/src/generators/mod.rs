//! Random instances per graph class and the hardness reductions, each with a
//! builder for the districting that the forward direction promises.

mod grid_tiling;
mod nae;
mod pbcp;
mod random;

use thiserror::Error;

use crate::error::CoreError;

pub use grid_tiling::{reduce_grid_tiling, GridTilingInstance, GridTilingReduction};
pub use nae::{reduce_nae3sat, Nae3SatInstance, NaeReduction};
pub use pbcp::reduce_pbcp;
pub use random::{gen_random_instance, GenClass};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("cannot generate: {0}")]
    Infeasible(String),
    #[error("invalid grid tiling instance: {0}")]
    InvalidGridTiling(String),
    #[error("invalid NAE-3-SAT instance: {0}")]
    InvalidSat(String),
    #[error("balanced partition reduction needs an even vertex count, got {0}")]
    OddVertexCount(usize),
    #[error(transparent)]
    Core(#[from] CoreError),
}

/// Accumulates vertices and edges for the constructions.
#[derive(Default)]
struct Builder {
    colors: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self, color: usize) -> usize {
        self.colors.push(color);
        self.colors.len() - 1
    }

    fn leaves(&mut self, parent: usize, count: usize, color: usize) {
        for _ in 0..count {
            let v = self.vertex(color);
            self.edges.push((parent, v));
        }
    }

    fn finish(self, num_colors: usize) -> Result<crate::graph::ColoredGraph, CoreError> {
        crate::graph::ColoredGraph::new(num_colors, self.colors, &self.edges)
    }
}
