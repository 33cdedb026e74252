use thiserror::Error;

/// Errors raised while building or checking the basic data model.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {vertex} has color {color}, but only {num_colors} colors exist")]
    ColorOutOfRange {
        vertex: usize,
        color: usize,
        num_colors: usize,
    },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("district count k = {k} must satisfy 1 <= k <= n = {n}")]
    InvalidDistrictCount { k: usize, n: usize },
    #[error("{what}: expected length {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("district index {index} out of range for k = {k}")]
    DistrictOutOfRange { index: usize, k: usize },
    #[error("margin of victory is undefined for an empty vector")]
    EmptyVector,
}
