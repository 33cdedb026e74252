//! Fair connected districting: partition a vertex-colored graph into exactly
//! `k` connected districts whose margin of victory is at most `ell`.

pub mod classify;
pub mod cli;
pub mod dispatch;
pub mod districting;
pub mod error;
pub mod fairness;
pub mod format;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod partitions;
pub mod solvers;

pub use districting::{verify_districting, Districting, Instance, Verdict, Violation, ViolationKind};
pub use error::CoreError;
pub use fairness::{color_vector, mov, ColorVector, MovTracker};
pub use graph::{connected_components, is_connected_subset, ColoredGraph};
