//! Problem instances, candidate districtings and their verification.

use std::fmt;

use crate::error::CoreError;
use crate::fairness::color_vector;
use crate::graph::{connected_components, ColoredGraph};

/// A colored graph together with the district count `k` and the maximum
/// allowed margin of victory `ell`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    graph: ColoredGraph,
    k: usize,
    ell: usize,
}

impl Instance {
    pub fn new(graph: ColoredGraph, k: usize, ell: usize) -> Result<Self, CoreError> {
        let n = graph.num_vertices();
        if k == 0 || k > n {
            return Err(CoreError::InvalidDistrictCount { k, n });
        }
        Ok(Self { graph, k, ell })
    }

    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn n(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn with_k(&self, k: usize) -> Result<Self, CoreError> {
        Self::new(self.graph.clone(), k, self.ell)
    }

    pub fn with_ell(&self, ell: usize) -> Self {
        Self {
            ell,
            ..self.clone()
        }
    }
}

/// An assignment of every vertex to one of `k` districts.
///
/// Construction only checks index ranges; empty districts are representable
/// so that [`verify_districting`] can report them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Districting {
    assignment: Vec<usize>,
    k: usize,
}

impl Districting {
    pub fn new(assignment: Vec<usize>, k: usize) -> Result<Self, CoreError> {
        if let Some(&index) = assignment.iter().find(|&&d| d >= k) {
            return Err(CoreError::DistrictOutOfRange { index, k });
        }
        Ok(Self { assignment, k })
    }

    /// Builds a districting from explicit vertex sets over `n` vertices.
    /// Every vertex must appear in exactly one set.
    pub fn from_districts(n: usize, districts: &[Vec<usize>]) -> Result<Self, CoreError> {
        let mut assignment = vec![usize::MAX; n];
        for (d, members) in districts.iter().enumerate() {
            for &v in members {
                if v >= n {
                    return Err(CoreError::VertexOutOfRange { vertex: v, n });
                }
                assignment[v] = d;
            }
        }
        let assigned = assignment.iter().filter(|&&d| d != usize::MAX).count();
        let listed: usize = districts.iter().map(Vec::len).sum();
        if assigned != n || listed != n {
            return Err(CoreError::DimensionMismatch {
                what: "district membership",
                expected: n,
                found: listed,
            });
        }
        Ok(Self {
            assignment,
            k: districts.len(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn district_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    /// Vertex sets of all `k` districts, each sorted.
    pub fn districts(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &d) in self.assignment.iter().enumerate() {
            out[d].push(v);
        }
        out
    }

    /// Relabels districts in order of first occurrence along vertex ids.
    /// Empty districts keep the highest labels.
    pub fn canonical(&self) -> Self {
        let mut relabel = vec![usize::MAX; self.k];
        let mut next = 0;
        for &d in &self.assignment {
            if relabel[d] == usize::MAX {
                relabel[d] = next;
                next += 1;
            }
        }
        for slot in relabel.iter_mut().filter(|slot| **slot == usize::MAX) {
            *slot = next;
            next += 1;
        }
        Self {
            assignment: self.assignment.iter().map(|&d| relabel[d]).collect(),
            k: self.k,
        }
    }

    /// Number of edges whose endpoints lie in different districts.
    pub fn cut_size(&self, graph: &ColoredGraph) -> usize {
        graph
            .edges()
            .into_iter()
            .filter(|&(u, v)| self.assignment[u] != self.assignment[v])
            .count()
    }
}

/// Why a district fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    Empty,
    Disconnected,
    Unfair { mov: usize },
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationKind::Empty => write!(f, "empty"),
            ViolationKind::Disconnected => write!(f, "disconnected"),
            ViolationKind::Unfair { mov } => write!(f, "unfair (margin of victory {mov})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub district: usize,
    pub kind: ViolationKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Valid => write!(f, "valid"),
            Verdict::Invalid(v) => write!(f, "invalid: district {} is {}", v.district, v.kind),
        }
    }
}

/// Checks that every district is non-empty, connected and `ell`-fair.
/// Reports the first failing district in index order.
pub fn verify_districting(instance: &Instance, d: &Districting) -> Result<Verdict, CoreError> {
    if d.k() != instance.k() {
        return Err(CoreError::DimensionMismatch {
            what: "district count",
            expected: instance.k(),
            found: d.k(),
        });
    }
    if d.assignment().len() != instance.n() {
        return Err(CoreError::DimensionMismatch {
            what: "assignment",
            expected: instance.n(),
            found: d.assignment().len(),
        });
    }
    let graph = instance.graph();
    for (district, members) in d.districts().into_iter().enumerate() {
        let kind = if members.is_empty() {
            Some(ViolationKind::Empty)
        } else if connected_components(graph, &members)?.len() != 1 {
            Some(ViolationKind::Disconnected)
        } else {
            let mov = color_vector(graph, &members)?
                .mov()
                .expect("graphs have at least one color");
            (mov > instance.ell()).then_some(ViolationKind::Unfair { mov })
        };
        if let Some(kind) = kind {
            return Ok(Verdict::Invalid(Violation { district, kind }));
        }
    }
    Ok(Verdict::Valid)
}
