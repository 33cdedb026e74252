//! Color vectors and margin of victory.

use std::ops::{Add, Index};

use crate::error::CoreError;
use crate::graph::ColoredGraph;

/// Per-color vertex counts of a vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorVector(Vec<usize>);

impl ColorVector {
    pub fn zeros(num_colors: usize) -> Self {
        Self(vec![0; num_colors])
    }

    pub fn from_counts(counts: Vec<usize>) -> Self {
        Self(counts)
    }

    /// Counts of a multiset of colors.
    pub fn from_colors(num_colors: usize, colors: impl IntoIterator<Item = usize>) -> Self {
        let mut counts = vec![0; num_colors];
        for c in colors {
            counts[c] += 1;
        }
        Self(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn add_color(&mut self, color: usize) {
        self.0[color] += 1;
    }

    pub fn remove_color(&mut self, color: usize) {
        self.0[color] -= 1;
    }

    pub fn add_assign(&mut self, other: &ColorVector) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    /// Lowest-index color with the largest count.
    pub fn top_color(&self) -> Option<usize> {
        let max = *self.0.iter().max()?;
        self.0.iter().position(|&c| c == max)
    }

    /// Margin of victory; `None` for an empty vector.
    pub fn mov(&self) -> Option<usize> {
        mov(&self.0).ok()
    }

    pub fn is_fair(&self, ell: usize) -> bool {
        self.mov().is_some_and(|m| m <= ell)
    }
}

impl Index<usize> for ColorVector {
    type Output = usize;

    fn index(&self, color: usize) -> &usize {
        &self.0[color]
    }
}

impl Add for &ColorVector {
    type Output = ColorVector;

    fn add(self, rhs: &ColorVector) -> ColorVector {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

/// Largest entry minus the second largest (the largest removed once); the
/// single entry itself for a length-one vector.
pub fn mov(counts: &[usize]) -> Result<usize, CoreError> {
    match counts {
        [] => Err(CoreError::EmptyVector),
        [only] => Ok(*only),
        _ => {
            let (mut first, mut second) = (0, 0);
            for &c in counts {
                if c > first {
                    second = first;
                    first = c;
                } else if c > second {
                    second = c;
                }
            }
            Ok(first - second)
        }
    }
}

/// Color vector of `subset`.
pub fn color_vector(graph: &ColoredGraph, subset: &[usize]) -> Result<ColorVector, CoreError> {
    let n = graph.num_vertices();
    let mut out = ColorVector::zeros(graph.num_colors());
    for &v in subset {
        if v >= n {
            return Err(CoreError::VertexOutOfRange { vertex: v, n });
        }
        out.add_color(graph.color(v));
    }
    Ok(out)
}

/// Incrementally maintained margin of victory for a growing vertex set.
///
/// Each insertion is O(1): only the two largest values and the multiplicity
/// of the largest are tracked.
#[derive(Clone, Debug)]
pub struct MovTracker {
    counts: Vec<usize>,
    top: usize,
    top_multiplicity: usize,
    second: usize,
}

impl MovTracker {
    pub fn new(num_colors: usize) -> Self {
        assert!(num_colors > 0, "at least one color is required");
        Self {
            counts: vec![0; num_colors],
            top: 0,
            top_multiplicity: num_colors,
            second: 0,
        }
    }

    pub fn push(&mut self, color: usize) {
        let before = self.counts[color];
        self.counts[color] += 1;
        if before == self.top {
            if self.top_multiplicity >= 2 {
                self.second = before;
            }
            self.top = before + 1;
            self.top_multiplicity = 1;
        } else if before + 1 == self.top {
            self.top_multiplicity += 1;
            self.second = self.top;
        } else {
            self.second = self.second.max(before + 1);
        }
    }

    pub fn mov(&self) -> usize {
        if self.counts.len() == 1 {
            self.top
        } else {
            self.top - self.second
        }
    }
}
