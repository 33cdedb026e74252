//! Stars with a forced center set `X`: the feasible district counts form an
//! interval that can be read off the color counts.

use super::{not_applicable, Budget, Outcome, SolveError};
use crate::classify::star_center;
use crate::districting::{Districting, Instance};
use crate::fairness::{mov, ColorVector};

/// Feasible numbers of districts, `lo..=hi`, when `feasible`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StarInterval {
    pub feasible: bool,
    pub lo: usize,
    pub hi: usize,
}

impl StarInterval {
    pub const EMPTY: StarInterval = StarInterval {
        feasible: false,
        lo: 0,
        hi: 0,
    };

    fn range(lo: usize, hi: usize) -> Self {
        if lo >= 1 && lo <= hi {
            StarInterval {
                feasible: true,
                lo,
                hi,
            }
        } else {
            Self::EMPTY
        }
    }

    pub fn contains(&self, k: usize) -> bool {
        self.feasible && self.lo <= k && k <= self.hi
    }
}

/// Largest entry and the largest entry after removing it once.
fn top_two(counts: &[usize]) -> (usize, usize) {
    let c1 = argmax(counts, |_| true).expect("non-empty");
    let second = argmax(counts, |c| c != c1).map_or(0, |c| counts[c]);
    (c1, second)
}

/// Lowest-index color with the largest count among those passing `keep`.
fn argmax(counts: &[usize], keep: impl Fn(usize) -> bool) -> Option<usize> {
    let mut best: Option<usize> = None;
    for c in (0..counts.len()).filter(|&c| keep(c)) {
        if best.is_none_or(|b| counts[c] > counts[b]) {
            best = Some(c);
        }
    }
    best
}

/// Shared parameters of the case analysis.
struct Analysis {
    interval: StarInterval,
    c1: usize,
    b_l: usize,
    c2_star: Option<usize>,
    b_u: usize,
}

fn analyse(x: &[usize], xy: &[usize], num_leaves: usize, ell: usize) -> Analysis {
    let none = |interval| Analysis {
        interval,
        c1: 0,
        b_l: 0,
        c2_star: None,
        b_u: 0,
    };
    if ell == 0 {
        let fair = mov(xy).is_ok_and(|m| m == 0);
        return none(if fair {
            StarInterval::range(1, 1)
        } else {
            StarInterval::EMPTY
        });
    }
    if xy.len() == 1 {
        let lo = (xy[0] + 1).saturating_sub(ell).max(1);
        return none(StarInterval::range(lo, num_leaves + 1));
    }
    let (c1, second_xy) = top_two(xy);
    if x[c1] > second_xy + ell {
        return none(StarInterval::EMPTY);
    }
    let b_l = (xy[c1] - second_xy).saturating_sub(ell);
    let c1_star = argmax(x, |_| true).expect("non-empty");
    let threshold = x[c1_star].saturating_sub(ell);
    let Some(c2_star) = argmax(x, |c| c != c1_star && xy[c] >= threshold) else {
        return none(StarInterval::EMPTY);
    };
    let b_u = (x[c1_star] - x[c2_star]).saturating_sub(ell);
    let interval = match (num_leaves + 1).checked_sub(b_u) {
        Some(hi) => StarInterval::range(b_l + 1, hi),
        None => StarInterval::EMPTY,
    };
    Analysis {
        interval,
        c1,
        b_l,
        c2_star: Some(c2_star),
        b_u,
    }
}

pub(crate) fn interval_from_counts(
    x: &[usize],
    xy: &[usize],
    num_leaves: usize,
    ell: usize,
) -> StarInterval {
    analyse(x, xy, num_leaves, ell).interval
}

/// Feasible district counts for a star whose center district must contain
/// the color mass `x`, with single leaves of colors `y_colors`.
pub fn star_interval(x: &ColorVector, y_colors: &[usize], ell: usize) -> StarInterval {
    let mut xy = x.clone();
    for &c in y_colors {
        xy.add_color(c);
    }
    interval_from_counts(x.counts(), xy.counts(), y_colors.len(), ell)
}

/// Which leaves stay in the center district for a solution with exactly
/// `k` districts, or `None` if `k` is outside the interval.
pub(crate) fn star_partition(
    x: &ColorVector,
    y_colors: &[usize],
    ell: usize,
    k: usize,
) -> Option<Vec<bool>> {
    let mut xy = x.clone();
    for &c in y_colors {
        xy.add_color(c);
    }
    let a = analyse(x.counts(), xy.counts(), y_colors.len(), ell);
    if !a.interval.contains(k) {
        return None;
    }
    let m = y_colors.len();
    if ell == 0 {
        return Some(vec![true; m]);
    }
    if xy.len() == 1 {
        return Some((0..m).map(|i| i >= k - 1).collect());
    }
    let c2_star = a.c2_star.expect("set when feasible");

    // S' keeps X plus b_u leaves of color c*_2.
    let mut in_s_prime = vec![false; m];
    let mut need = a.b_u;
    for (i, &c) in y_colors.iter().enumerate() {
        if need > 0 && c == c2_star {
            in_s_prime[i] = true;
            need -= 1;
        }
    }
    // S drops b_l leaves of color c1, avoiding those in S'.
    let mut in_center = vec![true; m];
    let mut drop = a.b_l;
    for (i, &c) in y_colors.iter().enumerate() {
        if drop > 0 && c == a.c1 && !in_s_prime[i] {
            in_center[i] = false;
            drop -= 1;
        }
    }
    if drop > 0 {
        return None;
    }
    let mut center = xy.clone();
    for (i, &c) in y_colors.iter().enumerate() {
        if !in_center[i] {
            center.remove_color(c);
        }
    }
    let mut districts = 1 + a.b_l;
    while districts < k {
        let top = *center.counts().iter().max().expect("non-empty");
        let movable = |i: usize| in_center[i] && !in_s_prime[i];
        let pick = (0..m)
            .find(|&i| movable(i) && center[y_colors[i]] == top)
            .or_else(|| (0..m).find(|&i| movable(i)))?;
        in_center[pick] = false;
        center.remove_color(y_colors[pick]);
        districts += 1;
    }
    center.is_fair(ell).then_some(in_center)
}

/// Solves a star instance exactly, with a witness on YES.
pub fn solve_star(instance: &Instance, budget: &mut Budget) -> Result<Outcome, SolveError> {
    let graph = instance.graph();
    let Some(center) = star_center(graph) else {
        return not_applicable("graph is not a star");
    };
    let n = graph.num_vertices();
    budget.record(n as u64)?;
    let leaves: Vec<usize> = (0..n).filter(|&v| v != center).collect();
    let y: Vec<usize> = leaves.iter().map(|&v| graph.color(v)).collect();
    let x = ColorVector::from_colors(graph.num_colors(), [graph.color(center)]);
    let Some(in_center) = star_partition(&x, &y, instance.ell(), instance.k()) else {
        return Ok(Outcome::no(n as u64));
    };
    let mut assignment = vec![0; n];
    let mut next = 1;
    for (i, &v) in leaves.iter().enumerate() {
        if !in_center[i] {
            assignment[v] = next;
            next += 1;
        }
    }
    Ok(Outcome::yes(
        Some(Districting::new(assignment, instance.k())?),
        n as u64,
    ))
}
