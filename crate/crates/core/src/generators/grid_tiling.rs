//! Trees from Grid Tiling: one center with two heavy dummy colors and one
//! star per tile. Indices `1..=t` wrap modulo `t`.

use super::{Builder, GenerateError};
use crate::districting::{Districting, Instance};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridTilingInstance {
    pub t: usize,
    pub m: usize,
    pub n: usize,
    /// `tiles[(i - 1) * t + (j - 1)]` is the set `S^{i,j}`, entries in `1..=m`.
    pub tiles: Vec<Vec<(usize, usize)>>,
}

impl GridTilingInstance {
    pub fn set(&self, i: usize, j: usize) -> &[(usize, usize)] {
        &self.tiles[(i - 1) * self.t + (j - 1)]
    }

    /// The common first-entry and second-entry sums.
    pub fn sums(&self) -> Result<(usize, usize), GenerateError> {
        let bad = |msg: String| Err(GenerateError::InvalidGridTiling(msg));
        if self.t == 0 || self.m == 0 {
            return bad("t and m must be positive".into());
        }
        if self.n <= 2 {
            return bad(format!("n must exceed 2, got {}", self.n));
        }
        if self.tiles.len() != self.t * self.t {
            return bad(format!("expected {} tile sets, got {}", self.t * self.t, self.tiles.len()));
        }
        let mut sums = None;
        for (s, set) in self.tiles.iter().enumerate() {
            if set.len() != self.n {
                return bad(format!("tile set {s} has {} pairs, expected {}", set.len(), self.n));
            }
            let mut sorted = set.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != set.len() {
                return bad(format!("tile set {s} repeats a pair"));
            }
            if set.iter().any(|&(x, y)| !(1..=self.m).contains(&x) || !(1..=self.m).contains(&y)) {
                return bad(format!("tile set {s} has an entry outside 1..={}", self.m));
            }
            let here = (set.iter().map(|p| p.0).sum(), set.iter().map(|p| p.1).sum());
            match sums {
                None => sums = Some(here),
                Some(expected) if expected != here => {
                    return bad(format!("tile set {s} sums to {here:?}, expected {expected:?}"));
                }
                Some(_) => {}
            }
        }
        Ok(sums.expect("at least one tile set"))
    }

    /// Whether choosing `selection[s]` from tile set `s` solves the instance.
    pub fn is_solution(&self, selection: &[usize]) -> bool {
        let t = self.t;
        let pick = |i: usize, j: usize| self.set(i, j)[selection[(i - 1) * t + (j - 1)]];
        selection.len() == t * t
            && selection.iter().zip(&self.tiles).all(|(&s, set)| s < set.len())
            && (1..=t).all(|i| {
                (1..=t).all(|j| {
                    pick(i, j).0 == pick(wrap(i + 1, t), j).0 && pick(i, j).1 == pick(i, wrap(j + 1, t)).1
                })
            })
    }
}

fn wrap(i: usize, t: usize) -> usize {
    (i - 1) % t + 1
}

pub struct GridTilingReduction {
    pub instance: Instance,
    pub w: usize,
    pub z: usize,
    /// Vertices of each tile star, center first, indexed like `tiles`.
    pub stars: Vec<Vec<Vec<usize>>>,
}

// Colors: c = 0, c' = 1, c* = 2, then b, d, c_{i,j} per (i, j) row-major.
const C: usize = 0;
const C_PRIME: usize = 1;
const C_STAR: usize = 2;

fn b_color(t: usize, i: usize, j: usize) -> usize {
    3 + 3 * ((i - 1) * t + (j - 1))
}

fn d_color(t: usize, i: usize, j: usize) -> usize {
    b_color(t, i, j) + 1
}

fn c_color(t: usize, i: usize, j: usize) -> usize {
    b_color(t, i, j) + 2
}

pub fn reduce_grid_tiling(gt: &GridTilingInstance) -> Result<GridTilingReduction, GenerateError> {
    gt.sums()?;
    let (t, m, n) = (gt.t, gt.m, gt.n);
    let w = 5 * n * (t * t + t) + 1;
    let z = 2 * (n - 1) * 4 * m * w;
    let q = z / (2 * (n - 1));
    let f = |i: usize, j: usize| i * t + j;
    let g = |i: usize, j: usize| t * t + t + i * t + j;

    let mut b = Builder::default();
    let center = b.vertex(C_STAR);
    b.leaves(center, z, C_PRIME);
    b.leaves(center, z, C);
    let mut stars = Vec::with_capacity(t * t);
    for i in 1..=t {
        for j in 1..=t {
            let (i2, j2) = (wrap(i + 1, t), wrap(j + 1, t));
            let mut set_stars = Vec::with_capacity(n);
            for &(x, y) in gt.set(i, j) {
                let start = b.colors.len();
                let hub = b.vertex(C_STAR);
                b.edges.push((center, hub));
                let d_here = q + w * x - f(i, j);
                let b_here = q + w * y - g(i, j);
                b.leaves(hub, d_here, d_color(t, i, j));
                b.leaves(hub, q - w * x - f(i2, j), d_color(t, i2, j));
                b.leaves(hub, b_here, b_color(t, i, j));
                b.leaves(hub, q - w * y - g(i, j2), b_color(t, i, j2));
                b.leaves(hub, d_here.max(b_here), c_color(t, i, j));
                set_stars.push((start..b.colors.len()).collect());
            }
            stars.push(set_stars);
        }
    }
    let graph = b.finish(3 + 3 * t * t)?;
    Ok(GridTilingReduction {
        instance: Instance::new(graph, t * t + 1, 0)?,
        w,
        z,
        stars,
    })
}

impl GridTilingReduction {
    /// District 0 is the center district; district `s + 1` is the star of
    /// the tile chosen from set `s`.
    pub fn witness(&self, selection: &[usize]) -> Result<Districting, GenerateError> {
        if selection.len() != self.stars.len() || selection.iter().zip(&self.stars).any(|(&s, set)| s >= set.len()) {
            return Err(GenerateError::InvalidGridTiling("selection does not pick one tile per set".into()));
        }
        let mut assignment = vec![0; self.instance.n()];
        for (s, (&pick, set)) in selection.iter().zip(&self.stars).enumerate() {
            for &v in &set[pick] {
                assignment[v] = s + 1;
            }
        }
        Ok(Districting::new(assignment, self.stars.len() + 1)?)
    }
}
