//! Maximum weight bipartite matching via the Hungarian method on a
//! zero-padded square cost matrix.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    /// Matched `(left, right)` pairs, sorted by left vertex.
    pub pairs: Vec<(usize, usize)>,
    pub weight: u64,
}

/// Maximum total weight over all matchings. Repeated edges keep their
/// largest weight; zero-weight edges never help and are ignored.
pub fn max_weight_bipartite_matching(
    left_size: usize,
    right_size: usize,
    edges: &[(usize, usize, u64)],
) -> Matching {
    let size = left_size.max(right_size);
    if size == 0 || edges.is_empty() {
        return Matching {
            pairs: Vec::new(),
            weight: 0,
        };
    }
    let mut w = vec![vec![0i64; size]; size];
    for &(l, r, weight) in edges {
        assert!(l < left_size && r < right_size, "edge endpoint out of range");
        w[l][r] = w[l][r].max(weight as i64);
    }
    let assignment = hungarian_max(&w);
    let mut pairs = Vec::new();
    let mut weight = 0u64;
    for (l, &r) in assignment.iter().enumerate() {
        if w[l][r] > 0 {
            pairs.push((l, r));
            weight += w[l][r] as u64;
        }
    }
    Matching { pairs, weight }
}

/// Row-to-column assignment maximizing total weight of a square matrix.
fn hungarian_max(w: &[Vec<i64>]) -> Vec<usize> {
    let n = w.len();
    let max = w.iter().flatten().copied().max().unwrap_or(0);
    // 1-based potentials over rows (u) and columns (v); column 0 is virtual.
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut row_of = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        row_of[0] = i;
        let mut j0 = 0;
        let mut minv = vec![i64::MAX; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta = i64::MAX;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cost = max - w[i0 - 1][j - 1];
                let cur = cost - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0; n];
    for j in 1..=n {
        assignment[row_of[j] - 1] = j - 1;
    }
    assignment
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let m = max_weight_bipartite_matching(2, 2, &[(0, 0, 2), (0, 1, 1), (1, 1, 2)]);
        assert_eq!(m.weight, 4);
        assert_eq!(m.pairs, vec![(0, 0), (1, 1)]);
        assert_eq!(max_weight_bipartite_matching(3, 3, &[]).weight, 0);
        assert_eq!(max_weight_bipartite_matching(1, 1, &[(0, 0, 5)]).weight, 5);
    }

    #[test]
    fn prefers_heavier_total() {
        // Greedy on the 3 would give 3; two edges of 2 give 4.
        let m = max_weight_bipartite_matching(2, 2, &[(0, 0, 3), (0, 1, 2), (1, 0, 2)]);
        assert_eq!(m.weight, 4);
    }

    #[test]
    fn rectangular() {
        let m = max_weight_bipartite_matching(3, 1, &[(0, 0, 1), (1, 0, 7), (2, 0, 3)]);
        assert_eq!(m.pairs, vec![(1, 0)]);
        assert_eq!(m.weight, 7);
    }
}
