//! Combining per-component answers: districts never span components, so the
//! district counts of the components must add up to `k`.

/// `reach[t]`: the components handled so far can be split into exactly `t`
/// districts in total, for `t <= k`. Entry `j` of each table says whether
/// that component splits into `j` fair connected districts.
pub fn union_counts(tables: &[Vec<bool>], k: usize) -> Vec<bool> {
    let mut reach = vec![false; k + 1];
    reach[0] = true;
    for table in tables {
        let mut next = vec![false; k + 1];
        for t in (0..=k).filter(|&t| reach[t]) {
            for (j, _) in table.iter().enumerate().filter(|(j, &ok)| ok && *j > 0) {
                if t + j <= k {
                    next[t + j] = true;
                }
            }
        }
        reach = next;
    }
    reach
}

/// Whether the components can share out exactly `k` districts.
pub fn solve_disjoint_union(tables: &[Vec<bool>], k: usize) -> bool {
    k >= tables.len() && union_counts(tables, k)[k]
}

/// Table with `true` exactly at the given counts.
pub fn table_from(counts: &[usize], k: usize) -> Vec<bool> {
    let mut table = vec![false; k + 1];
    for &c in counts.iter().filter(|&&c| c <= k) {
        table[c] = true;
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let one = table_from(&[1], 6);
        assert!(solve_disjoint_union(&[one.clone(), one.clone()], 2));
        assert!(!solve_disjoint_union(&[one.clone(), one], 1));
        let a = table_from(&[2, 3], 6);
        let b = table_from(&[1, 4], 6);
        assert!(solve_disjoint_union(&[a.clone(), b.clone()], 6));
        assert!(!solve_disjoint_union(&[a, b], 5));
    }

    #[test]
    fn zero_entries_ignored() {
        let t = vec![true, false, true];
        assert!(!solve_disjoint_union(std::slice::from_ref(&t), 0));
        assert!(solve_disjoint_union(&[t], 2));
    }
}
