//! Set partitions as restricted growth strings.
//!
//! A restricted growth string `rgs` of length `n` assigns item `i` to block
//! `rgs[i]`, where `rgs[0] = 0` and `rgs[i] <= 1 + max(rgs[..i])`. Every set
//! partition has exactly one such encoding.

use std::ops::ControlFlow;

/// Calls `visit` with every partition of `n` items into exactly `blocks`
/// non-empty blocks. Stops early when `visit` breaks.
pub fn for_each_partition<B>(
    n: usize,
    blocks: usize,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if blocks > n || (blocks == 0 && n > 0) {
        return ControlFlow::Continue(());
    }
    let mut rgs = vec![0; n];
    recurse(&mut rgs, 0, 0, blocks, &mut visit)
}

fn recurse<B>(
    rgs: &mut [usize],
    pos: usize,
    used: usize,
    blocks: usize,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let n = rgs.len();
    if pos == n {
        return if used == blocks {
            visit(rgs)
        } else {
            ControlFlow::Continue(())
        };
    }
    // Not enough items left to open the missing blocks.
    if blocks - used > n - pos {
        return ControlFlow::Continue(());
    }
    let limit = if used < blocks { used + 1 } else { used };
    for b in 0..limit {
        rgs[pos] = b;
        recurse(rgs, pos + 1, used.max(b + 1), blocks, visit)?;
    }
    ControlFlow::Continue(())
}

/// Groups `items` by block label.
pub fn blocks_of<T: Copy>(rgs: &[usize], items: &[T]) -> Vec<Vec<T>> {
    let count = rgs.iter().max().map_or(0, |m| m + 1);
    let mut out = vec![Vec::new(); count];
    for (&b, &item) in rgs.iter().zip(items) {
        out[b].push(item);
    }
    out
}

/// Rewrites arbitrary block labels into restricted growth form.
pub fn canonicalize(labels: &mut [usize]) {
    let mut map: Vec<(usize, usize)> = Vec::new();
    for label in labels.iter_mut() {
        let next = map.len();
        let fresh = match map.iter().find(|(old, _)| old == label) {
            Some(&(_, new)) => new,
            None => {
                map.push((*label, next));
                next
            }
        };
        *label = fresh;
    }
}

/// Stirling numbers of the second kind, `S(n, k)`, saturating.
pub fn stirling2(n: usize, k: usize) -> u64 {
    let mut row = vec![0u64; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = row[j - 1].saturating_add((j as u64).saturating_mul(row[j]));
        }
        row[0] = 0;
    }
    row[k]
}

/// Bell number `B(n)`, saturating.
pub fn bell(n: usize) -> u64 {
    (0..=n).fold(0u64, |acc, k| acc.saturating_add(stirling2(n, k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, k: usize) -> u64 {
        let mut c = 0;
        let _ = for_each_partition::<()>(n, k, |_| {
            c += 1;
            ControlFlow::Continue(())
        });
        c
    }

    #[test]
    fn counts_match_stirling_numbers() {
        for n in 0..8 {
            for k in 0..=n {
                assert_eq!(count(n, k), stirling2(n, k), "S({n},{k})");
            }
        }
        assert_eq!(stirling2(4, 2), 7);
        assert_eq!(bell(5), 52);
        assert_eq!(bell(0), 1);
    }

    #[test]
    fn partitions_are_restricted_growth_strings() {
        let _ = for_each_partition::<()>(5, 3, |rgs| {
            assert_eq!(rgs[0], 0);
            let mut max = 0;
            for &b in rgs {
                assert!(b <= max + 1);
                max = max.max(b);
            }
            assert_eq!(max, 2);
            ControlFlow::Continue(())
        });
    }

    #[test]
    fn canonicalize_relabels() {
        let mut labels = vec![4, 4, 1, 4, 7, 1];
        canonicalize(&mut labels);
        assert_eq!(labels, vec![0, 0, 1, 0, 2, 1]);
    }

    #[test]
    fn early_break_stops() {
        let mut seen = 0;
        let r = for_each_partition(6, 3, |_| {
            seen += 1;
            if seen == 3 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        assert!(r.is_break());
        assert_eq!(seen, 3);
    }
}
