//! Property tests over random inputs.

mod common;

use std::ops::ControlFlow;

use common::oracle;
use fcd_core::dispatch::{choose, run, Algorithm};
use fcd_core::format::{parse_instance, parse_solution, write_instance, write_solution};
use fcd_core::generators::{gen_random_instance, GenClass};
use fcd_core::oracle::for_each_connected_partition;
use fcd_core::partitions::canonicalize;
use fcd_core::solvers::{star_interval, Budget};
use fcd_core::{mov, ColorVector, ColoredGraph, Districting, Instance};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = ColoredGraph> {
    (1..=max_n, 1..=3usize).prop_flat_map(|(n, c)| {
        (
            proptest::collection::vec(0..c, n),
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
        )
            .prop_map(move |(colors, bits)| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
                ColoredGraph::new(c, colors, &edges).unwrap()
            })
    })
}

fn instance_strategy(max_n: usize) -> impl Strategy<Value = Instance> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.num_vertices();
        (1..=n.min(4), 0..=2usize).prop_map(move |(k, ell)| Instance::new(g.clone(), k, ell).unwrap())
    })
}

proptest! {
    #[test]
    fn mov_is_top_minus_second(mut counts in proptest::collection::vec(0..20usize, 1..5)) {
        let m = mov(&counts).unwrap();
        let mut sorted = counts.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let expected = if sorted.len() == 1 { sorted[0] } else { sorted[0] - sorted[1] };
        prop_assert_eq!(m, expected);
        counts.reverse();
        prop_assert_eq!(mov(&counts).unwrap(), m);
        let cv = ColorVector::from_counts(counts);
        prop_assert_eq!(cv.is_fair(m), true);
        prop_assert_eq!(m == 0 || cv.is_fair(m - 1), m == 0);
    }

    #[test]
    fn instance_text_round_trips(inst in instance_strategy(9)) {
        let text = write_instance(&inst, None);
        let parsed = parse_instance(&text).unwrap();
        prop_assert_eq!(&parsed.instance, &inst);
        prop_assert_eq!(write_instance(&parsed.instance, None), text);
    }

    #[test]
    fn solution_text_round_trips(labels in proptest::collection::vec(0..4usize, 1..12)) {
        let mut labels = labels;
        canonicalize(&mut labels);
        let k = labels.iter().max().unwrap() + 1;
        let d = Districting::new(labels.clone(), k).unwrap();
        let text = write_solution(&d);
        let back = parse_solution(&text, labels.len()).unwrap();
        prop_assert_eq!(back.assignment(), &labels[..]);
    }

    #[test]
    fn canonicalize_is_idempotent(labels in proptest::collection::vec(0..6usize, 0..12)) {
        let mut once = labels.clone();
        canonicalize(&mut once);
        let mut twice = once.clone();
        canonicalize(&mut twice);
        prop_assert_eq!(&once, &twice);
        // Same blocks before and after.
        for i in 0..labels.len() {
            for j in 0..labels.len() {
                prop_assert_eq!(labels[i] == labels[j], once[i] == once[j]);
            }
        }
    }

    #[test]
    fn auto_matches_brute(inst in instance_strategy(8)) {
        let auto = run(&inst, None, Algorithm::Auto, &mut Budget::unlimited()).unwrap();
        prop_assert_eq!(auto.outcome.feasible, oracle(&inst));
    }

    #[test]
    fn star_feasible_counts_form_the_computed_interval(
        leaves in proptest::collection::vec(0..3usize, 0..8),
        forced in 0..3usize,
        center in 0..3usize,
        ell in 0..=2usize,
        colors in 1..=3usize,
    ) {
        let leaves: Vec<usize> = leaves.into_iter().map(|c| c % colors).collect();
        let center = center % colors;
        let forced = forced.min(leaves.len());
        let n = leaves.len() + 1;
        let mut all = vec![center];
        all.extend(&leaves);
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        let g = ColoredGraph::new(colors, all, &edges).unwrap();
        // Leaves 1..=forced are glued to the center.
        let mut x = ColorVector::from_colors(colors, [center]);
        for &c in &leaves[..forced] {
            x.add_color(c);
        }
        let interval = star_interval(&x, &leaves[forced..], ell);
        for k in 1..=n {
            let mut found = false;
            let _ = for_each_connected_partition(&g, k, 12, |d| {
                let ok = (1..=forced).all(|v| d.district_of(v) == d.district_of(0))
                    && d.districts().iter().all(|m| {
                        fcd_core::color_vector(&g, m).unwrap().is_fair(ell)
                    });
                if ok { found = true; ControlFlow::Break(()) } else { ControlFlow::Continue(()) }
            });
            // Gluing leaves to the center removes districts from the count.
            prop_assert_eq!(found, interval.contains(k), "k = {}", k);
        }
    }
}

/// Fuzz: the ladder and brute force give the same exit decision on 1000
/// seeded instances across classes.
#[test]
fn auto_agrees_with_brute_on_1000_instances() {
    let classes = [
        GenClass::Path,
        GenClass::Cycle,
        GenClass::Star,
        GenClass::Caterpillar,
        GenClass::Tree,
        GenClass::Unicyclic,
        GenClass::BoundedVc(3),
        GenClass::General(0.4),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut seen = std::collections::HashSet::new();
    for i in 0..1000 {
        let class = classes[i % classes.len()];
        let n = rng.gen_range(7..=10);
        let inst = gen_random_instance(class, n, rng.gen_range(1..=3), rng.gen_range(1..=4), rng.gen_range(0..=2), rng.gen())
            .unwrap();
        seen.insert(choose(&inst));
        let auto = run(&inst, None, Algorithm::Auto, &mut Budget::unlimited()).unwrap();
        assert_eq!(auto.outcome.feasible, oracle(&inst), "{inst:?} via {}", auto.algorithm);
    }
    assert!(seen.len() >= 5, "ladder rungs exercised: {seen:?}");
}
