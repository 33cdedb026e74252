#![allow(dead_code)]

use fcd_core::classify::{forest_decomposition, TreeDecomposition};
use fcd_core::generators::{gen_random_instance, GenClass};
use fcd_core::oracle::brute_force_solve;
use fcd_core::solvers::{Budget, Outcome};
use fcd_core::{verify_districting, Instance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` instances of `class` with parameters drawn inside the oracle caps.
pub fn sample(class: GenClass, n_range: std::ops::RangeInclusive<usize>, count: usize, seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_range.clone());
            let colors = rng.gen_range(1..=3);
            let k = rng.gen_range(1..=n.min(4));
            let ell = rng.gen_range(0..=2);
            gen_random_instance(class, n, colors, k, ell, rng.gen()).expect("class fits n")
        })
        .collect()
}

pub fn oracle(instance: &Instance) -> bool {
    brute_force_solve(instance, &mut Budget::unlimited())
        .expect("oracle applies")
        .feasible
}

/// A returned witness must be a valid districting.
pub fn check_witness(instance: &Instance, outcome: &Outcome) {
    if let Some(w) = &outcome.witness {
        assert!(outcome.feasible);
        let verdict = verify_districting(instance, w).unwrap();
        assert!(verdict.is_valid(), "bad witness: {verdict}");
    }
}

/// Width-two decomposition of a connected unicyclic graph: a forest
/// decomposition of the graph minus one cycle vertex, with that vertex added
/// to every bag.
pub fn unicyclic_decomposition(instance: &Instance) -> TreeDecomposition {
    let g = instance.graph();
    let fes = fcd_core::classify::feedback_edge_set(g);
    assert_eq!(fes.len(), 1);
    let r = fes[0].0;
    let rest: Vec<usize> = (0..g.num_vertices()).filter(|&v| v != r).collect();
    let (sub, map) = g.induced_subgraph(&rest);
    let td = forest_decomposition(&sub).unwrap();
    let bags = td
        .bags
        .iter()
        .map(|bag| {
            let mut b: Vec<usize> = bag.iter().map(|&v| map[v]).collect();
            b.push(r);
            b
        })
        .collect();
    let td = TreeDecomposition::new(bags, td.parent.clone());
    td.validate(g).expect("valid decomposition");
    td
}
