//! Every solver against brute force on small random instances.

mod common;

use common::{check_witness, oracle, sample, unicyclic_decomposition};
use fcd_core::classify::{
    branch_decomposition, caterpillar_spine, cycle_order, feedback_edge_set, minimum_vertex_cover,
    nice_tree_decomposition, path_order, star_center,
};
use fcd_core::generators::GenClass;
use fcd_core::solvers::*;
use fcd_core::Instance;

const COUNT: usize = 300;

fn agree(instances: &[Instance], mut solve: impl FnMut(&Instance) -> Outcome) {
    assert!(instances.len() >= COUNT);
    for (i, inst) in instances.iter().enumerate() {
        let got = solve(inst);
        check_witness(inst, &got);
        assert_eq!(got.feasible, oracle(inst), "instance {i}: {inst:?}");
    }
}

fn b() -> Budget {
    Budget::unlimited()
}

#[test]
fn path() {
    agree(&sample(GenClass::Path, 1..=11, COUNT, 1), |i| {
        solve_path(i, &path_order(i.graph()).unwrap(), &mut b()).unwrap()
    });
}

#[test]
fn cycle() {
    agree(&sample(GenClass::Cycle, 3..=11, COUNT, 2), |i| {
        solve_cycle(i, &cycle_order(i.graph()).unwrap(), &mut b()).unwrap()
    });
}

#[test]
fn star() {
    agree(&sample(GenClass::Star, 4..=11, COUNT, 3), |i| {
        assert!(star_center(i.graph()).is_some());
        solve_star(i, &mut b()).unwrap()
    });
}

#[test]
fn caterpillar() {
    agree(&sample(GenClass::Caterpillar, 5..=11, COUNT, 4), |i| {
        solve_caterpillar(i, &caterpillar_spine(i.graph()).unwrap(), &mut b()).unwrap()
    });
}

#[test]
fn pathwidth_one_forests() {
    // Disjoint unions of two caterpillars or paths.
    let left = sample(GenClass::Caterpillar, 5..=6, COUNT, 5);
    let right = sample(GenClass::Path, 1..=5, COUNT, 6);
    let joined: Vec<Instance> = left
        .iter()
        .zip(&right)
        .map(|(a, c)| {
            let (ga, gc) = (a.graph(), c.graph());
            let n = ga.num_vertices();
            let mut colors = ga.colors().to_vec();
            colors.extend(gc.colors().iter().map(|&x| x % ga.num_colors()));
            let mut edges = ga.edges();
            edges.extend(gc.edges().into_iter().map(|(u, v)| (u + n, v + n)));
            let g = fcd_core::ColoredGraph::new(ga.num_colors(), colors, &edges).unwrap();
            let k = (a.k() + c.k()).clamp(2, 4);
            Instance::new(g, k, a.ell()).unwrap()
        })
        .collect();
    agree(&joined, |i| solve_pathwidth_one(i, &mut b()).unwrap());
}

#[test]
fn mln() {
    let mut instances = sample(GenClass::Unicyclic, 3..=10, COUNT / 3, 7);
    instances.extend(sample(GenClass::Tree, 7..=10, COUNT / 3, 8));
    instances.extend(
        sample(GenClass::General(0.35), 3..=9, 3 * COUNT, 9)
            .into_iter()
            .filter(|i| i.graph().is_connected())
            .take(COUNT / 3 + 1),
    );
    agree(&instances, |i| {
        let bd = branch_decomposition(i.graph()).unwrap();
        solve_mln(i, &bd, &mut b()).unwrap()
    });
}

#[test]
fn treewidth_trees() {
    let mut instances = sample(GenClass::Tree, 7..=12, COUNT / 2, 10);
    instances.extend(sample(GenClass::Caterpillar, 5..=12, COUNT / 2, 11));
    agree(&instances, |i| {
        let ntd = nice_tree_decomposition(i.graph(), None).unwrap();
        solve_treewidth(i, &ntd, &mut b()).unwrap()
    });
}

#[test]
fn treewidth_unicyclic() {
    agree(&sample(GenClass::Unicyclic, 3..=10, COUNT, 12), |i| {
        let td = unicyclic_decomposition(i);
        let ntd = nice_tree_decomposition(i.graph(), Some(&td)).unwrap();
        assert!(ntd.width <= 2);
        solve_treewidth(i, &ntd, &mut b()).unwrap()
    });
}

#[test]
fn fen_k() {
    let mut instances = sample(GenClass::Unicyclic, 3..=9, COUNT / 2, 13);
    instances.extend(sample(GenClass::General(0.3), 2..=9, COUNT / 2, 14));
    agree(&instances, |i| solve_fen_k(i, &feedback_edge_set(i.graph()), &mut b()).unwrap());
}

fn vc_instances(seed: u64) -> Vec<Instance> {
    let mut instances = sample(GenClass::BoundedVc(2), 2..=9, COUNT / 2, seed);
    instances.extend(sample(GenClass::BoundedVc(3), 3..=9, COUNT / 2, seed + 1));
    instances
}

#[test]
fn vc() {
    agree(&vc_instances(15), |i| {
        let cover = minimum_vertex_cover(i.graph(), i.n()).unwrap();
        solve_vc(i, &cover, &mut b()).unwrap()
    });
}

#[test]
fn vc_colors() {
    agree(&vc_instances(17), |i| {
        let cover = minimum_vertex_cover(i.graph(), i.n()).unwrap();
        solve_vc_colors(i, &cover, &mut b()).unwrap()
    });
}

#[test]
fn degree_two() {
    let mut instances = sample(GenClass::Tree, 7..=11, COUNT / 3, 19);
    instances.extend(sample(GenClass::Unicyclic, 3..=10, COUNT / 3, 20));
    instances.extend(sample(GenClass::General(0.25), 1..=10, COUNT / 3, 21));
    agree(&instances, |i| solve_degree_two(i, &mut b()).unwrap());
}
