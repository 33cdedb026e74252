//! Solvers that apply to the same instance must agree. No oracle here, so
//! the instances can be larger.

mod common;

use common::sample;
use fcd_core::classify::{caterpillar_spine, minimum_vertex_cover, nice_tree_decomposition, path_order};
use fcd_core::generators::GenClass;
use fcd_core::solvers::*;
use fcd_core::Instance;

const COUNT: usize = 200;

fn tw(i: &Instance) -> bool {
    let ntd = nice_tree_decomposition(i.graph(), None).unwrap();
    assert!(ntd.width <= 1);
    solve_treewidth(i, &ntd, &mut Budget::unlimited()).unwrap().feasible
}

#[test]
fn treewidth_matches_path() {
    for i in sample(GenClass::Path, 1..=16, COUNT, 31) {
        let order = path_order(i.graph()).unwrap();
        assert_eq!(tw(&i), solve_path(&i, &order, &mut Budget::unlimited()).unwrap().feasible, "{i:?}");
    }
}

#[test]
fn treewidth_matches_star() {
    for i in sample(GenClass::Star, 4..=16, COUNT, 32) {
        assert_eq!(tw(&i), solve_star(&i, &mut Budget::unlimited()).unwrap().feasible, "{i:?}");
    }
}

#[test]
fn treewidth_matches_caterpillar() {
    for i in sample(GenClass::Caterpillar, 5..=16, COUNT, 33) {
        let spine = caterpillar_spine(i.graph()).unwrap();
        let cat = solve_caterpillar(&i, &spine, &mut Budget::unlimited()).unwrap().feasible;
        assert_eq!(tw(&i), cat, "{i:?}");
    }
}

#[test]
fn vc_matches_vc_colors() {
    let mut instances = sample(GenClass::BoundedVc(3), 3..=12, COUNT / 2, 34);
    instances.extend(sample(GenClass::BoundedVc(4), 4..=11, COUNT / 2, 35));
    for i in instances {
        let cover = minimum_vertex_cover(i.graph(), i.n()).unwrap();
        let a = solve_vc(&i, &cover, &mut Budget::unlimited()).unwrap().feasible;
        let b = solve_vc_colors(&i, &cover, &mut Budget::unlimited()).unwrap().feasible;
        assert_eq!(a, b, "{i:?}");
    }
}

#[test]
fn degree_two_matches_caterpillar() {
    for i in sample(GenClass::Caterpillar, 5..=14, COUNT, 36) {
        let spine = caterpillar_spine(i.graph()).unwrap();
        let cat = solve_caterpillar(&i, &spine, &mut Budget::unlimited()).unwrap().feasible;
        let d2 = solve_degree_two(&i, &mut Budget::unlimited()).unwrap().feasible;
        assert_eq!(cat, d2, "{i:?}");
    }
}
