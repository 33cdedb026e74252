//! Forward directions of the reductions, checked on built witnesses, plus
//! micro-scale checks of the balanced-partition reduction against brute force.

mod common;

use common::oracle;
use fcd_core::generators::{
    gen_random_instance, reduce_grid_tiling, reduce_nae3sat, reduce_pbcp, GenClass, GridTilingInstance,
    Nae3SatInstance,
};
use fcd_core::oracle::for_each_connected_partition;
use fcd_core::verify_districting;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::ops::ControlFlow;

fn all_selections(gt: &GridTilingInstance) -> Vec<Vec<usize>> {
    let cells = gt.t * gt.t;
    let mut out = vec![vec![]];
    for _ in 0..cells {
        out = out
            .into_iter()
            .flat_map(|s: Vec<usize>| {
                (0..gt.n).map(move |x| {
                    let mut s = s.clone();
                    s.push(x);
                    s
                })
            })
            .collect();
    }
    out
}

#[test]
fn grid_tiling_t2_every_solution_gives_a_valid_witness() {
    // Tile sets over [2] x [2] with n = 3; all share the sums.
    let sets = [
        vec![(1, 1), (1, 2), (2, 1)],
        vec![(1, 2), (2, 1), (1, 1)],
        vec![(2, 1), (1, 1), (1, 2)],
        vec![(1, 1), (2, 1), (1, 2)],
    ];
    let gt = GridTilingInstance {
        t: 2,
        m: 2,
        n: 3,
        tiles: sets.to_vec(),
    };
    let red = reduce_grid_tiling(&gt).unwrap();
    assert_eq!(red.instance.k(), 5);
    assert_eq!(red.instance.ell(), 0);
    let mut solutions = 0;
    for sel in all_selections(&gt) {
        let d = red.witness(&sel).unwrap();
        let valid = verify_districting(&red.instance, &d).unwrap().is_valid();
        if gt.is_solution(&sel) {
            solutions += 1;
            assert!(valid, "solution {sel:?} gives an invalid districting");
        }
    }
    assert!(solutions > 0);
}

#[test]
fn grid_tiling_color_totals() {
    let gt = GridTilingInstance {
        t: 2,
        m: 2,
        n: 3,
        tiles: vec![vec![(1, 1), (1, 2), (2, 1)]; 4],
    };
    let red = reduce_grid_tiling(&gt).unwrap();
    let g = red.instance.graph();
    let mut totals = vec![0usize; g.num_colors()];
    for &c in g.colors() {
        totals[c] += 1;
    }
    let (t, n, z) = (gt.t, gt.n, red.z);
    for i in 1..=t {
        for j in 1..=t {
            let base = 3 + 3 * ((i - 1) * t + (j - 1));
            let f = i * t + j;
            let gg = t * t + t + i * t + j;
            assert_eq!(totals[base + 1], n * z / (n - 1) - 2 * n * f);
            assert_eq!(totals[base], n * z / (n - 1) - 2 * n * gg);
        }
    }
    // Center plus every tile star center.
    assert_eq!(totals[2], n * t * t + 1);
    assert!(totals[2] <= z);
}

fn nae_instances() -> Vec<Nae3SatInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    let mut out = Vec::new();
    for vars in 3..=4 {
        for clauses in 1..=3 {
            for _ in 0..4 {
                let clauses = (0..clauses)
                    .map(|_| {
                        let mut vs: Vec<i64> = (1..=vars as i64).collect();
                        for i in 0..3 {
                            let j = rng.gen_range(i..vs.len());
                            vs.swap(i, j);
                        }
                        [0, 1, 2].map(|i| if rng.gen_bool(0.5) { vs[i] } else { -vs[i] })
                    })
                    .collect();
                out.push(Nae3SatInstance { num_vars: vars, clauses });
            }
        }
    }
    out
}

#[test]
fn nae_every_satisfying_assignment_gives_a_valid_witness() {
    let mut checked = 0;
    for sat in nae_instances() {
        let red = reduce_nae3sat(&sat).unwrap();
        assert_eq!((red.instance.k(), red.instance.ell()), (2, 0));
        for bits in 0..1u32 << sat.num_vars {
            let assignment: Vec<bool> = (0..sat.num_vars).map(|i| bits >> i & 1 == 1).collect();
            let valid = verify_districting(&red.instance, &red.witness(&assignment).unwrap())
                .unwrap()
                .is_valid();
            if sat.is_satisfied(&assignment) {
                assert!(valid);
                checked += 1;
            } else {
                assert!(!valid, "an unsatisfying assignment must break a district");
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn nae_spec_example() {
    let sat = Nae3SatInstance {
        num_vars: 3,
        clauses: vec![[1, 2, -3]],
    };
    let red = reduce_nae3sat(&sat).unwrap();
    let d = red.witness(&[true, false, false]).unwrap();
    assert!(verify_districting(&red.instance, &d).unwrap().is_valid());
}

/// Whether the vertices split into two connected halves of equal size.
fn perfectly_balanced(g: &fcd_core::ColoredGraph) -> bool {
    let n = g.num_vertices();
    let mut found = false;
    let _ = for_each_connected_partition(g, 2, n, |d| {
        if d.districts()[0].len() * 2 == n {
            found = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

#[test]
fn pbcp_turing_reduction_matches_direct_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(52);
    for _ in 0..25 {
        let n = 2 * rng.gen_range(1..=3);
        let p = rng.gen_range(0.2..0.8);
        let inst = gen_random_instance(GenClass::General(p), n, 1, 1, 0, rng.gen()).unwrap();
        let g = inst.graph();
        let mut any = false;
        for v in 0..n {
            for v2 in 0..n {
                if v != v2 && oracle(&reduce_pbcp(g, v, v2).unwrap()) {
                    any = true;
                }
            }
        }
        assert_eq!(any, perfectly_balanced(g), "{g:?}");
    }
}
