//! Dynamic program over a nice tree decomposition. A state describes how the
//! districts meet the current bag: `pb` partitions the bag by district, `ppb`
//! refines it by connected component inside the processed subgraph, `cc`
//! holds each open district's color counts so far, and `kd` counts districts
//! already closed below.

use std::collections::{HashMap, HashSet};

use super::{not_applicable, Budget, Outcome, SolveError};
use crate::classify::{NiceKind, NiceTreeDecomposition};
use crate::classify::Dsu;
use crate::districting::Instance;
use crate::fairness::mov;
use crate::graph::ColoredGraph;

pub const DEFAULT_STATE_CAP: usize = 10_000_000;

/// Labels are restricted growth strings over bag positions; `cc` is the
/// concatenation of one count vector per `pb` block in label order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct State {
    pb: Vec<u8>,
    ppb: Vec<u8>,
    cc: Vec<u32>,
    kd: u32,
}

fn relabel(labels: &[usize]) -> (Vec<u8>, Vec<usize>) {
    let mut map: HashMap<usize, u8> = HashMap::new();
    let mut order = Vec::new();
    let out = labels
        .iter()
        .map(|&l| {
            *map.entry(l).or_insert_with(|| {
                order.push(l);
                (order.len() - 1) as u8
            })
        })
        .collect();
    (out, order)
}

impl State {
    /// Canonical state from arbitrary labels; `cc[l]` belongs to `pb` label `l`.
    fn build(pb: &[usize], ppb: &[usize], cc: &[Vec<u32>], kd: u32) -> State {
        let (pb_rgs, order) = relabel(pb);
        let (ppb_rgs, _) = relabel(ppb);
        State {
            pb: pb_rgs,
            ppb: ppb_rgs,
            cc: order.iter().flat_map(|&l| cc[l].iter().copied()).collect(),
            kd,
        }
    }

    fn blocks(&self) -> usize {
        self.pb.iter().map(|&b| b as usize + 1).max().unwrap_or(0)
    }

    fn counts(&self, colors: usize) -> Vec<Vec<u32>> {
        self.cc.chunks(colors.max(1)).map(<[u32]>::to_vec).collect()
    }

    fn labels(&self) -> (Vec<usize>, Vec<usize>) {
        (
            self.pb.iter().map(|&b| b as usize).collect(),
            self.ppb.iter().map(|&b| b as usize).collect(),
        )
    }
}

struct Dp<'a> {
    graph: &'a ColoredGraph,
    colors: usize,
    k: usize,
    ell: usize,
    cap: usize,
    stored: usize,
}

impl Dp<'_> {
    fn fair(&self, counts: &[u32]) -> bool {
        let counts: Vec<usize> = counts.iter().map(|&c| c as usize).collect();
        mov(&counts).is_ok_and(|m| m <= self.ell)
    }

    fn store(&mut self, table: &mut HashSet<State>, state: State, budget: &mut Budget) -> Result<(), SolveError> {
        budget.charge(1)?;
        if state.blocks() + state.kd as usize > self.k {
            return Ok(());
        }
        if table.insert(state) {
            self.stored += 1;
            if self.stored > self.cap {
                return Err(SolveError::StateBudgetExceeded { limit: self.cap });
            }
        }
        Ok(())
    }

    fn check_state(&self, bag: &[usize], state: &State) {
        if !cfg!(debug_assertions) {
            return;
        }
        let blocks = state.blocks();
        assert_eq!(state.cc.len(), blocks * self.colors);
        let mut parent_of = HashMap::new();
        for (&b, &c) in state.pb.iter().zip(&state.ppb) {
            assert_eq!(*parent_of.entry(c).or_insert(b), b, "ppb does not refine pb");
        }
        let counts = state.counts(self.colors);
        for (b, block) in counts.iter().enumerate() {
            let mut least = vec![0u32; self.colors];
            for (p, &v) in bag.iter().enumerate() {
                if state.pb[p] as usize == b {
                    least[self.graph.color(v)] += 1;
                }
            }
            assert!(block.iter().zip(&least).all(|(a, b)| a >= b), "cc below bag counts");
        }
        assert!(state.kd as usize <= self.k);
    }

    fn leaf(&mut self, v: usize, budget: &mut Budget) -> Result<HashSet<State>, SolveError> {
        let mut cv = vec![0; self.colors];
        cv[self.graph.color(v)] = 1;
        let mut table = HashSet::new();
        self.store(&mut table, State::build(&[0], &[0], &[cv], 0), budget)?;
        Ok(table)
    }

    fn introduce_vertex(
        &mut self,
        child: HashSet<State>,
        bag: &[usize],
        v: usize,
        budget: &mut Budget,
    ) -> Result<HashSet<State>, SolveError> {
        let pos = bag.binary_search(&v).expect("introduced vertex in bag");
        let color = self.graph.color(v);
        let mut table = HashSet::new();
        for state in child {
            self.stored -= 1;
            let (pb, ppb) = state.labels();
            let mut cc = state.counts(self.colors);
            let blocks = cc.len();
            let fresh_ppb = ppb.iter().max().map_or(0, |m| m + 1);
            let mut ppb2 = ppb.clone();
            ppb2.insert(pos, fresh_ppb);
            // Join an open district, or open a new one.
            for b in 0..=blocks {
                let mut pb2 = pb.clone();
                pb2.insert(pos, b);
                if b == blocks {
                    cc.push(vec![0; self.colors]);
                }
                cc[b][color] += 1;
                self.store(&mut table, State::build(&pb2, &ppb2, &cc, state.kd), budget)?;
                cc[b][color] -= 1;
                if b == blocks {
                    cc.pop();
                }
            }
        }
        Ok(table)
    }

    fn introduce_edge(
        &mut self,
        child: HashSet<State>,
        bag: &[usize],
        u: usize,
        v: usize,
        budget: &mut Budget,
    ) -> Result<HashSet<State>, SolveError> {
        let pu = bag.binary_search(&u).expect("edge endpoint in bag");
        let pv = bag.binary_search(&v).expect("edge endpoint in bag");
        let mut table = HashSet::new();
        for state in child {
            self.stored -= 1;
            if state.pb[pu] == state.pb[pv] && state.ppb[pu] != state.ppb[pv] {
                let (pb, mut ppb) = state.labels();
                let (from, to) = (ppb[pv], ppb[pu]);
                for l in &mut ppb {
                    if *l == from {
                        *l = to;
                    }
                }
                let merged = State::build(&pb, &ppb, &state.counts(self.colors), state.kd);
                self.store(&mut table, merged, budget)?;
            }
            self.store(&mut table, state, budget)?;
        }
        Ok(table)
    }

    fn forget(
        &mut self,
        child: HashSet<State>,
        child_bag: &[usize],
        v: usize,
        budget: &mut Budget,
    ) -> Result<HashSet<State>, SolveError> {
        let pos = child_bag.binary_search(&v).expect("forgotten vertex in bag");
        let mut table = HashSet::new();
        for state in child {
            self.stored -= 1;
            let (mut pb, mut ppb) = state.labels();
            let cc = state.counts(self.colors);
            let block = pb[pos];
            let shares_component = ppb
                .iter()
                .enumerate()
                .any(|(p, &l)| p != pos && l == ppb[pos]);
            let shares_district = pb.iter().enumerate().any(|(p, &l)| p != pos && l == block);
            let kd = if shares_component {
                state.kd
            } else if !shares_district {
                // The district is complete.
                if !self.fair(&cc[block]) {
                    continue;
                }
                state.kd + 1
            } else {
                // A component of the district is sealed off from the rest.
                continue;
            };
            pb.remove(pos);
            ppb.remove(pos);
            self.store(&mut table, State::build(&pb, &ppb, &cc, kd), budget)?;
        }
        Ok(table)
    }

    fn join(
        &mut self,
        left: HashSet<State>,
        right: HashSet<State>,
        bag: &[usize],
        budget: &mut Budget,
    ) -> Result<HashSet<State>, SolveError> {
        self.stored -= left.len() + right.len();
        let mut by_pb: HashMap<&[u8], Vec<&State>> = HashMap::new();
        for state in &right {
            by_pb.entry(&state.pb).or_default().push(state);
        }
        let mut table = HashSet::new();
        for y in &left {
            let Some(partners) = by_pb.get(y.pb.as_slice()) else {
                continue;
            };
            let blocks = y.blocks();
            let mut bag_counts = vec![0u32; blocks * self.colors];
            for (p, &v) in bag.iter().enumerate() {
                bag_counts[y.pb[p] as usize * self.colors + self.graph.color(v)] += 1;
            }
            for z in partners {
                let kd = y.kd + z.kd;
                if kd as usize + blocks > self.k {
                    budget.charge(1)?;
                    continue;
                }
                let mut dsu = Dsu::new(bag.len());
                for side in [&y.ppb, &z.ppb] {
                    let mut first: HashMap<u8, usize> = HashMap::new();
                    for (p, &l) in side.iter().enumerate() {
                        if let Some(&q) = first.get(&l) {
                            dsu.union(p, q);
                        } else {
                            first.insert(l, p);
                        }
                    }
                }
                let ppb: Vec<usize> = (0..bag.len()).map(|p| dsu.find(p)).collect();
                let (ppb, _) = relabel(&ppb);
                let cc = y
                    .cc
                    .iter()
                    .zip(&z.cc)
                    .zip(&bag_counts)
                    .map(|((a, b), c)| a + b - c)
                    .collect();
                let state = State {
                    pb: y.pb.clone(),
                    ppb,
                    cc,
                    kd,
                };
                self.store(&mut table, state, budget)?;
            }
        }
        Ok(table)
    }
}

/// Decision with the default state cap.
pub fn solve_treewidth(
    instance: &Instance,
    ntd: &NiceTreeDecomposition,
    budget: &mut Budget,
) -> Result<Outcome, SolveError> {
    solve_treewidth_with_cap(instance, ntd, DEFAULT_STATE_CAP, budget)
}

pub fn solve_treewidth_with_cap(
    instance: &Instance,
    ntd: &NiceTreeDecomposition,
    cap: usize,
    budget: &mut Budget,
) -> Result<Outcome, SolveError> {
    let graph = instance.graph();
    if ntd.nodes.is_empty() {
        return not_applicable("invalid decomposition: no nodes");
    }
    if let Err(e) = ntd.check(graph) {
        return not_applicable(format!("invalid decomposition: {e}"));
    }
    if ntd.width >= u8::MAX as usize {
        return not_applicable("decomposition too wide");
    }
    let before = budget.spent();
    let mut dp = Dp {
        graph,
        colors: graph.num_colors(),
        k: instance.k(),
        ell: instance.ell(),
        cap,
        stored: 0,
    };
    let mut tables: Vec<Option<HashSet<State>>> = vec![None; ntd.nodes.len()];
    for (x, node) in ntd.nodes.iter().enumerate() {
        let mut take = |i: usize| tables[node.children[i]].take().expect("child processed");
        let table = match node.kind {
            NiceKind::Leaf(v) => dp.leaf(v, budget)?,
            NiceKind::IntroduceVertex(v) => {
                let child = take(0);
                dp.introduce_vertex(child, &node.bag, v, budget)?
            }
            NiceKind::IntroduceEdge(u, v) => {
                let child = take(0);
                dp.introduce_edge(child, &node.bag, u, v, budget)?
            }
            NiceKind::Forget(v) => {
                let child_bag = &ntd.nodes[node.children[0]].bag;
                let child = take(0);
                dp.forget(child, child_bag, v, budget)?
            }
            NiceKind::Join => {
                let left = take(0);
                let right = take(1);
                dp.join(left, right, &node.bag, budget)?
            }
        };
        for state in &table {
            dp.check_state(&node.bag, state);
        }
        tables[x] = Some(table);
    }
    let root = tables[ntd.root()].take().expect("root processed");
    let feasible = root.iter().any(|s| {
        s.pb == s.ppb
            && s.blocks() + s.kd as usize == dp.k
            && s.counts(dp.colors).iter().all(|c| dp.fair(c))
    });
    let work = budget.spent() - before;
    Ok(if feasible {
        Outcome::yes(None, work)
    } else {
        Outcome::no(work)
    })
}
