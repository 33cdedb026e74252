//! Vertex-cover parameterized solvers. Both guess how the cover `S` splits
//! into districts plus a few connector vertices from the independent set
//! `I`; what remains is distributing `I`.
//!
//! `solve_vc` settles the distribution with a weighted bipartite matching;
//! `solve_vc_colors` groups `I` into types (color, neighborhood) and
//! searches the per-type counts directly.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use super::matching::max_weight_bipartite_matching;
use super::{not_applicable, Budget, Outcome, SolveError};
use crate::classify::is_vertex_cover;
use crate::districting::Instance;
use crate::graph::{connected_components, is_connected_subset, ColoredGraph};
use crate::partitions::{blocks_of, for_each_partition};

/// Values of `k'` worth trying: with `ell = 0` every district needs two
/// vertices, so each one meets the cover.
fn k_prime_range(cover_size: usize, k: usize, ell: usize) -> Vec<usize> {
    if cover_size == 0 {
        return vec![0];
    }
    if ell == 0 {
        return if k <= cover_size { vec![k] } else { vec![] };
    }
    (1..=cover_size.min(k)).collect()
}

/// Calls `visit` with every choice of connector sets `J_1..J_k'`: pairwise
/// disjoint, `|J_i| < |S_i|`, each drawn from independent vertices touching
/// two components of `G[S_i]`, with `G[S_i ∪ J_i]` connected.
fn for_each_connectors<B>(
    graph: &ColoredGraph,
    blocks: &[Vec<usize>],
    in_cover: &[bool],
    visit: &mut impl FnMut(&[Vec<usize>]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let options: Vec<Vec<Vec<usize>>> = blocks
        .iter()
        .map(|block| connector_options(graph, block, in_cover))
        .collect();
    let mut chosen = vec![Vec::new(); blocks.len()];
    let mut taken = vec![false; graph.num_vertices()];
    pick(&options, 0, &mut chosen, &mut taken, visit)
}

fn pick<B>(
    options: &[Vec<Vec<usize>>],
    i: usize,
    chosen: &mut Vec<Vec<usize>>,
    taken: &mut [bool],
    visit: &mut impl FnMut(&[Vec<usize>]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if i == options.len() {
        return visit(chosen);
    }
    for option in &options[i] {
        if option.iter().any(|&v| taken[v]) {
            continue;
        }
        for &v in option {
            taken[v] = true;
        }
        chosen[i] = option.clone();
        let flow = pick(options, i + 1, chosen, taken, visit);
        for &v in option {
            taken[v] = false;
        }
        flow?;
    }
    ControlFlow::Continue(())
}

fn connector_options(graph: &ColoredGraph, block: &[usize], in_cover: &[bool]) -> Vec<Vec<usize>> {
    let comps = connected_components(graph, block).expect("cover vertices in range");
    if comps.len() == 1 {
        return vec![Vec::new()];
    }
    let mut comp_of = vec![usize::MAX; graph.num_vertices()];
    for (c, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = c;
        }
    }
    let candidates: Vec<usize> = (0..graph.num_vertices())
        .filter(|&v| !in_cover[v])
        .filter(|&v| {
            let mut touched: Vec<usize> = graph
                .neighbors(v)
                .iter()
                .map(|&w| comp_of[w])
                .filter(|&c| c != usize::MAX)
                .collect();
            touched.sort_unstable();
            touched.dedup();
            touched.len() >= 2
        })
        .collect();
    let mut out = Vec::new();
    let max = (comps.len() - 1).min(candidates.len());
    for size in 1..=max {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let set: Vec<usize> = combo.iter().map(|&i| candidates[i]).collect();
            let mut members = block.to_vec();
            members.extend_from_slice(&set);
            if is_connected_subset(graph, &members) {
                out.push(set);
            }
            if !advance(&mut combo, candidates.len()) {
                break;
            }
        }
    }
    out
}

fn advance(combo: &mut [usize], m: usize) -> bool {
    let r = combo.len();
    for i in (0..r).rev() {
        if combo[i] < m - r + i {
            combo[i] += 1;
            for j in i + 1..r {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Shared guess loop over `k'`, cover partitions and connector sets.
fn for_each_guess(
    instance: &Instance,
    cover: &[usize],
    budget: &mut Budget,
    mut visit: impl FnMut(&[Vec<usize>], &[Vec<usize>], &mut Budget) -> Result<bool, SolveError>,
) -> Result<bool, SolveError> {
    let graph = instance.graph();
    if !is_vertex_cover(graph, cover) {
        return not_applicable("not a vertex cover");
    }
    let mut cover = cover.to_vec();
    cover.sort_unstable();
    cover.dedup();
    let mut in_cover = vec![false; graph.num_vertices()];
    for &v in &cover {
        in_cover[v] = true;
    }
    for k_prime in k_prime_range(cover.len(), instance.k(), instance.ell()) {
        let flow = for_each_partition(cover.len(), k_prime, |rgs| {
            let blocks = blocks_of(rgs, &cover);
            for_each_connectors(graph, &blocks, &in_cover, &mut |connectors| {
                match visit(&blocks, connectors, budget) {
                    Ok(false) => ControlFlow::Continue(()),
                    Ok(true) => ControlFlow::Break(Ok(())),
                    Err(e) => ControlFlow::Break(Err(e)),
                }
            })
        });
        if let ControlFlow::Break(result) = flow {
            result?;
            return Ok(true);
        }
    }
    Ok(false)
}

/// Per-district data shared by both solvers.
struct Core {
    /// Color vector of `S_i ∪ J_i`.
    base: Vec<Vec<usize>>,
    /// For each leftover independent vertex, the districts it may join.
    eligible: Vec<Vec<usize>>,
    /// Leftover independent vertices `I'`.
    rest: Vec<usize>,
}

fn core(graph: &ColoredGraph, blocks: &[Vec<usize>], connectors: &[Vec<usize>], in_cover: &[bool]) -> Core {
    let n = graph.num_vertices();
    let mut used = vec![false; n];
    let mut base = vec![vec![0; graph.num_colors()]; blocks.len()];
    let mut owner = vec![usize::MAX; n];
    for (i, (block, conn)) in blocks.iter().zip(connectors).enumerate() {
        for &v in block.iter().chain(conn) {
            used[v] = true;
            base[i][graph.color(v)] += 1;
        }
        for &v in block {
            owner[v] = i;
        }
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !used[v] && !in_cover[v]).collect();
    let eligible = rest
        .iter()
        .map(|&v| {
            let mut ds: Vec<usize> = graph.neighbors(v).iter().map(|&w| owner[w]).collect();
            ds.sort_unstable();
            ds.dedup();
            ds
        })
        .collect();
    Core { base, eligible, rest }
}

/// Color pairs `(c, c')` and counts `(z, z')` for one district.
#[derive(Clone, Copy, Debug)]
struct Top {
    c: usize,
    c2: Option<usize>,
    z: usize,
    z2: usize,
    /// Weight-two slots this choice creates.
    heavy: usize,
}

fn district_tops(base: &[usize], avail: &[usize], ell: usize) -> Vec<Top> {
    let num_colors = base.len();
    let mut out = Vec::new();
    if num_colors == 1 {
        for z in base[0]..=(base[0] + avail[0]).min(ell) {
            out.push(Top {
                c: 0,
                c2: None,
                z,
                z2: 0,
                heavy: z - base[0],
            });
        }
        return out;
    }
    for c in 0..num_colors {
        for c2 in (0..num_colors).filter(|&c2| c2 != c) {
            for z in base[c]..=base[c] + avail[c] {
                let lo = base[c2].max(z.saturating_sub(ell));
                let hi = z.min(base[c2] + avail[c2]);
                for z2 in lo..=hi {
                    // Early rejection: other colors already exceed z'.
                    let ok = (0..num_colors).all(|o| o == c || o == c2 || base[o] <= z2);
                    if ok {
                        out.push(Top {
                            c,
                            c2: Some(c2),
                            z,
                            z2,
                            heavy: z - base[c] + z2 - base[c2],
                        });
                    }
                }
            }
        }
    }
    out
}

/// Decision via the matching reduction.
pub fn solve_vc(instance: &Instance, cover: &[usize], budget: &mut Budget) -> Result<Outcome, SolveError> {
    let graph = instance.graph();
    let k = instance.k();
    let ell = instance.ell();
    let mut in_cover = vec![false; graph.num_vertices()];
    for &v in cover.iter().filter(|&&v| v < graph.num_vertices()) {
        in_cover[v] = true;
    }
    let mut guesses = 0u64;
    let found = for_each_guess(instance, cover, budget, |blocks, connectors, budget| {
        let data = core(graph, blocks, connectors, &in_cover);
        let k_prime = blocks.len();
        let singles = k - k_prime;
        if data.rest.len() < singles || (singles > 0 && ell == 0) {
            return Ok(false);
        }
        let avail: Vec<Vec<usize>> = (0..k_prime)
            .map(|i| {
                let mut a = vec![0; graph.num_colors()];
                for (idx, &v) in data.rest.iter().enumerate() {
                    if data.eligible[idx].contains(&i) {
                        a[graph.color(v)] += 1;
                    }
                }
                a
            })
            .collect();
        let options: Vec<Vec<Top>> = (0..k_prime)
            .map(|i| district_tops(&data.base[i], &avail[i], ell))
            .collect();
        let mut tops = Vec::with_capacity(k_prime);
        choose_tops(&options, 0, singles, data.rest.len(), &mut tops, &mut |tops| {
            guesses += 1;
            budget.charge(1 + data.rest.len() as u64)?;
            Ok(matching_accepts(graph, &data, tops, singles))
        })
    })?;
    Ok(if found { Outcome::yes(None, guesses) } else { Outcome::no(guesses) })
}

fn choose_tops(
    options: &[Vec<Top>],
    i: usize,
    demand: usize,
    supply: usize,
    tops: &mut Vec<Top>,
    check: &mut impl FnMut(&[Top]) -> Result<bool, SolveError>,
) -> Result<bool, SolveError> {
    if i == options.len() {
        return check(tops);
    }
    for &top in &options[i] {
        let need = demand + top.heavy;
        tops.push(top);
        if need <= supply && choose_tops(options, i + 1, need, supply, tops, check)? {
            return Ok(true);
        }
        tops.pop();
    }
    Ok(false)
}

fn matching_accepts(graph: &ColoredGraph, data: &Core, tops: &[Top], singles: usize) -> bool {
    let num_colors = graph.num_colors();
    // Right side: (district, color, weight) slots, then the singleton slots.
    let mut slot_kind: Vec<(usize, usize, u64)> = Vec::new();
    let mut heavy = singles;
    for (i, top) in tops.iter().enumerate() {
        let base = &data.base[i];
        for c in 0..num_colors {
            let (count, weight) = if c == top.c {
                (top.z - base[c], 2)
            } else if Some(c) == top.c2 {
                (top.z2 - base[c], 2)
            } else if top.c2.is_some() {
                (top.z2 - base[c], 1)
            } else {
                (0, 1)
            };
            if weight == 2 {
                heavy += count;
            }
            for _ in 0..count {
                slot_kind.push((i, c, weight));
            }
        }
    }
    if heavy > data.rest.len() {
        return false;
    }
    let first_single = slot_kind.len();
    let mut edges = Vec::new();
    for (l, &v) in data.rest.iter().enumerate() {
        let color = graph.color(v);
        for (r, &(i, c, w)) in slot_kind.iter().enumerate() {
            if c == color && data.eligible[l].contains(&i) {
                edges.push((l, r, w));
            }
        }
        for s in 0..singles {
            edges.push((l, first_single + s, 2));
        }
    }
    let t = (data.rest.len() + heavy) as u64;
    let m = max_weight_bipartite_matching(data.rest.len(), first_single + singles, &edges);
    m.weight >= t
}

/// Independent vertices sharing a color and a neighborhood in the cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeClass {
    pub color: usize,
    /// Cover vertices adjacent to the members, sorted.
    pub neighborhood: Vec<usize>,
    pub members: Vec<usize>,
}

pub fn type_classes(graph: &ColoredGraph, cover: &[usize]) -> Vec<TypeClass> {
    let mut in_cover = vec![false; graph.num_vertices()];
    for &v in cover {
        in_cover[v] = true;
    }
    let mut groups: BTreeMap<(usize, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for v in (0..graph.num_vertices()).filter(|&v| !in_cover[v]) {
        groups
            .entry((graph.color(v), graph.neighbors(v).to_vec()))
            .or_default()
            .push(v);
    }
    groups
        .into_iter()
        .map(|((color, neighborhood), members)| TypeClass {
            color,
            neighborhood,
            members,
        })
        .collect()
}

struct TypeSearch<'a> {
    types: &'a [TypeClass],
    /// `eligible[t]`: districts whose cover part meets type `t`'s neighborhood.
    eligible: Vec<Vec<usize>>,
    /// `required[t][i]`: type `t` was guessed as a connector of district `i`.
    required: Vec<Vec<bool>>,
    counts: Vec<Vec<usize>>,
    singles: usize,
    ell: usize,
}

impl TypeSearch<'_> {
    fn run(&mut self, t: usize, leftover: usize, budget: &mut Budget) -> Result<bool, SolveError> {
        budget.charge(1)?;
        if leftover > self.singles {
            return Ok(false);
        }
        let remaining: usize = self.types[t..].iter().map(|ty| ty.members.len()).sum();
        if leftover + remaining < self.singles {
            return Ok(false);
        }
        if t == self.types.len() {
            return Ok(leftover == self.singles && self.counts.iter().all(|c| fair(c, self.ell)));
        }
        let n_t = self.types[t].members.len();
        let districts = self.eligible[t].clone();
        self.distribute(t, &districts, 0, n_t, leftover, budget)
    }

    /// Chooses `x_{i,t}` for the eligible districts one at a time.
    fn distribute(
        &mut self,
        t: usize,
        districts: &[usize],
        pos: usize,
        left: usize,
        leftover: usize,
        budget: &mut Budget,
    ) -> Result<bool, SolveError> {
        if pos == districts.len() {
            return self.run(t + 1, leftover + left, budget);
        }
        let i = districts[pos];
        let color = self.types[t].color;
        let min = usize::from(self.required[t][i]);
        // Later required districts still need their one vertex each.
        let reserved = districts[pos + 1..]
            .iter()
            .filter(|&&j| self.required[t][j])
            .count();
        if left < min + reserved {
            return Ok(false);
        }
        for x in min..=left - reserved {
            self.counts[i][color] += x;
            let found = self.distribute(t, districts, pos + 1, left - x, leftover, budget);
            self.counts[i][color] -= x;
            if found? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// The fairness constraints with their color pair existentially chosen:
/// `n_{c'} <= n_c <= n_{c'} + ell` and `n_{c'}` at least every other count.
fn fair(counts: &[usize], ell: usize) -> bool {
    if counts.len() == 1 {
        return counts[0] <= ell;
    }
    (0..counts.len()).any(|c| {
        (0..counts.len()).filter(|&c2| c2 != c).any(|c2| {
            counts[c2] <= counts[c]
                && counts[c] <= counts[c2] + ell
                && (0..counts.len()).all(|o| o == c || counts[o] <= counts[c2])
        })
    })
}

/// Decision via per-type counts instead of a matching. The count system is
/// solved by bounded exhaustive search.
pub fn solve_vc_colors(instance: &Instance, cover: &[usize], budget: &mut Budget) -> Result<Outcome, SolveError> {
    let graph = instance.graph();
    if !is_vertex_cover(graph, cover) {
        return not_applicable("not a vertex cover");
    }
    let mut cover = cover.to_vec();
    cover.sort_unstable();
    cover.dedup();
    let types = type_classes(graph, &cover);
    let k = instance.k();
    let ell = instance.ell();
    let before = budget.spent();
    for k_prime in k_prime_range(cover.len(), k, ell) {
        // Singleton districts have margin one.
        if k_prime < k && ell == 0 {
            continue;
        }
        let flow = for_each_partition(cover.len(), k_prime, |rgs| {
            let blocks = blocks_of(rgs, &cover);
            let mut owner = vec![usize::MAX; graph.num_vertices()];
            for (i, block) in blocks.iter().enumerate() {
                for &v in block {
                    owner[v] = i;
                }
            }
            let eligible: Vec<Vec<usize>> = types
                .iter()
                .map(|ty| {
                    let mut ds: Vec<usize> = ty.neighborhood.iter().map(|&w| owner[w]).collect();
                    ds.sort_unstable();
                    ds.dedup();
                    ds
                })
                .collect();
            let options: Vec<Vec<Vec<usize>>> = blocks
                .iter()
                .map(|block| type_set_options(graph, block, &types))
                .collect();
            let mut chosen = vec![Vec::new(); blocks.len()];
            let mut uses = vec![0usize; types.len()];
            let result = pick_types(&options, &types, 0, &mut chosen, &mut uses, &mut |chosen| {
                let mut required = vec![vec![false; blocks.len()]; types.len()];
                for (i, set) in chosen.iter().enumerate() {
                    for &t in set {
                        required[t][i] = true;
                    }
                }
                let counts = blocks
                    .iter()
                    .map(|block| {
                        let mut c = vec![0; graph.num_colors()];
                        for &v in block {
                            c[graph.color(v)] += 1;
                        }
                        c
                    })
                    .collect();
                let mut search = TypeSearch {
                    types: &types,
                    eligible: eligible.clone(),
                    required,
                    counts,
                    singles: k - k_prime,
                    ell,
                };
                search.run(0, 0, budget)
            });
            match result {
                Ok(false) => ControlFlow::Continue(()),
                Ok(true) => ControlFlow::Break(Ok(())),
                Err(e) => ControlFlow::Break(Err(e)),
            }
        });
        if let ControlFlow::Break(result) = flow {
            result?;
            return Ok(Outcome::yes(None, budget.spent() - before));
        }
    }
    Ok(Outcome::no(budget.spent() - before))
}

/// Type sets of size below `|S_i|` whose representatives connect `S_i`.
fn type_set_options(graph: &ColoredGraph, block: &[usize], types: &[TypeClass]) -> Vec<Vec<usize>> {
    let comps = connected_components(graph, block).expect("cover vertices in range");
    if comps.len() == 1 {
        return vec![Vec::new()];
    }
    let mut comp_of = vec![usize::MAX; graph.num_vertices()];
    for (c, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = c;
        }
    }
    let candidates: Vec<usize> = (0..types.len())
        .filter(|&t| {
            let mut touched: Vec<usize> = types[t]
                .neighborhood
                .iter()
                .map(|&w| comp_of[w])
                .filter(|&c| c != usize::MAX)
                .collect();
            touched.sort_unstable();
            touched.dedup();
            touched.len() >= 2
        })
        .collect();
    let mut out = Vec::new();
    for size in 1..=(comps.len() - 1).min(candidates.len()) {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let set: Vec<usize> = combo.iter().map(|&i| candidates[i]).collect();
            let mut members = block.to_vec();
            members.extend(set.iter().map(|&t| types[t].members[0]));
            if is_connected_subset(graph, &members) {
                out.push(set);
            }
            if !advance(&mut combo, candidates.len()) {
                break;
            }
        }
    }
    out
}

fn pick_types(
    options: &[Vec<Vec<usize>>],
    types: &[TypeClass],
    i: usize,
    chosen: &mut Vec<Vec<usize>>,
    uses: &mut [usize],
    visit: &mut impl FnMut(&[Vec<usize>]) -> Result<bool, SolveError>,
) -> Result<bool, SolveError> {
    if i == options.len() {
        return visit(chosen);
    }
    for option in &options[i] {
        if option.iter().any(|&t| uses[t] >= types[t].members.len()) {
            continue;
        }
        for &t in option {
            uses[t] += 1;
        }
        chosen[i] = option.clone();
        let found = pick_types(options, types, i + 1, chosen, uses, visit);
        for &t in option {
            uses[t] -= 1;
        }
        if found? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(colors: Vec<usize>, num_colors: usize, edges: &[(usize, usize)], k: usize, ell: usize) -> Instance {
        Instance::new(ColoredGraph::new(num_colors, colors, edges).unwrap(), k, ell).unwrap()
    }

    #[test]
    fn vc_examples() {
        let p4 = inst(vec![0, 1, 1, 0], 2, &[(0, 1), (1, 2), (2, 3)], 2, 0);
        assert!(solve_vc(&p4, &[1, 2], &mut Budget::default()).unwrap().feasible);
        let claw = inst(vec![0; 4], 1, &[(0, 1), (0, 2), (0, 3)], 2, 2);
        assert!(!solve_vc(&claw, &[0], &mut Budget::default()).unwrap().feasible);
        let edges: Vec<_> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        let k6 = inst(vec![0, 0, 0, 1, 1, 1], 2, &edges, 3, 0);
        assert!(solve_vc(&k6, &[0, 1, 2, 3, 4], &mut Budget::default()).unwrap().feasible);
        assert!(!solve_vc(&k6.with_k(4).unwrap(), &[0, 1, 2, 3, 4], &mut Budget::default()).unwrap().feasible);
    }

    #[test]
    fn edgeless_graphs() {
        let i = inst(vec![0, 1], 2, &[], 2, 1);
        assert!(solve_vc(&i, &[], &mut Budget::default()).unwrap().feasible);
        let zero = inst(vec![0, 1], 2, &[], 2, 0);
        assert!(!solve_vc(&zero, &[], &mut Budget::default()).unwrap().feasible);
    }

    #[test]
    fn vc_colors_examples() {
        let p2 = inst(vec![0, 1], 2, &[(0, 1)], 1, 0);
        assert!(solve_vc_colors(&p2, &[0], &mut Budget::default()).unwrap().feasible);
        let mono = inst(vec![0, 0], 1, &[(0, 1)], 2, 0);
        assert!(!solve_vc_colors(&mono, &[0], &mut Budget::default()).unwrap().feasible);
        let edges: Vec<_> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        let k6 = inst(vec![0, 0, 0, 1, 1, 1], 2, &edges, 3, 0);
        assert!(solve_vc_colors(&k6, &[0, 1, 2, 3, 4], &mut Budget::default()).unwrap().feasible);
        let p3 = inst(vec![0, 1, 0], 2, &[(0, 1), (1, 2)], 1, 1);
        assert!(solve_vc_colors(&p3, &[0, 2], &mut Budget::default()).unwrap().feasible);
    }

    #[test]
    fn types_group_by_color_and_neighborhood() {
        let claw = ColoredGraph::new(2, vec![0, 1, 1, 0], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let types = type_classes(&claw, &[0]);
        assert_eq!(types.len(), 2);
        assert_eq!(types[1].members, vec![1, 2]);
    }

    #[test]
    fn invalid_cover() {
        let p3 = inst(vec![0, 1, 0], 2, &[(0, 1), (1, 2)], 1, 1);
        assert!(solve_vc(&p3, &[0], &mut Budget::default()).is_err());
    }

    #[test]
    fn connectors_join_cover_parts() {
        // Cover {0, 2} of path 0-1-2 needs vertex 1 as connector for k=1.
        let p3 = inst(vec![0, 1, 0], 2, &[(0, 1), (1, 2)], 1, 1);
        assert!(solve_vc(&p3, &[0, 2], &mut Budget::default()).unwrap().feasible);
    }
}
