//! Tree decompositions, their validation, and conversion to nice form.

use std::collections::HashSet;
use std::fmt;

use super::ClassifyError;
use crate::graph::ColoredGraph;

/// A rooted tree decomposition: one bag per node, `parent[root] = None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub parent: Vec<Option<usize>>,
}

/// Which part of the definition a decomposition breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TdAxiom {
    /// Node structure is not a single rooted tree.
    Shape(String),
    /// Axiom 1: every vertex lies in some bag.
    VertexCoverage { vertex: usize },
    /// Axiom 2: both endpoints of every edge share a bag.
    EdgeCoverage { u: usize, v: usize },
    /// Axiom 3: the bags containing a vertex form a subtree.
    Connectivity { vertex: usize },
}

impl fmt::Display for TdAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdAxiom::Shape(msg) => write!(f, "not a rooted tree: {msg}"),
            TdAxiom::VertexCoverage { vertex } => {
                write!(f, "axiom 1 violated: vertex {vertex} is in no bag")
            }
            TdAxiom::EdgeCoverage { u, v } => {
                write!(f, "axiom 2 violated: edge {{{u}, {v}}} is in no bag")
            }
            TdAxiom::Connectivity { vertex } => write!(
                f,
                "axiom 3 violated: bags containing vertex {vertex} are not connected"
            ),
        }
    }
}

impl TreeDecomposition {
    /// Sorts and deduplicates every bag.
    pub fn new(mut bags: Vec<Vec<usize>>, parent: Vec<Option<usize>>) -> Self {
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
        }
        Self { bags, parent }
    }

    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    pub fn num_nodes(&self) -> usize {
        self.bags.len()
    }

    pub fn root(&self) -> Option<usize> {
        self.parent.iter().position(Option::is_none)
    }

    fn children(&self) -> Vec<Vec<usize>> {
        let mut children = vec![Vec::new(); self.bags.len()];
        for (x, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                children[p].push(x);
            }
        }
        children
    }

    /// Checks the tree shape and the three axioms, in that order.
    pub fn validate(&self, graph: &ColoredGraph) -> Result<(), TdAxiom> {
        let t = self.bags.len();
        let n = graph.num_vertices();
        if self.parent.len() != t {
            return Err(TdAxiom::Shape(format!(
                "{} bags but {} parent entries",
                t,
                self.parent.len()
            )));
        }
        let roots: Vec<usize> = (0..t).filter(|&x| self.parent[x].is_none()).collect();
        if roots.len() != 1 {
            return Err(TdAxiom::Shape(format!("{} roots", roots.len())));
        }
        if let Some(x) = (0..t).find(|&x| self.parent[x].is_some_and(|p| p >= t || p == x)) {
            return Err(TdAxiom::Shape(format!("node {x} has an invalid parent")));
        }
        // Every node must reach the root.
        let mut depth = vec![usize::MAX; t];
        depth[roots[0]] = 0;
        for start in 0..t {
            let mut chain = Vec::new();
            let mut x = start;
            while depth[x] == usize::MAX {
                if chain.len() > t {
                    return Err(TdAxiom::Shape("parent pointers form a cycle".into()));
                }
                chain.push(x);
                x = self.parent[x].expect("non-root");
            }
            let mut d = depth[x];
            for &y in chain.iter().rev() {
                d += 1;
                depth[y] = d;
            }
        }
        for bag in &self.bags {
            if let Some(&v) = bag.iter().find(|&&v| v >= n) {
                return Err(TdAxiom::Shape(format!("bag vertex {v} out of range")));
            }
        }

        let mut containing = vec![0usize; n];
        let mut tops = vec![0usize; n];
        for (x, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                containing[v] += 1;
                let parent_has = self.parent[x].is_some_and(|p| self.bags[p].binary_search(&v).is_ok());
                if !parent_has {
                    tops[v] += 1;
                }
            }
        }
        if let Some(vertex) = (0..n).find(|&v| containing[v] == 0) {
            return Err(TdAxiom::VertexCoverage { vertex });
        }
        for (u, v) in graph.edges() {
            let shared = self
                .bags
                .iter()
                .any(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok());
            if !shared {
                return Err(TdAxiom::EdgeCoverage { u, v });
            }
        }
        if let Some(vertex) = (0..n).find(|&v| tops[v] != 1) {
            return Err(TdAxiom::Connectivity { vertex });
        }
        Ok(())
    }
}

/// Width-one decomposition of a forest: bag `{v, parent(v)}` per non-root
/// vertex, `{r}` per component root, component roots chained together.
pub fn forest_decomposition(graph: &ColoredGraph) -> Result<TreeDecomposition, ClassifyError> {
    let n = graph.num_vertices();
    if graph.num_edges() + graph.components().len() != n {
        return Err(ClassifyError::NotAForest);
    }
    let mut bags = vec![Vec::new(); n];
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut prev_root: Option<usize> = None;
    for r in 0..n {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        bags[r] = vec![r];
        parent[r] = prev_root;
        prev_root = Some(r);
        let mut queue = std::collections::VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            for &w in graph.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    bags[w] = vec![u.min(w), u.max(w)];
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
    }
    // Root the chain at the first component root.
    if let Some(last) = prev_root {
        let mut roots = Vec::new();
        let mut x = Some(last);
        while let Some(r) = x {
            roots.push(r);
            x = parent[r];
        }
        roots.reverse();
        parent[roots[0]] = None;
        for w in roots.windows(2) {
            parent[w[1]] = Some(w[0]);
        }
    }
    Ok(TreeDecomposition { bags, parent })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NiceKind {
    Leaf(usize),
    IntroduceVertex(usize),
    IntroduceEdge(usize, usize),
    Forget(usize),
    Join,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NiceKind,
    /// Sorted bag.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// Nodes are stored children-first; the root is the last node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub width: usize,
}

impl NiceTreeDecomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Structural self-check: node kinds agree with bags, every edge is
    /// introduced exactly once, and the decomposition axioms hold.
    pub fn check(&self, graph: &ColoredGraph) -> Result<(), String> {
        let mut parent = vec![None; self.nodes.len()];
        let mut introduced = HashSet::new();
        for (x, node) in self.nodes.iter().enumerate() {
            for &c in &node.children {
                if c >= x || parent[c].is_some() {
                    return Err(format!("node {x}: bad child {c}"));
                }
                parent[c] = Some(x);
            }
            let child_bag = |i: usize| &self.nodes[node.children[i]].bag;
            let ok = match node.kind {
                NiceKind::Leaf(v) => node.children.is_empty() && node.bag == [v],
                NiceKind::IntroduceVertex(v) => {
                    node.children.len() == 1
                        && !child_bag(0).contains(&v)
                        && with(child_bag(0), v) == node.bag
                }
                NiceKind::Forget(v) => {
                    node.children.len() == 1
                        && child_bag(0).contains(&v)
                        && without(child_bag(0), v) == node.bag
                }
                NiceKind::IntroduceEdge(u, v) => {
                    node.children.len() == 1
                        && *child_bag(0) == node.bag
                        && node.bag.contains(&u)
                        && node.bag.contains(&v)
                        && graph.has_edge(u, v)
                        && introduced.insert((u.min(v), u.max(v)))
                }
                NiceKind::Join => {
                    node.children.len() == 2
                        && *child_bag(0) == node.bag
                        && *child_bag(1) == node.bag
                }
            };
            if !ok {
                return Err(format!("node {x} ({:?}) is malformed", node.kind));
            }
            if node.bag.len() > self.width + 1 {
                return Err(format!("node {x} exceeds width {}", self.width));
            }
        }
        if introduced.len() != graph.num_edges() {
            return Err(format!(
                "{} of {} edges introduced",
                introduced.len(),
                graph.num_edges()
            ));
        }
        let td = TreeDecomposition {
            bags: self.nodes.iter().map(|n| n.bag.clone()).collect(),
            parent,
        };
        td.validate(graph).map_err(|e| e.to_string())
    }
}

fn with(bag: &[usize], v: usize) -> Vec<usize> {
    let mut out = bag.to_vec();
    let pos = out.binary_search(&v).unwrap_or_else(|p| p);
    out.insert(pos, v);
    out
}

fn without(bag: &[usize], v: usize) -> Vec<usize> {
    bag.iter().copied().filter(|&w| w != v).collect()
}

/// Nice tree decomposition of `graph`, from `td` when given and otherwise
/// from [`forest_decomposition`].
pub fn nice_tree_decomposition(
    graph: &ColoredGraph,
    td: Option<&TreeDecomposition>,
) -> Result<NiceTreeDecomposition, ClassifyError> {
    let owned;
    let td = match td {
        Some(td) => {
            let td = TreeDecomposition::new(td.bags.clone(), td.parent.clone());
            td.validate(graph)
                .map_err(ClassifyError::InvalidDecomposition)?;
            owned = td;
            &owned
        }
        None => {
            owned = forest_decomposition(graph)?;
            &owned
        }
    };
    if graph.num_vertices() == 0 {
        return Err(ClassifyError::InvalidDecomposition(TdAxiom::Shape(
            "empty graph".into(),
        )));
    }
    Ok(nicify(graph, td))
}

fn nicify(graph: &ColoredGraph, td: &TreeDecomposition) -> NiceTreeDecomposition {
    let root = td.root().expect("validated");
    let children = td.children();

    let mut order = Vec::with_capacity(td.num_nodes());
    let mut stack = vec![(root, false)];
    while let Some((x, expanded)) = stack.pop() {
        if expanded {
            order.push(x);
        } else {
            stack.push((x, true));
            stack.extend(children[x].iter().rev().map(|&c| (c, false)));
        }
    }

    let mut nodes: Vec<NiceNode> = Vec::new();
    let push = |nodes: &mut Vec<NiceNode>, kind, bag: Vec<usize>, children: Vec<usize>| {
        nodes.push(NiceNode {
            kind,
            bag,
            children,
        });
        nodes.len() - 1
    };
    let mut top: Vec<Option<usize>> = vec![None; td.num_nodes()];
    let mut introduced = HashSet::new();

    for &x in &order {
        let bag = &td.bags[x];
        let kids: Vec<usize> = children[x].iter().filter_map(|&c| top[c]).collect();
        if kids.is_empty() && bag.is_empty() {
            // Empty leaf bags carry nothing.
            continue;
        }
        let mut cur = if kids.is_empty() {
            let mut cur = push(&mut nodes, NiceKind::Leaf(bag[0]), vec![bag[0]], vec![]);
            for &v in &bag[1..] {
                let b = with(&nodes[cur].bag, v);
                cur = push(&mut nodes, NiceKind::IntroduceVertex(v), b, vec![cur]);
            }
            cur
        } else {
            let mut chains = Vec::with_capacity(kids.len());
            for kid in kids {
                let mut cur = kid;
                let below = nodes[cur].bag.clone();
                for &v in below.iter().filter(|v| bag.binary_search(v).is_err()) {
                    let b = without(&nodes[cur].bag, v);
                    cur = push(&mut nodes, NiceKind::Forget(v), b, vec![cur]);
                }
                for &v in bag.iter().filter(|v| below.binary_search(v).is_err()) {
                    let b = with(&nodes[cur].bag, v);
                    cur = push(&mut nodes, NiceKind::IntroduceVertex(v), b, vec![cur]);
                }
                chains.push(cur);
            }
            let mut cur = chains[0];
            for &other in &chains[1..] {
                cur = push(&mut nodes, NiceKind::Join, bag.clone(), vec![cur, other]);
            }
            cur
        };
        for (i, &u) in bag.iter().enumerate() {
            for &v in &bag[i + 1..] {
                if graph.has_edge(u, v) && introduced.insert((u, v)) {
                    cur = push(
                        &mut nodes,
                        NiceKind::IntroduceEdge(u, v),
                        bag.clone(),
                        vec![cur],
                    );
                }
            }
        }
        top[x] = Some(cur);
    }
    let width = nodes
        .iter()
        .map(|n| n.bag.len())
        .max()
        .unwrap_or(1)
        .saturating_sub(1);
    NiceTreeDecomposition { nodes, width }
}
