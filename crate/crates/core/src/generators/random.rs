use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::GenerateError;
use crate::classify::{classify_graph, minimum_vertex_cover, ClassTag};
use crate::districting::Instance;
use crate::graph::ColoredGraph;

const ATTEMPTS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GenClass {
    Path,
    Cycle,
    Star,
    Caterpillar,
    /// A tree that is not a caterpillar.
    Tree,
    /// Connected with exactly one cycle.
    Unicyclic,
    /// Vertex cover number at most the given bound.
    BoundedVc(usize),
    /// G(n, p).
    General(f64),
}

impl fmt::Display for GenClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenClass::Path => write!(f, "path"),
            GenClass::Cycle => write!(f, "cycle"),
            GenClass::Star => write!(f, "star"),
            GenClass::Caterpillar => write!(f, "caterpillar"),
            GenClass::Tree => write!(f, "tree"),
            GenClass::Unicyclic => write!(f, "unicyclic"),
            GenClass::BoundedVc(b) => write!(f, "bounded_vc:{b}"),
            GenClass::General(p) => write!(f, "general:{p}"),
        }
    }
}

impl FromStr for GenClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, arg) = match s.split_once(':') {
            Some((name, arg)) => (name, Some(arg)),
            None => (s, None),
        };
        let class = match (name, arg) {
            ("path", None) => GenClass::Path,
            ("cycle", None) => GenClass::Cycle,
            ("star", None) => GenClass::Star,
            ("caterpillar", None) => GenClass::Caterpillar,
            ("tree", None) => GenClass::Tree,
            ("unicyclic", None) => GenClass::Unicyclic,
            ("bounded_vc", Some(b)) => GenClass::BoundedVc(b.parse().map_err(|_| format!("bad bound `{b}`"))?),
            ("general", Some(p)) => {
                let p: f64 = p.parse().map_err(|_| format!("bad edge probability `{p}`"))?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(format!("edge probability {p} outside [0, 1]"));
                }
                GenClass::General(p)
            }
            _ => return Err(format!("unknown class `{s}`")),
        };
        Ok(class)
    }
}

impl GenClass {
    /// Whether `graph` is in the class.
    pub fn contains(&self, graph: &ColoredGraph) -> bool {
        let report = classify_graph(graph);
        match self {
            GenClass::Path => report.class_tag == ClassTag::Path,
            GenClass::Cycle => report.class_tag == ClassTag::Cycle,
            GenClass::Star => report.class_tag == ClassTag::Star,
            GenClass::Caterpillar => report.class_tag == ClassTag::Caterpillar,
            GenClass::Tree => report.class_tag == ClassTag::Tree,
            GenClass::Unicyclic => report.is_connected && report.fen == 1,
            GenClass::BoundedVc(b) => minimum_vertex_cover(graph, *b).is_ok_and(|c| c.len() <= *b),
            GenClass::General(_) => true,
        }
    }

    fn min_vertices(&self) -> usize {
        match self {
            GenClass::Path | GenClass::BoundedVc(_) | GenClass::General(_) => 1,
            GenClass::Cycle | GenClass::Unicyclic => 3,
            GenClass::Star => 4,
            GenClass::Caterpillar => 5,
            GenClass::Tree => 7,
        }
    }

    fn edges(&self, n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
        match *self {
            GenClass::Path => (1..n).map(|v| (v - 1, v)).collect(),
            GenClass::Cycle => (0..n).map(|v| (v, (v + 1) % n)).collect(),
            GenClass::Star => (1..n).map(|v| (0, v)).collect(),
            GenClass::Caterpillar => {
                let spine = rng.gen_range(2..=n - 2);
                let mut edges: Vec<_> = (1..spine).map(|v| (v - 1, v)).collect();
                edges.extend((spine..n).map(|v| (rng.gen_range(0..spine), v)));
                edges
            }
            GenClass::Tree => (1..n).map(|v| (rng.gen_range(0..v), v)).collect(),
            GenClass::Unicyclic => {
                let len = rng.gen_range(3..=n);
                let mut edges: Vec<_> = (0..len).map(|v| (v, (v + 1) % len)).collect();
                edges.extend((len..n).map(|v| (rng.gen_range(0..v), v)));
                edges
            }
            GenClass::BoundedVc(b) => {
                let b = b.min(n);
                let mut edges = Vec::new();
                for u in 0..b {
                    for v in u + 1..n {
                        if rng.gen_bool(0.5) {
                            edges.push((u, v));
                        }
                    }
                }
                edges
            }
            GenClass::General(p) => {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                edges
            }
        }
    }
}

/// Deterministic in `seed`. Vertex labels are shuffled so that the class
/// structure does not follow the numbering.
pub fn gen_random_instance(
    class: GenClass,
    n: usize,
    num_colors: usize,
    k: usize,
    ell: usize,
    seed: u64,
) -> Result<Instance, GenerateError> {
    if n < class.min_vertices() {
        return Err(GenerateError::Infeasible(format!(
            "class {class} needs at least {} vertices, got {n}",
            class.min_vertices()
        )));
    }
    if num_colors == 0 {
        return Err(GenerateError::Infeasible("at least one color is needed".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let mut label: Vec<usize> = (0..n).collect();
        label.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> = class
            .edges(n, &mut rng)
            .into_iter()
            .map(|(u, v)| (label[u], label[v]))
            .collect();
        let colors = (0..n).map(|_| rng.gen_range(0..num_colors)).collect();
        let graph = ColoredGraph::new(num_colors, colors, &edges)?;
        if class.contains(&graph) {
            return Ok(Instance::new(graph, k, ell)?);
        }
    }
    Err(GenerateError::Infeasible(format!(
        "no {class} graph on {n} vertices found after {ATTEMPTS} attempts"
    )))
}
