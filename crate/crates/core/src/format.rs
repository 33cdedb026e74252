//! Line-based text formats for instances, solutions and reduction inputs.
//!
//! Instance:
//! ```text
//! p fcd <n> <m> <num_colors> <k> <ell>
//! c <vertex> <color>          (n lines)
//! e <u> <v>                   (m lines, u < v)
//! td <width> <num_nodes>      (optional)
//! b <id> <parent|-1> <v...>   (num_nodes lines)
//! ```
//! Solution: `s fcd <k>`, then `d <id> <v...>` per district. Lines starting
//! with `#` and blank lines are ignored. All ids are 0-based.

use std::fmt::Write as _;

use thiserror::Error;

use crate::classify::TreeDecomposition;
use crate::districting::{Districting, Instance};
use crate::generators::{GridTilingInstance, Nae3SatInstance};
use crate::graph::ColoredGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is not tied to a line.
    pub line: usize,
    pub reason: String,
}

fn err<T>(line: usize, reason: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        reason: reason.into(),
    })
}

/// Non-comment lines as (line number, tokens).
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        (!line.is_empty() && !line.starts_with('#')).then(|| (i + 1, line.split_whitespace().collect()))
    })
}

fn num<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError {
            line,
            reason: format!("bad {what} `{token}`"),
        })
}

fn arity(line: usize, tokens: &[&str], expected: usize) -> Result<(), ParseError> {
    if tokens.len() != expected {
        return err(
            line,
            format!("`{}` expects {} fields, found {}", tokens[0], expected - 1, tokens.len() - 1),
        );
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedInstance {
    pub instance: Instance,
    pub td: Option<TreeDecomposition>,
}

pub fn parse_instance(text: &str) -> Result<ParsedInstance, ParseError> {
    let mut header: Option<(usize, usize, usize, usize, usize)> = None;
    let mut colors: Vec<Option<usize>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen_edges = std::collections::HashSet::new();
    let mut td_header: Option<(usize, usize, usize)> = None;
    let mut nodes: Vec<Option<(Option<usize>, Vec<usize>)>> = Vec::new();

    for (ln, tokens) in lines(text) {
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return err(ln, "second header");
                }
                arity(ln, &tokens, 7)?;
                if tokens[1] != "fcd" {
                    return err(ln, format!("unknown format `{}`", tokens[1]));
                }
                let n = num(ln, tokens[2], "vertex count")?;
                let m = num(ln, tokens[3], "edge count")?;
                let c = num(ln, tokens[4], "color count")?;
                let k = num(ln, tokens[5], "district count")?;
                let ell = num(ln, tokens[6], "margin")?;
                colors = vec![None; n];
                header = Some((n, m, c, k, ell));
            }
            tag => {
                let Some((n, _, num_colors, _, _)) = header else {
                    return err(ln, format!("`{tag}` line before the header"));
                };
                match tag {
                    "c" => {
                        arity(ln, &tokens, 3)?;
                        let v: usize = num(ln, tokens[1], "vertex")?;
                        let color: usize = num(ln, tokens[2], "color")?;
                        if v >= n {
                            return err(ln, format!("vertex {v} out of range (n = {n})"));
                        }
                        if color >= num_colors {
                            return err(ln, format!("color {color} out of range ({num_colors} colors)"));
                        }
                        if colors[v].replace(color).is_some() {
                            return err(ln, format!("vertex {v} colored twice"));
                        }
                    }
                    "e" => {
                        arity(ln, &tokens, 3)?;
                        let u: usize = num(ln, tokens[1], "vertex")?;
                        let v: usize = num(ln, tokens[2], "vertex")?;
                        if u >= v {
                            return err(ln, format!("edge {u} {v} must list the smaller endpoint first"));
                        }
                        if v >= n {
                            return err(ln, format!("vertex {v} out of range (n = {n})"));
                        }
                        if !seen_edges.insert((u, v)) {
                            return err(ln, format!("duplicate edge {u} {v}"));
                        }
                        edges.push((u, v));
                    }
                    "td" => {
                        if td_header.is_some() {
                            return err(ln, "second decomposition block");
                        }
                        arity(ln, &tokens, 3)?;
                        let width = num(ln, tokens[1], "width")?;
                        let count = num(ln, tokens[2], "node count")?;
                        nodes = vec![None; count];
                        td_header = Some((width, count, ln));
                    }
                    "b" => {
                        let Some((_, count, _)) = td_header else {
                            return err(ln, "bag before the `td` line");
                        };
                        if tokens.len() < 3 {
                            return err(ln, "`b` needs an id and a parent");
                        }
                        let id: usize = num(ln, tokens[1], "node id")?;
                        if id >= count {
                            return err(ln, format!("node {id} out of range ({count} nodes)"));
                        }
                        let parent = match tokens[2] {
                            "-1" => None,
                            p => {
                                let p: usize = num(ln, p, "parent")?;
                                if p >= count {
                                    return err(ln, format!("parent {p} out of range ({count} nodes)"));
                                }
                                Some(p)
                            }
                        };
                        let mut bag = Vec::with_capacity(tokens.len() - 3);
                        for t in &tokens[3..] {
                            let v: usize = num(ln, t, "vertex")?;
                            if v >= n {
                                return err(ln, format!("vertex {v} out of range (n = {n})"));
                            }
                            bag.push(v);
                        }
                        if nodes[id].replace((parent, bag)).is_some() {
                            return err(ln, format!("node {id} given twice"));
                        }
                    }
                    other => return err(ln, format!("unknown line type `{other}`")),
                }
            }
        }
    }

    let Some((_, m, num_colors, k, ell)) = header else {
        return err(0, "missing `p fcd` header");
    };
    if let Some(v) = colors.iter().position(Option::is_none) {
        return err(0, format!("vertex {v} has no color"));
    }
    if edges.len() != m {
        return err(0, format!("header promises {m} edges, found {}", edges.len()));
    }
    let colors = colors.into_iter().map(Option::unwrap).collect();
    let graph = ColoredGraph::new(num_colors, colors, &edges).map_err(|e| ParseError {
        line: 0,
        reason: e.to_string(),
    })?;
    let instance = Instance::new(graph, k, ell).map_err(|e| ParseError {
        line: 0,
        reason: e.to_string(),
    })?;
    let td = match td_header {
        None => None,
        Some((width, _, ln)) => {
            if let Some(id) = nodes.iter().position(Option::is_none) {
                return err(ln, format!("decomposition node {id} missing"));
            }
            let (parent, bags) = nodes.into_iter().map(Option::unwrap).unzip();
            let td = TreeDecomposition::new(bags, parent);
            td.validate(instance.graph()).map_err(|e| ParseError {
                line: ln,
                reason: format!("invalid tree decomposition: {e}"),
            })?;
            if td.width() != width {
                return err(ln, format!("declared width {width}, bags give {}", td.width()));
            }
            Some(td)
        }
    };
    Ok(ParsedInstance { instance, td })
}

/// Canonical text: colors by vertex, edges sorted.
pub fn write_instance(instance: &Instance, td: Option<&TreeDecomposition>) -> String {
    let g = instance.graph();
    let mut out = String::new();
    let mut edges = g.edges();
    edges.sort_unstable();
    let _ = writeln!(
        out,
        "p fcd {} {} {} {} {}",
        g.num_vertices(),
        edges.len(),
        g.num_colors(),
        instance.k(),
        instance.ell()
    );
    for v in 0..g.num_vertices() {
        let _ = writeln!(out, "c {v} {}", g.color(v));
    }
    for (u, v) in edges {
        let _ = writeln!(out, "e {u} {v}");
    }
    if let Some(td) = td {
        let _ = writeln!(out, "td {} {}", td.width(), td.num_nodes());
        for (id, (bag, parent)) in td.bags.iter().zip(&td.parent).enumerate() {
            let parent = parent.map_or("-1".to_string(), |p| p.to_string());
            let _ = write!(out, "b {id} {parent}");
            for v in bag {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
    }
    out
}

/// Districts may be listed in any order but each id exactly once.
pub fn parse_solution(text: &str, n: usize) -> Result<Districting, ParseError> {
    let mut k = None;
    let mut districts: Vec<Option<Vec<usize>>> = Vec::new();
    let mut owner = vec![None; n];
    for (ln, tokens) in lines(text) {
        match tokens[0] {
            "s" => {
                if k.is_some() {
                    return err(ln, "second header");
                }
                arity(ln, &tokens, 3)?;
                if tokens[1] != "fcd" {
                    return err(ln, format!("unknown format `{}`", tokens[1]));
                }
                let count: usize = num(ln, tokens[2], "district count")?;
                districts = vec![None; count];
                k = Some(count);
            }
            "d" => {
                let Some(count) = k else {
                    return err(ln, "district before the `s fcd` header");
                };
                if tokens.len() < 2 {
                    return err(ln, "`d` needs a district id");
                }
                let id: usize = num(ln, tokens[1], "district id")?;
                if id >= count {
                    return err(ln, format!("district {id} out of range (k = {count})"));
                }
                let mut members = Vec::new();
                for t in &tokens[2..] {
                    let v: usize = num(ln, t, "vertex")?;
                    if v >= n {
                        return err(ln, format!("vertex {v} out of range (n = {n})"));
                    }
                    if let Some(other) = owner[v].replace(id) {
                        return err(ln, format!("vertex {v} already in district {other}"));
                    }
                    members.push(v);
                }
                if districts[id].replace(members).is_some() {
                    return err(ln, format!("district {id} given twice"));
                }
            }
            other => return err(ln, format!("unknown line type `{other}`")),
        }
    }
    if k.is_none() {
        return err(0, "missing `s fcd` header");
    }
    if let Some(v) = owner.iter().position(Option::is_none) {
        return err(0, format!("vertex {v} is in no district"));
    }
    // Districts never listed are empty.
    let districts: Vec<Vec<usize>> = districts.into_iter().map(Option::unwrap_or_default).collect();
    Districting::from_districts(n, &districts).map_err(|e| ParseError {
        line: 0,
        reason: e.to_string(),
    })
}

/// Canonical text: members sorted, districts in id order.
pub fn write_solution(d: &Districting) -> String {
    let mut out = format!("s fcd {}\n", d.k());
    for (id, members) in d.districts().iter().enumerate() {
        let _ = write!(out, "d {id}");
        for v in members {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

/// Grid Tiling parameters: `gt <t> <m> <n>`, one `s <i> <j> <x1> <y1> ...`
/// per tile set (1-based `i`, `j`), and optionally `sel <i> <j> <x> <y>`
/// naming the chosen tile of each set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridTilingInput {
    pub instance: GridTilingInstance,
    /// Index into each tile set, row-major, when a full selection is given.
    pub selection: Option<Vec<usize>>,
}

pub fn parse_grid_tiling(text: &str) -> Result<GridTilingInput, ParseError> {
    let mut dims = None;
    let mut sets: Vec<Option<Vec<(usize, usize)>>> = Vec::new();
    let mut picks: Vec<Option<(usize, usize)>> = Vec::new();
    let mut any_pick = false;
    for (ln, tokens) in lines(text) {
        if tokens[0] == "gt" {
            if dims.is_some() {
                return err(ln, "second header");
            }
            arity(ln, &tokens, 4)?;
            let t: usize = num(ln, tokens[1], "t")?;
            let m: usize = num(ln, tokens[2], "m")?;
            let n: usize = num(ln, tokens[3], "n")?;
            sets = vec![None; t * t];
            picks = vec![None; t * t];
            dims = Some((t, m, n));
            continue;
        }
        let Some((t, _, _)) = dims else {
            return err(ln, format!("`{}` line before the `gt` header", tokens[0]));
        };
        if tokens.len() < 3 {
            return err(ln, "missing cell indices");
        }
        let i: usize = num(ln, tokens[1], "row")?;
        let j: usize = num(ln, tokens[2], "column")?;
        if !(1..=t).contains(&i) || !(1..=t).contains(&j) {
            return err(ln, format!("cell ({i}, {j}) outside 1..={t}"));
        }
        let cell = (i - 1) * t + (j - 1);
        let values: Vec<usize> = tokens[3..]
            .iter()
            .map(|s| num(ln, s, "entry"))
            .collect::<Result<_, _>>()?;
        match tokens[0] {
            "s" => {
                if values.len() % 2 == 1 {
                    return err(ln, "odd number of entries");
                }
                let pairs = values.chunks(2).map(|p| (p[0], p[1])).collect();
                if sets[cell].replace(pairs).is_some() {
                    return err(ln, format!("cell ({i}, {j}) given twice"));
                }
            }
            "sel" => {
                if values.len() != 2 {
                    return err(ln, "`sel` expects one pair");
                }
                if picks[cell].replace((values[0], values[1])).is_some() {
                    return err(ln, format!("cell ({i}, {j}) selected twice"));
                }
                any_pick = true;
            }
            other => return err(ln, format!("unknown line type `{other}`")),
        }
    }
    let Some((t, m, n)) = dims else {
        return err(0, "missing `gt` header");
    };
    if let Some(cell) = sets.iter().position(Option::is_none) {
        return err(0, format!("tile set ({}, {}) missing", cell / t + 1, cell % t + 1));
    }
    let tiles: Vec<Vec<(usize, usize)>> = sets.into_iter().map(Option::unwrap).collect();
    let selection = if any_pick {
        let mut selection = Vec::with_capacity(t * t);
        for (cell, pick) in picks.iter().enumerate() {
            let (i, j) = (cell / t + 1, cell % t + 1);
            let Some(pick) = pick else {
                return err(0, format!("no tile selected for cell ({i}, {j})"));
            };
            let Some(index) = tiles[cell].iter().position(|p| p == pick) else {
                return err(0, format!("selected tile {pick:?} not in cell ({i}, {j})"));
            };
            selection.push(index);
        }
        Some(selection)
    } else {
        None
    };
    Ok(GridTilingInput {
        instance: GridTilingInstance { t, m, n, tiles },
        selection,
    })
}

/// NAE-3-SAT parameters: `nae <vars> <clauses>`, one `cl <a> <b> <c>` per
/// clause with signed 1-based literals, and optionally `asg <0|1>...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaeInput {
    pub instance: Nae3SatInstance,
    pub assignment: Option<Vec<bool>>,
}

pub fn parse_nae(text: &str) -> Result<NaeInput, ParseError> {
    let mut dims = None;
    let mut clauses = Vec::new();
    let mut assignment = None;
    for (ln, tokens) in lines(text) {
        match tokens[0] {
            "nae" => {
                if dims.is_some() {
                    return err(ln, "second header");
                }
                arity(ln, &tokens, 3)?;
                let vars: usize = num(ln, tokens[1], "variable count")?;
                let count: usize = num(ln, tokens[2], "clause count")?;
                dims = Some((vars, count));
            }
            "cl" => {
                if dims.is_none() {
                    return err(ln, "clause before the `nae` header");
                }
                arity(ln, &tokens, 4)?;
                let mut clause = [0i64; 3];
                for (slot, t) in clause.iter_mut().zip(&tokens[1..]) {
                    *slot = num(ln, t, "literal")?;
                }
                clauses.push(clause);
            }
            "asg" => {
                let Some((vars, _)) = dims else {
                    return err(ln, "assignment before the `nae` header");
                };
                arity(ln, &tokens, vars + 1)?;
                let values = tokens[1..]
                    .iter()
                    .map(|t| match *t {
                        "0" => Ok(false),
                        "1" => Ok(true),
                        other => err(ln, format!("truth value must be 0 or 1, got `{other}`")),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if assignment.replace(values).is_some() {
                    return err(ln, "second assignment");
                }
            }
            other => return err(ln, format!("unknown line type `{other}`")),
        }
    }
    let Some((num_vars, count)) = dims else {
        return err(0, "missing `nae` header");
    };
    if clauses.len() != count {
        return err(0, format!("header promises {count} clauses, found {}", clauses.len()));
    }
    Ok(NaeInput {
        instance: Nae3SatInstance { num_vars, clauses },
        assignment,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const P4: &str = "# a path\np fcd 4 3 2 2 0\nc 0 0\nc 1 1\nc 2 0\nc 3 1\ne 0 1\ne 1 2\ne 2 3\n";

    #[test]
    fn p4_round_trip() {
        let parsed = parse_instance(P4).unwrap();
        assert_eq!(parsed.instance.n(), 4);
        assert_eq!(parsed.instance.graph().num_edges(), 3);
        let text = write_instance(&parsed.instance, None);
        assert_eq!(text, P4.trim_start_matches("# a path\n"));
        assert_eq!(parse_instance(&text).unwrap(), parsed);
    }

    #[test]
    fn errors_name_the_line() {
        let dup = "p fcd 3 2 1 1 0\nc 0 0\nc 1 0\nc 2 0\ne 0 1\ne 0 1\n";
        assert_eq!(parse_instance(dup).unwrap_err().line, 6);
        let color = "p fcd 1 0 2 1 0\nc 0 5\n";
        let e = parse_instance(color).unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.reason.contains("color 5"));
        assert!(parse_instance("p fcd 2 1 1 1 0\nc 0 0\nc 1 0\ne 1 0\n").is_err());
        assert!(parse_instance("p fcd 2 2 1 1 0\nc 0 0\nc 1 0\ne 0 1\n").is_err());
        assert!(parse_instance("p fcd 2 0 1 1 0\nc 0 0\n").is_err());
        assert!(parse_instance("x\n").is_err());
    }

    #[test]
    fn decomposition_block() {
        let text = format!("{P4}td 1 3\nb 0 -1 0 1\nb 1 0 1 2\nb 2 1 2 3\n");
        let parsed = parse_instance(&text).unwrap();
        let td = parsed.td.clone().unwrap();
        assert_eq!(td.width(), 1);
        assert_eq!(write_instance(&parsed.instance, Some(&td)), text.trim_start_matches("# a path\n"));
        let wrong = format!("{P4}td 1 2\nb 0 -1 0 1\nb 1 0 2 3\n");
        assert!(parse_instance(&wrong).is_err());
    }

    #[test]
    fn solutions() {
        let d = parse_solution("s fcd 2\nd 1 2 3\nd 0 0 1\n", 4).unwrap();
        assert_eq!(write_solution(&d), "s fcd 2\nd 0 0 1\nd 1 2 3\n");
        let empty = parse_solution("s fcd 3\nd 0 0 1\nd 1 2 3\n", 4).unwrap();
        assert_eq!(empty.k(), 3);
        assert!(parse_solution("s fcd 2\nd 0 0 1\nd 1 1 2 3\n", 4).is_err());
        assert!(parse_solution("s fcd 2\nd 0 0 1\n", 4).is_err());
    }

    #[test]
    fn reduction_blocks() {
        let gt = "gt 1 2 3\ns 1 1 1 1 1 2 2 1\nsel 1 1 1 2\n";
        let input = parse_grid_tiling(gt).unwrap();
        assert_eq!(input.instance.tiles[0], vec![(1, 1), (1, 2), (2, 1)]);
        assert_eq!(input.selection, Some(vec![1]));
        let nae = "nae 3 1\ncl 1 2 -3\nasg 1 0 0\n";
        let input = parse_nae(nae).unwrap();
        assert_eq!(input.instance.clauses, vec![[1, 2, -3]]);
        assert_eq!(input.assignment, Some(vec![true, false, false]));
        assert!(parse_nae("nae 3 2\ncl 1 2 3\n").is_err());
    }
}
