//! Command-line front end. Exit codes: 0 yes/valid, 1 no/invalid, 2 usage
//! or input error, 3 budget or timeout exceeded.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};

use crate::classify::{branch_decomposition, classify_graph, minimum_vertex_cover};
use crate::dispatch::{run, Algorithm};
use crate::districting::verify_districting;
use crate::format::{
    parse_grid_tiling, parse_instance, parse_nae, parse_solution, write_instance, write_solution,
    ParsedInstance,
};
use crate::generators::{gen_random_instance, reduce_grid_tiling, reduce_nae3sat, reduce_pbcp, GenClass};
use crate::solvers::{Budget, SolveError, DEFAULT_BUDGET};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "fcd", version, about = "Fair connected districting solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Limits {
    /// Work budget in solver units.
    #[arg(long, env = "FCD_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Wall-clock limit in seconds, checked cooperatively.
    #[arg(long)]
    timeout: Option<f64>,
    /// Worker threads (bench runs jobs in parallel; single solves are sequential).
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    threads: u32,
}

impl Limits {
    fn budget(&self) -> Budget {
        let budget = Budget::new(self.budget);
        match self.timeout {
            Some(secs) => budget.with_deadline(Instant::now() + Duration::from_secs_f64(secs.max(0.0))),
            None => budget,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide an instance; prints YES or NO.
    Solve {
        instance: PathBuf,
        #[arg(long, default_value = "auto")]
        algo: Algorithm,
        #[command(flatten)]
        limits: Limits,
        /// Write the districting here when the solver produces one.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check a districting against an instance.
    Verify { instance: PathBuf, solution: PathBuf },
    /// Write a generated instance.
    Generate {
        #[command(subcommand)]
        what: Generate,
    },
    /// Print structural facts about an instance's graph.
    Classify { instance: PathBuf },
    /// Run solvers over instances and print CSV.
    Bench {
        #[arg(required = true)]
        instances: Vec<PathBuf>,
        /// Comma-separated algorithms.
        #[arg(long, default_value = "auto", value_delimiter = ',')]
        algo: Vec<Algorithm>,
        #[command(flatten)]
        limits: Limits,
        /// Print `-` instead of wall times so the output is reproducible.
        #[arg(long)]
        no_wall_time: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Generate {
    /// Random instance of a graph class.
    Random {
        /// path, cycle, star, caterpillar, tree, unicyclic, bounded_vc:<b>, general:<p>
        #[arg(long)]
        class: GenClass,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        colors: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        ell: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Tree instance from Grid Tiling parameters (`gt`, `s`, `sel` lines).
    GridTiling {
        params: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Write the districting built from the `sel` lines.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Two-district instance from NAE-3-SAT parameters (`nae`, `cl`, `asg` lines).
    Nae {
        params: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Write the districting built from the `asg` line.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Two-color instance from a graph and two anchor vertices.
    Pbcp {
        graph: PathBuf,
        v: usize,
        v2: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// Failure carrying its exit code.
struct Fail(i32, String);

impl From<SolveError> for Fail {
    fn from(e: SolveError) -> Self {
        let code = if e.is_budget() { EXIT_BUDGET } else { EXIT_USAGE };
        Fail(code, e.to_string())
    }
}

fn usage(msg: impl std::fmt::Display) -> Fail {
    Fail(EXIT_USAGE, msg.to_string())
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<ParsedInstance, Fail> {
    parse_instance(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), Fail> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(usage),
    }
}

/// Runs the CLI on `args` (including the program name) with the process's
/// standard streams.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_cli_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Fail> {
    match command {
        Command::Solve {
            instance,
            algo,
            limits,
            output,
        } => {
            let parsed = load(&instance)?;
            let mut budget = limits.budget();
            let report = run(&parsed.instance, parsed.td.as_ref(), algo, &mut budget)?;
            let _ = writeln!(err, "algorithm: {}", report.algorithm);
            let _ = writeln!(err, "work: {}", report.outcome.work);
            if let Some(path) = output.as_deref() {
                match &report.outcome.witness {
                    Some(w) => emit(Some(path), &write_solution(w), out)?,
                    None if report.outcome.feasible => {
                        let _ = writeln!(err, "note: {} does not reconstruct districtings", report.algorithm);
                    }
                    None => {}
                }
            }
            let _ = writeln!(out, "{}", if report.outcome.feasible { "YES" } else { "NO" });
            Ok(if report.outcome.feasible { EXIT_YES } else { EXIT_NO })
        }
        Command::Verify { instance, solution } => {
            let parsed = load(&instance)?;
            let d = parse_solution(&read(&solution)?, parsed.instance.n())
                .map_err(|e| usage(format!("{}: {e}", solution.display())))?;
            match verify_districting(&parsed.instance, &d) {
                Ok(verdict) => {
                    let _ = writeln!(out, "{verdict}");
                    Ok(if verdict.is_valid() { EXIT_YES } else { EXIT_NO })
                }
                Err(e) => {
                    let _ = writeln!(out, "invalid: {e}");
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Generate { what } => generate(what, out).map(|()| EXIT_YES),
        Command::Classify { instance } => {
            let parsed = load(&instance)?;
            let g = parsed.instance.graph();
            let report = classify_graph(g);
            let mut text = format!(
                "class: {}\nvertices: {}\nedges: {}\ncolors: {}\nconnected: {}\ncomponents: {}\nfen: {}\ndegree_ge2: {}\n",
                report.class_tag,
                g.num_vertices(),
                g.num_edges(),
                g.num_colors(),
                report.is_connected,
                report.num_components,
                report.fen,
                report.degree_ge2_count,
            );
            if let Ok(bd) = branch_decomposition(g) {
                text += &format!("branches: {}\nendpoints: {}\n", bd.branches.len(), bd.endpoints.len());
            }
            match minimum_vertex_cover(g, 12) {
                Ok(cover) => text += &format!("vertex_cover: {}\n", cover.len()),
                Err(_) => text += "vertex_cover: >12\n",
            }
            if let Some(spine) = &report.spine {
                let spine: Vec<String> = spine.iter().map(usize::to_string).collect();
                text += &format!("spine: {}\n", spine.join(" "));
            }
            if let Some(td) = &parsed.td {
                text += &format!("td_width: {}\n", td.width());
            }
            emit(None, &text, out)?;
            Ok(EXIT_YES)
        }
        Command::Bench {
            instances,
            algo,
            limits,
            no_wall_time,
            output,
        } => {
            let loaded = instances.iter().map(|p| load(p)).collect::<Result<Vec<_>, _>>()?;
            let jobs: Vec<(usize, Algorithm)> = (0..loaded.len())
                .flat_map(|i| algo.iter().map(move |&a| (i, a)))
                .collect();
            let rows = bench_rows(&loaded, &instances, &jobs, &limits, no_wall_time);
            let mut csv = String::from("instance,algorithm,decision,wall_ms,work\n");
            for row in rows {
                csv += &row;
            }
            emit(output.as_deref(), &csv, out)?;
            Ok(EXIT_YES)
        }
    }
}

fn bench_rows(
    loaded: &[ParsedInstance],
    names: &[PathBuf],
    jobs: &[(usize, Algorithm)],
    limits: &Limits,
    no_wall_time: bool,
) -> Vec<String> {
    let one = |&(i, algo): &(usize, Algorithm)| {
        let mut budget = limits.budget();
        let start = Instant::now();
        let result = run(&loaded[i].instance, loaded[i].td.as_ref(), algo, &mut budget);
        let wall = if no_wall_time {
            "-".to_string()
        } else {
            format!("{:.3}", start.elapsed().as_secs_f64() * 1000.0)
        };
        let (name, decision) = match &result {
            Ok(r) => (r.algorithm.to_string(), if r.outcome.feasible { "YES" } else { "NO" }),
            Err(SolveError::Timeout) => (algo.to_string(), "TIMEOUT"),
            Err(e) if e.is_budget() => (algo.to_string(), "BUDGET"),
            Err(SolveError::NotApplicable(_)) => (algo.to_string(), "N/A"),
            Err(_) => (algo.to_string(), "ERROR"),
        };
        let work = result.map_or(budget.spent(), |r| r.outcome.work);
        format!("{},{name},{decision},{wall},{work}\n", names[i].display())
    };
    let threads = (limits.threads as usize).min(jobs.len()).max(1);
    if threads == 1 {
        return jobs.iter().map(one).collect();
    }
    let mut rows = vec![String::new(); jobs.len()];
    let chunk = jobs.len().div_ceil(threads);
    std::thread::scope(|scope| {
        for (slots, batch) in rows.chunks_mut(chunk).zip(jobs.chunks(chunk)) {
            scope.spawn(move || {
                for (slot, job) in slots.iter_mut().zip(batch) {
                    *slot = one(job);
                }
            });
        }
    });
    rows
}

fn generate(what: Generate, out: &mut dyn Write) -> Result<(), Fail> {
    match what {
        Generate::Random {
            class,
            n,
            colors,
            k,
            ell,
            seed,
            output,
        } => {
            let inst = gen_random_instance(class, n, colors, k, ell, seed).map_err(usage)?;
            emit(output.as_deref(), &write_instance(&inst, None), out)
        }
        Generate::GridTiling {
            params,
            output,
            witness,
        } => {
            let input = parse_grid_tiling(&read(&params)?).map_err(|e| usage(format!("{}: {e}", params.display())))?;
            let red = reduce_grid_tiling(&input.instance).map_err(usage)?;
            if let Some(path) = witness.as_deref() {
                let selection = input
                    .selection
                    .as_deref()
                    .ok_or_else(|| usage("--witness needs `sel` lines in the parameters"))?;
                let d = red.witness(selection).map_err(usage)?;
                emit(Some(path), &write_solution(&d), out)?;
            }
            emit(output.as_deref(), &write_instance(&red.instance, None), out)
        }
        Generate::Nae {
            params,
            output,
            witness,
        } => {
            let input = parse_nae(&read(&params)?).map_err(|e| usage(format!("{}: {e}", params.display())))?;
            let red = reduce_nae3sat(&input.instance).map_err(usage)?;
            if let Some(path) = witness.as_deref() {
                let assignment = input
                    .assignment
                    .as_deref()
                    .ok_or_else(|| usage("--witness needs an `asg` line in the parameters"))?;
                let d = red.witness(assignment).map_err(usage)?;
                emit(Some(path), &write_solution(&d), out)?;
            }
            emit(output.as_deref(), &write_instance(&red.instance, None), out)
        }
        Generate::Pbcp { graph, v, v2, output } => {
            let parsed = load(&graph)?;
            let inst = reduce_pbcp(parsed.instance.graph(), v, v2).map_err(usage)?;
            emit(output.as_deref(), &write_instance(&inst, None), out)
        }
    }
}
