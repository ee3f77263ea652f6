//! Command-line front end shared by the `steiner-enum` binary and its tests.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, LineWriter, Read, Write};
use std::ops::ControlFlow;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::directed_steiner::{directed_steiner_events, DirectedSteinerInstance};
use crate::error::Error;
use crate::generate::{line_graph, random_connected, random_subset};
use crate::graph::{EdgeId, EdgeSet, Graph, VertexId, VertexSet};
use crate::induced_clawfree::{enum_minimal_induced_steiner, InducedSolution};
use crate::instance::Instance;
use crate::oracle::{self, DEFAULT_CAP_BITS};
use crate::output_queue::MAX_GAP;
use crate::path_enum::{enum_st_paths, Path};
use crate::profile::{profile_flat, profile_tree, ProfileRecord};
use crate::sink::Mode;
use crate::steiner_forest::{reduce_terminal_sets, steiner_forest_events};
use crate::steiner_tree::steiner_tree_events;
use crate::terminal_steiner::{terminal_steiner_events, TerminalSteinerInstance};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DELAY: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    Paths,
    SteinerTree,
    SteinerForest,
    Terminal,
    Directed,
    InducedClawfree,
}

impl Problem {
    /// Whether solutions come from an enumeration tree (and so honour `--mode`).
    fn is_tree(self) -> bool {
        !matches!(self, Problem::Paths | Problem::InducedClawfree)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Plain,
    Improved,
    Queued,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Plain => Mode::Plain,
            ModeArg::Improved => Mode::Improved,
            ModeArg::Queued => Mode::Queued,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "steiner-enum",
    version,
    about = "Enumerate minimal Steiner trees, forests, terminal and directed Steiner trees, s-t paths and induced Steiner subgraphs",
    args_conflicts_with_subcommands = true,
    subcommand_negates_reqs = true
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    run: RunArgs,
    /// Seed for `gen`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List solutions by exhaustive search (small instances only).
    Oracle(OracleArgs),
    /// Write a random instance.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
struct RunArgs {
    #[arg(long, value_enum, required = true)]
    problem: Option<Problem>,
    #[arg(long, value_enum, default_value = "improved")]
    mode: ModeArg,
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, default_value = "-")]
    output: String,
    /// Stop after this many solutions.
    #[arg(long)]
    limit: Option<u64>,
    /// Print only the final count line.
    #[arg(long)]
    count_only: bool,
    /// Report delays and tree shape on stderr.
    #[arg(long)]
    profile: bool,
    /// Fail with exit code 3 if the queued delay bound is exceeded.
    #[arg(long)]
    assert_delay: bool,
    /// Compare against the exhaustive oracle; exit code 4 on any difference.
    #[arg(long)]
    oracle_check: bool,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long, value_enum)]
    problem: Problem,
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, default_value = "-")]
    output: String,
    /// Largest subset space the search accepts, as a power of two.
    #[arg(long, default_value_t = DEFAULT_CAP_BITS)]
    cap_bits: usize,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    problem: Problem,
    /// Vertices (of the base graph for induced-clawfree, which emits its line graph).
    #[arg(long)]
    n: usize,
    /// Edges, including a spanning tree.
    #[arg(long)]
    m: usize,
    /// Terminals in the first set (ignored by paths, which always uses two).
    #[arg(long, default_value_t = 3)]
    terminals: usize,
    /// Terminal pairs for steiner-forest.
    #[arg(long, default_value_t = 2)]
    sets: usize,
    #[arg(long, default_value = "-")]
    output: String,
}

#[derive(Debug, Error)]
enum Failure {
    #[error("{0}")]
    Infeasible(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Delay(String),
    #[error("{0}")]
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Infeasible(_) => EXIT_INFEASIBLE,
            Failure::Input(_) => EXIT_INPUT,
            Failure::Delay(_) => EXIT_DELAY,
            Failure::Mismatch(_) => EXIT_MISMATCH,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Infeasible(_) => Failure::Infeasible(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let result = match &cli.command {
        Some(Command::Oracle(a)) => run_oracle(a, stdin, stdout),
        Some(Command::Gen(a)) => run_gen(a, cli.seed, stdout),
        None => run_enumeration(&cli.run, stdin, stdout, stderr),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "error: {f}");
            f.code()
        }
    }
}

fn read_instance(path: &str, stdin: &mut dyn Read) -> Result<Instance, Failure> {
    let mut text = String::new();
    if path == "-" {
        stdin.read_to_string(&mut text)?;
    } else {
        File::open(path)
            .and_then(|mut f| f.read_to_string(&mut text))
            .map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    }
    Ok(text.parse()?)
}

fn open_output<'a>(path: &str, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>, Failure> {
    if path == "-" {
        Ok(Box::new(LineWriter::new(stdout)))
    } else {
        let file = File::create(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
        Ok(Box::new(LineWriter::new(file)))
    }
}

/// One line per edge problem solution: `u-v` pairs sorted, undirected edges
/// written with the smaller endpoint first.
fn edge_line(g: &Graph, ids: &[EdgeId]) -> String {
    let mut pairs: Vec<(VertexId, VertexId)> = ids
        .iter()
        .map(|&id| {
            let e = g.edge(id).expect("solution edges belong to the graph");
            if g.is_directed() {
                (e.u, e.v)
            } else {
                (e.u.min(e.v), e.u.max(e.v))
            }
        })
        .collect();
    pairs.sort_unstable();
    pairs.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

fn vertex_line(vs: &[VertexId]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Writes solutions as they arrive and keeps what `--oracle-check` needs.
struct Printer<'a> {
    out: &'a mut dyn Write,
    count_only: bool,
    limit: Option<u64>,
    count: u64,
    kept: Option<Vec<Vec<usize>>>,
    failed: Option<io::Error>,
}

impl Printer<'_> {
    fn accept(&mut self, ids: Vec<usize>, line: impl FnOnce() -> String) -> ControlFlow<()> {
        if self.limit.is_some_and(|l| self.count >= l) {
            return ControlFlow::Break(());
        }
        self.count += 1;
        if !self.count_only {
            if let Err(e) = writeln!(self.out, "{}", line()) {
                self.failed = Some(e);
                return ControlFlow::Break(());
            }
        }
        if let Some(kept) = &mut self.kept {
            kept.push(ids);
        }
        if self.limit.is_some_and(|l| self.count >= l) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    }
}

fn sorted(mut ids: Vec<usize>) -> Vec<usize> {
    ids.sort_unstable();
    ids
}

fn st_pair(inst: &Instance) -> Result<(VertexId, VertexId), Failure> {
    match inst.terminals()? {
        &[s, t] => Ok((s, t)),
        other => Err(Failure::Input(format!(
            "paths needs exactly two vertices on the first `t` line, found {}",
            other.len()
        ))),
    }
}

fn directed_root(inst: &Instance) -> Result<VertexId, Failure> {
    inst.root
        .ok_or_else(|| Failure::Input("directed needs an `r <v>` line".into()))
}

fn run_enumeration(a: &RunArgs, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Failure> {
    let problem = a.problem.expect("clap enforces --problem");
    let mode = Mode::from(a.mode);
    if a.assert_delay && !(problem.is_tree() && mode == Mode::Queued) {
        return Err(Failure::Input(
            "--assert-delay needs a tree problem and --mode queued".into(),
        ));
    }
    let inst = read_instance(&a.input, stdin)?;
    let g = &inst.graph;
    let n = g.n();
    let mut out = open_output(&a.output, stdout)?;
    let mut printer = Printer {
        out: &mut *out,
        count_only: a.count_only,
        limit: a.limit,
        count: 0,
        kept: a.oracle_check.then(Vec::new),
        failed: None,
    };
    let mut edges = |s: &EdgeSet| {
        let ids = s.to_vec();
        printer.accept(ids.clone(), || edge_line(g, &ids))
    };
    let record = match problem {
        Problem::Paths => {
            let (s, t) = st_pair(&inst)?;
            let mut sink = |p: &Path| {
                let ids = sorted(p.edges.clone());
                printer.accept(ids.clone(), || edge_line(g, &ids))
            };
            profile_flat(&mut sink, |emit| enum_st_paths(g, s, t, &mut |p: &Path| emit(p)).map(drop))?
        }
        Problem::SteinerTree => {
            let w = VertexSet::from_ids(n, inst.terminals()?.iter().copied());
            profile_tree(n, mode, &mut edges, |out| steiner_tree_events(g, &w, mode.is_improved(), out))?
        }
        Problem::SteinerForest => {
            let pairs = reduce_terminal_sets(g, &inst.terminal_sets)?;
            profile_tree(n, mode, &mut edges, |out| steiner_forest_events(g, &pairs, mode.is_improved(), out))?
        }
        Problem::Terminal => {
            let w = VertexSet::from_ids(n, inst.terminals()?.iter().copied());
            let ti = TerminalSteinerInstance::new(g, &w)?;
            profile_tree(n, mode, &mut edges, |out| terminal_steiner_events(&ti, mode.is_improved(), out))?
        }
        Problem::Directed => {
            let w = VertexSet::from_ids(n, inst.terminals()?.iter().copied());
            let di = DirectedSteinerInstance::new(g, directed_root(&inst)?, &w)?;
            profile_tree(n, mode, &mut edges, |out| directed_steiner_events(&di, mode.is_improved(), out))?
        }
        Problem::InducedClawfree => {
            let w = VertexSet::from_ids(n, inst.terminals()?.iter().copied());
            let mut sink = |x: &InducedSolution| {
                let ids = x.vertices().to_vec();
                printer.accept(ids.clone(), || vertex_line(&ids))
            };
            profile_flat(&mut sink, |emit| {
                enum_minimal_induced_steiner(g, &w, &mut |x: &InducedSolution| emit(x)).map(drop)
            })?
        }
    };
    if let Some(e) = printer.failed.take() {
        return Err(e.into());
    }
    writeln!(printer.out, "# count={}", printer.count)?;
    printer.out.flush()?;
    if a.profile {
        write!(stderr, "{}", record.summary())?;
    }
    if a.assert_delay {
        check_delay(&record)?;
    }
    if let Some(kept) = printer.kept.take() {
        let truncated = a.limit.is_some_and(|l| printer.count >= l);
        compare_with_oracle(problem, &inst, kept, truncated)?;
    }
    Ok(())
}

fn check_delay(record: &ProfileRecord) -> Result<(), Failure> {
    let gap = record.max_node_gap.unwrap_or(0);
    let queue = record.queue.clone().unwrap_or_default();
    if gap > MAX_GAP || queue.starved > 0 || queue.occupancy_violations > 0 {
        return Err(Failure::Delay(format!(
            "delay bound violated: max_node_gap={gap} (bound {MAX_GAP}), starved={}, occupancy_violations={}",
            queue.starved, queue.occupancy_violations
        )));
    }
    Ok(())
}

/// Canonical solutions of `problem` on `inst` by exhaustive search.
fn oracle_solutions(problem: Problem, inst: &Instance, cap_bits: usize) -> Result<Vec<Vec<usize>>, Failure> {
    let g = &inst.graph;
    let report = match problem {
        Problem::Paths => {
            let (s, t) = st_pair(inst)?;
            g.check_vertex(s)?;
            g.check_vertex(t)?;
            let mut paths: Vec<_> = oracle::brute_st_paths(g, s, t).into_iter().map(sorted).collect();
            paths.sort();
            return Ok(paths);
        }
        Problem::SteinerTree => oracle::brute_steiner_trees(g, inst.terminals()?, cap_bits)?,
        Problem::SteinerForest => oracle::brute_steiner_forests(g, &inst.terminal_sets, cap_bits)?,
        Problem::Terminal => oracle::brute_terminal_steiner(g, inst.terminals()?, cap_bits)?,
        Problem::Directed => oracle::brute_directed_steiner(g, directed_root(inst)?, inst.terminals()?, cap_bits)?,
        Problem::InducedClawfree => oracle::brute_induced_steiner(g, inst.terminals()?, cap_bits)?,
    };
    Ok(report.solutions)
}

fn compare_with_oracle(problem: Problem, inst: &Instance, kept: Vec<Vec<usize>>, truncated: bool) -> Result<(), Failure> {
    let expected: BTreeSet<Vec<usize>> = oracle_solutions(problem, inst, DEFAULT_CAP_BITS)?.into_iter().collect();
    let mut seen = BTreeSet::new();
    for s in kept {
        let s = sorted(s);
        if !expected.contains(&s) {
            return Err(Failure::Mismatch(format!("oracle mismatch: unexpected solution {s:?}")));
        }
        if !seen.insert(s.clone()) {
            return Err(Failure::Mismatch(format!("oracle mismatch: duplicate solution {s:?}")));
        }
    }
    if !truncated && seen.len() != expected.len() {
        let missing = expected.difference(&seen).next().expect("sizes differ");
        return Err(Failure::Mismatch(format!(
            "oracle mismatch: {} of {} solutions missing, e.g. {missing:?}",
            expected.len() - seen.len(),
            expected.len()
        )));
    }
    Ok(())
}

fn run_oracle(a: &OracleArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), Failure> {
    let inst = read_instance(&a.input, stdin)?;
    let solutions = oracle_solutions(a.problem, &inst, a.cap_bits)?;
    let mut out = open_output(&a.output, stdout)?;
    for s in &solutions {
        let line = match a.problem {
            Problem::InducedClawfree => vertex_line(s),
            _ => edge_line(&inst.graph, s),
        };
        writeln!(out, "{line}")?;
    }
    writeln!(out, "# count={}", solutions.len())?;
    out.flush()?;
    Ok(())
}

/// Connected graph on `n` vertices whose arcs all point away from vertex 0 along
/// a BFS tree; the remaining edges get a random direction.
fn rooted_digraph(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Graph {
    let g = random_connected(n, m, rng);
    let mut dist = vec![usize::MAX; n];
    dist[0] = 0;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    let arcs: Vec<_> = g
        .edges()
        .iter()
        .map(|e| {
            let forward = if dist[e.u] != dist[e.v] { dist[e.u] < dist[e.v] } else { rng.gen() };
            if forward {
                (e.u, e.v)
            } else {
                (e.v, e.u)
            }
        })
        .collect();
    Graph::directed(n, &arcs).expect("arcs come from a valid graph")
}

fn run_gen(a: &GenArgs, seed: u64, stdout: &mut dyn Write) -> Result<(), Failure> {
    if a.n < 2 {
        return Err(Failure::Input("--n must be at least 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = a.terminals.clamp(1, a.n);
    let inst = match a.problem {
        Problem::Paths => Instance {
            graph: random_connected(a.n, a.m, &mut rng),
            terminal_sets: vec![random_subset(a.n, 2, &mut rng)],
            root: None,
        },
        Problem::SteinerTree | Problem::Terminal => Instance {
            graph: random_connected(a.n, a.m, &mut rng),
            terminal_sets: vec![random_subset(a.n, k, &mut rng)],
            root: None,
        },
        Problem::SteinerForest => Instance {
            graph: random_connected(a.n, a.m, &mut rng),
            terminal_sets: (0..a.sets).map(|_| random_subset(a.n, 2, &mut rng)).collect(),
            root: None,
        },
        Problem::Directed => {
            let graph = rooted_digraph(a.n, a.m, &mut rng);
            let picks = random_subset(a.n - 1, k.min(a.n - 1), &mut rng);
            Instance {
                graph,
                terminal_sets: vec![picks.into_iter().map(|v| v + 1).collect()],
                root: Some(0),
            }
        }
        Problem::InducedClawfree => {
            let base = random_connected(a.n, a.m, &mut rng);
            let graph = line_graph(&base);
            let size = graph.n();
            if size == 0 {
                return Err(Failure::Input("base graph has no edges".into()));
            }
            Instance {
                terminal_sets: vec![random_subset(size, k.min(size), &mut rng)],
                graph,
                root: None,
            }
        }
    };
    stdout.write_all(inst.to_text().as_bytes())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("steiner-enum").chain(args.iter().copied());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    const TRIANGLE: &str = "p undirected 3 3\ne 0 1\ne 1 2\ne 0 2\nt 0 1\n";

    #[test]
    fn triangle_has_two_trees() {
        let (code, out, _) = call(&["--problem", "steiner-tree"], TRIANGLE);
        assert_eq!(code, EXIT_OK);
        let mut lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.pop(), Some("# count=2"));
        lines.sort();
        assert_eq!(lines, vec!["0-1", "0-2 1-2"]);
    }

    #[test]
    fn limit_truncates_the_count() {
        let (code, out, _) = call(&["--problem", "steiner-tree", "--limit", "1", "--count-only"], TRIANGLE);
        assert_eq!((code, out.as_str()), (EXIT_OK, "# count=1\n"));
    }

    #[test]
    fn unknown_flag_is_an_input_error() {
        let (code, _, err) = call(&["--problem", "steiner-tree", "--bogus"], TRIANGLE);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("--bogus"));
    }

    #[test]
    fn oracle_comparison_flags_missing_and_duplicate_solutions() {
        let inst: Instance = TRIANGLE.parse().unwrap();
        let check = |kept: Vec<Vec<usize>>, truncated| {
            compare_with_oracle(Problem::SteinerTree, &inst, kept, truncated).map_err(|f| f.code())
        };
        assert_eq!(check(vec![vec![0], vec![2, 1]], false), Ok(()));
        assert_eq!(check(vec![vec![0]], true), Ok(()));
        assert_eq!(check(vec![vec![0]], false), Err(EXIT_MISMATCH));
        assert_eq!(check(vec![vec![0], vec![0]], true), Err(EXIT_MISMATCH));
        assert_eq!(check(vec![vec![1]], true), Err(EXIT_MISMATCH));
    }

    #[test]
    fn edge_lines_are_canonical() {
        let g = Graph::undirected(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(edge_line(&g, &[0, 1]), "0-1 1-2");
        let d = Graph::directed(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(edge_line(&d, &[0, 1]), "1-0 2-1");
    }

    #[test]
    fn generated_directed_instances_are_rooted() {
        let (code, text, _) = call(&["gen", "--problem", "directed", "--n", "6", "--m", "9", "--seed", "3"], "");
        assert_eq!(code, EXIT_OK);
        let inst: Instance = text.parse().unwrap();
        let w = VertexSet::from_ids(6, inst.terminals().unwrap().iter().copied());
        assert!(DirectedSteinerInstance::new(&inst.graph, 0, &w).is_ok());
    }
}
