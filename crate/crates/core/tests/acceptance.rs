//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits with a
//! failure status if any criterion fails.

mod common;

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::rng;
use rand::Rng;
use steiner_enum::certify;
use steiner_enum::directed_steiner::{directed_steiner_events, enum_minimal_directed_steiner_trees, DirectedSteinerInstance};
use steiner_enum::generate::{line_graph, random_claw_free, random_connected, random_digraph, random_graph, random_subset, random_tree};
use steiner_enum::graph::{bridges, connected_components, lca_index};
use steiner_enum::induced_clawfree::{enum_minimal_induced_steiner, is_claw_free, reduce_to_induced, InducedSolution};
use steiner_enum::oracle::{self, DEFAULT_CAP_BITS};
use steiner_enum::path_enum::{enum_st_paths, Path};
use steiner_enum::profile::profile_tree;
use steiner_enum::steiner_forest::{
    enum_minimal_steiner_forests, prune_by_lca, prune_by_lca_from, reduce_terminal_sets, steiner_forest_events, TerminalPairs,
};
use steiner_enum::steiner_tree::{enum_minimal_steiner_trees, steiner_tree_events};
use steiner_enum::terminal_steiner::{enum_minimal_terminal_steiner_trees, terminal_steiner_events, TerminalSteinerInstance};
use steiner_enum::{EdgeSet, Error, Graph, Mode, VertexSet};

const MODES: [Mode; 3] = [Mode::Plain, Mode::Improved, Mode::Queued];

type Check = Result<String, String>;
type TreeBody<'a> = &'a dyn Fn(&mut dyn steiner_enum::TreeSink<EdgeSet>) -> steiner_enum::Result<ControlFlow<()>>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Certificate results gathered while the oracle suites run.
#[derive(Default)]
struct Certificates {
    checked: HashMap<&'static str, u64>,
    failures: Vec<String>,
}

impl Certificates {
    fn record(&mut self, kind: &'static str, outcome: Result<(), certify::Violation>, what: &[usize]) {
        *self.checked.entry(kind).or_default() += 1;
        if let Err(v) = outcome {
            self.failures.push(format!("{kind} {what:?}: {v}"));
        }
    }
}

/// Runs an enumerator and returns every solution it produced, in order.
fn collect<S: ?Sized>(
    run: impl FnOnce(&mut dyn FnMut(&S) -> ControlFlow<()>) -> steiner_enum::Result<u64>,
    key: impl Fn(&S) -> Vec<usize>,
) -> steiner_enum::Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    run(&mut |s: &S| {
        out.push(key(s));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

fn edge_ids(s: &EdgeSet) -> Vec<usize> {
    s.to_vec()
}

/// Sorts `got`, failing on duplicates, and compares it with the oracle set.
fn same_set(mut got: Vec<Vec<usize>>, expected: &[Vec<usize>], what: &str) -> Result<(), String> {
    for s in &mut got {
        s.sort_unstable();
    }
    got.sort();
    let before = got.len();
    got.dedup();
    ensure!(before == got.len(), "{what}: {} duplicate solutions", before - got.len());
    ensure!(got == expected, "{what}: {} solutions, oracle has {}", got.len(), expected.len());
    Ok(())
}

/// Accepts an infeasible instance exactly when the oracle finds nothing.
fn or_infeasible(r: steiner_enum::Result<Vec<Vec<usize>>>, expected: &[Vec<usize>], what: &str) -> Result<Vec<Vec<usize>>, String> {
    match r {
        Ok(v) => Ok(v),
        Err(Error::Infeasible(_)) if expected.is_empty() => Ok(Vec::new()),
        Err(e) => Err(format!("{what}: {e}")),
    }
}

fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::undirected(n, &edges).unwrap()
}

struct TreeCase {
    g: Graph,
    w: Vec<usize>,
}

/// Suite 1: random connected graphs with n <= 7, plus K6 with every vertex a terminal.
fn suite_one() -> Vec<TreeCase> {
    let mut r = rng(1);
    let mut cases: Vec<TreeCase> = (0..500)
        .map(|_| {
            let n = r.gen_range(2..=7);
            let max_m = n * (n - 1) / 2;
            let m = r.gen_range(n - 1..=max_m.min(n + 7));
            let g = random_connected(n, m, &mut r);
            let k = r.gen_range(2..=n);
            TreeCase { w: random_subset(n, k, &mut r), g }
        })
        .collect();
    cases.push(TreeCase { g: complete(6), w: (0..6).collect() });
    cases
}

struct ForestCase {
    g: Graph,
    sets: Vec<Vec<usize>>,
}

struct DirectedCase {
    d: Graph,
    w: Vec<usize>,
}

/// Suite 3: forests, terminal trees, directed trees and induced subgraphs at n <= 6.
struct SuiteThree {
    forests: Vec<ForestCase>,
    terminal: Vec<TreeCase>,
    directed: Vec<DirectedCase>,
    induced: Vec<TreeCase>,
}

fn suite_three() -> SuiteThree {
    let mut r = rng(3);
    let forests = (0..200)
        .map(|_| {
            let n = r.gen_range(2..=6);
            let m = r.gen_range(n - 1..=(n * (n - 1) / 2).min(n + 4));
            let g = random_connected(n, m, &mut r);
            let sets = (0..r.gen_range(1..=3))
                .map(|_| {
                    let size = r.gen_range(2..=3.min(n));
                    random_subset(n, size, &mut r)
                })
                .collect();
            ForestCase { g, sets }
        })
        .collect();
    let terminal = (0..200)
        .map(|_| {
            let n = r.gen_range(3..=6);
            let m = r.gen_range(n - 1..=(n * (n - 1) / 2).min(n + 4));
            let g = random_connected(n, m, &mut r);
            let k = r.gen_range(2..=4.min(n));
            TreeCase { w: random_subset(n, k, &mut r), g }
        })
        .collect();
    let directed = (0..200)
        .map(|_| {
            let n = r.gen_range(2..=6);
            let d = random_digraph(n, 0.35, &mut r);
            let k = r.gen_range(1..=3.min(n - 1));
            let w = random_subset(n - 1, k, &mut r).into_iter().map(|v| v + 1).collect();
            DirectedCase { d, w }
        })
        .collect();
    let mut induced = Vec::new();
    while induced.len() < 200 {
        let g = if induced.len() % 2 == 0 {
            line_graph(&random_graph(r.gen_range(2..=4), r.gen_range(0.4..0.9), &mut r))
        } else {
            match random_claw_free(r.gen_range(2..=6), r.gen_range(0.3..0.8), 50, &mut r) {
                Some(g) => g,
                None => continue,
            }
        };
        if g.n() == 0 {
            continue;
        }
        let k = r.gen_range(1..=3.min(g.n()));
        induced.push(TreeCase { w: random_subset(g.n(), k, &mut r), g });
    }
    SuiteThree { forests, terminal, directed, induced }
}

fn vset(n: usize, w: &[usize]) -> VertexSet {
    VertexSet::from_ids(n, w.iter().copied())
}

fn criterion_1(suite: &[TreeCase], certs: &mut Certificates) -> Check {
    let start = Instant::now();
    let mut solutions = 0;
    for (i, c) in suite.iter().enumerate() {
        let expected = oracle::brute_steiner_trees(&c.g, &c.w, DEFAULT_CAP_BITS).map_err(|e| e.to_string())?.solutions;
        let terminals = vset(c.g.n(), &c.w);
        for mode in MODES {
            let got = collect(|sink| enum_minimal_steiner_trees(&c.g, &terminals, mode, &mut &mut *sink), edge_ids)
                .map_err(|e| format!("instance {i}: {e}"))?;
            for s in &got {
                certs.record("steiner tree", certify::steiner_tree(&c.g, &c.w, s), s);
            }
            solutions += got.len();
            same_set(got, &expected, &format!("instance {i}, {mode:?}"))?;
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed <= Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!("{} graphs x 3 modes, {solutions} solutions, {:.1?}", suite.len(), elapsed))
}

fn criterion_2(certs: &mut Certificates) -> Check {
    let mut r = rng(2);
    let mut total = 0;
    for i in 0..500 {
        let n = r.gen_range(2..=7);
        let d = random_digraph(n, r.gen_range(0.2..0.6), &mut r);
        let (s, t) = (0, n - 1);
        let got = collect(|sink| enum_st_paths(&d, s, t, &mut &mut *sink), |p: &Path| p.edges.clone())
            .map_err(|e| format!("digraph {i}: {e}"))?;
        for p in &got {
            certs.record("s-t path", certify::st_path(&d, s, t, p), p);
        }
        total += got.len();
        let expected: Vec<Vec<usize>> = oracle::brute_st_paths(&d, s, t)
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        let mut expected = expected;
        expected.sort();
        same_set(got, &expected, &format!("digraph {i}"))?;
    }
    let count = |g: &Graph, s, t| enum_st_paths(g, s, t, &mut |_: &Path| ControlFlow::Continue(())).unwrap();
    let diamond = Graph::undirected(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    ensure!(count(&diamond, 0, 3) == 4, "diamond gave {}", count(&diamond, 0, 3));
    ensure!(count(&complete(5), 0, 4) == 16, "K5 gave {}", count(&complete(5), 0, 4));
    Ok(format!("500 digraphs, {total} paths; diamond = 4, K5 = 16"))
}

fn criterion_3(suite: &SuiteThree, certs: &mut Certificates) -> Check {
    for (i, c) in suite.forests.iter().enumerate() {
        let expected = oracle::brute_steiner_forests(&c.g, &c.sets, DEFAULT_CAP_BITS).map_err(|e| e.to_string())?.solutions;
        let pairs = reduce_terminal_sets(&c.g, &c.sets).map_err(|e| format!("forest {i}: {e}"))?;
        for mode in MODES {
            let got = collect(|sink| enum_minimal_steiner_forests(&c.g, &pairs, mode, &mut &mut *sink), edge_ids)
                .map_err(|e| format!("forest {i}: {e}"))?;
            for s in &got {
                certs.record("steiner forest", certify::steiner_forest(&c.g, &c.sets, s), s);
            }
            same_set(got, &expected, &format!("forest {i}, {mode:?}"))?;
        }
    }
    for (i, c) in suite.terminal.iter().enumerate() {
        let expected = oracle::brute_terminal_steiner(&c.g, &c.w, DEFAULT_CAP_BITS).map_err(|e| e.to_string())?.solutions;
        let terminals = vset(c.g.n(), &c.w);
        for mode in MODES {
            let what = format!("terminal {i}, {mode:?}");
            let got = collect(|sink| enum_minimal_terminal_steiner_trees(&c.g, &terminals, mode, &mut &mut *sink), edge_ids);
            let got = or_infeasible(got, &expected, &what)?;
            for s in &got {
                certs.record("terminal steiner tree", certify::terminal_steiner_tree(&c.g, &c.w, s), s);
            }
            same_set(got, &expected, &what)?;
        }
    }
    for (i, c) in suite.directed.iter().enumerate() {
        let expected = oracle::brute_directed_steiner(&c.d, 0, &c.w, DEFAULT_CAP_BITS).map_err(|e| e.to_string())?.solutions;
        let terminals = vset(c.d.n(), &c.w);
        for mode in MODES {
            let what = format!("directed {i}, {mode:?}");
            let got = collect(|sink| enum_minimal_directed_steiner_trees(&c.d, 0, &terminals, mode, &mut &mut *sink), edge_ids);
            let got = or_infeasible(got, &expected, &what)?;
            for s in &got {
                certs.record("directed steiner tree", certify::directed_steiner_tree(&c.d, 0, &c.w, s), s);
            }
            same_set(got, &expected, &what)?;
        }
    }
    for (i, c) in suite.induced.iter().enumerate() {
        let expected = oracle::brute_induced_steiner(&c.g, &c.w, DEFAULT_CAP_BITS).map_err(|e| e.to_string())?.solutions;
        let what = format!("induced {i}");
        let got = collect(
            |sink| enum_minimal_induced_steiner(&c.g, &vset(c.g.n(), &c.w), &mut &mut *sink),
            |x: &InducedSolution| x.vertices().to_vec(),
        );
        let got = or_infeasible(got, &expected, &what)?;
        for x in &got {
            certs.record("induced steiner subgraph", certify::induced_steiner(&c.g, &c.w, x), x);
        }
        same_set(got, &expected, &what)?;
    }

    let square = Graph::undirected(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let pairs = TerminalPairs::new([(0, 2), (1, 3)]);
    let forests = collect(|sink| enum_minimal_steiner_forests(&square, &pairs, Mode::Improved, &mut &mut *sink), edge_ids)
        .map_err(|e| e.to_string())?;
    ensure!(forests.len() == 4, "square gave {} forests", forests.len());
    let dag = Graph::directed(4, &[(0, 1), (1, 2), (1, 3), (0, 3)]).unwrap();
    let trees = collect(
        |sink| enum_minimal_directed_steiner_trees(&dag, 0, &vset(4, &[2, 3]), Mode::Improved, &mut &mut *sink),
        edge_ids,
    )
    .map_err(|e| e.to_string())?;
    ensure!(trees.len() == 2, "two-terminal DAG gave {} trees", trees.len());
    let c4 = Graph::undirected(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let induced = collect(
        |sink| enum_minimal_induced_steiner(&c4, &vset(4, &[0, 2]), &mut &mut *sink),
        |x: &InducedSolution| x.vertices().to_vec(),
    )
    .map_err(|e| e.to_string())?;
    ensure!(induced.len() == 2, "C4 gave {} induced solutions", induced.len());
    Ok(format!(
        "{} forest, {} terminal, {} directed, {} induced instances; square = 4, DAG = 2, C4 = 2",
        suite.forests.len(),
        suite.terminal.len(),
        suite.directed.len(),
        suite.induced.len()
    ))
}

fn criterion_4(certs: &Certificates) -> Check {
    let kinds = ["steiner tree", "steiner forest", "terminal steiner tree", "directed steiner tree", "induced steiner subgraph"];
    for kind in kinds {
        ensure!(certs.checked.get(kind).copied().unwrap_or(0) > 0, "no {kind} was certified");
    }
    ensure!(
        certs.failures.is_empty(),
        "{} failures, first: {}",
        certs.failures.len(),
        certs.failures[0]
    );
    let mut parts: Vec<String> = certs.checked.iter().map(|(k, v)| format!("{k} {v}")).collect();
    parts.sort();
    Ok(format!("all certified: {}", parts.join(", ")))
}

fn criterion_5(one: &[TreeCase], three: &SuiteThree) -> Check {
    let mut internal = 0;
    let mut low = 0;
    let mut tally = |n: usize, body: TreeBody| {
        for mode in [Mode::Improved, Mode::Queued] {
            let mut sink = |_: &EdgeSet| ControlFlow::Continue(());
            match profile_tree(n, mode, &mut sink, body) {
                Ok(rec) => {
                    let t = rec.tree.expect("tree runs record shape");
                    internal += t.internal;
                    low += t.low_branching;
                }
                Err(Error::Infeasible(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
    };
    for c in one {
        let w = vset(c.g.n(), &c.w);
        tally(c.g.n(), &|out| steiner_tree_events(&c.g, &w, true, out));
    }
    for c in &three.forests {
        let pairs = reduce_terminal_sets(&c.g, &c.sets).unwrap();
        tally(c.g.n(), &|out| steiner_forest_events(&c.g, &pairs, true, out));
    }
    for c in &three.terminal {
        if let Ok(inst) = TerminalSteinerInstance::new(&c.g, &vset(c.g.n(), &c.w)) {
            tally(c.g.n(), &|out| terminal_steiner_events(&inst, true, out));
        }
    }
    for c in &three.directed {
        if let Ok(inst) = DirectedSteinerInstance::new(&c.d, 0, &vset(c.d.n(), &c.w)) {
            tally(c.d.n(), &|out| directed_steiner_events(&inst, true, out));
        }
    }
    ensure!(low == 0, "{low} of {internal} internal nodes have fewer than two children");
    Ok(format!("{internal} internal nodes, all with >= 2 children"))
}

fn criterion_6(suite: &[TreeCase]) -> Check {
    let mut qualifying = 0;
    let mut worst_queue = 0;
    let mut worst_observed = 0;
    for (i, c) in suite.iter().enumerate() {
        let n = c.g.n();
        let count = oracle::brute_steiner_trees(&c.g, &c.w, DEFAULT_CAP_BITS).unwrap().count();
        if count < 2 * n {
            continue;
        }
        qualifying += 1;
        let w = vset(n, &c.w);
        let mut sink = |_: &EdgeSet| ControlFlow::Continue(());
        let rec = profile_tree(n, Mode::Queued, &mut sink, |out| steiner_tree_events(&c.g, &w, true, out)).map_err(|e| e.to_string())?;
        let q = rec.queue.clone().expect("queued runs report queue counters");
        let observed = rec.max_node_gap.unwrap_or(0);
        ensure!(rec.solutions() == count as u64, "instance {i}: {} of {count} solutions released", rec.solutions());
        ensure!(q.preprocessed >= n as u64, "instance {i}: only {} solutions buffered", q.preprocessed);
        ensure!(q.max_gap <= 3 && observed <= 3, "instance {i}: gap {} (queue) / {observed} (observed)", q.max_gap);
        ensure!(q.occupancy_violations == 0, "instance {i}: {} occupancy violations", q.occupancy_violations);
        ensure!(q.starved == 0, "instance {i}: {} releases found the buffer empty", q.starved);
        worst_queue = worst_queue.max(q.max_gap);
        worst_observed = worst_observed.max(observed);
    }
    ensure!(qualifying > 0, "no instance has 2n solutions");
    Ok(format!(
        "{qualifying} instances with >= 2n solutions; max gap {worst_queue} (queue) / {worst_observed} (observed)"
    ))
}

fn criterion_7() -> Check {
    let mut r = rng(7);
    for i in 0..100 {
        let n = r.gen_range(2..=6);
        let m = r.gen_range(n - 1..=(n * (n - 1) / 2).min(n + 3));
        let g = random_connected(n, m, &mut r);
        let k = r.gen_range(1..=4.min(n));
        let w = VertexSet::from_ids(n, random_subset(n, k, &mut r));
        let trees = enum_minimal_steiner_trees(&g, &w, Mode::Improved, &mut |_: &EdgeSet| ControlFlow::Continue(())).unwrap();
        let red = reduce_to_induced(&g, &w).unwrap();
        ensure!(is_claw_free(&red.graph), "case {i}: reduction is not claw-free");
        let induced =
            enum_minimal_induced_steiner(&red.graph, &red.terminals, &mut |_: &InducedSolution| ControlFlow::Continue(())).unwrap();
        ensure!(trees == induced, "case {i}: {trees} trees vs {induced} induced solutions");
    }
    Ok("100 cases, counts equal, every reduction claw-free".into())
}

fn component_count(g: &Graph) -> usize {
    connected_components(g).iter().max().map_or(0, |&m| m + 1)
}

fn bridges_agree(g: &Graph) -> bool {
    let b = bridges(g).unwrap();
    let base = component_count(g);
    g.edges()
        .iter()
        .all(|e| b.contains(e.id) == (component_count(&g.edge_subgraph(|f| f.id != e.id)) > base))
}

/// Parent array of `t` rooted at 0 by a plain DFS.
fn parents_from_zero(t: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0; n];
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        for w in t.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                depth[w] = depth[v] + 1;
                stack.push(w);
            }
        }
    }
    (parent, depth)
}

fn walk_up(parent: &[usize], depth: &[usize], mut u: usize, mut v: usize) -> usize {
    while depth[u] > depth[v] {
        u = parent[u];
    }
    while depth[v] > depth[u] {
        v = parent[v];
    }
    while u != v {
        u = parent[u];
        v = parent[v];
    }
    u
}

fn tree_path_edges(t: &Graph, parent: &[usize], depth: &[usize], a: usize, b: usize) -> Vec<usize> {
    let top = walk_up(parent, depth, a, b);
    let mut out = Vec::new();
    for mut x in [a, b] {
        while x != top {
            let p = parent[x];
            let e = t.out_edges(x).find(|e| e.other(x) == p).unwrap();
            out.push(e.id);
            x = p;
        }
    }
    out
}

fn criterion_8() -> Check {
    let mut exhaustive = 0;
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Graph::undirected(n, &edges).unwrap();
            ensure!(bridges_agree(&g), "bridges differ on {edges:?}");
            exhaustive += 1;
        }
    }
    let mut r = rng(8);
    for _ in 0..300 {
        let n = r.gen_range(1..=8);
        let g = random_graph(n, r.gen_range(0.1..0.7), &mut r);
        let mut pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        if let Some(&first) = pairs.first() {
            if r.gen_bool(0.3) {
                pairs.push(first);
            }
        }
        let g = Graph::undirected(n, &pairs).unwrap();
        ensure!(bridges_agree(&g), "bridges differ on {pairs:?}");
    }
    for _ in 0..200 {
        let n = r.gen_range(1..=64);
        let t = random_tree(n, &mut r);
        let all = EdgeSet::from_ids(t.edge_id_bound(), t.edges().iter().map(|e| e.id));
        let idx = lca_index(&t, &all, 0).unwrap();
        let (parent, depth) = parents_from_zero(&t);
        for u in 0..n {
            for v in 0..n {
                ensure!(idx.lca(u, v) == Some(walk_up(&parent, &depth, u, v)), "lca({u}, {v}) differs on n = {n}");
            }
        }
        let pairs = TerminalPairs::new((0..r.gen_range(0..6)).map(|_| {
            let s = random_subset(n, 2.min(n), &mut r);
            (s[0], *s.last().unwrap())
        }));
        let mut naive: Vec<usize> = pairs
            .pairs()
            .iter()
            .flat_map(|&(a, b)| tree_path_edges(&t, &parent, &depth, a, b))
            .collect();
        naive.sort_unstable();
        naive.dedup();
        let pruned = prune_by_lca(&t, &all, &pairs).unwrap();
        ensure!(pruned.to_vec() == naive, "pruning differs from the path union on n = {n}");
        if n <= 12 {
            for root in 0..n {
                ensure!(prune_by_lca_from(&t, &all, &pairs, &[root]).unwrap() == pruned, "pruning depends on root {root}");
            }
        }
    }
    Ok(format!("bridges: {exhaustive} exhaustive + 300 random graphs; lca and pruning: 200 trees"))
}

fn criterion_9() -> Check {
    let start = Instant::now();
    let mut per_size = Vec::new();
    for n in [500, 1000, 2000] {
        let mut r = rng(9 + n as u64);
        let g = random_connected(n, 3 * n, &mut r);
        let w = VertexSet::from_ids(n, random_subset(n, 20, &mut r));
        let mut count = 0u64;
        let mut sink = |_: &EdgeSet| {
            count += 1;
            if count >= 10_000 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        };
        let t0 = Instant::now();
        let rec = profile_tree(n, Mode::Queued, &mut sink, |out| steiner_tree_events(&g, &w, true, out)).map_err(|e| e.to_string())?;
        let elapsed = t0.elapsed();
        ensure!(rec.solutions() == 10_000, "n = {n}: only {} solutions", rec.solutions());
        let per = elapsed.as_secs_f64() / rec.solutions() as f64;
        per_size.push((n, g.n() + g.m(), per, rec.max_delay()));
    }
    let normalized: Vec<f64> = per_size.iter().map(|&(_, size, per, _)| per / size as f64).collect();
    let ratio = normalized.iter().cloned().fold(f64::MIN, f64::max) / normalized.iter().cloned().fold(f64::MAX, f64::min);
    let report: Vec<String> = per_size
        .iter()
        .map(|(n, _, per, max)| format!("n={n}: {:.1}us/solution (max {:.1?})", per * 1e6, max))
        .collect();
    let elapsed = start.elapsed();
    ensure!(ratio <= 3.0, "time per solution per (n+m) varies by {ratio:.2}x: {}", report.join(", "));
    ensure!(elapsed <= Duration::from_secs(120), "took {elapsed:?}");
    Ok(format!("{}; spread {ratio:.2}x; {:.1?} total", report.join(", "), elapsed))
}

fn main() {
    let one = suite_one();
    let three = suite_three();
    let mut certs = Certificates::default();
    let mut failed = 0;
    let mut report = |id: u8, name: &str, run: &mut dyn FnMut() -> Check| {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {id} PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id} FAIL {name}: {detail}");
            }
        }
    };
    report(1, "steiner trees match the oracle", &mut || criterion_1(&one, &mut certs));
    report(2, "s-t paths match the oracle", &mut || criterion_2(&mut certs));
    report(3, "forest, terminal, directed and induced variants match the oracle", &mut || {
        criterion_3(&three, &mut certs)
    });
    report(4, "minimality certificates", &mut || criterion_4(&certs));
    report(5, "improved trees branch at every internal node", &mut || criterion_5(&one, &three));
    report(6, "output queue delay and occupancy", &mut || criterion_6(&one));
    report(7, "line-graph reduction preserves counts", &mut || criterion_7());
    report(8, "subroutine oracles", &mut || criterion_8());
    report(9, "scaling", &mut || criterion_9());
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
