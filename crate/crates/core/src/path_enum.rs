//! Linear-delay listing of simple s-t paths and S-T paths.
//!
//! Each search node holds a prefix `P` ending at `s'` and a path `Q` from `s'`
//! to `t` found by BFS. Its children are the prefixes `P∘Q[..=j]` for which the
//! rest can still be completed without the arc `Q[j] -> Q[j+1]`, tried from the
//! largest `j` down. Completability of all `j` in one sweep is answered by
//! reachability flags that only ever switch on. Nodes at even depth output
//! their path on entry and nodes at odd depth on exit, so outputs are never
//! more than a few steps apart.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId, VertexSet};
use crate::sink::SolutionSink;

const NONE: usize = usize::MAX;

/// Receives the vertex and arc sequences of each path found.
pub(crate) type PathOut<'a> = dyn FnMut(&[usize], &[usize]) -> ControlFlow<()> + 'a;

/// A simple path, as its vertex sequence and the ids of the edges between them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Path {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

/// Counters from one run; `max_gap` is the largest number of search steps
/// (node discoveries and returns to a node) between consecutive outputs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathStats {
    pub solutions: u64,
    pub nodes: u64,
    pub max_gap: u64,
}

/// Directed multigraph in compressed form. Out-lists are sorted by head, so
/// BFS visits neighbours in increasing id order.
#[derive(Clone, Debug)]
pub(crate) struct ArcGraph {
    n: usize,
    tail: Vec<usize>,
    head: Vec<usize>,
    label: Vec<EdgeId>,
    out_start: Vec<usize>,
    out_arcs: Vec<usize>,
    in_start: Vec<usize>,
    in_arcs: Vec<usize>,
}

impl ArcGraph {
    pub(crate) fn new(n: usize, mut arcs: Vec<(usize, usize, EdgeId)>) -> Self {
        arcs.sort_unstable_by_key(|&(u, v, id)| (u, v, id));
        let tail: Vec<_> = arcs.iter().map(|a| a.0).collect();
        let head: Vec<_> = arcs.iter().map(|a| a.1).collect();
        let label = arcs.iter().map(|a| a.2).collect();
        let (out_start, out_arcs) = Self::csr(n, &tail);
        let (in_start, in_arcs) = Self::csr(n, &head);
        Self {
            n,
            tail,
            head,
            label,
            out_start,
            out_arcs,
            in_start,
            in_arcs,
        }
    }

    /// Arcs of `g`, with every undirected edge doubled.
    pub(crate) fn arcs_of(g: &Graph) -> Vec<(usize, usize, EdgeId)> {
        let mut arcs = Vec::with_capacity(2 * g.m());
        for e in g.edges() {
            arcs.push((e.u, e.v, e.id));
            if !g.is_directed() {
                arcs.push((e.v, e.u, e.id));
            }
        }
        arcs
    }

    fn csr(n: usize, key: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut start = vec![0; n + 1];
        for &k in key {
            start[k + 1] += 1;
        }
        for i in 0..n {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut list = vec![0; key.len()];
        for (a, &k) in key.iter().enumerate() {
            list[fill[k]] = a;
            fill[k] += 1;
        }
        (start, list)
    }

    fn out(&self, v: usize) -> &[usize] {
        &self.out_arcs[self.out_start[v]..self.out_start[v + 1]]
    }

    fn inc(&self, v: usize) -> &[usize] {
        &self.in_arcs[self.in_start[v]..self.in_start[v + 1]]
    }
}

struct Frame {
    /// Prefix length (in vertices) at this node.
    plen: usize,
    depth: usize,
    /// Child currently being explored and the arc it excludes.
    child: usize,
    child_arc: usize,
}

/// Search state shared by all nodes; only the prefix and a few scalars per
/// node live on the explicit stack.
pub(crate) struct PathSearch<'g> {
    g: &'g ArcGraph,
    t: usize,
    prefix_v: Vec<usize>,
    prefix_a: Vec<usize>,
    /// Prefix vertices other than the current end.
    removed: Vec<bool>,
    /// Arcs excluded by ancestors with the same prefix end.
    blocked: Vec<bool>,
    q_v: Vec<usize>,
    q_a: Vec<usize>,
    pos_in_q: Vec<usize>,
    reach: Vec<bool>,
    reached: Vec<usize>,
    work: Vec<usize>,
    pred: Vec<usize>,
    seen: Vec<bool>,
    touched: Vec<usize>,
    queue: VecDeque<usize>,
    stats: PathStats,
    since_emit: u64,
}

impl<'g> PathSearch<'g> {
    pub(crate) fn new(g: &'g ArcGraph, s: usize, t: usize) -> Self {
        let n = g.n;
        let removed = vec![false; n];
        Self {
            g,
            t,
            prefix_v: vec![s],
            prefix_a: Vec::new(),
            removed,
            blocked: vec![false; g.head.len()],
            q_v: Vec::new(),
            q_a: Vec::new(),
            pos_in_q: vec![NONE; n],
            reach: vec![false; n],
            reached: Vec::new(),
            work: Vec::new(),
            pred: vec![NONE; n],
            seen: vec![false; n],
            touched: Vec::new(),
            queue: VecDeque::new(),
            stats: PathStats::default(),
            since_emit: 0,
        }
    }

    /// BFS from the prefix end to `t` over allowed vertices and arcs; stores
    /// the result in `q_v`/`q_a`.
    fn find_q(&mut self) -> bool {
        for &v in &self.q_v {
            self.pos_in_q[v] = NONE;
        }
        self.q_v.clear();
        self.q_a.clear();
        let start = *self.prefix_v.last().unwrap();
        self.seen[start] = true;
        self.touched.push(start);
        self.queue.push_back(start);
        let mut found = false;
        while let Some(v) = self.queue.pop_front() {
            if v == self.t {
                found = true;
                break;
            }
            for &a in self.g.out(v) {
                let w = self.g.head[a];
                if self.blocked[a] || self.removed[w] || self.seen[w] {
                    continue;
                }
                self.seen[w] = true;
                self.pred[w] = a;
                self.touched.push(w);
                self.queue.push_back(w);
            }
        }
        self.queue.clear();
        if found {
            let mut v = self.t;
            while v != start {
                let a = self.pred[v];
                self.q_a.push(a);
                self.q_v.push(v);
                v = self.g.tail[a];
            }
            self.q_v.push(start);
            self.q_v.reverse();
            self.q_a.reverse();
            for (i, &v) in self.q_v.iter().enumerate() {
                self.pos_in_q[v] = i;
            }
        }
        for &v in &self.touched {
            self.seen[v] = false;
            self.pred[v] = NONE;
        }
        self.touched.clear();
        found
    }

    #[inline]
    fn vertex_allowed(&self, u: usize, level: usize) -> bool {
        !self.removed[u] && (self.pos_in_q[u] == NONE || self.pos_in_q[u] >= level)
    }

    #[inline]
    fn arc_allowed(&self, a: usize, level: usize) -> bool {
        !self.blocked[a] && a != self.q_a[level]
    }

    fn mark(&mut self, v: usize, level: usize) {
        if self.reach[v] {
            return;
        }
        self.reach[v] = true;
        self.reached.push(v);
        self.work.push(v);
        while let Some(x) = self.work.pop() {
            for &a in self.g.inc(x) {
                let u = self.g.tail[a];
                if !self.reach[u] && self.vertex_allowed(u, level) && self.arc_allowed(a, level) {
                    self.reach[u] = true;
                    self.reached.push(u);
                    self.work.push(u);
                }
            }
        }
    }

    /// Recomputes the flags from scratch for the residual graph of child `level`.
    fn flags_at(&mut self, level: usize) {
        for &v in &self.reached {
            self.reach[v] = false;
        }
        self.reached.clear();
        self.mark(self.t, level);
    }

    /// Moves the flags from child `level` to child `level - 1`.
    fn step_down(&mut self, level: usize) {
        let lower = level - 1;
        self.mark(self.q_v[level], lower);
        let v = self.q_v[lower];
        if !self.reach[v] {
            let hit = self
                .g
                .out(v)
                .iter()
                .any(|&a| self.arc_allowed(a, lower) && self.reach[self.g.head[a]]);
            if hit {
                self.mark(v, lower);
            }
        }
    }

    /// Largest child index below `level` whose residual graph still reaches
    /// `t`, given flags valid at `level`.
    fn next_below(&mut self, mut level: usize) -> Option<usize> {
        while level > 0 {
            self.step_down(level);
            level -= 1;
            if self.reach[self.q_v[level]] {
                return Some(level);
            }
        }
        None
    }

    /// Largest extendible child index at or below `level`.
    fn first_at_or_below(&mut self, level: usize) -> Option<usize> {
        self.flags_at(level);
        if self.reach[self.q_v[level]] {
            Some(level)
        } else {
            self.next_below(level)
        }
    }

    fn emit(&mut self, out: &mut PathOut<'_>) -> ControlFlow<()> {
        self.stats.solutions += 1;
        self.stats.max_gap = self.stats.max_gap.max(self.since_emit);
        self.since_emit = 0;
        let mut vs = self.prefix_v.clone();
        vs.extend_from_slice(&self.q_v[1..]);
        let mut arcs = self.prefix_a.clone();
        arcs.extend_from_slice(&self.q_a);
        out(&vs, &arcs)
    }

    fn step(&mut self) {
        self.since_emit += 1;
    }

    /// Runs the whole search; `out` receives vertex and arc sequences.
    pub(crate) fn run(&mut self, out: &mut PathOut<'_>) -> ControlFlow<()> {
        if !self.find_q() {
            return ControlFlow::Continue(());
        }
        // Frames exist only for nodes that have a child in progress.
        let mut stack: Vec<Frame> = Vec::new();
        let mut depth = 0;
        // True right after discovering a node, false after returning to the
        // node on top of the stack.
        let mut fresh = true;
        loop {
            self.step();
            let next = if fresh {
                self.stats.nodes += 1;
                if depth % 2 == 0 {
                    self.emit(out)?;
                }
                self.first_at_or_below(self.q_v.len() - 2)
            } else {
                let frame = stack.last().unwrap();
                let (j, arc, plen) = (frame.child, frame.child_arc, frame.plen);
                for x in plen - 1..plen - 1 + j {
                    self.removed[self.prefix_v[x]] = false;
                }
                self.prefix_v.truncate(plen);
                self.prefix_a.truncate(plen - 1);
                self.blocked[arc] = false;
                let found = self.find_q();
                debug_assert!(found);
                self.flags_at(j);
                self.next_below(j)
            };
            match next {
                Some(j) => {
                    if fresh {
                        stack.push(Frame {
                            plen: self.prefix_v.len(),
                            depth,
                            child: j,
                            child_arc: self.q_a[j],
                        });
                    } else {
                        let frame = stack.last_mut().unwrap();
                        frame.child = j;
                        frame.child_arc = self.q_a[j];
                    }
                    self.blocked[self.q_a[j]] = true;
                    for x in 0..j {
                        self.removed[self.q_v[x]] = true;
                        self.prefix_v.push(self.q_v[x + 1]);
                        self.prefix_a.push(self.q_a[x]);
                    }
                    depth += 1;
                    let found = self.find_q();
                    debug_assert!(found, "extendible child without a completion");
                    fresh = true;
                }
                None => {
                    if depth % 2 == 1 {
                        self.emit(out)?;
                    }
                    if !fresh {
                        stack.pop();
                    }
                    match stack.last() {
                        Some(parent) => depth = parent.depth,
                        None => return ControlFlow::Continue(()),
                    }
                    fresh = false;
                }
            }
        }
    }
}

/// Lists every simple `s`-`t` path of `g`. Undirected edges may be used in
/// either direction.
pub fn enum_st_paths(g: &Graph, s: VertexId, t: VertexId, sink: &mut impl SolutionSink<Path>) -> Result<u64> {
    Ok(trace_st_paths(g, s, t, sink)?.solutions)
}

/// [`enum_st_paths`] returning search counters as well.
pub fn trace_st_paths(g: &Graph, s: VertexId, t: VertexId, sink: &mut impl SolutionSink<Path>) -> Result<PathStats> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::InvalidTerminals("source and target coincide".into()));
    }
    let arcs = ArcGraph::new(g.n(), ArcGraph::arcs_of(g));
    let mut search = PathSearch::new(&arcs, s, t);
    let _ = search.run(&mut |vs, as_| {
        let path = Path {
            vertices: vs.to_vec(),
            edges: as_.iter().map(|&a| arcs.label[a]).collect(),
        };
        sink.emit(&path)
    });
    Ok(search.stats)
}

/// Lists every path that starts in `from`, ends in `to` and has no internal
/// vertex in either set.
pub fn enum_set_paths(
    g: &Graph,
    from: &VertexSet,
    to: &VertexSet,
    sink: &mut impl SolutionSink<Path>,
) -> Result<u64> {
    set_paths(g, from, to, &mut |p: &Path| sink.emit(p)).map(|c| c.0)
}

/// Shared by the tree enumerators; returns the count and whether the sink
/// asked to stop.
pub(crate) fn set_paths(
    g: &Graph,
    from: &VertexSet,
    to: &VertexSet,
    sink: &mut dyn FnMut(&Path) -> ControlFlow<()>,
) -> Result<(u64, ControlFlow<()>)> {
    if from.is_empty() || to.is_empty() {
        return Err(Error::InvalidTerminals("endpoint sets must be nonempty".into()));
    }
    for v in from.iter().chain(to.iter()) {
        g.check_vertex(v)?;
        if from.contains(v) && to.contains(v) {
            return Err(Error::InvalidTerminals(format!("vertex {v} is in both endpoint sets")));
        }
    }
    let n = g.n();
    let (src, dst) = (n, n + 1);
    let mut arcs: Vec<_> = ArcGraph::arcs_of(g)
        .into_iter()
        .filter(|&(u, v, _)| !from.contains(v) && !to.contains(u))
        .collect();
    arcs.extend(from.iter().map(|v| (src, v, NONE)));
    arcs.extend(to.iter().map(|v| (v, dst, NONE)));
    let ag = ArcGraph::new(n + 2, arcs);
    let mut search = PathSearch::new(&ag, src, dst);
    let flow = search.run(&mut |vs, as_| {
        let path = Path {
            vertices: vs[1..vs.len() - 1].to_vec(),
            edges: as_[1..as_.len() - 1].iter().map(|&a| ag.label[a]).collect(),
        };
        sink(&path)
    });
    Ok((search.stats.solutions, flow))
}

/// For the prefix `prefix` (ending at `q[0]`) and the completion `q`, returns
/// the largest `i' < i` such that the first `i'` vertices of `q` can still be
/// extended to the target without using the edge `q[i'-1] -> q[i']`.
/// Indices count vertices, so `i` ranges over `1..q.len()`.
pub fn next_extendible_index(g: &Graph, prefix: &[VertexId], q: &[VertexId], i: usize) -> Result<Option<usize>> {
    if q.len() < 2 || prefix.last() != q.first() || i == 0 || i >= q.len() {
        return Err(Error::InvalidTerminals("prefix and completion do not fit together".into()));
    }
    let ag = ArcGraph::new(g.n(), ArcGraph::arcs_of(g));
    let t = *q.last().unwrap();
    let mut search = PathSearch::new(&ag, prefix[0], t);
    for &v in &prefix[..prefix.len() - 1] {
        g.check_vertex(v)?;
        search.removed[v] = true;
    }
    for (k, w) in q.windows(2).enumerate() {
        let arc = ag
            .out(w[0])
            .iter()
            .copied()
            .find(|&a| ag.head[a] == w[1])
            .ok_or_else(|| Error::InvalidTerminals(format!("no edge from {} to {}", w[0], w[1])))?;
        search.q_a.push(arc);
        search.pos_in_q[w[0]] = k;
    }
    search.q_v = q.to_vec();
    search.pos_in_q[t] = q.len() - 1;
    search.flags_at(i - 1);
    Ok(search.next_below(i - 1).map(|j| j + 1))
}
