//! Minimal directed Steiner trees rooted at a fixed vertex.
//!
//! A search node holds a directed tree from the root whose sinks are all
//! terminals, and branches on the directed paths from the tree to a terminal
//! it does not reach yet. The improved test works in `D / E(T)`: it grows a
//! DFS tree, keeps the part `T*` that reaches the terminals, and looks for an
//! arc-disjoint detour from a later to an earlier vertex of `T*` in post-order.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{contract, EdgeSet, Graph, VertexId, VertexSet};
use crate::path_enum::set_paths;
use crate::sink::{run_in_mode, Mode, SolutionSink, TreeSink};
use crate::steiner_tree::PartialTree;

/// A validated instance. Arcs leaving vertices the root cannot reach are dropped.
#[derive(Clone, Debug)]
pub struct DirectedSteinerInstance {
    graph: Graph,
    root: VertexId,
    terminals: VertexSet,
}

fn reachable(d: &Graph, from: VertexId) -> VertexSet {
    let mut seen = VertexSet::from_ids(d.n(), [from]);
    let mut stack = vec![from];
    while let Some(v) = stack.pop() {
        for x in d.neighbors(v) {
            if seen.insert(x) {
                stack.push(x);
            }
        }
    }
    seen
}

impl DirectedSteinerInstance {
    pub fn new(d: &Graph, root: VertexId, terminals: &VertexSet) -> Result<Self> {
        if !d.is_directed() {
            return Err(Error::RequiresDirected);
        }
        d.check_vertex(root)?;
        for w in terminals.iter() {
            d.check_vertex(w)?;
        }
        if terminals.contains(root) {
            return Err(Error::InvalidTerminals(format!("root {root} cannot be a terminal")));
        }
        let seen = reachable(d, root);
        if let Some(w) = terminals.iter().find(|&w| !seen.contains(w)) {
            return Err(Error::Infeasible(format!("terminal {w} is not reachable from {root}")));
        }
        Ok(Self {
            graph: d.edge_subgraph(|e| seen.contains(e.u)),
            root,
            terminals: terminals.clone(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn terminals(&self) -> &VertexSet {
        &self.terminals
    }
}

/// Outcome of the two-solution test on a contracted instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SecondSolution {
    /// A terminal with at least two directed paths from the root.
    Witness(VertexId),
    /// Arcs of the only minimal directed Steiner tree.
    Unique(EdgeSet),
}

/// Decides whether `(d, terminals, root)` has more than one minimal directed
/// Steiner tree. Every terminal must be reachable from `root`.
pub fn has_second_solution(d: &Graph, root: VertexId, terminals: &VertexSet) -> Result<SecondSolution> {
    if !d.is_directed() {
        return Err(Error::RequiresDirected);
    }
    d.check_vertex(root)?;
    let n = d.n();

    // DFS tree from the root, arcs taken in id order.
    let mut parent = vec![None; n];
    let mut post = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = VertexSet::from_ids(n, [root]);
    let mut stack = vec![(root, 0)];
    while let Some((v, i)) = stack.last_mut() {
        let v = *v;
        if let Some(e) = d.out_edge_at(v, *i) {
            *i += 1;
            if seen.insert(e.v) {
                parent[e.v] = Some((v, e.id));
                stack.push((e.v, 0));
            }
        } else {
            post[v] = order.len();
            order.push(v);
            stack.pop();
        }
    }
    if let Some(w) = terminals.iter().find(|&w| !seen.contains(w)) {
        return Err(Error::Infeasible(format!("terminal {w} is not reachable from {root}")));
    }

    // T*: DFS-tree vertices with a terminal at or below them.
    let mut keep = VertexSet::from_ids(n, [root]);
    let mut size = vec![1usize; n];
    let mut tree_arcs = EdgeSet::with_universe(d.edge_id_bound());
    for &v in &order {
        if terminals.contains(v) {
            keep.insert(v);
        }
        if let Some((p, id)) = parent[v] {
            size[p] += size[v];
            if keep.contains(v) {
                keep.insert(p);
                tree_arcs.insert(id);
            }
        }
    }

    // Sweep from the latest vertex of T*. A search stops at the first other
    // vertex of T* it meets, which is necessarily earlier in post-order.
    let mut removed = VertexSet::with_universe(n);
    for &v in order.iter().rev().filter(|&&v| keep.contains(v)) {
        if !removed.insert(v) {
            continue;
        }
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for e in d.out_edges(x).filter(|e| !tree_arcs.contains(e.id)) {
                if removed.contains(e.v) {
                    continue;
                }
                if keep.contains(e.v) {
                    let u = e.v;
                    let below = post[u] + 1 - size[u]..=post[u];
                    let w = terminals
                        .iter()
                        .find(|&w| below.contains(&post[w]))
                        .expect("every vertex of T* has a terminal below it");
                    return Ok(SecondSolution::Witness(w));
                }
                removed.insert(e.v);
                queue.push_back(e.v);
            }
        }
    }
    Ok(SecondSolution::Unique(tree_arcs))
}

struct Search<'a> {
    inst: &'a DirectedSteinerInstance,
    improved: bool,
    tree: PartialTree,
    uncovered: usize,
}

impl Search<'_> {
    fn visit(&mut self, out: &mut dyn TreeSink<EdgeSet>) -> ControlFlow<()> {
        if self.uncovered == 0 {
            return out.leaf(self.tree.edges());
        }
        let d = &self.inst.graph;
        let terminals = &self.inst.terminals;
        let target = if self.improved {
            let c = contract(d, self.tree.edges()).expect("tree arcs belong to the graph");
            let open = VertexSet::from_ids(
                c.graph.n(),
                terminals.iter().filter(|&w| !self.tree.vertices().contains(w)).map(|w| c.map[w]),
            );
            match has_second_solution(&c.graph, c.map[self.inst.root], &open).expect("terminals stay reachable") {
                SecondSolution::Witness(w) => c.preimage(w).next().unwrap(),
                SecondSolution::Unique(arcs) => {
                    let mut done = self.tree.edges().clone();
                    for id in arcs.iter() {
                        done.insert(id);
                    }
                    return out.leaf(&done);
                }
            }
        } else {
            terminals.iter().find(|&w| !self.tree.vertices().contains(w)).unwrap()
        };
        out.enter(self.tree.edges())?;
        let from = self.tree.vertices().clone();
        let to = VertexSet::from_ids(d.n(), [target]);
        let (_, flow) = set_paths(d, &from, &to, &mut |p| {
            let added = self.tree.extend(p);
            let newly = added.iter().filter(|&&v| terminals.contains(v)).count();
            self.uncovered -= newly;
            let flow = self.visit(out);
            self.uncovered += newly;
            self.tree.retract(p, &added);
            flow
        })
        .expect("endpoint sets are disjoint and nonempty");
        flow?;
        out.exit()
    }
}

/// Reports the enumeration tree of minimal directed Steiner trees as events.
pub fn directed_steiner_events(
    inst: &DirectedSteinerInstance,
    improved: bool,
    out: &mut dyn TreeSink<EdgeSet>,
) -> Result<ControlFlow<()>> {
    let mut search = Search {
        inst,
        improved,
        tree: PartialTree::rooted_at(&inst.graph, inst.root)?,
        uncovered: inst.terminals.len(),
    };
    Ok(search.visit(out))
}

/// Enumerates every minimal directed Steiner tree of `(d, terminals, root)` as
/// a set of arc ids. Returns the number of solutions passed to `sink`.
pub fn enum_minimal_directed_steiner_trees(
    d: &Graph,
    root: VertexId,
    terminals: &VertexSet,
    mode: Mode,
    sink: &mut impl SolutionSink<EdgeSet>,
) -> Result<u64> {
    let inst = DirectedSteinerInstance::new(d, root, terminals)?;
    run_in_mode(d.n(), mode, sink, |out| directed_steiner_events(&inst, mode.is_improved(), out))
}
