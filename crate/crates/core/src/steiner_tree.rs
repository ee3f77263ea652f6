//! Minimal Steiner trees of an undirected graph.
//!
//! A node of the search holds a tree whose leaves are all terminals. It picks
//! a terminal outside the tree and branches on every path from the tree to
//! that terminal. In improved mode the terminal is chosen so that at least two
//! such paths exist; when no terminal qualifies, the completion is unique and
//! the node becomes a leaf.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{bridges, connected_components, spanning_forest_containing, EdgeSet, Graph, VertexId, VertexSet};
use crate::path_enum::{set_paths, Path};
use crate::sink::{run_in_mode, Mode, SolutionSink, TreeSink};

/// A subtree of the input graph, kept as both its edge and vertex sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialTree {
    edges: EdgeSet,
    vertices: VertexSet,
}

impl PartialTree {
    /// The tree consisting of `root` alone.
    pub fn rooted_at(g: &Graph, root: VertexId) -> Result<Self> {
        g.check_vertex(root)?;
        Ok(Self {
            edges: EdgeSet::with_universe(g.edge_id_bound()),
            vertices: VertexSet::from_ids(g.n(), [root]),
        })
    }

    /// The subgraph formed by `edges`, which must be nonempty.
    pub fn from_edges(g: &Graph, edges: &EdgeSet) -> Result<Self> {
        let mut vertices = VertexSet::with_universe(g.n());
        for id in edges.iter() {
            let e = g.edge(id).ok_or(Error::UnknownEdge(id))?;
            vertices.insert(e.u);
            vertices.insert(e.v);
        }
        if vertices.is_empty() {
            return Err(Error::InvalidTerminals("a tree needs at least one vertex".into()));
        }
        Ok(Self {
            edges: edges.clone(),
            vertices,
        })
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    /// Adds a path that starts in the tree; returns the vertices it added.
    pub(crate) fn extend(&mut self, path: &Path) -> Vec<VertexId> {
        for &id in &path.edges {
            self.edges.insert(id);
        }
        path.vertices
            .iter()
            .copied()
            .filter(|&v| self.vertices.insert(v))
            .collect()
    }

    pub(crate) fn retract(&mut self, path: &Path, added: &[VertexId]) {
        for &id in &path.edges {
            self.edges.remove(id);
        }
        for &v in added {
            self.vertices.remove(v);
        }
    }
}

/// Outcome of the branching test for a partial tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Branching {
    /// A terminal reachable from the tree by at least two valid paths.
    Terminal(VertexId),
    /// The only minimal Steiner tree containing the partial tree.
    Complete(EdgeSet),
}

pub(crate) fn check_instance(g: &Graph, terminals: &VertexSet) -> Result<()> {
    g.require_undirected()?;
    if terminals.is_empty() {
        return Err(Error::InvalidTerminals("terminal set is empty".into()));
    }
    for w in terminals.iter() {
        g.check_vertex(w)?;
    }
    let label = connected_components(g);
    let first = terminals.iter().next().unwrap();
    if let Some(w) = terminals.iter().find(|&w| label[w] != label[first]) {
        return Err(Error::Infeasible(format!("terminals {first} and {w} are not connected")));
    }
    Ok(())
}

/// Removes non-terminal leaves from the forest `forest` until none is left.
pub(crate) fn prune_leaves(g: &Graph, forest: &mut EdgeSet, keep: impl Fn(VertexId) -> bool) {
    let mut degree = vec![0usize; g.n()];
    for id in forest.iter() {
        let e = g.edge(id).unwrap();
        degree[e.u] += 1;
        degree[e.v] += 1;
    }
    let mut leaves: Vec<VertexId> = (0..g.n()).filter(|&v| degree[v] == 1 && !keep(v)).collect();
    while let Some(v) = leaves.pop() {
        if degree[v] != 1 {
            continue;
        }
        let e = *g.out_edges(v).find(|e| forest.contains(e.id)).unwrap();
        forest.remove(e.id);
        degree[v] = 0;
        let u = e.other(v);
        degree[u] -= 1;
        if degree[u] == 1 && !keep(u) {
            leaves.push(u);
        }
    }
}

fn minimal_completion(g: &Graph, terminals: &VertexSet, partial: &PartialTree) -> EdgeSet {
    let mut forest = spanning_forest_containing(g, &partial.edges).expect("partial tree is a forest of the graph");
    prune_leaves(g, &mut forest, |v| terminals.contains(v));
    forest
}

/// A minimal Steiner tree containing `partial`: a spanning tree grown from it
/// by smallest edge id, with non-terminal leaves pruned.
pub fn complete_minimally(g: &Graph, terminals: &VertexSet, partial: &PartialTree) -> Result<EdgeSet> {
    check_instance(g, terminals)?;
    let label = connected_components(g);
    let w = terminals.iter().next().unwrap();
    if partial.vertices.iter().any(|v| label[v] != label[w]) {
        return Err(Error::Disconnected);
    }
    spanning_forest_containing(g, &partial.edges)?;
    Ok(minimal_completion(g, terminals, partial))
}

fn branching(g: &Graph, terminals: &VertexSet, partial: &PartialTree, bridges: &EdgeSet) -> Branching {
    let completion = minimal_completion(g, terminals, partial);
    let mut visited = partial.vertices.clone();
    let mut flagged = VertexSet::with_universe(g.n());
    let mut queue: VecDeque<VertexId> = partial.vertices.iter().collect();
    while let Some(v) = queue.pop_front() {
        for e in g.out_edges(v) {
            if !completion.contains(e.id) || partial.edges.contains(e.id) {
                continue;
            }
            let w = e.other(v);
            if visited.insert(w) {
                if flagged.contains(v) || !bridges.contains(e.id) {
                    flagged.insert(w);
                }
                queue.push_back(w);
            }
        }
    }
    match terminals.iter().find(|&w| flagged.contains(w)) {
        Some(w) => Branching::Terminal(w),
        None => Branching::Complete(completion),
    }
}

/// Either a terminal outside `partial` with at least two paths from it, or the
/// unique minimal Steiner tree containing `partial`.
pub fn find_branching_terminal(g: &Graph, terminals: &VertexSet, partial: &PartialTree) -> Result<Branching> {
    check_instance(g, terminals)?;
    Ok(branching(g, terminals, partial, &bridges(g)?))
}

struct Search<'a> {
    g: &'a Graph,
    terminals: &'a VertexSet,
    /// Present in improved mode.
    bridges: Option<EdgeSet>,
    tree: PartialTree,
    uncovered: usize,
}

impl Search<'_> {
    fn visit(&mut self, out: &mut dyn TreeSink<EdgeSet>) -> ControlFlow<()> {
        if self.uncovered == 0 {
            return out.leaf(&self.tree.edges);
        }
        let target = match &self.bridges {
            None => self.terminals.iter().find(|&w| !self.tree.vertices.contains(w)).unwrap(),
            Some(b) => match branching(self.g, self.terminals, &self.tree, b) {
                Branching::Terminal(w) => w,
                Branching::Complete(t) => return out.leaf(&t),
            },
        };
        out.enter(&self.tree.edges)?;
        let from = self.tree.vertices.clone();
        let to = VertexSet::from_ids(self.g.n(), [target]);
        let g = self.g;
        let (_, flow) = set_paths(g, &from, &to, &mut |p| {
            let added = self.tree.extend(p);
            let newly = added.iter().filter(|&&v| self.terminals.contains(v)).count();
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

/// Reports the enumeration tree of minimal Steiner trees as events; leaves
/// carry the solutions.
pub fn steiner_tree_events(
    g: &Graph,
    terminals: &VertexSet,
    improved: bool,
    out: &mut dyn TreeSink<EdgeSet>,
) -> Result<ControlFlow<()>> {
    check_instance(g, terminals)?;
    let root = terminals.iter().next().unwrap();
    let mut search = Search {
        g,
        terminals,
        bridges: if improved { Some(bridges(g)?) } else { None },
        tree: PartialTree::rooted_at(g, root)?,
        uncovered: terminals.len() - 1,
    };
    Ok(search.visit(out))
}

/// Enumerates every minimal Steiner tree of `(g, terminals)` as a set of edge
/// ids. Returns the number of solutions passed to `sink`.
pub fn enum_minimal_steiner_trees(
    g: &Graph,
    terminals: &VertexSet,
    mode: Mode,
    sink: &mut impl SolutionSink<EdgeSet>,
) -> Result<u64> {
    run_in_mode(g.n(), mode, sink, |out| steiner_tree_events(g, terminals, mode.is_improved(), out))
}
