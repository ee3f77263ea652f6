//! Minimal terminal Steiner trees: trees whose leaves are exactly the terminals.
//!
//! With three or more terminals, the non-terminal part of a solution lies in
//! a single component `C` of `G - W` that is adjacent to every terminal. The
//! search first picks a path between two fixed terminals, which fixes `C`,
//! then attaches the remaining terminals one at a time by paths through `C`.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{bridges, components, connected_components, EdgeSet, Graph, VertexId, VertexSet};
use crate::path_enum::{set_paths, Path};
use crate::sink::{run_in_mode, Mode, SolutionSink, TreeSink};
use crate::steiner_tree::{Branching, PartialTree};

/// A validated instance. Edges between terminals and edges into components
/// of `G - W` that miss some terminal are dropped, since no solution uses them.
#[derive(Clone, Debug)]
pub struct TerminalSteinerInstance {
    graph: Graph,
    terminals: VertexSet,
    feasible: Vec<VertexSet>,
}

impl TerminalSteinerInstance {
    pub fn new(g: &Graph, terminals: &VertexSet) -> Result<Self> {
        g.require_undirected()?;
        for w in terminals.iter() {
            g.check_vertex(w)?;
        }
        if terminals.len() < 2 {
            return Err(Error::InvalidTerminals("at least two terminals are required".into()));
        }
        let inner = VertexSet::from_ids(g.n(), (0..g.n()).filter(|&v| !terminals.contains(v)));
        let feasible: Vec<VertexSet> = components(g, &inner)
            .into_iter()
            .filter(|c| {
                let mut touched = VertexSet::with_universe(g.n());
                for v in c.iter() {
                    for x in g.neighbors(v).filter(|&x| terminals.contains(x)) {
                        touched.insert(x);
                    }
                }
                touched.len() == terminals.len()
            })
            .collect();
        if terminals.len() == 2 {
            let label = connected_components(g);
            let ends = terminals.to_vec();
            if label[ends[0]] != label[ends[1]] {
                return Err(Error::Infeasible(format!("terminals {} and {} are not connected", ends[0], ends[1])));
            }
            return Ok(Self {
                graph: g.clone(),
                terminals: terminals.clone(),
                feasible,
            });
        }
        if feasible.is_empty() {
            return Err(Error::Infeasible("no component of the non-terminals touches every terminal".into()));
        }
        let usable = |v: VertexId| terminals.contains(v) || feasible.iter().any(|c| c.contains(v));
        let graph = g.edge_subgraph(|e| {
            !(terminals.contains(e.u) && terminals.contains(e.v)) && usable(e.u) && usable(e.v)
        });
        Ok(Self {
            graph,
            terminals: terminals.clone(),
            feasible,
        })
    }

    /// The graph the search runs on, after dropping unusable edges.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn terminals(&self) -> &VertexSet {
        &self.terminals
    }

    /// Components of `G - W` adjacent to every terminal.
    pub fn feasible_components(&self) -> &[VertexSet] {
        &self.feasible
    }

    fn component_of(&self, v: VertexId) -> &VertexSet {
        self.feasible.iter().find(|c| c.contains(v)).expect("tree interior lies in a feasible component")
    }
}

/// In improved mode: a terminal with at least two valid paths to `tree`, or
/// the unique completion. `component` is the component holding the tree's
/// non-terminal vertices.
fn branching(inst: &TerminalSteinerInstance, tree: &PartialTree, component: &VertexSet) -> Branching {
    let g = &inst.graph;
    let inside = g.induced(component);
    let cut = bridges(&inside).expect("induced subgraph is undirected");
    let sources: Vec<VertexId> = tree.vertices().iter().filter(|&v| !inst.terminals.contains(v)).collect();
    let mut visited = VertexSet::from_ids(g.n(), sources.iter().copied());
    let mut flagged = VertexSet::with_universe(g.n());
    let mut via = vec![None; g.n()];
    let mut queue: VecDeque<VertexId> = sources.into_iter().collect();
    while let Some(v) = queue.pop_front() {
        for e in inside.out_edges(v) {
            let x = e.other(v);
            if visited.insert(x) {
                via[x] = Some((e.id, v));
                if flagged.contains(v) || !cut.contains(e.id) {
                    flagged.insert(x);
                }
                queue.push_back(x);
            }
        }
    }
    let mut completion = tree.edges().clone();
    for w in inst.terminals.iter().filter(|&w| !tree.vertices().contains(w)) {
        let mut links = g.out_edges(w).filter(|e| component.contains(e.other(w)));
        let first = *links.next().expect("feasible component touches every terminal");
        let x = first.other(w);
        if links.next().is_some() || flagged.contains(x) {
            return Branching::Terminal(w);
        }
        completion.insert(first.id);
        let mut at = x;
        while let Some((id, prev)) = via[at] {
            completion.insert(id);
            at = prev;
        }
    }
    Branching::Complete(completion)
}

struct Search<'a> {
    inst: &'a TerminalSteinerInstance,
    improved: bool,
    tree: PartialTree,
    uncovered: usize,
}

impl Search<'_> {
    fn with_path(&mut self, p: &Path, out: &mut dyn TreeSink<EdgeSet>) -> ControlFlow<()> {
        let added = self.tree.extend(p);
        let newly = added.iter().filter(|&&v| self.inst.terminals.contains(v)).count();
        self.uncovered -= newly;
        let flow = self.visit(out);
        self.uncovered += newly;
        self.tree.retract(p, &added);
        flow
    }

    fn visit(&mut self, out: &mut dyn TreeSink<EdgeSet>) -> ControlFlow<()> {
        if self.uncovered == 0 {
            return out.leaf(self.tree.edges());
        }
        let terminals = &self.inst.terminals;
        let inner = self.tree.vertices().iter().find(|&v| !terminals.contains(v)).expect("tree has an interior");
        let component = self.inst.component_of(inner).clone();
        let target = if self.improved {
            match branching(self.inst, &self.tree, &component) {
                Branching::Terminal(w) => w,
                Branching::Complete(t) => return out.leaf(&t),
            }
        } else {
            terminals.iter().find(|&w| !self.tree.vertices().contains(w)).unwrap()
        };
        out.enter(self.tree.edges())?;
        let n = self.inst.graph.n();
        let mut allowed = component;
        allowed.insert(target);
        let local = self.inst.graph.induced(&allowed);
        let from = VertexSet::from_ids(n, self.tree.vertices().iter().filter(|&v| !terminals.contains(v)));
        let to = VertexSet::from_ids(n, [target]);
        let (_, flow) = set_paths(&local, &from, &to, &mut |p| self.with_path(p, out))
            .expect("endpoint sets are disjoint and nonempty");
        flow?;
        out.exit()
    }

    /// The root branches on paths between the two smallest terminals that
    /// avoid every other terminal. In improved mode a root with a single
    /// child is skipped, so its child becomes the root.
    fn start(&mut self, out: &mut dyn TreeSink<EdgeSet>) -> ControlFlow<()> {
        let terminals = &self.inst.terminals;
        let ends = terminals.to_vec();
        let (w, w2) = (ends[0], ends[1]);
        let n = self.inst.graph.n();
        let others = |v: VertexId| terminals.contains(v) && v != w && v != w2;
        let avoiding = self.inst.graph.edge_subgraph(|e| !others(e.u) && !others(e.v));
        let from = VertexSet::from_ids(n, [w]);
        let to = VertexSet::from_ids(n, [w2]);
        if self.improved {
            let mut first = Vec::new();
            let _ = set_paths(&avoiding, &from, &to, &mut |p| {
                first.push(p.clone());
                if first.len() == 2 {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            if let [only] = first.as_slice() {
                return self.with_path(only, out);
            }
        }
        out.enter(self.tree.edges())?;
        let (_, flow) = set_paths(&avoiding, &from, &to, &mut |p| self.with_path(p, out))
            .expect("endpoint sets are disjoint and nonempty");
        flow?;
        out.exit()
    }
}

/// Reports the enumeration tree of minimal terminal Steiner trees as events.
pub fn terminal_steiner_events(
    inst: &TerminalSteinerInstance,
    improved: bool,
    out: &mut dyn TreeSink<EdgeSet>,
) -> Result<ControlFlow<()>> {
    let root = inst.terminals.iter().next().unwrap();
    let mut search = Search {
        inst,
        improved,
        tree: PartialTree::rooted_at(&inst.graph, root)?,
        uncovered: inst.terminals.len() - 1,
    };
    Ok(search.start(out))
}

/// Enumerates every minimal terminal Steiner tree of `(g, terminals)`.
/// Returns the number of solutions passed to `sink`.
pub fn enum_minimal_terminal_steiner_trees(
    g: &Graph,
    terminals: &VertexSet,
    mode: Mode,
    sink: &mut impl SolutionSink<EdgeSet>,
) -> Result<u64> {
    let inst = TerminalSteinerInstance::new(g, terminals)?;
    run_in_mode(g.n(), mode, sink, |out| terminal_steiner_events(&inst, mode.is_improved(), out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sink::{NullTree, Recorder};

    const MODES: [Mode; 3] = [Mode::Plain, Mode::Improved, Mode::Queued];

    fn solve(g: &Graph, w: &[usize], mode: Mode) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let terminals = VertexSet::from_ids(g.n(), w.iter().copied());
        enum_minimal_terminal_steiner_trees(g, &terminals, mode, &mut |s: &EdgeSet| {
            out.push(s.to_vec());
            ControlFlow::Continue(())
        })?;
        out.sort();
        Ok(out)
    }

    #[test]
    fn star_has_one_tree() {
        // centre 0, leaves 1, 2, 3
        let star = Graph::undirected(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        for mode in MODES {
            assert_eq!(solve(&star, &[1, 2, 3], mode).unwrap(), vec![vec![0, 1, 2]]);
        }
    }

    #[test]
    fn path_of_terminals_is_infeasible() {
        let path = Graph::undirected(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(solve(&path, &[0, 1, 2], Mode::Improved), Err(Error::Infeasible(_))));
        assert!(matches!(solve(&path, &[1], Mode::Improved), Err(Error::InvalidTerminals(_))));
    }

    #[test]
    fn two_terminals_are_paths() {
        let tri = Graph::undirected(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        for mode in MODES {
            assert_eq!(solve(&tri, &[0, 1], mode).unwrap(), vec![vec![0], vec![1, 2]]);
        }
    }

    #[test]
    fn bridge_test_runs_inside_the_component() {
        // Component {x, y} = {2, 3}; T = a-x-b fixed, w joins only via y.
        // ids: 0 = ax, 1 = bx, 2 = by, 3 = wy, 4 = xy
        let g = Graph::undirected(5, &[(0, 2), (1, 2), (1, 3), (4, 3), (2, 3)]).unwrap();
        let inst = TerminalSteinerInstance::new(&g, &VertexSet::from_ids(5, [0, 1, 4])).unwrap();
        let tree = PartialTree::from_edges(&g, &EdgeSet::from_ids(5, [0, 1])).unwrap();
        let comp = VertexSet::from_ids(5, [2, 3]);
        assert_eq!(branching(&inst, &tree, &comp), Branching::Complete(EdgeSet::from_ids(5, [0, 1, 3, 4])));
    }

    #[test]
    fn improved_tree_branches_below_the_root() {
        // terminals 0, 1, 2 hang off a K4 on 3..7
        let mut e = vec![(0, 3), (0, 4), (1, 4), (1, 5), (2, 6), (2, 3)];
        for u in 3..7 {
            for v in u + 1..7 {
                e.push((u, v));
            }
        }
        let g = Graph::undirected(7, &e).unwrap();
        let inst = TerminalSteinerInstance::new(&g, &VertexSet::from_ids(7, [0, 1, 2])).unwrap();
        let mut null = NullTree;
        let mut rec = Recorder::new(&mut null);
        let _ = terminal_steiner_events(&inst, true, &mut rec).unwrap();
        assert_eq!(rec.stats.low_branching, 0);
        assert!(rec.stats.leaves > 1);
    }
}
