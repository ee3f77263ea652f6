//! Minimal Steiner forests.
//!
//! Terminal sets are first reduced to pairs. A search node holds a forest `F`
//! that is a union of paths for some of the pairs; it picks an unconnected
//! pair and branches on the paths between its endpoints in `G / E(F)`, each of
//! which lifts to a unique path in `G` extending `F`.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{bridges, connected_components, contract, EdgeSet, Graph, RootedTreeIndex, VertexId, VertexSet};
use crate::graph::dsu::UnionFind;
use crate::path_enum::set_paths;
use crate::sink::{run_in_mode, Mode, SolutionSink, TreeSink};

/// Terminal pairs `{w_i, w'_i}` in a fixed order. Each pair is stored with its
/// smaller vertex first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TerminalPairs(Vec<(VertexId, VertexId)>);

impl TerminalPairs {
    /// Pairs taken as given, without merging.
    pub fn new(pairs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        Self(pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect())
    }

    pub fn pairs(&self) -> &[(VertexId, VertexId)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Merges intersecting terminal sets and splits each merged set `{w_1, ..., w_k}`
/// (sorted) into the pairs `{w_1, w_j}`. Groups are ordered by smallest vertex.
pub fn reduce_terminal_sets(g: &Graph, raw: &[Vec<VertexId>]) -> Result<TerminalPairs> {
    let label = connected_components(g);
    let mut dsu = UnionFind::new(g.n());
    let mut member = VertexSet::with_universe(g.n());
    for set in raw {
        for &v in set {
            g.check_vertex(v)?;
            member.insert(v);
        }
        if let Some(&first) = set.first() {
            if let Some(&w) = set.iter().find(|&&w| label[w] != label[first]) {
                return Err(Error::Infeasible(format!("terminals {first} and {w} are not connected")));
            }
            for &v in &set[1..] {
                dsu.union(first, v);
            }
        }
    }
    let mut leader: Vec<Option<VertexId>> = vec![None; g.n()];
    let mut pairs = Vec::new();
    for v in member.iter() {
        let root = dsu.find(v);
        match leader[root] {
            None => leader[root] = Some(v),
            Some(w1) => pairs.push((w1, v)),
        }
    }
    pairs.sort_by_key(|&(w1, _)| w1);
    Ok(TerminalPairs(pairs))
}

/// Outcome of the branching test for a partial forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForestBranching {
    /// Index of a pair with at least two valid paths.
    Pair(usize),
    /// The only minimal Steiner forest containing the partial forest.
    Complete(EdgeSet),
}

fn check_pairs(g: &Graph, pairs: &TerminalPairs) -> Result<()> {
    g.require_undirected()?;
    let label = connected_components(g);
    for &(a, b) in pairs.pairs() {
        g.check_vertex(a)?;
        g.check_vertex(b)?;
        if label[a] != label[b] {
            return Err(Error::Infeasible(format!("terminals {a} and {b} are not connected")));
        }
    }
    Ok(())
}

fn prune_in(index: &RootedTreeIndex, n: usize, tree: &EdgeSet, pairs: &TerminalPairs) -> Result<EdgeSet> {
    // Walks from an endpoint up to its pair's lca. Shallow lcas go first, so
    // a walk that meets a marked edge finds the rest of its route marked too.
    let mut buckets: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new(); n];
    for &(a, b) in pairs.pairs() {
        if a == b {
            continue;
        }
        let top = index.lca(a, b).ok_or_else(|| {
            Error::InvalidTerminals(format!("terminals {a} and {b} are not joined by the tree"))
        })?;
        buckets[index.depth(top)].extend([(top, a), (top, b)]);
    }
    let mut marked = EdgeSet::with_universe(tree.universe());
    for (top, mut v) in buckets.into_iter().flatten() {
        while v != top {
            let e = index.parent_edge(v).expect("non-root vertex has a parent edge");
            if !marked.insert(e) {
                break;
            }
            v = index.parent(v).unwrap();
        }
    }
    Ok(marked)
}

/// Edges of the forest `tree` that lie on the tree path of some pair.
/// Each component is rooted at its smallest vertex.
pub fn prune_by_lca(g: &Graph, tree: &EdgeSet, pairs: &TerminalPairs) -> Result<EdgeSet> {
    prune_by_lca_from(g, tree, pairs, &[])
}

/// [`prune_by_lca`] with components rooted at the first vertex of `roots`
/// they contain, falling back to the smallest vertex.
pub fn prune_by_lca_from(g: &Graph, tree: &EdgeSet, pairs: &TerminalPairs, roots: &[VertexId]) -> Result<EdgeSet> {
    for &(a, b) in pairs.pairs() {
        g.check_vertex(a)?;
        g.check_vertex(b)?;
    }
    let index = RootedTreeIndex::forest_with_roots(g, tree, roots)?;
    prune_in(&index, g.n(), tree, pairs)
}

fn branching(g: &Graph, pairs: &TerminalPairs, forest: &EdgeSet) -> Result<ForestBranching> {
    let g1 = contract(g, forest)?;
    let b = bridges(&g1.graph)?;
    let g2 = contract(&g1.graph, &b)?;
    let unique = |&(a, c): &(VertexId, VertexId)| g2.map[g1.map[a]] == g2.map[g1.map[c]];
    if let Some(i) = pairs.pairs().iter().position(|p| !unique(p)) {
        return Ok(ForestBranching::Pair(i));
    }
    let mut tree = forest.clone();
    for id in b.iter() {
        tree.insert(id);
    }
    let index = RootedTreeIndex::forest(g, &tree)?;
    Ok(ForestBranching::Complete(prune_in(&index, g.n(), &tree, pairs)?))
}

/// Either a pair with at least two valid paths for `forest`, or the unique
/// minimal Steiner forest containing `forest`.
pub fn forest_branching_or_unique(g: &Graph, pairs: &TerminalPairs, forest: &EdgeSet) -> Result<ForestBranching> {
    check_pairs(g, pairs)?;
    branching(g, pairs, forest)
}

struct Search<'a> {
    g: &'a Graph,
    pairs: &'a TerminalPairs,
    improved: bool,
    forest: EdgeSet,
}

impl Search<'_> {
    fn visit(&mut self, out: &mut dyn TreeSink<EdgeSet>) -> ControlFlow<()> {
        let c = contract(self.g, &self.forest).expect("partial forest is acyclic");
        let open = |&(a, b): &(VertexId, VertexId)| c.map[a] != c.map[b];
        let Some(first_open) = self.pairs.pairs().iter().position(open) else {
            return out.leaf(&self.forest);
        };
        let pick = if self.improved {
            match branching(self.g, self.pairs, &self.forest).expect("instance was validated") {
                ForestBranching::Pair(i) => i,
                ForestBranching::Complete(f) => return out.leaf(&f),
            }
        } else {
            first_open
        };
        out.enter(&self.forest)?;
        let (a, b) = self.pairs.pairs()[pick];
        let n1 = c.graph.n();
        let from = VertexSet::from_ids(n1, [c.map[a]]);
        let to = VertexSet::from_ids(n1, [c.map[b]]);
        let (_, flow) = set_paths(&c.graph, &from, &to, &mut |p| {
            for &id in &p.edges {
                self.forest.insert(id);
            }
            let flow = self.visit(out);
            for &id in &p.edges {
                self.forest.remove(id);
            }
            flow
        })
        .expect("pair endpoints are distinct in the contraction");
        flow?;
        out.exit()
    }
}

/// Reports the enumeration tree of minimal Steiner forests as events.
pub fn steiner_forest_events(
    g: &Graph,
    pairs: &TerminalPairs,
    improved: bool,
    out: &mut dyn TreeSink<EdgeSet>,
) -> Result<ControlFlow<()>> {
    check_pairs(g, pairs)?;
    let mut search = Search {
        g,
        pairs,
        improved,
        forest: EdgeSet::with_universe(g.edge_id_bound()),
    };
    Ok(search.visit(out))
}

/// Enumerates every minimal Steiner forest for `pairs`. Returns the number of
/// solutions passed to `sink`.
pub fn enum_minimal_steiner_forests(
    g: &Graph,
    pairs: &TerminalPairs,
    mode: Mode,
    sink: &mut impl SolutionSink<EdgeSet>,
) -> Result<u64> {
    run_in_mode(g.n(), mode, sink, |out| steiner_forest_events(g, pairs, mode.is_improved(), out))
}
