//! Minimal induced Steiner subgraphs of claw-free graphs.
//!
//! Solutions are found by a breadth-first traversal of a solution graph: each
//! solution `X` has a neighbor for every non-terminal `v` in `X` and every
//! vertex `w` next to one side of `X - v`, built by reconnecting the two sides
//! through `w` along a shortest path. The traversal keeps every solution it
//! has seen, so space grows with the output.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{components, connected_components, EdgeId, Graph, VertexId, VertexSet};
use crate::sink::SolutionSink;

/// A vertex set in canonical (sorted) form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InducedSolution(Vec<VertexId>);

impl InducedSolution {
    pub fn from_set(set: &VertexSet) -> Self {
        Self(set.to_vec())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn to_set(&self, n: usize) -> VertexSet {
        VertexSet::from_ids(n, self.0.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// No vertex has three pairwise non-adjacent neighbors.
pub fn is_claw_free(g: &Graph) -> bool {
    claw_centre(g).is_none()
}

/// Smallest vertex with three pairwise non-adjacent neighbors.
fn claw_centre(g: &Graph) -> Option<VertexId> {
    let around: Vec<VertexSet> = (0..g.n())
        .map(|v| VertexSet::from_ids(g.n(), g.neighbors(v).filter(|&x| x != v)))
        .collect();
    let adj = |a: VertexId, b: VertexId| around[a].contains(b);
    (0..g.n()).find(|&c| {
        let nb = around[c].to_vec();
        (0..nb.len()).any(|i| {
            (i + 1..nb.len()).any(|j| {
                !adj(nb[i], nb[j]) && nb[j + 1..].iter().any(|&k| !adj(nb[i], k) && !adj(nb[j], k))
            })
        })
    })
}

fn connected(g: &Graph, set: &VertexSet) -> bool {
    components(g, set).len() == 1
}

/// A minimal connected subset of `x` containing `keep`: the smallest deletable
/// non-terminal is removed until none is left.
pub fn mu(g: &Graph, x: &VertexSet, keep: &VertexSet) -> Result<VertexSet> {
    if !keep.is_subset(x) {
        return Err(Error::InvalidTerminals("kept vertices must lie in the set".into()));
    }
    if !connected(g, x) {
        return Err(Error::Disconnected);
    }
    Ok(shrink(g, x.clone(), keep))
}

fn shrink(g: &Graph, mut x: VertexSet, keep: &VertexSet) -> VertexSet {
    'restart: loop {
        let candidates: Vec<VertexId> = x.iter().filter(|&v| !keep.contains(v)).collect();
        for v in candidates {
            x.remove(v);
            if !x.is_empty() && connected(g, &x) {
                continue 'restart;
            }
            x.insert(v);
        }
        return x;
    }
}

/// A neighbor of a solution together with the pair `(v, w)` that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighbor {
    pub removed: VertexId,
    pub added: VertexId,
    pub solution: InducedSolution,
}

fn open_neighborhood(g: &Graph, set: &VertexSet) -> VertexSet {
    let mut out = VertexSet::with_universe(g.n());
    for u in set.iter() {
        for x in g.neighbors(u) {
            if !set.contains(x) {
                out.insert(x);
            }
        }
    }
    out
}

/// Shortest path from `start` to the first vertex adjacent to `target`,
/// avoiding `forbidden`. Ties go to smaller ids.
fn shortest_to_neighborhood(g: &Graph, start: VertexId, target: &VertexSet, forbidden: &VertexSet) -> Option<Vec<VertexId>> {
    let goal = open_neighborhood(g, target);
    let mut parent: Vec<Option<VertexId>> = vec![None; g.n()];
    let mut seen = VertexSet::from_ids(g.n(), [start]);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if goal.contains(u) {
            let mut path = vec![u];
            let mut at = u;
            while let Some(p) = parent[at] {
                path.push(p);
                at = p;
            }
            return Some(path);
        }
        let mut next: Vec<VertexId> = g.neighbors(u).collect();
        next.sort_unstable();
        for x in next {
            if !forbidden.contains(x) && !target.contains(x) && seen.insert(x) {
                parent[x] = Some(u);
                queue.push_back(x);
            }
        }
    }
    None
}

fn neighbors_of(g: &Graph, terminals: &VertexSet, x: &VertexSet) -> Result<Vec<Neighbor>> {
    let mut out = Vec::new();
    for v in x.iter().filter(|&v| !terminals.contains(v)) {
        let mut rest = x.clone();
        rest.remove(v);
        let parts = components(g, &rest);
        if parts.len() != 2 || parts.iter().any(|p| !terminals.iter().any(|w| p.contains(w))) {
            return Err(Error::Integrity(format!(
                "removing {v} leaves {} parts; the set is not minimal or the graph has a claw",
                parts.len()
            )));
        }
        for (c1, c2) in [(&parts[0], &parts[1]), (&parts[1], &parts[0])] {
            let keep2 = intersect(terminals, c2);
            let c2w = shrink(g, c2.clone(), &keep2);
            for w in open_neighborhood(g, c1).iter().filter(|&w| w != v) {
                let mut grown = c1.clone();
                grown.insert(w);
                let mut keep1 = intersect(terminals, c1);
                keep1.insert(w);
                let c1w = shrink(g, grown, &keep1);
                let mut inner = c1w.clone();
                inner.remove(w);
                let mut forbidden = open_neighborhood(g, &inner);
                for u in c1w.iter() {
                    forbidden.insert(u);
                }
                forbidden.insert(v);
                forbidden.remove(w);
                let Some(path) = shortest_to_neighborhood(g, w, &c2w, &forbidden) else {
                    continue;
                };
                let mut union = c1w;
                for u in c2w.iter().chain(path) {
                    union.insert(u);
                }
                let z = shrink(g, union, terminals);
                out.push(Neighbor {
                    removed: v,
                    added: w,
                    solution: InducedSolution::from_set(&z),
                });
            }
        }
    }
    Ok(out)
}

fn intersect(a: &VertexSet, b: &VertexSet) -> VertexSet {
    VertexSet::from_ids(a.universe(), a.iter().filter(|&x| b.contains(x)))
}

fn check_instance(g: &Graph, terminals: &VertexSet) -> Result<()> {
    g.require_undirected()?;
    if terminals.is_empty() {
        return Err(Error::InvalidTerminals("terminal set is empty".into()));
    }
    for w in terminals.iter() {
        g.check_vertex(w)?;
    }
    if let Some(c) = claw_centre(g) {
        return Err(Error::NotClawFree(c));
    }
    Ok(())
}

/// All neighbors of the minimal solution `x`, in `(v, w)` order. Duplicate
/// solutions are kept.
pub fn neighbors(g: &Graph, terminals: &VertexSet, x: &InducedSolution) -> Result<Vec<Neighbor>> {
    check_instance(g, terminals)?;
    neighbors_of(g, terminals, &x.to_set(g.n()))
}

/// Enumerates every minimal induced Steiner subgraph of a claw-free graph.
/// Returns the number of solutions passed to `sink`.
pub fn enum_minimal_induced_steiner(
    g: &Graph,
    terminals: &VertexSet,
    sink: &mut impl SolutionSink<InducedSolution>,
) -> Result<u64> {
    check_instance(g, terminals)?;
    let label = connected_components(g);
    let first = terminals.iter().next().unwrap();
    if let Some(w) = terminals.iter().find(|&w| label[w] != label[first]) {
        return Err(Error::Infeasible(format!("terminals {first} and {w} are not connected")));
    }
    let component = VertexSet::from_ids(g.n(), (0..g.n()).filter(|&v| label[v] == label[first]));
    let seed = InducedSolution::from_set(&shrink(g, component, terminals));
    let mut visited = HashSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed]);
    let mut count = 0;
    while let Some(x) = queue.pop_front() {
        count += 1;
        if sink.emit(&x).is_break() {
            break;
        }
        for nb in neighbors_of(g, terminals, &x.to_set(g.n()))? {
            if visited.insert(nb.solution.clone()) {
                queue.push_back(nb.solution);
            }
        }
    }
    Ok(count)
}

/// Line graph of `g` with one extra vertex per terminal, joined to the
/// vertices of the edges at that terminal.
#[derive(Clone, Debug)]
pub struct LineReduction {
    pub graph: Graph,
    pub terminals: VertexSet,
    /// Input edge behind each vertex of `graph`; `None` for terminal vertices.
    pub edge_of: Vec<Option<EdgeId>>,
}

impl LineReduction {
    /// Input edges of an induced solution, sorted.
    pub fn edges_of(&self, x: &InducedSolution) -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = x.vertices().iter().filter_map(|&v| self.edge_of[v]).collect();
        ids.sort_unstable();
        ids
    }
}

/// Builds the reduction of Steiner trees of `(g, terminals)` to induced
/// Steiner subgraphs of the returned graph.
pub fn reduce_to_induced(g: &Graph, terminals: &VertexSet) -> Result<LineReduction> {
    g.require_undirected()?;
    let edges = g.edges();
    let m = edges.len();
    let mut edge_of: Vec<Option<EdgeId>> = edges.iter().map(|e| Some(e.id)).collect();
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = (edges[i], edges[j]);
            if a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v {
                pairs.push((i, j));
            }
        }
    }
    let mut h_terminals = Vec::new();
    for w in terminals.iter() {
        g.check_vertex(w)?;
        let t = edge_of.len();
        edge_of.push(None);
        h_terminals.push(t);
        pairs.extend((0..m).filter(|&i| edges[i].u == w || edges[i].v == w).map(|i| (i, t)));
    }
    let n = edge_of.len();
    Ok(LineReduction {
        graph: Graph::undirected(n, &pairs)?,
        terminals: VertexSet::from_ids(n, h_terminals),
        edge_of,
    })
}
