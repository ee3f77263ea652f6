//! Immutable (multi)graphs with stable edge ids, plus the subroutines the
//! enumerators share: bridges, contraction, components, spanning trees and
//! lowest common ancestors.
//!
//! Vertices are dense integers `0..n`. Every edge carries an id that survives
//! contraction and edge-subgraph views, so a solution found in a derived graph
//! can be reported directly in terms of the input graph.

mod bridges;
mod components;
mod contract;
pub(crate) mod dsu;
mod lca;
mod sets;
mod spanning;

pub use bridges::bridges;
pub use components::{components, connected_components};
pub use contract::{contract, Contraction};
pub use lca::{lca_index, RootedTreeIndex};
pub use sets::{EdgeSet, VertexSet};
pub use spanning::{spanning_forest_containing, spanning_tree_containing};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

const ABSENT: usize = usize::MAX;

/// An edge `{u, v}`, or the arc `u -> v` in a directed graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    /// The endpoint opposite to `x`.
    #[inline]
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    directed: bool,
    /// Sorted by id.
    edges: Vec<Edge>,
    /// Edge id -> position in `edges`.
    position: Vec<usize>,
    /// Incident edges (undirected) or out-arcs (directed), as positions in `edges`.
    out: Vec<Vec<usize>>,
    /// In-arcs; empty for undirected graphs.
    inc: Vec<Vec<usize>>,
}

impl Graph {
    /// Undirected graph whose edge ids are the positions in `edges`.
    pub fn undirected(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::from_edges(n, false, Self::numbered(edges))
    }

    /// Directed graph whose arc ids are the positions in `arcs`.
    pub fn directed(n: usize, arcs: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::from_edges(n, true, Self::numbered(arcs))
    }

    fn numbered(pairs: &[(VertexId, VertexId)]) -> impl Iterator<Item = Edge> + '_ {
        pairs
            .iter()
            .enumerate()
            .map(|(id, &(u, v))| Edge { id, u, v })
    }

    /// Builds a graph from edges with explicit, distinct ids.
    pub fn from_edges(n: usize, directed: bool, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable_by_key(|e| e.id);
        let bound = edges.last().map_or(0, |e| e.id + 1);
        let mut position = vec![ABSENT; bound];
        let mut out = vec![Vec::new(); n];
        let mut inc = if directed { vec![Vec::new(); n] } else { Vec::new() };
        for (pos, e) in edges.iter().enumerate() {
            for x in [e.u, e.v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if e.u == e.v {
                return Err(Error::SelfLoop(e.u));
            }
            if position[e.id] != ABSENT {
                return Err(Error::Integrity(format!("duplicate edge id {}", e.id)));
            }
            position[e.id] = pos;
            out[e.u].push(pos);
            if directed {
                inc[e.v].push(pos);
            } else {
                out[e.v].push(pos);
            }
        }
        Ok(Self {
            n,
            directed,
            edges,
            position,
            out,
            inc,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// All edges in ascending id order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// One past the largest edge id; the universe for [`EdgeSet`]s over this graph.
    pub fn edge_id_bound(&self) -> usize {
        self.position.len()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        match self.position.get(id) {
            Some(&pos) if pos != ABSENT => Some(&self.edges[pos]),
            _ => None,
        }
    }

    pub fn has_edge(&self, id: EdgeId) -> bool {
        self.edge(id).is_some()
    }

    /// Incident edges (undirected) or out-arcs (directed) of `v`, in id order.
    pub fn out_edges(&self, v: VertexId) -> impl Iterator<Item = &Edge> + '_ {
        self.out[v].iter().map(move |&p| &self.edges[p])
    }

    #[inline]
    pub(crate) fn out_edge_at(&self, v: VertexId, i: usize) -> Option<&Edge> {
        self.out[v].get(i).map(|&p| &self.edges[p])
    }

    /// In-arcs of `v`; for undirected graphs the same as [`Graph::out_edges`].
    pub fn in_edges(&self, v: VertexId) -> impl Iterator<Item = &Edge> + '_ {
        let list = if self.directed { &self.inc[v] } else { &self.out[v] };
        list.iter().map(move |&p| &self.edges[p])
    }

    /// Neighbours (out-neighbours for directed graphs), with multiplicity.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out_edges(v).map(move |e| e.other(v))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.out[v].len()
    }

    /// Same vertex set, keeping only the edges accepted by `keep`; ids are preserved.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(&Edge) -> bool) -> Graph {
        let edges = self.edges.iter().copied().filter(|e| keep(e));
        Graph::from_edges(self.n, self.directed, edges).expect("subgraph of a valid graph is valid")
    }

    /// Induced subgraph on `keep`, vertex numbering unchanged.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        self.edge_subgraph(|e| keep.contains(e.u) && keep.contains(e.v))
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn require_undirected(&self) -> Result<()> {
        if self.directed {
            Err(Error::RequiresUndirected)
        } else {
            Ok(())
        }
    }
}
