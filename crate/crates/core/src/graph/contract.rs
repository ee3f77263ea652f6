use super::dsu::UnionFind;
use super::{Edge, EdgeSet, Graph, VertexId};
use crate::error::{Error, Result};

/// The multigraph `G/F` together with the vertex mapping.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Graph,
    /// Original vertex -> merged vertex.
    pub map: Vec<VertexId>,
}

impl Contraction {
    /// Original vertices merged into `merged`.
    pub fn preimage(&self, merged: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.map
            .iter()
            .enumerate()
            .filter(move |&(_, &m)| m == merged)
            .map(|(v, _)| v)
    }
}

/// Contracts every edge of `f`. Merged vertices are numbered in order of their
/// smallest original vertex, surviving edges keep their ids and edges that
/// would become self-loops are dropped.
pub fn contract(g: &Graph, f: &EdgeSet) -> Result<Contraction> {
    let mut uf = UnionFind::new(g.n());
    for id in f.iter() {
        let e = g.edge(id).ok_or(Error::UnknownEdge(id))?;
        uf.union(e.u, e.v);
    }
    let mut map = vec![usize::MAX; g.n()];
    let mut label_of_root = vec![usize::MAX; g.n()];
    let mut next = 0;
    for (v, slot) in map.iter_mut().enumerate() {
        let r = uf.find(v);
        if label_of_root[r] == usize::MAX {
            label_of_root[r] = next;
            next += 1;
        }
        *slot = label_of_root[r];
    }
    let edges = g.edges().iter().filter_map(|e| {
        let (u, v) = (map[e.u], map[e.v]);
        (u != v).then_some(Edge { id: e.id, u, v })
    });
    let graph = Graph::from_edges(next, g.is_directed(), edges)?;
    Ok(Contraction { graph, map })
}
