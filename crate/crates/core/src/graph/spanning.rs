use super::dsu::UnionFind;
use super::{EdgeSet, Graph};
use crate::error::{Error, Result};

/// Spanning forest of `g` that contains the forest `t`: the edges of `t` are
/// taken first, then the remaining edges greedily in ascending id order.
pub fn spanning_forest_containing(g: &Graph, t: &EdgeSet) -> Result<EdgeSet> {
    g.require_undirected()?;
    let mut uf = UnionFind::new(g.n());
    let mut out = EdgeSet::with_universe(g.edge_id_bound());
    for id in t.iter() {
        let e = g.edge(id).ok_or(Error::UnknownEdge(id))?;
        if !uf.union(e.u, e.v) {
            return Err(Error::Cycle);
        }
        out.insert(id);
    }
    for e in g.edges() {
        if uf.union(e.u, e.v) {
            out.insert(e.id);
        }
    }
    Ok(out)
}

/// Like [`spanning_forest_containing`] but `g` must be connected.
pub fn spanning_tree_containing(g: &Graph, t: &EdgeSet) -> Result<EdgeSet> {
    let forest = spanning_forest_containing(g, t)?;
    if g.n() > 0 && forest.len() != g.n() - 1 {
        return Err(Error::Disconnected);
    }
    Ok(forest)
}
