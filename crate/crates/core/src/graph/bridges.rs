use super::{EdgeSet, Graph};
use crate::error::Result;

const UNVISITED: usize = usize::MAX;

/// All bridges of an undirected (multi)graph.
///
/// Iterative low-link DFS. Only the tree edge itself is skipped when looking
/// back at the parent, so an edge with a parallel twin is never a bridge.
pub fn bridges(g: &Graph) -> Result<EdgeSet> {
    g.require_undirected()?;
    let n = g.n();
    let mut found = EdgeSet::with_universe(g.edge_id_bound());
    let mut disc = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    // (vertex, id of the edge used to enter it, next adjacency offset)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != UNVISITED {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, UNVISITED, 0));
        while let Some(top) = stack.last_mut() {
            let (v, via, next) = *top;
            if let Some(e) = g.out_edge_at(v, next) {
                top.2 += 1;
                if e.id == via {
                    continue;
                }
                let w = e.other(v);
                if disc[w] == UNVISITED {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e.id, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        found.insert(via);
                    }
                }
            }
        }
    }
    Ok(found)
}
