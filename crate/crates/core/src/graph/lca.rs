use super::{EdgeId, EdgeSet, Graph, VertexId};
use crate::error::{Error, Result};

const NONE: usize = usize::MAX;

/// A rooted forest with O(1) lowest-common-ancestor queries
/// (Euler tour plus a sparse table of depth minima).
#[derive(Clone, Debug)]
pub struct RootedTreeIndex {
    parent: Vec<VertexId>,
    parent_edge: Vec<EdgeId>,
    depth: Vec<usize>,
    tree_of: Vec<usize>,
    first: Vec<usize>,
    /// `table[k][i]` is the shallowest vertex among Euler tour entries `i..i + 2^k`;
    /// row 0 is the tour itself.
    table: Vec<Vec<VertexId>>,
}

/// Indexes `tree` rooted at `root`. Every edge of `tree` must be reachable from
/// `root` and the edges must not close a cycle.
pub fn lca_index(g: &Graph, tree: &EdgeSet, root: VertexId) -> Result<RootedTreeIndex> {
    g.check_vertex(root)?;
    let index = RootedTreeIndex::build(g, tree, std::iter::once(root))?;
    for id in tree.iter() {
        let e = g.edge(id).ok_or(Error::UnknownEdge(id))?;
        if !index.contains(e.u) {
            return Err(Error::Disconnected);
        }
    }
    Ok(index)
}

impl RootedTreeIndex {
    /// Indexes every component of the forest `edges`, each rooted at its
    /// smallest vertex. Vertices touched by no edge become singleton trees.
    pub(crate) fn forest(g: &Graph, edges: &EdgeSet) -> Result<Self> {
        Self::build(g, edges, 0..g.n())
    }

    /// Like [`RootedTreeIndex::forest`], but components are rooted at the first
    /// listed vertex they contain.
    pub(crate) fn forest_with_roots(g: &Graph, edges: &EdgeSet, roots: &[VertexId]) -> Result<Self> {
        for &r in roots {
            g.check_vertex(r)?;
        }
        Self::build(g, edges, roots.iter().copied().chain(0..g.n()))
    }

    fn build(g: &Graph, edges: &EdgeSet, roots: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        g.require_undirected()?;
        let n = g.n();
        let mut adj: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
        for id in edges.iter() {
            let e = g.edge(id).ok_or(Error::UnknownEdge(id))?;
            adj[e.u].push((e.v, id));
            adj[e.v].push((e.u, id));
        }
        let mut parent = vec![NONE; n];
        let mut parent_edge = vec![NONE; n];
        let mut depth = vec![0; n];
        let mut tree_of = vec![NONE; n];
        let mut first = vec![NONE; n];
        let mut euler = Vec::new();
        let mut trees = 0;
        let mut stack: Vec<(VertexId, usize)> = Vec::new();
        for root in roots {
            if tree_of[root] != NONE {
                continue;
            }
            tree_of[root] = trees;
            first[root] = euler.len();
            euler.push(root);
            stack.push((root, 0));
            while let Some(top) = stack.last_mut() {
                let (v, next) = *top;
                if let Some(&(w, id)) = adj[v].get(next) {
                    top.1 += 1;
                    if id == parent_edge[v] {
                        continue;
                    }
                    if tree_of[w] != NONE {
                        return Err(Error::Cycle);
                    }
                    tree_of[w] = trees;
                    parent[w] = v;
                    parent_edge[w] = id;
                    depth[w] = depth[v] + 1;
                    first[w] = euler.len();
                    euler.push(w);
                    stack.push((w, 0));
                } else {
                    stack.pop();
                    if let Some(&(p, _)) = stack.last() {
                        euler.push(p);
                    }
                }
            }
            trees += 1;
        }
        let mut table = vec![euler.clone()];
        let mut span = 1;
        while 2 * span <= euler.len() {
            let prev = table.last().unwrap();
            let row = (0..=euler.len() - 2 * span)
                .map(|i| {
                    let (a, b) = (prev[i], prev[i + span]);
                    if depth[a] <= depth[b] {
                        a
                    } else {
                        b
                    }
                })
                .collect();
            table.push(row);
            span *= 2;
        }
        Ok(Self {
            parent,
            parent_edge,
            depth,
            tree_of,
            first,
            table,
        })
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.tree_of.get(v).is_some_and(|&t| t != NONE)
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        (self.parent[v] != NONE).then_some(self.parent[v])
    }

    /// Id of the edge joining `v` to its parent.
    pub fn parent_edge(&self, v: VertexId) -> Option<EdgeId> {
        (self.parent_edge[v] != NONE).then_some(self.parent_edge[v])
    }

    pub fn depth(&self, v: VertexId) -> usize {
        self.depth[v]
    }

    /// `None` if either vertex is outside the index or they lie in different trees.
    pub fn lca(&self, u: VertexId, v: VertexId) -> Option<VertexId> {
        if !self.contains(u) || !self.contains(v) || self.tree_of[u] != self.tree_of[v] {
            return None;
        }
        let (mut i, mut j) = (self.first[u], self.first[v]);
        if i > j {
            std::mem::swap(&mut i, &mut j);
        }
        let len = j - i + 1;
        let k = usize::BITS as usize - 1 - len.leading_zeros() as usize;
        let (a, b) = (self.table[k][i], self.table[k][j + 1 - (1 << k)]);
        Some(if self.depth[a] <= self.depth[b] { a } else { b })
    }

    #[cfg(test)]
    fn tour_len(&self) -> usize {
        self.table[0].len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn all(g: &Graph) -> EdgeSet {
        EdgeSet::from_ids(g.edge_id_bound(), g.edges().iter().map(|e| e.id))
    }

    #[test]
    fn path_rooted_at_end() {
        let g = Graph::undirected(3, &[(0, 1), (1, 2)]).unwrap();
        let idx = lca_index(&g, &all(&g), 0).unwrap();
        assert_eq!(idx.lca(0, 2), Some(0));
        assert_eq!(idx.lca(2, 1), Some(1));
        assert_eq!(idx.tour_len(), 5);
    }

    #[test]
    fn star_centre_is_the_lca_of_leaves() {
        let g = Graph::undirected(3, &[(2, 0), (2, 1)]).unwrap();
        let idx = lca_index(&g, &all(&g), 2).unwrap();
        assert_eq!(idx.lca(0, 1), Some(2));
        for v in 0..3 {
            assert_eq!(idx.lca(v, v), Some(v));
        }
    }

    #[test]
    fn rejects_cycles_and_unreachable_edges() {
        let tri = Graph::undirected(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(lca_index(&tri, &all(&tri), 0).unwrap_err(), Error::Cycle);
        let split = Graph::undirected(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(lca_index(&split, &all(&split), 0).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn forest_roots_each_component_at_its_smallest_vertex() {
        let g = Graph::undirected(5, &[(3, 1), (1, 4), (2, 0)]).unwrap();
        let idx = RootedTreeIndex::forest(&g, &all(&g)).unwrap();
        assert_eq!(idx.parent(1), None);
        assert_eq!(idx.parent(3), Some(1));
        assert_eq!(idx.lca(3, 4), Some(1));
        assert_eq!(idx.lca(0, 3), None);
        assert_eq!(idx.parent_edge(2), Some(2));
    }

    fn naive_lca(parents: &[usize], depth: &[usize], mut u: usize, mut v: usize) -> usize {
        while depth[u] > depth[v] {
            u = parents[u];
        }
        while depth[v] > depth[u] {
            v = parents[v];
        }
        while u != v {
            u = parents[u];
            v = parents[v];
        }
        u
    }

    proptest! {
        #[test]
        fn agrees_with_upward_walk(picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..64)) {
            let n = picks.len() + 1;
            let parents: Vec<usize> = std::iter::once(0)
                .chain(picks.iter().enumerate().map(|(i, p)| p.index(i + 1)))
                .collect();
            let mut depth = vec![0; n];
            for v in 1..n {
                depth[v] = depth[parents[v]] + 1;
            }
            let edges: Vec<_> = (1..n).map(|v| (parents[v], v)).collect();
            let g = Graph::undirected(n, &edges).unwrap();
            let idx = lca_index(&g, &all(&g), 0).unwrap();
            for u in 0..n {
                for v in 0..n {
                    prop_assert_eq!(idx.lca(u, v), Some(naive_lca(&parents, &depth, u, v)));
                }
            }
        }
    }
}
