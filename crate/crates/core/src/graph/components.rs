use std::collections::VecDeque;

use super::{Graph, VertexSet};

/// Partition of `restrict` into the vertex sets of the connected components of
/// `G[restrict]`, ordered by smallest member. Directed graphs are treated as
/// their underlying undirected graph.
pub fn components(g: &Graph, restrict: &VertexSet) -> Vec<VertexSet> {
    let mut seen = VertexSet::with_universe(g.n());
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in restrict.iter() {
        if seen.contains(start) {
            continue;
        }
        let mut part = VertexSet::with_universe(g.n());
        seen.insert(start);
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            part.insert(v);
            let around = g.out_edges(v).chain(if g.is_directed() {
                Some(g.in_edges(v)).into_iter().flatten()
            } else {
                None.into_iter().flatten()
            });
            for e in around {
                let w = e.other(v);
                if restrict.contains(w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        out.push(part);
    }
    out
}

/// Component label of every vertex; labels are numbered in order of each
/// component's smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<usize> {
    let all = VertexSet::from_ids(g.n(), 0..g.n());
    let mut label = vec![0; g.n()];
    for (c, part) in components(g, &all).iter().enumerate() {
        for v in part.iter() {
            label[v] = c;
        }
    }
    label
}


#[cfg(test)]
mod tests {
    use super::*;

    fn parts(g: &Graph, r: &[usize]) -> Vec<Vec<usize>> {
        components(g, &VertexSet::from_ids(g.n(), r.iter().copied()))
            .iter()
            .map(VertexSet::to_vec)
            .collect()
    }

    #[test]
    fn path_restricted_to_ends() {
        let g = Graph::undirected(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(parts(&g, &[0, 2]), vec![vec![0], vec![2]]);
    }

    #[test]
    fn triangle_whole() {
        let g = Graph::undirected(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(parts(&g, &[0, 1, 2]), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn empty_restrict() {
        let g = Graph::undirected(3, &[(0, 1)]).unwrap();
        assert!(parts(&g, &[]).is_empty());
    }

    #[test]
    fn directed_uses_both_directions() {
        let g = Graph::directed(3, &[(1, 0), (1, 2)]).unwrap();
        assert_eq!(connected_components(&g), vec![0, 0, 0]);
    }
}
