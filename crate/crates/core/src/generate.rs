//! Seeded random instances for tests, examples and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, VertexId};
use crate::induced_clawfree::is_claw_free;

/// Random tree on `n` vertices: vertex `i` attaches to a uniformly chosen
/// earlier vertex, then labels are shuffled.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let mut label: Vec<VertexId> = (0..n).collect();
    label.shuffle(rng);
    let edges: Vec<_> = (1..n).map(|i| (label[rng.gen_range(0..i)], label[i])).collect();
    Graph::undirected(n, &edges).expect("tree edges are valid")
}

/// Connected simple graph with `n` vertices and about `m` edges: a random
/// spanning tree plus extra edges between distinct, non-adjacent pairs.
pub fn random_connected(n: usize, m: usize, rng: &mut impl Rng) -> Graph {
    let tree = random_tree(n, rng);
    let mut pairs: Vec<(VertexId, VertexId)> = tree.edges().iter().map(|e| (e.u, e.v)).collect();
    let mut present: std::collections::HashSet<(usize, usize)> =
        pairs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let limit = n * n.saturating_sub(1) / 2;
    let target = m.min(limit);
    while pairs.len() < target {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && present.insert((u.min(v), u.max(v))) {
            pairs.push((u, v));
        }
    }
    pairs.shuffle(rng);
    Graph::undirected(n, &pairs).expect("generated edges are valid")
}

/// Each unordered pair becomes an edge with probability `p`; the result may be disconnected.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::undirected(n, &pairs).expect("generated edges are valid")
}

/// Each ordered pair becomes an arc with probability `p`.
pub fn random_digraph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Graph::directed(n, &arcs).expect("generated arcs are valid")
}

/// `k` distinct vertices of `0..n`, sorted.
pub fn random_subset(n: usize, k: usize, rng: &mut impl Rng) -> Vec<VertexId> {
    let mut all: Vec<VertexId> = (0..n).collect();
    all.shuffle(rng);
    all.truncate(k.min(n));
    all.sort_unstable();
    all
}

/// Line graph: one vertex per edge of `g` (in id order), adjacent when the
/// edges share an endpoint. Parallel edges of `g` yield a single edge.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut pairs = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = (edges[i], edges[j]);
            if a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v {
                pairs.push((i, j));
            }
        }
    }
    Graph::undirected(edges.len(), &pairs).expect("line graph edges are valid")
}

/// Claw-free graph on `n` vertices by rejection sampling of `random_graph`.
/// Gives up after `tries` attempts.
pub fn random_claw_free(n: usize, p: f64, tries: usize, rng: &mut impl Rng) -> Option<Graph> {
    (0..tries).map(|_| random_graph(n, p, rng)).find(is_claw_free)
}
