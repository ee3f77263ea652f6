//! Exhaustive reference enumerators.
//!
//! Every function walks all edge (or vertex) subsets in binary-counter order
//! and keeps those that satisfy the problem definition and lose it when any
//! single element is removed. Nothing here is shared with the fast
//! enumerators.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// Largest subset space, as a power of two, that the oracles accept by default.
pub const DEFAULT_CAP_BITS: usize = 22;

/// Sorted, duplicate-free canonical solutions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    /// Edge ids (or vertex ids for induced subgraphs), each sorted ascending.
    pub solutions: Vec<Vec<usize>>,
}

impl OracleReport {
    fn from_unsorted(mut solutions: Vec<Vec<usize>>) -> Self {
        for s in &mut solutions {
            s.sort_unstable();
        }
        solutions.sort();
        solutions.dedup();
        Self { solutions }
    }

    pub fn count(&self) -> usize {
        self.solutions.len()
    }
}

fn guard(bits: usize, cap_bits: usize) -> Result<()> {
    if bits > cap_bits || bits >= 64 {
        Err(Error::OracleCap { bits, cap_bits })
    } else {
        Ok(())
    }
}

/// Minimal union-find local to the oracles.
struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn join(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

fn ids_of(mask: u64, ids: &[usize]) -> Vec<usize> {
    (0..ids.len()).filter(|&i| mask >> i & 1 == 1).map(|i| ids[i]).collect()
}

/// True if every set in `groups` lies inside one component of the edge subset.
fn groups_joined(g: &Graph, mask: u64, groups: &[Vec<VertexId>]) -> bool {
    let mut dsu = Dsu::new(g.n());
    for (i, e) in g.edges().iter().enumerate() {
        if mask >> i & 1 == 1 {
            dsu.join(e.u, e.v);
        }
    }
    groups.iter().all(|grp| {
        let Some(&first) = grp.first() else { return true };
        let root = dsu.find(first);
        grp.iter().all(|&v| dsu.find(v) == root)
    })
}

fn minimal_edge_sets(g: &Graph, cap_bits: usize, holds: impl Fn(u64) -> bool) -> Result<OracleReport> {
    let m = g.m();
    guard(m, cap_bits)?;
    let ids: Vec<usize> = g.edges().iter().map(|e| e.id).collect();
    let mut out = Vec::new();
    for mask in 0..(1u64 << m) {
        if !holds(mask) {
            continue;
        }
        let minimal = (0..m).filter(|&i| mask >> i & 1 == 1).all(|i| !holds(mask & !(1 << i)));
        if minimal {
            out.push(ids_of(mask, &ids));
        }
    }
    Ok(OracleReport::from_unsorted(out))
}

/// Minimal edge sets connecting all of `terminals`.
pub fn brute_steiner_trees(g: &Graph, terminals: &[VertexId], cap_bits: usize) -> Result<OracleReport> {
    let groups = [terminals.to_vec()];
    minimal_edge_sets(g, cap_bits, |mask| groups_joined(g, mask, &groups))
}

/// Minimal edge sets connecting each terminal set internally.
pub fn brute_steiner_forests(g: &Graph, sets: &[Vec<VertexId>], cap_bits: usize) -> Result<OracleReport> {
    minimal_edge_sets(g, cap_bits, |mask| groups_joined(g, mask, sets))
}

/// Minimal arc sets in which every terminal is reachable from `root`.
pub fn brute_directed_steiner(d: &Graph, root: VertexId, terminals: &[VertexId], cap_bits: usize) -> Result<OracleReport> {
    let n = d.n();
    let reaches_all = |mask: u64| {
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for (i, e) in d.edges().iter().enumerate() {
                if mask >> i & 1 == 1 && e.u == v && !seen[e.v] {
                    seen[e.v] = true;
                    stack.push(e.v);
                }
            }
        }
        terminals.iter().all(|&w| seen[w])
    };
    minimal_edge_sets(d, cap_bits, reaches_all)
}

/// Inclusion-minimal edge sets that form a tree containing every terminal as a leaf.
pub fn brute_terminal_steiner(g: &Graph, terminals: &[VertexId], cap_bits: usize) -> Result<OracleReport> {
    let m = g.m();
    guard(m, cap_bits)?;
    let n = g.n();
    let is_terminal_tree = |mask: u64| {
        let mut degree = vec![0usize; n];
        let mut dsu = Dsu::new(n);
        let mut edges = 0;
        for (i, e) in g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                if dsu.find(e.u) == dsu.find(e.v) {
                    return false;
                }
                dsu.join(e.u, e.v);
                degree[e.u] += 1;
                degree[e.v] += 1;
                edges += 1;
            }
        }
        if edges == 0 || terminals.iter().any(|&w| degree[w] != 1) {
            return false;
        }
        let root = dsu.find(terminals[0]);
        (0..n).filter(|&v| degree[v] > 0).all(|v| dsu.find(v) == root)
    };
    let trees: Vec<u64> = (1..(1u64 << m)).filter(|&mask| is_terminal_tree(mask)).collect();
    let ids: Vec<usize> = g.edges().iter().map(|e| e.id).collect();
    let out = trees
        .iter()
        .filter(|&&a| !trees.iter().any(|&b| b != a && b & a == b))
        .map(|&a| ids_of(a, &ids))
        .collect();
    Ok(OracleReport::from_unsorted(out))
}

/// Minimal vertex sets that contain `terminals` and induce a connected subgraph.
pub fn brute_induced_steiner(g: &Graph, terminals: &[VertexId], cap_bits: usize) -> Result<OracleReport> {
    let n = g.n();
    guard(n, cap_bits)?;
    let need: u64 = terminals.iter().fold(0, |acc, &w| acc | 1 << w);
    let holds = |mask: u64| {
        if mask & need != need || mask == 0 {
            return false;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if mask >> w & 1 == 1 && seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        seen == mask
    };
    let mut out = Vec::new();
    for mask in 0..(1u64 << n) {
        if holds(mask) && (0..n).filter(|&v| mask >> v & 1 == 1).all(|v| !holds(mask & !(1 << v))) {
            out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    Ok(OracleReport::from_unsorted(out))
}

/// Every simple path from `s` to `t`, as the edge ids in path order.
pub fn brute_st_paths(g: &Graph, s: VertexId, t: VertexId) -> Vec<Vec<EdgeId>> {
    fn walk(g: &Graph, v: VertexId, t: VertexId, on: &mut Vec<bool>, path: &mut Vec<EdgeId>, out: &mut Vec<Vec<EdgeId>>) {
        if v == t {
            out.push(path.clone());
            return;
        }
        for e in g.out_edges(v) {
            let w = e.other(v);
            if !on[w] {
                on[w] = true;
                path.push(e.id);
                walk(g, w, t, on, path, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on = vec![false; g.n()];
    on[s] = true;
    walk(g, s, t, &mut on, &mut Vec::new(), &mut out);
    out.sort();
    out
}
