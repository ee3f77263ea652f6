//! Structural checks that characterise a minimal solution of each problem.
//! A solution passes exactly when it is minimal, so these are used on every
//! emitted solution in the test suites.

use thiserror::Error;

use crate::graph::{components, EdgeId, Graph, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("certificate failed: {0}")]
pub struct Violation(pub String);

type Check = std::result::Result<(), Violation>;

fn fail(msg: impl Into<String>) -> Check {
    Err(Violation(msg.into()))
}

/// Degrees and vertex set of an edge subset, after checking it is a forest.
struct Shape {
    degree: Vec<usize>,
    in_degree: Vec<usize>,
    vertices: VertexSet,
    label: Vec<usize>,
}

fn shape(g: &Graph, edges: &[EdgeId]) -> Result<Shape, Violation> {
    let n = g.n();
    let mut degree = vec![0; n];
    let mut in_degree = vec![0; n];
    let mut vertices = VertexSet::with_universe(n);
    let mut label: Vec<usize> = (0..n).collect();
    fn root(label: &mut [usize], mut x: usize) -> usize {
        while label[x] != x {
            label[x] = label[label[x]];
            x = label[x];
        }
        x
    }
    for &id in edges {
        let e = g.edge(id).ok_or_else(|| Violation(format!("unknown edge {id}")))?;
        let (a, b) = (root(&mut label, e.u), root(&mut label, e.v));
        if a == b {
            return Err(Violation(format!("edge {id} closes a cycle")));
        }
        label[a] = b;
        degree[e.u] += 1;
        degree[e.v] += 1;
        in_degree[e.v] += 1;
        vertices.insert(e.u);
        vertices.insert(e.v);
    }
    for v in 0..n {
        label[v] = root(&mut label, v);
    }
    Ok(Shape {
        degree,
        in_degree,
        vertices,
        label,
    })
}

fn single_tree(s: &Shape) -> Check {
    let mut it = s.vertices.iter();
    if let Some(first) = it.next() {
        if it.any(|v| s.label[v] != s.label[first]) {
            return fail("edges do not form a single tree");
        }
    }
    Ok(())
}

/// A tree covering `terminals` whose leaves are all terminals.
pub fn steiner_tree(g: &Graph, terminals: &[VertexId], edges: &[EdgeId]) -> Check {
    if terminals.len() <= 1 {
        return if edges.is_empty() { Ok(()) } else { fail("single terminal needs no edges") };
    }
    let s = shape(g, edges)?;
    single_tree(&s)?;
    if let Some(w) = terminals.iter().find(|&&w| !s.vertices.contains(w)) {
        return fail(format!("terminal {w} not covered"));
    }
    if let Some(v) = s.vertices.iter().find(|&v| s.degree[v] == 1 && !terminals.contains(&v)) {
        return fail(format!("non-terminal leaf {v}"));
    }
    Ok(())
}

/// A forest that joins every terminal set and in which every edge is needed
/// by some set, i.e. a union of one path per terminal pair.
pub fn steiner_forest(g: &Graph, sets: &[Vec<VertexId>], edges: &[EdgeId]) -> Check {
    let joined = |skip: Option<EdgeId>| -> Result<bool, Violation> {
        let kept: Vec<EdgeId> = edges.iter().copied().filter(|&e| Some(e) != skip).collect();
        let s = shape(g, &kept)?;
        Ok(sets.iter().all(|set| set.iter().all(|&v| s.label[v] == s.label[set[0]])))
    };
    if !joined(None)? {
        return fail("some terminal set is not connected");
    }
    for &e in edges {
        if joined(Some(e))? {
            return fail(format!("edge {e} is on no terminal path"));
        }
    }
    Ok(())
}

/// A tree whose leaves are exactly the terminals.
pub fn terminal_steiner_tree(g: &Graph, terminals: &[VertexId], edges: &[EdgeId]) -> Check {
    let s = shape(g, edges)?;
    single_tree(&s)?;
    let mut leaves: Vec<VertexId> = s.vertices.iter().filter(|&v| s.degree[v] == 1).collect();
    let mut w = terminals.to_vec();
    w.sort_unstable();
    leaves.sort_unstable();
    if leaves != w {
        return fail(format!("leaves {leaves:?} differ from terminals {w:?}"));
    }
    Ok(())
}

/// An arborescence rooted at `root` reaching every terminal, whose sinks are
/// all terminals.
pub fn directed_steiner_tree(d: &Graph, root: VertexId, terminals: &[VertexId], arcs: &[EdgeId]) -> Check {
    let s = shape(d, arcs)?;
    if terminals.is_empty() {
        return if arcs.is_empty() { Ok(()) } else { fail("no terminals but arcs present") };
    }
    if s.in_degree[root] != 0 {
        return fail("root has an incoming arc");
    }
    if let Some(v) = s.vertices.iter().find(|&v| v != root && s.in_degree[v] != 1) {
        return fail(format!("vertex {v} has in-degree {}", s.in_degree[v]));
    }
    // With in-degree one everywhere except the root and no undirected cycle,
    // the arcs form an arborescence as soon as they form a single tree.
    single_tree(&s)?;
    if let Some(w) = terminals.iter().find(|&&w| !s.vertices.contains(w)) {
        return fail(format!("terminal {w} not reached"));
    }
    let out_degree = |v: VertexId| s.degree[v] - s.in_degree[v];
    if let Some(v) = s.vertices.iter().find(|&v| out_degree(v) == 0 && !terminals.contains(&v)) {
        return fail(format!("non-terminal sink {v}"));
    }
    Ok(())
}

/// `G[X]` is connected, contains the terminals, and every non-terminal of
/// `X` splits it into exactly two parts that both hold a terminal.
pub fn induced_steiner(g: &Graph, terminals: &[VertexId], x: &[VertexId]) -> Check {
    let set = VertexSet::from_ids(g.n(), x.iter().copied());
    if let Some(w) = terminals.iter().find(|&&w| !set.contains(w)) {
        return fail(format!("terminal {w} missing"));
    }
    if components(g, &set).len() != 1 {
        return fail("induced subgraph is disconnected");
    }
    for &v in x {
        if terminals.contains(&v) {
            continue;
        }
        let mut rest = set.clone();
        rest.remove(v);
        let parts = components(g, &rest);
        if parts.len() != 2 || parts.iter().any(|p| !terminals.iter().any(|&w| p.contains(w))) {
            return fail(format!("non-terminal {v} is not a separating cut vertex"));
        }
    }
    Ok(())
}

/// A simple path from `s` to `t` given by its edges in order.
pub fn st_path(g: &Graph, s: VertexId, t: VertexId, edges: &[EdgeId]) -> Check {
    let mut at = s;
    let mut seen = VertexSet::from_ids(g.n(), [s]);
    for &id in edges {
        let e = g.edge(id).ok_or_else(|| Violation(format!("unknown edge {id}")))?;
        let next = if e.u == at {
            e.v
        } else if e.v == at && !g.is_directed() {
            e.u
        } else {
            return fail(format!("edge {id} does not continue the walk at {at}"));
        };
        if !seen.insert(next) {
            return fail(format!("vertex {next} repeated"));
        }
        at = next;
    }
    if at != t {
        return fail("walk does not end at the target");
    }
    Ok(())
}
