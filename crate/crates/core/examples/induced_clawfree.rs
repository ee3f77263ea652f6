//! Minimal induced Steiner subgraphs of claw-free graphs, including the
//! reduction that turns Steiner trees into induced subgraphs of a line graph.

use std::ops::ControlFlow;

use steiner_enum::induced_clawfree::{enum_minimal_induced_steiner, is_claw_free, reduce_to_induced, InducedSolution};
use steiner_enum::steiner_tree::enum_minimal_steiner_trees;
use steiner_enum::{EdgeSet, Graph, Mode, VertexSet};

fn main() -> steiner_enum::Result<()> {
    let c4 = Graph::undirected(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
    enum_minimal_induced_steiner(&c4, &VertexSet::from_ids(4, [0, 2]), &mut |x: &InducedSolution| {
        println!("{:?}", x.vertices());
        ControlFlow::Continue(())
    })?;

    let g = Graph::undirected(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (3, 4)])?;
    let w = VertexSet::from_ids(5, [0, 2, 4]);
    let red = reduce_to_induced(&g, &w)?;
    println!("reduced graph: {} vertices, claw-free: {}", red.graph.n(), is_claw_free(&red.graph));
    let trees = enum_minimal_steiner_trees(&g, &w, Mode::Improved, &mut |_: &EdgeSet| ControlFlow::Continue(()))?;
    let lifted = enum_minimal_induced_steiner(&red.graph, &red.terminals, &mut |x: &InducedSolution| {
        println!("  tree {:?}", red.edges_of(x));
        ControlFlow::Continue(())
    })?;
    println!("{trees} Steiner trees, {lifted} induced solutions");
    Ok(())
}
