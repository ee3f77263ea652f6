//! Minimal Steiner trees of a small graph in each enumeration mode.

use std::ops::ControlFlow;

use steiner_enum::steiner_tree::enum_minimal_steiner_trees;
use steiner_enum::{EdgeSet, Graph, Mode, VertexSet};

fn main() -> steiner_enum::Result<()> {
    //   0 - 1 - 2
    //   |   |   |
    //   3 - 4 - 5
    let g = Graph::undirected(6, &[(0, 1), (1, 2), (0, 3), (1, 4), (2, 5), (3, 4), (4, 5)])?;
    let terminals = VertexSet::from_ids(6, [0, 2, 4]);

    for mode in [Mode::Plain, Mode::Improved, Mode::Queued] {
        let mut trees = Vec::new();
        enum_minimal_steiner_trees(&g, &terminals, mode, &mut |t: &EdgeSet| {
            let edges: Vec<_> = t.iter().map(|id| g.edge(id).map(|e| (e.u, e.v)).unwrap()).collect();
            trees.push(edges);
            ControlFlow::Continue(())
        })?;
        println!("{mode:?}: {} trees", trees.len());
        if mode == Mode::Improved {
            for t in &trees {
                println!("  {t:?}");
            }
        }
    }
    Ok(())
}
