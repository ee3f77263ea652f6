//! Terminal Steiner trees: every terminal must be a leaf.

use std::ops::ControlFlow;

use steiner_enum::terminal_steiner::{enum_minimal_terminal_steiner_trees, TerminalSteinerInstance};
use steiner_enum::{EdgeSet, Error, Graph, Mode, VertexSet};

fn main() -> steiner_enum::Result<()> {
    // Terminals 0, 1, 2 around non-terminals 3 and 4, which are adjacent.
    let g = Graph::undirected(5, &[(0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])?;
    let w = VertexSet::from_ids(5, [0, 1, 2]);
    let inst = TerminalSteinerInstance::new(&g, &w)?;
    println!("{} usable non-terminal components", inst.feasible_components().len());
    let count = enum_minimal_terminal_steiner_trees(&g, &w, Mode::Improved, &mut |t: &EdgeSet| {
        println!("{:?}", t.to_vec());
        ControlFlow::Continue(())
    })?;
    println!("{count} trees");

    // On a path with every vertex a terminal the middle one cannot be a leaf.
    let path = Graph::undirected(3, &[(0, 1), (1, 2)])?;
    match TerminalSteinerInstance::new(&path, &VertexSet::from_ids(3, 0..3)) {
        Err(Error::Infeasible(why)) => println!("path: {why}"),
        other => println!("path: unexpected {other:?}"),
    }
    Ok(())
}
