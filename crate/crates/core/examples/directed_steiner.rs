//! Directed Steiner trees rooted at vertex 0, and the test that decides
//! whether more than one exists.

use std::ops::ControlFlow;

use steiner_enum::directed_steiner::{enum_minimal_directed_steiner_trees, has_second_solution, SecondSolution};
use steiner_enum::{EdgeSet, Graph, Mode, VertexSet};

fn main() -> steiner_enum::Result<()> {
    // r = 0 reaches w1 = 2 through a = 1, and w2 = 3 either through a or directly.
    let d = Graph::directed(4, &[(0, 1), (1, 2), (1, 3), (0, 3)])?;
    let w = VertexSet::from_ids(4, [2, 3]);
    enum_minimal_directed_steiner_trees(&d, 0, &w, Mode::Improved, &mut |t: &EdgeSet| {
        println!("{:?}", t.to_vec());
        ControlFlow::Continue(())
    })?;

    // The back arc 2 -> 0 of the cycle never helps reach 2.
    let cycle = Graph::directed(3, &[(0, 1), (1, 2), (2, 0)])?;
    for (name, g, w) in [("hub", &d, w), ("cycle", &cycle, VertexSet::from_ids(3, [2]))] {
        match has_second_solution(g, 0, &w)? {
            SecondSolution::Witness(t) => println!("{name}: terminal {t} can be reached in two ways"),
            SecondSolution::Unique(arcs) => println!("{name}: only {:?}", arcs.to_vec()),
        }
    }
    Ok(())
}
