//! Minimal Steiner forests of a 4-cycle for two crossing pairs, and how
//! overlapping terminal sets are reduced to pairs first.

use std::ops::ControlFlow;

use steiner_enum::steiner_forest::{enum_minimal_steiner_forests, reduce_terminal_sets};
use steiner_enum::{EdgeSet, Graph, Mode};

fn main() -> steiner_enum::Result<()> {
    let square = Graph::undirected(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let pairs = reduce_terminal_sets(&square, &[vec![0, 2], vec![1, 3]])?;
    enum_minimal_steiner_forests(&square, &pairs, Mode::Improved, &mut |f: &EdgeSet| {
        println!("{:?}", f.to_vec());
        ControlFlow::Continue(())
    })?;

    let path = Graph::undirected(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])?;
    let merged = reduce_terminal_sets(&path, &[vec![0, 2], vec![2, 4], vec![1, 3]])?;
    println!("{:?}", merged.pairs());
    Ok(())
}
