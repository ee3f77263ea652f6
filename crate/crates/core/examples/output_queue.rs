//! Runs K6 with every vertex a terminal through the output queue and reports
//! the delay counters next to the tree shape.

use std::ops::ControlFlow;

use steiner_enum::profile::profile_tree;
use steiner_enum::steiner_tree::steiner_tree_events;
use steiner_enum::{EdgeSet, Graph, Mode, VertexSet};

fn main() -> steiner_enum::Result<()> {
    let n = 6;
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let g = Graph::undirected(n, &edges)?;
    let all = VertexSet::from_ids(n, 0..n);

    for mode in [Mode::Improved, Mode::Queued] {
        let mut sink = |_: &EdgeSet| ControlFlow::Continue(());
        let record = profile_tree(n, mode, &mut sink, |out| steiner_tree_events(&g, &all, true, out))?;
        println!("{mode:?}");
        print!("{}", record.summary());
    }
    Ok(())
}
