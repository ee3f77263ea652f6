//! Lists every simple s-t path of a small digraph and of K5.

use std::ops::ControlFlow;

use steiner_enum::path_enum::{enum_st_paths, trace_st_paths, Path};
use steiner_enum::Graph;

fn main() -> steiner_enum::Result<()> {
    // s = 0, t = 3, with a shortcut 1 -> 2
    let d = Graph::directed(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])?;
    enum_st_paths(&d, 0, 3, &mut |p: &Path| {
        println!("{:?}", p.vertices);
        ControlFlow::Continue(())
    })?;

    let k5: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
    let k5 = Graph::undirected(5, &k5)?;
    let stats = trace_st_paths(&k5, 0, 4, &mut |_: &Path| ControlFlow::Continue(()))?;
    println!("K5: {} paths, {} search steps, largest gap {}", stats.solutions, stats.nodes, stats.max_gap);
    Ok(())
}
