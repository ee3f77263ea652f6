//! Bridges, contraction and lowest common ancestors on a small graph.

use steiner_enum::graph::{bridges, contract, lca_index};
use steiner_enum::{EdgeSet, Graph};

fn main() -> steiner_enum::Result<()> {
    // A triangle 0-1-2 with a tail 2-3-4.
    let g = Graph::undirected(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])?;
    println!("bridges: {:?}", bridges(&g)?.to_vec());

    let c = contract(&g, &EdgeSet::from_ids(g.edge_id_bound(), [0, 1]))?;
    println!("contracted: {} vertices, map {:?}", c.graph.n(), c.map);

    let tree = EdgeSet::from_ids(g.edge_id_bound(), [0, 1, 3, 4]);
    let idx = lca_index(&g, &tree, 0)?;
    println!("lca(4, 1) = {:?}, depth(4) = {}", idx.lca(4, 1), idx.depth(4));
    Ok(())
}
