//! Cross-checks the fast enumerator against the exhaustive oracle on random
//! instances, the way the test suites do.

use std::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use steiner_enum::generate::{random_connected, random_subset};
use steiner_enum::oracle::{brute_steiner_trees, DEFAULT_CAP_BITS};
use steiner_enum::steiner_tree::enum_minimal_steiner_trees;
use steiner_enum::{certify, EdgeSet, Mode, VertexSet};

fn main() -> steiner_enum::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for round in 0..20 {
        let n = rng.gen_range(3..=7);
        let g = random_connected(n, n + 2, &mut rng);
        let w = random_subset(n, rng.gen_range(2..=n), &mut rng);
        let mut fast = Vec::new();
        enum_minimal_steiner_trees(&g, &VertexSet::from_ids(n, w.iter().copied()), Mode::Queued, &mut |t: &EdgeSet| {
            fast.push(t.to_vec());
            ControlFlow::Continue(())
        })?;
        fast.sort();
        for t in &fast {
            certify::steiner_tree(&g, &w, t).expect("emitted trees are minimal");
        }
        let slow = brute_steiner_trees(&g, &w, DEFAULT_CAP_BITS)?;
        let verdict = if fast == slow.solutions { "ok" } else { "MISMATCH" };
        println!("round {round:2}: n={n} |W|={} trees={} {verdict}", w.len(), fast.len());
    }
    Ok(())
}
