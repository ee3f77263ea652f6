#![allow(dead_code)]

use std::ops::ControlFlow;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use steiner_enum::EdgeSet;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Runs `run` with a sink that records every edge set, then sorts the
/// result. Panics on duplicates.
pub fn collect_edge_sets(run: impl FnOnce(&mut dyn FnMut(&EdgeSet) -> ControlFlow<()>)) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    run(&mut |s: &EdgeSet| {
        out.push(s.to_vec());
        ControlFlow::Continue(())
    });
    sorted_unique(out)
}

pub fn sorted_unique(mut out: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    out.sort();
    let before = out.len();
    out.dedup();
    assert_eq!(before, out.len(), "duplicate solutions");
    out
}
