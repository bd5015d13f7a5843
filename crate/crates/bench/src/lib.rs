//! Benchmark fixtures shared by the criterion benches.

use tsr_core::generators::{random_instance, RandomModel};
use tsr_core::{Configuration, IntervalGraph};

/// First seed at or after `seed` whose random graph admits `k` tokens.
pub fn random_pair_from(n: usize, k: usize, seed: u64) -> (IntervalGraph, Configuration, Configuration) {
    (seed..)
        .find_map(|s| random_instance(n, k, s, RandomModel::UniformEndpoints))
        .expect("some seed admits k tokens")
}
