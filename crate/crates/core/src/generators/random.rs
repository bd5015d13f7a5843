use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::interval::{Interval, IntervalGraph, Vertex};
use crate::reconfig::Configuration;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RandomModel {
    /// Both endpoints drawn uniformly from `0..=3n`, redrawn until distinct.
    #[default]
    UniformEndpoints,
    /// Left endpoint uniform in `0..=3n`, length uniform in `1..=4`; sparser
    /// graphs with larger independent sets.
    ShortIntervals,
}

/// Integer endpoints drawn by the seeded generator, before normalization.
pub fn random_intervals(n: usize, seed: u64, model: RandomModel) -> Vec<Interval> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = 3 * n.max(1) as i64;
    (0..n)
        .map(|i| match model {
            RandomModel::UniformEndpoints => loop {
                let a = rng.gen_range(0..=span);
                let b = rng.gen_range(0..=span);
                if a != b {
                    break Interval::new(format!("i{i}"), a.min(b), a.max(b));
                }
            },
            RandomModel::ShortIntervals => {
                let a = rng.gen_range(0..=span);
                Interval::new(format!("i{i}"), a, a + rng.gen_range(1..=4))
            }
        })
        .collect()
}

/// Random interval graph on `n >= 1` vertices, deterministic in `(n, seed, model)`.
pub fn gen_random_interval(n: usize, seed: u64, model: RandomModel) -> IntervalGraph {
    assert!(n >= 1, "random interval graph needs n >= 1");
    IntervalGraph::new(random_intervals(n, seed, model)).expect("generated intervals are valid")
}

/// A maximum independent set, greedily by right endpoint.
pub fn maximum_independent_set(g: &IntervalGraph) -> Vec<Vertex> {
    let mut chosen: Vec<Vertex> = Vec::new();
    for v in g.ordered(crate::interval::EndpointOrder::Right) {
        if chosen.last().is_none_or(|&u| g.left_of(u, v)) {
            chosen.push(v);
        }
    }
    chosen
}

/// A pseudo-random independent set of size `k`, or `None` if `g` has none.
pub fn random_configuration<R: Rng>(g: &IntervalGraph, k: usize, rng: &mut R) -> Option<Configuration> {
    let mis = maximum_independent_set(g);
    if mis.len() < k {
        return None;
    }
    let mut order: Vec<Vertex> = g.vertices().collect();
    for _ in 0..64 {
        order.shuffle(rng);
        let mut chosen: Vec<Vertex> = Vec::with_capacity(k);
        for &v in &order {
            if chosen.len() == k {
                break;
            }
            if chosen.iter().all(|&u| !g.adjacent(u, v)) {
                chosen.push(v);
            }
        }
        if chosen.len() == k {
            return Configuration::new(g, chosen).ok();
        }
    }
    // sliding window of a maximum independent set
    let offset = rng.gen_range(0..=mis.len() - k);
    Configuration::new(g, mis[offset..offset + k].to_vec()).ok()
}

/// A random graph with two size-`k` configurations drawn from a generator
/// seeded by `seed`, or `None` when the graph has no independent set that large.
pub fn random_instance(
    n: usize,
    k: usize,
    seed: u64,
    model: RandomModel,
) -> Option<(IntervalGraph, Configuration, Configuration)> {
    let g = gen_random_interval(n, seed, model);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let i = random_configuration(&g, k, &mut rng)?;
    let j = random_configuration(&g, k, &mut rng)?;
    Some((g, i, j))
}
