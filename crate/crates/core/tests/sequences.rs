mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tsr_core::generators::{gen_random_interval, random_configuration, RandomModel};
use tsr_core::oracle::{extreme_set_of, IntervalView, StateSearch};
use tsr_core::{
    apply_move, apply_prefix, splice, validate_sequence, Configuration, EndpointOrder, IntervalGraph,
    ReconfigSequence, SpliceError, Vertex,
};

use common::{components, random_walk, shortest};

fn graph(n: usize, seed: u64) -> IntervalGraph {
    let model = if seed.is_multiple_of(2) {
        RandomModel::ShortIntervals
    } else {
        RandomModel::UniformEndpoints
    };
    gen_random_interval(n, seed, model)
}

fn traversed(g: &IntervalGraph, start: &Configuration, s: &ReconfigSequence) -> Vec<Configuration> {
    (0..=s.len())
        .map(|t| apply_prefix(g, start, s, t).unwrap())
        .collect()
}

/// Whether the splice hypotheses for `(i, j)` hold, checked from the definition.
fn hypotheses_hold(g: &IntervalGraph, seen: &[Configuration], i: usize, j: usize) -> bool {
    let end = seen.last().unwrap();
    let len = end.len();
    let left_ok = i == 0
        || seen
            .iter()
            .all(|c| !g.cmp_in(EndpointOrder::Right, c.token(i), end.token(i)).is_lt());
    let right_ok = j == len + 1
        || seen
            .iter()
            .all(|c| !g.cmp_in(EndpointOrder::Left, c.token(j), end.token(j)).is_gt());
    left_ok && right_ok
}

/// Checks every `(i, j)` on one trial; returns how many satisfied the hypotheses.
fn check_splices(g: &IntervalGraph, start: &Configuration, s: &ReconfigSequence) -> usize {
    let seen = traversed(g, start, s);
    let end = seen.last().unwrap().clone();
    let len = start.len();
    let mut accepted = 0;
    for i in 0..=len {
        for j in (i + 1)..=(len + 1) {
            let result = splice(g, start, s, i, j);
            if !hypotheses_hold(g, &seen, i, j) {
                assert!(matches!(result, Err(SpliceError::HypothesisViolated { .. })));
                continue;
            }
            accepted += 1;
            let (a, filtered) = result.unwrap();
            // aligned sets: outer tokens fixed at the end, inner ones following s
            let aligned: Vec<Vec<Vertex>> = seen
                .iter()
                .map(|c| {
                    (1..=len)
                        .map(|p| {
                            if p <= i || p >= j {
                                end.token(p)
                            } else {
                                c.token(p)
                            }
                        })
                        .collect()
                })
                .collect();
            for set in &aligned {
                assert!(
                    Configuration::new(g, set.iter().copied()).is_ok(),
                    "aligned set independent"
                );
            }
            assert_eq!(a.tokens(), aligned[0].as_slice());
            let report = validate_sequence(g, &a, &filtered, Some(&end));
            assert!(report.is_valid(), "spliced sequence valid (i={i}, j={j})");
            assert!(report.order_preserved);
            // every configuration visited by the spliced sequence is an aligned set
            for t in 0..=filtered.len() {
                let c = apply_prefix(g, &a, &filtered, t).unwrap();
                assert!(aligned.iter().any(|set| set.as_slice() == c.tokens()));
            }
        }
    }
    accepted
}

/// A random walk followed by an oracle path to a `p`-extreme set, so that
/// nontrivial splice ranges satisfy their hypotheses.
fn trial(g: &IntervalGraph, k: usize, rng: &mut ChaCha8Rng) -> Option<(Configuration, ReconfigSequence)> {
    let start = random_configuration(g, k, rng)?;
    let mut s = random_walk(g, &start, rng.gen_range(0..6), rng);
    let mid = apply_prefix(g, &start, &s, s.len()).unwrap();
    let comp: Vec<Configuration> = components(g, k).into_iter().find(|c| c.contains(&mid)).unwrap();
    let target = extreme_set_of(g, &comp, rng.gen_range(0..=k));
    s.append(shortest(g, &mid, &target).unwrap());
    Some((start, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn splicing_is_sound(n in 2usize..=8, k in 1usize..=3, seed in any::<u64>()) {
        let g = graph(n, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some((start, s)) = trial(&g, k, &mut rng) {
            check_splices(&g, &start, &s);
        }
    }

    #[test]
    fn splicing_on_pure_random_walks(n in 2usize..=8, k in 1usize..=3, seed in any::<u64>()) {
        let g = graph(n, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        if let Some(start) = random_configuration(&g, k, &mut rng) {
            let s = random_walk(&g, &start, 8, &mut rng);
            check_splices(&g, &start, &s);
        }
    }

    #[test]
    fn extreme_sets_lie_in_their_component(n in 1usize..=8, l in 1usize..=3, seed in any::<u64>()) {
        let g = graph(n, seed);
        for comp in components(&g, l) {
            for p in 0..=l {
                let x = extreme_set_of(&g, &comp, p);
                prop_assert!(x.check_in(&g).is_ok());
                prop_assert!(comp.contains(&x), "p={} extreme set outside its component", p);
            }
        }
    }

    #[test]
    fn prefixes_and_reversal_cohere(n in 1usize..=9, k in 1usize..=3, seed in any::<u64>(), steps in 0usize..12) {
        let g = graph(n, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some(start) = random_configuration(&g, k, &mut rng) else { return Ok(()) };
        let s = random_walk(&g, &start, steps, &mut rng);
        let mut cur = start.clone();
        for (t, &mv) in s.iter().enumerate() {
            prop_assert_eq!(&apply_prefix(&g, &start, &s, t).unwrap(), &cur);
            cur = apply_move(&g, &cur, mv).unwrap();
            prop_assert_eq!(&apply_prefix(&g, &start, &s, t + 1).unwrap(), &cur);
        }
        let report = validate_sequence(&g, &start, &s, Some(&cur));
        prop_assert!(report.is_valid());
        prop_assert!(report.order_preserved);
        let back = validate_sequence(&g, &cur, &s.reversed(), Some(&start));
        prop_assert!(back.is_valid());
        prop_assert!(back.order_preserved);
        prop_assert_eq!(s.reversed().reversed(), s);
    }

    #[test]
    fn oracle_distances_are_a_metric_on_components(n in 1usize..=8, k in 1usize..=3, seed in any::<u64>()) {
        let g = graph(n, seed);
        let view = IntervalView::new(&g);
        let search = StateSearch::new(&view.graph);
        for comp in components(&g, k).into_iter().take(3) {
            let states: Vec<_> = comp.iter().take(6).map(|c| view.state(c)).collect();
            let d = |a: &[u32], b: &[u32]| search.reconfigurable(a, b).unwrap().1.unwrap();
            for a in &states {
                prop_assert_eq!(d(a, a), 0);
                for b in &states {
                    prop_assert_eq!(d(a, b), d(b, a));
                    for c in &states {
                        prop_assert!(d(a, c) <= d(a, b) + d(b, c));
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_slides_are_exactly_the_valid_moves(n in 1usize..=8, k in 1usize..=3, seed in any::<u64>()) {
        let g = graph(n, seed);
        let view = IntervalView::new(&g);
        for comp in components(&g, k).into_iter().take(4) {
            for c in comp.iter().take(5) {
                let slides: Vec<_> = view.graph.slides(&view.state(c));
                let mut valid = 0;
                for &from in c.tokens() {
                    for to in g.vertices() {
                        let mv = tsr_core::Move::new(from, to);
                        if let Ok(next) = apply_move(&g, c, mv) {
                            valid += 1;
                            prop_assert!(slides.iter().any(|(_, s)| *s == view.state(&next)));
                        }
                    }
                }
                prop_assert_eq!(valid, slides.len());
            }
        }
    }
}

#[test]
fn splice_trials_accept_nontrivial_ranges() {
    // guards against a trial generator that only ever exercises trivial ranges
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut nontrivial = 0;
    for seed in 0..300u64 {
        let g = graph(8, seed);
        for k in 2..=3 {
            if let Some((start, s)) = trial(&g, k, &mut rng) {
                nontrivial += check_splices(&g, &start, &s) - 1;
            }
        }
    }
    assert!(nontrivial > 300, "only {nontrivial} nontrivial splices");
}
