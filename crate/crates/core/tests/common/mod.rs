#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use tsr_core::oracle::{enumerate_configurations, IntervalView, StateSearch};
use tsr_core::{Configuration, IntervalGraph, ReconfigSequence};

/// All size-`k` configurations of `g`.
pub fn all_configurations(g: &IntervalGraph, k: usize) -> Vec<Configuration> {
    let view = IntervalView::new(g);
    enumerate_configurations(&view.graph, k)
        .iter()
        .map(|s| view.configuration(s))
        .collect()
}

/// Components of `R_k(g)`, each listed in BFS order from its first member.
pub fn components(g: &IntervalGraph, k: usize) -> Vec<Vec<Configuration>> {
    let view = IntervalView::new(g);
    let search = StateSearch::new(&view.graph);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for s in enumerate_configurations(&view.graph, k) {
        if seen.contains(&s) {
            continue;
        }
        let comp = search.component(&s).unwrap();
        seen.extend(comp.states.iter().cloned());
        out.push(comp.states.iter().map(|s| view.configuration(s)).collect());
    }
    out
}

/// A random walk of `steps` slides from `start`.
pub fn random_walk<R: Rng>(
    g: &IntervalGraph,
    start: &Configuration,
    steps: usize,
    rng: &mut R,
) -> ReconfigSequence {
    let view = IntervalView::new(g);
    let mut cur = view.state(start);
    let mut moves = Vec::new();
    for _ in 0..steps {
        let options = view.graph.slides(&cur);
        let Some((mv, next)) = options.choose(rng) else {
            break;
        };
        moves.push(*mv);
        cur = next.clone();
    }
    view.sequence(&moves)
}

/// Oracle shortest sequence between two configurations, if any.
pub fn shortest(g: &IntervalGraph, a: &Configuration, b: &Configuration) -> Option<ReconfigSequence> {
    let view = IntervalView::new(g);
    StateSearch::new(&view.graph)
        .shortest_path(&view.state(a), &view.state(b))
        .unwrap()
        .map(|p| view.sequence(&p))
}
