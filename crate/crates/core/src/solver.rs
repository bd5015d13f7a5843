//! Canonicalization to the `(k-1)`-extreme set and the reconfigurability decision.
//!
//! [`reconfigure_to_extreme`] sweeps a cursor `j` over adjacent token pairs,
//! calling [`push_apart`] on pair `(j, j+1)` with the closed neighbourhoods of
//! all other tokens removed. `lext[j]` and `rext[j+1]` remember the last
//! positions the pair settled on; whenever a pair moves the cursor steps back,
//! otherwise it advances. The run ends when the cursor reaches `k`.

use thiserror::Error;

use crate::interval::{EndpointOrder, IntervalGraph, Vertex};
use crate::push::{push_apart, push_token_right, PushError};
use crate::reconfig::{validate_sequence, ConfigError, Configuration, ReconfigSequence};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Push(#[from] PushError),
    #[error("expected {expected} tokens, got {actual}")]
    Size { expected: usize, actual: usize },
    #[error("at least {min} tokens required, got {k}")]
    TooFewTokens { k: usize, min: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// `8kn² + 2kn`, the bound on one canonicalizing sequence.
pub fn length_bound(n: usize, k: usize) -> usize {
    8 * k * n * n + 2 * k * n
}

/// `4nk + k`, the bound on the number of sweep iterations.
pub fn iteration_bound(n: usize, k: usize) -> usize {
    4 * n * k + k
}

/// Mutable state of one canonicalization run.
#[derive(Clone, Debug)]
pub struct SolverState {
    pub lext: Vec<Vertex>,
    pub rext: Vec<Vertex>,
    /// 1-based cursor; the pair under work is `(j, j+1)`.
    pub j: usize,
    pub gamma: isize,
    pub tokens: Vec<Vertex>,
    pub accumulated: ReconfigSequence,
    pub iterations: usize,
}

impl SolverState {
    pub fn new(start: &Configuration) -> Self {
        let tokens = start.tokens().to_vec();
        SolverState {
            lext: tokens.clone(),
            rext: tokens.clone(),
            j: 1,
            gamma: 1,
            tokens,
            accumulated: ReconfigSequence::new(),
            iterations: 0,
        }
    }

    pub fn k(&self) -> usize {
        self.tokens.len()
    }

    pub fn done(&self) -> bool {
        self.j >= self.k()
    }

    /// `j + 2 Σ_i [Index_left(rext_i) + (n - Index_right(lext_i) + 1)]`.
    pub fn potential(&self, g: &IntervalGraph) -> usize {
        let n = g.representation_len();
        let sum: usize = self
            .rext
            .iter()
            .zip(&self.lext)
            .map(|(&r, &l)| {
                g.order_index(EndpointOrder::Left, r) + (n - g.order_index(EndpointOrder::Right, l) + 1)
            })
            .sum();
        self.j + 2 * sum
    }

    /// One pass of the sweep loop.
    pub fn step(&mut self, g: &IntervalGraph) -> Result<(), SolveError> {
        let j = self.j;
        let (lo, hi) = (j - 1, j);
        let others = self
            .tokens
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != lo && i != hi)
            .map(|(_, &v)| v);
        let h = g.without_closed_neighborhoods(others);
        let pair = Configuration::from_sorted_unchecked(vec![self.tokens[lo], self.tokens[hi]]);
        let (pair, seq) = push_apart(&h, &pair)?;
        self.tokens[lo] = pair.token(1);
        self.tokens[hi] = pair.token(2);
        self.accumulated.append(seq);

        self.gamma = 1;
        if (self.tokens[lo], self.tokens[hi]) != (self.lext[lo], self.rext[hi]) {
            let checks = cfg!(debug_assertions);
            if checks
                && (g
                    .cmp_in(EndpointOrder::Right, self.tokens[lo], self.lext[lo])
                    .is_gt()
                    || g.cmp_in(EndpointOrder::Left, self.tokens[hi], self.rext[hi])
                        .is_lt())
            {
                return Err(SolveError::Invariant(format!(
                    "extreme positions regressed at pair {j}"
                )));
            }
            self.lext[lo] = self.tokens[lo];
            self.rext[hi] = self.tokens[hi];
            if j > 1 {
                self.gamma = -1;
            }
        }

        // tokens = (lext_1..lext_j, rext_{j+1}..rext_k)
        let aligned = (0..self.k()).all(|i| {
            let expect = if i < j { self.lext[i] } else { self.rext[i] };
            self.tokens[i] == expect
        });
        if !aligned {
            return Err(SolveError::Invariant(format!(
                "tokens out of line with lext/rext at pair {j}"
            )));
        }
        self.j = (j as isize + self.gamma) as usize;
        self.iterations += 1;
        Ok(())
    }
}

/// Result of canonicalizing one configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub extreme: Configuration,
    pub sequence: ReconfigSequence,
    /// Sweep iterations used; zero for single tokens.
    pub iterations: usize,
}

/// Reconfigures `start` (`k >= 2` tokens) into the `(k-1)`-extreme set of its
/// component in the token sliding graph.
pub fn reconfigure_to_extreme(
    g: &IntervalGraph,
    k: usize,
    start: &Configuration,
) -> Result<Canonical, SolveError> {
    if k < 2 {
        return Err(SolveError::TooFewTokens { k, min: 2 });
    }
    if start.len() != k {
        return Err(SolveError::Size {
            expected: k,
            actual: start.len(),
        });
    }
    start.check_in(g)?;

    let n = g.representation_len();
    let max_iterations = iteration_bound(n, k);
    let checks = cfg!(debug_assertions);
    let mut state = SolverState::new(start);
    let mut phi = if checks { state.potential(g) } else { 0 };
    while !state.done() {
        state.step(g)?;
        if state.iterations > max_iterations {
            return Err(SolveError::Invariant(format!(
                "{} sweep iterations exceed 4nk+k = {max_iterations}",
                state.iterations
            )));
        }
        if checks {
            let next = state.potential(g);
            if next <= phi || next > max_iterations {
                return Err(SolveError::Invariant(format!(
                    "potential went from {phi} to {next} (cap {max_iterations})"
                )));
            }
            phi = next;
        }
    }

    let bound = length_bound(n, k);
    if state.accumulated.len() > bound {
        return Err(SolveError::Invariant(format!(
            "sequence length {} exceeds 8kn²+2kn = {bound}",
            state.accumulated.len()
        )));
    }
    Ok(Canonical {
        extreme: Configuration::from_sorted_unchecked(state.tokens),
        sequence: state.accumulated,
        iterations: state.iterations,
    })
}

/// Canonical form for any `k >= 1`: a single token is pushed to the
/// `<=left`-maximum of its component, larger sets go through
/// [`reconfigure_to_extreme`].
pub fn canonicalize(g: &IntervalGraph, start: &Configuration) -> Result<Canonical, SolveError> {
    match start.len() {
        0 => Err(SolveError::TooFewTokens { k: 0, min: 1 }),
        1 => {
            start.check_in(g)?;
            let (w, sequence) = push_token_right(g, start.token(1)).map_err(ConfigError::from)?;
            Ok(Canonical {
                extreme: Configuration::from_sorted_unchecked(vec![w]),
                sequence,
                iterations: 0,
            })
        }
        k => reconfigure_to_extreme(g, k, start),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub reconfigurable: bool,
    /// A sequence from `I` to `J`, present iff reconfigurable.
    pub sequence: Option<ReconfigSequence>,
    pub canonical_initial: Canonical,
    pub canonical_target: Canonical,
}

/// Decides whether `initial` and `target` are reconfigurable and, if so,
/// returns the canonicalizing sequence of `initial` followed by the reversed
/// one of `target`.
pub fn decide_and_construct(
    g: &IntervalGraph,
    k: usize,
    initial: &Configuration,
    target: &Configuration,
) -> Result<Decision, SolveError> {
    for c in [initial, target] {
        if c.len() != k {
            return Err(SolveError::Size {
                expected: k,
                actual: c.len(),
            });
        }
    }
    let ci = canonicalize(g, initial)?;
    let cj = canonicalize(g, target)?;
    let reconfigurable = ci.extreme == cj.extreme;
    let sequence = reconfigurable.then(|| {
        let mut s = ci.sequence.clone();
        s.append(cj.sequence.reversed());
        s
    });
    if let Some(s) = &sequence {
        let bound = 2 * length_bound(g.representation_len(), k);
        if s.len() > bound {
            return Err(SolveError::Invariant(format!(
                "sequence length {} exceeds {bound}",
                s.len()
            )));
        }
        let report = validate_sequence(g, initial, s, Some(target));
        if !report.is_valid() {
            return Err(SolveError::Invariant(format!(
                "constructed sequence does not validate: {report:?}"
            )));
        }
    }
    Ok(Decision {
        reconfigurable,
        sequence,
        canonical_initial: ci,
        canonical_target: cj,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::Interval;
    use num_rational::Rational64;

    fn graph(raw: &[(&str, i64, i64)]) -> IntervalGraph {
        IntervalGraph::new(raw.iter().map(|&(id, l, r)| Interval::new(id, l, r))).unwrap()
    }

    fn g3() -> IntervalGraph {
        graph(&[("A", 0, 2), ("B", 1, 3), ("C", 4, 6), ("D", 5, 7)])
    }

    fn cfg(g: &IntervalGraph, ids: &[&str]) -> Configuration {
        Configuration::from_ids(g, ids).unwrap()
    }

    #[test]
    fn canonical_g3() {
        let g = g3();
        let c = reconfigure_to_extreme(&g, 2, &cfg(&g, &["B", "C"])).unwrap();
        assert_eq!(c.extreme.ids(&g), ["A", "D"]);
        assert_eq!(c.sequence.id_pairs(&g), [("B", "A"), ("C", "D")]);
        assert_eq!(c.iterations, 1);
    }

    #[test]
    fn canonical_g5() {
        let g = IntervalGraph::new([
            Interval::new("t", 0, 1),
            Interval::new("c", Rational64::new(1, 2), Rational64::new(9, 2)),
            Interval::new("a", 2, 3),
            Interval::new("b", 4, 5),
            Interval::new("f", Rational64::new(24, 5), 7),
        ])
        .unwrap();
        let c = reconfigure_to_extreme(&g, 2, &cfg(&g, &["a", "b"])).unwrap();
        assert_eq!(c.extreme.ids(&g), ["t", "f"]);
        assert_eq!(c.sequence.id_pairs(&g), [("b", "f"), ("a", "c"), ("c", "t")]);
    }

    #[test]
    fn reconfigure_argument_errors() {
        let g = g3();
        assert_eq!(
            reconfigure_to_extreme(&g, 1, &cfg(&g, &["A"])),
            Err(SolveError::TooFewTokens { k: 1, min: 2 })
        );
        assert!(matches!(
            reconfigure_to_extreme(&g, 3, &cfg(&g, &["A", "C"])),
            Err(SolveError::Size {
                expected: 3,
                actual: 2
            })
        ));
    }

    #[test]
    fn decide_g3() {
        let g = g3();
        let d = decide_and_construct(&g, 2, &cfg(&g, &["B", "C"]), &cfg(&g, &["A", "D"])).unwrap();
        assert!(d.reconfigurable);
        assert_eq!(d.sequence.unwrap().id_pairs(&g), [("B", "A"), ("C", "D")]);
        assert!(d.canonical_target.sequence.is_empty());
    }

    #[test]
    fn decide_single_token_components() {
        let g = IntervalGraph::new([
            Interval::new("E", 0, 1),
            Interval::new("F", Rational64::new(1, 2), Rational64::new(3, 2)),
            Interval::new("G2", 3, 4),
        ])
        .unwrap();
        let d = decide_and_construct(&g, 1, &cfg(&g, &["E"]), &cfg(&g, &["G2"])).unwrap();
        assert!(!d.reconfigurable);
        assert!(d.sequence.is_none());
        let d = decide_and_construct(&g, 1, &cfg(&g, &["E"]), &cfg(&g, &["F"])).unwrap();
        assert!(d.reconfigurable);
        assert_eq!(d.sequence.unwrap().id_pairs(&g), [("E", "F")]);
    }

    #[test]
    fn decide_size_mismatch() {
        let g = g3();
        assert!(matches!(
            decide_and_construct(&g, 2, &cfg(&g, &["B", "C"]), &cfg(&g, &["A"])),
            Err(SolveError::Size { .. })
        ));
    }

    #[test]
    fn three_tokens_in_a_row() {
        // three separate cliques: first two tokens go left, the last goes right
        let g = graph(&[
            ("x1", 0, 2),
            ("x2", 1, 3),
            ("y1", 4, 6),
            ("y2", 5, 7),
            ("z1", 8, 10),
            ("z2", 9, 11),
        ]);
        let c = reconfigure_to_extreme(&g, 3, &cfg(&g, &["x2", "y1", "z1"])).unwrap();
        assert_eq!(c.extreme.ids(&g), ["x1", "y1", "z2"]);
        assert!(
            validate_sequence(&g, &cfg(&g, &["x2", "y1", "z1"]), &c.sequence, Some(&c.extreme)).is_valid()
        );
    }

    #[test]
    fn bounds() {
        assert_eq!(length_bound(4, 2), 8 * 2 * 16 + 2 * 2 * 4);
        assert_eq!(iteration_bound(4, 2), 34);
    }
}
