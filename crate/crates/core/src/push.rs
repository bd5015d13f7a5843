//! Canonical pushes of one token and of a pair of tokens.

use std::collections::VecDeque;

use thiserror::Error;

use crate::interval::{EndpointOrder, GraphError, IntervalGraph, Vertex};
use crate::reconfig::{ConfigError, Configuration, Move, ReconfigSequence};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PushError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("expected {expected} tokens, got {actual}")]
    Size { expected: usize, actual: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Direction {
    Left,
    Right,
}

impl Direction {
    /// `a` is preferred over `b` as a target or path vertex.
    fn prefers(self, g: &IntervalGraph, a: Vertex, b: Vertex) -> bool {
        match self {
            Direction::Left => g.cmp_in(EndpointOrder::Right, a, b).is_lt(),
            Direction::Right => g.cmp_in(EndpointOrder::Left, a, b).is_gt(),
        }
    }
}

fn push_token(
    h: &IntervalGraph,
    u: Vertex,
    dir: Direction,
) -> Result<(Vertex, ReconfigSequence), GraphError> {
    h.check(u)?;
    let n = h.representation_len();
    let mut dist = vec![usize::MAX; n];
    dist[u.index()] = 0;
    let mut queue = VecDeque::from([u]);
    let mut target = u;
    while let Some(x) = queue.pop_front() {
        if dir.prefers(h, x, target) {
            target = x;
        }
        for y in h.neighbors(x) {
            if dist[y.index()] == usize::MAX {
                dist[y.index()] = dist[x.index()] + 1;
                queue.push_back(y);
            }
        }
    }

    // walk back from the target, picking the preferred predecessor each time
    let mut path = vec![target];
    let mut cur = target;
    while cur != u {
        let d = dist[cur.index()];
        let mut best: Option<Vertex> = None;
        for y in h.neighbors(cur) {
            if dist[y.index()] + 1 == d && best.is_none_or(|b| dir.prefers(h, y, b)) {
                best = Some(y);
            }
        }
        cur = best.expect("BFS predecessor exists");
        path.push(cur);
    }
    path.reverse();
    let seq = path.windows(2).map(|w| Move::new(w[0], w[1])).collect();
    Ok((target, seq))
}

/// Slides a lone token from `u` to the `<=right`-minimum vertex of its component
/// along a shortest path.
pub fn push_token_left(h: &IntervalGraph, u: Vertex) -> Result<(Vertex, ReconfigSequence), GraphError> {
    push_token(h, u, Direction::Left)
}

/// Slides a lone token from `u` to the `<=left`-maximum vertex of its component
/// along a shortest path.
pub fn push_token_right(h: &IntervalGraph, u: Vertex) -> Result<(Vertex, ReconfigSequence), GraphError> {
    push_token(h, u, Direction::Right)
}

/// Moves two tokens to the 1-extreme set of their component in `R_2(h)`.
///
/// Alternates pushing the left token left (away from the right token's closed
/// neighbourhood) and the right token right, until a round moves nothing.
pub fn push_apart(
    h: &IntervalGraph,
    cfg: &Configuration,
) -> Result<(Configuration, ReconfigSequence), PushError> {
    if cfg.len() != 2 {
        return Err(PushError::Size {
            expected: 2,
            actual: cfg.len(),
        });
    }
    cfg.check_in(h)?;
    let (mut a, mut b) = (cfg.token(1), cfg.token(2));
    let mut seq = ReconfigSequence::new();
    loop {
        let (a2, s1) = push_token_left(&h.without_closed_neighborhoods([b]), a)?;
        a = a2;
        let (b2, s2) = push_token_right(&h.without_closed_neighborhoods([a]), b)?;
        b = b2;
        let idle = s1.is_empty() && s2.is_empty();
        seq.append(s1);
        seq.append(s2);
        if idle {
            break;
        }
    }
    debug_assert!(h.left_of(a, b));
    Ok((Configuration::from_sorted_unchecked(vec![a, b]), seq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::Interval;
    use crate::reconfig::validate_sequence;
    use num_rational::Rational64;

    fn graph(raw: &[(&str, i64, i64)]) -> IntervalGraph {
        IntervalGraph::new(raw.iter().map(|&(id, l, r)| Interval::new(id, l, r))).unwrap()
    }

    fn g5() -> IntervalGraph {
        IntervalGraph::new([
            Interval::new("t", 0, 1),
            Interval::new("c", Rational64::new(1, 2), Rational64::new(9, 2)),
            Interval::new("a", 2, 3),
            Interval::new("b", 4, 5),
            Interval::new("f", Rational64::new(24, 5), 7),
        ])
        .unwrap()
    }

    fn ids(g: &IntervalGraph, s: &ReconfigSequence) -> Vec<(String, String)> {
        s.id_pairs(g)
            .into_iter()
            .map(|(a, b)| (a.to_owned(), b.to_owned()))
            .collect()
    }

    fn pairs(p: &[(&str, &str)]) -> Vec<(String, String)> {
        p.iter().map(|&(a, b)| (a.to_owned(), b.to_owned())).collect()
    }

    #[test]
    fn push_single_tokens() {
        let g = graph(&[("A", 0, 2), ("B", 1, 3)]);
        let (w, s) = push_token_left(&g, g.vertex("B").unwrap()).unwrap();
        assert_eq!(g.id(w), "A");
        assert_eq!(ids(&g, &s), pairs(&[("B", "A")]));
        let (w, s) = push_token_right(&g, g.vertex("A").unwrap()).unwrap();
        assert_eq!(g.id(w), "B");
        assert_eq!(ids(&g, &s), pairs(&[("A", "B")]));

        let x = graph(&[("X", 0, 1)]);
        let v = x.vertex("X").unwrap();
        assert_eq!(push_token_left(&x, v).unwrap(), (v, ReconfigSequence::new()));
        assert_eq!(push_token_right(&x, v).unwrap(), (v, ReconfigSequence::new()));
    }

    #[test]
    fn push_along_chain() {
        let g = graph(&[("P1", 0, 3), ("P2", 2, 5), ("P3", 4, 7)]);
        let (w, s) = push_token_left(&g, g.vertex("P3").unwrap()).unwrap();
        assert_eq!(g.id(w), "P1");
        assert_eq!(ids(&g, &s), pairs(&[("P3", "P2"), ("P2", "P1")]));
        let (w, s) = push_token_right(&g, g.vertex("P1").unwrap()).unwrap();
        assert_eq!(g.id(w), "P3");
        assert_eq!(ids(&g, &s), pairs(&[("P1", "P2"), ("P2", "P3")]));
    }

    #[test]
    fn push_rejects_absent_vertex() {
        let g = graph(&[("A", 0, 2), ("B", 1, 3)]);
        let b = g.vertex("B").unwrap();
        let h = g.restrict(&[b].into()).unwrap();
        assert!(push_token_left(&h, b).is_err());
    }

    #[test]
    fn push_apart_g3() {
        let g = graph(&[("A", 0, 2), ("B", 1, 3), ("C", 4, 6), ("D", 5, 7)]);
        let start = Configuration::from_ids(&g, &["B", "C"]).unwrap();
        let (end, s) = push_apart(&g, &start).unwrap();
        assert_eq!(end.ids(&g), ["A", "D"]);
        assert_eq!(ids(&g, &s), pairs(&[("B", "A"), ("C", "D")]));
    }

    #[test]
    fn push_apart_isolated_pair() {
        let g = graph(&[("E", 0, 1), ("F", 2, 3)]);
        let start = Configuration::from_ids(&g, &["E", "F"]).unwrap();
        let (end, s) = push_apart(&g, &start).unwrap();
        assert_eq!(end, start);
        assert!(s.is_empty());
    }

    #[test]
    fn push_apart_needs_two_rounds() {
        let g = g5();
        let start = Configuration::from_ids(&g, &["a", "b"]).unwrap();
        let (end, s) = push_apart(&g, &start).unwrap();
        assert_eq!(end.ids(&g), ["t", "f"]);
        assert_eq!(ids(&g, &s), pairs(&[("b", "f"), ("a", "c"), ("c", "t")]));
        assert!(validate_sequence(&g, &start, &s, Some(&end)).is_valid());
        // idempotent
        let (again, s2) = push_apart(&g, &end).unwrap();
        assert_eq!(again, end);
        assert!(s2.is_empty());
    }

    #[test]
    fn push_apart_errors() {
        let g = g5();
        let one = Configuration::from_ids(&g, &["a"]).unwrap();
        assert_eq!(
            push_apart(&g, &one),
            Err(PushError::Size {
                expected: 2,
                actual: 1
            })
        );
        let start = Configuration::from_ids(&g, &["a", "b"]).unwrap();
        let h = g.restrict(&[g.vertex("b").unwrap()].into()).unwrap();
        assert!(matches!(push_apart(&h, &start), Err(PushError::Config(_))));
    }
}
