//! Token configurations, slides, and reconfiguration sequences.

use std::fmt;

use thiserror::Error;

use crate::interval::{EndpointOrder, GraphError, IntervalGraph, Vertex};

/// An independent set, kept as a tuple of tokens ordered left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration(Vec<Vertex>);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} occurs twice")]
    Repeated(Vertex),
    #[error("vertices {0} and {1} are adjacent")]
    NotIndependent(Vertex, Vertex),
}

impl Configuration {
    /// Builds a configuration of vertices of `g`, sorting them along the line.
    pub fn new<I>(g: &IntervalGraph, vertices: I) -> Result<Self, ConfigError>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut tokens: Vec<Vertex> = vertices.into_iter().collect();
        for &v in &tokens {
            g.check(v)?;
        }
        tokens.sort_by_key(|&v| g.endpoint_ranks(v).0);
        for w in tokens.windows(2) {
            if w[0] == w[1] {
                return Err(ConfigError::Repeated(w[0]));
            }
            // sorted by left endpoint, so consecutive disjointness is enough
            if !g.left_of(w[0], w[1]) {
                return Err(ConfigError::NotIndependent(w[0], w[1]));
            }
        }
        Ok(Configuration(tokens))
    }

    pub fn from_ids<S: AsRef<str>>(g: &IntervalGraph, ids: &[S]) -> Result<Self, ConfigError> {
        let vs = ids
            .iter()
            .map(|id| g.vertex(id.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Configuration::new(g, vs)
    }

    /// Wraps tokens already known to be sorted and independent.
    pub(crate) fn from_sorted_unchecked(tokens: Vec<Vertex>) -> Self {
        Configuration(tokens)
    }

    pub fn tokens(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    /// 1-based position of `v` among the tokens.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.0.iter().position(|&t| t == v).map(|p| p + 1)
    }

    /// Token at 1-based position `p`.
    pub fn token(&self, p: usize) -> Vertex {
        self.0[p - 1]
    }

    /// Checks that the tokens are present in `g` and pairwise non-adjacent there.
    pub fn check_in(&self, g: &IntervalGraph) -> Result<(), ConfigError> {
        for &v in &self.0 {
            g.check(v)?;
        }
        for (i, &u) in self.0.iter().enumerate() {
            for &v in &self.0[i + 1..] {
                if g.adjacent(u, v) {
                    return Err(ConfigError::NotIndependent(u, v));
                }
            }
        }
        Ok(())
    }

    pub fn ids<'g>(&self, g: &'g IntervalGraph) -> Vec<&'g str> {
        self.0.iter().map(|&v| g.id(v)).collect()
    }
}

/// Slide of a token from `from` to the adjacent vertex `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub from: Vertex,
    pub to: Vertex,
}

impl Move {
    pub fn new(from: Vertex, to: Vertex) -> Self {
        Move { from, to }
    }

    pub fn reversed(self) -> Move {
        Move {
            from: self.to,
            to: self.from,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ReconfigSequence(Vec<Move>);

impl ReconfigSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn moves(&self) -> &[Move] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, mv: Move) {
        self.0.push(mv);
    }

    pub fn append(&mut self, other: ReconfigSequence) {
        self.0.extend(other.0);
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Move> {
        self.0.iter()
    }

    /// The sequence undoing `self`: moves in reverse order, each flipped.
    pub fn reversed(&self) -> ReconfigSequence {
        ReconfigSequence(self.0.iter().rev().map(|m| m.reversed()).collect())
    }

    /// The first `t` moves.
    pub fn prefix(&self, t: usize) -> ReconfigSequence {
        ReconfigSequence(self.0[..t.min(self.0.len())].to_vec())
    }

    pub fn from_ids<S: AsRef<str>>(g: &IntervalGraph, pairs: &[(S, S)]) -> Result<Self, GraphError> {
        pairs
            .iter()
            .map(|(u, v)| Ok(Move::new(g.vertex(u.as_ref())?, g.vertex(v.as_ref())?)))
            .collect()
    }

    pub fn id_pairs<'g>(&self, g: &'g IntervalGraph) -> Vec<(&'g str, &'g str)> {
        self.0.iter().map(|m| (g.id(m.from), g.id(m.to))).collect()
    }
}

impl FromIterator<Move> for ReconfigSequence {
    fn from_iter<T: IntoIterator<Item = Move>>(iter: T) -> Self {
        ReconfigSequence(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a ReconfigSequence {
    type Item = &'a Move;
    type IntoIter = std::slice::Iter<'a, Move>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Why a single slide is not allowed.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("no token on {0}")]
    FromNotInConfig(Vertex),
    #[error("{0} is already occupied")]
    ToOccupied(Vertex),
    #[error("{0} is not in the graph")]
    AbsentVertex(Vertex),
    #[error("{0} and {1} are not adjacent")]
    NonEdge(Vertex, Vertex),
    #[error("{to} would be adjacent to the token on {conflict}")]
    IndependenceViolated { to: Vertex, conflict: Vertex },
}

/// A failing step, numbered from 1.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("step {step}: {error}")]
pub struct StepError {
    pub step: usize,
    pub error: MoveError,
}

/// Applies one slide and reports the moved token's 1-based position before and after.
pub fn apply_move_tracked(
    g: &IntervalGraph,
    cfg: &Configuration,
    mv: Move,
) -> Result<(Configuration, usize, usize), MoveError> {
    let before = cfg.position(mv.from).ok_or(MoveError::FromNotInConfig(mv.from))?;
    if !g.contains(mv.to) {
        return Err(MoveError::AbsentVertex(mv.to));
    }
    if cfg.contains(mv.to) {
        return Err(MoveError::ToOccupied(mv.to));
    }
    if !g.adjacent(mv.from, mv.to) {
        return Err(MoveError::NonEdge(mv.from, mv.to));
    }
    if let Some(&conflict) = cfg
        .tokens()
        .iter()
        .find(|&&t| t != mv.from && g.adjacent(t, mv.to))
    {
        return Err(MoveError::IndependenceViolated { to: mv.to, conflict });
    }

    let mut tokens = cfg.tokens().to_vec();
    let mut p = before - 1;
    tokens[p] = mv.to;
    // single insertion step in either direction
    while p > 0 && g.cmp_in(EndpointOrder::Left, tokens[p], tokens[p - 1]).is_lt() {
        tokens.swap(p, p - 1);
        p -= 1;
    }
    while p + 1 < tokens.len() && g.cmp_in(EndpointOrder::Left, tokens[p + 1], tokens[p]).is_lt() {
        tokens.swap(p, p + 1);
        p += 1;
    }
    Ok((Configuration(tokens), before, p + 1))
}

pub fn apply_move(g: &IntervalGraph, cfg: &Configuration, mv: Move) -> Result<Configuration, MoveError> {
    apply_move_tracked(g, cfg, mv).map(|(c, _, _)| c)
}

/// Applies the first `t` moves of `s`.
pub fn apply_prefix(
    g: &IntervalGraph,
    cfg: &Configuration,
    s: &ReconfigSequence,
    t: usize,
) -> Result<Configuration, StepError> {
    let mut cur = cfg.clone();
    for (i, &mv) in s.moves()[..t.min(s.len())].iter().enumerate() {
        cur = apply_move(g, &cur, mv).map_err(|error| StepError { step: i + 1, error })?;
    }
    Ok(cur)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// First failing step, if any.
    pub failure: Option<StepError>,
    /// Configuration after the last valid step.
    pub end: Configuration,
    /// 1-based position of the moved token, per valid step.
    pub positions: Vec<usize>,
    /// No valid step changed the moved token's position.
    pub order_preserved: bool,
    /// `Some(false)` when an expected end was given and not reached.
    pub end_matches: Option<bool>,
}

impl ValidationReport {
    pub fn steps_valid(&self) -> bool {
        self.failure.is_none()
    }

    pub fn is_valid(&self) -> bool {
        self.failure.is_none() && self.end_matches != Some(false)
    }
}

/// Replays `s` from `start`, reporting rather than returning errors.
pub fn validate_sequence(
    g: &IntervalGraph,
    start: &Configuration,
    s: &ReconfigSequence,
    expected_end: Option<&Configuration>,
) -> ValidationReport {
    let mut cur = start.clone();
    let mut positions = Vec::with_capacity(s.len());
    let mut order_preserved = true;
    let mut failure = None;
    for (i, &mv) in s.iter().enumerate() {
        match apply_move_tracked(g, &cur, mv) {
            Ok((next, before, after)) => {
                order_preserved &= before == after;
                positions.push(before);
                cur = next;
            }
            Err(error) => {
                failure = Some(StepError { step: i + 1, error });
                break;
            }
        }
    }
    let end_matches = match (expected_end, &failure) {
        (Some(e), None) => Some(*e == cur),
        _ => None,
    };
    ValidationReport {
        failure,
        end: cur,
        positions,
        order_preserved,
        end_matches,
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpliceError {
    #[error("invalid splice range i={i}, j={j} for {len} tokens")]
    Range { i: usize, j: usize, len: usize },
    #[error("input sequence is invalid: {0}")]
    InvalidSequence(#[from] StepError),
    #[error("token {position} of the final set is not extreme; witness {witness:?}")]
    HypothesisViolated { position: usize, witness: Configuration },
    #[error("spliced set is not independent: {0}")]
    NotIndependent(ConfigError),
}

/// Keeps the outer tokens at their final positions and replays only the moves
/// of tokens strictly between positions `i` and `j`.
///
/// Positions are 1-based, `0 <= i < j <= len + 1`. If `i >= 1` the final `i`-th
/// token must be the `<=right`-minimum of the `i`-th tokens over all traversed
/// configurations, and if `j <= len` the final `j`-th token must be the
/// `<=left`-maximum of the `j`-th tokens. Returns the spliced start set and the
/// filtered sequence, which leads from it to the same final set.
pub fn splice(
    g: &IntervalGraph,
    start: &Configuration,
    s: &ReconfigSequence,
    i: usize,
    j: usize,
) -> Result<(Configuration, ReconfigSequence), SpliceError> {
    let len = start.len();
    if i >= j || j > len + 1 {
        return Err(SpliceError::Range { i, j, len });
    }

    let mut traversed = Vec::with_capacity(s.len() + 1);
    let mut positions = Vec::with_capacity(s.len());
    let mut cur = start.clone();
    traversed.push(cur.clone());
    for (t, &mv) in s.iter().enumerate() {
        let (next, before, _) =
            apply_move_tracked(g, &cur, mv).map_err(|error| StepError { step: t + 1, error })?;
        positions.push(before);
        cur = next;
        traversed.push(cur.clone());
    }
    let end = cur;

    if i >= 1 {
        let x = end.token(i);
        if let Some(w) = traversed
            .iter()
            .find(|c| g.cmp_in(EndpointOrder::Right, c.token(i), x).is_lt())
        {
            return Err(SpliceError::HypothesisViolated {
                position: i,
                witness: w.clone(),
            });
        }
    }
    if j <= len {
        let x = end.token(j);
        if let Some(w) = traversed
            .iter()
            .find(|c| g.cmp_in(EndpointOrder::Left, c.token(j), x).is_gt())
        {
            return Err(SpliceError::HypothesisViolated {
                position: j,
                witness: w.clone(),
            });
        }
    }

    let spliced: Vec<Vertex> = (1..=len)
        .map(|p| {
            if p <= i || p >= j {
                end.token(p)
            } else {
                start.token(p)
            }
        })
        .collect();
    let spliced = Configuration::new(g, spliced).map_err(SpliceError::NotIndependent)?;
    let filtered = s
        .iter()
        .zip(&positions)
        .filter(|(_, &p)| i < p && p < j)
        .map(|(&mv, _)| mv)
        .collect();
    Ok((spliced, filtered))
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} -> {})", self.from, self.to)
    }
}
