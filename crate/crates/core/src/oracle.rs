//! Brute-force ground truth over the token sliding graph `R_k(G)`.
//!
//! Works on arbitrary graphs through [`AbstractGraph`]; interval graphs are
//! converted with their vertices numbered in `<=left` order, so sorted states
//! of an interval graph are exactly its line-ordered configurations.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::interval::{EndpointOrder, IntervalGraph, Vertex};
use crate::reconfig::{Configuration, Move, ReconfigSequence};

/// Default cap on the number of states explored by one search.
pub const DEFAULT_STATE_CAP: usize = 5_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("duplicate vertex id `{0}`")]
    DuplicateId(String),
    #[error("unknown vertex id `{0}`")]
    UnknownId(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("state {0:?} is not an independent set of distinct vertices")]
    InvalidState(Vec<String>),
    #[error("states have sizes {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("extreme index p={p} out of range for {k} tokens")]
    InvalidP { p: usize, k: usize },
    #[error("state space exceeds the cap of {0} states")]
    StateCap(usize),
}

/// Plain undirected graph on labelled vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractGraph {
    ids: Vec<String>,
    index: HashMap<String, u32>,
    adj: Vec<Vec<bool>>,
    neighbors: Vec<Vec<u32>>,
}

/// Sorted tuple of vertex indices of an [`AbstractGraph`].
pub type State = Vec<u32>;

impl AbstractGraph {
    pub fn new<S, E>(ids: Vec<S>, edges: E) -> Result<Self, OracleError>
    where
        S: Into<String>,
        E: IntoIterator<Item = (S, S)>,
    {
        let ids: Vec<String> = ids.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(ids.len());
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i as u32).is_some() {
                return Err(OracleError::DuplicateId(id.clone()));
            }
        }
        let n = ids.len();
        let mut g = AbstractGraph {
            ids,
            index,
            adj: vec![vec![false; n]; n],
            neighbors: vec![Vec::new(); n],
        };
        for (u, v) in edges {
            let (u, v): (String, String) = (u.into(), v.into());
            let a = g.lookup(&u)?;
            let b = g.lookup(&v)?;
            if a == b {
                return Err(OracleError::SelfLoop(u));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    /// Graph on `ids` with an edge wherever `edge(i, j)` holds (`i < j`).
    pub fn from_fn<F>(ids: Vec<String>, mut edge: F) -> Result<Self, OracleError>
    where
        F: FnMut(usize, usize) -> bool,
    {
        let n = ids.len();
        let mut g = AbstractGraph::new(ids, std::iter::empty::<(String, String)>())?;
        for i in 0..n {
            for j in (i + 1)..n {
                if edge(i, j) {
                    g.add_edge(i as u32, j as u32);
                }
            }
        }
        Ok(g)
    }

    fn add_edge(&mut self, a: u32, b: u32) {
        if !self.adj[a as usize][b as usize] {
            self.adj[a as usize][b as usize] = true;
            self.adj[b as usize][a as usize] = true;
            self.neighbors[a as usize].push(b);
            self.neighbors[b as usize].push(a);
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn lookup(&self, id: &str) -> Result<u32, OracleError> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| OracleError::UnknownId(id.to_owned()))
    }

    pub fn id(&self, v: u32) -> &str {
        &self.ids[v as usize]
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn adjacent(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize][v as usize]
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.neighbors[v as usize]
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted state from ids, checked to be independent.
    pub fn state<S: AsRef<str>>(&self, ids: &[S]) -> Result<State, OracleError> {
        let mut s = ids
            .iter()
            .map(|id| self.lookup(id.as_ref()))
            .collect::<Result<State, _>>()?;
        s.sort_unstable();
        self.check_state(&s)?;
        Ok(s)
    }

    pub fn state_ids(&self, s: &[u32]) -> Vec<String> {
        s.iter().map(|&v| self.id(v).to_owned()).collect()
    }

    pub fn is_independent(&self, s: &[u32]) -> bool {
        s.iter().enumerate().all(|(i, &u)| {
            s[i + 1..]
                .iter()
                .all(|&v| u != v && !self.adj[u as usize][v as usize])
        })
    }

    fn check_state(&self, s: &[u32]) -> Result<(), OracleError> {
        let sorted = s.windows(2).all(|w| w[0] < w[1]);
        let in_range = s.iter().all(|&v| (v as usize) < self.len());
        if sorted && in_range && self.is_independent(s) {
            Ok(())
        } else {
            Err(OracleError::InvalidState(
                s.iter()
                    .map(|&v| self.ids.get(v as usize).cloned().unwrap_or_else(|| v.to_string()))
                    .collect(),
            ))
        }
    }

    /// All states one slide away from `s`, with the slide that reaches them.
    pub fn slides(&self, s: &[u32]) -> Vec<((u32, u32), State)> {
        let mut out = Vec::new();
        for (p, &u) in s.iter().enumerate() {
            for &w in &self.neighbors[u as usize] {
                if s.contains(&w) {
                    continue;
                }
                let free = s
                    .iter()
                    .enumerate()
                    .all(|(q, &t)| q == p || !self.adj[t as usize][w as usize]);
                if free {
                    let mut next = s.to_vec();
                    next[p] = w;
                    next.sort_unstable();
                    out.push(((u, w), next));
                }
            }
        }
        out
    }
}

/// Enumerates all independent sets of size `k`, lexicographically by index.
pub fn enumerate_configurations(g: &AbstractGraph, k: usize) -> Vec<State> {
    fn extend(g: &AbstractGraph, k: usize, from: u32, cur: &mut State, out: &mut Vec<State>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in from..g.len() as u32 {
            if cur.iter().all(|&u| !g.adjacent(u, v)) {
                cur.push(v);
                extend(g, k, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if k <= g.len() {
        extend(g, k, 0, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Breadth-first search in `R_k(g)` with a state cap.
#[derive(Clone, Copy, Debug)]
pub struct StateSearch<'g> {
    graph: &'g AbstractGraph,
    cap: usize,
}

/// One connected component of `R_k(g)`, in BFS order from its root.
#[derive(Clone, Debug)]
pub struct Component {
    pub states: Vec<State>,
    pub index: HashMap<State, usize>,
    /// BFS parent and the slide from it, per state.
    parent: Vec<Option<(usize, (u32, u32))>>,
    pub dist: Vec<usize>,
}

impl Component {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn contains(&self, s: &[u32]) -> bool {
        self.index.contains_key(s)
    }

    /// Slides along the BFS tree from the root to `s`.
    pub fn path_from_root(&self, s: &[u32]) -> Option<Vec<(u32, u32)>> {
        let mut at = *self.index.get(s)?;
        let mut moves = Vec::new();
        while let Some((p, mv)) = self.parent[at] {
            moves.push(mv);
            at = p;
        }
        moves.reverse();
        Some(moves)
    }
}

impl<'g> StateSearch<'g> {
    pub fn new(graph: &'g AbstractGraph) -> Self {
        StateSearch {
            graph,
            cap: DEFAULT_STATE_CAP,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    /// Explores the component of `start`, stopping early once `stop` is found.
    fn explore(&self, start: &[u32], stop: Option<&[u32]>) -> Result<Component, OracleError> {
        self.graph.check_state(start)?;
        let mut comp = Component {
            states: vec![start.to_vec()],
            index: HashMap::from([(start.to_vec(), 0)]),
            parent: vec![None],
            dist: vec![0],
        };
        let mut queue = VecDeque::from([0usize]);
        if stop == Some(start) {
            return Ok(comp);
        }
        while let Some(at) = queue.pop_front() {
            let cur = comp.states[at].clone();
            for (mv, next) in self.graph.slides(&cur) {
                if comp.index.contains_key(&next) {
                    continue;
                }
                if comp.states.len() >= self.cap {
                    return Err(OracleError::StateCap(self.cap));
                }
                let id = comp.states.len();
                let found = stop == Some(next.as_slice());
                comp.index.insert(next.clone(), id);
                comp.states.push(next);
                comp.parent.push(Some((at, mv)));
                comp.dist.push(comp.dist[at] + 1);
                if found {
                    return Ok(comp);
                }
                queue.push_back(id);
            }
        }
        Ok(comp)
    }

    pub fn component(&self, start: &[u32]) -> Result<Component, OracleError> {
        self.explore(start, None)
    }

    /// Connectivity and, if connected, the shortest distance between two states.
    pub fn reconfigurable(&self, from: &[u32], to: &[u32]) -> Result<(bool, Option<usize>), OracleError> {
        Ok(match self.shortest_path(from, to)? {
            Some(p) => (true, Some(p.len())),
            None => (false, None),
        })
    }

    /// A shortest sequence of slides from `from` to `to`, if one exists.
    pub fn shortest_path(&self, from: &[u32], to: &[u32]) -> Result<Option<Vec<(u32, u32)>>, OracleError> {
        if from.len() != to.len() {
            return Err(OracleError::SizeMismatch(from.len(), to.len()));
        }
        self.graph.check_state(to)?;
        let comp = self.explore(from, Some(to))?;
        Ok(comp.path_from_root(to))
    }
}

/// BFS connectivity and shortest distance in `R_k(g)` between `from` and `to`.
pub fn bfs_reconfigurable(
    g: &AbstractGraph,
    from: &[u32],
    to: &[u32],
) -> Result<(bool, Option<usize>), OracleError> {
    StateSearch::new(g).reconfigurable(from, to)
}

/// Size of a largest clique, by exhaustive search.
pub fn max_clique_size(g: &AbstractGraph) -> usize {
    fn grow(g: &AbstractGraph, cand: &[u32], size: usize, best: &mut usize) {
        *best = (*best).max(size);
        for (i, &v) in cand.iter().enumerate() {
            if size + cand.len() - i <= *best {
                return;
            }
            let next: Vec<u32> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.adjacent(v, w))
                .collect();
            grow(g, &next, size + 1, best);
        }
    }
    let all: Vec<u32> = (0..g.len() as u32).collect();
    let mut best = 0;
    grow(g, &all, 0, &mut best);
    best
}

/// An interval graph viewed as an [`AbstractGraph`], with the vertex mapping.
#[derive(Clone, Debug)]
pub struct IntervalView {
    pub graph: AbstractGraph,
    /// Abstract index to interval vertex; indices follow `<=left`.
    pub vertices: Vec<Vertex>,
    position: HashMap<Vertex, u32>,
}

impl IntervalView {
    pub fn new(g: &IntervalGraph) -> Self {
        let vertices: Vec<Vertex> = g.ordered(EndpointOrder::Left).collect();
        let position: HashMap<Vertex, u32> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
        let ids = vertices.iter().map(|&v| g.id(v).to_owned()).collect();
        let graph = AbstractGraph::from_fn(ids, |i, j| g.adjacent(vertices[i], vertices[j]))
            .expect("interval ids are unique");
        IntervalView {
            graph,
            vertices,
            position,
        }
    }

    pub fn state(&self, c: &Configuration) -> State {
        c.tokens().iter().map(|v| self.position[v]).collect()
    }

    /// Line-ordered configuration of a state.
    pub fn configuration(&self, s: &[u32]) -> Configuration {
        Configuration::from_sorted_unchecked(s.iter().map(|&i| self.vertices[i as usize]).collect())
    }

    pub fn sequence(&self, slides: &[(u32, u32)]) -> ReconfigSequence {
        slides
            .iter()
            .map(|&(u, v)| Move::new(self.vertices[u as usize], self.vertices[v as usize]))
            .collect()
    }
}

/// All configurations in the component of `start`, in BFS order.
pub fn component_configurations(
    g: &IntervalGraph,
    start: &Configuration,
) -> Result<Vec<Configuration>, OracleError> {
    let view = IntervalView::new(g);
    let comp = StateSearch::new(&view.graph).component(&view.state(start))?;
    Ok(comp.states.iter().map(|s| view.configuration(s)).collect())
}

/// The `p`-extreme set of the component of `start`, computed from its
/// definition: coordinates `1..=p` are `<=right`-minima of the tokens at that
/// position over the component, the rest `<=left`-maxima.
pub fn extreme_set_of_component(
    g: &IntervalGraph,
    start: &Configuration,
    p: usize,
) -> Result<Configuration, OracleError> {
    let k = start.len();
    if p > k {
        return Err(OracleError::InvalidP { p, k });
    }
    let members = component_configurations(g, start)?;
    Ok(extreme_set_of(g, &members, p))
}

/// `p`-extreme set of an arbitrary nonempty family of equal-size configurations.
pub fn extreme_set_of(g: &IntervalGraph, family: &[Configuration], p: usize) -> Configuration {
    let k = family[0].len();
    let tokens = (1..=k)
        .map(|q| {
            let column = family.iter().map(|c| c.token(q));
            if q <= p {
                column
                    .min_by(|&a, &b| g.cmp_in(EndpointOrder::Right, a, b))
                    .unwrap()
            } else {
                column
                    .max_by(|&a, &b| g.cmp_in(EndpointOrder::Left, a, b))
                    .unwrap()
            }
        })
        .collect();
    // not necessarily independent for arbitrary families
    Configuration::from_sorted_unchecked(tokens)
}
