//! Interval graphs with a fixed representation.
//!
//! Every graph is built once from raw `(id, left, right)` triples and then
//! treated as immutable. Endpoints are normalized to ranks `0..2n` so that all
//! `2n` endpoints are pairwise distinct; induced subgraphs share the same
//! representation and only carry a membership mask, so vertex handles and
//! ids stay meaningful across [`IntervalGraph::restrict`].

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_rational::Rational64;
use thiserror::Error;

/// Exact endpoint coordinate.
pub type Coord = Rational64;

/// Handle to an interval of a graph's representation.
///
/// The handle is the insertion index of the interval; it is stable under
/// [`IntervalGraph::restrict`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(pub(crate) u32);

impl Vertex {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

pub type VertexSet = BTreeSet<Vertex>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub id: String,
    pub left: Coord,
    pub right: Coord,
}

impl Interval {
    pub fn new(id: impl Into<String>, left: impl Into<Coord>, right: impl Into<Coord>) -> Self {
        Interval {
            id: id.into(),
            left: left.into(),
            right: right.into(),
        }
    }

    /// Closed-interval intersection on the raw coordinates.
    pub fn intersects(&self, other: &Interval) -> bool {
        self.left <= other.right && other.left <= self.right
    }
}

/// Which of the two endpoint orders to compare by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EndpointOrder {
    /// Increasing left endpoints.
    Left,
    /// Increasing right endpoints.
    Right,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("interval list is empty")]
    Empty,
    #[error("duplicate interval id `{0}`")]
    DuplicateId(String),
    #[error("interval `{id}` has left endpoint {left} not below right endpoint {right}")]
    EmptyInterval { id: String, left: Coord, right: Coord },
    #[error("unknown interval id `{0}`")]
    UnknownId(String),
    #[error("vertex {0} is not part of this graph")]
    AbsentVertex(Vertex),
    #[error("a vertex cannot be compared with itself (`{0}`)")]
    SameVertex(String),
}

#[derive(Debug)]
struct Representation {
    intervals: Vec<Interval>,
    // normalized endpoint ranks in 0..2n
    left_key: Vec<u32>,
    right_key: Vec<u32>,
    // 1-based positions in the two orders over the full representation
    left_index: Vec<u32>,
    right_index: Vec<u32>,
    by_left: Vec<Vertex>,
    by_right: Vec<Vertex>,
    neighbors: Vec<Vec<Vertex>>,
    ids: HashMap<String, Vertex>,
}

/// An interval graph, possibly an induced subgraph of a larger representation.
#[derive(Clone)]
pub struct IntervalGraph {
    rep: Arc<Representation>,
    present: Vec<bool>,
    len: usize,
}

impl fmt::Debug for IntervalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.vertices().map(|v| {
                let iv = self.interval(v);
                (iv.id.as_str(), iv.left, iv.right)
            }))
            .finish()
    }
}

impl PartialEq for IntervalGraph {
    fn eq(&self, other: &Self) -> bool {
        self.present == other.present
            && (Arc::ptr_eq(&self.rep, &other.rep) || self.rep.intervals == other.rep.intervals)
    }
}

impl Eq for IntervalGraph {}

// Tie-break order at equal coordinates: left endpoints before right endpoints,
// then by insertion index. Touching closed intervals therefore stay adjacent.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum EndpointKind {
    Left,
    Right,
}

impl IntervalGraph {
    /// Builds a graph from raw intervals, normalizing the endpoints.
    pub fn new<I>(raw: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Interval>,
    {
        let intervals: Vec<Interval> = raw.into_iter().collect();
        if intervals.is_empty() {
            return Err(GraphError::Empty);
        }
        let n = intervals.len();
        let mut ids = HashMap::with_capacity(n);
        for (i, iv) in intervals.iter().enumerate() {
            if iv.left >= iv.right {
                return Err(GraphError::EmptyInterval {
                    id: iv.id.clone(),
                    left: iv.left,
                    right: iv.right,
                });
            }
            if ids.insert(iv.id.clone(), Vertex(i as u32)).is_some() {
                return Err(GraphError::DuplicateId(iv.id.clone()));
            }
        }

        let mut endpoints: Vec<(Coord, EndpointKind, usize)> = Vec::with_capacity(2 * n);
        for (i, iv) in intervals.iter().enumerate() {
            endpoints.push((iv.left, EndpointKind::Left, i));
            endpoints.push((iv.right, EndpointKind::Right, i));
        }
        endpoints.sort();
        let mut left_key = vec![0u32; n];
        let mut right_key = vec![0u32; n];
        for (rank, &(_, kind, i)) in endpoints.iter().enumerate() {
            match kind {
                EndpointKind::Left => left_key[i] = rank as u32,
                EndpointKind::Right => right_key[i] = rank as u32,
            }
        }

        let mut by_left: Vec<Vertex> = (0..n as u32).map(Vertex).collect();
        by_left.sort_by_key(|v| left_key[v.index()]);
        let mut by_right = by_left.clone();
        by_right.sort_by_key(|v| right_key[v.index()]);
        let mut left_index = vec![0u32; n];
        let mut right_index = vec![0u32; n];
        for (pos, v) in by_left.iter().enumerate() {
            left_index[v.index()] = pos as u32 + 1;
        }
        for (pos, v) in by_right.iter().enumerate() {
            right_index[v.index()] = pos as u32 + 1;
        }

        let mut neighbors = vec![Vec::new(); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if left_key[u] < right_key[v] && left_key[v] < right_key[u] {
                    neighbors[u].push(Vertex(v as u32));
                    neighbors[v].push(Vertex(u as u32));
                }
            }
        }

        Ok(IntervalGraph {
            rep: Arc::new(Representation {
                intervals,
                left_key,
                right_key,
                left_index,
                right_index,
                by_left,
                by_right,
                neighbors,
                ids,
            }),
            present: vec![true; n],
            len: n,
        })
    }

    /// Number of vertices present in this (sub)graph.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Size of the underlying representation, counting removed vertices.
    pub fn representation_len(&self) -> usize {
        self.rep.intervals.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.present.get(v.index()).copied().unwrap_or(false)
    }

    /// Present vertices in insertion order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.present
            .iter()
            .enumerate()
            .filter(|(_, &p)| p)
            .map(|(i, _)| Vertex(i as u32))
    }

    /// Looks up a present vertex by id.
    pub fn vertex(&self, id: &str) -> Result<Vertex, GraphError> {
        match self.rep.ids.get(id) {
            Some(&v) if self.contains(v) => Ok(v),
            _ => Err(GraphError::UnknownId(id.to_owned())),
        }
    }

    pub fn id(&self, v: Vertex) -> &str {
        &self.rep.intervals[v.index()].id
    }

    pub fn interval(&self, v: Vertex) -> &Interval {
        &self.rep.intervals[v.index()]
    }

    /// Normalized `(left, right)` endpoint ranks; all `2n` ranks are distinct.
    pub fn endpoint_ranks(&self, v: Vertex) -> (u32, u32) {
        (self.rep.left_key[v.index()], self.rep.right_key[v.index()])
    }

    /// 1-based position of `v` in the given order over the full representation.
    pub fn order_index(&self, order: EndpointOrder, v: Vertex) -> usize {
        match order {
            EndpointOrder::Left => self.rep.left_index[v.index()] as usize,
            EndpointOrder::Right => self.rep.right_index[v.index()] as usize,
        }
    }

    /// Present vertices sorted by the given order.
    pub fn ordered(&self, order: EndpointOrder) -> impl Iterator<Item = Vertex> + '_ {
        let seq = match order {
            EndpointOrder::Left => &self.rep.by_left,
            EndpointOrder::Right => &self.rep.by_right,
        };
        seq.iter().copied().filter(move |&v| self.contains(v))
    }

    /// Strict comparison of two distinct vertices under `order`.
    pub fn cmp_in(&self, order: EndpointOrder, u: Vertex, v: Vertex) -> Ordering {
        let key = match order {
            EndpointOrder::Left => &self.rep.left_key,
            EndpointOrder::Right => &self.rep.right_key,
        };
        key[u.index()].cmp(&key[v.index()])
    }

    /// Id-level comparison; rejects unknown ids and `u == v`.
    pub fn compare_order(&self, order: EndpointOrder, u: &str, v: &str) -> Result<Ordering, GraphError> {
        let (a, b) = (self.vertex(u)?, self.vertex(v)?);
        if a == b {
            return Err(GraphError::SameVertex(u.to_owned()));
        }
        Ok(self.cmp_in(order, a, b))
    }

    /// `u` lies entirely to the left of `v`.
    pub fn left_of(&self, u: Vertex, v: Vertex) -> bool {
        self.rep.right_key[u.index()] < self.rep.left_key[v.index()]
    }

    /// Whether the intervals of two distinct vertices intersect.
    ///
    /// Returns `false` for `u == v`; membership in this subgraph is not checked.
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        let r = &self.rep;
        u != v
            && r.left_key[u.index()] < r.right_key[v.index()]
            && r.left_key[v.index()] < r.right_key[u.index()]
    }

    /// Id-level adjacency; rejects unknown ids and `u == v`.
    pub fn adjacent_ids(&self, u: &str, v: &str) -> Result<bool, GraphError> {
        let (a, b) = (self.vertex(u)?, self.vertex(v)?);
        if a == b {
            return Err(GraphError::SameVertex(u.to_owned()));
        }
        Ok(self.adjacent(a, b))
    }

    /// Present neighbours of `v`, in insertion order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.rep.neighbors[v.index()]
            .iter()
            .copied()
            .filter(move |&w| self.contains(w))
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> Result<VertexSet, GraphError> {
        self.check(v)?;
        let mut set: VertexSet = self.neighbors(v).collect();
        set.insert(v);
        Ok(set)
    }

    /// Number of edges between present vertices.
    pub fn edge_count(&self) -> usize {
        self.vertices().map(|v| self.neighbors(v).count()).sum::<usize>() / 2
    }

    /// Induced subgraph on the present vertices outside `removed`.
    pub fn restrict(&self, removed: &VertexSet) -> Result<IntervalGraph, GraphError> {
        let mut present = self.present.clone();
        for &v in removed {
            self.check(v)?;
            present[v.index()] = false;
        }
        Ok(IntervalGraph {
            rep: Arc::clone(&self.rep),
            len: self.len - removed.len(),
            present,
        })
    }

    /// Removes the closed neighbourhoods of all given vertices.
    pub fn without_closed_neighborhoods<I>(&self, centers: I) -> IntervalGraph
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut present = self.present.clone();
        for c in centers {
            if c.index() < present.len() {
                present[c.index()] = false;
            }
            for &w in &self.rep.neighbors[c.index()] {
                present[w.index()] = false;
            }
        }
        let len = present.iter().filter(|&&p| p).count();
        IntervalGraph {
            rep: Arc::clone(&self.rep),
            present,
            len,
        }
    }

    /// Vertex set of the connected component containing `v`.
    pub fn component_of(&self, v: Vertex) -> Result<VertexSet, GraphError> {
        self.check(v)?;
        let mut seen = VertexSet::new();
        seen.insert(v);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        Ok(seen)
    }

    pub(crate) fn check(&self, v: Vertex) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::AbsentVertex(v))
        }
    }

    /// Ids of a vertex set, sorted.
    pub fn ids_of<'a, I>(&'a self, set: I) -> Vec<&'a str>
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        let mut ids: Vec<&str> = set.into_iter().map(|&v| self.id(v)).collect();
        ids.sort_unstable();
        ids
    }
}
