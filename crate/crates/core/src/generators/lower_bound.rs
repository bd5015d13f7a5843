//! The family `G_{m,k}` of interval graphs whose distinguished independent
//! sets need `Ω(k²m)` slides.
//!
//! Base intervals `a_{k-1}, …, a_1, v_1, …, v_N, b_1, …, b_k` (`N = m + 2k - 1`)
//! are pairwise disjoint in this order. A path interval `v_{i,i+1}` joins the
//! middles of `v_i` and `v_{i+1}`. Long intervals `l_i` run from `a_i` to
//! `v_{N-(k-1)-i}` and `r_i` from `v_{k-i+1}` to `b_i`.

use std::collections::BTreeSet;
use std::fmt;

use crate::interval::{Interval, IntervalGraph, Vertex};
use crate::reconfig::Configuration;

/// Role of an interval in `G_{m,k}`; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    BaseA(usize),
    BaseV(usize),
    BaseB(usize),
    /// `v_{i,i+1}`.
    Path(usize),
    LongL(usize),
    LongR(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::BaseA(i) => write!(f, "a{i}"),
            Role::BaseV(i) => write!(f, "v{i}"),
            Role::BaseB(i) => write!(f, "b{i}"),
            Role::Path(i) => write!(f, "v{i}-{}", i + 1),
            Role::LongL(i) => write!(f, "l{i}"),
            Role::LongR(i) => write!(f, "r{i}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LowerBoundInstance {
    pub m: usize,
    pub k: usize,
    pub graph: IntervalGraph,
    /// Role of each vertex, indexed by [`Vertex::index`].
    pub roles: Vec<Role>,
    /// `(v_1, …, v_k)`.
    pub initial: Configuration,
    /// `(b_1, …, b_k)`.
    pub target: Configuration,
}

impl LowerBoundInstance {
    pub fn role(&self, v: Vertex) -> Role {
        self.roles[v.index()]
    }

    pub fn vertex(&self, role: Role) -> Vertex {
        self.graph.vertex(&role.to_string()).expect("role exists")
    }

    /// `⌈k²m/4⌉`.
    pub fn distance_lower_bound(&self) -> usize {
        (self.k * self.k * self.m).div_ceil(4)
    }
}

/// `8k + 2m - 5`.
pub fn lower_bound_vertex_count(m: usize, k: usize) -> usize {
    8 * k + 2 * m - 5
}

/// Roles in the order their intervals are created.
pub fn roles(m: usize, k: usize) -> Vec<Role> {
    let n_v = m + 2 * k - 1;
    let mut out = Vec::new();
    out.extend((1..k).rev().map(Role::BaseA));
    out.extend((1..=n_v).map(Role::BaseV));
    out.extend((1..=k).map(Role::BaseB));
    out.extend((1..n_v).map(Role::Path));
    out.extend((1..k).map(Role::LongL));
    out.extend((1..=k).map(Role::LongR));
    out
}

/// Builds `G_{m,k}` with integer coordinates.
///
/// Base interval number `t` in left-to-right order occupies `[10t, 10t+8]`.
/// Open endpoints that coincide with another interval's endpoint are moved
/// one unit inward, which keeps every intended overlap (base intervals are
/// 8 units long) and removes every touching pair.
pub fn gen_lower_bound(m: usize, k: usize) -> LowerBoundInstance {
    assert!(m >= 1 && k >= 1, "G_(m,k) needs m, k >= 1");
    let n_v = m + 2 * k - 1;
    // slot of each base interval in line order
    let slot_a = |i: usize| (k - 1 - i) as i64;
    let slot_v = |i: usize| (k - 1 + i - 1) as i64;
    let slot_b = |i: usize| (k - 1 + n_v + i - 1) as i64;
    let left = |slot: i64| 10 * slot;
    let right = |slot: i64| 10 * slot + 8;
    let mid = |slot: i64| 10 * slot + 4;

    let roles = roles(m, k);
    let intervals = roles.iter().map(|&role| {
        let (l, r) = match role {
            Role::BaseA(i) => (left(slot_a(i)), right(slot_a(i))),
            Role::BaseV(i) => (left(slot_v(i)), right(slot_v(i))),
            Role::BaseB(i) => (left(slot_b(i)), right(slot_b(i))),
            Role::Path(i) => (mid(slot_v(i)) + 1, mid(slot_v(i + 1)) - 1),
            Role::LongL(i) => (left(slot_a(i)) + 1, right(slot_v(n_v - (k - 1) - i)) - 1),
            Role::LongR(i) => (left(slot_v(k - i + 1)) + 1, right(slot_b(i)) - 1),
        };
        Interval::new(role.to_string(), l, r)
    });
    let graph = IntervalGraph::new(intervals).expect("construction is well formed");
    let initial = Configuration::from_ids(
        &graph,
        &(1..=k).map(|i| Role::BaseV(i).to_string()).collect::<Vec<_>>(),
    )
    .expect("v_1..v_k are disjoint");
    let target = Configuration::from_ids(
        &graph,
        &(1..=k).map(|i| Role::BaseB(i).to_string()).collect::<Vec<_>>(),
    )
    .expect("b_1..b_k are disjoint");
    LowerBoundInstance {
        m,
        k,
        graph,
        roles,
        initial,
        target,
    }
}

/// Intended adjacency of `G_{m,k}`, derived from the combinatorial description
/// alone (which base and path intervals each interval spans). Pairs are
/// ordered `(min, max)`.
pub fn expected_adjacency(m: usize, k: usize) -> BTreeSet<(Role, Role)> {
    let n_v = m + 2 * k - 1;
    let mut edges = BTreeSet::new();
    let mut add = |x: Role, y: Role| {
        edges.insert(if x < y { (x, y) } else { (y, x) });
    };
    // path v_{i,i+1} meets v_i and v_{i+1}; path intervals are open and
    // share only endpoints with each other
    for i in 1..n_v {
        add(Role::Path(i), Role::BaseV(i));
        add(Role::Path(i), Role::BaseV(i + 1));
    }
    // l_i: from the left end of a_i to the right end of v_{N-(k-1)-i}
    for i in 1..k {
        let last = n_v - (k - 1) - i;
        for p in 1..=i {
            add(Role::LongL(i), Role::BaseA(p));
        }
        for p in 1..=last {
            add(Role::LongL(i), Role::BaseV(p));
        }
        // v_{p,p+1} starts in the middle of v_p
        for p in 1..=last.min(n_v - 1) {
            add(Role::LongL(i), Role::Path(p));
        }
    }
    // r_i: from the left end of v_{k-i+1} to the right end of b_i
    for i in 1..=k {
        let first = k - i + 1;
        for p in first..=n_v {
            add(Role::LongR(i), Role::BaseV(p));
        }
        for p in 1..=i {
            add(Role::LongR(i), Role::BaseB(p));
        }
        // v_{p,p+1} ends in the middle of v_{p+1}
        for p in first.saturating_sub(1).max(1)..n_v {
            add(Role::LongR(i), Role::Path(p));
        }
    }
    // every l contains v_1, every r contains v_N
    for i in 1..k {
        for j in (i + 1)..k {
            add(Role::LongL(i), Role::LongL(j));
        }
    }
    for i in 1..=k {
        for j in (i + 1)..=k {
            add(Role::LongR(i), Role::LongR(j));
        }
    }
    // l_i and r_j share the interior of v_{k-j+1} iff l_i reaches that far
    for i in 1..k {
        for j in 1..=k {
            if n_v - (k - 1) - i > k - j {
                add(Role::LongL(i), Role::LongR(j));
            }
        }
    }
    edges
}

/// Realized adjacency of a generated instance, in the same form as
/// [`expected_adjacency`].
pub fn realized_adjacency(inst: &LowerBoundInstance) -> BTreeSet<(Role, Role)> {
    let g = &inst.graph;
    let mut edges = BTreeSet::new();
    for u in g.vertices() {
        for v in g.neighbors(u) {
            let (x, y) = (inst.role(u), inst.role(v));
            if x < y {
                edges.insert((x, y));
            }
        }
    }
    edges
}
