//! Token sliding reconfiguration of independent sets in interval graphs.
//!
//! Given two independent sets of size `k` in an interval graph, the solver
//! decides whether one can be turned into the other by sliding tokens along
//! edges while staying independent, and if so builds a sequence of at most
//! `2(8kn² + 2kn)` slides. Both sets are canonicalized to the `(k-1)`-extreme
//! set of their component; they are reconfigurable iff the canonical forms agree.
//!
//! The [`oracle`] module is a brute-force reference used for verification,
//! and [`generators`] supplies the lower-bound family, random instances, and
//! the incomparability-graph hardness reduction.
//!
//! ```
//! use tsr_core::{decide_and_construct, Configuration, Interval, IntervalGraph};
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let g = IntervalGraph::new([
//!     Interval::new("A", 0, 2),
//!     Interval::new("B", 1, 3),
//!     Interval::new("C", 4, 6),
//!     Interval::new("D", 5, 7),
//! ])?;
//! let i = Configuration::from_ids(&g, &["B", "C"])?;
//! let j = Configuration::from_ids(&g, &["A", "D"])?;
//! let d = decide_and_construct(&g, 2, &i, &j)?;
//! assert!(d.reconfigurable);
//! assert_eq!(d.sequence.unwrap().id_pairs(&g), [("B", "A"), ("C", "D")]);
//! # Ok(())
//! # }
//! ```

#![forbid(unsafe_code)]

pub mod generators;
pub mod interval;
pub mod oracle;
pub mod push;
pub mod reconfig;
pub mod solver;

pub use interval::{Coord, EndpointOrder, GraphError, Interval, IntervalGraph, Vertex, VertexSet};
pub use push::{push_apart, push_token_left, push_token_right, PushError};
pub use reconfig::{
    apply_move, apply_prefix, splice, validate_sequence, ConfigError, Configuration, Move, MoveError,
    ReconfigSequence, SpliceError, StepError, ValidationReport,
};
pub use solver::{
    canonicalize, decide_and_construct, length_bound, reconfigure_to_extreme, Canonical, Decision, SolveError,
};
