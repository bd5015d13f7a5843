//! Instance families: the lower-bound graphs, random interval graphs, and the
//! hardness reduction from H-word reachability.

pub mod hardness;
pub mod lower_bound;
pub mod random;

pub use hardness::{gen_hardness, hword_reachability_oracle, Digraph, HardnessError, HardnessInstance};
pub use lower_bound::{gen_lower_bound, lower_bound_vertex_count, LowerBoundInstance, Role};
pub use random::{
    gen_random_interval, maximum_independent_set, random_configuration, random_instance, RandomModel,
};
