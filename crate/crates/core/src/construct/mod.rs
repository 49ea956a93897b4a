//! Constructive pipeline for strongly separating representations.
//!
//! Every builder verifies its own output before returning it.

mod base;
mod build;
mod coloring;
mod compose;
mod loopy;
mod partition;
mod strong;

pub use base::{base_construct, BaseOutcome};
pub use build::{build_representation, integer_fourth_root, BuildConfig, BuildReport, KRule};
pub use coloring::vizing_edge_coloring;
pub use compose::{
    block_direction, compose_components, compose_partition, round_robin, BlockDirection,
    Composition, PartitionAssembly,
};
pub use loopy::{loopy_orderings, loopy_size, LoopyOrderings};
pub use partition::{degree_bound, lll_partition, PartitionPlan};
pub use strong::strongify;
