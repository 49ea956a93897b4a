//! Reduction of dense graphs with a low-dimensional representation to a
//! consistent, one-side homogeneous form, and the search that refutes such
//! forms in three dimensions.

mod adversarial;
mod bipartize;
mod certificate;
mod force;
mod monotone;
mod peel;
mod refute;

pub use adversarial::{adversarial_instance, AdversarialConfig, AdversarialInstance};
pub use bipartize::{bipartize, cut_size};
pub use certificate::{check_consistent, HomogeneityCertificate};
pub use force::{
    core_threshold, force_homogeneous, min_average_degree, ForceHomoConfig, ForceHomoOutcome,
    MonotoneRecord, StageSummary,
};
pub use monotone::{longest_increasing, longest_monotone, monotone_floor, monotone_subset, Direction};
pub use peel::peel_min_degree;
pub use refute::{refute_homogeneous_rep, Refutation, RefutationCase};
