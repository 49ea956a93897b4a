//! Separating and strongly separating representations of graphs.
//!
//! A representation is a family of linear orderings of the vertex set. Two
//! disjoint edges are separated in an ordering when both ends of one come
//! before both ends of the other; a representation is separating when every
//! pair of disjoint edges is separated somewhere.
//!
//! - [`separation`]: verifiers that return a concrete witness on failure.
//! - [`construct`]: randomized recursive construction of strongly separating
//!   representations, every stage verified.
//! - [`exact`]: exact dimensions of small graphs by set cover.
//! - [`homogenize`]: peeling, bipartization, reduction to homogeneous form,
//!   and refutation of homogeneous 3-ordering representations.
//! - [`cli`]: the `sepdim` command-line front end.
//!
//! All randomness is seeded; see [`seed`].

pub mod cli;
pub mod construct;
pub mod error;
pub mod exact;
pub mod graph;
pub mod homogenize;
pub mod seed;
pub mod separation;

pub use error::{Error, Result};
