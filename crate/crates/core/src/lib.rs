#![no_std]

//! Exact computation of the distance k-resolving domination number and its
//! companion invariants (metric dimension, distance k-domination number,
//! k-locating-domination number) on small simple graphs.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and the
//! command-line front end live in the `resdom` companion crate.
//!
//! Vertices are labelled `0..n` everywhere.

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
mod mask;

pub mod distance;
pub mod enumerate;
pub mod families;
pub mod generators;
pub mod graph;
pub mod iso;
pub mod metrics;
pub mod ops;
pub mod solvers;

pub use crate::distance::{all_pairs_distances, DistanceMatrix};
pub use crate::error::{FamilyError, GraphError, SolveError};
pub use crate::graph::Graph;
pub use crate::mask::{VertexMask, MAX_VERTICES};
pub use crate::metrics::{metrics, GraphMetrics};
pub use crate::solvers::{
    all_invariants, minimum_set, Invariant, SolverOptions, VertexSet, WitnessedInvariant,
};
