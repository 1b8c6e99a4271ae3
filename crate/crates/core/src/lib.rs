//! Cycle structure analysis for small graphs, built around a full
//! certification of the Heawood graph.
//!
//! - [`graph`]: bitset graphs on at most 64 vertices, named constructors,
//!   distances and the edge-list/DOT formats.
//! - [`cycles`]: exhaustive simple-cycle enumeration, censuses, girth and
//!   disjoint 6-cycle pairs.
//! - [`zeon`]: an independent cycle count from nilpotent adjacency matrices.
//! - [`perm`], [`autgroup`]: permutations, permutation groups, automorphism
//!   groups, PGL(2, q) and abstract group isomorphism.
//! - [`orbits`]: group actions on cycles and pairs.
//! - [`lemmas`], [`certify`]: structural verifiers and the combined report.
//! - [`family`]: delta-wye / wye-delta exchanges and the K7 family.

pub mod autgroup;
pub mod certify;
pub mod cycles;
pub mod error;
pub mod family;
pub mod graph;
pub mod iso;
pub mod lemmas;
pub mod orbits;
pub mod perm;
pub mod zeon;

pub use error::{Error, Result};
pub use graph::Graph;
