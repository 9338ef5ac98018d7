//! Exhausters and coexhausters: finite families of convex polytopes that
//! represent a function as a min of maxima or a max of minima of linear
//! (exhausters) or affine (coexhausters) functions.
//!
//! The crate evaluates all four representations, converts between the upper
//! (min-max) and lower (max-min) forms — combinatorially through vertex
//! selections, or classically by scanning directions — prunes the result,
//! and ships a sampled equivalence oracle to certify that two families
//! represent the same function.

mod convert;
mod demyanov;
mod error;
mod family;
#[cfg(test)]
mod fixtures;
mod io;
mod matrix;
mod polytope;
mod reduce;
mod sampler;
mod verify;

pub use convert::{conversion_certificate, convert, convert_with, ConvertOptions, DEFAULT_CAP};
pub use demyanov::{demyanov_convert, demyanov_convert_with};
pub use error::{Error, Result};
pub use family::{Family, FamilyKind};
pub use io::{family_from_json, family_to_json, read_family, write_family};
pub use matrix::PayoffMatrix;
pub use polytope::{Objective, Polytope};
pub use reduce::{dedup_sets, prune_sampled, prune_sampled_with};
pub use sampler::{DirectionSampler, SamplerMode};
pub use verify::{canonical_probes, check_equivalence, random_family, EquivalenceReport};

/// Vertices closer than this coincide and are merged at construction.
pub const VERTEX_TOL: f64 = 1e-12;
/// Sampled directions are unit vectors to within this.
pub const NORM_TOL: f64 = 1e-12;
/// Default tolerance when two function values count as equal.
pub const EQ_TOL: f64 = 1e-9;
/// Default slack for picking the vertices that attain a support value.
pub const ACTIVE_TOL: f64 = 1e-9;
