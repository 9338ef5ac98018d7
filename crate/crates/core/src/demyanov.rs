//! The classical direction-based converter, realized by sampling.
//!
//! For every sampled unit direction, each member set contributes the
//! vertices attaining its support value in that direction (minimizers for
//! lower kinds, maximizers for upper kinds); their convex hull is one
//! output set and the output family has the dual kind. Exhausters are
//! sampled over the whole unit sphere of the argument space; coexhausters
//! over the half sphere of `R^{n+1}` with nonnegative first coordinate,
//! scanning with the plain inner product of the lifted vertices.
//!
//! The classical construction ranges over all unit directions; a finite
//! sample yields an approximation that is exact at the sampled directions
//! and one-sided in between, improving as sampling densifies.

use crate::error::{Error, Result};
use crate::family::Family;
use crate::polytope::{dot, Objective, Polytope};
use crate::reduce::merge_duplicate_sets;
use crate::sampler::{DirectionSampler, SamplerMode};
use crate::{ACTIVE_TOL, VERTEX_TOL};

/// Converts with the default active-vertex tolerance.
pub fn demyanov_convert(family: &Family, sampler: &DirectionSampler) -> Result<Family> {
    demyanov_convert_with(family, sampler, ACTIVE_TOL)
}

/// A vertex counts as active when its value is within `active_tol` of the
/// set's support value; a loose enough tolerance keeps whole argmin faces
/// (segments, facets) instead of a single tied vertex.
pub fn demyanov_convert_with(
    family: &Family,
    sampler: &DirectionSampler,
    active_tol: f64,
) -> Result<Family> {
    let ambient = family.kind().set_dim(family.space_dim());
    if sampler.dim() != ambient {
        return Err(Error::SamplerDim {
            expected: ambient,
            actual: sampler.dim(),
        });
    }
    if family.kind().is_coexhauster() {
        if sampler.mode() != SamplerMode::HalfSphereFirstCoordNonneg {
            return Err(Error::SamplerMode(
                "coexhauster conversion scans the half sphere with first coordinate >= 0"
                    .to_string(),
            ));
        }
    } else if sampler.mode() == SamplerMode::HalfSphereFirstCoordNonneg {
        return Err(Error::SamplerMode(
            "exhauster conversion must scan the whole sphere".to_string(),
        ));
    }

    let objective = if family.kind().is_upper() {
        Objective::Max
    } else {
        Objective::Min
    };
    let mut sets = Vec::new();
    for direction in sampler.directions() {
        let mut active: Vec<Vec<f64>> = Vec::new();
        for set in family.sets() {
            let level = set.support(&direction, objective);
            for v in set.vertices() {
                if (dot(v, &direction) - level).abs() <= active_tol {
                    active.push(v.clone());
                }
            }
        }
        sets.push(Polytope::new(active)?);
    }
    let sets = merge_duplicate_sets(sets, VERTEX_TOL);
    Family::new(family.kind().dual(), family.space_dim(), sets)
}
