//! Sampled equivalence oracle and seeded family generation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::family::{Family, FamilyKind};
use crate::polytope::Polytope;
use crate::sampler::DirectionSampler;

/// Outcome of comparing two families as functions on a direction sample.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceReport {
    pub max_abs_deviation: f64,
    pub worst_direction: Vec<f64>,
    pub directions_tested: usize,
    pub tolerance: f64,
    pub passed: bool,
}

/// The fixed probes every equivalence check includes besides the sample:
/// the origin, the signed coordinate axes and the all-ones direction.
/// Min-max surfaces break along the axes, and the origin pins the
/// coexhauster normalization.
pub fn canonical_probes(space_dim: usize) -> Vec<Vec<f64>> {
    let mut probes = vec![vec![0.0; space_dim]];
    for i in 0..space_dim {
        for sign in [1.0, -1.0] {
            let mut axis = vec![0.0; space_dim];
            axis[i] = sign;
            probes.push(axis);
        }
    }
    probes.push(vec![1.0; space_dim]);
    probes
}

/// Evaluates both families at the canonical probes and every sampled
/// direction, reporting the largest absolute deviation and where it occurs.
/// The kinds may differ; representing the same function across kinds is the
/// point of converting.
pub fn check_equivalence(
    a: &Family,
    b: &Family,
    sampler: &DirectionSampler,
    tolerance: f64,
) -> Result<EquivalenceReport> {
    if a.space_dim() != b.space_dim() {
        return Err(Error::SpaceDimMismatch {
            a: a.space_dim(),
            b: b.space_dim(),
        });
    }
    if sampler.dim() != a.space_dim() {
        return Err(Error::SamplerDim {
            expected: a.space_dim(),
            actual: sampler.dim(),
        });
    }

    let mut directions = canonical_probes(a.space_dim());
    directions.extend(sampler.directions());

    let mut max_abs_deviation = 0.0;
    let mut worst_direction = directions[0].clone();
    for delta in &directions {
        let deviation = (a.eval(delta)? - b.eval(delta)?).abs();
        if deviation > max_abs_deviation {
            max_abs_deviation = deviation;
            worst_direction = delta.clone();
        }
    }
    Ok(EquivalenceReport {
        max_abs_deviation,
        worst_direction,
        directions_tested: directions.len(),
        tolerance,
        passed: max_abs_deviation <= tolerance,
    })
}

/// Deterministic family with `set_count` sets of 1..=`max_vertices` vertices
/// each, coordinates uniform in [-1, 1]. Coexhauster kinds get vertices in
/// `R^{space_dim + 1}` with the affine constant first.
pub fn random_family(
    space_dim: usize,
    set_count: usize,
    max_vertices: usize,
    kind: FamilyKind,
    seed: u64,
) -> Family {
    assert!(space_dim >= 1, "space_dim must be at least 1");
    assert!(set_count >= 1, "set_count must be at least 1");
    assert!(max_vertices >= 1, "max_vertices must be at least 1");
    let dim = kind.set_dim(space_dim);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sets = (0..set_count)
        .map(|_| {
            let vertex_count = rng.random_range(1..=max_vertices);
            let vertices = (0..vertex_count)
                .map(|_| (0..dim).map(|_| rng.random_range(-1.0..=1.0)).collect())
                .collect();
            Polytope::new(vertices).expect("random vertices are finite and nonempty")
        })
        .collect();
    Family::new(kind, space_dim, sets).expect("generated family is valid")
}
