//! Deterministic, seeded generation of unit directions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SamplerMode {
    /// Uniform on the whole unit sphere.
    FullSphere,
    /// Uniform on the half sphere with first coordinate >= 0; the domain the
    /// coexhauster converters range over.
    HalfSphereFirstCoordNonneg,
    /// Exact equally spaced angles on the unit circle; dimension 2 only.
    UniformAngles2d,
}

/// Emits `count` unit directions in `R^dim`, the same ones for the same
/// `(dim, count, seed, mode)`.
#[derive(Clone, Debug)]
pub struct DirectionSampler {
    dim: usize,
    count: usize,
    seed: u64,
    mode: SamplerMode,
}

impl DirectionSampler {
    pub fn new(dim: usize, count: usize, seed: u64, mode: SamplerMode) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroSpaceDim);
        }
        if mode == SamplerMode::UniformAngles2d && dim != 2 {
            return Err(Error::UniformAnglesDim { actual: dim });
        }
        Ok(Self {
            dim,
            count,
            seed,
            mode,
        })
    }

    pub fn full_sphere(dim: usize, count: usize, seed: u64) -> Result<Self> {
        Self::new(dim, count, seed, SamplerMode::FullSphere)
    }

    pub fn half_sphere(dim: usize, count: usize, seed: u64) -> Result<Self> {
        Self::new(dim, count, seed, SamplerMode::HalfSphereFirstCoordNonneg)
    }

    pub fn uniform_angles_2d(count: usize) -> Self {
        Self::new(2, count, 0, SamplerMode::UniformAngles2d).expect("dimension 2 is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn mode(&self) -> SamplerMode {
        self.mode
    }

    pub fn directions(&self) -> Vec<Vec<f64>> {
        match self.mode {
            SamplerMode::UniformAngles2d => (0..self.count)
                .map(|t| {
                    let theta = 2.0 * std::f64::consts::PI * t as f64 / self.count as f64;
                    vec![theta.cos(), theta.sin()]
                })
                .collect(),
            SamplerMode::FullSphere | SamplerMode::HalfSphereFirstCoordNonneg => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                (0..self.count)
                    .map(|_| self.sphere_point(&mut rng))
                    .collect()
            }
        }
    }

    fn sphere_point(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        loop {
            let v: Vec<f64> = (0..self.dim).map(|_| rng.sample(StandardNormal)).collect();
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm < 1e-8 {
                continue; // degenerate draw, resample
            }
            let mut unit: Vec<f64> = v.iter().map(|x| x / norm).collect();
            if self.mode == SamplerMode::HalfSphereFirstCoordNonneg && unit[0] < 0.0 {
                // reflecting through the origin keeps the half sphere uniform
                for c in unit.iter_mut() {
                    *c = -*c;
                }
            }
            return unit;
        }
    }
}
