//! Convex polytopes in vertex representation and their support values.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::VERTEX_TOL;

/// Whether an operation looks for the largest or the smallest value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    Max,
    Min,
}

/// A convex compact set given by a finite vertex list in `R^dim`.
///
/// Vertices are generator points: they need not be extreme points of their
/// convex hull, and redundant generators do not change support values since
/// a linear function attains its extremum over the hull at a vertex.
/// Vertices that coincide within a tolerance are merged at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vec<f64>>,
}

impl Polytope {
    pub fn new(vertices: Vec<Vec<f64>>) -> Result<Self> {
        Self::with_tolerance(vertices, VERTEX_TOL)
    }

    /// Builds a polytope, merging vertices that coincide within `vertex_tol`
    /// (first occurrence kept).
    pub fn with_tolerance(vertices: Vec<Vec<f64>>, vertex_tol: f64) -> Result<Self> {
        let dim = match vertices.first() {
            Some(first) => first.len(),
            None => return Err(Error::EmptyVertices),
        };
        if dim == 0 {
            return Err(Error::VertexLength {
                index: 0,
                expected: 1,
                actual: 0,
            });
        }
        for (index, v) in vertices.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::VertexLength {
                    index,
                    expected: dim,
                    actual: v.len(),
                });
            }
            if v.iter().any(|x| !x.is_finite()) {
                return Err(Error::NonFiniteVertex { index });
            }
        }
        let mut deduped: Vec<Vec<f64>> = Vec::with_capacity(vertices.len());
        for v in vertices {
            if !deduped.iter().any(|u| points_close(u, &v, vertex_tol)) {
                deduped.push(v);
            }
        }
        Ok(Self {
            dim,
            vertices: deduped,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    /// `max_{v in C} <v, direction>`. Exact for polytopes: the maximum of a
    /// linear function over the set is attained at a stored vertex.
    pub fn support_max(&self, direction: &[f64]) -> Result<f64> {
        self.check_direction(direction)?;
        Ok(self.support(direction, Objective::Max))
    }

    /// `min_{w in C} <w, direction>`.
    pub fn support_min(&self, direction: &[f64]) -> Result<f64> {
        self.check_direction(direction)?;
        Ok(self.support(direction, Objective::Min))
    }

    /// Max or min over vertices `[a, v]` of the affine value `a + <v, delta>`,
    /// where the first coordinate is the constant term. Requires
    /// `dim == delta.len() + 1`.
    pub fn affine_support(&self, delta: &[f64], objective: Objective) -> Result<f64> {
        if delta.len() + 1 != self.dim {
            return Err(Error::DirectionLength {
                expected: self.dim - 1,
                actual: delta.len(),
            });
        }
        let values = self.vertices.iter().map(|v| v[0] + dot(&v[1..], delta));
        Ok(extremum(values, objective))
    }

    pub(crate) fn support(&self, direction: &[f64], objective: Objective) -> f64 {
        let values = self.vertices.iter().map(|v| dot(v, direction));
        extremum(values, objective)
    }

    /// Vertices sorted lexicographically; the comparison key used when two
    /// sets are tested for equality.
    pub(crate) fn canonical_vertices(&self) -> Vec<&[f64]> {
        let mut vs: Vec<&[f64]> = self.vertices.iter().map(Vec::as_slice).collect();
        vs.sort_by(|a, b| lex_cmp(a, b));
        vs
    }

    fn check_direction(&self, direction: &[f64]) -> Result<()> {
        if direction.len() != self.dim {
            return Err(Error::DirectionLength {
                expected: self.dim,
                actual: direction.len(),
            });
        }
        Ok(())
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn extremum(values: impl Iterator<Item = f64>, objective: Objective) -> f64 {
    match objective {
        Objective::Max => values.fold(f64::NEG_INFINITY, f64::max),
        Objective::Min => values.fold(f64::INFINITY, f64::min),
    }
}

pub(crate) fn points_close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

pub(crate) fn lex_cmp(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}
