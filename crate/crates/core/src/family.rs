//! Typed families of polytopes and evaluation of the four representations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::{Objective, Polytope};

/// Which of the four representations a family encodes.
///
/// Exhauster families live in the argument space `R^n` and represent a
/// positively homogeneous function; coexhauster families live in `R^{n+1}`,
/// each vertex `[a, v]` contributing the affine value `a + <v, delta>`.
/// Upper kinds take the outer minimum over member sets, lower kinds the
/// outer maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    UpperExhauster,
    LowerExhauster,
    UpperCoexhauster,
    LowerCoexhauster,
}

impl FamilyKind {
    /// The kind a conversion produces: upper and lower swap, the
    /// exhauster/coexhauster class is preserved.
    pub fn dual(self) -> Self {
        match self {
            Self::UpperExhauster => Self::LowerExhauster,
            Self::LowerExhauster => Self::UpperExhauster,
            Self::UpperCoexhauster => Self::LowerCoexhauster,
            Self::LowerCoexhauster => Self::UpperCoexhauster,
        }
    }

    pub fn is_coexhauster(self) -> bool {
        matches!(self, Self::UpperCoexhauster | Self::LowerCoexhauster)
    }

    /// Upper kinds evaluate as an outer min over sets, lower kinds as an
    /// outer max.
    pub fn is_upper(self) -> bool {
        matches!(self, Self::UpperExhauster | Self::UpperCoexhauster)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::UpperExhauster => "upper_exhauster",
            Self::LowerExhauster => "lower_exhauster",
            Self::UpperCoexhauster => "upper_coexhauster",
            Self::LowerCoexhauster => "lower_coexhauster",
        }
    }

    /// The dimension member sets must have for a family over `R^n`.
    pub fn set_dim(self, space_dim: usize) -> usize {
        if self.is_coexhauster() {
            space_dim + 1
        } else {
            space_dim
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "upper_exhauster" => Ok(Self::UpperExhauster),
            "lower_exhauster" => Ok(Self::LowerExhauster),
            "upper_coexhauster" => Ok(Self::UpperCoexhauster),
            "lower_coexhauster" => Ok(Self::LowerCoexhauster),
            other => Err(Error::Parse(format!("unknown family kind {other:?}"))),
        }
    }
}

/// A nonempty ordered collection of polytopes with a kind and the dimension
/// `n` of the argument. Immutable after construction; evaluation is a pure
/// function, so a family can be shared freely across threads.
#[derive(Clone, Debug, PartialEq)]
pub struct Family {
    kind: FamilyKind,
    space_dim: usize,
    sets: Vec<Polytope>,
}

impl Family {
    pub fn new(kind: FamilyKind, space_dim: usize, sets: Vec<Polytope>) -> Result<Self> {
        if space_dim == 0 {
            return Err(Error::ZeroSpaceDim);
        }
        if sets.is_empty() {
            // min/max over an empty family is undefined
            return Err(Error::EmptyFamily);
        }
        let expected = kind.set_dim(space_dim);
        for (index, set) in sets.iter().enumerate() {
            if set.dim() != expected {
                return Err(Error::SetDimension {
                    index,
                    kind: kind.as_str(),
                    space_dim,
                    expected,
                    actual: set.dim(),
                });
            }
        }
        Ok(Self {
            kind,
            space_dim,
            sets,
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn sets(&self) -> &[Polytope] {
        &self.sets
    }

    /// The represented value at `delta`:
    ///
    /// * upper exhauster:    `min_C max_{v in C} <v, delta>`
    /// * lower exhauster:    `max_C min_{w in C} <w, delta>`
    /// * upper coexhauster:  `min_C max_{[a,v] in C} a + <v, delta>`
    /// * lower coexhauster:  `max_C min_{[b,w] in C} b + <w, delta>`
    pub fn eval(&self, delta: &[f64]) -> Result<f64> {
        if delta.len() != self.space_dim {
            return Err(Error::DirectionLength {
                expected: self.space_dim,
                actual: delta.len(),
            });
        }
        let inner = self.inner_values(delta);
        Ok(if self.kind.is_upper() {
            inner.fold(f64::INFINITY, f64::min)
        } else {
            inner.fold(f64::NEG_INFINITY, f64::max)
        })
    }

    /// Per-set inner values (the quantity the outer min/max ranges over).
    /// `delta` must already have length `space_dim`.
    pub(crate) fn inner_values<'a>(&'a self, delta: &'a [f64]) -> impl Iterator<Item = f64> + 'a {
        self.sets.iter().map(move |set| self.set_value(set, delta))
    }

    pub(crate) fn set_value(&self, set: &Polytope, delta: &[f64]) -> f64 {
        let objective = if self.kind.is_upper() {
            Objective::Max
        } else {
            Objective::Min
        };
        if self.kind.is_coexhauster() {
            set.affine_support(delta, objective)
                .expect("set dimension is space_dim + 1 by construction")
        } else {
            set.support(delta, objective)
        }
    }
}
