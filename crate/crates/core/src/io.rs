//! On-disk family format.
//!
//! ```json
//! {
//!   "kind": "lower_exhauster",
//!   "space_dim": 4,
//!   "sets": [
//!     { "vertices": [[-1.0, 1.0, 1.0, 1.0], [1.0, 1.0, 1.0, 1.0]] }
//!   ]
//! }
//! ```
//!
//! Coexhauster vertices have length `space_dim + 1` with the affine
//! constant first. Numbers are written in shortest round-trip decimal form,
//! so write-then-read reproduces every coordinate bit for bit.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{Family, FamilyKind};
use crate::polytope::Polytope;

#[derive(Serialize, Deserialize)]
struct FamilyFile {
    kind: FamilyKind,
    space_dim: usize,
    sets: Vec<SetFile>,
}

#[derive(Serialize, Deserialize)]
struct SetFile {
    vertices: Vec<Vec<f64>>,
}

pub fn family_to_json(family: &Family) -> String {
    let file = FamilyFile {
        kind: family.kind(),
        space_dim: family.space_dim(),
        sets: family
            .sets()
            .iter()
            .map(|s| SetFile {
                vertices: s.vertices().to_vec(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("families always serialize");
    text.push('\n');
    text
}

pub fn family_from_json(text: &str) -> Result<Family> {
    let file: FamilyFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let sets = file
        .sets
        .into_iter()
        .map(|s| Polytope::new(s.vertices))
        .collect::<Result<Vec<_>>>()?;
    Family::new(file.kind, file.space_dim, sets)
}

pub fn read_family(path: &Path) -> Result<Family> {
    family_from_json(&fs::read_to_string(path)?)
}

pub fn write_family(path: &Path, family: &Family) -> Result<()> {
    fs::write(path, family_to_json(family))?;
    Ok(())
}
