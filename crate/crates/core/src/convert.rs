//! Combinatorial conversion between upper and lower families.
//!
//! A family of k polytopes with m_1, ..., m_k vertices converts into the
//! dual-kind family of all p = m_1 * ... * m_k selections: pick one vertex
//! from every member set and take the convex hull of the k picks. The
//! selection matrix of inner products always contains a column that attains
//! every row's extremum, which forces the min-max and max-min of the matrix
//! to coincide; both equal the represented function, so the converted family
//! represents the same function everywhere.

use crate::error::{Error, Result};
use crate::family::Family;
use crate::matrix::PayoffMatrix;
use crate::polytope::{dot, points_close, Polytope};
use crate::reduce::merge_duplicate_sets;
use crate::VERTEX_TOL;

/// Default bound on the number of converted sets. The product of vertex
/// counts grows multiplicatively, and a truncated family would represent a
/// different function, so exceeding the cap is a hard error.
pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug)]
pub struct ConvertOptions {
    /// Merge identical output sets. Off by default so the output has exactly
    /// `p` sets.
    pub dedup: bool,
    /// Upper bound on `p`.
    pub cap: u64,
}

impl Default for ConvertOptions {
    fn default() -> Self {
        Self {
            dedup: false,
            cap: DEFAULT_CAP,
        }
    }
}

/// Converts with the default options (no dedup, cap of 10^6 sets).
pub fn convert(family: &Family) -> Result<Family> {
    convert_with(family, ConvertOptions::default())
}

/// Produces the dual-kind family of all vertex selections, enumerated in
/// lexicographic order of the per-set vertex indices (last set fastest).
pub fn convert_with(family: &Family, options: ConvertOptions) -> Result<Family> {
    let counts: Vec<usize> = family.sets().iter().map(|s| s.vertices().len()).collect();
    let product = counts
        .iter()
        .fold(1u128, |acc, &m| acc.saturating_mul(m as u128));
    if product > u128::from(options.cap) {
        return Err(Error::CapExceeded {
            product,
            cap: options.cap,
        });
    }

    let mut sets = Vec::with_capacity(product as usize);
    let mut selection = vec![0usize; counts.len()];
    'enumerate: loop {
        let chosen: Vec<Vec<f64>> = family
            .sets()
            .iter()
            .zip(&selection)
            .map(|(set, &j)| set.vertices()[j].clone())
            .collect();
        sets.push(Polytope::new(chosen)?);
        // odometer with the last index fastest keeps the selections in
        // lexicographic order
        let mut pos = selection.len();
        loop {
            if pos == 0 {
                break 'enumerate;
            }
            pos -= 1;
            selection[pos] += 1;
            if selection[pos] < counts[pos] {
                break;
            }
            selection[pos] = 0;
        }
    }

    if options.dedup {
        sets = merge_duplicate_sets(sets, VERTEX_TOL);
    }
    Family::new(family.kind().dual(), family.space_dim(), sets)
}

/// The selection matrix from the conversion argument: entry (i, j) is the
/// value at `delta` of the vertex that output set j picked from input set i
/// (inner product for exhausters, affine value for coexhausters).
///
/// `output` must be `convert` of `input` without dedup. For upper-kind
/// inputs the matrix has a max saddle column and `minmax == maxmin ==
/// eval(input, delta)`; for lower-kind inputs it has a min saddle column and
/// the transposed matrix satisfies the same equalities.
pub fn conversion_certificate(
    input: &Family,
    output: &Family,
    delta: &[f64],
) -> Result<PayoffMatrix> {
    if output.kind() != input.kind().dual() {
        return Err(Error::ConversionPair(format!(
            "output kind {} is not the dual of input kind {}",
            output.kind(),
            input.kind()
        )));
    }
    if output.space_dim() != input.space_dim() {
        return Err(Error::ConversionPair(format!(
            "space dimensions differ: {} vs {}",
            input.space_dim(),
            output.space_dim()
        )));
    }
    if delta.len() != input.space_dim() {
        return Err(Error::DirectionLength {
            expected: input.space_dim(),
            actual: delta.len(),
        });
    }

    let counts: Vec<usize> = input.sets().iter().map(|s| s.vertices().len()).collect();
    let product = counts
        .iter()
        .fold(1u128, |acc, &m| acc.saturating_mul(m as u128));
    if product != output.sets().len() as u128 {
        return Err(Error::ConversionPair(format!(
            "output has {} sets, expected the full product {}",
            output.sets().len(),
            product
        )));
    }

    let k = counts.len();
    let p = output.sets().len();
    let coexhauster = input.kind().is_coexhauster();
    let mut entries = vec![0.0; k * p];
    let mut selection = vec![0usize; k];
    for (j, out_set) in output.sets().iter().enumerate() {
        let chosen: Vec<Vec<f64>> = input
            .sets()
            .iter()
            .zip(&selection)
            .map(|(set, &ji)| set.vertices()[ji].clone())
            .collect();
        let rebuilt = Polytope::new(chosen.clone())?;
        if rebuilt.vertices().len() != out_set.vertices().len()
            || !rebuilt
                .vertices()
                .iter()
                .zip(out_set.vertices())
                .all(|(a, b)| points_close(a, b, VERTEX_TOL))
        {
            return Err(Error::ConversionPair(format!(
                "output set {j} does not match selection {selection:?}"
            )));
        }
        for (i, v) in chosen.iter().enumerate() {
            entries[i * p + j] = if coexhauster {
                v[0] + dot(&v[1..], delta)
            } else {
                dot(v, delta)
            };
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            selection[pos] += 1;
            if selection[pos] < counts[pos] {
                break;
            }
            selection[pos] = 0;
        }
    }
    PayoffMatrix::new(k, p, entries)
}
