//! Post-conversion cleanup: duplicate merging and sampled dominance pruning.
//!
//! `dedup_sets` is exact. `prune_sampled` is a heuristic certified only on
//! its evaluation grid; callers who need more should re-verify the result
//! against the original family.

use crate::error::{Error, Result};
use crate::family::Family;
use crate::polytope::{lex_cmp, points_close, Polytope};
use crate::sampler::DirectionSampler;
use crate::{EQ_TOL, VERTEX_TOL};

/// Merges sets whose canonicalized vertex lists coincide, keeping each
/// group's first occurrence in its original position. Evaluation is
/// unchanged at every direction.
pub fn dedup_sets(family: &Family) -> Family {
    let sets = merge_duplicate_sets(family.sets().to_vec(), VERTEX_TOL);
    Family::new(family.kind(), family.space_dim(), sets)
        .expect("merging keeps at least one set of a valid family")
}

pub(crate) fn merge_duplicate_sets(sets: Vec<Polytope>, tol: f64) -> Vec<Polytope> {
    if sets.len() < 2 {
        return sets;
    }
    let canon: Vec<Vec<&[f64]>> = sets.iter().map(Polytope::canonical_vertices).collect();
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by(|&a, &b| cmp_vertex_lists(&canon[a], &canon[b]));

    // group tolerance-equal runs of the sorted order, remember the earliest
    // original index of every group
    let mut keep_index: Vec<usize> = Vec::new();
    let mut rep: Option<usize> = None;
    for &idx in &order {
        match rep {
            Some(r) if vertex_lists_close(&canon[r], &canon[idx], tol) => {
                let first = keep_index.last_mut().expect("group already open");
                *first = (*first).min(idx);
            }
            _ => {
                rep = Some(idx);
                keep_index.push(idx);
            }
        }
    }

    let mut keep = vec![false; sets.len()];
    for &i in &keep_index {
        keep[i] = true;
    }
    drop(canon);
    sets.into_iter()
        .zip(keep)
        .filter_map(|(s, k)| k.then_some(s))
        .collect()
}

fn cmp_vertex_lists(a: &[&[f64]], b: &[&[f64]]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match lex_cmp(x, y) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

fn vertex_lists_close(a: &[&[f64]], b: &[&[f64]], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| points_close(x, y, tol))
}

/// Greedily drops sets whose removal leaves the family value unchanged
/// within `EQ_TOL` at every grid direction; see [`prune_sampled_with`].
pub fn prune_sampled(family: &Family, sampler: &DirectionSampler) -> Result<Family> {
    prune_sampled_with(family, sampler, EQ_TOL)
}

/// The grid is the sampled directions at radii 1 and 5 plus fixed probes
/// (origin, scaled coordinate axes, scaled all-ones and axis-omitting
/// combinations). Coexhauster values are affine, not homogeneous, so
/// redundancy on the unit sphere alone says nothing off it; the scaled
/// copies are what lets the prune see that. Candidates are tried largest
/// vertex count first. The last remaining set is never removed. The result
/// is certified only on the grid.
pub fn prune_sampled_with(family: &Family, sampler: &DirectionSampler, tol: f64) -> Result<Family> {
    if sampler.dim() != family.space_dim() {
        return Err(Error::SamplerDim {
            expected: family.space_dim(),
            actual: sampler.dim(),
        });
    }
    let sets = family.sets();
    if sets.len() < 2 {
        return Ok(family.clone());
    }

    let grid = pruning_grid(family.space_dim(), sampler);
    // keys are inner values, negated for lower kinds so the outer objective
    // is always a minimum
    let upper = family.kind().is_upper();
    let keys: Vec<Vec<f64>> = sets
        .iter()
        .map(|set| {
            grid.iter()
                .map(|d| {
                    let v = family.set_value(set, d);
                    if upper {
                        v
                    } else {
                        -v
                    }
                })
                .collect()
        })
        .collect();
    let baseline: Vec<f64> = (0..grid.len())
        .map(|g| keys.iter().map(|row| row[g]).fold(f64::INFINITY, f64::min))
        .collect();

    let mut kept = vec![true; sets.len()];
    let mut kept_count = sets.len();
    let mut tops = compute_tops(&keys, &kept, grid.len());

    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by(|&a, &b| {
        sets[b]
            .vertices()
            .len()
            .cmp(&sets[a].vertices().len())
            .then(a.cmp(&b))
    });

    for &candidate in &order {
        if kept_count <= 1 {
            break;
        }
        let removable = (0..grid.len()).all(|g| {
            let top = &tops[g];
            let without = if keys[candidate][g] == top.best && top.attainers == 1 {
                top.runner_up
            } else {
                top.best
            };
            (without - baseline[g]).abs() <= tol
        });
        if removable {
            kept[candidate] = false;
            kept_count -= 1;
            tops = compute_tops(&keys, &kept, grid.len());
        }
    }

    let pruned: Vec<Polytope> = sets
        .iter()
        .zip(&kept)
        .filter(|&(_, &k)| k)
        .map(|(s, _)| s.clone())
        .collect();
    Family::new(family.kind(), family.space_dim(), pruned)
}

struct Top {
    best: f64,
    runner_up: f64,
    attainers: usize,
}

fn compute_tops(keys: &[Vec<f64>], kept: &[bool], grid_len: usize) -> Vec<Top> {
    (0..grid_len)
        .map(|g| {
            let mut best = f64::INFINITY;
            let mut runner_up = f64::INFINITY;
            let mut attainers = 0usize;
            for (row, &k) in keys.iter().zip(kept) {
                if !k {
                    continue;
                }
                let v = row[g];
                if v < best {
                    runner_up = best;
                    best = v;
                    attainers = 1;
                } else if v == best {
                    runner_up = best;
                    attainers += 1;
                } else if v < runner_up {
                    runner_up = v;
                }
            }
            Top {
                best,
                runner_up,
                attainers,
            }
        })
        .collect()
}

fn pruning_grid(space_dim: usize, sampler: &DirectionSampler) -> Vec<Vec<f64>> {
    let n = space_dim;
    let mut grid = vec![vec![0.0; n]];
    for scale in [1.0, 5.0] {
        for i in 0..n {
            for sign in [scale, -scale] {
                let mut axis = vec![0.0; n];
                axis[i] = sign;
                grid.push(axis);
            }
        }
        grid.push(vec![scale; n]);
        grid.push(vec![-scale; n]);
    }
    for i in 0..n {
        for sign in [5.0, -5.0] {
            let mut v = vec![sign; n];
            v[i] = 0.0;
            grid.push(v);
        }
    }
    for u in sampler.directions() {
        grid.push(u.iter().map(|x| 5.0 * x).collect());
        grid.push(u);
    }
    grid
}
