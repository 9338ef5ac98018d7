//! Shared families for unit tests.

use crate::family::{Family, FamilyKind};
use crate::polytope::Polytope;

/// Lower exhauster in R^4 of two opposite segments; converting it yields
/// four two-vertex sets.
pub(crate) fn two_segment_lower() -> Family {
    let c1 = Polytope::new(vec![vec![-1.0, 1.0, 1.0, 1.0], vec![1.0, 1.0, 1.0, 1.0]]).unwrap();
    let c2 = Polytope::new(vec![
        vec![1.0, -1.0, -1.0, -1.0],
        vec![-1.0, -1.0, -1.0, -1.0],
    ])
    .unwrap();
    Family::new(FamilyKind::LowerExhauster, 4, vec![c1, c2]).unwrap()
}

/// Upper coexhauster in R^5 over a 4-dimensional argument: the hull of the
/// affine vertices [1, e_i] for i = 1..3 plus the origin singleton.
pub(crate) fn simplex_upper_coexhauster() -> Family {
    let mut simplex = Vec::new();
    for i in 0..3 {
        let mut v = vec![0.0; 5];
        v[0] = 1.0;
        v[i + 1] = 1.0;
        simplex.push(v);
    }
    let c1 = Polytope::new(simplex).unwrap();
    let c2 = Polytope::new(vec![vec![0.0; 5]]).unwrap();
    Family::new(FamilyKind::UpperCoexhauster, 4, vec![c1, c2]).unwrap()
}

/// The square co{(±1, ±1)} as a single-set family of the given kind.
pub(crate) fn square_family(kind: FamilyKind) -> Family {
    let square = Polytope::new(vec![
        vec![-1.0, -1.0],
        vec![-1.0, 1.0],
        vec![1.0, -1.0],
        vec![1.0, 1.0],
    ])
    .unwrap();
    Family::new(kind, 2, vec![square]).unwrap()
}
