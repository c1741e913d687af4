//! Shared inputs for the criterion benches.

use facetor::{Complement, SimplicialComplex};

pub fn five_vertex() -> Complement {
    Complement::from_lists(5, [vec![1, 5], vec![2, 4], vec![1, 2, 3], vec![3, 4, 5]]).unwrap()
}

pub fn three_edges() -> Complement {
    Complement::from_lists(6, [vec![1, 2], vec![3, 4], vec![5, 6]]).unwrap()
}

/// Missing faces of the six-vertex real projective plane.
pub fn rp2() -> Complement {
    SimplicialComplex::from_lists(
        6,
        [
            [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
            [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6],
        ],
    )
    .unwrap()
    .to_complement()
    .unwrap()
}

/// Boundary of the `n`-dimensional cross-polytope: pairs `{2i-1, 2i}`.
pub fn cross_polytope(n: usize) -> Complement {
    Complement::from_lists(2 * n, (1..=n).map(|i| vec![2 * i - 1, 2 * i])).unwrap()
}
