//! Seeded random inputs for property sweeps.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complement::Complement;
use crate::linalg::IntMatrix;
use crate::vertex_set::VertexSet;

/// The generator behind every randomized suite.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A complement with `1 ≤ m ≤ max_m` and `0 ≤ s ≤ max_s` members. Members are
/// uniform subsets of `[m]`, so duplicates, nested members and the occasional
/// empty member all turn up.
pub fn random_complement<R: Rng>(rng: &mut R, max_m: usize, max_s: usize) -> Complement {
    let m = rng.random_range(1..=max_m.max(1));
    let s = rng.random_range(0..=max_s);
    random_complement_exact(rng, m, s)
}

/// Like [`random_complement`] with fixed `m` and `s`. Empty members are
/// redrawn once, which keeps VOID complexes rare but possible.
pub fn random_complement_exact<R: Rng>(rng: &mut R, m: usize, s: usize) -> Complement {
    let members = (0..s)
        .map(|_| {
            let mut sigma = random_subset(rng, m);
            if sigma.is_empty() {
                sigma = random_subset(rng, m);
            }
            sigma
        })
        .collect();
    Complement::new(m, members).expect("subsets of [m]")
}

pub fn random_subset<R: Rng>(rng: &mut R, m: usize) -> VertexSet {
    VertexSet::from_bits(rng.random_range(0..1u32 << m))
}

/// A `rows × cols` matrix with entries in `[-bound, bound]`.
pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.random_range(-bound..=bound)).collect())
        .collect();
    let mut m = IntMatrix::zeros(rows, cols);
    for (i, row) in data.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            m[(i, j)] = (*x).into();
        }
    }
    m
}
