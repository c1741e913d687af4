//! The bigraded exterior complex `Λ[P]` on the members of a complement, with
//! the reduced Taylor differential.
//!
//! A generator `u = σ_{k_1} ⋯ σ_{k_q}` (with `k_1 < ⋯ < k_q`) is a bitmask over
//! member positions. Its bidegree is `(q, S_u)` where the total subset `S_u`
//! is the union of the selected members. The reduced differential keeps only
//! the faces `∂_i u` whose total subset equals `S_u`:
//!
//! ```text
//! d(u) = Σ_{i=1..q} (-1)^i ∂_i(u) · [S_{∂_i u} = S_u]
//! ```
//!
//! Signs start at `i = 1`, so `d(σ_1 σ_2) = -σ_2 + σ_1` when both faces survive.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::complement::Complement;
use crate::linalg::IntMatrix;
use crate::vertex_set::VertexSet;

/// A monomial `σ_{k_1} ⋯ σ_{k_q}` of the exterior algebra on the members of a
/// complement. Bit `k - 1` selects member `σ_k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct TaylorGenerator(u32);

impl TaylorGenerator {
    pub const UNIT: TaylorGenerator = TaylorGenerator(0);

    pub const fn from_bits(bits: u32) -> Self {
        TaylorGenerator(bits)
    }

    /// From 1-based member positions.
    pub fn of(positions: &[usize]) -> Self {
        TaylorGenerator(positions.iter().fold(0, |acc, &k| {
            assert!((1..=32).contains(&k), "member position {k}");
            acc | 1 << (k - 1)
        }))
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// Homological degree `q`.
    pub const fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Selected member positions, 1-based and increasing.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        crate::vertex_set::VertexSet::from_bits(self.0).vertices()
    }

    /// The total subset `S_u`.
    pub fn total(self, complement: &Complement) -> VertexSet {
        self.positions()
            .fold(VertexSet::EMPTY, |acc, k| acc.union(complement.members()[k - 1]))
    }

    /// `∂_i u` for `i = 1..=q`: drop the `i`-th selected member.
    pub fn face(self, i: usize) -> TaylorGenerator {
        let k = self.positions().nth(i - 1).expect("face index within degree");
        TaylorGenerator(self.0 & !(1 << (k - 1)))
    }

    /// Exterior product `self · other`: `None` when a member repeats,
    /// otherwise the sign from sorting the concatenated positions.
    pub fn wedge(self, other: TaylorGenerator) -> Option<(i32, TaylorGenerator)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // Count pairs (a in self, b in other) with a > b.
        let mut inversions = 0u32;
        for b in other.positions() {
            inversions += (self.0 >> b).count_ones();
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, TaylorGenerator(self.0 | other.0)))
    }
}

/// Degree first, then lexicographic on the member positions.
impl Ord for TaylorGenerator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.positions().cmp(other.positions()))
    }
}

impl PartialOrd for TaylorGenerator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `s1s3s4` for `σ_1 σ_3 σ_4`, `1` for the unit.
impl fmt::Display for TaylorGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        for k in self.positions() {
            write!(f, "s{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TaylorGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An integer combination of generators. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Chain {
    terms: BTreeMap<TaylorGenerator, BigInt>,
}

impl Chain {
    pub fn zero() -> Self {
        Chain::default()
    }

    pub fn generator(u: TaylorGenerator) -> Self {
        let mut c = Chain::zero();
        c.add_term(u, BigInt::one());
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (TaylorGenerator, i64)>>(terms: I) -> Self {
        let mut c = Chain::zero();
        for (u, x) in terms {
            c.add_term(u, BigInt::from(x));
        }
        c
    }

    /// Builds a chain from a coefficient vector over an ordered generator list.
    pub fn from_vector(generators: &[TaylorGenerator], coefficients: &[BigInt]) -> Self {
        let mut c = Chain::zero();
        for (u, x) in generators.iter().zip(coefficients) {
            c.add_term(*u, x.clone());
        }
        c
    }

    /// Coefficient vector over an ordered generator list. Terms on other
    /// generators are dropped; callers check membership with [`Chain::lies_in`].
    pub fn to_vector(&self, generators: &[TaylorGenerator]) -> Vec<BigInt> {
        generators.iter().map(|u| self.coefficient(*u)).collect()
    }

    pub fn lies_in(&self, generators: &[TaylorGenerator]) -> bool {
        self.terms.keys().all(|u| generators.contains(u))
    }

    pub fn add_term(&mut self, u: TaylorGenerator, x: BigInt) {
        if x.is_zero() {
            return;
        }
        let slot = self.terms.entry(u).or_insert_with(BigInt::zero);
        *slot += x;
        if slot.is_zero() {
            self.terms.remove(&u);
        }
    }

    pub fn add(&mut self, other: &Chain) {
        for (u, x) in &other.terms {
            self.add_term(*u, x.clone());
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Chain {
        let mut c = Chain::zero();
        for (u, x) in &self.terms {
            c.add_term(*u, x * factor);
        }
        c
    }

    pub fn coefficient(&self, u: TaylorGenerator) -> BigInt {
        self.terms.get(&u).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (TaylorGenerator, &BigInt)> {
        self.terms.iter().map(|(u, x)| (*u, x))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Smallest generator with a nonzero coefficient.
    pub fn leading(&self) -> Option<TaylorGenerator> {
        self.terms.keys().next().copied()
    }

    /// Exterior product in `Λ[P] ⊗ k`: a pair of terms survives only when the
    /// total subsets are disjoint (the monomial factor
    /// `x_{S_u} x_{S_v} / x_{S_{uv}}` is 1 exactly then).
    pub fn product(&self, other: &Chain, complement: &Complement) -> Chain {
        let mut out = Chain::zero();
        for (u, a) in &self.terms {
            let su = u.total(complement);
            for (v, b) in &other.terms {
                if !su.is_disjoint(v.total(complement)) {
                    continue;
                }
                if let Some((sign, w)) = u.wedge(*v) {
                    out.add_term(w, a * b * sign);
                }
            }
        }
        out
    }

    /// Linear extension of [`reduced_differential`].
    pub fn boundary(&self, complement: &Complement) -> Chain {
        let mut out = Chain::zero();
        for (u, x) in &self.terms {
            out.add(&reduced_differential(complement, *u).scale(x));
        }
        out
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (u, x)) in self.terms.iter().enumerate() {
            let negative = x < &BigInt::zero();
            let mag = if negative { -x.clone() } else { x.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = *u == TaylorGenerator::UNIT;
            if !mag.is_one() || unit {
                write!(f, "{mag}")?;
            }
            if !unit {
                if !mag.is_one() {
                    f.write_str("*")?;
                }
                write!(f, "{u}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `d(u) = Σ_i (-1)^i ∂_i(u) · [S_{∂_i u} = S_u]`; zero for `q = 0`.
pub fn reduced_differential(complement: &Complement, u: TaylorGenerator) -> Chain {
    let total = u.total(complement);
    let mut out = Chain::zero();
    for i in 1..=u.degree() {
        let face = u.face(i);
        if face.total(complement) == total {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out.add_term(face, BigInt::from(sign));
        }
    }
    out
}

/// All generators sharing one total subset, split by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportBlock {
    pub sigma: VertexSet,
    /// `generators[q]`: degree-`q` generators in increasing order.
    pub generators: Vec<Vec<TaylorGenerator>>,
}

impl SupportBlock {
    pub fn count(&self) -> usize {
        self.generators.iter().map(Vec::len).sum()
    }

    pub fn degree(&self, q: usize) -> &[TaylorGenerator] {
        self.generators.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn max_degree(&self) -> usize {
        self.generators.len().saturating_sub(1)
    }
}

/// The distinct total subsets over all `2^s` generators, sorted
/// (cardinality, lex), each with its generators.
pub fn sigma_supports(complement: &Complement) -> Vec<SupportBlock> {
    let s = complement.len();
    assert!(s <= crate::complement::MAX_MEMBERS, "too many members for the Taylor complex");
    let members = complement.members();
    let n = 1usize << s;
    let mut totals = vec![0u32; n];
    let mut groups: HashMap<VertexSet, Vec<Vec<TaylorGenerator>>> = HashMap::new();
    for mask in 0..n {
        if mask > 0 {
            let low = mask.trailing_zeros() as usize;
            totals[mask] = totals[mask & (mask - 1)] | members[low].bits();
        }
        let sigma = VertexSet::from_bits(totals[mask]);
        let q = mask.count_ones() as usize;
        let by_degree = groups.entry(sigma).or_default();
        if by_degree.len() <= q {
            by_degree.resize(q + 1, Vec::new());
        }
        by_degree[q].push(TaylorGenerator(mask as u32));
    }
    let mut blocks: Vec<SupportBlock> = groups
        .into_iter()
        .map(|(sigma, mut generators)| {
            for g in generators.iter_mut() {
                g.sort();
            }
            SupportBlock { sigma, generators }
        })
        .collect();
    blocks.sort_by_key(|b| b.sigma);
    blocks
}

/// Generators of total subset `sigma`, split by degree (empty if `sigma` is
/// not a support).
pub fn support_block(complement: &Complement, sigma: VertexSet) -> SupportBlock {
    let s = complement.len();
    let members = complement.members();
    // Only members inside sigma can take part.
    let inside: Vec<usize> = (0..s).filter(|&k| members[k].is_subset(sigma)).collect();
    let mut generators: Vec<Vec<TaylorGenerator>> = Vec::new();
    for sub in 0u32..(1u32 << inside.len()) {
        let mut bits = 0u32;
        let mut total = VertexSet::EMPTY;
        for (j, &k) in inside.iter().enumerate() {
            if sub & (1 << j) != 0 {
                bits |= 1 << k;
                total = total.union(members[k]);
            }
        }
        if total != sigma {
            continue;
        }
        let q = bits.count_ones() as usize;
        if generators.len() <= q {
            generators.resize(q + 1, Vec::new());
        }
        generators[q].push(TaylorGenerator(bits));
    }
    for g in generators.iter_mut() {
        g.sort();
    }
    SupportBlock { sigma, generators }
}

/// Sparse matrix stored as columns of `(row, value)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn to_dense(&self) -> IntMatrix {
        IntMatrix::from_columns(self.rows, &self.columns)
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }
}

/// Sparse matrices of `d_q : Λ^{q,σ} → Λ^{q-1,σ}` for `q = 0..=max+1`, in the
/// generator order of `block`.
pub fn boundary_columns(complement: &Complement, block: &SupportBlock) -> Vec<SparseMatrix> {
    let top = block.generators.len();
    let mut out = Vec::with_capacity(top + 1);
    for q in 0..=top {
        let domain = block.degree(q);
        let codomain = if q == 0 { &[][..] } else { block.degree(q - 1) };
        let index: HashMap<TaylorGenerator, usize> =
            codomain.iter().enumerate().map(|(i, u)| (*u, i)).collect();
        let columns = domain
            .iter()
            .map(|u| {
                reduced_differential(complement, *u)
                    .terms()
                    .map(|(face, x)| {
                        let row = index[&face];
                        let v: i64 = x.try_into().expect("unit coefficient");
                        (row, v)
                    })
                    .collect()
            })
            .collect();
        out.push(SparseMatrix { rows: codomain.len(), columns });
    }
    out
}

/// Dense integer matrices of `d_q` on the `σ`-block, `q = 0..=max+1`.
/// Consecutive matrices compose to zero. A non-support `σ` gives one empty
/// matrix.
pub fn boundary_matrices(complement: &Complement, sigma: VertexSet) -> Vec<IntMatrix> {
    let block = support_block(complement, sigma);
    boundary_columns(complement, &block)
        .iter()
        .map(SparseMatrix::to_dense)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn five_vertex() -> Complement {
        Complement::from_lists(5, [vec![1, 5], vec![2, 4], vec![1, 2, 3], vec![3, 4, 5]]).unwrap()
    }

    fn g(p: &[usize]) -> TaylorGenerator {
        TaylorGenerator::of(p)
    }

    #[test]
    fn five_vertex_differentials() {
        let p = five_vertex();
        assert_eq!(
            reduced_differential(&p, g(&[1, 2, 3, 4])),
            Chain::from_terms([
                (g(&[2, 3, 4]), -1),
                (g(&[1, 3, 4]), 1),
                (g(&[1, 2, 4]), -1),
                (g(&[1, 2, 3]), 1)
            ])
        );
        assert_eq!(
            reduced_differential(&p, g(&[1, 3, 4])),
            Chain::from_terms([(g(&[3, 4]), -1)])
        );
        assert!(reduced_differential(&p, g(&[1, 2])).is_zero());
        assert!(reduced_differential(&p, TaylorGenerator::UNIT).is_zero());
        assert_eq!(reduced_differential(&p, g(&[1, 2, 3, 4])).to_string(), "s1s2s3 - s1s2s4 + s1s3s4 - s2s3s4");
    }

    #[test]
    fn wedge_signs() {
        assert_eq!(g(&[1]).wedge(g(&[2])), Some((1, g(&[1, 2]))));
        assert_eq!(g(&[2]).wedge(g(&[1])), Some((-1, g(&[1, 2]))));
        assert_eq!(g(&[1, 3]).wedge(g(&[2])), Some((-1, g(&[1, 2, 3]))));
        assert_eq!(g(&[2, 3]).wedge(g(&[1])), Some((1, g(&[1, 2, 3]))));
        assert_eq!(g(&[1]).wedge(g(&[1, 2])), None);
        assert_eq!(TaylorGenerator::UNIT.wedge(g(&[4])), Some((1, g(&[4]))));
    }

    #[test]
    fn supports_of_disjoint_members() {
        let p = Complement::from_lists(4, [vec![1, 2], vec![3, 4]]).unwrap();
        let blocks = sigma_supports(&p);
        let sigmas: Vec<_> = blocks.iter().map(|b| b.sigma.to_string()).collect();
        assert_eq!(sigmas, ["{}", "{1,2}", "{3,4}", "{1,2,3,4}"]);
        assert!(blocks.iter().all(|b| b.count() == 1));
    }

    #[test]
    fn supports_of_overlapping_members() {
        let p = Complement::from_lists(3, [vec![1, 2], vec![1, 3]]).unwrap();
        let sigmas: Vec<_> = sigma_supports(&p).iter().map(|b| b.sigma.to_string()).collect();
        assert_eq!(sigmas, ["{}", "{1,2}", "{1,3}", "{1,2,3}"]);
    }

    #[test]
    fn five_vertex_top_block() {
        let p = five_vertex();
        let blocks = sigma_supports(&p);
        assert_eq!(blocks.iter().map(SupportBlock::count).sum::<usize>(), 16);
        let top = blocks.iter().find(|b| b.sigma == VertexSet::full(5)).unwrap();
        // Oracle: enumerate all 16 member subsets and take unions directly.
        let members = p.members();
        let expected: Vec<u32> = (0u32..16)
            .filter(|mask| {
                (0..4)
                    .filter(|k| mask & (1 << k) != 0)
                    .fold(VertexSet::EMPTY, |acc, k| acc.union(members[k]))
                    == VertexSet::full(5)
            })
            .collect();
        assert_eq!(top.count(), expected.len());
        assert_eq!(top.count(), 6);
        assert_eq!(top.degree(2), &[g(&[3, 4])]);
        assert_eq!(top.degree(3), &[g(&[1, 2, 3]), g(&[1, 2, 4]), g(&[1, 3, 4]), g(&[2, 3, 4])]);
        assert_eq!(top.degree(4), &[g(&[1, 2, 3, 4])]);
        assert_eq!(support_block(&p, VertexSet::full(5)), *top);
    }

    #[test]
    fn five_vertex_matrices() {
        let p = five_vertex();
        let ds = boundary_matrices(&p, VertexSet::full(5));
        assert_eq!(ds.len(), 6);
        assert_eq!(ds[3], IntMatrix::from_rows(&[vec![0, 0, -1, -1]]));
        assert_eq!(ds[4], IntMatrix::from_rows(&[vec![1], vec![-1], vec![1], vec![-1]]));
        for w in ds.windows(2) {
            assert!((&w[0] * &w[1]).is_zero());
        }
        let single = boundary_matrices(&p, VertexSet::of(&[1, 5]));
        assert!(single.iter().all(IntMatrix::is_zero));
        let none = boundary_matrices(&p, VertexSet::of(&[2]));
        assert_eq!(none.len(), 1);
        assert_eq!((none[0].rows(), none[0].cols()), (0, 0));
    }

    #[test]
    fn chain_products() {
        let p = five_vertex();
        let a = Chain::generator(g(&[1]));
        let b = Chain::generator(g(&[2]));
        assert_eq!(a.product(&b, &p), Chain::generator(g(&[1, 2])));
        assert_eq!(b.product(&a, &p), Chain::from_terms([(g(&[1, 2]), -1)]));
        // {1,5} and {1,2,3} overlap.
        assert!(a.product(&Chain::generator(g(&[3])), &p).is_zero());
    }
}
