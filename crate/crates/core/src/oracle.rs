//! Reduced simplicial cohomology of full subcomplexes, computed straight from
//! face lists. This path never touches the Taylor complex, which makes it an
//! independent check of every Tor block via
//! `Tor_{q,σ} ≅ H̃^{|σ|-q-1}(K ∩ σ)`.

use std::collections::{BTreeMap, HashMap};

use crate::complement::Complement;
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::linalg::{homology_at, Coefficients, HomologyGroup, IntMatrix};
use crate::tor::{block_homology, tor_bigraded, BigradedTor};
use crate::vertex_set::VertexSet;

/// Augmented cochain complex of a simplicial complex.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    /// `faces[n + 1]` lists the `n`-dimensional faces, starting with the empty
    /// face in dimension -1. Empty for the VOID complex.
    faces: Vec<Vec<VertexSet>>,
    /// `coboundaries[n + 1]`: `δ^n : C^n → C^{n+1}` as a matrix with one row per
    /// `(n+1)`-face and one column per `n`-face.
    coboundaries: Vec<IntMatrix>,
}

impl CochainComplex {
    pub fn new(k: &SimplicialComplex) -> Self {
        if k.is_void() {
            return CochainComplex { faces: Vec::new(), coboundaries: Vec::new() };
        }
        let mut faces: Vec<Vec<VertexSet>> = Vec::new();
        for f in k.faces() {
            let slot = f.len();
            if faces.len() <= slot {
                faces.resize(slot + 1, Vec::new());
            }
            faces[slot].push(f);
        }
        let mut coboundaries = Vec::with_capacity(faces.len());
        for slot in 0..faces.len() {
            let lower = &faces[slot];
            let upper: &[VertexSet] = faces.get(slot + 1).map_or(&[], Vec::as_slice);
            let index: HashMap<VertexSet, usize> =
                lower.iter().enumerate().map(|(i, f)| (*f, i)).collect();
            let mut delta = IntMatrix::zeros(upper.len(), lower.len());
            for (row, face) in upper.iter().enumerate() {
                for (i, v) in face.vertices().enumerate() {
                    let col = index[&face.remove(v)];
                    delta[(row, col)] = if i % 2 == 0 { 1.into() } else { (-1).into() };
                }
            }
            coboundaries.push(delta);
        }
        CochainComplex { faces, coboundaries }
    }

    /// Number of `n`-dimensional faces (`n ≥ -1`).
    pub fn face_count(&self, n: isize) -> usize {
        usize::try_from(n + 1)
            .ok()
            .and_then(|i| self.faces.get(i))
            .map_or(0, Vec::len)
    }

    /// `δ^n`, or an empty matrix of the right shape outside the complex.
    pub fn coboundary(&self, n: isize) -> IntMatrix {
        match usize::try_from(n + 1).ok().and_then(|i| self.coboundaries.get(i)) {
            Some(d) => d.clone(),
            None => IntMatrix::zeros(self.face_count(n + 1), self.face_count(n)),
        }
    }

    /// Highest dimension with faces; `None` for VOID.
    pub fn top_dimension(&self) -> Option<isize> {
        (!self.faces.is_empty()).then(|| self.faces.len() as isize - 2)
    }

    pub fn cohomology(&self, n: isize, coefficients: Coefficients) -> Result<HomologyGroup> {
        homology_at(&self.coboundary(n - 1), &self.coboundary(n), coefficients)
    }
}

/// `H̃^n(K; k)`. VOID has no cohomology; `{φ}` has `k` in degree -1.
pub fn reduced_cohomology(
    k: &SimplicialComplex,
    n: isize,
    coefficients: Coefficients,
) -> Result<HomologyGroup> {
    CochainComplex::new(k).cohomology(n, coefficients)
}

/// `H̃^n(K; k)` for every `n` from -1 to the dimension of `K`.
pub fn reduced_cohomology_all(
    k: &SimplicialComplex,
    coefficients: Coefficients,
) -> Result<BTreeMap<isize, HomologyGroup>> {
    let cc = CochainComplex::new(k);
    let mut out = BTreeMap::new();
    if let Some(top) = cc.top_dimension() {
        for n in -1..=top {
            out.insert(n, cc.cohomology(n, coefficients)?);
        }
    }
    Ok(out)
}

/// One compared block of the Hochster identification.
#[derive(Clone, Debug)]
pub struct BlockCheck {
    pub q: usize,
    pub sigma: VertexSet,
    /// `H_{q,σ}` of the Taylor block.
    pub taylor: HomologyGroup,
    /// `H̃^{|σ|-q-1}(K ∩ σ)`.
    pub oracle: HomologyGroup,
}

impl BlockCheck {
    pub fn passed(&self) -> bool {
        self.taylor.isomorphic(&self.oracle)
    }

    /// Cohomological degree on the oracle side.
    pub fn oracle_degree(&self) -> isize {
        self.sigma.len() as isize - self.q as isize - 1
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub complement: Complement,
    pub coefficients: Coefficients,
    /// Every block where the Taylor side has generators or the oracle side is
    /// nonzero, ordered by `(σ, q)`.
    pub checks: Vec<BlockCheck>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(BlockCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &BlockCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

fn zero_group(coefficients: Coefficients) -> Result<HomologyGroup> {
    HomologyGroup::zero(0, coefficients)
}

/// Compares `H_{q,σ}(Λ[P])` with `H̃^{|σ|-q-1}(K_P ∩ σ)` as abstract groups.
pub fn baskakov_check(
    complement: &Complement,
    sigma: VertexSet,
    q: usize,
    coefficients: Coefficients,
) -> Result<bool> {
    let taylor = block_homology(complement, sigma, q, coefficients)?;
    let k = SimplicialComplex::from_complement(complement).full_subcomplex(sigma);
    let oracle = reduced_cohomology(&k, sigma.len() as isize - q as isize - 1, coefficients)?;
    Ok(taylor.isomorphic(&oracle))
}

/// Runs the block-by-block comparison over every `σ ⊆ [m]` and every degree.
pub fn verify_complement(
    complement: &Complement,
    coefficients: Coefficients,
) -> Result<VerificationReport> {
    let tor = tor_bigraded(complement, coefficients)?;
    verify_against(&tor)
}

/// Like [`verify_complement`], reusing an already computed Tor module.
pub fn verify_against(tor: &BigradedTor) -> Result<VerificationReport> {
    let complement = tor.complement();
    let coefficients = tor.coefficients();
    let k = SimplicialComplex::from_complement(complement);
    let mut checks = Vec::new();
    let mut sigmas: Vec<VertexSet> = VertexSet::full(complement.m()).subsets().collect();
    sigmas.sort();
    for sigma in sigmas {
        let cohomology = reduced_cohomology_all(&k.full_subcomplex(sigma), coefficients)?;
        let max_q = complement.len().max(sigma.len());
        for q in 0..=max_q {
            let n = sigma.len() as isize - q as isize - 1;
            let block = tor.block(q, sigma);
            let oracle = match cohomology.get(&n) {
                Some(g) => g.clone(),
                None => zero_group(coefficients)?,
            };
            if block.is_none() && oracle.is_zero() {
                continue;
            }
            let taylor = match block {
                Some(b) => b.group.clone(),
                None => zero_group(coefficients)?,
            };
            checks.push(BlockCheck { q, sigma, taylor, oracle });
        }
    }
    Ok(VerificationReport { complement: complement.clone(), coefficients, checks })
}
