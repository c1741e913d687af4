//! Additive cohomology of generalized moment-angle complexes `Z_{K_P}(X, A)`.
//!
//! Over a field, with every `H̃*(X_i)` and `H̃*(A_i)` given by graded ranks,
//!
//! ```text
//! H*(Z_K(X, A)) = ⊕_{ω ∈ K} ⊕_{(q, τ)} H_{q,τ}(Λ[E_ω P]) ⊗ ⊗_{i ∈ ω} H̃*(X_i) ⊗ ⊗_{j ∈ τ} H̃*(A_j)
//! ```
//!
//! where a block `(q, τ)` sits in degree `|τ| - q` before tensoring.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::complement::Complement;
use crate::error::{Error, Result};
use crate::linalg::{Coefficients, HomologyGroup};
use crate::poly::GradedDims;
use crate::tor::{tor_bigraded, BigradedTor};
use crate::vertex_set::VertexSet;

/// Reduced Poincaré polynomials of the pairs `(X_i, A_i)`, one per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSpec {
    x: Vec<GradedDims>,
    a: Vec<GradedDims>,
}

fn check_reduced(g: &GradedDims, what: &str, vertex: usize) -> Result<()> {
    if g.rank(0) > 0 {
        return Err(Error::Shape(format!(
            "{what} of vertex {vertex} has a degree-0 class; reduced polynomials start in degree 1"
        )));
    }
    Ok(())
}

impl PairSpec {
    pub fn new(x: Vec<GradedDims>, a: Vec<GradedDims>) -> Result<Self> {
        if x.len() != a.len() {
            return Err(Error::Shape(format!(
                "{} X polynomials but {} A polynomials",
                x.len(),
                a.len()
            )));
        }
        for (i, (xi, ai)) in x.iter().zip(&a).enumerate() {
            check_reduced(xi, "X", i + 1)?;
            check_reduced(ai, "A", i + 1)?;
        }
        Ok(PairSpec { x, a })
    }

    /// The same pair at every vertex.
    pub fn uniform(m: usize, x: GradedDims, a: GradedDims) -> Result<Self> {
        PairSpec::new(vec![x; m], vec![a; m])
    }

    /// `(S², S¹)` at every vertex.
    pub fn s2s1(m: usize) -> Self {
        PairSpec::uniform(m, GradedDims::monomial(2, 1), GradedDims::monomial(1, 1)).expect("valid")
    }

    /// `(D², S¹)` at every vertex; gives the ordinary moment-angle complex.
    pub fn d2s1(m: usize) -> Self {
        PairSpec::uniform(m, GradedDims::zero(), GradedDims::monomial(1, 1)).expect("valid")
    }

    pub fn m(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self, vertex: usize) -> &GradedDims {
        &self.x[vertex - 1]
    }

    pub fn a(&self, vertex: usize) -> &GradedDims {
        &self.a[vertex - 1]
    }

    fn x_product(&self, omega: VertexSet) -> GradedDims {
        omega.vertices().fold(GradedDims::one(), |acc, i| &acc * self.x(i))
    }

    fn a_product(&self, tau: VertexSet) -> GradedDims {
        tau.vertices().fold(GradedDims::one(), |acc, j| &acc * self.a(j))
    }
}

/// `star_K ω` has Tor equal to that of `E_ω P`.
pub fn star_tor(
    complement: &Complement,
    omega: VertexSet,
    coefficients: Coefficients,
) -> Result<BigradedTor> {
    tor_bigraded(&complement.compress(omega), coefficients)
}

/// `H̃^n(link_K ω)` read off the blocks `(q, [m] \ ω)` of `Λ[E_ω P]`, with
/// `n = m - |ω| - q - 1`. Only nonzero groups are listed.
pub fn link_cohomology(
    complement: &Complement,
    omega: VertexSet,
    coefficients: Coefficients,
) -> Result<BTreeMap<isize, HomologyGroup>> {
    let tor = star_tor(complement, omega, coefficients)?;
    let rest = VertexSet::full(complement.m()).difference(omega);
    Ok(tor
        .nonzero_blocks()
        .filter(|b| b.sigma == rest)
        .map(|b| (rest.len() as isize - b.q as isize - 1, b.group.clone()))
        .collect())
}

fn omega_contribution(tor: &BigradedTor, omega: VertexSet, pairs: &PairSpec) -> GradedDims {
    let mut out = GradedDims::zero();
    for b in tor.nonzero_blocks() {
        let base = GradedDims::monomial((b.sigma.len() - b.q) as u32, b.group.rank as u64);
        out = &out + &(&base * &pairs.a_product(b.sigma));
    }
    &out * &pairs.x_product(omega)
}

fn check_pairs(complement: &Complement, pairs: &PairSpec, coefficients: Coefficients) -> Result<()> {
    coefficients.require_field()?;
    if pairs.m() != complement.m() {
        return Err(Error::AmbientMismatch { left: complement.m(), right: pairs.m() });
    }
    Ok(())
}

fn faces(complement: &Complement) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = VertexSet::full(complement.m())
        .subsets()
        .filter(|w| complement.admits(*w))
        .collect();
    out.sort();
    out
}

/// The summand of `H*(Z_K(X, A))` indexed by each face `ω`, in face order.
pub fn maz_by_omega(
    complement: &Complement,
    pairs: &PairSpec,
    coefficients: Coefficients,
) -> Result<Vec<(VertexSet, GradedDims)>> {
    check_pairs(complement, pairs, coefficients)?;
    faces(complement)
        .into_par_iter()
        .map(|omega| {
            let tor = tor_bigraded(&complement.compress(omega), coefficients)?;
            Ok((omega, omega_contribution(&tor, omega, pairs)))
        })
        .collect()
}

/// Graded ranks of `H*(Z_{K_P}(X, A); k)`.
pub fn maz_cohomology(
    complement: &Complement,
    pairs: &PairSpec,
    coefficients: Coefficients,
) -> Result<GradedDims> {
    Ok(maz_by_omega(complement, pairs, coefficients)?
        .into_iter()
        .map(|(_, g)| g)
        .sum())
}

/// Same sum taken over every `ω ⊆ [m]`. Fails if some `ω ∉ K` has a nonzero
/// block, which would contradict the vanishing of `H(Λ[E_ω P])` there.
pub fn maz_cohomology_exhaustive(
    complement: &Complement,
    pairs: &PairSpec,
    coefficients: Coefficients,
) -> Result<GradedDims> {
    check_pairs(complement, pairs, coefficients)?;
    let omegas: Vec<VertexSet> = VertexSet::full(complement.m()).subsets().collect();
    let parts: Vec<GradedDims> = omegas
        .into_par_iter()
        .map(|omega| {
            let tor = tor_bigraded(&complement.compress(omega), coefficients)?;
            if !complement.admits(omega) && !tor.is_zero() {
                return Err(Error::Invariant(format!(
                    "nonzero Tor block for the non-face {omega}"
                )));
            }
            Ok(omega_contribution(&tor, omega, pairs))
        })
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().sum())
}

/// `H*(Z_K(S², S¹))` by the degree rule `2|ω| + 2|τ| - q`.
pub fn s2s1_poincare(complement: &Complement, coefficients: Coefficients) -> Result<GradedDims> {
    coefficients.require_field()?;
    let parts: Vec<GradedDims> = faces(complement)
        .into_par_iter()
        .map(|omega| {
            let tor = tor_bigraded(&complement.compress(omega), coefficients)?;
            Ok(tor
                .nonzero_blocks()
                .map(|b| {
                    let degree = 2 * omega.len() + 2 * b.sigma.len() - b.q;
                    GradedDims::monomial(degree as u32, b.group.rank as u64)
                })
                .sum())
        })
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().sum())
}

/// `Σ_{ω ∈ K} Π_{i ∈ ω} p_{X_i}`, the answer when every `A_i` is contractible.
pub fn contractible_a_series(complement: &Complement, pairs: &PairSpec) -> GradedDims {
    faces(complement).into_iter().map(|w| pairs.x_product(w)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tor::zk_poincare;

    const Q: Coefficients = Coefficients::Rationals;

    fn three_edges() -> Complement {
        Complement::from_lists(6, [vec![1, 2], vec![3, 4], vec![5, 6]]).unwrap()
    }

    #[test]
    fn point_pair_gives_two_sphere() {
        let p = Complement::empty(1).unwrap();
        assert_eq!(s2s1_poincare(&p, Q).unwrap().to_string(), "1 + x^2");
        assert_eq!(maz_cohomology(&p, &PairSpec::s2s1(1), Q).unwrap().to_string(), "1 + x^2");
    }

    #[test]
    fn d2s1_matches_zk() {
        let p = three_edges();
        assert_eq!(
            maz_cohomology(&p, &PairSpec::d2s1(6), Q).unwrap(),
            zk_poincare(&p, Q).unwrap()
        );
    }

    #[test]
    fn link_of_vertex_is_a_circle() {
        let groups = link_cohomology(&three_edges(), VertexSet::of(&[1]), Q).unwrap();
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[&1].rank, 1);
    }

    #[test]
    fn bad_pairs() {
        let p = three_edges();
        assert!(matches!(
            maz_cohomology(&p, &PairSpec::s2s1(5), Q),
            Err(Error::AmbientMismatch { .. })
        ));
        assert!(PairSpec::uniform(2, GradedDims::one(), GradedDims::zero()).is_err());
        assert!(matches!(
            maz_cohomology(&p, &PairSpec::s2s1(6), Coefficients::Integers),
            Err(Error::NotAField(_))
        ));
    }
}
