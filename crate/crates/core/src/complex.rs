//! Abstract simplicial complexes on `[m]`, stored by their facets.

use std::collections::BTreeSet;
use std::fmt;

use crate::complement::Complement;
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simplicial complex on the ground set `[m]`.
///
/// Two degenerate complexes are kept apart: the VOID complex has no faces at
/// all (not even `φ`), while the EMPTY complex `{φ}` has exactly the empty
/// face. VOID is stored as an empty facet list, EMPTY as the single facet `φ`.
/// Vertices of `[m]` that are not faces ("ghost" vertices) are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    m: usize,
    facets: Vec<VertexSet>,
}

fn maximal(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort();
    sets.dedup();
    let mut out: Vec<VertexSet> = Vec::with_capacity(sets.len());
    // Largest first.
    for s in sets.into_iter().rev() {
        if !out.iter().any(|f| s.is_subset(*f)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

impl SimplicialComplex {
    /// Builds a complex from any generating family; non-maximal sets are dropped.
    pub fn from_facets(m: usize, facets: Vec<VertexSet>) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(Error::AmbientTooLarge { m, max: MAX_VERTICES });
        }
        for f in &facets {
            if !f.fits(m) {
                let vertex = f.vertices().last().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, m });
            }
        }
        Ok(SimplicialComplex { m, facets: maximal(facets) })
    }

    pub fn from_lists<L, I>(m: usize, lists: L) -> Result<Self>
    where
        L: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let facets = lists
            .into_iter()
            .map(|l| VertexSet::from_vertices(m, l))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(m, facets)
    }

    /// The complex with no faces at all.
    pub fn void(m: usize) -> Self {
        SimplicialComplex { m, facets: Vec::new() }
    }

    /// The complex `{φ}`.
    pub fn empty(m: usize) -> Self {
        SimplicialComplex { m, facets: vec![VertexSet::EMPTY] }
    }

    /// The full simplex on `sigma`.
    pub fn simplex(m: usize, sigma: VertexSet) -> Self {
        assert!(sigma.fits(m));
        SimplicialComplex { m, facets: vec![sigma] }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for the complex `{φ}`.
    pub fn is_empty_complex(&self) -> bool {
        self.facets == [VertexSet::EMPTY]
    }

    pub fn contains(&self, tau: VertexSet) -> bool {
        self.facets.iter().any(|f| tau.is_subset(*f))
    }

    /// Vertices that are faces of the complex.
    pub fn vertex_support(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Every face, sorted (cardinality, lex). Empty for VOID.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut all = BTreeSet::new();
        for f in &self.facets {
            all.extend(f.subsets());
        }
        all.into_iter().collect()
    }

    /// `K_P`: the sets containing no member of `complement`. VOID when `φ ∈ P`.
    pub fn from_complement(complement: &Complement) -> Self {
        let m = complement.m();
        if complement.contains_empty_set() {
            return SimplicialComplex::void(m);
        }
        let members = complement.minimalize();
        let members = members.members();
        let n = 1usize << m;
        let mut is_face = vec![false; n];
        for (mask, slot) in is_face.iter_mut().enumerate() {
            let tau = VertexSet::from_bits(mask as u32);
            *slot = members.iter().all(|s| !s.is_subset(tau));
        }
        let full = VertexSet::full(m);
        let mut facets = Vec::new();
        for (mask, &face) in is_face.iter().enumerate() {
            if !face {
                continue;
            }
            let tau = VertexSet::from_bits(mask as u32);
            let extendable = full
                .difference(tau)
                .vertices()
                .any(|v| is_face[tau.insert(v).bits() as usize]);
            if !extendable {
                facets.push(tau);
            }
        }
        facets.sort();
        SimplicialComplex { m, facets }
    }

    /// The missing faces `P_K`: non-faces all of whose proper subsets are
    /// faces, sorted (cardinality, lex).
    pub fn to_complement(&self) -> Result<Complement> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let mut missing = Vec::new();
        for tau in VertexSet::full(self.m).subsets() {
            if self.contains(tau) {
                continue;
            }
            if tau.vertices().all(|v| self.contains(tau.remove(v))) {
                missing.push(tau);
            }
        }
        missing.sort();
        Complement::new(self.m, missing)
    }

    /// `K ∩ σ`: faces contained in `sigma`. Ambient size is kept; VOID stays VOID.
    pub fn full_subcomplex(&self, sigma: VertexSet) -> SimplicialComplex {
        let facets = self.facets.iter().map(|f| f.intersection(sigma)).collect();
        SimplicialComplex { m: self.m, facets: maximal(facets) }
    }

    /// `{τ ∈ K | ω ∪ τ ∈ K}`, evaluated face by face. VOID when `ω ∉ K`.
    pub fn star(&self, omega: VertexSet) -> SimplicialComplex {
        let faces = self
            .faces()
            .into_iter()
            .filter(|tau| self.contains(tau.union(omega)))
            .collect();
        SimplicialComplex { m: self.m, facets: maximal(faces) }
    }

    /// `{τ ∈ K | ω ∪ τ ∈ K, ω ∩ τ = φ}`, evaluated face by face.
    pub fn link(&self, omega: VertexSet) -> SimplicialComplex {
        let faces = self
            .faces()
            .into_iter()
            .filter(|tau| tau.is_disjoint(omega) && self.contains(tau.union(omega)))
            .collect();
        SimplicialComplex { m: self.m, facets: maximal(faces) }
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "m={} VOID", self.m);
        }
        write!(f, "m={} facets [", self.m)?;
        for (k, s) in self.facets.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
