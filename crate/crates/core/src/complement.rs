//! Simplicial complements: ordered sequences of subsets of `[m]`, each
//! standing for the square-free monomial `x_σ` of a generator of the ideal.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Largest number of members accepted for Taylor computations.
pub const MAX_MEMBERS: usize = 24;

/// An ordered list of subsets of `[m]`.
///
/// Duplicates, non-minimal members and the empty set are all allowed. The
/// order matters: it fixes the sign conventions of the exterior algebra built
/// on the members.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Complement {
    m: usize,
    members: Vec<VertexSet>,
}

impl Complement {
    pub fn new(m: usize, members: Vec<VertexSet>) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(Error::AmbientTooLarge { m, max: MAX_VERTICES });
        }
        for sigma in &members {
            if !sigma.fits(m) {
                let vertex = sigma.vertices().last().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, m });
            }
        }
        Ok(Complement { m, members })
    }

    /// Builds a complement from lists of 1-indexed vertex labels.
    pub fn from_lists<L, I>(m: usize, lists: L) -> Result<Self>
    where
        L: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let members = lists
            .into_iter()
            .map(|l| VertexSet::from_vertices(m, l))
            .collect::<Result<Vec<_>>>()?;
        Complement::new(m, members)
    }

    pub fn empty(m: usize) -> Result<Self> {
        Complement::new(m, Vec::new())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains_empty_set(&self) -> bool {
        self.members.iter().any(|s| s.is_empty())
    }

    /// Errors if the complement is too long for the exterior-algebra machinery.
    pub fn check_taylor_size(&self) -> Result<()> {
        if self.members.len() > MAX_MEMBERS {
            return Err(Error::TooManyMembers { s: self.members.len(), max: MAX_MEMBERS });
        }
        Ok(())
    }

    /// True iff `tau` contains no member, i.e. `tau` is a face of `K_P`.
    pub fn admits(&self, tau: VertexSet) -> bool {
        self.members.iter().all(|sigma| !sigma.is_subset(tau))
    }

    /// Canonical generators of the ideal: drops duplicates and members that
    /// strictly contain another member, then sorts (cardinality, lex).
    pub fn minimalize(&self) -> Complement {
        let mut sorted = self.members.clone();
        sorted.sort();
        sorted.dedup();
        let mut kept: Vec<VertexSet> = Vec::with_capacity(sorted.len());
        // Sorted by cardinality, so any proper subset of `sigma` is already kept.
        for sigma in sorted {
            if !kept.iter().any(|k| k.is_subset(sigma)) {
                kept.push(sigma);
            }
        }
        Complement { m: self.m, members: kept }
    }

    /// Whether both complements generate the same monomial ideal.
    pub fn equivalent(&self, other: &Complement) -> Result<bool> {
        if self.m != other.m {
            return Err(Error::AmbientMismatch { left: self.m, right: other.m });
        }
        let covered = |a: &Complement, b: &Complement| {
            a.members.iter().all(|s| b.members.iter().any(|t| t.is_subset(*s)))
        };
        Ok(covered(self, other) && covered(other, self))
    }

    /// The `ω`-compression `{σ_1 \ ω, ..., σ_s \ ω}`, keeping order and
    /// multiplicity.
    pub fn compress(&self, omega: VertexSet) -> Complement {
        Complement {
            m: self.m,
            members: self.members.iter().map(|s| s.difference(omega)).collect(),
        }
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.members.iter().map(|s| s.to_vec()).collect()
    }
}

impl fmt::Display for Complement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} [", self.m)?;
        for (k, s) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Complement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(m: usize, lists: &[&[usize]]) -> Complement {
        Complement::from_lists(m, lists.iter().map(|l| l.iter().copied())).unwrap()
    }

    #[test]
    fn minimalize_drops_supersets_and_duplicates() {
        assert_eq!(c(3, &[&[1, 2], &[1, 2, 3]]).minimalize(), c(3, &[&[1, 2]]));
        assert_eq!(c(3, &[&[1], &[1]]).minimalize(), c(3, &[&[1]]));
        assert_eq!(c(3, &[&[], &[1, 2]]).minimalize(), c(3, &[&[]]));
        assert_eq!(
            c(5, &[&[3, 4, 5], &[1, 2, 3], &[2, 4], &[1, 5]]).minimalize(),
            c(5, &[&[1, 5], &[2, 4], &[1, 2, 3], &[3, 4, 5]])
        );
    }

    #[test]
    fn equivalence_by_containment() {
        let p = c(3, &[&[1, 2]]);
        assert!(p.equivalent(&c(3, &[&[1, 2], &[1, 2, 3]])).unwrap());
        assert!(!p.equivalent(&c(3, &[&[1, 3]])).unwrap());
        assert!(p.equivalent(&p.minimalize()).unwrap());
        assert!(matches!(
            p.equivalent(&c(4, &[&[1, 2]])),
            Err(Error::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn compression_is_memberwise_difference() {
        let p = c(5, &[&[1, 5], &[2, 4]]);
        assert_eq!(p.compress(VertexSet::of(&[1])), c(5, &[&[5], &[2, 4]]));
        assert_eq!(c(2, &[&[1, 2]]).compress(VertexSet::of(&[1, 2])), c(2, &[&[]]));
        assert_eq!(p.compress(VertexSet::EMPTY), p);
    }

    #[test]
    fn rejects_labels_outside_ambient() {
        assert!(Complement::from_lists(3, [vec![1, 4]]).is_err());
        assert!(Complement::new(3, vec![VertexSet::of(&[5])]).is_err());
    }
}
