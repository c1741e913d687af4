//! Subsets of the ground set `[m] = {1, ..., m}` packed into a machine word.
//!
//! Vertex `i` lives in bit `i - 1`. The ambient size `m` is carried by the
//! containers ([`Complement`](crate::Complement),
//! [`SimplicialComplex`](crate::SimplicialComplex)), not by the set itself.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ambient size a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Builds a set from raw mask bits.
    pub const fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The whole ground set `[m]`.
    pub fn full(m: usize) -> Self {
        assert!(m <= MAX_VERTICES, "ambient size {m} exceeds {MAX_VERTICES}");
        if m == 0 {
            VertexSet(0)
        } else {
            VertexSet(u32::MAX >> (32 - m))
        }
    }

    /// Builds a set from 1-indexed vertex labels, validating them against `m`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(m: usize, vertices: I) -> Result<Self> {
        if m > MAX_VERTICES {
            return Err(Error::AmbientTooLarge { m, max: MAX_VERTICES });
        }
        let mut bits = 0u32;
        for v in vertices {
            if v == 0 || v > m {
                return Err(Error::VertexOutOfRange { vertex: v, m });
            }
            bits |= 1 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    /// Like [`from_vertices`](Self::from_vertices) but panics on bad labels.
    /// Meant for literals in tests and examples.
    pub fn of(vertices: &[usize]) -> Self {
        Self::from_vertices(MAX_VERTICES, vertices.iter().copied()).expect("valid vertex labels")
    }

    pub fn singleton(v: usize) -> Self {
        Self::of(&[v])
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn contains(self, v: usize) -> bool {
        v >= 1 && v <= 32 && self.0 & (1 << (v - 1)) != 0
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn insert(self, v: usize) -> VertexSet {
        VertexSet(self.0 | (1 << (v - 1)))
    }

    pub fn remove(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1 << (v - 1)))
    }

    /// True when every set bit addresses a vertex of `[m]`.
    pub fn fits(self, m: usize) -> bool {
        self.is_subset(VertexSet::full(m))
    }

    /// Vertex labels in increasing order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// All subsets of `self`, in increasing mask order (so `φ` first).
    pub fn subsets(self) -> Subsets {
        Subsets { of: self.0, next: Some(0) }
    }
}

pub struct Vertices(u32);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Submask enumeration.
pub struct Subsets {
    of: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.of {
            None
        } else {
            Some(((cur | !self.of).wrapping_add(1)) & self.of)
        };
        Some(VertexSet(cur))
    }
}

/// Cardinality first, then lexicographic on the sorted vertex lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.vertices().cmp(other.vertices()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.vertices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_are_one_indexed() {
        let s = VertexSet::of(&[1, 3]);
        assert_eq!(s.bits(), 0b101);
        assert_eq!(s.to_vec(), vec![1, 3]);
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            VertexSet::from_vertices(3, [4]),
            Err(Error::VertexOutOfRange { vertex: 4, m: 3 })
        ));
        assert!(VertexSet::from_vertices(3, [0]).is_err());
        assert!(matches!(
            VertexSet::from_vertices(25, [1]),
            Err(Error::AmbientTooLarge { .. })
        ));
    }

    #[test]
    fn ordering_is_cardinality_then_lex() {
        let mut v = [
            VertexSet::of(&[2, 3]),
            VertexSet::of(&[1, 2, 3]),
            VertexSet::of(&[4]),
            VertexSet::of(&[1, 4]),
            VertexSet::EMPTY,
            VertexSet::of(&[1, 3]),
        ];
        v.sort();
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["{}", "{4}", "{1,3}", "{1,4}", "{2,3}", "{1,2,3}"]);
    }

    #[test]
    fn subsets_enumerates_all() {
        let s = VertexSet::of(&[2, 4, 5]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], VertexSet::EMPTY);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn full_set() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(3).to_vec(), vec![1, 2, 3]);
        assert_eq!(VertexSet::full(24).len(), 24);
    }
}
