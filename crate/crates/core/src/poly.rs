//! Graded ranks, i.e. Poincaré polynomials with nonnegative coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

/// Map from degree to rank; zero ranks are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GradedDims {
    ranks: BTreeMap<u32, u64>,
}

impl GradedDims {
    pub fn zero() -> Self {
        GradedDims::default()
    }

    pub fn one() -> Self {
        GradedDims::monomial(0, 1)
    }

    pub fn monomial(degree: u32, rank: u64) -> Self {
        let mut g = GradedDims::zero();
        g.add_rank(degree, rank);
        g
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, u64)>>(terms: I) -> Self {
        let mut g = GradedDims::zero();
        for (d, r) in terms {
            g.add_rank(d, r);
        }
        g
    }

    pub fn add_rank(&mut self, degree: u32, rank: u64) {
        if rank > 0 {
            *self.ranks.entry(degree).or_insert(0) += rank;
        }
    }

    pub fn rank(&self, degree: u32) -> u64 {
        self.ranks.get(&degree).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.ranks.iter().map(|(d, r)| (*d, *r))
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Sum of all ranks (the value at `x = 1`).
    pub fn total(&self) -> u64 {
        self.ranks.values().sum()
    }

    pub fn shift(&self, by: u32) -> Self {
        GradedDims { ranks: self.ranks.iter().map(|(d, r)| (d + by, *r)).collect() }
    }

    pub fn scale(&self, factor: u64) -> Self {
        GradedDims::from_terms(self.terms().map(|(d, r)| (d, r * factor)))
    }

    /// `1 + 2x^3 + x^9 (total 4)`.
    pub fn with_total(&self) -> String {
        format!("{self} (total {})", self.total())
    }
}

impl Add for &GradedDims {
    type Output = GradedDims;

    fn add(self, rhs: &GradedDims) -> GradedDims {
        let mut out = self.clone();
        for (d, r) in rhs.terms() {
            out.add_rank(d, r);
        }
        out
    }
}

impl Mul for &GradedDims {
    type Output = GradedDims;

    fn mul(self, rhs: &GradedDims) -> GradedDims {
        let mut out = GradedDims::zero();
        for (a, r) in self.terms() {
            for (b, s) in rhs.terms() {
                out.add_rank(a + b, r * s);
            }
        }
        out
    }
}

impl std::iter::Sum for GradedDims {
    fn sum<I: Iterator<Item = GradedDims>>(iter: I) -> GradedDims {
        iter.fold(GradedDims::zero(), |acc, g| &acc + &g)
    }
}

/// Ascending degrees, `x^k` terms, unit coefficients omitted: `1 + 3x^3 + x^9`.
impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ranks.is_empty() {
            return f.write_str("0");
        }
        for (k, (d, r)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match (d, r) {
                (0, r) => write!(f, "{r}")?,
                (1, 1) => f.write_str("x")?,
                (1, r) => write!(f, "{r}x")?,
                (d, 1) => write!(f, "x^{d}")?,
                (d, r) => write!(f, "{r}x^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
