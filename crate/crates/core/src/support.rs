//! The Z/2-algebra of functions `2^[m] → Z/2`, stored as full truth tables.
//!
//! This is a verification layer: tables have `2^m` entries, so `m` is capped at
//! [`MAX_SUPPORT_VERTICES`].

use std::ops::{Add, Mul};

use crate::complement::Complement;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub const MAX_SUPPORT_VERTICES: usize = 20;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SupportFunction {
    m: usize,
    words: Vec<u64>,
}

fn word_count(m: usize) -> usize {
    (1usize << m).div_ceil(64)
}

impl SupportFunction {
    pub fn zero(m: usize) -> Result<Self> {
        if m > MAX_SUPPORT_VERTICES {
            return Err(Error::AmbientTooLarge { m, max: MAX_SUPPORT_VERTICES });
        }
        Ok(SupportFunction { m, words: vec![0; word_count(m)] })
    }

    pub fn one(m: usize) -> Result<Self> {
        let mut f = Self::zero(m)?;
        for tau in VertexSet::full(m).subsets() {
            f.set(tau, true);
        }
        Ok(f)
    }

    /// `δ_σ`: the indicator of the single point `σ`.
    pub fn delta(m: usize, sigma: VertexSet) -> Result<Self> {
        let mut f = Self::zero(m)?;
        check_fits(sigma, m)?;
        f.set(sigma, true);
        Ok(f)
    }

    /// `μ_σ`: the indicator of the up-set `{τ | σ ⊆ τ}`.
    pub fn mu(m: usize, sigma: VertexSet) -> Result<Self> {
        let mut f = Self::zero(m)?;
        check_fits(sigma, m)?;
        for rest in VertexSet::full(m).difference(sigma).subsets() {
            f.set(sigma.union(rest), true);
        }
        Ok(f)
    }

    /// Characteristic function `f_K`; all zeros for the VOID complex.
    pub fn char_fn(k: &SimplicialComplex) -> Result<Self> {
        let mut f = Self::zero(k.m())?;
        for tau in k.faces() {
            f.set(tau, true);
        }
        Ok(f)
    }

    /// `∏_i (1 + μ_{σ_i})`.
    pub fn complement_product(p: &Complement) -> Result<Self> {
        let m = p.m();
        let one = Self::one(m)?;
        p.members().iter().try_fold(one.clone(), |acc, sigma| {
            Ok(&acc * &(&one + &Self::mu(m, *sigma)?))
        })
    }

    pub fn from_support<I: IntoIterator<Item = VertexSet>>(m: usize, support: I) -> Result<Self> {
        let mut f = Self::zero(m)?;
        for tau in support {
            check_fits(tau, m)?;
            f.set(tau, !f.get(tau));
        }
        Ok(f)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, tau: VertexSet) -> bool {
        let i = tau.bits() as usize;
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, tau: VertexSet, value: bool) {
        let i = tau.bits() as usize;
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    /// Points where the function is 1, in increasing mask order.
    pub fn support(&self) -> Vec<VertexSet> {
        VertexSet::full(self.m).subsets().filter(|t| self.get(*t)).collect()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_m(other)?;
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect();
        Ok(SupportFunction { m: self.m, words })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_m(other)?;
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        Ok(SupportFunction { m: self.m, words })
    }

    /// `E_ω(f) = f ∘ (τ ↦ τ ∪ ω)`.
    pub fn compress(&self, omega: VertexSet) -> Self {
        let mut out = SupportFunction { m: self.m, words: vec![0; self.words.len()] };
        for tau in VertexSet::full(self.m).subsets() {
            if self.get(tau.union(omega)) {
                out.set(tau, true);
            }
        }
        out
    }

    /// Coefficients `c_σ` with `f = Σ c_σ μ_σ` (Möbius inversion over Z/2).
    pub fn mu_coefficients(&self) -> Vec<VertexSet> {
        let mut table: Vec<bool> = (0..1usize << self.m)
            .map(|i| self.get(VertexSet::from_bits(i as u32)))
            .collect();
        for bit in 0..self.m {
            for i in 0..table.len() {
                if i & (1 << bit) != 0 {
                    table[i] ^= table[i ^ (1 << bit)];
                }
            }
        }
        (0..table.len())
            .filter(|&i| table[i])
            .map(|i| VertexSet::from_bits(i as u32))
            .collect()
    }

    fn same_m(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::AmbientMismatch { left: self.m, right: other.m });
        }
        Ok(())
    }
}

fn check_fits(sigma: VertexSet, m: usize) -> Result<()> {
    if sigma.fits(m) {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: sigma.vertices().last().unwrap_or(0), m })
    }
}

/// Panics on mismatched ambient sizes; use [`SupportFunction::try_add`] to
/// handle that case.
impl Add for &SupportFunction {
    type Output = SupportFunction;

    fn add(self, rhs: &SupportFunction) -> SupportFunction {
        self.try_add(rhs).expect("support functions over the same [m]")
    }
}

impl Mul for &SupportFunction {
    type Output = SupportFunction;

    fn mul(self, rhs: &SupportFunction) -> SupportFunction {
        self.try_mul(rhs).expect("support functions over the same [m]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_and_mu_basics() {
        let d = SupportFunction::delta(3, VertexSet::EMPTY).unwrap();
        assert_eq!(d.support(), vec![VertexSet::EMPTY]);
        assert_eq!(SupportFunction::mu(3, VertexSet::EMPTY).unwrap(), SupportFunction::one(3).unwrap());
        let mut s = SupportFunction::mu(3, VertexSet::of(&[1, 2])).unwrap().support();
        s.sort();
        assert_eq!(s, vec![VertexSet::of(&[1, 2]), VertexSet::of(&[1, 2, 3])]);
    }

    #[test]
    fn arithmetic() {
        let f = SupportFunction::mu(4, VertexSet::of(&[2])).unwrap();
        assert!((&f + &f).is_zero());
        let a = SupportFunction::mu(4, VertexSet::of(&[1, 2])).unwrap();
        let b = SupportFunction::mu(4, VertexSet::of(&[2, 4])).unwrap();
        assert_eq!(&a * &b, SupportFunction::mu(4, VertexSet::of(&[1, 2, 4])).unwrap());
        let g = SupportFunction::zero(3).unwrap();
        assert!(matches!(f.try_add(&g), Err(Error::AmbientMismatch { .. })));
        assert!(matches!(f.try_mul(&g), Err(Error::AmbientMismatch { .. })));
    }

    #[test]
    fn delta_expansion_reconstructs() {
        let f = &SupportFunction::mu(3, VertexSet::of(&[1])).unwrap()
            + &SupportFunction::delta(3, VertexSet::of(&[2])).unwrap();
        let rebuilt = f
            .support()
            .into_iter()
            .map(|s| SupportFunction::delta(3, s).unwrap())
            .fold(SupportFunction::zero(3).unwrap(), |acc, d| &acc + &d);
        assert_eq!(rebuilt, f);
    }

    #[test]
    fn characteristic_functions() {
        let empty = SupportFunction::char_fn(&SimplicialComplex::empty(3)).unwrap();
        assert_eq!(empty.support(), vec![VertexSet::EMPTY]);
        let full = SimplicialComplex::simplex(3, VertexSet::full(3));
        assert_eq!(SupportFunction::char_fn(&full).unwrap(), SupportFunction::one(3).unwrap());
        assert!(SupportFunction::char_fn(&SimplicialComplex::void(3)).unwrap().is_zero());
    }

    #[test]
    fn compression() {
        let f = SupportFunction::mu(4, VertexSet::of(&[1, 3])).unwrap();
        assert_eq!(f.compress(VertexSet::EMPTY), f);
        assert_eq!(
            f.compress(VertexSet::of(&[3, 4])),
            SupportFunction::mu(4, VertexSet::of(&[1])).unwrap()
        );
    }

    #[test]
    fn mu_coefficients_invert_expansion() {
        let sets = [VertexSet::of(&[1]), VertexSet::of(&[2, 3]), VertexSet::EMPTY];
        let f = sets
            .iter()
            .map(|s| SupportFunction::mu(3, *s).unwrap())
            .fold(SupportFunction::zero(3).unwrap(), |acc, g| &acc + &g);
        let mut c = f.mu_coefficients();
        c.sort();
        let mut expected = sets.to_vec();
        expected.sort();
        assert_eq!(c, expected);
    }

    #[test]
    fn too_large() {
        assert!(SupportFunction::zero(21).is_err());
    }
}
