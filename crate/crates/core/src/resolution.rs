//! The full Taylor differential on `Λ[P] ⊗ k[x_1, ..., x_m]`,
//!
//! ```text
//! d̃(u ⊗ x^a) = Σ_{i=1..q} (-1)^i ∂_i(u) ⊗ x_{S_u \ S_{∂_i u}} x^a
//! ```
//!
//! Setting every variable to zero recovers the reduced differential. Used to
//! cross-check [`reduced_differential`](crate::taylor::reduced_differential).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complement::Complement;
use crate::taylor::{Chain, TaylorGenerator};
use crate::vertex_set::VertexSet;

/// Exponent vector `a ∈ N^m` of a monomial `x^a`.
pub type Exponent = Vec<u32>;

/// A finite sum of terms `c · u ⊗ x^a` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct MonomialChain {
    m: usize,
    terms: BTreeMap<(TaylorGenerator, Exponent), BigInt>,
}

impl MonomialChain {
    pub fn zero(m: usize) -> Self {
        MonomialChain { m, terms: BTreeMap::new() }
    }

    /// `u ⊗ 1`.
    pub fn generator(m: usize, u: TaylorGenerator) -> Self {
        let mut c = MonomialChain::zero(m);
        c.add_term(u, vec![0; m], BigInt::from(1));
        c
    }

    pub fn add_term(&mut self, u: TaylorGenerator, a: Exponent, x: BigInt) {
        assert_eq!(a.len(), self.m, "exponent length");
        let key = (u, a);
        let entry = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += x;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(TaylorGenerator, Exponent), &BigInt)> {
        self.terms.iter()
    }

    /// Sets `x_1 = ⋯ = x_m = 0`, keeping the terms with `a = 0`.
    pub fn specialize(&self) -> Chain {
        let mut out = Chain::zero();
        for ((u, a), x) in &self.terms {
            if a.iter().all(|&e| e == 0) {
                out.add_term(*u, x.clone());
            }
        }
        out
    }
}

fn multiply_by(a: &[u32], subset: VertexSet) -> Exponent {
    let mut out = a.to_vec();
    for v in subset.vertices() {
        out[v - 1] += 1;
    }
    out
}

/// `d̃` extended linearly.
pub fn full_differential(complement: &Complement, chain: &MonomialChain) -> MonomialChain {
    let mut out = MonomialChain::zero(chain.m);
    for ((u, a), x) in &chain.terms {
        let total = u.total(complement);
        for i in 1..=u.degree() {
            let face = u.face(i);
            let monomial = total.difference(face.total(complement));
            let coefficient = if i % 2 == 0 { x.clone() } else { -x };
            out.add_term(face, multiply_by(a, monomial), coefficient);
        }
    }
    out
}

impl fmt::Display for MonomialChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, ((u, a), x)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{x}*{u}")?;
            for (i, e) in a.iter().enumerate().filter(|(_, e)| **e > 0) {
                if *e == 1 {
                    write!(f, "*x{}", i + 1)?;
                } else {
                    write!(f, "*x{}^{e}", i + 1)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::taylor::reduced_differential;

    fn five_vertex() -> Complement {
        Complement::from_lists(5, [vec![1, 5], vec![2, 4], vec![1, 2, 3], vec![3, 4, 5]]).unwrap()
    }

    #[test]
    fn single_member() {
        let p = five_vertex();
        let d = full_differential(&p, &MonomialChain::generator(5, TaylorGenerator::of(&[1])));
        let mut expected = MonomialChain::zero(5);
        expected.add_term(TaylorGenerator::UNIT, vec![1, 0, 0, 0, 1], BigInt::from(-1));
        assert_eq!(d, expected);
    }

    #[test]
    fn squares_to_zero_and_specializes() {
        let p = five_vertex();
        for bits in 0..16u32 {
            let u = TaylorGenerator::from_bits(bits);
            let c = MonomialChain::generator(5, u);
            let d = full_differential(&p, &c);
            assert!(full_differential(&p, &d).is_zero(), "{u}");
            assert_eq!(d.specialize(), reduced_differential(&p, u), "{u}");
        }
    }
}
