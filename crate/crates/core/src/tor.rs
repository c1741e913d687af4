//! The bigraded Tor module `Tor^{k[x]}_{q,σ}(k(K_P), k)` as the homology of
//! `(Λ[P], d)`, block by block, together with its product.
//!
//! Classes multiply by multiplying representative cycles in the exterior
//! algebra; a product of classes supported on intersecting subsets vanishes.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::complement::Complement;
use crate::error::{Error, Result};
use crate::linalg::{homology_at, Coefficients, HomologyGroup, IntMatrix};
use crate::poly::GradedDims;
use crate::taylor::{boundary_columns, sigma_supports, support_block, Chain, SupportBlock, TaylorGenerator};
use crate::vertex_set::VertexSet;

/// Homology of the Taylor complex in bidegree `(q, σ)`.
#[derive(Clone, Debug)]
pub struct TorBlock {
    pub q: usize,
    pub sigma: VertexSet,
    /// Basis of `Λ^{q,σ}[P]`, in the order used by the matrices and vectors.
    pub generators: Vec<TaylorGenerator>,
    pub group: HomologyGroup,
}

impl TorBlock {
    /// Cohomological degree `2|σ| - q` of the block in `H^*(Z_K)`.
    pub fn zk_degree(&self) -> u32 {
        (2 * self.sigma.len() - self.q) as u32
    }

    pub fn representative(&self, j: usize) -> Chain {
        Chain::from_vector(&self.generators, &self.group.representatives[j])
    }

    /// Name of the `j`-th basis class: the least monomial of its representative.
    pub fn label(&self, j: usize) -> String {
        self.representative(j)
            .leading()
            .map_or_else(|| "0".to_string(), |u| u.to_string())
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.group.rank).map(|j| self.label(j)).collect()
    }
}

fn blocks_for_support(
    complement: &Complement,
    support: &SupportBlock,
    coefficients: Coefficients,
) -> Result<Vec<TorBlock>> {
    let matrices: Vec<IntMatrix> = boundary_columns(complement, support)
        .iter()
        .map(|m| m.to_dense())
        .collect();
    let mut out = Vec::new();
    for q in 0..support.generators.len() {
        if support.degree(q).is_empty() {
            continue;
        }
        let group = homology_at(&matrices[q + 1], &matrices[q], coefficients)?;
        out.push(TorBlock {
            q,
            sigma: support.sigma,
            generators: support.degree(q).to_vec(),
            group,
        });
    }
    Ok(out)
}

/// `H_{q,σ}(Λ[P], d)` for a single block, without building the whole module.
pub fn block_homology(
    complement: &Complement,
    sigma: VertexSet,
    q: usize,
    coefficients: Coefficients,
) -> Result<HomologyGroup> {
    complement.check_taylor_size()?;
    let support = support_block(complement, sigma);
    match blocks_for_support(complement, &support, coefficients)?
        .into_iter()
        .find(|b| b.q == q)
    {
        Some(b) => Ok(b.group),
        None => HomologyGroup::zero(0, coefficients),
    }
}

/// The bigraded Tor module with a basis of classes in every block.
#[derive(Clone, Debug)]
pub struct BigradedTor {
    complement: Complement,
    coefficients: Coefficients,
    blocks: BTreeMap<(usize, VertexSet), TorBlock>,
}

/// Computes every block `H_{q,σ}(Λ[P], d)`; blocks are independent and built
/// in parallel.
pub fn tor_bigraded(complement: &Complement, coefficients: Coefficients) -> Result<BigradedTor> {
    complement.check_taylor_size()?;
    coefficients.validate()?;
    let supports = sigma_supports(complement);
    let built: Vec<Vec<TorBlock>> = supports
        .par_iter()
        .map(|s| blocks_for_support(complement, s, coefficients))
        .collect::<Result<_>>()?;
    let blocks = built
        .into_iter()
        .flatten()
        .map(|b| ((b.q, b.sigma), b))
        .collect();
    Ok(BigradedTor { complement: complement.clone(), coefficients, blocks })
}

/// A class in one block, with coordinates in that block's basis and a cycle
/// representing it.
#[derive(Clone, Debug)]
pub struct TorClass {
    pub q: usize,
    pub sigma: VertexSet,
    pub coordinates: Vec<BigRational>,
    pub representative: Chain,
}

impl TorClass {
    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(Zero::is_zero)
    }

    /// Cohomological degree `2|σ| - q`.
    pub fn zk_degree(&self) -> u32 {
        (2 * self.sigma.len() - self.q) as u32
    }
}

fn negate(coords: &[BigRational], coefficients: Coefficients) -> Vec<BigRational> {
    match coefficients {
        Coefficients::PrimeField(p) => {
            let p = BigRational::from_integer(BigInt::from(p));
            coords
                .iter()
                .map(|c| if c.is_zero() { c.clone() } else { &p - c })
                .collect()
        }
        _ => coords.iter().map(|c| -c).collect(),
    }
}

/// `2*s1s2 - s1s3`, or `0`. Prime-field residues are shown in `(-p/2, p/2]`.
pub fn format_coordinates(
    coords: &[BigRational],
    labels: &[String],
    coefficients: Coefficients,
) -> String {
    let mut out = String::new();
    for (c, label) in coords.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let c = match coefficients {
            Coefficients::PrimeField(p) if c > &BigRational::from_integer(BigInt::from(p / 2)) => {
                c - BigRational::from_integer(BigInt::from(p))
            }
            _ => c.clone(),
        };
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if mag != BigRational::from_integer(BigInt::from(1)) {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl BigradedTor {
    pub fn complement(&self) -> &Complement {
        &self.complement
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    /// All blocks with generators, ordered by `(q, σ)`.
    pub fn blocks(&self) -> impl Iterator<Item = &TorBlock> {
        self.blocks.values()
    }

    pub fn block(&self, q: usize, sigma: VertexSet) -> Option<&TorBlock> {
        self.blocks.get(&(q, sigma))
    }

    pub fn nonzero_blocks(&self) -> impl Iterator<Item = &TorBlock> {
        self.blocks.values().filter(|b| !b.group.is_zero())
    }

    /// Sum of free ranks over all blocks.
    pub fn total_rank(&self) -> usize {
        self.blocks.values().map(|b| b.group.rank).sum()
    }

    pub fn has_torsion(&self) -> bool {
        self.blocks.values().any(|b| !b.group.torsion.is_empty())
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(|b| b.group.is_zero())
    }

    /// `Σ rank · x^{2|σ| - q}`, the Poincaré polynomial of `H^*(Z_K)`.
    pub fn zk_poincare(&self) -> Result<GradedDims> {
        self.coefficients.require_field()?;
        Ok(self
            .nonzero_blocks()
            .map(|b| GradedDims::monomial(b.zk_degree(), b.group.rank as u64))
            .sum())
    }

    fn zero_class(&self, q: usize, sigma: VertexSet) -> TorClass {
        let rank = self.block(q, sigma).map_or(0, |b| b.group.rank);
        TorClass {
            q,
            sigma,
            coordinates: vec![BigRational::zero(); rank],
            representative: Chain::zero(),
        }
    }

    /// Basis classes, ordered by `(q, σ)` and then by position in the block.
    /// The unit `(0, φ)` comes first whenever it exists.
    pub fn basis(&self) -> Vec<TorClass> {
        let mut out = Vec::new();
        for b in self.blocks.values() {
            for j in 0..b.group.rank {
                let mut coordinates = vec![BigRational::zero(); b.group.rank];
                coordinates[j] = BigRational::from_integer(BigInt::from(1));
                out.push(TorClass {
                    q: b.q,
                    sigma: b.sigma,
                    coordinates,
                    representative: b.representative(j),
                });
            }
        }
        out
    }

    /// Labels of the basis classes, parallel to [`basis`](Self::basis).
    pub fn basis_labels(&self) -> Vec<String> {
        self.blocks.values().flat_map(TorBlock::labels).collect()
    }

    pub fn unit(&self) -> Option<TorClass> {
        self.basis().into_iter().find(|c| c.q == 0 && c.sigma.is_empty())
    }

    /// The class of a cycle in block `(q, σ)`.
    pub fn class_of(&self, q: usize, sigma: VertexSet, cycle: &Chain) -> Result<TorClass> {
        let Some(block) = self.block(q, sigma) else {
            return if cycle.is_zero() {
                Ok(self.zero_class(q, sigma))
            } else {
                Err(Error::NotACycle)
            };
        };
        if !cycle.lies_in(&block.generators) {
            return Err(Error::NotACycle);
        }
        let coordinates = block.group.reduce(&cycle.to_vector(&block.generators))?;
        Ok(TorClass { q, sigma, coordinates, representative: cycle.clone() })
    }

    fn check_ring_support(&self, q: usize, sigma: VertexSet) -> Result<()> {
        if self.coefficients == Coefficients::Integers {
            if let Some(b) = self.block(q, sigma) {
                if !b.group.torsion.is_empty() {
                    return Err(Error::TorsionUnsupported);
                }
            }
        }
        Ok(())
    }

    /// `[c] × [c'] = [c · c']` when the supports are disjoint, zero otherwise.
    pub fn product(&self, a: &TorClass, b: &TorClass) -> Result<TorClass> {
        let q = a.q + b.q;
        let sigma = a.sigma.union(b.sigma);
        for (q, s) in [(a.q, a.sigma), (b.q, b.sigma), (q, sigma)] {
            self.check_ring_support(q, s)?;
        }
        if !a.sigma.is_disjoint(b.sigma) {
            return Ok(self.zero_class(q, sigma));
        }
        let cycle = a.representative.product(&b.representative, &self.complement);
        self.class_of(q, sigma, &cycle)
    }

    /// All products of pairs of basis classes. Checks graded commutativity
    /// `a × b = (-1)^{q_a q_b} b × a` along the way.
    pub fn multiplication_table(&self) -> Result<MultiplicationTable> {
        let basis = self.basis();
        let n = basis.len();
        let mut entries: Vec<Vec<Option<TorClass>>> = vec![vec![None; n]; n];
        for i in 0..n {
            for j in 0..n {
                entries[i][j] = Some(self.product(&basis[i], &basis[j])?);
            }
        }
        let entries: Vec<Vec<TorClass>> = entries
            .into_iter()
            .map(|row| row.into_iter().map(|c| c.expect("filled")).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                let ab = &entries[i][j].coordinates;
                let ba = &entries[j][i].coordinates;
                let expected = if (basis[i].q * basis[j].q) % 2 == 1 {
                    negate(ba, self.coefficients)
                } else {
                    ba.clone()
                };
                if *ab != expected {
                    return Err(Error::Invariant(format!(
                        "graded commutativity fails for basis classes {i} and {j}"
                    )));
                }
            }
        }
        Ok(MultiplicationTable { labels: self.basis_labels(), basis, entries })
    }

    /// `(a × b) × c = a × (b × c)` on every triple of basis classes.
    pub fn check_associativity(&self) -> Result<()> {
        let basis = self.basis();
        for a in &basis {
            for b in &basis {
                let ab = self.product(a, b)?;
                for c in &basis {
                    let left = self.product(&ab, c)?;
                    let right = self.product(a, &self.product(b, c)?)?;
                    if left.coordinates != right.coordinates {
                        return Err(Error::Invariant("product is not associative".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Labels for the basis of block `(q, σ)`.
    pub fn block_labels(&self, q: usize, sigma: VertexSet) -> Vec<String> {
        self.block(q, sigma).map_or_else(Vec::new, TorBlock::labels)
    }

    pub fn format_class(&self, c: &TorClass) -> String {
        format_coordinates(&c.coordinates, &self.block_labels(c.q, c.sigma), self.coefficients)
    }
}

/// `Σ rank · x^{2|σ| - q}` over a field.
pub fn zk_poincare(complement: &Complement, coefficients: Coefficients) -> Result<GradedDims> {
    coefficients.require_field()?;
    tor_bigraded(complement, coefficients)?.zk_poincare()
}

/// Products of all ordered pairs of basis classes.
#[derive(Clone, Debug)]
pub struct MultiplicationTable {
    pub basis: Vec<TorClass>,
    pub labels: Vec<String>,
    /// `entries[i][j] = basis[i] × basis[j]`.
    pub entries: Vec<Vec<TorClass>>,
}

impl MultiplicationTable {
    /// Nonzero products `(i, j, product)` with neither factor the unit.
    pub fn nontrivial(&self) -> Vec<(usize, usize, &TorClass)> {
        let is_unit = |c: &TorClass| c.q == 0 && c.sigma.is_empty();
        let mut out = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !is_unit(&self.basis[i]) && !is_unit(&self.basis[j]) && !c.is_zero() {
                    out.push((i, j, c));
                }
            }
        }
        out
    }
}

impl fmt::Display for TorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}): {}", self.q, self.sigma, self.representative)
    }
}
