//! Exact Gaussian elimination over Q and prime fields.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::matrix::IntMatrix;

pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn embed(&self, x: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn to_rational(&self, a: &Self::Elem) -> BigRational;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Integer vector proportional to (or congruent to) `v`, used to store
    /// representatives with integer coefficients.
    fn integral(&self, v: &[Self::Elem]) -> Vec<BigInt>;
}

#[derive(Clone, Copy, Debug)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn embed(&self, x: &BigInt) -> BigRational {
        BigRational::from_integer(x.clone())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn to_rational(&self, a: &BigRational) -> BigRational {
        a.clone()
    }

    /// Clears denominators and divides out the content, keeping the sign.
    fn integral(&self, v: &[BigRational]) -> Vec<BigInt> {
        let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if gcd.is_zero() || gcd.is_one() {
            ints
        } else {
            ints.into_iter().map(|x| x / &gcd).collect()
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `p` must be prime and below 2^32 so products fit in u64.
    pub fn new(p: u64) -> Self {
        assert!((2..1 << 32).contains(&p));
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn embed(&self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits")
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // Fermat: a^(p-2).
        let (mut base, mut exp, mut acc) = (*a, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
    fn to_rational(&self, a: &u64) -> BigRational {
        BigRational::from_integer(BigInt::from(*a))
    }

    /// Symmetric lift into `(-p/2, p/2]`.
    fn integral(&self, v: &[u64]) -> Vec<BigInt> {
        v.iter()
            .map(|&x| {
                if x > self.p / 2 {
                    BigInt::from(x) - BigInt::from(self.p)
                } else {
                    BigInt::from(x)
                }
            })
            .collect()
    }
}

pub fn to_field_rows<F: Field>(f: &F, m: &IntMatrix) -> Vec<Vec<F::Elem>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| f.embed(x)).collect())
        .collect()
}

pub fn to_field_vec<F: Field>(f: &F, v: &[BigInt]) -> Vec<F::Elem> {
    v.iter().map(|x| f.embed(x)).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(f: &F, a: &mut [Vec<F::Elem>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&i| !f.is_zero(&a[i][col])) else {
            continue;
        };
        a.swap(row, p);
        let inv = f.inv(&a[row][col]);
        for x in a[row].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = a[row].clone();
        for (i, r) in a.iter_mut().enumerate() {
            if i == row || f.is_zero(&r[col]) {
                continue;
            }
            let factor = r[col].clone();
            for (x, p) in r.iter_mut().zip(&pivot_row) {
                if !f.is_zero(p) {
                    *x = f.sub(x, &f.mul(&factor, p));
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, m: &IntMatrix) -> usize {
    let mut a = to_field_rows(f, m);
    rref(f, &mut a, m.cols()).len()
}

/// Basis of the null space, one vector per free column (in column order),
/// with a 1 in that free column.
pub fn nullspace<F: Field>(f: &F, m: &IntMatrix) -> Vec<Vec<F::Elem>> {
    let cols = m.cols();
    let mut a = to_field_rows(f, m);
    let pivots = rref(f, &mut a, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![f.zero(); cols];
            v[free] = f.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(&a[r][free]);
            }
            v
        })
        .collect()
}

/// Incremental echelon basis that remembers how each basis vector was built
/// from the inserted generators, so membership tests also yield coordinates.
/// (pivot column, echelon vector with pivot 1, combination of generators)
type EchelonRow<E> = (usize, Vec<E>, Vec<E>);

#[derive(Clone, Debug)]
pub struct SpanSolver<F: Field> {
    field: F,
    dim: usize,
    generators: usize,
    basis: Vec<EchelonRow<F::Elem>>,
}

impl<F: Field> SpanSolver<F> {
    pub fn new(field: F, dim: usize) -> Self {
        SpanSolver { field, dim, generators: 0, basis: Vec::new() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    /// Reduces `v` against the basis: returns the residue and the combination
    /// `c` (over generators) with `v = residue + Σ c_i g_i`.
    fn reduce(&self, v: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
        let f = &self.field;
        let mut residue = v.to_vec();
        let mut combo = vec![f.zero(); self.generators];
        for (pivot, vec, c) in &self.basis {
            let factor = residue[*pivot].clone();
            if f.is_zero(&factor) {
                continue;
            }
            for (x, y) in residue.iter_mut().zip(vec) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&factor, y));
                }
            }
            for (x, y) in combo.iter_mut().zip(c) {
                if !f.is_zero(y) {
                    *x = f.add(x, &f.mul(&factor, y));
                }
            }
        }
        (residue, combo)
    }

    /// Adds a generator. Returns whether it enlarged the span.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.dim);
        let f = self.field.clone();
        let (residue, combo) = self.reduce(v);
        self.generators += 1;
        for (_, _, c) in self.basis.iter_mut() {
            c.push(f.zero());
        }
        let Some(pivot) = residue.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        // residue = v - Σ combo_i g_i, scaled so the pivot is 1.
        let inv = f.inv(&residue[pivot]);
        let vec: Vec<_> = residue.iter().map(|x| f.mul(x, &inv)).collect();
        let mut c: Vec<_> = combo.iter().map(|x| f.mul(&f.neg(x), &inv)).collect();
        c.push(inv);
        self.basis.push((pivot, vec, c));
        true
    }

    /// Coordinates `c` with `v = Σ c_i g_i`, if `v` lies in the span.
    pub fn express(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(v.len(), self.dim);
        let (residue, combo) = self.reduce(v);
        residue.iter().all(|x| self.field.is_zero(x)).then_some(combo)
    }
}
