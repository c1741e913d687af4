//! Homology of a finite chain complex at one position, with explicit
//! representatives and reduction of cycles to class coordinates.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{nullspace, to_field_vec, Field, PrimeField, Rationals, SpanSolver};
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// Coefficient ring for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coefficients {
    Rationals,
    PrimeField(u64),
    Integers,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Coefficients {
    pub fn prime(p: u64) -> Result<Self> {
        let c = Coefficients::PrimeField(p);
        c.validate()?;
        Ok(c)
    }

    pub fn validate(self) -> Result<()> {
        match self {
            Coefficients::PrimeField(p) if !is_prime(p) || p >= 1 << 32 => Err(Error::NotPrime(p)),
            _ => Ok(()),
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Coefficients::Integers)
    }

    /// Errors unless the coefficients form a field.
    pub fn require_field(self) -> Result<()> {
        if self.is_field() {
            Ok(())
        } else {
            Err(Error::NotAField(self.to_string()))
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Rationals => f.write_str("q"),
            Coefficients::PrimeField(p) => write!(f, "f:{p}"),
            Coefficients::Integers => f.write_str("z"),
        }
    }
}

impl FromStr for Coefficients {
    type Err = String;

    /// Accepts `q`, `z` or `f:<p>`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "q" | "Q" => Ok(Coefficients::Rationals),
            "z" | "Z" => Ok(Coefficients::Integers),
            _ => {
                let p = s
                    .strip_prefix("f:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| format!("unknown coefficients {s:?}; expected q, z or f:<prime>"))?;
                Coefficients::prime(p).map_err(|e| e.to_string())
            }
        }
    }
}

/// `ker(d_out) / im(d_in)`.
///
/// `rank` counts the free part; `torsion` holds the invariant factors greater
/// than one (always empty over a field). `representatives` are integer cycles
/// whose classes form a basis of the free part.
#[derive(Clone)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
    pub representatives: Vec<Vec<BigInt>>,
    coefficients: Coefficients,
    reducer: Arc<Reducer>,
}

enum Reducer {
    Rational(FieldReducer<Rationals>),
    Prime(FieldReducer<PrimeField>),
    Integer(IntegerReducer),
}

struct FieldReducer<F: Field> {
    boundary_out: Vec<Vec<F::Elem>>,
    /// Generators: image columns first, then the representatives.
    span: SpanSolver<F>,
    image_generators: usize,
}

struct IntegerReducer {
    /// `V^{-1}` from the Smith form of `d_out`; rows past `kernel_offset`
    /// give coordinates in the kernel basis.
    v_inv: IntMatrix,
    kernel_offset: usize,
    /// `U` from the Smith form of the image in kernel coordinates.
    u: IntMatrix,
    image_rank: usize,
    has_torsion: bool,
}

impl HomologyGroup {
    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Equal as abstract groups: same rank and invariant factors.
    pub fn isomorphic(&self, other: &HomologyGroup) -> bool {
        self.rank == other.rank && self.torsion == other.torsion
    }

    /// The zero group on an `n`-dimensional chain module.
    pub fn zero(n: usize, coefficients: Coefficients) -> Result<Self> {
        homology_at(&IntMatrix::zeros(n, 0), &IntMatrix::identity(n), coefficients)
    }

    /// Coordinates `c` with `z - Σ c_i rep_i ∈ im(d_in)`.
    ///
    /// Over a prime field the coordinates are residues in `[0, p)`. Over the
    /// integers this is only supported when the group is torsion-free.
    pub fn reduce(&self, z: &[BigInt]) -> Result<Vec<BigRational>> {
        match &*self.reducer {
            Reducer::Rational(r) => r.reduce(z),
            Reducer::Prime(r) => r.reduce(z),
            Reducer::Integer(r) => r.reduce(z),
        }
    }
}

impl fmt::Debug for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HomologyGroup")
            .field("rank", &self.rank)
            .field("torsion", &self.torsion)
            .field("representatives", &self.representatives)
            .finish()
    }
}

impl fmt::Display for HomologyGroup {
    /// `0`, `Z^2`, `Q`, `Z/2 + Z/4`, `Z + Z/2`, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.coefficients {
            Coefficients::Rationals => "Q".to_string(),
            Coefficients::PrimeField(p) => format!("F{p}"),
            Coefficients::Integers => "Z".to_string(),
        };
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push(base.clone()),
            r => parts.push(format!("{base}^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl<F: Field> FieldReducer<F> {
    fn reduce(&self, z: &[BigInt]) -> Result<Vec<BigRational>> {
        let f = self.span.field();
        if z.len() != self.span.dim() {
            return Err(Error::Shape("cycle length does not match the chain module".into()));
        }
        let zf = to_field_vec(f, z);
        for row in &self.boundary_out {
            let mut acc = f.zero();
            for (a, b) in row.iter().zip(&zf) {
                acc = f.add(&acc, &f.mul(a, b));
            }
            if !f.is_zero(&acc) {
                return Err(Error::NotACycle);
            }
        }
        let combo = self.span.express(&zf).ok_or(Error::NotACycle)?;
        Ok(combo[self.image_generators..].iter().map(|c| f.to_rational(c)).collect())
    }
}

impl IntegerReducer {
    fn reduce(&self, z: &[BigInt]) -> Result<Vec<BigRational>> {
        if self.has_torsion {
            return Err(Error::TorsionUnsupported);
        }
        let w = self.v_inv.mul_vec(z)?;
        if w[..self.kernel_offset].iter().any(|x| !x.is_zero()) {
            return Err(Error::NotACycle);
        }
        let y = self.u.mul_vec(&w[self.kernel_offset..])?;
        Ok(y[self.image_rank..].iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }
}

/// Homology at the middle of `C_{q+1} --d_in--> C_q --d_out--> C_{q-1}`.
///
/// `d_out` is `n_{q-1} × n_q` and `d_in` is `n_q × n_{q+1}`.
pub fn homology_at(
    d_in: &IntMatrix,
    d_out: &IntMatrix,
    coefficients: Coefficients,
) -> Result<HomologyGroup> {
    coefficients.validate()?;
    if d_out.cols() != d_in.rows() {
        return Err(Error::Shape(format!(
            "d_out has {} columns but d_in has {} rows",
            d_out.cols(),
            d_in.rows()
        )));
    }
    if !(d_out * d_in).is_zero() {
        return Err(Error::NotAChainComplex);
    }
    match coefficients {
        Coefficients::Rationals => {
            let (rank, reps, r) = field_homology(Rationals, d_in, d_out);
            Ok(HomologyGroup {
                rank,
                torsion: Vec::new(),
                representatives: reps,
                coefficients,
                reducer: Arc::new(Reducer::Rational(r)),
            })
        }
        Coefficients::PrimeField(p) => {
            let (rank, reps, r) = field_homology(PrimeField::new(p), d_in, d_out);
            Ok(HomologyGroup {
                rank,
                torsion: Vec::new(),
                representatives: reps,
                coefficients,
                reducer: Arc::new(Reducer::Prime(r)),
            })
        }
        Coefficients::Integers => integer_homology(d_in, d_out),
    }
}

fn field_homology<F: Field>(
    f: F,
    d_in: &IntMatrix,
    d_out: &IntMatrix,
) -> (usize, Vec<Vec<BigInt>>, FieldReducer<F>) {
    let n = d_out.cols();
    let kernel = nullspace(&f, d_out);
    let mut span = SpanSolver::new(f.clone(), n);
    for j in 0..d_in.cols() {
        span.insert(&to_field_vec(&f, &d_in.column(j)));
    }
    let image_generators = d_in.cols();
    let mut reps = Vec::new();
    for v in &kernel {
        let int = f.integral(v);
        let fv = to_field_vec(&f, &int);
        if span.express(&fv).is_none() {
            span.insert(&fv);
            reps.push(int);
        }
    }
    let boundary_out = super::field::to_field_rows(&f, d_out);
    (reps.len(), reps, FieldReducer { boundary_out, span, image_generators })
}

fn integer_homology(d_in: &IntMatrix, d_out: &IntMatrix) -> Result<HomologyGroup> {
    let n = d_out.cols();
    let out = smith_normal_form(d_out);
    let r = out.rank;
    let k = n - r;
    // Columns r.. of V form a basis of the kernel lattice.
    let kernel = out.v.columns_slice(r, n);
    let image = (&out.v_inv * d_in).rows_slice(r, n);
    let inn = smith_normal_form(&image);
    let r2 = inn.rank;
    let torsion: Vec<BigInt> = inn.invariant_factors().into_iter().filter(|d| !d.is_one()).collect();
    let free_basis = &kernel * &inn.u_inv;
    let representatives = (r2..k).map(|j| free_basis.column(j)).collect();
    let has_torsion = !torsion.is_empty();
    Ok(HomologyGroup {
        rank: k - r2,
        torsion,
        representatives,
        coefficients: Coefficients::Integers,
        reducer: Arc::new(Reducer::Integer(IntegerReducer {
            v_inv: out.v_inv,
            kernel_offset: r,
            u: inn.u,
            image_rank: r2,
            has_torsion,
        })),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
    }

    #[test]
    fn zero_maps_give_free_module() {
        for c in [Coefficients::Rationals, Coefficients::PrimeField(3), Coefficients::Integers] {
            let h = homology_at(&IntMatrix::zeros(3, 2), &IntMatrix::zeros(1, 3), c).unwrap();
            assert_eq!(h.rank, 3);
            assert!(h.torsion.is_empty());
            assert_eq!(h.representatives.len(), 3);
            let reps: Vec<_> = h.representatives.clone();
            for (i, rep) in reps.iter().enumerate() {
                let mut e = vec![0; 3];
                e[i] = 1;
                assert_eq!(*rep, ints(&e), "{c}");
            }
        }
    }

    #[test]
    fn multiplication_by_two() {
        // 0 -> Z --2--> Z -> 0, homology at the target.
        let d_in = IntMatrix::from_rows(&[vec![2]]);
        let d_out = IntMatrix::zeros(0, 1);
        let h = homology_at(&d_in, &d_out, Coefficients::Integers).unwrap();
        assert_eq!(h.rank, 0);
        assert_eq!(h.torsion, ints(&[2]));
        assert_eq!(h.to_string(), "Z/2");
        assert!(homology_at(&d_in, &d_out, Coefficients::Rationals).unwrap().is_zero());
        let h2 = homology_at(&d_in, &d_out, Coefficients::PrimeField(2)).unwrap();
        assert_eq!(h2.rank, 1);
        assert_eq!(h.reduce(&ints(&[1])), Err(Error::TorsionUnsupported));
    }

    #[test]
    fn rejects_non_complex() {
        let a = IntMatrix::from_rows(&[vec![1]]);
        assert!(matches!(
            homology_at(&a, &a, Coefficients::Rationals),
            Err(Error::NotAChainComplex)
        ));
        assert!(matches!(
            homology_at(&IntMatrix::zeros(2, 1), &a, Coefficients::Rationals),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            homology_at(&a, &IntMatrix::zeros(0, 1), Coefficients::PrimeField(4)),
            Err(Error::NotPrime(4))
        ));
    }

    #[test]
    fn reduction_of_cycles() {
        // Z -> Z^3 -> Z^2 with kernel spanned by (1,-1,0) and (0,0,1).
        let d_out = IntMatrix::from_rows(&[vec![1, 1, 0], vec![0, 0, 0]]);
        let d_in = IntMatrix::from_rows(&[vec![1], vec![-1], vec![0]]);
        for c in [Coefficients::Rationals, Coefficients::PrimeField(5), Coefficients::Integers] {
            let h = homology_at(&d_in, &d_out, c).unwrap();
            assert_eq!(h.rank, 1, "{c}");
            let rep = h.representatives[0].clone();
            assert_eq!(h.reduce(&rep).unwrap(), rats(&[1]));
            assert_eq!(h.reduce(&ints(&[1, -1, 0])).unwrap(), rats(&[0]));
            assert_eq!(h.reduce(&ints(&[1, 0, 0])), Err(Error::NotACycle));
        }
    }

    #[test]
    fn parse_coefficients() {
        assert_eq!("q".parse::<Coefficients>().unwrap(), Coefficients::Rationals);
        assert_eq!("z".parse::<Coefficients>().unwrap(), Coefficients::Integers);
        assert_eq!("f:7".parse::<Coefficients>().unwrap(), Coefficients::PrimeField(7));
        assert!("f:8".parse::<Coefficients>().is_err());
        assert!("r".parse::<Coefficients>().is_err());
        assert_eq!(Coefficients::PrimeField(2).to_string(), "f:2");
    }
}
