//! Smith normal form over the integers by pivoted elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal, `d_1 | d_2 | ...`.
///
/// The inverses of `U` and `V` are carried along; homology computations need
/// them to move between the original and the diagonal bases.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
}

impl SmithForm {
    /// The nonzero diagonal entries, all positive.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Checks `U·M·V = D`, the divisibility chain and unimodularity of `U`, `V`.
    pub fn check(&self, m: &IntMatrix) -> Result<(), String> {
        if &(&self.u * m) * &self.v != self.d {
            return Err("U*M*V != D".into());
        }
        for i in 0..self.d.rows() {
            for j in 0..self.d.cols() {
                if i != j && !self.d[(i, j)].is_zero() {
                    return Err(format!("off-diagonal entry at ({i},{j})"));
                }
            }
        }
        let diag = self.invariant_factors();
        if diag.iter().any(|x| !x.is_positive()) {
            return Err("nonpositive invariant factor".into());
        }
        for w in diag.windows(2) {
            if !w[1].is_multiple_of(&w[0]) {
                return Err(format!("{} does not divide {}", w[0], w[1]));
            }
        }
        let n = self.d.rows().min(self.d.cols());
        if (self.rank..n).any(|i| !self.d[(i, i)].is_zero()) {
            return Err("zero diagonal entry before a nonzero one".into());
        }
        // Integral mutual inverses have determinant ±1.
        if &self.u * &self.u_inv != IntMatrix::identity(self.u.rows())
            || &self.v * &self.v_inv != IntMatrix::identity(self.v.rows())
        {
            return Err("transforms are not unimodular".into());
        }
        Ok(())
    }
}

struct Reducer {
    d: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[a] += f * row[b]
    fn add_row(&mut self, a: usize, b: usize, f: &BigInt) {
        self.d.add_row_multiple(a, b, f);
        self.u.add_row_multiple(a, b, f);
        self.u_inv.add_col_multiple(b, a, &-f);
    }

    /// col[a] += f * col[b]
    fn add_col(&mut self, a: usize, b: usize, f: &BigInt) {
        self.d.add_col_multiple(a, b, f);
        self.v.add_col_multiple(a, b, f);
        self.v_inv.add_row_multiple(b, a, &-f);
    }

    fn negate_row(&mut self, a: usize) {
        self.d.negate_row(a);
        self.u.negate_row(a);
        self.u_inv.negate_col(a);
    }

    /// Nonzero entry of least absolute value in the trailing block, ties by (row, col).
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.d.rows() {
            for j in t..self.d.cols() {
                let x = &self.d[(i, j)];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.d[(bi, bj)].magnitude() <= x.magnitude() => {}
                    _ => best = Some((i, j)),
                }
                if x.magnitude().is_one() {
                    return best;
                }
            }
        }
        best
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = Reducer {
        d: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let mut rank = 0;
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = r.pivot(t) else { break };
        r.swap_rows(t, pi);
        r.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if r.d[(i, t)].is_zero() {
                    continue;
                }
                let q = &r.d[(i, t)] / &r.d[(t, t)];
                r.add_row(i, t, &-q);
                if !r.d[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if r.d[(t, j)].is_zero() {
                    continue;
                }
                let q = &r.d[(t, j)] / &r.d[(t, t)];
                r.add_col(j, t, &-q);
                if !r.d[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // A remainder smaller than the pivot survived; restart with it.
                let (pi, pj) = r.pivot(t).expect("nonzero remainder");
                r.swap_rows(t, pi);
                r.swap_cols(t, pj);
                continue;
            }
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !r.d[(i, j)].is_multiple_of(&r.d[(t, t)])));
            match offender {
                Some(i) => r.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if r.d[(t, t)].is_negative() {
            r.negate_row(t);
        }
        rank += 1;
    }
    let form = SmithForm { u: r.u, d: r.d, v: r.v, u_inv: r.u_inv, v_inv: r.v_inv, rank };
    #[cfg(debug_assertions)]
    if let Err(e) = form.check(m) {
        panic!("Smith normal form contract violated: {e}");
    }
    form
}
