//! Dense exact linear algebra over [`Rational`].

use num_traits::Zero;

use crate::rational::Rational;

/// Square matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.data[row * self.dim + col]
    }

    pub fn get_mut(&mut self, row: usize, col: usize) -> &mut Rational {
        &mut self.data[row * self.dim + col]
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.data[row * self.dim..(row + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.data.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        let mut out = vec![Rational::zero(); self.dim];
        for (k, vk) in v.iter().enumerate() {
            if vk.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let m = self.get(j, k);
                if !m.is_zero() {
                    *slot += m * vk;
                }
            }
        }
        out
    }
}

/// Solves `a x = b` by Gauss-Jordan elimination. `None` if `a` is singular.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    assert!(
        a.len() == n && a.iter().all(|r| r.len() == n),
        "dimension mismatch"
    );
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        b[col] *= &inv;
        let pivot_row = a[col].clone();
        let pivot_rhs = b[col].clone();
        for (r, (row, rhs)) in a.iter_mut().zip(b.iter_mut()).enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &factor * p;
            }
            *rhs -= &factor * &pivot_rhs;
        }
    }
    Some(b)
}
