//! Small dense matrices over an exact field, and a fraction-free
//! (Bareiss-style) linear solver. The Bareiss update keeps intermediate
//! entries as small as the domain allows; every division it performs is
//! exact.

use crate::error::{Error, Result};
use crate::ring::{Field, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Ring> {
    rows: Vec<Vec<F>>,
}

impl<F: Ring> Matrix<F> {
    pub fn new(rows: Vec<Vec<F>>) -> Self {
        let w = rows.first().map(|r| r.len()).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == w), "ragged matrix");
        Matrix { rows }
    }

    pub fn from_fn(n: usize, m: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        Matrix {
            rows: (0..n).map(|i| (0..m).map(|j| f(i, j)).collect()).collect(),
        }
    }

    pub fn zero(n: usize, m: usize, proto: &F) -> Self {
        Matrix::from_fn(n, m, |_, _| proto.zero_like())
    }

    pub fn identity(n: usize, proto: &F) -> Self {
        Matrix::from_fn(n, n, |i, j| {
            if i == j {
                proto.one_like()
            } else {
                proto.zero_like()
            }
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map(|r| r.len()).unwrap_or(0)
    }

    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.rows[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.rows[i]
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|v| v.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.nrows(), self.ncols()), (other.nrows(), other.ncols()));
        Matrix::from_fn(self.nrows(), self.ncols(), |i, j| {
            self.rows[i][j].clone() + other.rows[i][j].clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.nrows(), self.ncols()), (other.nrows(), other.ncols()));
        Matrix::from_fn(self.nrows(), self.ncols(), |i, j| {
            self.rows[i][j].clone() - other.rows[i][j].clone()
        })
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix::from_fn(self.nrows(), self.ncols(), |i, j| {
            self.rows[i][j].clone() * c.clone()
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols(), other.nrows(), "dimension mismatch");
        Matrix::from_fn(self.nrows(), other.ncols(), |i, j| {
            let mut acc = self.rows[i][0].zero_like();
            for k in 0..self.ncols() {
                acc = acc + self.rows[i][k].clone() * other.rows[k][j].clone();
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.ncols(), v.len());
        self.rows
            .iter()
            .map(|row| {
                let mut acc = v[0].zero_like();
                for (a, b) in row.iter().zip(v) {
                    acc = acc + a.clone() * b.clone();
                }
                acc
            })
            .collect()
    }
}

/// Solve the square system `a x = b` by fraction-free Gaussian elimination
/// with row pivoting. Errors on a singular matrix.
pub fn bareiss_solve<F: Field>(a: &Matrix<F>, b: &[F]) -> Result<Vec<F>> {
    let sols = bareiss_solve_multi(a, std::slice::from_ref(&b.to_vec()))?;
    Ok(sols.into_iter().next().unwrap())
}

/// Solve `a x = b` for several right-hand sides with a single elimination.
pub fn bareiss_solve_multi<F: Field>(a: &Matrix<F>, bs: &[Vec<F>]) -> Result<Vec<Vec<F>>> {
    let n = a.nrows();
    assert_eq!(a.ncols(), n, "square system required");
    assert!(!bs.is_empty());
    assert!(bs.iter().all(|b| b.len() == n));
    if n == 0 {
        return Ok(vec![Vec::new(); bs.len()]);
    }
    let width = n + bs.len();
    let mut m: Vec<Vec<F>> = (0..n)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            for b in bs {
                row.push(b[i].clone());
            }
            row
        })
        .collect();
    let mut prev = bs[0][0].one_like();
    for k in 0..n {
        let pivot = (k..n)
            .find(|&i| !m[i][k].is_zero())
            .ok_or_else(|| Error::Singular("matrix is singular".into()))?;
        m.swap(k, pivot);
        for i in (k + 1)..n {
            for j in (k + 1)..width {
                let num = m[k][k].clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num.try_div(&prev)?;
            }
            m[i][k] = m[i][k].zero_like();
        }
        prev = m[k][k].clone();
    }
    let mut solutions = Vec::with_capacity(bs.len());
    for (c, _) in bs.iter().enumerate() {
        let mut x = vec![bs[0][0].zero_like(); n];
        for i in (0..n).rev() {
            let mut acc = m[i][n + c].clone();
            for j in (i + 1)..n {
                acc = acc - m[i][j].clone() * x[j].clone();
            }
            x[i] = acc.try_div(&m[i][i])?;
        }
        solutions.push(x);
    }
    Ok(solutions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn solves_a_small_system() {
        // 2x + y = 5, x - y = 1  =>  x = 2, y = 1
        let a = Matrix::new(vec![vec![q(2), q(1)], vec![q(1), q(-1)]]);
        let x = bareiss_solve(&a, &[q(5), q(1)]).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
    }

    #[test]
    fn needs_pivoting() {
        let a = Matrix::new(vec![vec![q(0), q(1)], vec![q(1), q(0)]]);
        let x = bareiss_solve(&a, &[q(3), q(4)]).unwrap();
        assert_eq!(x, vec![q(4), q(3)]);
    }

    #[test]
    fn rejects_singular_systems() {
        let a = Matrix::new(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert!(matches!(
            bareiss_solve(&a, &[q(1), q(2)]),
            Err(Error::Singular(_))
        ));
    }
}
