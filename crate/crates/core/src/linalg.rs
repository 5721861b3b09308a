//! Small dense integer matrices. Ranks never exceed 9 here, so nothing
//! clever is needed.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Panics if the rows are ragged or not square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMatrix { n, data: rows.concat() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        (0..self.n).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Determinant of the leading `k x k` block, by fraction-free elimination.
    pub fn leading_minor(&self, k: usize) -> i128 {
        if k == 0 {
            return 1;
        }
        let mut a: Vec<Vec<i128>> = (0..k).map(|i| (0..k).map(|j| self.get(i, j) as i128).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for p in 0..k {
            if a[p][p] == 0 {
                match (p + 1..k).find(|&r| a[r][p] != 0) {
                    Some(r) => {
                        a.swap(p, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in p + 1..k {
                for j in p + 1..k {
                    a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
                }
                a[i][p] = 0;
            }
            prev = a[p][p];
        }
        sign * a[k - 1][k - 1]
    }

    /// Exact inverse over the rationals; `None` when singular.
    pub fn rational_inverse(&self) -> Option<Vec<Vec<BigRational>>> {
        let n = self.n;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> =
                    (0..n).map(|j| BigRational::from_integer(BigInt::from(self.get(i, j)))).collect();
                row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            let inv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in 0..2 * n {
                        let d = &f * &a[col][c];
                        a[r][c] -= d;
                    }
                }
            }
        }
        Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.n).map(|i| self.row(i))).finish()
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(k: i64, a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| k * x).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minors_of_a3() {
        let m = IntMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!((1..=3).map(|k| m.leading_minor(k)).collect::<Vec<_>>(), vec![2, 3, 4]);
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let m = IntMatrix::from_rows(&[vec![2, -1], vec![-3, 2]]);
        let inv = m.rational_inverse().unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let s: BigRational = (0..2).map(|k| BigRational::from_integer(m.get(i, k).into()) * &inv[k][j]).sum();
                let want = if i == j { BigRational::one() } else { BigRational::zero() };
                assert_eq!(s, want);
            }
        }
        assert!(IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]).rational_inverse().is_none());
    }

    #[test]
    fn swap_pivot_determinant() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.leading_minor(2), -1);
    }
}
