//! Dense integer matrices with the exact operations the normal forms need.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntVector;

/// A dense matrix over `Z` with arbitrary-precision entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds from row slices; all rows must have equal length.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> IntMatrix {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        IntMatrix {
            rows,
            cols,
            data: entries.iter().map(|&e| BigInt::from(e)).collect(),
        }
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    ///
    /// `rows` is explicit so an empty column list still has a shape.
    pub fn from_columns(rows: usize, columns: &[IntVector]) -> IntMatrix {
        let mut m = IntMatrix::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for i in 0..rows {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn column(&self, j: usize) -> IntVector {
        IntVector::from_bigints((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    /// The first `count` columns as a new matrix.
    pub fn leading_columns(&self, count: usize) -> IntMatrix {
        assert!(count <= self.cols);
        let mut m = IntMatrix::zero(self.rows, count);
        for i in 0..self.rows {
            for j in 0..count {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = &a * &rhs[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn mul_vector(&self, v: &IntVector) -> IntVector {
        assert_eq!(self.cols, v.len(), "inner dimensions differ");
        let mut out = IntVector::zeros(self.rows);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let t = &self[(i, k)] * &v[k];
                out[i] += t;
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination; exact over `Z`.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut negated = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !m[(r, k)].is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        negated = !negated;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = t / &prev;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        if negated {
            -d
        } else {
            d
        }
    }

    /// `|det| = 1`.
    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().abs().is_one()
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let t = -&self[(i, j)];
            self[(i, j)] = t;
        }
    }

    pub(crate) fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let t = -&self[(i, j)];
            self[(i, j)] = t;
        }
    }

    /// `row[target] += q * row[source]`
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, q: &BigInt) {
        assert_ne!(target, source);
        for j in 0..self.cols {
            let t = q * &self[(source, j)];
            self[(target, j)] += t;
        }
    }

    /// `col[target] += q * col[source]`
    pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, q: &BigInt) {
        assert_ne!(target, source);
        for i in 0..self.rows {
            let t = q * &self[(i, source)];
            self[(i, target)] += t;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}
