use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bareiss;

/// Dense matrix of arbitrary-precision integers, stored row-major.
///
/// Intermediate values in normal-form computations can grow far beyond any
/// fixed-width integer type, so every entry is a [`BigInt`]; no overflow is
/// possible at any step.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// Zero matrix of the given shape. `rows` may be 0 (empty relation list).
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    /// Builds a matrix from its rows. All rows must have equal length;
    /// an empty slice yields the 0×0 matrix.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            assert_eq!(row.len(), n_cols, "ragged rows");
            entries.extend(row);
        }
        IntMatrix {
            rows: n_rows,
            cols: n_cols,
            entries,
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Appends a relation row; its length must match the column count.
    pub fn push_row(&mut self, row: Vec<BigInt>) {
        assert_eq!(row.len(), self.cols, "row length != column count");
        self.entries.extend(row);
        self.rows += 1;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[i] -= q * row[k]`
    pub fn row_sub_mul(&mut self, i: usize, k: usize, q: &BigInt) {
        debug_assert_ne!(i, k);
        for j in 0..self.cols {
            let delta = q * self.at(k, j);
            let target = &mut self.entries[i * self.cols + j];
            *target -= delta;
        }
    }

    /// `col[j] -= q * col[k]`
    pub fn col_sub_mul(&mut self, j: usize, k: usize, q: &BigInt) {
        debug_assert_ne!(j, k);
        for i in 0..self.rows {
            let delta = q * self.at(i, k);
            let target = &mut self.entries[i * self.cols + j];
            *target -= delta;
        }
    }

    /// `row[i] += row[k]`
    pub fn row_add(&mut self, i: usize, k: usize) {
        debug_assert_ne!(i, k);
        for j in 0..self.cols {
            let delta = self.at(k, j).clone();
            let target = &mut self.entries[i * self.cols + j];
            *target += delta;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let target = &mut self.entries[i * self.cols + j];
            *target = -std::mem::take(target);
        }
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let delta = a * rhs.at(k, j);
                    let target = &mut out.entries[i * rhs.cols + j];
                    *target += delta;
                }
            }
        }
        out
    }

    /// Exact determinant by fraction-free elimination. Panics unless square.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        bareiss::determinant(&self.row_vecs())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "(")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_determinant() {
        let a = IntMatrix::from_i64_rows(&[vec![1, 2], vec![3, 4]]);
        let b = IntMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        let ab = a.mul(&b);
        assert_eq!(ab, IntMatrix::from_i64_rows(&[vec![2, 1], vec![4, 3]]));
        assert_eq!(a.determinant(), BigInt::from(-2));
        assert_eq!(IntMatrix::identity(4).determinant(), BigInt::from(1));
    }

    #[test]
    fn row_operations() {
        let mut m = IntMatrix::from_i64_rows(&[vec![8, 4], vec![0, 12]]);
        m.row_sub_mul(0, 1, &BigInt::from(-1));
        assert_eq!(m, IntMatrix::from_i64_rows(&[vec![8, 16], vec![0, 12]]));
        m.negate_row(1);
        assert_eq!(m.at(1, 1), &BigInt::from(-12));
        m.row_add(0, 1);
        assert_eq!(m, IntMatrix::from_i64_rows(&[vec![8, 4], vec![0, -12]]));
    }

    #[test]
    fn empty_matrices() {
        let e = IntMatrix::zeros(0, 3);
        assert_eq!(e.rows(), 0);
        assert_eq!(e.cols(), 3);
        assert!(e.is_zero());
        let mut e = e;
        e.push_row(vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)]);
        assert_eq!(e.rows(), 1);
    }
}
