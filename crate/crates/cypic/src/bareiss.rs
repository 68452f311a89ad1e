//! Fraction-free determinants (Bareiss elimination).
//!
//! Works over any commutative ring with exact division; the elimination never
//! leaves the ring, so integer matrices stay integer and polynomial matrices
//! stay polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Minimal interface needed by the elimination: a commutative ring in which
/// the exact divisions performed by the Bareiss recurrence succeed.
pub(crate) trait ExactRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact division; callers guarantee divisibility.
    fn div_exact(&self, other: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        debug_assert!(
            Zero::is_zero(&r),
            "non-exact division in Bareiss elimination"
        );
        q
    }
}

/// Determinant of a square matrix given as rows, by fraction-free elimination.
///
/// The k-th intermediate entries are exact (k+1)-minors of the input, so for
/// integer matrices no entry ever exceeds the Hadamard bound of the input.
pub(crate) fn determinant<R: ExactRing>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    if n == 0 {
        return R::one();
    }
    for row in rows {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    let mut m: Vec<Vec<R>> = rows.to_vec();
    let mut negate = false;

    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        let prev = if k == 0 {
            R::one()
        } else {
            m[k - 1][k - 1].clone()
        };
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev);
            }
            m[i][k] = R::zero();
        }
    }

    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant::<BigInt>(&[]), BigInt::from(1));
        assert_eq!(determinant(&big(&[&[7]])), BigInt::from(7));
        assert_eq!(determinant(&big(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        assert_eq!(
            determinant(&big(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]])),
            BigInt::from(30)
        );
    }

    #[test]
    fn zero_pivot_needs_swap() {
        assert_eq!(determinant(&big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            determinant(&big(&[&[0, 12], &[8, 4]])),
            BigInt::from(-96)
        );
    }

    #[test]
    fn singular_matrix() {
        assert_eq!(determinant(&big(&[&[1, 2], &[2, 4]])), BigInt::from(0));
    }
}
