//! Hermite and Smith normal forms with unimodular certificates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Unimodular diagonalization `U * A * V = D` of an integer matrix.
///
/// `d` is diagonal with non-negative entries, each dividing the next, and the
/// transforms satisfy `|det u| = |det v| = 1`. The nontrivial diagonal
/// entries are the invariant factors of the cokernel of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries of `d`, in order (including trailing zeros).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.at(i, i).clone())
            .collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Position of the nonzero entry of least absolute value in the trailing
/// block `a[t.., t..]`, ties broken by (row, col) order.
fn smallest_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = a.at(i, j);
            if x.is_zero() {
                continue;
            }
            let abs = x.abs();
            match &best {
                Some((_, _, min)) if *min <= abs => {}
                _ => best = Some((i, j, abs)),
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Smith normal form with transformation certificates.
///
/// Pivoting rule: repeatedly select the nonzero entry of least absolute value
/// in the trailing block (ties by row, then column), move it to the pivot
/// position, and reduce its row and column; when the pivot fails to divide
/// some entry of the trailing block, fold that row into the pivot row and
/// keep reducing. Deterministic and terminating: the pivot's absolute value
/// strictly decreases on every restart.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let rows = a.rows();
    let cols = a.cols();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = smallest_nonzero(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        'reduce: loop {
            // Clear the pivot column.
            for i in t + 1..rows {
                if d.at(i, t).is_zero() {
                    continue;
                }
                let q = d.at(i, t).div_floor(d.at(t, t));
                if !q.is_zero() {
                    d.row_sub_mul(i, t, &q);
                    u.row_sub_mul(i, t, &q);
                }
                if !d.at(i, t).is_zero() {
                    // Remainder is strictly smaller than the pivot.
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    continue 'reduce;
                }
            }
            // Clear the pivot row. Column operations leave the already
            // cleared pivot column untouched.
            for j in t + 1..cols {
                if d.at(t, j).is_zero() {
                    continue;
                }
                let q = d.at(t, j).div_floor(d.at(t, t));
                if !q.is_zero() {
                    d.col_sub_mul(j, t, &q);
                    v.col_sub_mul(j, t, &q);
                }
                if !d.at(t, j).is_zero() {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    continue 'reduce;
                }
            }
            // Divisibility: the pivot must divide the whole trailing block.
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !d.at(i, j).mod_floor(d.at(t, t)).is_zero())
            });
            if let Some(i) = offender {
                d.row_add(t, i);
                u.row_add(t, i);
                continue 'reduce;
            }
            break;
        }

        if d.at(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    SmithDecomposition { d, u, v }
}

/// Row-style Hermite normal form.
///
/// The result has the same shape and the same row span as the input: nonzero
/// rows come first in echelon form with positive pivots, entries above each
/// pivot are reduced into `[0, pivot)`, and zero rows sit at the bottom.
pub fn hermite_normal_form(a: &IntMatrix) -> IntMatrix {
    let mut h = a.clone();
    let rows = h.rows();
    let cols = h.cols();
    let mut r = 0;

    for j in 0..cols {
        if r == rows {
            break;
        }
        // Gcd-eliminate column j below row r.
        loop {
            let mut best: Option<(usize, BigInt)> = None;
            for i in r..rows {
                let x = h.at(i, j);
                if x.is_zero() {
                    continue;
                }
                let abs = x.abs();
                match &best {
                    Some((_, min)) if *min <= abs => {}
                    _ => best = Some((i, abs)),
                }
            }
            let Some((imin, _)) = best else {
                break;
            };
            h.swap_rows(r, imin);
            let mut clean = true;
            for i in r + 1..rows {
                if h.at(i, j).is_zero() {
                    continue;
                }
                let q = h.at(i, j).div_floor(h.at(r, j));
                if !q.is_zero() {
                    h.row_sub_mul(i, r, &q);
                }
                if !h.at(i, j).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h.at(r, j).is_zero() {
            continue; // no pivot in this column
        }
        if h.at(r, j).is_negative() {
            h.negate_row(r);
        }
        // Reduce the entries above the pivot into [0, pivot).
        for i in 0..r {
            let q = h.at(i, j).div_floor(h.at(r, j));
            if !q.is_zero() {
                h.row_sub_mul(i, r, &q);
            }
        }
        r += 1;
    }
    h
}

/// Whether `v` lies in the integer row span of `relations`.
///
/// Reduces `v` against the Hermite normal form by back-substitution; each
/// pivot must divide the corresponding coordinate exactly.
pub fn lattice_contains(relations: &IntMatrix, v: &[BigInt]) -> bool {
    assert_eq!(
        v.len(),
        relations.cols(),
        "vector length != relation columns"
    );
    let h = hermite_normal_form(relations);
    let mut w = v.to_vec();
    let mut row = 0;
    for j in 0..h.cols() {
        if row < h.rows() && !h.at(row, j).is_zero() {
            let (q, rem) = w[j].div_rem(h.at(row, j));
            if !rem.is_zero() {
                return false;
            }
            if !q.is_zero() {
                for (jj, w_entry) in w.iter_mut().enumerate().skip(j) {
                    *w_entry -= &q * h.at(row, jj);
                }
            }
            row += 1;
        } else if !w[j].is_zero() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    fn bigvec(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_certificates(a: &IntMatrix, snf: &SmithDecomposition) {
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.d, "U*A*V != D");
        assert_eq!(snf.u.determinant().abs(), BigInt::one());
        assert_eq!(snf.v.determinant().abs(), BigInt::one());
        let diag = snf.diagonal();
        for i in 0..diag.len() {
            assert!(!diag[i].is_negative());
            if i + 1 < diag.len() && !diag[i + 1].is_zero() {
                assert!(!diag[i].is_zero(), "zero before nonzero on diagonal");
                assert!(diag[i + 1].mod_floor(&diag[i]).is_zero(), "d{} ∤ d{}", i, i + 1);
            }
        }
        // Off-diagonal entries of D are zero.
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert!(snf.d.at(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn snf_diag_2_3() {
        // d1 = gcd of entries = 1, d1*d2 = |det| = 6
        let a = m(&[vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&a);
        check_certificates(&a, &snf);
        assert_eq!(snf.diagonal(), bigvec(&[1, 6]));
    }

    #[test]
    fn snf_relation_lattice() {
        // gcd of entries = 4, |det| = 96 = 4 * 24
        let a = m(&[vec![0, 12], vec![8, 4]]);
        let snf = smith_normal_form(&a);
        check_certificates(&a, &snf);
        assert_eq!(snf.diagonal(), bigvec(&[4, 24]));
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(3);
        let snf = smith_normal_form(&a);
        check_certificates(&a, &snf);
        assert_eq!(snf.diagonal(), bigvec(&[1, 1, 1]));
    }

    #[test]
    fn snf_zero_and_empty() {
        let a = IntMatrix::zeros(2, 3);
        let snf = smith_normal_form(&a);
        check_certificates(&a, &snf);
        assert_eq!(snf.diagonal(), bigvec(&[0, 0]));

        let e = IntMatrix::zeros(0, 4);
        let snf = smith_normal_form(&e);
        assert_eq!(snf.rank(), 0);
        assert_eq!(snf.v, IntMatrix::identity(4));
    }

    #[test]
    fn snf_wide_and_tall() {
        let a = m(&[vec![2, 4, 6]]);
        let snf = smith_normal_form(&a);
        check_certificates(&a, &snf);
        assert_eq!(snf.diagonal(), bigvec(&[2]));

        let a = m(&[vec![10, 0, 0], vec![-18, 6, 12]]);
        let snf = smith_normal_form(&a);
        check_certificates(&a, &snf);
        assert_eq!(snf.diagonal(), bigvec(&[2, 30]));
    }

    #[test]
    fn hnf_already_reduced() {
        let a = m(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(hermite_normal_form(&a), a);
    }

    #[test]
    fn hnf_reorders_rows() {
        let a = m(&[vec![0, 12], vec![8, 4]]);
        assert_eq!(hermite_normal_form(&a), m(&[vec![8, 4], vec![0, 12]]));
    }

    #[test]
    fn hnf_zero_matrix() {
        let a = IntMatrix::zeros(3, 2);
        assert_eq!(hermite_normal_form(&a), a);
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let a = m(&[vec![1, 7], vec![0, 3]]);
        assert_eq!(hermite_normal_form(&a), m(&[vec![1, 1], vec![0, 3]]));
    }

    #[test]
    fn membership_examples() {
        let rel = m(&[vec![0, 12]]);
        assert!(lattice_contains(&rel, &bigvec(&[0, 24])));
        assert!(!lattice_contains(&rel, &bigvec(&[0, 6])));

        let rel = m(&[vec![0, 12], vec![8, 4]]);
        // (8, 16) = (8, 4) + (0, 12)
        assert!(lattice_contains(&rel, &bigvec(&[8, 16])));
        assert!(!lattice_contains(&rel, &bigvec(&[4, 0])));
        assert!(lattice_contains(&rel, &bigvec(&[0, 0])));
    }

    #[test]
    fn membership_with_free_column() {
        // Lattice spanned by (0, 5): first coordinate has no pivot.
        let rel = m(&[vec![0, 5]]);
        assert!(!lattice_contains(&rel, &bigvec(&[1, 5])));
        assert!(lattice_contains(&rel, &bigvec(&[0, -15])));
    }
}
