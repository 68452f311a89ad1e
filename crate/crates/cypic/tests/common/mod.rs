//! Shared test oracles, independent of the library's computation paths.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use cypic::fgab::{hermite_normal_form, smith_normal_form, IntMatrix};

/// Exact determinant over i128. Bareiss intermediates are minors of the
/// input, so with entries ≤ 50 and dimension ≤ 6 everything stays far below
/// the i128 range.
pub fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut m = m.to_vec();
    let mut sign = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        let prev = if k == 0 { 1 } else { m[k - 1][k - 1] };
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
    }
    sign * m[n - 1][n - 1]
}

/// All k-element subsets of {0, .., n-1} in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Gcd of all k×k minors of `a` (0 when every minor vanishes).
pub fn minor_gcd(a: &IntMatrix, k: usize) -> i128 {
    let mut g: i128 = 0;
    for rows in subsets(a.rows(), k) {
        for cols in subsets(a.cols(), k) {
            let sub: Vec<Vec<i128>> = rows
                .iter()
                .map(|&i| {
                    cols.iter()
                        .map(|&j| i128::try_from(a.at(i, j).clone()).expect("entry fits in i128"))
                        .collect()
                })
                .collect();
            g = g.gcd(&det_i128(&sub));
        }
    }
    g
}

/// Asserts every certificate of the Smith decomposition: `U·A·V = D`,
/// unimodularity, non-negative divisibility-chained diagonal, and the
/// minor-gcd characterization `d1···dk = gcd(k×k minors)`.
pub fn assert_snf_certificates(a: &IntMatrix) {
    let snf = smith_normal_form(a);
    assert_eq!(snf.u.mul(a).mul(&snf.v), snf.d, "U*A*V != D");
    assert_eq!(snf.u.determinant().abs(), BigInt::one(), "U not unimodular");
    assert_eq!(snf.v.determinant().abs(), BigInt::one(), "V not unimodular");
    let diag = snf.diagonal();
    for i in 0..diag.len() {
        assert!(!diag[i].is_negative(), "negative diagonal entry");
        for j in 0..snf.d.cols() {
            if i != j && i < snf.d.rows() {
                assert!(snf.d.at(i, j).is_zero(), "off-diagonal entry");
            }
        }
        if i + 1 < diag.len() && !diag[i + 1].is_zero() {
            assert!(
                !diag[i].is_zero() && diag[i + 1].mod_floor(&diag[i]).is_zero(),
                "divisibility chain broken at {}",
                i
            );
        }
    }
    let mut product = BigInt::one();
    for (k, d) in diag.iter().enumerate() {
        product *= d;
        assert_eq!(
            product,
            BigInt::from(minor_gcd(a, k + 1)),
            "minor-gcd mismatch at k = {}",
            k + 1
        );
    }
}

/// Counts the cosets of the row lattice of `relations` in Z^n by breadth-
/// first exploration of canonical representatives (reduced against the
/// Hermite basis). Returns `None` when the quotient is infinite (some column
/// has no pivot) or more than `cap` cosets are found.
pub fn coset_count_bfs(relations: &IntMatrix, cap: usize) -> Option<usize> {
    let n = relations.cols();
    let h = hermite_normal_form(relations);
    // pivot column -> row index; every column must carry a pivot.
    let mut pivot_rows = Vec::with_capacity(n);
    let mut row = 0;
    for j in 0..n {
        if row < h.rows() && !h.at(row, j).is_zero() {
            pivot_rows.push(row);
            row += 1;
        } else {
            return None; // free direction: infinitely many cosets
        }
    }

    let reduce = |mut w: Vec<i128>| -> Vec<i128> {
        for j in 0..n {
            let r = pivot_rows[j];
            let p = i128::try_from(h.at(r, j).clone()).expect("pivot fits");
            let q = Integer::div_floor(&w[j], &p);
            if q != 0 {
                for (jj, entry) in w.iter_mut().enumerate().skip(j) {
                    *entry -= q * i128::try_from(h.at(r, jj).clone()).expect("entry fits");
                }
            }
        }
        w
    };

    let mut seen: HashSet<Vec<i128>> = HashSet::new();
    let mut queue = VecDeque::new();
    let origin = reduce(vec![0; n]);
    seen.insert(origin.clone());
    queue.push_back(origin);
    while let Some(current) = queue.pop_front() {
        if seen.len() > cap {
            return None;
        }
        for j in 0..n {
            for step in [1i128, -1] {
                let mut next = current.clone();
                next[j] += step;
                let next = reduce(next);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Some(seen.len())
}
