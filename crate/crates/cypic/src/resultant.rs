//! Resultants and polynomial discriminants via the Sylvester matrix.
//!
//! Univariate polynomials are coefficient vectors (ascending, constant term
//! first) whose coefficients may themselves be multivariate [`ExactPoly`]
//! values. This gives a second, trace-form-independent route to the
//! discriminant of `x^n − h`.

use num_rational::BigRational;

use crate::bareiss;
use crate::poly::ExactPoly;

fn trimmed(f: &[ExactPoly]) -> &[ExactPoly] {
    let mut end = f.len();
    while end > 0 && f[end - 1].is_zero() {
        end -= 1;
    }
    &f[..end]
}

/// Formal derivative with respect to the main variable.
pub fn derivative(f: &[ExactPoly]) -> Vec<ExactPoly> {
    f.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.scale(&BigRational::from_integer(i.into())))
        .collect()
}

/// Sylvester matrix of two polynomials of positive degree.
pub fn sylvester_matrix(f: &[ExactPoly], g: &[ExactPoly]) -> Vec<Vec<ExactPoly>> {
    let f = trimmed(f);
    let g = trimmed(g);
    let m = f.len() - 1;
    let n = g.len() - 1;
    assert!(m >= 1 && n >= 1, "Sylvester matrix needs positive degrees");
    let size = m + n;
    let mut rows = vec![vec![ExactPoly::zero(); size]; size];
    // n shifted copies of f (descending coefficients), then m copies of g.
    for shift in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            rows[shift][shift + k] = c.clone();
        }
    }
    for shift in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            rows[n + shift][shift + k] = c.clone();
        }
    }
    rows
}

/// Resultant of `f` and `g` as the Sylvester determinant.
///
/// Degenerate degrees follow the usual conventions: `res(f, c) = c^deg f`,
/// `res(c, g) = c^deg g`, and the resultant with the zero polynomial is zero
/// (1 if the other argument is a nonzero constant).
pub fn resultant(f: &[ExactPoly], g: &[ExactPoly]) -> ExactPoly {
    let f = trimmed(f);
    let g = trimmed(g);
    match (f.len(), g.len()) {
        (0, 0) => ExactPoly::zero(),
        (0, _) | (_, 0) => {
            let other = if f.is_empty() { g } else { f };
            if other.len() == 1 {
                ExactPoly::one()
            } else {
                ExactPoly::zero()
            }
        }
        (1, _) => f[0].pow((g.len() - 1) as u32),
        (_, 1) => g[0].pow((f.len() - 1) as u32),
        _ => bareiss::determinant(&sylvester_matrix(f, g)),
    }
}

/// Discriminant of a polynomial of degree ≥ 1:
/// `(-1)^{n(n-1)/2} · res(f, f') / lc(f)`.
///
/// The division by the leading coefficient is exact.
pub fn polynomial_discriminant(f: &[ExactPoly]) -> ExactPoly {
    let f = trimmed(f);
    assert!(f.len() >= 2, "discriminant needs degree ≥ 1");
    let n = f.len() - 1;
    let res = resultant(f, &derivative(f));
    let signed = if (n * (n - 1) / 2) % 2 == 0 {
        res
    } else {
        -&res
    };
    signed
        .div_exact(&f[n])
        .expect("res(f, f') is divisible by the leading coefficient")
}

/// Coefficient vector of `x^n − h` in the main variable.
pub fn cyclic_cover_polynomial(n: usize, h: &ExactPoly) -> Vec<ExactPoly> {
    assert!(n >= 1);
    let mut coeffs = vec![ExactPoly::zero(); n + 1];
    coeffs[0] = -h;
    coeffs[n] = ExactPoly::one();
    coeffs
}
