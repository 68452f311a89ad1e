//! Finite free quotient algebras and their trace-form discriminants.
//!
//! A [`QuotientAlgebra`] is a free module of finite rank over an exact
//! polynomial coefficient ring, with multiplication given by an explicit
//! table. The algebra of a uniform cyclic cover, `R[x]/(x^n − h)` with basis
//! `1, x, …, x^{n−1}`, is the main instance; arbitrary tables cover cases
//! like the split rank-2 algebra with `α² = (x1+x2)·α − x1·x2`.
//!
//! The discriminant of the algebra is the determinant of its trace form
//! `(i, j) ↦ tr(e_i·e_j · −)`; its vanishing locus is the ramification locus
//! of the corresponding cover.

use thiserror::Error;

use crate::bareiss;
use crate::poly::ExactPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("the uniformizer must be a nonzero non-constant polynomial")]
    InvalidUniformizer,
    #[error("discriminant is not a unit multiple of a pure power of the uniformizer")]
    NotPurePower,
}

/// A finite free algebra given by a multiplication table.
///
/// `table[i][j]` holds the coefficients of `e_i · e_j` in the basis; the
/// basis element `e_0` is required to be the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientAlgebra {
    rank: usize,
    basis_names: Vec<String>,
    table: Vec<Vec<Vec<ExactPoly>>>,
}

impl QuotientAlgebra {
    /// Builds an algebra from an explicit table; validates shapes and that
    /// `e_0` is a two-sided identity.
    pub fn from_table(
        basis_names: Vec<String>,
        table: Vec<Vec<Vec<ExactPoly>>>,
    ) -> Result<Self, AlgebraError> {
        let rank = basis_names.len();
        if rank == 0 {
            return Err(AlgebraError::InvalidTable("rank must be ≥ 1".to_string()));
        }
        if table.len() != rank
            || table
                .iter()
                .any(|row| row.len() != rank || row.iter().any(|c| c.len() != rank))
        {
            return Err(AlgebraError::InvalidTable(format!(
                "table must be {rank}×{rank}×{rank}"
            )));
        }
        let algebra = QuotientAlgebra {
            rank,
            basis_names,
            table,
        };
        for i in 0..rank {
            let unit_vec = algebra.basis_vector(i);
            if algebra.table[0][i] != unit_vec || algebra.table[i][0] != unit_vec {
                return Err(AlgebraError::InvalidTable(
                    "e_0 must act as the identity".to_string(),
                ));
            }
        }
        Ok(algebra)
    }

    /// The algebra `R[x]/(x^n − h)` of a uniform cyclic cover, with basis
    /// `1, x, …, x^{n−1}` and reduction rule `x^n = h`.
    pub fn cyclic_cover(n: usize, h: &ExactPoly) -> Self {
        assert!(n >= 2, "cover degree must be ≥ 2");
        let basis_names = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                e => format!("x^{}", e),
            })
            .collect();
        let mut table = vec![vec![vec![ExactPoly::zero(); n]; n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                if i + j < n {
                    cell[i + j] = ExactPoly::one();
                } else {
                    // x^(i+j) = h · x^(i+j−n); i+j ≤ 2n−2 needs one reduction.
                    cell[i + j - n] = h.clone();
                }
            }
        }
        QuotientAlgebra {
            rank: n,
            basis_names,
            table,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Coefficients of `e_i · e_j` in the basis.
    pub fn product(&self, i: usize, j: usize) -> &[ExactPoly] {
        &self.table[i][j]
    }

    fn basis_vector(&self, i: usize) -> Vec<ExactPoly> {
        let mut v = vec![ExactPoly::zero(); self.rank];
        v[i] = ExactPoly::one();
        v
    }

    /// Product of two elements given by their coefficient vectors.
    pub fn multiply(&self, a: &[ExactPoly], b: &[ExactPoly]) -> Vec<ExactPoly> {
        assert_eq!(a.len(), self.rank);
        assert_eq!(b.len(), self.rank);
        let mut out = vec![ExactPoly::zero(); self.rank];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let scale = ca * cb;
                for (k, c) in self.table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&scale * c);
                    }
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                if self.table[i][j] != self.table[j][i] {
                    return false;
                }
            }
        }
        true
    }

    /// Exhaustive associativity check on basis triples.
    pub fn is_associative(&self) -> bool {
        for i in 0..self.rank {
            for j in 0..self.rank {
                for k in 0..self.rank {
                    let left = self.multiply(&self.table[i][j].clone(), &self.basis_vector(k));
                    let right = self.multiply(&self.basis_vector(i), &self.table[j][k].clone());
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Trace of multiplication by the basis element `e_b`.
    pub fn basis_trace(&self, b: usize) -> ExactPoly {
        let mut tr = ExactPoly::zero();
        for l in 0..self.rank {
            tr = &tr + &self.table[b][l][l];
        }
        tr
    }

    /// The trace form: entry `(i, j)` is the trace of multiplication by
    /// `e_i · e_j`.
    pub fn trace_form(&self) -> TraceForm {
        let basis_traces: Vec<ExactPoly> = (0..self.rank).map(|b| self.basis_trace(b)).collect();
        let mut entries = vec![vec![ExactPoly::zero(); self.rank]; self.rank];
        for i in 0..self.rank {
            for j in 0..self.rank {
                let mut t = ExactPoly::zero();
                for (b, c) in self.table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        t = &t + &(c * &basis_traces[b]);
                    }
                }
                entries[i][j] = t;
            }
        }
        TraceForm { entries }
    }

    /// Determinant of the trace form in the given basis.
    pub fn discriminant(&self) -> ExactPoly {
        self.trace_form().determinant()
    }
}

/// Matrix of traces `tr(e_i·e_j · −)`, symmetric for commutative algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceForm {
    entries: Vec<Vec<ExactPoly>>,
}

impl TraceForm {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn at(&self, i: usize, j: usize) -> &ExactPoly {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<ExactPoly>] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (i + 1..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> ExactPoly {
        bareiss::determinant(&self.entries)
    }
}

/// Checks the closed form `disc(R[x]/(x^n − h)) = ±n^n·h^{n−1}` for a formal
/// variable `h`, using the full trace-matrix determinant. Only the absolute
/// coefficient and the exponent are pinned; the sign alternates with `n`.
pub fn discriminant_power_formula_check(n: usize) -> bool {
    assert!(n >= 2);
    let h = ExactPoly::var("h");
    let disc = QuotientAlgebra::cyclic_cover(n, &h).discriminant();
    let magnitude = &ExactPoly::from_int(n as i64).pow(n as u32) * &h.pow(n as u32 - 1);
    disc == magnitude || disc == -&magnitude
}

/// Exact valuation of `disc` at an irreducible `uniformizer`: the `v` with
/// `disc = unit · uniformizer^v` in the localization at the uniformizer.
///
/// Computed by repeated exact division. The cofactor left when division
/// stops is not divisible by the uniformizer, hence is a unit in the
/// localization. The zero polynomial is no unit multiple of any power and
/// reports [`AlgebraError::NotPurePower`].
pub fn ramification_length(
    disc: &ExactPoly,
    uniformizer: &ExactPoly,
) -> Result<u64, AlgebraError> {
    if uniformizer.is_zero() || uniformizer.is_constant() {
        return Err(AlgebraError::InvalidUniformizer);
    }
    if disc.is_zero() {
        return Err(AlgebraError::NotPurePower);
    }
    let mut v = 0;
    let mut rest = disc.clone();
    while let Some(q) = rest.div_exact(uniformizer) {
        rest = q;
        v += 1;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(src: &str) -> ExactPoly {
        parse_poly(src).unwrap()
    }

    /// Split rank-2 algebra with basis {1, α} and α² = (x1+x2)·α − x1·x2.
    fn split_quadratic() -> QuotientAlgebra {
        let zero = ExactPoly::zero();
        let one = ExactPoly::one();
        let table = vec![
            vec![
                vec![one.clone(), zero.clone()],
                vec![zero.clone(), one.clone()],
            ],
            vec![
                vec![zero.clone(), one.clone()],
                vec![-&p("x1*x2"), p("x1 + x2")],
            ],
        ];
        QuotientAlgebra::from_table(vec!["1".to_string(), "alpha".to_string()], table).unwrap()
    }

    #[test]
    fn cyclic_cover_reduction_rule() {
        let h = p("h");
        let a = QuotientAlgebra::cyclic_cover(2, &h);
        // x · x = h · 1
        assert_eq!(a.product(1, 1), &[h.clone(), ExactPoly::zero()][..]);

        let a = QuotientAlgebra::cyclic_cover(3, &h);
        // x² · x² = h · x
        assert_eq!(
            a.product(2, 2),
            &[ExactPoly::zero(), h.clone(), ExactPoly::zero()][..]
        );

        // Square-zero extension: h = 0.
        let a = QuotientAlgebra::cyclic_cover(2, &ExactPoly::zero());
        assert_eq!(a.product(1, 1), &[ExactPoly::zero(), ExactPoly::zero()][..]);
    }

    #[test]
    fn algebra_laws_hold_exhaustively() {
        let h = p("h");
        for n in 2..=4 {
            let a = QuotientAlgebra::cyclic_cover(n, &h);
            assert!(a.is_commutative(), "n = {}", n);
            assert!(a.is_associative(), "n = {}", n);
        }
        let a = split_quadratic();
        assert!(a.is_commutative());
        assert!(a.is_associative());
        // h = 0 stays associative (nilpotents are fine).
        let a = QuotientAlgebra::cyclic_cover(3, &ExactPoly::zero());
        assert!(a.is_associative());
    }

    #[test]
    fn trace_form_degree_2() {
        let a = QuotientAlgebra::cyclic_cover(2, &p("h"));
        let t = a.trace_form();
        assert_eq!(t.at(0, 0), &p("2"));
        assert_eq!(t.at(0, 1), &ExactPoly::zero());
        assert_eq!(t.at(1, 1), &p("2*h"));
        assert!(t.is_symmetric());
        assert_eq!(a.discriminant(), p("4*h"));
    }

    #[test]
    fn trace_form_degree_3() {
        let a = QuotientAlgebra::cyclic_cover(3, &p("h"));
        let t = a.trace_form();
        let expected = [
            [p("3"), p("0"), p("0")],
            [p("0"), p("0"), p("3*h")],
            [p("0"), p("3*h"), p("0")],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(t.at(i, j), &expected[i][j], "({}, {})", i, j);
            }
        }
        assert_eq!(a.discriminant(), p("-27*h^2"));
    }

    #[test]
    fn split_quadratic_reproduces_the_ramification_model() {
        let a = split_quadratic();
        let t = a.trace_form();
        assert_eq!(t.at(0, 0), &p("2"));
        assert_eq!(t.at(0, 1), &p("x1 + x2"));
        assert_eq!(t.at(1, 0), &p("x1 + x2"));
        assert_eq!(t.at(1, 1), &p("(x1 + x2)^2 - 2*x1*x2"));
        assert_eq!(a.discriminant(), p("(x1 - x2)^2"));
    }

    #[test]
    fn discriminant_closed_form() {
        for n in 2..=6 {
            assert!(discriminant_power_formula_check(n), "n = {}", n);
        }
        // n = 4 has |coefficient| = 256 = 4^4.
        let disc = QuotientAlgebra::cyclic_cover(4, &p("h")).discriminant();
        assert_eq!(disc, p("-256*h^3"));
    }

    #[test]
    fn discriminant_twist_covariance() {
        // Twisting h by t² scales the discriminant by t^(2(n−1)).
        let h = p("h");
        for n in 2..=5 {
            let plain = QuotientAlgebra::cyclic_cover(n, &h).discriminant();
            let twisted = QuotientAlgebra::cyclic_cover(n, &p("h*t^2")).discriminant();
            let expected = &plain * &p("t").pow(2 * (n as u32 - 1));
            assert_eq!(twisted, expected, "n = {}", n);
        }
    }

    #[test]
    fn ramification_lengths() {
        assert_eq!(
            ramification_length(&p("(x1 - x2)^2"), &p("x1 - x2")),
            Ok(2)
        );
        assert_eq!(ramification_length(&p("4*h"), &p("h")), Ok(1));
        assert_eq!(ramification_length(&p("5"), &p("h")), Ok(0));
        // A cofactor coprime to the uniformizer is a unit in the localization.
        assert_eq!(
            ramification_length(&p("(x1 + x2) * (x1 - x2)^3"), &p("x1 - x2")),
            Ok(3)
        );
        assert_eq!(
            ramification_length(&ExactPoly::zero(), &p("h")),
            Err(AlgebraError::NotPurePower)
        );
        assert_eq!(
            ramification_length(&p("h"), &p("7")),
            Err(AlgebraError::InvalidUniformizer)
        );
    }

    #[test]
    fn table_validation() {
        let bad = QuotientAlgebra::from_table(vec!["1".to_string()], vec![]);
        assert!(matches!(bad, Err(AlgebraError::InvalidTable(_))));

        // e_0 must be the identity.
        let zero = ExactPoly::zero();
        let two = p("2");
        let table = vec![
            vec![vec![two, zero.clone()], vec![zero.clone(), ExactPoly::one()]],
            vec![
                vec![zero.clone(), ExactPoly::one()],
                vec![ExactPoly::one(), zero],
            ],
        ];
        let bad = QuotientAlgebra::from_table(vec!["1".to_string(), "x".to_string()], table);
        assert!(matches!(bad, Err(AlgebraError::InvalidTable(_))));
    }
}
