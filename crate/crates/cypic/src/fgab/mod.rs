//! Exact integer linear algebra over arbitrary-precision integers and
//! canonical forms of finitely generated abelian groups.
//!
//! Relation lattices of abelian group presentations are carried by
//! [`IntMatrix`]; [`smith_normal_form`] diagonalizes them with unimodular
//! certificates, [`hermite_normal_form`] puts them in row echelon form for
//! lattice membership tests, and [`presentation_to_group`] extracts the
//! invariant-factor decomposition of the quotient group.

mod group;
mod matrix;
mod normal_form;

pub use group::{presentation_to_group, product_to_invariant_factors, FgAbGroup, Presentation};
pub use matrix::IntMatrix;
pub use normal_form::{
    hermite_normal_form, lattice_contains, smith_normal_form, SmithDecomposition,
};
