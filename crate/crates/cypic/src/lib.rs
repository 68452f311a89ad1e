//! Exact computation of integral Picard groups of moduli stacks of uniform
//! cyclic covers between smooth curves.
//!
//! A uniform cyclic cover of degree `n` is a map that locally looks like
//! `Spec R[x]/(x^n - h)` with its natural `μ_n`-action. For non-negative
//! integers `h`, `g` and a degree `n ≥ 2`, the covers of genus-`g` curves by
//! genus-`h` curves form a moduli stack, and its Picard group is a finitely
//! generated abelian group generated by tautological classes (determinants of
//! pushforwards of powers of the universal sheaf and the relative dualizing
//! sheaf).
//!
//! The crate provides:
//!
//! * [`fgab`] — arbitrary-precision integer matrices, Hermite and Smith
//!   normal forms, and canonical forms of finitely generated abelian groups;
//! * [`picard`] — the tautological divisor-class calculus on the universal
//!   Jacobian, per genus regime;
//! * [`pipeline`] — the end-to-end computation from `(h, g, n)` to the
//!   presentation and canonical structure of the Picard group, including an
//!   independent cross-check against closed-form group tables;
//! * [`poly`] and [`algebra`] — exact sparse multivariate polynomials,
//!   quotient algebras of the form `R[x]/(x^n - h)`, trace forms and their
//!   discriminants;
//! * [`resultant`] — Sylvester-matrix resultants, used as a second route to
//!   polynomial discriminants;
//! * [`output`] — deterministic human- and machine-readable report rendering
//!   for the `cypic` command-line tool.
//!
//! All arithmetic is exact: integers are arbitrary-precision and polynomial
//! coefficients are exact rationals. No floating point is used anywhere.

mod bareiss;

pub mod algebra;
pub mod fgab;
pub mod output;
pub mod picard;
pub mod pipeline;
pub mod poly;
pub mod resultant;
