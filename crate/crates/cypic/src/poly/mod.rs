//! Exact sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a map from exponent tuples to exact rational
//! coefficients; zero coefficients are never stored and unused variables are
//! pruned, so equality is structural. The term order is graded
//! lexicographic, which also fixes a canonical printing order.

mod parse;

pub use parse::{parse_poly, ParseError};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bareiss::ExactRing;

/// Exponent tuple, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl ExactPoly {
    pub fn zero() -> Self {
        ExactPoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        ExactPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        ExactPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn from_int(n: i64) -> Self {
        ExactPoly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), BigRational::one());
        ExactPoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_constant)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    /// Drops zero coefficients and variables that no term uses.
    fn normalized(vars: Vec<String>, mut terms: BTreeMap<Monomial, BigRational>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..vars.len())
            .map(|i| terms.keys().any(|m| m.0[i] != 0))
            .collect();
        if used.iter().all(|&u| u) {
            return ExactPoly { vars, terms };
        }
        let new_vars: Vec<String> = vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let new_terms = terms
            .into_iter()
            .map(|(m, c)| {
                let exps = m
                    .0
                    .iter()
                    .zip(&used)
                    .filter(|(_, &u)| u)
                    .map(|(&e, _)| e)
                    .collect();
                (Monomial(exps), c)
            })
            .collect();
        ExactPoly {
            vars: new_vars,
            terms: new_terms,
        }
    }

    /// Rewrites both polynomials over the sorted union of their variables.
    fn aligned(
        &self,
        other: &ExactPoly,
    ) -> (
        Vec<String>,
        BTreeMap<Monomial, BigRational>,
        BTreeMap<Monomial, BigRational>,
    ) {
        if self.vars == other.vars {
            return (self.vars.clone(), self.terms.clone(), other.terms.clone());
        }
        let mut vars: Vec<String> = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars.sort();
        let remap = |src_vars: &[String], terms: &BTreeMap<Monomial, BigRational>| {
            let positions: Vec<usize> = src_vars
                .iter()
                .map(|v| vars.iter().position(|w| w == v).unwrap())
                .collect();
            terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = vec![0u32; vars.len()];
                    for (i, &e) in m.0.iter().enumerate() {
                        exps[positions[i]] = e;
                    }
                    (Monomial(exps), c.clone())
                })
                .collect()
        };
        let a = remap(&self.vars, &self.terms);
        let b = remap(&other.vars, &other.terms);
        (vars, a, b)
    }

    pub fn pow(&self, mut exp: u32) -> ExactPoly {
        let mut base = self.clone();
        let mut acc = ExactPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> ExactPoly {
        if c.is_zero() {
            return ExactPoly::zero();
        }
        ExactPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), q * c))
                .collect(),
        }
    }

    /// Exact division: `Some(q)` with `self = q * divisor`, or `None` when the
    /// division is not exact. Panics on a zero divisor.
    pub fn div_exact(&self, divisor: &ExactPoly) -> Option<ExactPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(ExactPoly::zero());
        }
        let (vars, mut rem, div_terms) = self.aligned(divisor);
        let (div_lm, div_lc) = div_terms.iter().next_back().expect("nonzero divisor");
        let mut quot: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        while let Some((rem_lm, rem_lc)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone()))
        {
            let qm = rem_lm.div(div_lm)?;
            let qc = rem_lc / div_lc;
            for (m, c) in &div_terms {
                let key = qm.mul(m);
                let delta = &qc * c;
                let entry = rem.entry(key.clone()).or_insert_with(BigRational::zero);
                *entry -= delta;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.insert(qm, qc);
        }
        Some(ExactPoly::normalized(vars, quot))
    }

    /// Substitutes a polynomial for one variable of `self`.
    pub fn substitute(&self, var: &str, value: &ExactPoly) -> ExactPoly {
        let Some(idx) = self.vars.iter().position(|v| v == var) else {
            return self.clone();
        };
        let mut acc = ExactPoly::zero();
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = exps[idx];
            exps[idx] = 0;
            let mut t = BTreeMap::new();
            t.insert(Monomial(exps), c.clone());
            let rest = ExactPoly::normalized(self.vars.clone(), t);
            acc = &acc + &(&rest * &value.pow(e));
        }
        acc
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let (vars, mut a, b) = self.aligned(rhs);
        for (m, c) in b {
            let entry = a.entry(m).or_insert_with(BigRational::zero);
            *entry += c;
        }
        ExactPoly::normalized(vars, a)
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        let (vars, mut a, b) = self.aligned(rhs);
        for (m, c) in b {
            let entry = a.entry(m).or_insert_with(BigRational::zero);
            *entry -= c;
        }
        ExactPoly::normalized(vars, a)
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let (vars, a, b) = self.aligned(rhs);
        let mut out: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let m = ma.mul(mb);
                let entry = out.entry(m).or_insert_with(BigRational::zero);
                *entry += ca * cb;
            }
        }
        ExactPoly::normalized(vars, out)
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c))
                .collect(),
        }
    }
}

impl ExactRing for ExactPoly {
    fn zero() -> Self {
        ExactPoly::zero()
    }
    fn one() -> Self {
        ExactPoly::one()
    }
    fn is_zero(&self) -> bool {
        ExactPoly::is_zero(self)
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
        ExactPoly::div_exact(self, other).expect("non-exact division in Bareiss elimination")
    }
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for ExactPoly {
    /// Canonical form: terms in descending graded-lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            if m.is_constant() {
                write_coefficient(f, &abs)?;
                continue;
            }
            let mut need_star = false;
            if !abs.is_one() {
                write_coefficient(f, &abs)?;
                need_star = true;
            }
            for (v, &e) in self.vars.iter().zip(&m.0) {
                if e == 0 {
                    continue;
                }
                if need_star {
                    write!(f, "*")?;
                }
                write!(f, "{}", v)?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
                need_star = true;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(src: &str) -> ExactPoly {
        parse_poly(src).unwrap()
    }

    #[test]
    fn arithmetic_and_normalization() {
        let x = ExactPoly::var("x");
        let y = ExactPoly::var("y");
        let s = &x + &y;
        let d = &x - &y;
        assert_eq!(&s * &d, p("x^2 - y^2"));
        // x cancels out entirely: the variable is pruned.
        assert_eq!(&s - &x, y);
        assert_eq!((&s - &x).vars(), &["y".to_string()][..]);
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn display_canonical_order() {
        assert_eq!(p("x2^2 + x1^2 - 2*x1*x2").to_string(), "x1^2 - 2*x1*x2 + x2^2");
        assert_eq!(p("4*h").to_string(), "4*h");
        assert_eq!(p("-27*h^2").to_string(), "-27*h^2");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("h - h").to_string(), "0");
        assert_eq!(
            ExactPoly::constant(BigRational::new(BigInt::from(3), BigInt::from(2))).to_string(),
            "3/2"
        );
    }

    #[test]
    fn powers() {
        assert_eq!(p("(x - y)^2"), p("x^2 - 2*x*y + y^2"));
        assert_eq!(p("x").pow(0), ExactPoly::one());
    }

    #[test]
    fn exact_division() {
        let num = p("x^2 - y^2");
        assert_eq!(num.div_exact(&p("x - y")), Some(p("x + y")));
        assert_eq!(num.div_exact(&p("x + y")), Some(p("x - y")));
        assert_eq!(num.div_exact(&p("x")), None);
        assert_eq!(p("4*h^3").div_exact(&p("2*h")), Some(p("2*h^2")));
        assert_eq!(ExactPoly::zero().div_exact(&p("x")), Some(ExactPoly::zero()));
        // Dividing by a constant always succeeds with rational coefficients.
        assert_eq!(p("x").div_exact(&p("2")), Some(p("x").scale(&BigRational::new(
            BigInt::from(1),
            BigInt::from(2)
        ))));
    }

    #[test]
    fn division_respects_multivariate_structure() {
        let a = p("(x1 - x2)^2 * (x1 + x2)");
        let d = p("x1 - x2");
        let q1 = a.div_exact(&d).unwrap();
        let q2 = q1.div_exact(&d).unwrap();
        assert_eq!(q2, p("x1 + x2"));
        assert_eq!(q2.div_exact(&d), None);
    }

    #[test]
    fn substitution() {
        let disc = p("4*h");
        assert_eq!(disc.substitute("h", &p("t^2 * u")), p("4*t^2*u"));
        assert_eq!(disc.substitute("absent", &p("t")), disc);
    }

    #[test]
    fn equality_ignores_variable_bookkeeping() {
        // The same polynomial built over different ambient variable sets.
        let a = &(&p("x + y") - &p("y")) + &p("z - z");
        assert_eq!(a, p("x"));
    }
}
