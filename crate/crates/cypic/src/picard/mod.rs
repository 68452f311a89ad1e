//! Tautological divisor-class calculus on the universal Jacobian.
//!
//! Line-bundle classes are written additively: a class is an integer exponent
//! vector over a fixed generator basis, tensor product is vector addition and
//! the dual is negation. Each genus regime fixes its basis and the relation
//! lattice of the Picard group of the universal Jacobian `Jac_{d,g}`:
//!
//! * genus 0: one free generator `L0`;
//! * genus 1: `Lambda = det π_*L`, `Omega = π_*ω_π`, relation `12·Omega`;
//! * genus 2: `Omega = det π_*ω_π`, `Delta = d_π(L)`,
//!   `Theta = det π_*(L ⊗ ω_π)`, relation `10·Omega`;
//! * genus ≥ 3: the same three generators, freely;
//! * the degree-0 special case of double covers of genus-1 curves by genus-1
//!   curves, where the relevant group is `Z/4` generated by `Omega = π_*ω_π`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::fgab::{lattice_contains, IntMatrix};

/// Torsion order of `π_*ω_π` over genus-1 bases.
pub const GENUS1_TORSION: i64 = 12;
/// Torsion order of `det π_*ω_π` over genus-2 bases.
pub const GENUS2_TORSION: i64 = 10;
/// Torsion order of `π_*ω_π` in the degree-0 bielliptic special case.
pub const B112_TORSION: i64 = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassError {
    #[error("genus-{genus} regime requires degree d ≥ 1")]
    DegreeZero { genus: u64 },
    #[error("the exponent formula for {regime} is not stated at (n, k) = ({n}, {k})")]
    OutOfFormulaRange {
        regime: GenusRegime,
        n: i64,
        k: i64,
    },
    #[error("half-integer exponent in the genus-0 odd-degree formula at (n, k) = ({n}, {k})")]
    IntegralityViolation { n: i64, k: i64 },
    #[error("discriminant class requires cover degree n ≥ 2, got {n}")]
    InvalidCoverDegree { n: i64 },
    #[error("classes from different regimes cannot be compared")]
    RegimeMismatch,
    #[error("{regime} has no discriminant class")]
    UnsupportedRegime { regime: GenusRegime },
}

/// Genus regime of the universal Jacobian, including the degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenusRegime {
    Genus0 { d: u64 },
    Genus1 { d: u64 },
    Genus2 { d: u64 },
    GenusHigh { genus: u64, d: u64 },
    /// `(h, g, n) = (1, 1, 2)`: degree-0 double covers of elliptic curves.
    B112,
}

impl GenusRegime {
    /// Regime for a genus-`g` base and an invertible sheaf of degree `d ≥ 1`.
    pub fn new(genus: u64, d: u64) -> Result<Self, ClassError> {
        if d == 0 {
            return Err(ClassError::DegreeZero { genus });
        }
        Ok(match genus {
            0 => GenusRegime::Genus0 { d },
            1 => GenusRegime::Genus1 { d },
            2 => GenusRegime::Genus2 { d },
            g => GenusRegime::GenusHigh { genus: g, d },
        })
    }

    pub fn genus(&self) -> u64 {
        match self {
            GenusRegime::Genus0 { .. } => 0,
            GenusRegime::Genus1 { .. } | GenusRegime::B112 => 1,
            GenusRegime::Genus2 { .. } => 2,
            GenusRegime::GenusHigh { genus, .. } => *genus,
        }
    }

    /// Degree of the universal invertible sheaf (0 in the special case).
    pub fn degree(&self) -> u64 {
        match self {
            GenusRegime::Genus0 { d }
            | GenusRegime::Genus1 { d }
            | GenusRegime::Genus2 { d }
            | GenusRegime::GenusHigh { d, .. } => *d,
            GenusRegime::B112 => 0,
        }
    }

    pub fn symbols(&self) -> &'static [&'static str] {
        match self {
            GenusRegime::Genus0 { .. } => &["L0"],
            GenusRegime::Genus1 { .. } => &["Lambda", "Omega"],
            GenusRegime::Genus2 { .. } | GenusRegime::GenusHigh { .. } => {
                &["Omega", "Delta", "Theta"]
            }
            GenusRegime::B112 => &["Omega"],
        }
    }

    /// Sheaf-theoretic definition of each generator, for display.
    pub fn symbol_definitions(&self) -> Vec<String> {
        match self {
            GenusRegime::Genus0 { d } => {
                if d % 2 == 0 {
                    vec![format!("π_*(L ⊗ ω_π^{})", d / 2)]
                } else {
                    vec![format!("det π_*(L ⊗ ω_π^{})", (d - 1) / 2)]
                }
            }
            GenusRegime::Genus1 { .. } => {
                vec!["det π_*L".to_string(), "π_*ω_π".to_string()]
            }
            GenusRegime::Genus2 { .. } | GenusRegime::GenusHigh { .. } => vec![
                "det π_*ω_π".to_string(),
                "d_π(L)".to_string(),
                "det π_*(L ⊗ ω_π)".to_string(),
            ],
            GenusRegime::B112 => vec!["π_*ω_π".to_string()],
        }
    }

    /// Relation lattice of the Picard group of the universal Jacobian over
    /// this regime's generators (the torsion constants live here, as data).
    pub fn jac_relations(&self) -> IntMatrix {
        match self {
            GenusRegime::Genus0 { .. } => IntMatrix::zeros(0, 1),
            GenusRegime::Genus1 { .. } => {
                IntMatrix::from_i64_rows(&[vec![0, GENUS1_TORSION]])
            }
            GenusRegime::Genus2 { .. } => {
                IntMatrix::from_i64_rows(&[vec![GENUS2_TORSION, 0, 0]])
            }
            GenusRegime::GenusHigh { .. } => IntMatrix::zeros(0, 3),
            GenusRegime::B112 => IntMatrix::from_i64_rows(&[vec![B112_TORSION]]),
        }
    }

    pub fn generator_basis(&self) -> GeneratorBasis {
        GeneratorBasis {
            symbols: self.symbols(),
            jac_relations: self.jac_relations(),
        }
    }

    /// The `i`-th basis generator as a class.
    pub fn generator(&self, i: usize) -> DivisorClass {
        let len = self.symbols().len();
        assert!(i < len, "generator index out of range");
        let mut exponents = vec![BigInt::zero(); len];
        exponents[i] = BigInt::from(1);
        DivisorClass::new(*self, exponents)
    }
}

impl fmt::Display for GenusRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenusRegime::Genus0 { d } => write!(f, "genus-0 regime (d = {})", d),
            GenusRegime::Genus1 { d } => write!(f, "genus-1 regime (d = {})", d),
            GenusRegime::Genus2 { d } => write!(f, "genus-2 regime (d = {})", d),
            GenusRegime::GenusHigh { genus, d } => {
                write!(f, "genus-{} regime (d = {})", genus, d)
            }
            GenusRegime::B112 => write!(f, "special case (h,g,n) = (1,1,2)"),
        }
    }
}

/// Generator symbols plus the relation lattice they satisfy in the Picard
/// group of the universal Jacobian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorBasis {
    pub symbols: &'static [&'static str],
    pub jac_relations: IntMatrix,
}

/// An integer exponent vector over a regime's generator basis, representing
/// a tautological line-bundle class additively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    regime: GenusRegime,
    exponents: Vec<BigInt>,
}

impl DivisorClass {
    pub fn new(regime: GenusRegime, exponents: Vec<BigInt>) -> Self {
        assert_eq!(
            exponents.len(),
            regime.symbols().len(),
            "exponent vector length != generator count"
        );
        DivisorClass { regime, exponents }
    }

    pub fn from_i64(regime: GenusRegime, exponents: &[i64]) -> Self {
        DivisorClass::new(regime, exponents.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn regime(&self) -> GenusRegime {
        self.regime
    }

    pub fn exponents(&self) -> &[BigInt] {
        &self.exponents
    }

    /// Tensor product (vector sum). Errors on a regime mismatch.
    pub fn tensor(&self, other: &DivisorClass) -> Result<DivisorClass, ClassError> {
        if self.regime != other.regime {
            return Err(ClassError::RegimeMismatch);
        }
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a + b)
            .collect();
        Ok(DivisorClass::new(self.regime, exponents))
    }

    /// `c`-th tensor power (negative `c` is the dual's power).
    pub fn power(&self, c: i64) -> DivisorClass {
        let c = BigInt::from(c);
        DivisorClass::new(
            self.regime,
            self.exponents.iter().map(|e| e * &c).collect(),
        )
    }

    pub fn difference(&self, other: &DivisorClass) -> Result<Vec<BigInt>, ClassError> {
        if self.regime != other.regime {
            return Err(ClassError::RegimeMismatch);
        }
        Ok(self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a - b)
            .collect())
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbols = self.regime.symbols();
        if self.exponents.iter().all(Zero::is_zero) {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, s) in self.exponents.iter().zip(symbols) {
            if e.is_zero() {
                continue;
            }
            if first {
                if e.is_negative() {
                    write!(f, "-")?;
                }
            } else if e.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = e.abs();
            if a == BigInt::from(1) {
                write!(f, "{}", s)?;
            } else {
                write!(f, "{}·{}", a, s)?;
            }
            first = false;
        }
        Ok(())
    }
}

fn half_exact(x: BigInt, n: i64, k: i64) -> Result<BigInt, ClassError> {
    let (q, r) = x.div_rem(&BigInt::from(2));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(ClassError::IntegralityViolation { n, k })
    }
}

/// The class of `det π_*(L^n ⊗ ω_π^k)` in the regime's generator basis.
///
/// * genus 0, `d` even: `L0`-exponent `n·max{nd − 2k + 1, 0}`, all `n, k`;
/// * genus 0, `d` odd: half of the above (always an integer), all `n, k`;
/// * genus 1: `(n², dnk + (n−1)(dn − 2n − 2)/2)` for `n > 0`, any `k`;
///   `(n, k) = (0, 1)` gives the generator `Omega`;
/// * genus ≥ 2: `(6k² − 6k − n² + 1, −nk + n(n+1)/2, nk + n(n−1)/2)` for
///   `n, k ≥ 1`. The formula is not stated beyond that range, so only the
///   generator cases `(0, 1) = Omega` and `(1, 0) = Delta` (the determinant
///   of cohomology of `L`) are mapped directly; anything else errors.
pub fn det_pushforward_class(
    regime: GenusRegime,
    n: i64,
    k: i64,
) -> Result<DivisorClass, ClassError> {
    let nn = BigInt::from(n);
    let kk = BigInt::from(k);
    match regime {
        GenusRegime::Genus0 { d } => {
            let dd = BigInt::from(d);
            let mut rank_like: BigInt = &nn * &dd - BigInt::from(2) * &kk + 1;
            if rank_like.is_negative() {
                rank_like = BigInt::zero();
            }
            let raw = &nn * rank_like;
            let e = if d % 2 == 0 { raw } else { half_exact(raw, n, k)? };
            Ok(DivisorClass::new(regime, vec![e]))
        }
        GenusRegime::Genus1 { d } => {
            if n == 0 && k == 1 {
                return Ok(regime.generator(1));
            }
            if n <= 0 {
                return Err(ClassError::OutOfFormulaRange { regime, n, k });
            }
            let dd = BigInt::from(d);
            let lambda = &nn * &nn;
            let half = half_exact(
                (&nn - 1) * (&dd * &nn - BigInt::from(2) * &nn - 2),
                n,
                k,
            )?;
            let omega = &dd * &nn * &kk + half;
            Ok(DivisorClass::new(regime, vec![lambda, omega]))
        }
        GenusRegime::Genus2 { .. } | GenusRegime::GenusHigh { .. } => {
            if n == 0 && k == 1 {
                return Ok(regime.generator(0));
            }
            if n == 1 && k == 0 {
                return Ok(regime.generator(1));
            }
            if n < 1 || k < 1 {
                return Err(ClassError::OutOfFormulaRange { regime, n, k });
            }
            let six = BigInt::from(6);
            let omega = &six * &kk * &kk - &six * &kk - &nn * &nn + 1;
            let delta = -(&nn * &kk) + half_exact(&nn * (&nn + 1), n, k)?;
            let theta = &nn * &kk + half_exact(&nn * (&nn - 1), n, k)?;
            Ok(DivisorClass::new(regime, vec![omega, delta, theta]))
        }
        GenusRegime::B112 => Err(ClassError::OutOfFormulaRange { regime, n, k }),
    }
}

/// The class `T` of the discriminant divisor of the degree-`nd` canonical
/// cover, i.e. of `(det π_*(L^n ⊗ ω_π))² ⊗ (det π_*ω_π)^{-2}`:
///
/// * genus 0: `L0`-exponent `2n(nd−1)` for even `d`, `n(nd−1)` for odd `d`;
/// * genus 1: `(2n², n(dn + d − 2n))`;
/// * genus ≥ 2: `(−2n², n(n−1), n(n+1))`.
pub fn discriminant_class(regime: GenusRegime, n: i64) -> Result<DivisorClass, ClassError> {
    if matches!(regime, GenusRegime::B112) {
        return Err(ClassError::UnsupportedRegime { regime });
    }
    if n < 2 {
        return Err(ClassError::InvalidCoverDegree { n });
    }
    let nn = BigInt::from(n);
    match regime {
        GenusRegime::Genus0 { d } => {
            let dd = BigInt::from(d);
            let base = &nn * (&nn * &dd - 1);
            let e = if d % 2 == 0 {
                BigInt::from(2) * base
            } else {
                base
            };
            Ok(DivisorClass::new(regime, vec![e]))
        }
        GenusRegime::Genus1 { d } => {
            let dd = BigInt::from(d);
            let lambda = BigInt::from(2) * &nn * &nn;
            let omega = &nn * (&dd * &nn + &dd - BigInt::from(2) * &nn);
            Ok(DivisorClass::new(regime, vec![lambda, omega]))
        }
        GenusRegime::Genus2 { .. } | GenusRegime::GenusHigh { .. } => {
            let omega = BigInt::from(-2) * &nn * &nn;
            let delta = &nn * (&nn - 1);
            let theta = &nn * (&nn + 1);
            Ok(DivisorClass::new(regime, vec![omega, delta, theta]))
        }
        GenusRegime::B112 => unreachable!(),
    }
}

/// Equality of classes modulo the regime's relation lattice.
pub fn class_equal(a: &DivisorClass, b: &DivisorClass) -> Result<bool, ClassError> {
    let diff = a.difference(b)?;
    Ok(lattice_contains(&a.regime().jac_relations(), &diff))
}

/// Consistency of the two genus-1 routes to `det π_*(L^n)`.
///
/// Expressing `det π_*(L^n)` through the free generator
/// `det π_*L ⊗ (π_*ω_π)^{d(d+1)/2 − 1}` of the character group gives the
/// `ω`-exponent `n²·(d(d+1)/2 − 1) + 1 − nd(nd+1)/2`; the direct exponent
/// formula at `k = 0` gives `(n−1)(dn − 2n − 2)/2`. Both simplify to
/// `nd(n−1)/2 − n² + 1`, so this must hold for every positive `n`, `d`.
pub fn genus1_character_consistency(n: i64, d: i64) -> bool {
    assert!(n > 0 && d > 0, "n and d must be positive");
    let nn = BigInt::from(n);
    let dd = BigInt::from(d);
    let two = BigInt::from(2);

    let half = |x: BigInt| -> BigInt {
        let (q, r) = x.div_rem(&two);
        assert!(r.is_zero(), "non-integral intermediate value");
        q
    };

    let character_route =
        &nn * &nn * (half(&dd * (&dd + 1)) - 1) + 1 - half(&nn * &dd * (&nn * &dd + 1));
    let formula_route = half((&nn - 1) * (&dd * &nn - &two * &nn - &two));
    character_route == formula_route
}
