//! Canonical forms of finitely generated abelian groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::normal_form::smith_normal_form;

/// A finitely generated abelian group in canonical form: ascending invariant
/// factors (each ≥ 2, each dividing the next) plus a free rank.
///
/// Two values are isomorphic as groups iff they are equal field-wise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    invariant_factors: Vec<BigInt>,
    free_rank: usize,
}

impl FgAbGroup {
    /// Panics unless the factors are canonical (each ≥ 2, each dividing the
    /// next).
    pub fn new(invariant_factors: Vec<BigInt>, free_rank: usize) -> Self {
        for (i, f) in invariant_factors.iter().enumerate() {
            assert!(*f >= BigInt::from(2), "invariant factor {} < 2", f);
            if i + 1 < invariant_factors.len() {
                assert!(
                    invariant_factors[i + 1].mod_floor(f).is_zero(),
                    "{} does not divide {}",
                    f,
                    invariant_factors[i + 1]
                );
            }
        }
        FgAbGroup {
            invariant_factors,
            free_rank,
        }
    }

    pub fn trivial() -> Self {
        FgAbGroup {
            invariant_factors: Vec::new(),
            free_rank: 0,
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            invariant_factors: Vec::new(),
            free_rank: rank,
        }
    }

    /// Cyclic group of the given order (order 1 gives the trivial group).
    pub fn cyclic(order: BigInt) -> Self {
        assert!(order >= BigInt::one(), "cyclic order must be ≥ 1");
        if order.is_one() {
            FgAbGroup::trivial()
        } else {
            FgAbGroup {
                invariant_factors: vec![order],
                free_rank: 0,
            }
        }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion subgroup (product of the invariant factors).
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors
            .iter()
            .fold(BigInt::one(), |acc, f| acc * f)
    }

    /// The cyclic orders `p^k` of the primary decomposition, ascending.
    pub fn primary_decomposition(&self) -> Vec<BigInt> {
        let mut parts = Vec::new();
        for f in &self.invariant_factors {
            for (p, e) in factorize(f) {
                parts.push(p.pow(e));
            }
        }
        parts.sort();
        parts
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in &self.invariant_factors {
            if !first {
                write!(f, " x ")?;
            }
            write!(f, "Z/{}", d)?;
            first = false;
        }
        match self.free_rank {
            0 => {}
            1 => {
                if !first {
                    write!(f, " x ")?;
                }
                write!(f, "Z")?;
            }
            r => {
                if !first {
                    write!(f, " x ")?;
                }
                write!(f, "Z^{}", r)?;
            }
        }
        Ok(())
    }
}

/// A presentation of an abelian group: `Z^n_generators` modulo the row
/// lattice of `relations`. Relation rows may be redundant, zero, or have
/// negative entries; no normalization is assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    n_generators: usize,
    relations: IntMatrix,
}

impl Presentation {
    pub fn new(n_generators: usize, relations: IntMatrix) -> Self {
        assert_eq!(
            relations.cols(),
            n_generators,
            "relation columns != generator count"
        );
        Presentation {
            n_generators,
            relations,
        }
    }

    pub fn n_generators(&self) -> usize {
        self.n_generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }
}

/// Canonical form of the quotient `Z^n / (row lattice of relations)`.
///
/// The invariant factors are the nontrivial diagonal entries of the Smith
/// normal form of the relation matrix; the free rank is the generator count
/// minus the rank of the relations.
pub fn presentation_to_group(p: &Presentation) -> FgAbGroup {
    let snf = smith_normal_form(p.relations());
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    let factors: Vec<BigInt> = diag
        .into_iter()
        .filter(|x| !x.is_zero() && !x.is_one())
        .collect();
    FgAbGroup::new(factors, p.n_generators() - rank)
}

fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.clone();
    assert!(n >= BigInt::one());
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if n.mod_floor(&p).is_zero() {
            let mut e = 0u32;
            while n.mod_floor(&p).is_zero() {
                n /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// Canonical invariant factors of `Z/c1 x ... x Z/ck x Z^free_rank`.
///
/// Regroups the prime-power parts of the given cyclic orders by the Chinese
/// remainder theorem: for each prime, the largest power goes into the largest
/// invariant factor, and so on down. Orders equal to 1 are allowed and
/// contribute nothing. Panics if any order is < 1.
pub fn product_to_invariant_factors(cyclic_orders: &[BigInt], free_rank: usize) -> FgAbGroup {
    // prime -> exponents contributed by each order, sorted descending
    let mut by_prime: Vec<(BigInt, Vec<u32>)> = Vec::new();
    for order in cyclic_orders {
        assert!(*order >= BigInt::one(), "cyclic order {} < 1", order);
        for (p, e) in factorize(order) {
            match by_prime.iter_mut().find(|(q, _)| *q == p) {
                Some((_, exps)) => exps.push(e),
                None => by_prime.push((p, vec![e])),
            }
        }
    }
    let slots = by_prime
        .iter()
        .map(|(_, exps)| exps.len())
        .max()
        .unwrap_or(0);
    for (_, exps) in &mut by_prime {
        exps.sort_unstable_by(|a, b| b.cmp(a));
    }
    // Slot 0 collects the largest prime powers, i.e. the last invariant factor.
    let mut factors = Vec::with_capacity(slots);
    for slot in 0..slots {
        let mut f = BigInt::one();
        for (p, exps) in &by_prime {
            if let Some(&e) = exps.get(slot) {
                f *= p.pow(e);
            }
        }
        factors.push(f);
    }
    factors.reverse();
    FgAbGroup::new(factors, free_rank)
}
