//! End-to-end computation: from cover parameters `(h, g, n)` to the
//! presentation and canonical structure of the Picard group of the moduli
//! stack of uniform cyclic covers, with an independent cross-check against
//! closed-form group tables.
//!
//! The computed route quotients the Picard group of the universal Jacobian by
//! the discriminant class `T` (plus an extra kernel generator in the one case
//! where the discriminant locus splits into two components) and canonicalizes
//! the result through the Smith normal form. The closed-form route evaluates
//! the known abstract-group tables directly. [`verify`] compares the two.

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::fgab::{presentation_to_group, product_to_invariant_factors, FgAbGroup, Presentation};
use crate::picard::{discriminant_class, GenusRegime};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("cover degree n must be ≥ 2, got {n}")]
    CoverDegreeTooSmall { n: u64 },
    #[error(
        "(h, g, n) = ({h}, {g}, {n}) has branch degree d = 0: these covers are \
         μ_n-torsors and are out of scope except for (1, 1, 2)"
    )]
    UnsupportedCase { h: u64, g: u64, n: u64 },
}

/// Parameters of a uniform cyclic cover problem: source genus `h`, base
/// genus `g`, cover degree `n ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoverParams {
    h: u64,
    g: u64,
    n: u64,
}

impl CoverParams {
    pub fn new(h: u64, g: u64, n: u64) -> Result<Self, PipelineError> {
        if n < 2 {
            return Err(PipelineError::CoverDegreeTooSmall { n });
        }
        Ok(CoverParams { h, g, n })
    }

    pub fn h(&self) -> u64 {
        self.h
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    pub fn n(&self) -> u64 {
        self.n
    }
}

/// The branch-divisor degree `d = 2(h + n(1−g) − 1) / (n(n−1))`.
///
/// The moduli stack is non-empty exactly when `d` is a non-negative integer;
/// the other two variants record why it is empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeInvariant {
    Degree(u64),
    /// The division is not exact; the unreduced fraction is kept for display.
    NonIntegral { numerator: i128, denominator: i128 },
    /// The division is exact but the value is negative.
    Negative(i128),
}

impl DegreeInvariant {
    pub fn as_degree(&self) -> Option<u64> {
        match self {
            DegreeInvariant::Degree(d) => Some(*d),
            _ => None,
        }
    }

    /// Whether the moduli stack of covers with these parameters is empty.
    pub fn is_empty_moduli(&self) -> bool {
        self.as_degree().is_none()
    }
}

impl std::fmt::Display for DegreeInvariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DegreeInvariant::Degree(d) => write!(f, "{}", d),
            DegreeInvariant::NonIntegral {
                numerator,
                denominator,
            } => write!(f, "{}/{} (not integral)", numerator, denominator),
            DegreeInvariant::Negative(v) => write!(f, "{} (negative)", v),
        }
    }
}

/// Computes the branch-divisor degree from `(h, g, n)`.
///
/// Inverse relation: `h = 1 + n(g−1) + n(n−1)d/2`.
pub fn degree_invariant(p: &CoverParams) -> DegreeInvariant {
    let h = p.h as i128;
    let g = p.g as i128;
    let n = p.n as i128;
    let numerator = 2 * (h + n * (1 - g) - 1);
    let denominator = n * (n - 1);
    if numerator % denominator != 0 {
        DegreeInvariant::NonIntegral {
            numerator,
            denominator,
        }
    } else {
        let d = numerator / denominator;
        if d < 0 {
            DegreeInvariant::Negative(d)
        } else {
            DegreeInvariant::Degree(d as u64)
        }
    }
}

/// Named hypothesis checks governing which closed-form table row applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HypothesisChecks {
    /// `nd > 2g − 2`: the quotient-by-`T` description of the Picard group is
    /// available at all.
    pub nd_gt_2g_minus_2: bool,
    /// The per-genus range of the closed-form tables: always true for
    /// genus 0; `nd > 2` for genus 1; for genus ≥ 2, `nd > 2g−2` and `g ≥ 4`,
    /// or `nd > 2g−1` and `g ≥ 3`, or `nd > 2g`.
    pub theorem_range: bool,
    /// `(h, g, n) = (1, 1, 2)`: the degree-0 special case.
    pub special_case_b112: bool,
    /// `(h, g, n) = (2, 1, 2)`: the reducible-discriminant special case.
    pub special_case_b212: bool,
}

impl HypothesisChecks {
    pub fn named(&self) -> [(&'static str, bool); 4] {
        [
            ("nd_gt_2g_minus_2", self.nd_gt_2g_minus_2),
            ("theorem_range", self.theorem_range),
            ("special_case_b112", self.special_case_b112),
            ("special_case_b212", self.special_case_b212),
        ]
    }
}

/// Evaluates the named hypotheses at the given branch degree.
///
/// All characteristic hypotheses (`char k ∤ nd` and friends) are vacuous:
/// the computation works in characteristic 0.
pub fn check_hypotheses(p: &CoverParams, d: u64) -> HypothesisChecks {
    let nd = (p.n as i128) * (d as i128);
    let g = p.g as i128;
    let theorem_range = match p.g {
        0 => true,
        1 => nd > 2,
        _ => (nd > 2 * g - 2 && g >= 4) || (nd > 2 * g - 1 && g >= 3) || nd > 2 * g,
    };
    HypothesisChecks {
        nd_gt_2g_minus_2: nd > 2 * g - 2,
        theorem_range,
        special_case_b112: p.h == 1 && p.g == 1 && p.n == 2,
        special_case_b212: p.h == 2 && p.g == 1 && p.n == 2,
    }
}

/// Everything computed for a non-empty moduli stack.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportBody {
    pub d: u64,
    pub regime: GenusRegime,
    pub hypotheses: HypothesisChecks,
    pub presentation: Presentation,
    pub structure: FgAbGroup,
    /// The closed-form table entry in canonical form, when some table row
    /// covers these parameters.
    pub closed_form: Option<FgAbGroup>,
    /// True when no table row applies: the quotient presentation is still
    /// computed (the quotient map is surjective whenever `nd > 2g − 2`), but
    /// it is only an upper bound and is not certified to be an isomorphism.
    pub extrapolated: bool,
}

/// Full report for one parameter triple. `body` is `None` exactly when the
/// moduli stack is empty (non-integral or negative `d`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardReport {
    pub params: CoverParams,
    pub degree: DegreeInvariant,
    pub body: Option<ReportBody>,
}

impl PicardReport {
    pub fn is_empty_moduli(&self) -> bool {
        self.body.is_none()
    }
}

/// Builds the presentation of the Picard group and its canonical structure.
///
/// For `d ≥ 1` the presentation is the regime's relation lattice plus the row
/// of the discriminant class `T`, plus the extra kernel row `2·Lambda −
/// 2·Omega` for `(h, g, n) = (2, 1, 2)`. For the `(1, 1, 2)` case the group
/// is `Z/4` on `Omega` with no `T` row (`det π_*L` is trivial there since
/// `π_*L = 0`). Any other `d = 0` input is unsupported.
pub fn picard_report(p: &CoverParams) -> Result<PicardReport, PipelineError> {
    let degree = degree_invariant(p);
    let Some(d) = degree.as_degree() else {
        return Ok(PicardReport {
            params: *p,
            degree,
            body: None,
        });
    };
    let hypotheses = check_hypotheses(p, d);

    let (regime, presentation) = if d == 0 {
        if !hypotheses.special_case_b112 {
            return Err(PipelineError::UnsupportedCase {
                h: p.h,
                g: p.g,
                n: p.n,
            });
        }
        let regime = GenusRegime::B112;
        (regime, Presentation::new(1, regime.jac_relations()))
    } else {
        let regime = GenusRegime::new(p.g, d).expect("d ≥ 1");
        let n = i64::try_from(p.n).expect("cover degree out of range");
        let t = discriminant_class(regime, n).expect("d ≥ 1 regime, n ≥ 2");
        let mut relations = regime.jac_relations();
        relations.push_row(t.exponents().to_vec());
        if hypotheses.special_case_b212 {
            // Kernel of the quotient map: (π_*L)² ⊗ (π_*ω_π)^{-2}.
            relations.push_row(vec![BigInt::from(2), BigInt::from(-2)]);
        }
        (regime, Presentation::new(regime.symbols().len(), relations))
    };

    let structure = presentation_to_group(&presentation);
    let closed_form = closed_form_structure(p, d);
    let extrapolated = closed_form.is_none();

    Ok(PicardReport {
        params: *p,
        degree,
        body: Some(ReportBody {
            d,
            regime,
            hypotheses,
            presentation,
            structure,
            closed_form,
            extrapolated,
        }),
    })
}

/// The closed-form table entry for these parameters, in canonical form, or
/// `None` when no table row covers them.
pub fn closed_form_structure(p: &CoverParams, d: u64) -> Option<FgAbGroup> {
    let hyp = check_hypotheses(p, d);
    let n = BigInt::from(p.n);
    if hyp.special_case_b112 && d == 0 {
        return Some(FgAbGroup::cyclic(BigInt::from(4)));
    }
    if d == 0 {
        return None;
    }
    match p.g {
        0 => {
            let order = &n * (&n * BigInt::from(d) - 1);
            let order = if d % 2 == 0 {
                BigInt::from(2) * order
            } else {
                order
            };
            Some(FgAbGroup::cyclic(order))
        }
        1 => {
            if hyp.special_case_b212 {
                // Z/3 x Z/2 x Z/2
                let orders = [BigInt::from(3), BigInt::from(2), BigInt::from(2)];
                return Some(product_to_invariant_factors(&orders, 0));
            }
            if !hyp.theorem_range {
                return None;
            }
            let dd = BigInt::from(d);
            let a = &n * (&dd * &n + &dd - BigInt::from(2) * &n);
            let a_half: BigInt = a / 2;
            let orders = if (a_half % 2i32) == BigInt::from(0) {
                // Z/3 x Z/4 x Z/2n²
                [BigInt::from(3), BigInt::from(4), 2 * &n * &n]
            } else {
                // Z/3 x Z/2 x Z/4n²
                [BigInt::from(3), BigInt::from(2), 4 * &n * &n]
            };
            Some(product_to_invariant_factors(&orders, 0))
        }
        g => {
            if !hyp.theorem_range {
                return None;
            }
            let m = if p.n % 2 == 1 { 2 * &n } else { n.clone() };
            if g == 2 {
                let orders = [m, BigInt::from(10)];
                Some(product_to_invariant_factors(&orders, 1))
            } else {
                Some(product_to_invariant_factors(&[m], 2))
            }
        }
    }
}

/// Outcome of comparing the presentation route against the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerificationOutcome {
    /// Both routes produced this canonical form.
    Match(FgAbGroup),
    Mismatch {
        computed: FgAbGroup,
        closed_form: FgAbGroup,
    },
    /// Empty moduli, unsupported case, or no table row to compare against.
    NotCovered,
}

impl VerificationOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            VerificationOutcome::Match(_) => "match",
            VerificationOutcome::Mismatch { .. } => "mismatch",
            VerificationOutcome::NotCovered => "not-covered",
        }
    }

    pub fn is_mismatch(&self) -> bool {
        matches!(self, VerificationOutcome::Mismatch { .. })
    }
}

/// Runs both routes and compares them canonically.
pub fn verify(p: &CoverParams) -> VerificationOutcome {
    match picard_report(p) {
        Err(_) => VerificationOutcome::NotCovered,
        Ok(report) => match report.body {
            None => VerificationOutcome::NotCovered,
            Some(body) => match body.closed_form {
                None => VerificationOutcome::NotCovered,
                Some(cf) if cf == body.structure => VerificationOutcome::Match(cf),
                Some(cf) => VerificationOutcome::Mismatch {
                    computed: body.structure,
                    closed_form: cf,
                },
            },
        },
    }
}

/// Cover parameters for a `(g, n, d)` grid point; the source genus is
/// `h = 1 + n(g−1) + n(n−1)d/2`, which is a non-negative integer for every
/// `d ≥ 1`.
pub fn params_for_grid(g: u64, n: u64, d: u64) -> CoverParams {
    assert!(n >= 2, "cover degree must be ≥ 2");
    assert!(d >= 1, "grid points have d ≥ 1");
    let h = 1 + (n as i128) * (g as i128 - 1) + (n as i128) * (n as i128 - 1) / 2 * (d as i128);
    debug_assert!(h >= 0);
    CoverParams::new(h as u64, g, n).expect("n ≥ 2")
}

/// One grid point of a verification sweep.
#[derive(Clone, Debug)]
pub struct SweepEntry {
    pub g: u64,
    pub n: u64,
    pub d: u64,
    pub h: u64,
    pub outcome: VerificationOutcome,
}

/// Verifies every `(g, n, d)` grid point, in parallel, with results in
/// deterministic grid order regardless of completion order.
pub fn sweep(gs: &[u64], ns: &[u64], ds: &[u64]) -> Vec<SweepEntry> {
    let mut grid = Vec::new();
    for &g in gs {
        for &n in ns {
            for &d in ds {
                grid.push((g, n, d));
            }
        }
    }
    grid.into_par_iter()
        .map(|(g, n, d)| {
            let params = params_for_grid(g, n, d);
            SweepEntry {
                g,
                n,
                d,
                h: params.h(),
                outcome: verify(&params),
            }
        })
        .collect()
}
