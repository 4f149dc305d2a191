//! Lower/upper bound synthesis for the least admissible dimension
//! `Delta(j, k)`, with per-bound provenance.
//!
//! The lower bound is the moment-curve count. Upper candidates come
//! from the ideal-membership route (the computed minimal degree and
//! the closed formula) and, for two hyperplanes, from the obstruction
//! machinery: the free-point pipeline for odd `j`, the type-parity
//! test for even `j`, and the self-conjugate-count closed form for
//! `j ≡ 3 (mod 4)`. Candidates the guards rule out are simply absent;
//! a report is never an error.

use crate::dickson;
use crate::orbits::{self, Conventions};
use alloc::vec::Vec;
use core::fmt;

/// Where an upper candidate came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Provenance {
    /// Smallest degree surviving ideal reduction, computed exactly.
    DicksonMinimalD,
    /// The closed formula `2^{k+q-1} + r`.
    IndexFormula,
    /// Odd type-orbit count in the `2d = 3j` regime.
    Delta0Parity,
    /// Nonzero obstruction total in the `2d = 3j + 1` regime.
    Delta1Obstruction,
    /// Nonzero self-conjugate-count pair, the closed form of the
    /// trivial-coefficient case.
    CorollaryClosedForm,
}

impl Provenance {
    pub const fn token(self) -> &'static str {
        match self {
            Provenance::DicksonMinimalD => "dickson-minimal-d",
            Provenance::IndexFormula => "index-formula",
            Provenance::Delta0Parity => "delta0-parity",
            Provenance::Delta1Obstruction => "delta1-obstruction",
            Provenance::CorollaryClosedForm => "corollary-closed-form",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// One certified upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct UpperBound {
    pub value: u64,
    pub provenance: Provenance,
}

/// Bounds on `Delta(j, k)` with provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub j: u64,
    pub k: u32,
    pub lower: u64,
    /// All certified upper bounds, sorted by value.
    pub candidates: Vec<UpperBound>,
}

impl BoundsReport {
    pub fn best(&self) -> Option<u64> {
        self.candidates.first().map(|c| c.value)
    }

    /// `Delta(j, k)` exactly, when the bounds meet.
    pub fn exact(&self) -> Option<u64> {
        self.best().filter(|&b| b == self.lower)
    }
}

/// Auto-computation guards: the obstruction candidates run full
/// enumerations, so the report only includes them below these sizes.
/// Larger cases stay reachable through the dedicated entry points.
const DELTA1_MAX_J: u64 = 13;
const DELTA0_MAX_J: u64 = 24;
const CLOSED_FORM_MAX_M: u64 = 4;

/// Assembles every applicable bound for `(j, k)`.
pub fn bounds_report(j: u64, k: u32, budget: u64) -> BoundsReport {
    let mut candidates = Vec::new();

    if let Ok(d) = dickson::minimal_d_star(j as u32, k, budget) {
        candidates.push(UpperBound {
            value: u64::from(d),
            provenance: Provenance::DicksonMinimalD,
        });
    }
    candidates.push(UpperBound {
        value: dickson::index_formula_bound(j, k),
        provenance: Provenance::IndexFormula,
    });

    if k == 2 {
        if j.is_multiple_of(2) && j <= DELTA0_MAX_J {
            if let Ok(outcome) = orbits::obstruction_delta0((j / 2) as u32) {
                if outcome.admissible {
                    candidates.push(UpperBound {
                        value: 3 * j / 2,
                        provenance: Provenance::Delta0Parity,
                    });
                }
            }
        }
        if j % 2 == 1 && j <= DELTA1_MAX_J {
            if let Ok(outcome) = orbits::obstruction_delta1(j as u32, Conventions::default()) {
                if outcome.admissible {
                    candidates.push(UpperBound {
                        value: (3 * j).div_ceil(2),
                        provenance: Provenance::Delta1Obstruction,
                    });
                }
            }
        }
        // n = (j+1)/2 even: the closed form decides without any
        // enumeration of the solution set.
        if j % 4 == 3 && (j + 1) / 4 <= CLOSED_FORM_MAX_M {
            let (odd, even) = orbits::closed_form_z2z2((j + 1) / 4);
            if odd % 2 == 1 || even % 2 == 1 {
                candidates.push(UpperBound {
                    value: (3 * j).div_ceil(2),
                    provenance: Provenance::CorollaryClosedForm,
                });
            }
        }
    }

    candidates.sort_unstable();
    BoundsReport {
        j,
        k,
        lower: dickson::lower_bound(j, k),
        candidates,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dickson::DEFAULT_MONOMIAL_BUDGET;

    fn report(j: u64, k: u32) -> BoundsReport {
        bounds_report(j, k, DEFAULT_MONOMIAL_BUDGET)
    }

    fn has(report: &BoundsReport, value: u64, provenance: Provenance) -> bool {
        report
            .candidates
            .iter()
            .any(|c| c.value == value && c.provenance == provenance)
    }

    #[test]
    fn five_measures_two_hyperplanes_is_exact() {
        let r = report(5, 2);
        assert_eq!(r.lower, 8);
        assert!(has(&r, 9, Provenance::DicksonMinimalD));
        assert!(has(&r, 8, Provenance::Delta1Obstruction));
        assert_eq!(r.best(), Some(8));
        assert_eq!(r.exact(), Some(8));
    }

    #[test]
    fn fifteen_measures_three_hyperplanes() {
        let r = report(15, 3);
        assert_eq!(r.lower, 35);
        assert!(has(&r, 39, Provenance::IndexFormula));
    }

    #[test]
    fn corollary_equalities() {
        // j = 2^{q+1} - 1 closes the gap at 3 * 2^q - 1.
        for q in 1..=3u32 {
            let j = (1u64 << (q + 1)) - 1;
            let r = report(j, 2);
            let target = 3 * (1u64 << q) - 1;
            assert_eq!(r.lower, target, "j = {j}");
            assert!(has(&r, target, Provenance::CorollaryClosedForm), "j = {j}");
            assert_eq!(r.exact(), Some(target), "j = {j}");
        }
    }

    #[test]
    fn even_measure_parity_candidates() {
        // Powers of two are tight for the type-parity route.
        for m in [1u64, 2, 4] {
            let r = report(2 * m, 2);
            assert!(has(&r, 3 * m, Provenance::Delta0Parity), "m = {m}");
            assert_eq!(r.exact(), Some(3 * m), "m = {m}");
        }
        // m = 3 is inconclusive: no parity candidate.
        let r = report(6, 2);
        assert!(!r
            .candidates
            .iter()
            .any(|c| c.provenance == Provenance::Delta0Parity));
    }

    #[test]
    fn lower_never_exceeds_best() {
        for k in 1..=3 {
            for j in 1..=10 {
                let r = report(j, k);
                if let Some(best) = r.best() {
                    assert!(r.lower <= best, "({j}, {k})");
                }
            }
        }
    }
}
