//! Exhaustive comparison of the formulas against the diagram oracle, and the
//! report produced for a single (core, quotient) input.

use std::fmt;

use crate::abacus::{from_core_and_quotient, is_p_core, CoreQuotient};
use crate::bisequence::Bisequence;
use crate::error::Result;
use crate::formula::{delta_by_reconstruction, delta_general};
use crate::partition::{enumerate_partitions, DeltaSet, Partition};

/// Which route(s) a delta computation takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Formula,
    Oracle,
    Both,
}

/// Result of computing δ for one input. Flags are computed, never assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaReport {
    pub p: usize,
    pub core: Partition,
    pub quotient: Vec<Partition>,
    /// The reconstructed partition, when the oracle route ran.
    pub partition: Option<Partition>,
    pub delta_formula: Option<DeltaSet>,
    pub delta_oracle: Option<DeltaSet>,
    /// `None` unless both routes ran.
    pub agreement: Option<bool>,
    /// Every computed list sums to `|core| + p·Σ|λ_γ|`.
    pub conservation: bool,
    pub weight: usize,
}

impl DeltaReport {
    pub fn compute(
        core: &Partition,
        quotient: &[Partition],
        p: usize,
        method: Method,
    ) -> Result<Self> {
        let delta_formula = match method {
            Method::Formula | Method::Both => Some(delta_general(core, quotient, p)?),
            Method::Oracle => None,
        };
        let (partition, delta_oracle) = match method {
            Method::Oracle | Method::Both => {
                let (lambda, d) = delta_by_reconstruction(core, quotient, p)?;
                (Some(lambda), Some(d))
            }
            Method::Formula => (None, None),
        };
        let cq = CoreQuotient {
            core: core.clone(),
            quotient: quotient.to_vec(),
        };
        let weight = cq.weight();
        let conservation = delta_formula
            .iter()
            .chain(&delta_oracle)
            .all(|d| d.total() == weight);
        let agreement = match (&delta_formula, &delta_oracle) {
            (Some(f), Some(o)) => Some(f == o),
            _ => None,
        };
        Ok(DeltaReport {
            p,
            core: cq.core,
            quotient: cq.quotient,
            partition,
            delta_formula,
            delta_oracle,
            agreement,
            conservation,
            weight,
        })
    }
}

/// The individual checks run on each (λ, p) cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    FormulaMatchesOracle,
    Conservation,
    Roundtrip,
    WeightIdentity,
    CoreCriterion,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Check::FormulaMatchesOracle => "formula-vs-oracle",
            Check::Conservation => "conservation",
            Check::Roundtrip => "roundtrip",
            Check::WeightIdentity => "weight-identity",
            Check::CoreCriterion => "core-criterion",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub lambda: Partition,
    pub p: usize,
    pub check: Check,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} failed for λ={} p={}: {}",
            self.check, self.lambda, self.p, self.detail
        )
    }
}

/// Runs every check on one symmetric partition and modulus.
pub fn check_cell(lambda: &Partition, p: usize) -> Vec<Failure> {
    let mut failures = Vec::new();
    let mut fail = |check, detail: String| {
        failures.push(Failure {
            lambda: lambda.clone(),
            p,
            check,
            detail,
        })
    };
    let cq = match CoreQuotient::of(lambda, p) {
        Ok(cq) => cq,
        Err(e) => {
            fail(Check::Roundtrip, e.to_string());
            return failures;
        }
    };
    let n = lambda.weight();
    if cq.weight() != n {
        fail(Check::WeightIdentity, format!("{} != {n}", cq.weight()));
    }
    match from_core_and_quotient(&cq.core, &cq.quotient, p) {
        Ok(back) if back == *lambda => {}
        Ok(back) => fail(Check::Roundtrip, format!("rebuilt {back}")),
        Err(e) => fail(Check::Roundtrip, e.to_string()),
    }
    let oracle = lambda.delta();
    match (delta_general(&cq.core, &cq.quotient, p), &oracle) {
        (Ok(formula), Ok(oracle)) => {
            if formula != *oracle {
                fail(
                    Check::FormulaMatchesOracle,
                    format!("formula {formula}, oracle {oracle}"),
                );
            }
            if formula.total() != n {
                fail(
                    Check::Conservation,
                    format!("formula sums to {}", formula.total()),
                );
            }
        }
        (Err(e), _) => fail(Check::FormulaMatchesOracle, format!("formula error: {e}")),
        (_, Err(e)) => fail(Check::FormulaMatchesOracle, format!("oracle error: {e}")),
    }
    let criterion = Bisequence::of(lambda).is_symmetric_p_core(p);
    let direct = is_p_core(lambda, p);
    match (criterion, direct) {
        (Ok(c), Ok(d)) if c == d => {}
        (c, d) => fail(
            Check::CoreCriterion,
            format!("criterion {c:?}, direct {d:?}"),
        ),
    }
    failures
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub n_max: usize,
    pub moduli: Vec<usize>,
    pub cells: usize,
    /// In (n, λ, p) order.
    pub failures: Vec<Failure>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "checked {} (λ,p) cells, {} failures",
            self.cells,
            self.failures.len()
        )
    }
}

/// Checks every symmetric partition of every `n ≤ n_max` against each
/// modulus in `moduli`.
pub fn sweep(n_max: usize, moduli: &[usize]) -> SweepSummary {
    let mut summary = SweepSummary {
        n_max,
        moduli: moduli.to_vec(),
        ..SweepSummary::default()
    };
    for n in 0..=n_max {
        for lambda in enumerate_partitions(n, true) {
            for &p in moduli {
                summary.cells += 1;
                summary.failures.extend(check_cell(&lambda, p));
            }
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn report_both_routes() {
        let r =
            DeltaReport::compute(&p(&[1]), &[p(&[1]), p(&[]), p(&[1])], 3, Method::Both).unwrap();
        assert_eq!(r.agreement, Some(true));
        assert!(r.conservation);
        assert_eq!(r.partition, Some(p(&[4, 1, 1, 1])));
        assert_eq!(r.weight, 7);
    }

    #[test]
    fn report_single_route() {
        let r =
            DeltaReport::compute(&p(&[]), &[p(&[1]), p(&[]), p(&[1])], 3, Method::Formula).unwrap();
        assert_eq!(r.agreement, None);
        assert!(r.partition.is_none());
        assert_eq!(r.delta_formula.unwrap().lengths(), &[5, 1]);
    }

    #[test]
    fn small_sweep_is_clean() {
        let s = sweep(12, &[2, 3, 5]);
        assert!(s.passed(), "{:?}", s.failures.first());
        assert_eq!(
            s.to_string(),
            format!("checked {} (λ,p) cells, 0 failures", s.cells)
        );
    }

    #[test]
    fn empty_range() {
        let s = sweep(0, &[3, 5]);
        assert_eq!(s.cells, 2);
        assert!(s.passed());
    }
}
