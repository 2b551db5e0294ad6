//! The p-runner abacus: cores, quotients, reconstruction, and the position
//! of p-hooks relative to the axis.
//!
//! Position `γ + m·p` sits in row `m` of runner `γ`. Quotients are always
//! read from a β-set whose bead count is a positive multiple of `p`; other
//! bead counts rotate the runners.

use std::fmt::Write as _;

use crate::beta::{Axis, BetaHook, BetaSet};
use crate::error::{Error, Result};
use crate::partition::{HookData, Partition};

pub(crate) fn check_modulus(p: usize) -> Result<()> {
    if p < 2 {
        return Err(Error::BadModulus(p));
    }
    Ok(())
}

/// Least positive multiple of `p` that is at least `parts`.
pub fn canonical_bead_count(parts: usize, p: usize) -> usize {
    p * parts.div_ceil(p).max(1)
}

/// A β-set laid out on `p` runners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abacus {
    p: usize,
    beads: BetaSet,
}

impl Abacus {
    /// Canonical abacus of `lambda`.
    pub fn new(lambda: &Partition, p: usize) -> Result<Self> {
        check_modulus(p)?;
        let k = canonical_bead_count(lambda.len(), p);
        Ok(Abacus {
            p,
            beads: BetaSet::of(lambda, k)?,
        })
    }

    /// Lays out an arbitrary β-set; the bead count must be a multiple of `p`.
    pub fn from_beads(beads: BetaSet, p: usize) -> Result<Self> {
        check_modulus(p)?;
        if !beads.len().is_multiple_of(p) {
            return Err(Error::TooFewBeads {
                needed: canonical_bead_count(beads.len(), p),
                given: beads.len(),
            });
        }
        Ok(Abacus { p, beads })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn beads(&self) -> &BetaSet {
        &self.beads
    }

    /// Number of rows needed to show every bead.
    pub fn rows(&self) -> usize {
        self.beads.beads().last().map_or(0, |&x| x / self.p + 1)
    }

    pub fn bead_at(&self, row: usize, runner: usize) -> bool {
        runner < self.p && self.beads.contains(runner + row * self.p)
    }

    /// `X_γ`: the rows of runner `γ` holding a bead.
    pub fn runner(&self, gamma: usize) -> BetaSet {
        BetaSet::from_sorted(
            self.beads
                .beads()
                .iter()
                .filter(|&&x| x % self.p == gamma)
                .map(|&x| x / self.p)
                .collect(),
        )
    }

    /// Every runner pushed up as far as it goes.
    pub fn pushed_up(&self) -> Abacus {
        let mut beads = Vec::with_capacity(self.beads.len());
        for gamma in 0..self.p {
            let count = self.runner(gamma).len();
            beads.extend((0..count).map(|m| gamma + m * self.p));
        }
        beads.sort_unstable();
        Abacus {
            p: self.p,
            beads: BetaSet::from_sorted(beads),
        }
    }

    pub fn core(&self) -> Partition {
        self.pushed_up().beads.partition()
    }

    pub fn quotient(&self) -> Vec<Partition> {
        (0..self.p).map(|g| self.runner(g).partition()).collect()
    }

    /// Text grid: one column per runner, `●` for a bead, `·` for a space,
    /// with a rule drawn where the axis θ crosses the abacus.
    pub fn render(&self) -> String {
        let axis = self.beads.axis();
        // θ + 1/2 = bead count, a multiple of p, so the axis falls between rows
        let axis_row = self.beads.len() / self.p;
        let rows = self.rows().max(axis_row);
        let mut out = String::new();
        for row in 0..rows {
            if row == axis_row && row > 0 {
                rule(&mut out, self.p, axis);
            }
            let cells: Vec<&str> = (0..self.p)
                .map(|g| if self.bead_at(row, g) { "●" } else { "·" })
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        if axis_row == rows {
            rule(&mut out, self.p, axis);
        }
        out
    }
}

fn rule(out: &mut String, p: usize, axis: Axis) {
    let _ = writeln!(out, "{} θ={}", "─".repeat(2 * p - 1), axis);
}

/// A p-core together with the p runners' partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Vec<Partition>,
}

impl CoreQuotient {
    pub fn of(lambda: &Partition, p: usize) -> Result<Self> {
        let abacus = Abacus::new(lambda, p)?;
        Ok(CoreQuotient {
            core: abacus.core(),
            quotient: abacus.quotient(),
        })
    }

    pub fn p(&self) -> usize {
        self.quotient.len()
    }

    /// `|core| + p·Σ|λ_γ|`.
    pub fn weight(&self) -> usize {
        self.core.weight() + self.p() * self.quotient.iter().map(Partition::weight).sum::<usize>()
    }

    pub fn assemble(&self) -> Result<Partition> {
        from_core_and_quotient(&self.core, &self.quotient, self.p())
    }
}

pub fn p_core(lambda: &Partition, p: usize) -> Result<Partition> {
    Ok(Abacus::new(lambda, p)?.core())
}

pub fn p_quotient(lambda: &Partition, p: usize) -> Result<Vec<Partition>> {
    Ok(Abacus::new(lambda, p)?.quotient())
}

/// Direct check: `lambda` has no hook of length `p`.
pub fn is_p_core(lambda: &Partition, p: usize) -> Result<bool> {
    check_modulus(p)?;
    Ok(!lambda.has_hook_of_length(p))
}

pub(crate) fn check_quotient_len(quotient: &[Partition], p: usize) -> Result<()> {
    if quotient.len() != p {
        return Err(Error::WrongQuotientLength {
            expected: p,
            found: quotient.len(),
        });
    }
    Ok(())
}

/// The unique partition with the given p-core and p-quotient.
pub fn from_core_and_quotient(
    core: &Partition,
    quotient: &[Partition],
    p: usize,
) -> Result<Partition> {
    check_modulus(p)?;
    check_quotient_len(quotient, p)?;
    if !is_p_core(core, p)? {
        return Err(Error::NotACore(p));
    }
    let core_abacus = Abacus::new(core, p)?;
    let counts: Vec<usize> = (0..p).map(|g| core_abacus.runner(g).len()).collect();
    // extra full rows on top so that every runner has room for its partition
    let extra = quotient
        .iter()
        .zip(&counts)
        .map(|(q, &c)| q.len().saturating_sub(c))
        .max()
        .unwrap_or(0);
    let mut beads = Vec::new();
    for (gamma, (q, &c)) in quotient.iter().zip(&counts).enumerate() {
        let runner = BetaSet::of(q, c + extra)?;
        beads.extend(runner.beads().iter().map(|&m| gamma + m * p));
    }
    Ok(BetaSet::new(beads)?.partition())
}

/// `λ_γ = (λ_{p-1-γ})*` for every runner.
pub fn is_symmetric_quotient(quotient: &[Partition], p: usize) -> Result<bool> {
    check_modulus(p)?;
    check_quotient_len(quotient, p)?;
    Ok((0..p).all(|g| quotient[g] == quotient[p - 1 - g].conjugate()))
}

/// Where a p-hook `(y, x]` sits relative to θ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HookSide {
    /// `y < θ < x`.
    Straddling,
    /// `θ < y < x`.
    RightOfAxis,
    /// `y < x < θ`.
    LeftOfAxis,
}

/// Where a cell lies inside its own Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellPlacement {
    Diagonal,
    Arm,
    Leg,
}

impl CellPlacement {
    pub fn of(row: usize, col: usize) -> Self {
        match row.cmp(&col) {
            std::cmp::Ordering::Equal => CellPlacement::Diagonal,
            std::cmp::Ordering::Less => CellPlacement::Arm,
            std::cmp::Ordering::Greater => CellPlacement::Leg,
        }
    }
}

/// A p-hook of a symmetric partition with empty core, with the 1-hook
/// `(k-1, k]` it induces on runner `runner`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PHookClass {
    pub side: HookSide,
    pub runner: usize,
    pub k: usize,
    /// The corresponding cell of `λ_runner`.
    pub quotient_hook: HookData,
}

impl PHookClass {
    pub fn placement(&self) -> CellPlacement {
        CellPlacement::of(self.quotient_hook.row, self.quotient_hook.col)
    }
}

/// Classifies the p-hook `h` of the canonical β-set of `lambda`.
pub fn classify_p_hook(lambda: &Partition, p: usize, h: BetaHook) -> Result<PHookClass> {
    let abacus = Abacus::new(lambda, p)?;
    if !lambda.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !abacus.core().is_empty() {
        return Err(Error::NonEmptyCore(p));
    }
    if h.y >= h.x || h.length() != p || !abacus.beads().is_hook(h) {
        return Err(Error::NotAPHook { y: h.y, x: h.x, p });
    }
    let axis = abacus.beads().axis();
    let side = if axis.above(h.y) {
        HookSide::RightOfAxis
    } else if axis.below(h.x) {
        HookSide::LeftOfAxis
    } else {
        HookSide::Straddling
    };
    let runner = h.x % p;
    let k = h.x / p;
    let quotient_hook = abacus.runner(runner).hook_data(BetaHook { y: k - 1, x: k });
    Ok(PHookClass {
        side,
        runner,
        k,
        quotient_hook,
    })
}

/// All p-hooks of the canonical β-set, classified.
pub fn classify_all_p_hooks(lambda: &Partition, p: usize) -> Result<Vec<PHookClass>> {
    let abacus = Abacus::new(lambda, p)?;
    abacus
        .beads()
        .hooks()
        .into_iter()
        .filter(|h| h.length() == p)
        .map(|h| classify_p_hook(lambda, p, h))
        .collect()
}

pub fn render_ascii(lambda: &Partition, p: usize) -> Result<String> {
    Ok(Abacus::new(lambda, p)?.render())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn layout() {
        let a = Abacus::new(&p(&[3, 2, 1]), 3).unwrap();
        assert_eq!(a.beads().beads(), &[1, 3, 5]);
        assert!(a.bead_at(0, 1) && a.bead_at(1, 0) && a.bead_at(1, 2));
        assert!(!a.bead_at(0, 0));
        assert_eq!(
            Abacus::new(&Partition::empty(), 5).unwrap().beads().beads(),
            &[0, 1, 2, 3, 4]
        );
        assert_eq!(
            Abacus::new(&p(&[4, 1, 1, 1]), 3).unwrap().beads().beads(),
            &[0, 1, 3, 4, 5, 9]
        );
        assert_eq!(Abacus::new(&p(&[1]), 1), Err(Error::BadModulus(1)));
    }

    #[test]
    fn cores() {
        assert_eq!(p_core(&p(&[3, 2, 1]), 3).unwrap(), Partition::empty());
        assert_eq!(p_core(&p(&[4, 1, 1, 1]), 3).unwrap(), p(&[1]));
        assert_eq!(p_core(&p(&[2]), 3).unwrap(), p(&[2]));
        assert_eq!(p_core(&p(&[3, 1]), 5).unwrap(), p(&[3, 1]));
        assert_eq!(p_core(&p(&[1]), 0), Err(Error::BadModulus(0)));
    }

    #[test]
    fn quotients() {
        assert_eq!(
            p_quotient(&p(&[3, 2, 1]), 3).unwrap(),
            vec![p(&[1]), p(&[]), p(&[1])]
        );
        assert_eq!(
            p_quotient(&p(&[4, 1, 1, 1]), 3).unwrap(),
            vec![p(&[1]), p(&[]), p(&[1])]
        );
        assert_eq!(
            p_quotient(&Partition::empty(), 5).unwrap(),
            vec![Partition::empty(); 5]
        );
    }

    #[test]
    fn reconstruction() {
        let q = vec![p(&[1]), p(&[]), p(&[1])];
        assert_eq!(
            from_core_and_quotient(&p(&[]), &q, 3).unwrap(),
            p(&[3, 2, 1])
        );
        assert_eq!(
            from_core_and_quotient(&p(&[1]), &q, 3).unwrap(),
            p(&[4, 1, 1, 1])
        );
        assert_eq!(
            from_core_and_quotient(&p(&[3, 1]), &vec![Partition::empty(); 5], 5).unwrap(),
            p(&[3, 1])
        );
        assert_eq!(
            from_core_and_quotient(&p(&[3, 2, 1]), &q, 3),
            Err(Error::NotACore(3))
        );
        assert_eq!(
            from_core_and_quotient(&p(&[]), &q[..2], 3),
            Err(Error::WrongQuotientLength {
                expected: 3,
                found: 2
            })
        );
        let q = vec![p(&[2]), p(&[]), p(&[1, 1])];
        assert_eq!(
            from_core_and_quotient(&p(&[1]), &q, 3).unwrap(),
            p(&[7, 1, 1, 1, 1, 1, 1])
        );
    }

    #[test]
    fn symmetric_quotients() {
        assert!(is_symmetric_quotient(&[p(&[1]), p(&[]), p(&[1])], 3).unwrap());
        let q = [
            p(&[6, 6, 2]),
            p(&[]),
            p(&[]),
            p(&[]),
            p(&[3, 3, 2, 2, 2, 2]),
        ];
        assert!(is_symmetric_quotient(&q, 5).unwrap());
        assert!(!is_symmetric_quotient(&[p(&[1]), p(&[]), p(&[])], 3).unwrap());
        assert!(is_symmetric_quotient(&[p(&[1])], 3).is_err());
    }

    #[test]
    fn straddling_hooks() {
        let l = p(&[3, 2, 1]);
        let c = classify_p_hook(&l, 3, BetaHook { y: 0, x: 3 }).unwrap();
        assert_eq!(c.side, HookSide::Straddling);
        assert_eq!(c.runner, 0);
        assert_eq!(c.placement(), CellPlacement::Diagonal);
        assert_eq!((c.quotient_hook.row, c.quotient_hook.col), (1, 1));
        let c = classify_p_hook(&l, 3, BetaHook { y: 2, x: 5 }).unwrap();
        assert_eq!(c.side, HookSide::Straddling);
        assert_eq!(c.runner, 2);
    }

    #[test]
    fn off_axis_hooks() {
        let q = vec![p(&[2]), p(&[]), p(&[1, 1])];
        let l = from_core_and_quotient(&Partition::empty(), &q, 3).unwrap();
        assert!(l.is_symmetric());
        let all = classify_all_p_hooks(&l, 3).unwrap();
        let right: Vec<_> = all
            .iter()
            .filter(|c| c.side == HookSide::RightOfAxis)
            .collect();
        assert_eq!(right.len(), 1);
        assert_eq!(right[0].runner, 0);
        assert_eq!(right[0].placement(), CellPlacement::Arm);
        assert_eq!(
            (right[0].quotient_hook.row, right[0].quotient_hook.col),
            (1, 2)
        );
        let left: Vec<_> = all
            .iter()
            .filter(|c| c.side == HookSide::LeftOfAxis)
            .collect();
        assert_eq!(left.len(), 1);
        assert_eq!(left[0].runner, 2);
        assert_eq!(left[0].placement(), CellPlacement::Leg);
    }

    #[test]
    fn classification_errors() {
        let h = BetaHook { y: 0, x: 3 };
        assert_eq!(
            classify_p_hook(&p(&[6, 6, 2]), 3, h),
            Err(Error::NotSymmetric)
        );
        assert_eq!(classify_p_hook(&p(&[1]), 3, h), Err(Error::NonEmptyCore(3)));
        assert_eq!(
            classify_p_hook(&p(&[3, 2, 1]), 3, BetaHook { y: 0, x: 1 }),
            Err(Error::NotAPHook { y: 0, x: 1, p: 3 })
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(
            render_ascii(&Partition::empty(), 3).unwrap(),
            "● ● ●\n───── θ=5/2\n"
        );
        assert_eq!(
            render_ascii(&p(&[3, 2, 1]), 3).unwrap(),
            "· ● ·\n───── θ=5/2\n● · ●\n"
        );
        assert_eq!(
            render_ascii(&p(&[4, 1, 1, 1]), 3).unwrap(),
            "● ● ·\n● ● ●\n───── θ=11/2\n· · ·\n● · ·\n"
        );
        assert_eq!(render_ascii(&p(&[1]), 1), Err(Error::BadModulus(1)));
    }
}
