//! Diagonal hook lengths of a symmetric partition computed from its p-core
//! and p-quotient alone, without building the partition.
//!
//! Every diagonal hook of a symmetric `λ` has length `2β + 1` where `β` is
//! its arm. Writing `β = γ + m·p`, the value `m` is filed under runner `γ`
//! of the quotient bisequence. When the core is empty that runner entry is
//! simply the bisequence of the quotient component `λ_γ`, which gives the
//! closed forms in [`delta_concentrated_pair`], [`delta_concentrated_center`]
//! and [`delta_empty_core`].
//!
//! A nonempty symmetric core gives some runners `γ'` a surplus of `d⁰_γ'`
//! beads (and the dual runners the same deficit). [`d0_shift`] transports
//! the entry of `λ_γ'` across that surplus; [`delta_general`] assembles the
//! shifted entries with the untouched ones.

use crate::abacus::{
    check_modulus, check_quotient_len, from_core_and_quotient, is_p_core, is_symmetric_quotient,
};
use crate::bisequence::{Bisequence, QuotientEntry};
use crate::error::{Error, Result};
use crate::partition::{DeltaSet, Partition};

fn check_residue(gamma: usize, p: usize) -> Result<()> {
    check_modulus(p)?;
    if gamma >= p {
        return Err(Error::BadResidue { residue: gamma, p });
    }
    Ok(())
}

fn into_delta(mut lengths: Vec<usize>) -> Result<DeltaSet> {
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    if let Some(w) = lengths.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::InternalInconsistency(format!(
            "diagonal hook length {} produced twice",
            w[0]
        )));
    }
    DeltaSet::new(lengths)
}

/// `δ(λ)` for `λ` with empty core whose quotient is `λ_γ` at runner `γ`,
/// its conjugate at `p - 1 - γ`, and empty elsewhere.
///
/// Each diagonal `(σ | τ)` of `λ_γ` contributes `2(σ+1)p - 2γ - 1` and
/// `2τp + 2γ + 1`.
pub fn delta_concentrated_pair(
    lambda_gamma: &Partition,
    gamma: usize,
    p: usize,
) -> Result<DeltaSet> {
    check_residue(gamma, p)?;
    if 2 * gamma + 1 == p {
        return Err(Error::CenterResidue(gamma));
    }
    into_delta(pair_lengths(lambda_gamma, gamma, p))
}

fn pair_lengths(lambda_gamma: &Partition, gamma: usize, p: usize) -> Vec<usize> {
    let d = Bisequence::of(lambda_gamma);
    let mut out = Vec::with_capacity(2 * d.len());
    for (&sigma, &tau) in d.legs().iter().zip(d.arms()) {
        out.push(2 * (sigma + 1) * p - 2 * gamma - 1);
        out.push(2 * tau * p + 2 * gamma + 1);
    }
    out
}

/// `δ(λ)` for `λ` with empty core whose only nonempty quotient component is
/// the symmetric `λ_c` on the middle runner `(p-1)/2`: each diagonal
/// `(m | m)` of `λ_c` contributes `(2m+1)·p`.
pub fn delta_concentrated_center(lambda_c: &Partition, p: usize) -> Result<DeltaSet> {
    check_modulus(p)?;
    if p.is_multiple_of(2) {
        return Err(Error::EvenModulus(p));
    }
    if !lambda_c.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    into_delta(center_lengths(lambda_c, p))
}

fn center_lengths(lambda_c: &Partition, p: usize) -> Vec<usize> {
    Bisequence::of(lambda_c)
        .arms()
        .iter()
        .map(|&m| (2 * m + 1) * p)
        .collect()
}

/// `δ(λ)` for the symmetric partition with empty p-core and the given
/// symmetric quotient: the disjoint union of the pair contributions of
/// runners `γ < p - 1 - γ` and the middle-runner contribution.
pub fn delta_empty_core(quotient: &[Partition], p: usize) -> Result<DeltaSet> {
    if !is_symmetric_quotient(quotient, p)? {
        return Err(Error::NotSymmetricQuotient);
    }
    let mut lengths = Vec::new();
    for gamma in (0..p).take_while(|&g| 2 * g + 1 < p) {
        lengths.extend(pair_lengths(&quotient[gamma], gamma, p));
    }
    if p % 2 == 1 {
        lengths.extend(center_lengths(&quotient[p / 2], p));
    }
    into_delta(lengths)
}

/// Per-residue diagonal counts `d⁰_γ` of a symmetric p-core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreCounts {
    d0: Vec<usize>,
}

impl CoreCounts {
    pub fn p(&self) -> usize {
        self.d0.len()
    }

    pub fn d0(&self) -> &[usize] {
        &self.d0
    }

    /// Runners carrying a surplus (`d⁰ > 0`).
    pub fn charged(&self) -> Vec<usize> {
        (0..self.p()).filter(|&g| self.d0[g] > 0).collect()
    }

    /// Duals of the charged runners.
    pub fn charged_duals(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.charged().iter().map(|&g| self.p() - 1 - g).collect();
        out.sort_unstable();
        out
    }

    /// Runners neither charged nor dual to a charged runner.
    pub fn neutral(&self) -> Vec<usize> {
        let p = self.p();
        (0..p)
            .filter(|&g| self.d0[g] == 0 && self.d0[p - 1 - g] == 0)
            .collect()
    }
}

/// Counts the diagonal arms of `core` in each residue class mod `p`.
pub fn core_counts(core: &Partition, p: usize) -> Result<CoreCounts> {
    check_modulus(p)?;
    if !core.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !is_p_core(core, p)? {
        return Err(Error::NotACore(p));
    }
    let mut d0 = vec![0; p];
    for &beta in Bisequence::of(core).arms() {
        d0[beta % p] += 1;
    }
    let counts = CoreCounts { d0 };
    if counts.charged().iter().any(|&g| counts.d0[p - 1 - g] > 0) {
        return Err(Error::InternalInconsistency(
            "a core has diagonal arms in dual residue classes".into(),
        ));
    }
    Ok(counts)
}

/// Legs of a runner entry split at `d⁰`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSets {
    /// `s` in `0..d⁰` that are not legs. Descending.
    pub promoted: Vec<usize>,
    /// Legs `t ≥ d⁰`. Descending.
    pub retained: Vec<usize>,
}

impl ShiftSets {
    pub fn new(legs: &[usize], d0: usize) -> Self {
        ShiftSets {
            promoted: (0..d0).rev().filter(|s| !legs.contains(s)).collect(),
            retained: legs.iter().copied().filter(|&t| t >= d0).collect(),
        }
    }
}

/// Moves the reference point of a runner entry `d0` rows up.
///
/// Arms `σ` become `σ + d0`; every `s < d0` that is not a leg becomes the
/// arm `d0 - s - 1`; legs `t ≥ d0` become `t - d0`; legs below `d0` are
/// absorbed.
pub fn d0_shift(entry: &QuotientEntry, d0: usize) -> QuotientEntry {
    let sets = ShiftSets::new(&entry.legs, d0);
    let mut arms: Vec<usize> = entry.arms.iter().map(|&s| s + d0).collect();
    arms.extend(sets.promoted.iter().map(|&s| d0 - s - 1));
    let legs = sets.retained.iter().map(|&t| t - d0).collect();
    QuotientEntry::new(legs, arms)
}

fn validate_inputs(core: &Partition, quotient: &[Partition], p: usize) -> Result<()> {
    check_modulus(p)?;
    check_quotient_len(quotient, p)?;
    if !core.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !is_p_core(core, p)? {
        return Err(Error::NotACore(p));
    }
    if !is_symmetric_quotient(quotient, p)? {
        return Err(Error::NotSymmetricQuotient);
    }
    Ok(())
}

/// Runner entries of the symmetric partition with the given core and
/// quotient, computed without reconstructing it. Only the arm side of each
/// entry is filled in; it determines everything for a symmetric partition.
pub fn runner_arms(core: &Partition, quotient: &[Partition], p: usize) -> Result<Vec<Vec<usize>>> {
    validate_inputs(core, quotient, p)?;
    let counts = core_counts(core, p)?;
    let mut arms = vec![Vec::new(); p];
    for gamma in 0..p {
        let d0 = counts.d0[gamma];
        if d0 > 0 {
            let shifted = d0_shift(&QuotientEntry::of(&quotient[gamma]), d0);
            arms[gamma] = shifted.arms;
            // legs filed under γ are arms of residue p - 1 - γ
            arms[p - 1 - gamma] = shifted.legs;
        } else if counts.d0[p - 1 - gamma] == 0 {
            arms[gamma] = Bisequence::of(&quotient[gamma]).arms().to_vec();
        }
    }
    Ok(arms)
}

/// `δ(λ)` of the symmetric partition with p-core `core` and p-quotient
/// `quotient`.
pub fn delta_general(core: &Partition, quotient: &[Partition], p: usize) -> Result<DeltaSet> {
    validate_inputs(core, quotient, p)?;
    if core.is_empty() {
        return delta_empty_core(quotient, p);
    }
    let arms = runner_arms(core, quotient, p)?;
    let lengths: Vec<usize> = arms
        .iter()
        .enumerate()
        .flat_map(|(gamma, ms)| ms.iter().map(move |&m| 2 * (gamma + m * p) + 1))
        .collect();
    let expected = core.weight() + p * quotient.iter().map(Partition::weight).sum::<usize>();
    let delta = into_delta(lengths)?;
    if delta.total() != expected {
        return Err(Error::InternalInconsistency(format!(
            "diagonal hooks sum to {} but the partition has weight {expected}",
            delta.total()
        )));
    }
    Ok(delta)
}

/// Reference route: rebuild the partition and read its diagonal.
pub fn delta_by_reconstruction(
    core: &Partition,
    quotient: &[Partition],
    p: usize,
) -> Result<(Partition, DeltaSet)> {
    validate_inputs(core, quotient, p)?;
    let lambda = from_core_and_quotient(core, quotient, p)?;
    let delta = lambda.delta()?;
    Ok((lambda, delta))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn e() -> Partition {
        Partition::empty()
    }

    fn lengths(d: DeltaSet) -> Vec<usize> {
        d.lengths().to_vec()
    }

    fn five_core() -> Partition {
        Partition::from_delta(&DeltaSet::new(vec![69, 59, 49, 39, 29, 27, 19, 17, 9, 7]).unwrap())
    }

    fn weight_190_quotient() -> Vec<Partition> {
        vec![
            p(&[6, 6, 2]),
            p(&[3]),
            p(&[2, 2]),
            p(&[1, 1, 1]),
            p(&[3, 3, 2, 2, 2, 2]),
        ]
    }

    #[test]
    fn pair_formula() {
        assert_eq!(
            lengths(delta_concentrated_pair(&p(&[6, 6, 2]), 0, 5).unwrap()),
            vec![51, 41, 29, 19]
        );
        assert_eq!(
            lengths(delta_concentrated_pair(&p(&[1]), 0, 3).unwrap()),
            vec![5, 1]
        );
        assert!(delta_concentrated_pair(&e(), 1, 4).unwrap().is_empty());
        assert_eq!(
            delta_concentrated_pair(&p(&[1]), 2, 5),
            Err(Error::CenterResidue(2))
        );
        assert_eq!(
            delta_concentrated_pair(&p(&[1]), 5, 5),
            Err(Error::BadResidue { residue: 5, p: 5 })
        );
    }

    #[test]
    fn center_formula() {
        assert_eq!(
            lengths(delta_concentrated_center(&p(&[2, 2]), 5).unwrap()),
            vec![15, 5]
        );
        assert_eq!(
            lengths(delta_concentrated_center(&p(&[1]), 3).unwrap()),
            vec![3]
        );
        assert!(delta_concentrated_center(&e(), 7).unwrap().is_empty());
        assert_eq!(
            delta_concentrated_center(&p(&[1]), 4),
            Err(Error::EvenModulus(4))
        );
        assert_eq!(
            delta_concentrated_center(&p(&[2]), 5),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn empty_core_formula() {
        let d = delta_empty_core(&weight_190_quotient(), 5).unwrap();
        assert_eq!(lengths(d.clone()), vec![51, 41, 29, 23, 19, 15, 7, 5]);
        assert_eq!(d.total(), 190);
        assert_eq!(
            lengths(delta_empty_core(&[p(&[1]), e(), p(&[1])], 3).unwrap()),
            vec![5, 1]
        );
        assert!(delta_empty_core(&vec![e(); 5], 5).unwrap().is_empty());
        assert_eq!(
            delta_empty_core(&[p(&[1]), e(), e()], 3),
            Err(Error::NotSymmetricQuotient)
        );
        assert_eq!(
            delta_empty_core(&[e(), e()], 3),
            Err(Error::WrongQuotientLength {
                expected: 3,
                found: 2
            })
        );
        // even modulus, no middle runner
        assert_eq!(
            lengths(delta_empty_core(&[p(&[1]), p(&[1])], 2).unwrap()),
            vec![3, 1]
        );
    }

    #[test]
    fn counts() {
        let c = core_counts(&p(&[1]), 3).unwrap();
        assert_eq!(c.d0(), &[1, 0, 0]);
        assert_eq!(c.charged(), vec![0]);
        assert_eq!(c.charged_duals(), vec![2]);
        assert_eq!(c.neutral(), vec![1]);
        let c = core_counts(&five_core(), 5).unwrap();
        assert_eq!(c.d0(), &[0, 0, 0, 3, 7]);
        assert_eq!(c.charged(), vec![3, 4]);
        assert_eq!(c.neutral(), vec![2]);
        let c = core_counts(&e(), 7).unwrap();
        assert_eq!(c.d0(), &[0; 7]);
        assert_eq!(c.neutral(), (0..7).collect::<Vec<_>>());
        assert_eq!(core_counts(&p(&[3, 2, 1]), 3), Err(Error::NotACore(3)));
        assert_eq!(core_counts(&p(&[2]), 3), Err(Error::NotSymmetric));
    }

    #[test]
    fn shift_sets() {
        let s = ShiftSets::new(&[5, 4], 7);
        assert_eq!(s.promoted, vec![6, 3, 2, 1, 0]);
        assert!(s.retained.is_empty());
        let s = ShiftSets::new(&[4, 1], 2);
        assert_eq!(s.promoted, vec![0]);
        assert_eq!(s.retained, vec![4]);
    }

    #[test]
    fn shifting_entries() {
        let out = d0_shift(&QuotientEntry::new(vec![0], vec![0]), 1);
        assert_eq!(out, QuotientEntry::new(vec![], vec![1]));
        let out = d0_shift(&QuotientEntry::new(vec![5, 4], vec![2, 1]), 7);
        assert_eq!(out.arms, vec![9, 8, 6, 5, 4, 3, 0]);
        assert!(out.legs.is_empty());
        let out = d0_shift(&QuotientEntry::default(), 1);
        assert_eq!(out, QuotientEntry::new(vec![], vec![0]));
        let out = d0_shift(&QuotientEntry::new(vec![2], vec![0]), 3);
        assert_eq!(out.arms, vec![3, 2, 1]);
    }

    #[test]
    fn general_formula() {
        let q = vec![p(&[1]), e(), p(&[1])];
        assert_eq!(lengths(delta_general(&p(&[1]), &q, 3).unwrap()), vec![7]);
        let q = vec![p(&[2]), e(), p(&[1, 1])];
        assert_eq!(lengths(delta_general(&p(&[1]), &q, 3).unwrap()), vec![13]);
        let d = delta_general(&five_core(), &weight_190_quotient(), 5).unwrap();
        assert_eq!(
            lengths(d.clone()),
            vec![99, 89, 69, 59, 49, 39, 37, 27, 17, 15, 9, 5]
        );
        assert_eq!(d.total(), 514);
    }

    #[test]
    fn general_formula_rejects_bad_input() {
        let q = vec![p(&[1]), e(), p(&[1])];
        assert_eq!(
            delta_general(&p(&[3, 2, 1]), &q, 3),
            Err(Error::NotACore(3))
        );
        assert_eq!(delta_general(&p(&[2]), &q, 3), Err(Error::NotSymmetric));
        assert_eq!(
            delta_general(&e(), &[p(&[1]), e(), e()], 3),
            Err(Error::NotSymmetricQuotient)
        );
        assert_eq!(
            delta_general(&e(), &q, 5),
            Err(Error::WrongQuotientLength {
                expected: 5,
                found: 3
            })
        );
    }

    #[test]
    fn reconstruction_route() {
        let (lambda, d) = delta_by_reconstruction(&p(&[1]), &[p(&[1]), e(), p(&[1])], 3).unwrap();
        assert_eq!(lambda, p(&[4, 1, 1, 1]));
        assert_eq!(lengths(d), vec![7]);
    }
}
