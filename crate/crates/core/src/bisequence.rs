//! Diagonal legs and arms as a bisequence, its p-quotient, and the
//! residue-class test for symmetric p-cores.

use std::fmt;

use crate::abacus::check_modulus;
use crate::error::{Error, Result};
use crate::partition::{strictly_decreasing, Partition};

/// `(α₁ > … > α_t | β₁ > … > β_t)`: leg and arm lengths of the diagonal
/// hooks.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Bisequence {
    legs: Vec<usize>,
    arms: Vec<usize>,
}

impl Bisequence {
    pub fn new(legs: Vec<usize>, arms: Vec<usize>) -> Result<Self> {
        if legs.len() != arms.len() {
            return Err(Error::LengthMismatch {
                legs: legs.len(),
                arms: arms.len(),
            });
        }
        if !strictly_decreasing(&legs) || !strictly_decreasing(&arms) {
            return Err(Error::NotStrictlyDecreasing);
        }
        Ok(Bisequence { legs, arms })
    }

    /// Symmetric bisequence `(v | v)`.
    pub fn symmetric(values: Vec<usize>) -> Result<Self> {
        Self::new(values.clone(), values)
    }

    /// `D(λ)`, read from the diagonal hooks of the diagram.
    pub fn of(lambda: &Partition) -> Self {
        let hooks = lambda.diagonal_hooks();
        Bisequence {
            legs: hooks.iter().map(|h| h.leg).collect(),
            arms: hooks.iter().map(|h| h.arm).collect(),
        }
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn len(&self) -> usize {
        self.legs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.legs.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        self.legs == self.arms
    }

    /// Legs and arms swapped; the bisequence of the conjugate.
    pub fn dual(&self) -> Bisequence {
        Bisequence {
            legs: self.arms.clone(),
            arms: self.legs.clone(),
        }
    }

    pub fn partition(&self) -> Partition {
        Partition::from_legs_arms(&self.legs, &self.arms).expect("validated bisequence")
    }

    /// Distributes the entries over `p` runners: an arm `γ + m·p` files
    /// `m` under runner `γ`, a leg `γ + m·p` files `m` under runner
    /// `p - 1 - γ`.
    pub fn quotient(&self, p: usize) -> Result<QuotientBisequence> {
        check_modulus(p)?;
        let mut entries = vec![QuotientEntry::default(); p];
        for &a in &self.legs {
            entries[p - 1 - a % p].legs.push(a / p);
        }
        for &b in &self.arms {
            entries[b % p].arms.push(b / p);
        }
        Ok(QuotientBisequence { entries })
    }

    /// Legs and arms congruent to `gamma` mod `p`.
    pub fn residue_class(&self, p: usize, gamma: usize) -> Result<(Vec<usize>, Vec<usize>)> {
        check_residue(p, gamma)?;
        let pick = |xs: &[usize]| xs.iter().copied().filter(|x| x % p == gamma).collect();
        Ok((pick(&self.legs), pick(&self.arms)))
    }

    /// Quotient entries are nonempty exactly at the residues in `support`.
    pub fn is_concentrated(&self, p: usize, support: &[usize]) -> Result<bool> {
        let q = self.quotient(p)?;
        for &g in support {
            check_residue(p, g)?;
        }
        Ok((0..p).all(|g| q.entries[g].is_empty() != support.contains(&g)))
    }

    /// The residue-`gamma` diagonal entries are exactly `γ, γ+p, …, γ+r·p`.
    /// An empty class counts as packed.
    pub fn is_gamma_packed(&self, p: usize, gamma: usize) -> Result<bool> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetricBisequence);
        }
        let (_, arms) = self.residue_class(p, gamma)?;
        Ok(arms
            .iter()
            .rev()
            .enumerate()
            .all(|(i, &a)| a == gamma + i * p))
    }

    /// Decides whether the symmetric partition with this bisequence is a
    /// p-core, from residue classes alone: whenever class `γ` is occupied
    /// it must be packed and class `p - 1 - γ` must be empty.
    pub fn is_symmetric_p_core(&self, p: usize) -> Result<bool> {
        check_modulus(p)?;
        if !self.is_symmetric() {
            return Err(Error::NotSymmetricBisequence);
        }
        for gamma in 0..p {
            let (_, class) = self.residue_class(p, gamma)?;
            if class.is_empty() {
                continue;
            }
            let (_, dual) = self.residue_class(p, p - 1 - gamma)?;
            if !self.is_gamma_packed(p, gamma)? || !dual.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn check_residue(p: usize, gamma: usize) -> Result<()> {
    check_modulus(p)?;
    if gamma >= p {
        return Err(Error::BadResidue { residue: gamma, p });
    }
    Ok(())
}

impl fmt::Display for Bisequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", join(&self.legs), join(&self.arms))
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// One runner's share of a quotient bisequence. The two sides need not have
/// equal length.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QuotientEntry {
    /// Descending.
    pub legs: Vec<usize>,
    /// Descending.
    pub arms: Vec<usize>,
}

impl QuotientEntry {
    pub fn new(mut legs: Vec<usize>, mut arms: Vec<usize>) -> Self {
        legs.sort_unstable_by(|a, b| b.cmp(a));
        arms.sort_unstable_by(|a, b| b.cmp(a));
        QuotientEntry { legs, arms }
    }

    /// The entry `D(μ)` of a partition `μ`.
    pub fn of(mu: &Partition) -> Self {
        let d = Bisequence::of(mu);
        QuotientEntry {
            legs: d.legs,
            arms: d.arms,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.legs.is_empty() && self.arms.is_empty()
    }

    pub fn is_balanced(&self) -> bool {
        self.legs.len() == self.arms.len()
    }
}

impl fmt::Display for QuotientEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", join(&self.legs), join(&self.arms))
    }
}

/// The p-tuple of runner entries of a bisequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuotientBisequence {
    pub entries: Vec<QuotientEntry>,
}

impl QuotientBisequence {
    pub fn p(&self) -> usize {
        self.entries.len()
    }

    /// Reassembles the bisequence.
    pub fn unquotient(&self) -> Result<Bisequence> {
        let p = self.p();
        check_modulus(p)?;
        let mut legs = Vec::new();
        let mut arms = Vec::new();
        for (e, entry) in self.entries.iter().enumerate() {
            if !strictly_decreasing(&entry.legs) || !strictly_decreasing(&entry.arms) {
                return Err(Error::InconsistentQuotient);
            }
            legs.extend(entry.legs.iter().map(|&m| (p - 1 - e) + m * p));
            arms.extend(entry.arms.iter().map(|&m| e + m * p));
        }
        legs.sort_unstable_by(|a, b| b.cmp(a));
        arms.sort_unstable_by(|a, b| b.cmp(a));
        Bisequence::new(legs, arms).map_err(|_| Error::InconsistentQuotient)
    }
}
