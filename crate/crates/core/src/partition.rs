//! Integer partitions, Young-diagram hooks and the diagonal-hook oracle.
//!
//! Everything formula-based elsewhere in the crate is checked against the
//! plain cell counting done here, so this module deliberately avoids beads,
//! runners and residues.

use std::fmt;

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts. The empty partition is
/// a valid value.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

/// The hook with corner `(row, col)`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HookData {
    pub row: usize,
    pub col: usize,
    pub arm: usize,
    pub leg: usize,
    pub length: usize,
}

impl Partition {
    /// Validates `parts`. Unsorted input is rejected, not sorted.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(Error::NonPositivePart { index });
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NonMonotonic { index: i + 1 });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Builds a partition from parts that may contain trailing zeros.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The dual partition: column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let mut cols = Vec::with_capacity(width);
        for j in 0..width {
            cols.push(self.parts.iter().take_while(|&&p| p > j).count());
        }
        Partition { parts: cols }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.conjugate()
    }

    /// Side of the Durfee square, i.e. the number of diagonal cells.
    pub fn durfee_size(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row - 1) >= col
    }

    /// Hook with corner `(row, col)` (1-based).
    pub fn hook_at(&self, row: usize, col: usize) -> Result<HookData> {
        if !self.contains_cell(row, col) {
            return Err(Error::CellOutOfDiagram { row, col });
        }
        let arm = self.parts[row - 1] - col;
        let leg = self.parts[row..].iter().take_while(|&&p| p >= col).count();
        Ok(HookData {
            row,
            col,
            arm,
            leg,
            length: arm + leg + 1,
        })
    }

    /// Every hook of the diagram, row by row.
    pub fn hooks(&self) -> Vec<HookData> {
        let dual = self.conjugate();
        let mut out = Vec::with_capacity(self.weight());
        for (i, &part) in self.parts.iter().enumerate() {
            for j in 0..part {
                let arm = part - j - 1;
                let leg = dual.parts[j] - i - 1;
                out.push(HookData {
                    row: i + 1,
                    col: j + 1,
                    arm,
                    leg,
                    length: arm + leg + 1,
                });
            }
        }
        out
    }

    /// Direct check by cell counting: does some hook have length `len`?
    pub fn has_hook_of_length(&self, len: usize) -> bool {
        self.hooks().iter().any(|h| h.length == len)
    }

    /// The hooks at the diagonal cells `(i, i)`, outermost first.
    ///
    /// This is the brute-force reference every formula is measured against.
    pub fn diagonal_hooks(&self) -> Vec<HookData> {
        (1..=self.durfee_size())
            .map(|i| {
                self.hook_at(i, i)
                    .expect("diagonal cell inside the Durfee square")
            })
            .collect()
    }

    /// Diagonal hook lengths of a symmetric partition.
    pub fn delta(&self) -> Result<DeltaSet> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        DeltaSet::new(self.diagonal_hooks().iter().map(|h| h.length).collect())
    }

    /// Rebuilds the partition whose diagonal hooks have the given
    /// `(leg, arm)` pairs.
    pub fn from_diagonal(pairs: &[(usize, usize)]) -> Result<Partition> {
        let legs: Vec<usize> = pairs.iter().map(|&(l, _)| l).collect();
        let arms: Vec<usize> = pairs.iter().map(|&(_, a)| a).collect();
        Self::from_legs_arms(&legs, &arms)
    }

    pub(crate) fn from_legs_arms(legs: &[usize], arms: &[usize]) -> Result<Partition> {
        if legs.len() != arms.len() {
            return Err(Error::LengthMismatch {
                legs: legs.len(),
                arms: arms.len(),
            });
        }
        if !strictly_decreasing(legs) || !strictly_decreasing(arms) {
            return Err(Error::NotStrictlyDecreasing);
        }
        let t = legs.len();
        let mut parts: Vec<usize> = arms.iter().enumerate().map(|(i, &a)| a + i + 1).collect();
        // column j (1-based, j <= t) has length legs[j-1] + j
        let depth = legs.first().map_or(0, |&l| l + 1);
        for row in t + 1..=depth {
            parts.push(
                legs.iter()
                    .enumerate()
                    .filter(|&(j, &l)| l + j + 1 >= row)
                    .count(),
            );
        }
        Ok(Partition::from_sorted(parts))
    }

    /// Symmetric partition with the given diagonal hook lengths.
    pub fn from_delta(delta: &DeltaSet) -> Partition {
        let half: Vec<usize> = delta.lengths().iter().map(|&d| (d - 1) / 2).collect();
        Self::from_legs_arms(&half, &half).expect("a delta set has distinct odd lengths")
    }
}

pub(crate) fn strictly_decreasing(xs: &[usize]) -> bool {
    xs.windows(2).all(|w| w[0] > w[1])
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl<const N: usize> TryFrom<[usize; N]> for Partition {
    type Error = Error;

    fn try_from(parts: [usize; N]) -> Result<Self> {
        Partition::new(parts.to_vec())
    }
}

/// Strictly decreasing list of odd diagonal hook lengths.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DeltaSet {
    lengths: Vec<usize>,
}

impl DeltaSet {
    pub fn new(lengths: Vec<usize>) -> Result<Self> {
        if let Some(&d) = lengths.iter().find(|&&d| d % 2 == 0) {
            return Err(Error::InvalidDelta(format!("{d} is not odd")));
        }
        if !strictly_decreasing(&lengths) {
            return Err(Error::InvalidDelta(
                "lengths are not strictly decreasing".into(),
            ));
        }
        Ok(DeltaSet { lengths })
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    /// Sum of the lengths, equal to the weight of the partition described.
    pub fn total(&self) -> usize {
        self.lengths.iter().sum()
    }
}

impl fmt::Display for DeltaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.lengths.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse lexicographic order, optionally only the
/// self-conjugate ones.
pub fn enumerate_partitions(n: usize, symmetric_only: bool) -> impl Iterator<Item = Partition> {
    Partitions::new(n).filter(move |p| !symmetric_only || p.is_symmetric())
}

/// Iterator over the partitions of `n`, largest first part first.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions { next: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // successor: strip trailing 1s, decrement the last part > 1, then
        // refill greedily with parts no larger than it
        let mut succ = current.clone();
        let mut ones = 0;
        while succ.last() == Some(&1) {
            succ.pop();
            ones += 1;
        }
        if let Some(last) = succ.pop() {
            let k = last - 1;
            let mut rest = ones + 1;
            succ.push(k);
            while rest > 0 {
                let piece = rest.min(k);
                succ.push(piece);
                rest -= piece;
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}
