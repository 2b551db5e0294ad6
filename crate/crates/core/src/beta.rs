//! β-sets read as strings of beads and spaces.
//!
//! A β-set with `k` beads encodes a partition through its first-column hook
//! lengths. Prepending a bead at 0 and shifting everything else right by one
//! encodes the same partition, so every routine here accepts any
//! representative.

use std::fmt;

use crate::bisequence::Bisequence;
use crate::error::{Error, Result};
use crate::partition::{HookData, Partition};

/// Finite set of bead positions, kept sorted ascending.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BetaSet {
    beads: Vec<usize>,
}

/// A hook `(y, x]`: `x` is a bead, `y < x` is a space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BetaHook {
    pub y: usize,
    pub x: usize,
}

impl BetaHook {
    pub fn length(&self) -> usize {
        self.x - self.y
    }
}

/// The half-integer θ stored as the odd integer 2θ.
///
/// The empty β-set has θ = -1/2, hence the signed field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Axis {
    pub two_theta: i64,
}

impl Axis {
    /// Largest position left of the axis, θ - 1/2.
    pub fn floor(&self) -> i64 {
        (self.two_theta - 1) / 2
    }

    /// Smallest position right of the axis, θ + 1/2.
    pub fn ceil(&self) -> i64 {
        (self.two_theta + 1) / 2
    }

    /// Is `z` to the right of the axis?
    pub fn below(&self, z: usize) -> bool {
        2 * (z as i64) < self.two_theta
    }

    pub fn above(&self, z: usize) -> bool {
        2 * (z as i64) > self.two_theta
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.two_theta < 0 {
            write!(f, "-{}/2", -self.two_theta)
        } else {
            write!(f, "{}/2", self.two_theta)
        }
    }
}

impl BetaSet {
    /// Builds a β-set from distinct positions in any order.
    pub fn new(mut beads: Vec<usize>) -> Result<Self> {
        beads.sort_unstable();
        if beads.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotStrictlyDecreasing);
        }
        Ok(BetaSet { beads })
    }

    pub(crate) fn from_sorted(beads: Vec<usize>) -> Self {
        debug_assert!(beads.windows(2).all(|w| w[0] < w[1]));
        BetaSet { beads }
    }

    /// The first-column β-set of `lambda` with `k` beads.
    pub fn of(lambda: &Partition, k: usize) -> Result<Self> {
        if k < lambda.len() {
            return Err(Error::TooFewBeads {
                needed: lambda.len(),
                given: k,
            });
        }
        let mut beads: Vec<usize> = (0..k).map(|i| lambda.part(i) + k - 1 - i).collect();
        beads.reverse();
        Ok(BetaSet { beads })
    }

    pub fn beads(&self) -> &[usize] {
        &self.beads
    }

    pub fn len(&self) -> usize {
        self.beads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beads.is_empty()
    }

    pub fn contains(&self, z: usize) -> bool {
        self.beads.binary_search(&z).is_ok()
    }

    /// The partition this β-set encodes.
    pub fn partition(&self) -> Partition {
        let parts = self
            .beads
            .iter()
            .rev()
            .enumerate()
            .map(|(i, &x)| x - (self.beads.len() - 1 - i))
            .collect();
        Partition::from_sorted(parts)
    }

    /// Equivalent β-set with one more bead: everything moves right and a
    /// bead appears at 0.
    pub fn shifted(&self) -> BetaSet {
        self.shifted_by(1)
    }

    pub fn shifted_by(&self, s: usize) -> BetaSet {
        let mut beads: Vec<usize> = (0..s).collect();
        beads.extend(self.beads.iter().map(|&x| x + s));
        BetaSet { beads }
    }

    /// Representative without a leading run of beads at 0.
    pub fn minimal(&self) -> BetaSet {
        let run = self
            .beads
            .iter()
            .enumerate()
            .take_while(|&(i, &x)| i == x)
            .count();
        BetaSet {
            beads: self.beads[run..].iter().map(|&x| x - run).collect(),
        }
    }

    /// All hooks `(y, x]`, ordered by bead then by space.
    pub fn hooks(&self) -> Vec<BetaHook> {
        let mut out = Vec::new();
        for &x in &self.beads {
            for y in 0..x {
                if !self.contains(y) {
                    out.push(BetaHook { y, x });
                }
            }
        }
        out
    }

    pub fn is_hook(&self, h: BetaHook) -> bool {
        h.y < h.x && self.contains(h.x) && !self.contains(h.y)
    }

    /// Corner, arm and leg of the diagram hook matching `h`, by counting
    /// beads and spaces around it.
    pub fn hook_data(&self, h: BetaHook) -> HookData {
        let row = self.beads.iter().filter(|&&z| z >= h.x).count();
        let beads_upto_y = self.beads.iter().filter(|&&z| z <= h.y).count();
        let col = h.y + 1 - beads_upto_y;
        let leg = self.beads.iter().filter(|&&z| h.y < z && z < h.x).count();
        let arm = h.length() - 1 - leg;
        HookData {
            row,
            col,
            arm,
            leg,
            length: h.length(),
        }
    }

    /// Moves the bead at `x` to the space `y`.
    pub fn remove_hook(&self, h: BetaHook) -> Result<BetaSet> {
        if !self.is_hook(h) {
            return Err(Error::NotAPHook {
                y: h.y,
                x: h.x,
                p: h.x.saturating_sub(h.y),
            });
        }
        let mut beads: Vec<usize> = self.beads.iter().copied().filter(|&z| z != h.x).collect();
        beads.push(h.y);
        beads.sort_unstable();
        Ok(BetaSet { beads })
    }

    /// Locates θ by sweeping right from just before the first space until
    /// the beads to its right balance the spaces to its left.
    pub fn axis(&self) -> Axis {
        let first_space = self
            .beads
            .iter()
            .enumerate()
            .take_while(|&(i, &x)| i == x)
            .count();
        // θ sits between `pos - 1` and `pos`
        let mut pos = first_space;
        let mut beads_right = self.beads.len() - first_space;
        let mut spaces_left = 0;
        while beads_right != spaces_left {
            if self.contains(pos) {
                beads_right -= 1;
            } else {
                spaces_left += 1;
            }
            pos += 1;
        }
        Axis {
            two_theta: 2 * pos as i64 - 1,
        }
    }

    /// `X₊`: beads right of θ, descending. `X₋`: spaces left of θ,
    /// ascending. Both have the same size.
    pub fn plus_minus(&self) -> (Vec<usize>, Vec<usize>) {
        let axis = self.axis();
        let plus: Vec<usize> = self
            .beads
            .iter()
            .rev()
            .copied()
            .filter(|&z| axis.above(z))
            .collect();
        let minus: Vec<usize> = (0..axis.ceil().max(0) as usize)
            .filter(|&z| !self.contains(z))
            .collect();
        (plus, minus)
    }

    /// Diagonal legs and arms read off as distances from θ.
    pub fn bisequence(&self) -> Bisequence {
        let axis = self.axis();
        let (plus, minus) = self.plus_minus();
        let legs = minus
            .iter()
            .map(|&y| (axis.floor() - y as i64) as usize)
            .collect();
        let arms = plus
            .iter()
            .map(|&y| (y as i64 - axis.ceil()) as usize)
            .collect();
        Bisequence::new(legs, arms).expect("positions around θ give a bisequence")
    }

    /// True when reflecting through θ swaps beads and spaces.
    pub fn is_symmetric(&self) -> bool {
        let top = self.axis().two_theta;
        // z mirrors to 2θ - z; past 2θ the mirror is negative, hence a bead
        if self.beads.last().is_some_and(|&z| z as i64 > top) {
            return false;
        }
        (0..=top).all(|z| self.contains(z as usize) != self.contains((top - z) as usize))
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.beads.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}
