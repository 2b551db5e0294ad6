use thiserror::Error;

/// Errors reported by the partition, abacus and formula routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing (part {index} exceeds its predecessor)")]
    NonMonotonic { index: usize },
    #[error("part {index} is not positive")]
    NonPositivePart { index: usize },
    #[error("cell ({row}, {col}) is not in the Young diagram")]
    CellOutOfDiagram { row: usize, col: usize },
    #[error("sequence is not strictly decreasing")]
    NotStrictlyDecreasing,
    #[error("legs and arms differ in length ({legs} vs {arms})")]
    LengthMismatch { legs: usize, arms: usize },
    #[error("a beta-set with {given} beads cannot hold a partition with {needed} parts")]
    TooFewBeads { needed: usize, given: usize },
    #[error("modulus {0} is invalid, p must be at least 2")]
    BadModulus(usize),
    #[error("modulus {0} is even, an odd modulus is required")]
    EvenModulus(usize),
    #[error("residue {residue} is out of range for p = {p}")]
    BadResidue { residue: usize, p: usize },
    #[error("residue {0} is the self-dual runner")]
    CenterResidue(usize),
    #[error("partition is not a {0}-core")]
    NotACore(usize),
    #[error("partition is not symmetric")]
    NotSymmetric,
    #[error("partition has a nonempty {0}-core")]
    NonEmptyCore(usize),
    #[error("({y}, {x}] is not a hook of length {p}")]
    NotAPHook { y: usize, x: usize, p: usize },
    #[error("quotient has {found} components, expected {expected}")]
    WrongQuotientLength { expected: usize, found: usize },
    #[error("quotient is not symmetric")]
    NotSymmetricQuotient,
    #[error("bisequence is not symmetric")]
    NotSymmetricBisequence,
    #[error("quotient entries do not assemble into a bisequence")]
    InconsistentQuotient,
    #[error("invalid diagonal hook list: {0}")]
    InvalidDelta(String),
    #[error("syntax error at position {position}: {reason}")]
    Syntax { position: usize, reason: String },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
