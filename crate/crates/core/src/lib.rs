//! Diagonal hook lengths of self-conjugate partitions, computed from the
//! p-core and p-quotient.
//!
//! A self-conjugate partition is tiled by its diagonal hooks, whose lengths
//! are distinct odd numbers. This crate computes that list straight from a
//! symmetric p-core and a symmetric p-quotient ([`delta_general`]), and
//! carries the machinery to check the answer against a direct count on the
//! Young diagram:
//!
//! * [`partition`]: partitions, hooks, conjugation and the diagonal oracle.
//! * [`beta`]: β-sets, their hooks and the axis θ.
//! * [`abacus`]: runners, cores, quotients and p-hook classification.
//! * [`bisequence`]: diagonal legs and arms, their quotient, and the
//!   residue-class test for symmetric p-cores.
//! * [`formula`]: the closed-form computations.
//! * [`verify`]: the exhaustive comparison harness.
//!
//! ```
//! use symdiag::{delta_general, Partition};
//!
//! let core = Partition::new(vec![1])?;
//! let quotient = vec![Partition::new(vec![1])?, Partition::empty(), Partition::new(vec![1])?];
//! let delta = delta_general(&core, &quotient, 3)?;
//! assert_eq!(delta.lengths(), &[7]);
//! # Ok::<(), symdiag::Error>(())
//! ```

pub mod abacus;
pub mod beta;
pub mod bisequence;
mod error;
pub mod formula;
pub mod notation;
pub mod partition;
pub mod verify;

pub use abacus::{from_core_and_quotient, p_core, p_quotient, Abacus, CoreQuotient};
pub use beta::{Axis, BetaHook, BetaSet};
pub use bisequence::{Bisequence, QuotientBisequence, QuotientEntry};
pub use error::{Error, Result};
pub use formula::{delta_empty_core, delta_general};
pub use partition::{enumerate_partitions, DeltaSet, HookData, Partition};

// The guide's code listings run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/beta-sets.md")]
    mod beta_sets {}
    #[doc = include_str!("../../../book/src/abacus.md")]
    mod abacus {}
    #[doc = include_str!("../../../book/src/bisequences.md")]
    mod bisequences {}
    #[doc = include_str!("../../../book/src/empty-core.md")]
    mod empty_core {}
    #[doc = include_str!("../../../book/src/cores.md")]
    mod cores {}
    #[doc = include_str!("../../../book/src/nonempty-core.md")]
    mod nonempty_core {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
