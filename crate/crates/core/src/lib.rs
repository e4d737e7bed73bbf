//! Voting rules whose score problems are hard, and the domains where they
//! are not.
//!
//! This crate implements the data model and algorithms for computing Young,
//! strongYoung, Dodgson, weakDodgson, Kemeny and Slater scores and winners:
//!
//! * [`ballots`] — elections over weak-order ballots, pairwise majority
//!   tables, ballot edits, the three consensus objectives, and replayable
//!   score certificates;
//! * [`domains`] — membership tests for the dichotomous / single-peaked /
//!   single-crossing domains, with violation witnesses;
//! * [`oracles`] — exhaustive ground-truth solvers for every score, usable
//!   at desk scale;
//! * [`fast`] — the polynomial-time algorithms that exploit a restricted
//!   domain (approval threshold scans, swap and deletion constructions,
//!   median-voter arguments, score-via-winner reductions);
//! * [`forge`] — generation and verification of elections built from graphs
//!   whose Young scores encode the independence number.
//!
//! The crate is `no_std` (it allocates, but performs no IO); all scores are
//! exact integers and every operation is a deterministic pure function of
//! its inputs.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod ballots;
pub mod domains;
pub mod fast;
pub mod forge;
pub mod oracles;

pub use ballots::{
    Ballot, BallotEdit, Candidate, CandidateId, Certificate, ConsensusObjective, Election,
    ElectionError, MajorityTable, MoveDirection,
};
pub use domains::{DomainError, DomainVerdict, DomainViolation};
pub use oracles::{ConsensusShape, OracleBudget, OracleError};

