//! Membership tests for the restricted preference domains, with violation
//! witnesses, plus median-voter location.

use alloc::vec::Vec;
use core::fmt;

use crate::ballots::{CandidateId, Election};

/// Outcome of a domain check. When `holds` is false the violation is an
/// independently checkable witness against the election.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DomainVerdict {
    pub holds: bool,
    pub violation: Option<DomainViolation>,
}

impl DomainVerdict {
    fn holds() -> Self {
        DomainVerdict {
            holds: true,
            violation: None,
        }
    }

    fn violated(violation: DomainViolation) -> Self {
        DomainVerdict {
            holds: false,
            violation: Some(violation),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DomainViolation {
    /// A ballot with more groups than the k-chotomous bound allows.
    TooManyGroups { voter: usize, groups: usize },
    /// An axis triple `(a,b,c)` (with `b` between `a` and `c` on the axis)
    /// where the voter states `a > b` but not `b > c`.
    PeakViolation {
        voter: usize,
        triple: (CandidateId, CandidateId, CandidateId),
    },
    /// A candidate pair whose preference sequence along the voter order
    /// changes direction twice: once between voters `crossings.0` and
    /// `crossings.0 + 1`, and again between `crossings.1` and
    /// `crossings.1 + 1`.
    CrossingViolation {
        pair: (CandidateId, CandidateId),
        crossings: (usize, usize),
    },
}

impl fmt::Display for DomainViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainViolation::TooManyGroups { voter, groups } => {
                write!(f, "voter {voter} has {groups} groups")
            }
            DomainViolation::PeakViolation { voter, triple } => write!(
                f,
                "voter {voter} violates the peak condition on triple ({}, {}, {})",
                triple.0, triple.1, triple.2
            ),
            DomainViolation::CrossingViolation { pair, crossings } => write!(
                f,
                "pair ({}, {}) crosses after voters {} and {}",
                pair.0, pair.1, crossings.0, crossings.1
            ),
        }
    }
}

/// Errors raised when a validator's preconditions are not met.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DomainError {
    /// Single-peaked / single-crossing checks are defined over total orders
    /// only; a ballot with ties was passed.
    UnsupportedBallotKind { voter: usize },
    InvalidAxis,
    NoVoters,
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainError::UnsupportedBallotKind { voter } => {
                write!(f, "voter {voter} does not state a total order")
            }
            DomainError::InvalidAxis => write!(f, "axis is not a permutation of the roster"),
            DomainError::NoVoters => write!(f, "election has no voters"),
        }
    }
}

impl core::error::Error for DomainError {}

/// Does every ballot have at most `k` indifference groups?
pub fn check_kchotomous(election: &Election, k: usize) -> DomainVerdict {
    assert!(k >= 1, "k must be positive");
    for (voter, ballot) in election.ballots().iter().enumerate() {
        if ballot.group_count() > k {
            return DomainVerdict::violated(DomainViolation::TooManyGroups {
                voter,
                groups: ballot.group_count(),
            });
        }
    }
    DomainVerdict::holds()
}

fn require_total_orders(election: &Election) -> Result<(), DomainError> {
    for (voter, ballot) in election.ballots().iter().enumerate() {
        if !ballot.is_total_order() {
            return Err(DomainError::UnsupportedBallotKind { voter });
        }
    }
    Ok(())
}

/// Is the election single-peaked with respect to `axis`?
///
/// For every axis triple `a L b L c` or `c L b L a` and every voter, stating
/// `a > b` must imply stating `b > c`.
pub fn check_single_peaked(
    election: &Election,
    axis: &[CandidateId],
) -> Result<DomainVerdict, DomainError> {
    let m = election.candidate_count();
    let mut seen = alloc::vec![false; m];
    if axis.len() != m {
        return Err(DomainError::InvalidAxis);
    }
    for &c in axis {
        if c.index() >= m || seen[c.index()] {
            return Err(DomainError::InvalidAxis);
        }
        seen[c.index()] = true;
    }
    require_total_orders(election)?;
    for (voter, ballot) in election.ballots().iter().enumerate() {
        let ranks = ballot.group_ranks(m);
        let pos = |c: CandidateId| ranks[c.index()];
        for i in 0..m {
            for j in (i + 1)..m {
                for k in (j + 1)..m {
                    let (a, b, c) = (axis[i], axis[j], axis[k]);
                    if pos(a) < pos(b) && pos(b) >= pos(c) {
                        return Ok(DomainVerdict::violated(DomainViolation::PeakViolation {
                            voter,
                            triple: (a, b, c),
                        }));
                    }
                    if pos(c) < pos(b) && pos(b) >= pos(a) {
                        return Ok(DomainVerdict::violated(DomainViolation::PeakViolation {
                            voter,
                            triple: (c, b, a),
                        }));
                    }
                }
            }
        }
    }
    Ok(DomainVerdict::holds())
}

/// Is the election single-crossing with respect to its ballot order?
///
/// For every candidate pair the per-voter preference sequence along
/// `v_1 .. v_n` may change direction at most once.
pub fn check_single_crossing(election: &Election) -> Result<DomainVerdict, DomainError> {
    require_total_orders(election)?;
    let m = election.candidate_count();
    let ranks: Vec<Vec<usize>> = election
        .ballots()
        .iter()
        .map(|b| b.group_ranks(m))
        .collect();
    for a in 0..m {
        for b in (a + 1)..m {
            let mut first_crossing = None;
            for v in 1..ranks.len() {
                let before = ranks[v - 1][a] < ranks[v - 1][b];
                let after = ranks[v][a] < ranks[v][b];
                if before == after {
                    continue;
                }
                match first_crossing {
                    None => first_crossing = Some(v - 1),
                    Some(first) => {
                        return Ok(DomainVerdict::violated(
                            DomainViolation::CrossingViolation {
                                pair: (CandidateId(a), CandidateId(b)),
                                crossings: (first, v - 1),
                            },
                        ));
                    }
                }
            }
        }
    }
    Ok(DomainVerdict::holds())
}

/// The median voter(s) of a single-crossing order, as 1-based positions:
/// `(n+1)/2` for odd `n`, `(n/2, n/2 + 1)` for even `n`.
pub fn median_voters(n: usize) -> Result<(usize, Option<usize>), DomainError> {
    if n == 0 {
        return Err(DomainError::NoVoters);
    }
    if n % 2 == 1 {
        Ok((n.div_ceil(2), None))
    } else {
        Ok((n / 2, Some(n / 2 + 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ballots::Ballot;
    use alloc::string::ToString;
    use alloc::{vec, vec::Vec};

    fn names(list: &[&str]) -> Vec<alloc::string::String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn ids(list: &[usize]) -> Vec<CandidateId> {
        list.iter().map(|&i| CandidateId(i)).collect()
    }

    fn ranking(order: &[usize]) -> Ballot {
        Ballot::ranking(&ids(order)).unwrap()
    }

    // The temperature votes over 16, 18, 21, 25 (ids 0..3):
    // (16>18>21>25), (18>21>25>16), (21>18>16>25).
    fn temperature_votes() -> Election {
        Election::new(
            names(&["16", "18", "21", "25"]),
            vec![
                ranking(&[0, 1, 2, 3]),
                ranking(&[1, 2, 3, 0]),
                ranking(&[2, 1, 0, 3]),
            ],
            Some(ids(&[0, 1, 2, 3])),
        )
        .unwrap()
    }

    #[test]
    fn kchotomous_checks() {
        let total = Election::new(names(&["a", "b", "c"]), vec![ranking(&[0, 1, 2])], None)
            .unwrap();
        assert!(check_kchotomous(&total, 3).holds);
        assert!(!check_kchotomous(&total, 2).holds);
        assert_eq!(
            check_kchotomous(&total, 2).violation,
            Some(DomainViolation::TooManyGroups {
                voter: 0,
                groups: 3
            })
        );
        let dich = Election::new(
            names(&["a", "b", "c"]),
            vec![Ballot::dichotomous(ids(&[0, 1]), ids(&[2])).unwrap()],
            None,
        )
        .unwrap();
        assert!(check_kchotomous(&dich, 2).holds);
    }

    #[test]
    fn temperature_votes_are_single_peaked() {
        let e = temperature_votes();
        let verdict = check_single_peaked(&e, e.axis().unwrap()).unwrap();
        assert!(verdict.holds);
    }

    #[test]
    fn single_peaked_violation_witness_is_checkable() {
        // (a > c > b) on axis a, b, c: triple (a,b,c) has a > b but c > b.
        let e = Election::new(names(&["a", "b", "c"]), vec![ranking(&[0, 2, 1])], None)
            .unwrap();
        let verdict = check_single_peaked(&e, &ids(&[0, 1, 2])).unwrap();
        assert!(!verdict.holds);
        let Some(DomainViolation::PeakViolation { voter, triple }) = verdict.violation else {
            panic!("expected a peak violation");
        };
        let ballot = &e.ballots()[voter];
        assert!(ballot.prefers(triple.0, triple.1));
        assert!(!ballot.prefers(triple.1, triple.2));
    }

    #[test]
    fn identity_vote_is_single_peaked() {
        let e = Election::new(names(&["a", "b", "c"]), vec![ranking(&[0, 1, 2])], None)
            .unwrap();
        assert!(check_single_peaked(&e, &ids(&[0, 1, 2])).unwrap().holds);
    }

    #[test]
    fn single_peaked_rejects_ties_and_bad_axis() {
        let e = Election::new(
            names(&["a", "b"]),
            vec![Ballot::new(vec![ids(&[0, 1])]).unwrap()],
            None,
        )
        .unwrap();
        assert_eq!(
            check_single_peaked(&e, &ids(&[0, 1])),
            Err(DomainError::UnsupportedBallotKind { voter: 0 })
        );
        let total = Election::new(names(&["a", "b"]), vec![ranking(&[0, 1])], None).unwrap();
        assert_eq!(
            check_single_peaked(&total, &ids(&[0])),
            Err(DomainError::InvalidAxis)
        );
    }

    #[test]
    fn temperature_votes_are_not_single_crossing() {
        let verdict = check_single_crossing(&temperature_votes()).unwrap();
        assert!(!verdict.holds);
        let Some(DomainViolation::CrossingViolation { pair, crossings }) = verdict.violation
        else {
            panic!("expected a crossing violation");
        };
        // the witness is independently checkable: the pair's preference
        // sequence flips at both reported positions
        let e = temperature_votes();
        for &at in &[crossings.0, crossings.1] {
            let before = e.ballots()[at].prefers(pair.0, pair.1);
            let after = e.ballots()[at + 1].prefers(pair.0, pair.1);
            assert_ne!(before, after);
        }
    }

    #[test]
    fn four_voter_profile_is_single_crossing() {
        // (a>b>p>c), (a>b>p>c), (a>c>p>b), (a>c>p>b)
        let e = Election::new(
            names(&["a", "b", "p", "c"]),
            vec![
                ranking(&[0, 1, 2, 3]),
                ranking(&[0, 1, 2, 3]),
                ranking(&[0, 3, 2, 1]),
                ranking(&[0, 3, 2, 1]),
            ],
            None,
        )
        .unwrap();
        assert!(check_single_crossing(&e).unwrap().holds);
    }

    #[test]
    fn single_ballot_is_single_crossing() {
        let e = Election::new(names(&["a", "b"]), vec![ranking(&[1, 0])], None).unwrap();
        assert!(check_single_crossing(&e).unwrap().holds);
    }

    #[test]
    fn median_voter_positions() {
        assert_eq!(median_voters(1), Ok((1, None)));
        assert_eq!(median_voters(4), Ok((2, Some(3))));
        assert_eq!(median_voters(5), Ok((3, None)));
        assert_eq!(median_voters(0), Err(DomainError::NoVoters));
    }
}
