//! Cross-module invariants checked on randomized instances: majority-table
//! arithmetic, domain closure under restriction, transitivity guarantees,
//! and certificate replay round trips.

use hardtally_core::ballots::{
    replay_lifts, replay_moves, replay_voter_subset, Ballot, CandidateId, Certificate,
    ConsensusObjective, Election,
};
use hardtally_core::domains::{check_single_crossing, check_single_peaked};
use hardtally_core::oracles::{
    dodgson_score_exact, kemeny_score_exact, young_score_exact, OracleBudget,
};
use proptest::prelude::*;

fn names(m: usize) -> Vec<String> {
    (0..m).map(|i| format!("c{i}")).collect()
}

fn ids(list: &[usize]) -> Vec<CandidateId> {
    list.iter().map(|&i| CandidateId(i)).collect()
}

/// A weak order built from per-candidate group keys.
fn weak_ballot(m: usize) -> impl Strategy<Value = Ballot> {
    prop::collection::vec(0..m, m).prop_map(move |keys| {
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&c| (keys[c], c));
        let mut groups: Vec<Vec<CandidateId>> = Vec::new();
        let mut last = usize::MAX;
        for c in order {
            if keys[c] == last {
                groups.last_mut().unwrap().push(CandidateId(c));
            } else {
                groups.push(vec![CandidateId(c)]);
                last = keys[c];
            }
        }
        Ballot::new(groups).unwrap()
    })
}

fn dichotomous_ballot(m: usize) -> impl Strategy<Value = Ballot> {
    prop::collection::vec(any::<bool>(), m).prop_map(move |approve| {
        let approved: Vec<CandidateId> = (0..m)
            .filter(|&c| approve[c])
            .map(CandidateId)
            .collect();
        let rest: Vec<CandidateId> = (0..m)
            .filter(|&c| !approve[c])
            .map(CandidateId)
            .collect();
        Ballot::dichotomous(approved, rest).unwrap()
    })
}

fn total_order_ballot(m: usize) -> impl Strategy<Value = Ballot> {
    Just((0..m).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(move |order| Ballot::ranking(&ids(&order)).unwrap())
}

fn election_of(
    m: usize,
    max_n: usize,
    ballot: impl Strategy<Value = Ballot>,
) -> impl Strategy<Value = Election> {
    prop::collection::vec(ballot, 0..=max_n)
        .prop_map(move |ballots| Election::new(names(m), ballots, None).unwrap())
}

fn any_election(max_m: usize, max_n: usize) -> impl Strategy<Value = Election> {
    (1..=max_m).prop_flat_map(move |m| election_of(m, max_n, weak_ballot(m)))
}

fn dichotomous_election(max_m: usize, max_n: usize) -> impl Strategy<Value = Election> {
    (1..=max_m).prop_flat_map(move |m| election_of(m, max_n, dichotomous_ballot(m)))
}

fn total_order_election(max_m: usize, max_n: usize) -> impl Strategy<Value = Election> {
    (1..=max_m).prop_flat_map(move |m| election_of(m, max_n, total_order_ballot(m)))
}

/// A single-peaked vote as a walk outward from a peak on the axis.
fn peak_walk(axis: &[CandidateId], peak: usize, outward: &[bool]) -> Ballot {
    let m = axis.len();
    let (mut lo, mut hi) = (peak, peak);
    let mut order = vec![axis[peak]];
    for &left in outward {
        if (left && lo > 0) || hi == m - 1 {
            lo -= 1;
            order.push(axis[lo]);
        } else {
            hi += 1;
            order.push(axis[hi]);
        }
    }
    Ballot::ranking(&order).unwrap()
}

fn single_peaked_election(
    max_m: usize,
    max_n: usize,
) -> impl Strategy<Value = (Election, Vec<CandidateId>)> {
    (2..=max_m).prop_flat_map(move |m| {
        let axis = Just((0..m).collect::<Vec<usize>>()).prop_shuffle();
        let votes = prop::collection::vec(
            (0..m, prop::collection::vec(any::<bool>(), m - 1)),
            0..=max_n,
        );
        (axis, votes).prop_map(move |(axis, votes)| {
            let axis = ids(&axis);
            let ballots = votes
                .iter()
                .map(|(peak, outward)| peak_walk(&axis, *peak, outward))
                .collect();
            let e = Election::new(names(m), ballots, Some(axis.clone())).unwrap();
            (e, axis)
        })
    })
}

/// A single-crossing profile: each voter applies further adjacent swaps to
/// the previous order, never flipping a pair twice.
fn single_crossing_election(max_m: usize, max_n: usize) -> impl Strategy<Value = Election> {
    (2..=max_m).prop_flat_map(move |m| {
        let start = Just((0..m).collect::<Vec<usize>>()).prop_shuffle();
        let steps = prop::collection::vec(
            prop::collection::vec(0..m - 1, 0..=3),
            0..=max_n.saturating_sub(1),
        );
        (start, steps).prop_map(move |(start, steps)| {
            let mut start_rank = vec![0usize; m];
            for (i, &c) in start.iter().enumerate() {
                start_rank[c] = i;
            }
            let mut orders = vec![start.clone()];
            for positions in &steps {
                let mut next = orders.last().unwrap().clone();
                for &pos in positions {
                    let (x, y) = (next[pos], next[pos + 1]);
                    // only flip pairs still in their starting orientation
                    if start_rank[x] < start_rank[y] {
                        next.swap(pos, pos + 1);
                    }
                }
                orders.push(next);
            }
            let ballots = orders
                .into_iter()
                .map(|o| Ballot::ranking(&ids(&o)).unwrap())
                .collect();
            Election::new(names(m), ballots, None).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn pair_counts_are_bounded_with_equality_iff_no_ties(e in any_election(4, 5)) {
        let t = e.majority_table();
        let n = e.voter_count() as u32;
        for a in e.candidates() {
            prop_assert_eq!(t.count(a, a), 0);
            for b in e.candidates() {
                if a == b {
                    continue;
                }
                let total = t.count(a, b) + t.count(b, a);
                prop_assert!(total <= n);
                let any_tie = e
                    .ballots()
                    .iter()
                    .any(|ballot| !ballot.prefers(a, b) && !ballot.prefers(b, a));
                prop_assert_eq!(total == n, !any_tie);
            }
        }
    }

    #[test]
    fn net_preference_is_antisymmetric(e in any_election(4, 5)) {
        let t = e.majority_table();
        for a in e.candidates() {
            for b in e.candidates() {
                if a != b {
                    prop_assert_eq!(
                        t.net_preference(a, b).unwrap(),
                        -t.net_preference(b, a).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn restricted_table_is_the_sum_of_ballot_tables(
        e in any_election(4, 5),
        mask in any::<u16>()
    ) {
        let keep: Vec<usize> = (0..e.voter_count()).filter(|v| mask & (1 << v) != 0).collect();
        let sub = e.restrict_voters(&keep).unwrap();
        let table = sub.majority_table();
        for a in e.candidates() {
            for b in e.candidates() {
                let per_ballot: u32 = keep
                    .iter()
                    .map(|&v| {
                        let single = e.restrict_voters(&[v]).unwrap();
                        single.majority_table().count(a, b)
                    })
                    .sum();
                prop_assert_eq!(table.count(a, b), per_ballot);
            }
        }
    }

    #[test]
    fn dichotomous_electorates_have_weak_condorcet_winners(
        e in dichotomous_election(5, 6)
    ) {
        prop_assert!(!e.majority_table().condorcet_winners(true).is_empty());
    }

    #[test]
    fn single_peaked_elections_validate_and_restrict(
        (e, axis) in single_peaked_election(5, 6),
        candidate_mask in any::<u8>(),
        voter_mask in any::<u8>()
    ) {
        prop_assert!(check_single_peaked(&e, &axis).unwrap().holds);
        // majority relation is transitive
        prop_assert!(e.majority_table().transitivity_violation().is_none());
        // closure under voter restriction
        let keep: Vec<usize> =
            (0..e.voter_count()).filter(|v| voter_mask & (1 << v) != 0).collect();
        let sub = e.restrict_voters(&keep).unwrap();
        prop_assert!(check_single_peaked(&sub, &axis).unwrap().holds);
        // closure under candidate restriction with the axis filtered
        let kept: Vec<CandidateId> = e
            .candidates()
            .filter(|c| candidate_mask & (1 << c.index()) != 0)
            .collect();
        if !kept.is_empty() {
            let sub = e.restrict_candidates(&kept).unwrap();
            let sub_axis = sub.axis().unwrap().to_vec();
            prop_assert!(check_single_peaked(&sub, &sub_axis).unwrap().holds);
        }
    }

    #[test]
    fn single_crossing_elections_validate_and_restrict(
        e in single_crossing_election(5, 6),
        voter_mask in any::<u8>()
    ) {
        prop_assert!(check_single_crossing(&e).unwrap().holds);
        if e.voter_count() > 0 {
            prop_assert!(e.majority_table().transitivity_violation().is_none());
        }
        let keep: Vec<usize> =
            (0..e.voter_count()).filter(|v| voter_mask & (1 << v) != 0).collect();
        let sub = e.restrict_voters(&keep).unwrap();
        prop_assert!(check_single_crossing(&sub).unwrap().holds);
    }

    #[test]
    fn young_certificates_replay(e in any_election(4, 6), p in 0usize..4, strong in any::<bool>()) {
        let p = CandidateId(p.min(e.candidate_count() - 1));
        let budget = OracleBudget::default();
        let (score, cert) = young_score_exact(&e, p, strong, &budget).unwrap();
        let Certificate::VoterSubset(voters) = cert else {
            return Err(TestCaseError::fail("young certificate must be a voter subset"));
        };
        if strong && score == 0 {
            prop_assert!(voters.is_empty());
        } else {
            prop_assert_eq!(replay_voter_subset(&e, p, strong, &voters), Ok(score));
        }
    }

    #[test]
    fn dodgson_certificates_replay_on_total_orders(
        e in total_order_election(4, 4),
        p in 0usize..4,
        weak in any::<bool>()
    ) {
        prop_assume!(e.voter_count() > 0);
        let p = CandidateId(p.min(e.candidate_count() - 1));
        let budget = OracleBudget::default();
        let (score, cert) = dodgson_score_exact(&e, p, weak, &budget).unwrap();
        let Certificate::Lifts(lifts) = cert else {
            return Err(TestCaseError::fail("expected a lift certificate"));
        };
        prop_assert_eq!(replay_lifts(&e, p, weak, &lifts), Ok(score));
    }

    #[test]
    fn dodgson_certificates_replay_on_dichotomous_profiles(
        e in dichotomous_election(4, 4),
        p in 0usize..4,
        weak in any::<bool>()
    ) {
        prop_assume!(e.voter_count() > 0);
        let p = CandidateId(p.min(e.candidate_count() - 1));
        let budget = OracleBudget::default();
        let (score, cert) = dodgson_score_exact(&e, p, weak, &budget).unwrap();
        match cert {
            Certificate::Moves(edits) => {
                prop_assert_eq!(replay_moves(&e, p, weak, &edits), Ok(score));
            }
            Certificate::Lifts(lifts) => {
                // profiles that happen to be total orders take the swap model
                prop_assert_eq!(replay_lifts(&e, p, weak, &lifts), Ok(score));
            }
            _ => return Err(TestCaseError::fail("unexpected certificate kind")),
        }
    }

    #[test]
    fn slater_scores_stay_in_range(e in any_election(4, 5), order in weak_ballot(4)) {
        prop_assume!(e.candidate_count() == 4);
        let m = e.candidate_count() as i64;
        let score = e.consensus_score(&order, ConsensusObjective::Slater).unwrap();
        prop_assert!((0..=m * (m - 1)).contains(&score));
    }
}
