//! Polynomial-time score and winner algorithms for restricted domains.
//!
//! Dichotomous electorates get approval-threshold scans and direct move
//! constructions; single-peaked electorates get the swap and deletion
//! constructions over the societal axis; single-crossing electorates get
//! median-voter arguments. Rules with a total-order consensus additionally
//! get a score-via-winner reduction that walks the (transitive) majority
//! relation. Every operation validates its domain first and returns a
//! replayable plan or certificate.

use alloc::vec::Vec;
use core::fmt;

use crate::ballots::{
    Ballot, BallotEdit, CandidateId, Certificate, ConsensusObjective, Election, MajorityTable,
    MoveDirection,
};
use crate::domains::{
    check_kchotomous, check_single_crossing, check_single_peaked, DomainError, DomainViolation,
};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FastRuleError {
    /// The election is outside the domain the algorithm requires.
    DomainViolation(DomainViolation),
    /// A validator precondition failed (ties in ballots, bad axis).
    Domain(DomainError),
    EmptyElection,
    /// The strict majority relation is not transitive; the witness triple
    /// has `a >_m b >_m c` but not `a >_m c`.
    IntransitiveMajority {
        triple: (CandidateId, CandidateId, CandidateId),
    },
}

impl fmt::Display for FastRuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FastRuleError::DomainViolation(v) => write!(f, "domain violation: {v}"),
            FastRuleError::Domain(e) => write!(f, "{e}"),
            FastRuleError::EmptyElection => write!(f, "election has no voters"),
            FastRuleError::IntransitiveMajority { triple } => write!(
                f,
                "majority relation is not transitive on ({}, {}, {})",
                triple.0, triple.1, triple.2
            ),
        }
    }
}

impl core::error::Error for FastRuleError {}

impl From<DomainError> for FastRuleError {
    fn from(e: DomainError) -> Self {
        FastRuleError::Domain(e)
    }
}

/// Largest number of voters that may prefer a rival to the scored candidate
/// while that candidate still wins: `floor(n/2)` for weak Condorcet
/// winners, `ceil(n/2) - 1` for Condorcet winners.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Threshold {
    pub bound: i64,
}

impl Threshold {
    pub fn for_winner(n: usize, weak: bool) -> Self {
        let n = n as i64;
        Threshold {
            bound: if weak { n / 2 } else { (n + 1) / 2 - 1 },
        }
    }
}

/// A concrete edit plan realizing a Dodgson-family score.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SwapPlan {
    pub edits: SwapPlanEdits,
    pub cost: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SwapPlanEdits {
    /// Per-voter upward move counts of the scored candidate (total orders).
    Lifts(Vec<usize>),
    /// Unit group moves (dichotomous profiles).
    Moves(Vec<BallotEdit>),
}

impl SwapPlan {
    pub fn into_certificate(self) -> Certificate {
        match self.edits {
            SwapPlanEdits::Lifts(lifts) => Certificate::Lifts(lifts),
            SwapPlanEdits::Moves(moves) => Certificate::Moves(moves),
        }
    }
}

fn require_dichotomous(election: &Election) -> Result<(), FastRuleError> {
    let verdict = check_kchotomous(election, 2);
    match verdict.violation {
        None => Ok(()),
        Some(v) => Err(FastRuleError::DomainViolation(v)),
    }
}

fn require_single_peaked(
    election: &Election,
    axis: &[CandidateId],
) -> Result<(), FastRuleError> {
    let verdict = check_single_peaked(election, axis)?;
    match verdict.violation {
        None => Ok(()),
        Some(v) => Err(FastRuleError::DomainViolation(v)),
    }
}

fn require_single_crossing(election: &Election) -> Result<(), FastRuleError> {
    let verdict = check_single_crossing(election)?;
    match verdict.violation {
        None => Ok(()),
        Some(v) => Err(FastRuleError::DomainViolation(v)),
    }
}

/// Approval count per candidate. A single-group ballot approves everyone;
/// for pairwise purposes this is equivalent to approving no one.
fn approval_counts(election: &Election) -> Vec<u32> {
    let m = election.candidate_count();
    let mut app = alloc::vec![0u32; m];
    for ballot in election.ballots() {
        if ballot.group_count() == 1 {
            for a in app.iter_mut() {
                *a += 1;
            }
        } else {
            for c in &ballot.groups()[0] {
                app[c.index()] += 1;
            }
        }
    }
    app
}

// ---------------------------------------------------------------------------
// Dichotomous electorates
// ---------------------------------------------------------------------------

/// Young winners of a dichotomous electorate: exactly the weak Condorcet
/// winners, which always exist for dichotomous votes. The Young scores
/// themselves stay hard even here; the winners do not need them.
pub fn young_winners_dichotomous(election: &Election) -> Result<Vec<CandidateId>, FastRuleError> {
    require_dichotomous(election)?;
    Ok(election.majority_table().condorcet_winners(true))
}

/// Dodgson (`weak = false`) or weakDodgson (`weak = true`) score of `p` for
/// a dichotomous electorate, with the realizing move plan.
///
/// Moving `p` up in any vote that disapproves it lowers every deficit
/// `N(a,p) - N(p,a)` by exactly one, and no unit move does better, so the
/// weak score is `max(0, max_a N(a,p) - N(p,a))`. For the strict score one
/// extra lift suffices when a disapproving vote remains; otherwise `p` is
/// lifted in every disapproving vote and each candidate still tied with `p`
/// is moved down once.
pub fn dodgson_score_dichotomous(
    election: &Election,
    p: CandidateId,
    weak: bool,
) -> Result<(u64, SwapPlan), FastRuleError> {
    require_dichotomous(election)?;
    let n = election.voter_count();
    if n == 0 {
        return Err(FastRuleError::EmptyElection);
    }
    let m = election.candidate_count();
    let table = election.majority_table();
    let deficit_max = (0..m)
        .filter(|&a| a != p.index())
        .map(|a| table.net_preference(CandidateId(a), p).expect("a != p"))
        .max();
    let liftable: Vec<usize> = election
        .ballots()
        .iter()
        .enumerate()
        .filter(|(_, b)| b.group_count() == 2 && b.groups()[1].contains(&p))
        .map(|(v, _)| v)
        .collect();
    let lift_edits = |count: usize| -> Vec<BallotEdit> {
        liftable[..count]
            .iter()
            .map(|&voter| BallotEdit {
                voter,
                candidate: p,
                direction: MoveDirection::Up,
            })
            .collect()
    };

    let edits: Vec<BallotEdit> = if weak {
        let needed = deficit_max.unwrap_or(0).max(0) as usize;
        lift_edits(needed)
    } else if table.condorcet_winners(false).contains(&p) {
        Vec::new()
    } else {
        let deficit = deficit_max.expect("p not a Condorcet winner implies m >= 2");
        debug_assert!(deficit >= 0);
        let needed = deficit as usize + 1;
        if liftable.len() >= needed {
            lift_edits(needed)
        } else {
            // p ends up approved everywhere; break each remaining tie by
            // one down-move in the first ballot
            let mut edits = lift_edits(liftable.len());
            let mut ballots: Vec<Ballot> = election.ballots().to_vec();
            for edit in &edits {
                ballots[edit.voter] = ballots[edit.voter]
                    .apply_dichotomous_move(edit.candidate, edit.direction)
                    .expect("lift of a disapproved candidate is legal");
            }
            for a in (0..m).map(CandidateId) {
                if a == p {
                    continue;
                }
                let tied = ballots.iter().all(|b| {
                    b.group_count() == 1 || b.groups()[0].contains(&a)
                });
                if tied {
                    edits.push(BallotEdit {
                        voter: 0,
                        candidate: a,
                        direction: MoveDirection::Down,
                    });
                }
            }
            edits
        }
    };
    let cost = edits.len() as u64;
    Ok((
        cost,
        SwapPlan {
            edits: SwapPlanEdits::Moves(edits),
            cost,
        },
    ))
}

/// Outcome of the mean rule (equivalently, the dichotomous-consensus Kemeny
/// variant): an optimal two-group consensus, its score, and all candidates
/// that top some optimal consensus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MeanRuleOutcome {
    pub consensus: Ballot,
    pub winners: Vec<CandidateId>,
    pub score: i64,
}

/// Sorts candidates by approval count and scans the `m + 1` threshold
/// splits; exchanging equal-approval candidates across the split keeps the
/// score, so the winners are the candidates whose approval reaches the
/// boundary value of some optimal split.
pub fn mean_rule(election: &Election) -> Result<MeanRuleOutcome, FastRuleError> {
    require_dichotomous(election)?;
    let m = election.candidate_count();
    let app = approval_counts(election);
    let mut sorted: Vec<usize> = (0..m).collect();
    sorted.sort_by_key(|&c| (core::cmp::Reverse(app[c]), c));
    let split_score = |t: usize| -> i64 {
        let mut s = 0i64;
        for i in 0..t {
            for j in t..m {
                s += app[sorted[i]] as i64 - app[sorted[j]] as i64;
            }
        }
        s
    };
    let scores: Vec<i64> = (0..=m).map(split_score).collect();
    let best = *scores.iter().max().expect("m + 1 splits");
    let split = scores.iter().position(|&s| s == best).expect("max exists");
    let consensus = if split == 0 || split == m {
        Ballot::new(alloc::vec![(0..m).map(CandidateId).collect()])
    } else {
        Ballot::dichotomous(
            sorted[..split].iter().map(|&c| CandidateId(c)).collect(),
            sorted[split..].iter().map(|&c| CandidateId(c)).collect(),
        )
    }
    .expect("roster is nonempty");
    let mut winners: Vec<CandidateId> = (0..m)
        .filter(|&c| {
            (1..=m).any(|t| scores[t] == best && app[c] >= app[sorted[t - 1]])
        })
        .map(CandidateId)
        .collect();
    winners.sort_unstable();
    Ok(MeanRuleOutcome {
        consensus,
        winners,
        score: best,
    })
}

/// Maximum dichotomous-consensus score over two-group orders ranking `p`
/// (tied for) first, with the realizing consensus. Forcing `p` into the top
/// group, the rest of an optimal top group is a prefix of the remaining
/// candidates in approval order.
pub fn k22_kemeny_score(
    election: &Election,
    p: CandidateId,
) -> Result<(i64, Ballot), FastRuleError> {
    require_dichotomous(election)?;
    let m = election.candidate_count();
    let app = approval_counts(election);
    let mut rest: Vec<usize> = (0..m).filter(|&c| c != p.index()).collect();
    rest.sort_by_key(|&c| (core::cmp::Reverse(app[c]), c));
    let mut best: Option<(i64, usize)> = None;
    for t in 0..m {
        // score of ({p} + top t of rest) over the remainder
        let mut score = 0i64;
        for bottom in &rest[t..] {
            score += app[p.index()] as i64 - app[*bottom] as i64;
        }
        for top in &rest[..t] {
            for bottom in &rest[t..] {
                score += app[*top] as i64 - app[*bottom] as i64;
            }
        }
        if best.is_none() || score > best.unwrap().0 {
            best = Some((score, t));
        }
    }
    let (score, t) = best.expect("at least the singleton top group exists");
    let consensus = if t == m - 1 {
        Ballot::new(alloc::vec![(0..m).map(CandidateId).collect()])
    } else {
        let mut top: Vec<CandidateId> = alloc::vec![p];
        top.extend(rest[..t].iter().map(|&c| CandidateId(c)));
        Ballot::dichotomous(
            top,
            rest[t..].iter().map(|&c| CandidateId(c)).collect(),
        )
    }
    .expect("roster is nonempty");
    Ok((score, consensus))
}

/// Which rule's winners are being requested from the transitive majority
/// relation. All three coincide with the maximal elements of `>_m`; the
/// dichotomous-voter Kemeny variant additionally validates its domain.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MajorityWinnerRule {
    KemenyTwoM,
    KemenyTotal,
    SlaterTotal,
}

/// Winners of a total-order-consensus rule when the strict majority
/// relation is transitive: the candidates beaten by no one, which are
/// exactly the top-ranked candidates of optimal consensus orders.
pub fn transitive_majority_winners(
    election: &Election,
    rule: MajorityWinnerRule,
) -> Result<Vec<CandidateId>, FastRuleError> {
    if rule == MajorityWinnerRule::KemenyTwoM {
        require_dichotomous(election)?;
    }
    let table = election.majority_table();
    if let Some(triple) = table.transitivity_violation() {
        return Err(FastRuleError::IntransitiveMajority { triple });
    }
    Ok(table.condorcet_winners(true))
}

/// Computes a candidate score for a total-order-consensus rule through its
/// winner oracle: rank `p` first, then repeatedly take a winner of the
/// election restricted to the remaining candidates and delete it. The
/// contribution of `p` is independent of how the rest is ordered, so the
/// built order is optimal among orders ranking `p` first.
///
/// Ties among winners are broken toward the smallest candidate id.
pub fn score_via_winner_reduction(
    election: &Election,
    p: CandidateId,
    objective: ConsensusObjective,
) -> Result<(i64, Certificate), FastRuleError> {
    let winner_rule = match objective {
        ConsensusObjective::NetMax => MajorityWinnerRule::KemenyTwoM,
        ConsensusObjective::KemenyMin => MajorityWinnerRule::KemenyTotal,
        ConsensusObjective::Slater => MajorityWinnerRule::SlaterTotal,
    };
    let m = election.candidate_count();
    let mut order: Vec<CandidateId> = alloc::vec![p];
    let mut remaining: Vec<CandidateId> =
        (0..m).map(CandidateId).filter(|&c| c != p).collect();
    while !remaining.is_empty() {
        let sub = election
            .restrict_candidates(&remaining)
            .expect("remaining is nonempty");
        let winners = transitive_majority_winners(&sub, winner_rule)?;
        // sub ids index into `remaining`, which is kept ascending
        let chosen = remaining[winners[0].index()];
        order.push(chosen);
        remaining.retain(|&c| c != chosen);
    }
    let ballot = Ballot::ranking(&order).expect("orders over the roster are valid");
    let score = election
        .consensus_score(&ballot, objective)
        .expect("order ranges over the roster");
    Ok((score, Certificate::Consensus(ballot)))
}

/// Slater-score contribution of the pair `{x, y}`: how many of the two
/// ordered pairs agree (in the iff sense) between the order and the
/// majority relation. Between 0 and 2.
pub fn slater_pair_contribution(
    table: &MajorityTable,
    order: &Ballot,
    x: CandidateId,
    y: CandidateId,
) -> i64 {
    let mut score = 0;
    for (a, b) in [(x, y), (y, x)] {
        if order.prefers(a, b) == table.beats(a, b) {
            score += 1;
        }
    }
    score
}

/// Maximum k-chotomous Slater score over orders ranking `p` in the top
/// group, for a dichotomous electorate.
///
/// An optimal witness never inverts a strict majority pair among the other
/// candidates (swapping an inverted pair raises the score), and all orders
/// filling a given group-size composition consistently with `>_m` score the
/// same. So it suffices to scan the compositions of `m` into at most `k`
/// parts, placing `p` first and filling the rest in majority order (ties
/// broken by candidate id).
pub fn k2k_slater_score(
    election: &Election,
    p: CandidateId,
    k: usize,
) -> Result<(i64, Certificate), FastRuleError> {
    assert!(k >= 1, "k must be positive");
    require_dichotomous(election)?;
    let table = election.majority_table();
    if let Some(triple) = table.transitivity_violation() {
        return Err(FastRuleError::IntransitiveMajority { triple });
    }
    let m = election.candidate_count();
    let app = approval_counts(election);
    let mut rest: Vec<usize> = (0..m).filter(|&c| c != p.index()).collect();
    rest.sort_by_key(|&c| (core::cmp::Reverse(app[c]), c));

    let mut best: Option<(i64, Ballot)> = None;
    let mut parts: Vec<usize> = Vec::new();
    // lexicographic scan of the compositions of m into <= k positive parts
    fn visit(
        parts: &mut Vec<usize>,
        left: usize,
        k: usize,
        eval: &mut dyn FnMut(&[usize]),
    ) {
        if left == 0 {
            eval(parts);
            return;
        }
        if parts.len() == k {
            return;
        }
        for take in 1..=left {
            parts.push(take);
            visit(parts, left - take, k, eval);
            parts.pop();
        }
    }
    let mut eval = |parts: &[usize]| {
        let mut groups: Vec<Vec<CandidateId>> = Vec::with_capacity(parts.len());
        let mut fill = rest.iter();
        for (gi, &len) in parts.iter().enumerate() {
            let mut group = Vec::with_capacity(len);
            let mut need = len;
            if gi == 0 {
                group.push(p);
                need -= 1;
            }
            for _ in 0..need {
                group.push(CandidateId(*fill.next().expect("parts sum to m")));
            }
            groups.push(group);
        }
        let ballot = Ballot::new(groups).expect("composition covers the roster");
        let score = table
            .consensus_score(&ballot, ConsensusObjective::Slater)
            .expect("order ranges over the roster");
        if best.is_none() || score > best.as_ref().unwrap().0 {
            best = Some((score, ballot));
        }
    };
    visit(&mut parts, m, k, &mut eval);
    let (score, ballot) = best.expect("at least one composition exists");
    Ok((score, Certificate::Consensus(ballot)))
}

// ---------------------------------------------------------------------------
// Single-peaked electorates
// ---------------------------------------------------------------------------

/// The score value `sum_c max(0, N(c,p) - H)`; for single-peaked
/// electorates this is the exact Dodgson/weakDodgson score of `p`.
pub fn sp_dodgson_formula_value(
    table: &MajorityTable,
    p: CandidateId,
    threshold: Threshold,
) -> u64 {
    (0..table.candidate_count())
        .map(CandidateId)
        .filter(|&c| c != p)
        .map(|c| (table.count(c, p) as i64 - threshold.bound).max(0) as u64)
        .sum()
}

/// Per-side voter classification on the axis. `candidates` lists one
/// side's candidates from nearest-to-`p` outward; `above_counts[v]` is how
/// many of them voter `v` ranks above `p`. In a single-peaked vote the
/// candidates above `p` all lie on one side and form a prefix of that
/// side's list.
struct AxisSide {
    candidates: Vec<CandidateId>,
    above_counts: Vec<usize>,
}

fn axis_sides(election: &Election, axis: &[CandidateId], p: CandidateId) -> [AxisSide; 2] {
    let pos = axis
        .iter()
        .position(|&c| c == p)
        .expect("axis is a permutation of the roster");
    let left: Vec<CandidateId> = axis[..pos].iter().rev().copied().collect();
    let right: Vec<CandidateId> = axis[pos + 1..].to_vec();
    let mut sides = [
        AxisSide {
            candidates: left,
            above_counts: Vec::new(),
        },
        AxisSide {
            candidates: right,
            above_counts: Vec::new(),
        },
    ];
    for ballot in election.ballots() {
        let above = ballot.ranked_above(p);
        for side in &mut sides {
            let count = side
                .candidates
                .iter()
                .filter(|c| above.contains(c))
                .count();
            // single-peakedness puts all above-p candidates on one side, as
            // a prefix of the near-to-far list
            debug_assert!(side.candidates[..count].iter().all(|c| above.contains(c)));
            side.above_counts.push(count);
        }
        debug_assert!(
            sides[0].above_counts.last().unwrap() == &0
                || sides[1].above_counts.last().unwrap() == &0
        );
    }
    sides
}

/// Dodgson (`weak = false`) or weakDodgson (`weak = true`) score of `p`
/// for a single-peaked electorate, with a swap plan that wastes no swaps.
///
/// Lifting `p` to the top of a vote helps only against the candidates of
/// one axis side, so the sides are treated independently: on each side,
/// find the outermost candidate still preferred to `p` by more than `H`
/// voters, lift `p` in just enough votes of that form, and in all votes of
/// forms closer to `p`.
pub fn sp_dodgson_score(
    election: &Election,
    axis: &[CandidateId],
    p: CandidateId,
    weak: bool,
) -> Result<(u64, SwapPlan), FastRuleError> {
    require_single_peaked(election, axis)?;
    let n = election.voter_count();
    if n == 0 {
        return Err(FastRuleError::EmptyElection);
    }
    let table = election.majority_table();
    let threshold = Threshold::for_winner(n, weak);
    let score = sp_dodgson_formula_value(&table, p, threshold);

    let mut lifts = alloc::vec![0usize; n];
    for side in axis_sides(election, axis, p) {
        let k = side.candidates.len();
        // n_j = N(t_j, p) for the j-th candidate outward; the largest j
        // still over the threshold fixes which vote forms must be edited
        let over = (1..=k)
            .rev()
            .find(|&j| table.count(side.candidates[j - 1], p) as i64 > threshold.bound);
        let Some(j0) = over else {
            continue;
        };
        let mut remaining =
            table.count(side.candidates[j0 - 1], p) as i64 - threshold.bound;
        for (lift, &count) in lifts.iter_mut().zip(&side.above_counts) {
            if count == 0 || count > j0 {
                continue;
            }
            if count < j0 {
                *lift = count;
            } else if remaining > 0 {
                *lift = count;
                remaining -= 1;
            }
        }
        debug_assert_eq!(remaining, 0);
    }
    let cost: u64 = lifts.iter().map(|&l| l as u64).sum();
    debug_assert_eq!(cost, score);
    Ok((
        score,
        SwapPlan {
            edits: SwapPlanEdits::Lifts(lifts),
            cost,
        },
    ))
}

/// Young (`strong = false`) or strongYoung (`strong = true`) score of `p`
/// for a single-peaked electorate: the most voters that can remain with
/// `p` a (weak) Condorcet winner, with the surviving voters as witness.
///
/// Deleting a vote shrinks the winning threshold along with the
/// electorate, so feasibility is scanned over the number of deletions `t`:
/// with `H_t` the threshold for `n - t` voters, each side independently
/// needs `max_j max(0, N(t_j, p) - H_t)` deletions (removing votes with
/// the most side candidates above `p` first dominates pointwise), and `t`
/// is feasible when the two sides' needs fit within `t`.
pub fn sp_young_score(
    election: &Election,
    axis: &[CandidateId],
    p: CandidateId,
    strong: bool,
) -> Result<(u64, Certificate), FastRuleError> {
    require_single_peaked(election, axis)?;
    let n = election.voter_count();
    let m = election.candidate_count();
    let table = election.majority_table();
    let sides = axis_sides(election, axis, p);
    let side_need = |side: &AxisSide, bound: i64| -> u64 {
        side.candidates
            .iter()
            .map(|&c| (table.count(c, p) as i64 - bound).max(0) as u64)
            .max()
            .unwrap_or(0)
    };
    for t in 0..=n {
        let remaining = n - t;
        let threshold = Threshold::for_winner(remaining, !strong);
        if threshold.bound < 0 && m > 1 {
            continue;
        }
        let need_a = side_need(&sides[0], threshold.bound);
        let need_b = side_need(&sides[1], threshold.bound);
        if need_a + need_b > t as u64 {
            continue;
        }
        // delete the required voters per side (most side candidates above
        // p first), then pad with the highest-index remaining voters
        let mut deleted = alloc::vec![false; n];
        for (side, need) in [(&sides[0], need_a), (&sides[1], need_b)] {
            let mut voters: Vec<usize> =
                (0..n).filter(|&v| side.above_counts[v] > 0).collect();
            voters.sort_by_key(|&v| (core::cmp::Reverse(side.above_counts[v]), v));
            for &v in voters.iter().take(need as usize) {
                deleted[v] = true;
            }
        }
        let mut extra = t - (need_a + need_b) as usize;
        for v in (0..n).rev() {
            if extra == 0 {
                break;
            }
            if !deleted[v] {
                deleted[v] = true;
                extra -= 1;
            }
        }
        let survivors: Vec<usize> = (0..n).filter(|&v| !deleted[v]).collect();
        debug_assert_eq!(survivors.len(), remaining);
        return Ok((remaining as u64, Certificate::VoterSubset(survivors)));
    }
    // unattainable (strongYoung with every subset failing): score 0
    Ok((0, Certificate::VoterSubset(Vec::new())))
}

// ---------------------------------------------------------------------------
// Single-crossing electorates
// ---------------------------------------------------------------------------

/// The candidates each voter ranks strictly above `p`.
fn above_p_sets(election: &Election, p: CandidateId) -> Vec<Vec<bool>> {
    let m = election.candidate_count();
    election
        .ballots()
        .iter()
        .map(|b| {
            let mut above = alloc::vec![false; m];
            for c in b.ranked_above(p) {
                above[c.index()] = true;
            }
            above
        })
        .collect()
}

fn sc_young_best(
    election: &Election,
    p: CandidateId,
    strong: bool,
) -> (u64, Vec<usize>) {
    let n = election.voter_count();
    let above = above_p_sets(election, p);
    let m = election.candidate_count();
    let p_top: Vec<bool> = above.iter().map(|a| a.iter().all(|&x| !x)).collect();
    let mut best: (u64, Vec<usize>) = (0, Vec::new());
    let mut consider = |size: u64, survivors: Vec<usize>| {
        if size > best.0 {
            best = (size, survivors);
        }
    };
    // odd subsets: any voter ranking p first as median, flanked evenly
    for (v, &top) in p_top.iter().enumerate() {
        if !top {
            continue;
        }
        let k = v.min(n - 1 - v);
        let mut survivors: Vec<usize> = (0..k).collect();
        survivors.push(v);
        survivors.extend(v + 1..=v + k);
        consider(2 * k as u64 + 1, survivors);
    }
    // even subsets: a median pair with no common candidate above p
    // (for the strict winner: no candidate above p in either median)
    for i in 0..n {
        for j in (i + 1)..n {
            let compatible = if strong {
                p_top[i] && p_top[j]
            } else {
                (0..m).all(|c| c == p.index() || !above[i][c] || !above[j][c])
            };
            if !compatible {
                continue;
            }
            let k = i.min(n - 1 - j);
            let mut survivors: Vec<usize> = (0..k).collect();
            survivors.push(i);
            survivors.push(j);
            survivors.extend(j + 1..j + 1 + k);
            consider(2 * k as u64 + 2, survivors);
        }
    }
    best
}

/// Young score of `p` for a single-crossing electorate.
///
/// A kept subset inherits the single-crossing order, so its median voters
/// decide `p`'s fate: an odd-size subset works exactly when its median
/// ranks `p` first, an even-size subset exactly when no other candidate is
/// preferred to `p` by both medians. It therefore suffices to scan each
/// voter (odd case) and each voter pair (even case) as the prospective
/// medians, keeping as many flanking voters as possible and nothing
/// strictly between the pair.
pub fn sc_young_score(
    election: &Election,
    p: CandidateId,
) -> Result<(u64, Certificate), FastRuleError> {
    require_single_crossing(election)?;
    let (score, survivors) = sc_young_best(election, p, false);
    Ok((score, Certificate::VoterSubset(survivors)))
}

/// strongYoung score of `p` for a single-crossing electorate: as the Young
/// scan, but a winning median (or median pair) must rank `p` first
/// outright; 0 when unattainable.
pub fn sc_strongyoung_score(
    election: &Election,
    p: CandidateId,
) -> Result<(u64, Certificate), FastRuleError> {
    require_single_crossing(election)?;
    let n = election.voter_count();
    let m = election.candidate_count();
    if m == 1 {
        let survivors: Vec<usize> = (0..n).collect();
        return Ok((n as u64, Certificate::VoterSubset(survivors)));
    }
    let (score, survivors) = sc_young_best(election, p, true);
    Ok((score, Certificate::VoterSubset(survivors)))
}

/// Dodgson winners of a single-crossing electorate with the candidates'
/// scores.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScDodgsonOutcome {
    pub winners: Vec<CandidateId>,
    /// Dodgson score of every weak Condorcet winner (only they can win).
    pub candidate_scores: Vec<(CandidateId, u64)>,
}

/// Every Dodgson winner of a single-crossing electorate is a weak
/// Condorcet winner, and a weak Condorcet winner's score is the number of
/// candidates it ties (each tie is broken by one swap at a median voter).
/// With an odd number of voters there are no ties and the median voter's
/// top candidate wins with score 0.
pub fn sc_dodgson_winners(election: &Election) -> Result<ScDodgsonOutcome, FastRuleError> {
    require_single_crossing(election)?;
    let n = election.voter_count();
    if n == 0 {
        return Err(FastRuleError::EmptyElection);
    }
    let m = election.candidate_count();
    let table = election.majority_table();
    let weak_winners = table.condorcet_winners(true);
    let candidate_scores: Vec<(CandidateId, u64)> = weak_winners
        .iter()
        .map(|&p| {
            let ties = (0..m)
                .map(CandidateId)
                .filter(|&a| a != p && table.count(p, a) == table.count(a, p))
                .count() as u64;
            (p, ties)
        })
        .collect();
    let min = candidate_scores
        .iter()
        .map(|&(_, s)| s)
        .min()
        .expect("single-crossing electorates have a weak Condorcet winner");
    let winners: Vec<CandidateId> = candidate_scores
        .iter()
        .filter(|&&(_, s)| s == min)
        .map(|&(c, _)| c)
        .collect();
    Ok(ScDodgsonOutcome {
        winners,
        candidate_scores,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ballots::{replay_lifts, replay_moves, replay_voter_subset};
    use crate::oracles::{
        dichotomous_consensus_exact, dodgson_score_exact, kemeny_score_exact, young_score_exact,
        OracleBudget,
    };
    use alloc::{vec, vec::Vec};

    fn names(k: usize) -> Vec<alloc::string::String> {
        (0..k).map(|i| alloc::format!("c{i}")).collect()
    }

    fn ids(list: &[usize]) -> Vec<CandidateId> {
        list.iter().map(|&i| CandidateId(i)).collect()
    }

    fn ranking(order: &[usize]) -> Ballot {
        Ballot::ranking(&ids(order)).unwrap()
    }

    fn approval(approved: &[usize], rest: &[usize]) -> Ballot {
        Ballot::dichotomous(ids(approved), ids(rest)).unwrap()
    }

    fn election(m: usize, ballots: Vec<Ballot>) -> Election {
        Election::new(names(m), ballots, None).unwrap()
    }

    fn budget() -> OracleBudget {
        OracleBudget::default()
    }

    #[test]
    fn thresholds() {
        assert_eq!(Threshold::for_winner(101, false).bound, 50);
        assert_eq!(Threshold::for_winner(101, true).bound, 50);
        assert_eq!(Threshold::for_winner(4, false).bound, 1);
        assert_eq!(Threshold::for_winner(4, true).bound, 2);
        assert_eq!(Threshold::for_winner(1, false).bound, 0);
        assert_eq!(Threshold::for_winner(0, false).bound, -1);
    }

    #[test]
    fn young_winners_for_dichotomous_votes() {
        let e = election(
            2,
            vec![
                approval(&[0], &[1]),
                approval(&[0], &[1]),
                approval(&[0], &[1]),
                approval(&[1], &[0]),
                approval(&[1], &[0]),
            ],
        );
        assert_eq!(young_winners_dichotomous(&e).unwrap(), ids(&[0]));
        // all-tie electorate: everyone wins
        let tie = election(2, vec![Ballot::new(vec![ids(&[0, 1])]).unwrap()]);
        assert_eq!(young_winners_dichotomous(&tie).unwrap(), ids(&[0, 1]));
        let total = election(3, vec![ranking(&[0, 1, 2])]);
        assert!(matches!(
            young_winners_dichotomous(&total),
            Err(FastRuleError::DomainViolation(_))
        ));
    }

    #[test]
    fn dichotomous_dodgson_matches_oracle_on_examples() {
        // ({a,b} > {c,d}), p = c
        let e = election(4, vec![approval(&[0, 1], &[2, 3])]);
        let (weak, plan) = dodgson_score_dichotomous(&e, CandidateId(2), true).unwrap();
        assert_eq!(weak, 1);
        let SwapPlanEdits::Moves(edits) = plan.edits else {
            panic!()
        };
        assert_eq!(replay_moves(&e, CandidateId(2), true, &edits), Ok(1));
        let (strict, plan) = dodgson_score_dichotomous(&e, CandidateId(2), false).unwrap();
        assert_eq!(strict, 3);
        let SwapPlanEdits::Moves(edits) = plan.edits else {
            panic!()
        };
        assert_eq!(replay_moves(&e, CandidateId(2), false, &edits), Ok(3));
        // already a Condorcet winner
        let won = election(2, vec![approval(&[0], &[1])]);
        assert_eq!(
            dodgson_score_dichotomous(&won, CandidateId(0), false)
                .unwrap()
                .0,
            0
        );
        // p and a approved by everyone: one down-move per blanket rival
        let tied = election(
            3,
            vec![approval(&[0, 1], &[2]), approval(&[0, 1], &[2])],
        );
        let (strict, plan) = dodgson_score_dichotomous(&tied, CandidateId(0), false).unwrap();
        let (oracle, _) = dodgson_score_exact(&tied, CandidateId(0), false, &budget()).unwrap();
        assert_eq!(strict, oracle);
        assert_eq!(strict, 1);
        let SwapPlanEdits::Moves(edits) = plan.edits else {
            panic!()
        };
        assert_eq!(replay_moves(&tied, CandidateId(0), false, &edits), Ok(1));
    }

    #[test]
    fn mean_rule_examples() {
        // approvals {a,b}, {a}, {a,c}
        let e = election(
            3,
            vec![
                approval(&[0, 1], &[2]),
                approval(&[0], &[1, 2]),
                approval(&[0, 2], &[1]),
            ],
        );
        let outcome = mean_rule(&e).unwrap();
        assert_eq!(outcome.consensus, approval(&[0], &[1, 2]));
        assert_eq!(outcome.winners, ids(&[0]));
        assert_eq!(outcome.score, 4);
        // everyone approves everything: all splits score 0, everyone wins
        let all = election(
            2,
            vec![
                Ballot::new(vec![ids(&[0, 1])]).unwrap(),
                Ballot::new(vec![ids(&[0, 1])]).unwrap(),
            ],
        );
        let outcome = mean_rule(&all).unwrap();
        assert_eq!(outcome.winners, ids(&[0, 1]));
        assert_eq!(outcome.score, 0);
        // two voters approving {a} and {b}: symmetric winners
        let sym = election(2, vec![approval(&[0], &[1]), approval(&[1], &[0])]);
        assert_eq!(mean_rule(&sym).unwrap().winners, ids(&[0, 1]));
    }

    #[test]
    fn k22_scores_match_the_constrained_oracle() {
        let e = election(
            3,
            vec![
                approval(&[0, 1], &[2]),
                approval(&[0], &[1, 2]),
                approval(&[0, 2], &[1]),
            ],
        );
        let (b_score, consensus) = k22_kemeny_score(&e, CandidateId(1)).unwrap();
        assert_eq!(b_score, 2);
        assert_eq!(consensus, approval(&[0, 1], &[2]));
        // the unique mean-rule winner's score equals the consensus score
        let outcome = mean_rule(&e).unwrap();
        let (a_score, _) = k22_kemeny_score(&e, CandidateId(0)).unwrap();
        assert_eq!(a_score, outcome.score);
        // a single voter approving only p: every pair contributes one
        let solo = election(4, vec![approval(&[3], &[0, 1, 2])]);
        let (p_score, _) = k22_kemeny_score(&solo, CandidateId(3)).unwrap();
        assert_eq!(p_score, 3);
        // oracle equality on all candidates
        for c in 0..3 {
            let (fast, _) = k22_kemeny_score(&e, CandidateId(c)).unwrap();
            let (exact, _) = dichotomous_consensus_exact(
                &e,
                2,
                ConsensusObjective::NetMax,
                Some(CandidateId(c)),
                &budget(),
            )
            .unwrap();
            assert_eq!(fast, exact, "candidate {c}");
        }
    }

    #[test]
    fn transitive_winners_and_reduction() {
        // (a>b>c), (b>a>c), (b>c>a): single-crossing in this order
        let e = election(
            3,
            vec![ranking(&[0, 1, 2]), ranking(&[1, 0, 2]), ranking(&[1, 2, 0])],
        );
        assert_eq!(
            transitive_majority_winners(&e, MajorityWinnerRule::KemenyTotal).unwrap(),
            ids(&[1])
        );
        let unanimous = election(3, vec![ranking(&[2, 1, 0])]);
        assert_eq!(
            transitive_majority_winners(&unanimous, MajorityWinnerRule::SlaterTotal).unwrap(),
            ids(&[2])
        );
        // Condorcet cycle: rejected with a witness
        let cycle = election(
            3,
            vec![ranking(&[0, 1, 2]), ranking(&[1, 2, 0]), ranking(&[2, 0, 1])],
        );
        assert!(matches!(
            transitive_majority_winners(&cycle, MajorityWinnerRule::KemenyTotal),
            Err(FastRuleError::IntransitiveMajority { .. })
        ));
        // score via winner reduction, kemeny-min, p = a
        let (score, cert) =
            score_via_winner_reduction(&e, CandidateId(0), ConsensusObjective::KemenyMin)
                .unwrap();
        assert_eq!(score, 3);
        let (exact, _) = kemeny_score_exact(
            &e,
            Some(CandidateId(0)),
            ConsensusObjective::KemenyMin,
            &budget(),
        )
        .unwrap();
        assert_eq!(score, exact);
        let Certificate::Consensus(order) = cert else {
            panic!()
        };
        assert_eq!(
            e.consensus_score(&order, ConsensusObjective::KemenyMin),
            Ok(score)
        );
        // p = overall winner: score equals the unconstrained optimum
        let (winner_score, _) =
            score_via_winner_reduction(&e, CandidateId(1), ConsensusObjective::KemenyMin)
                .unwrap();
        let (optimum, _) =
            kemeny_score_exact(&e, None, ConsensusObjective::KemenyMin, &budget()).unwrap();
        assert_eq!(winner_score, optimum);
    }

    #[test]
    fn reduction_matches_oracle_for_dichotomous_netmax() {
        let e = election(
            3,
            vec![
                approval(&[0, 1], &[2]),
                approval(&[0], &[1, 2]),
                approval(&[0, 2], &[1]),
            ],
        );
        for c in 0..3 {
            let (fast, _) =
                score_via_winner_reduction(&e, CandidateId(c), ConsensusObjective::NetMax)
                    .unwrap();
            let (exact, _) = kemeny_score_exact(
                &e,
                Some(CandidateId(c)),
                ConsensusObjective::NetMax,
                &budget(),
            )
            .unwrap();
            assert_eq!(fast, exact, "candidate {c}");
        }
    }

    #[test]
    fn k2k_slater_matches_oracle() {
        let e = election(
            3,
            vec![
                approval(&[0, 1], &[2]),
                approval(&[0], &[1, 2]),
                approval(&[0, 2], &[1]),
            ],
        );
        for k in [2, 3, 5] {
            for c in 0..3 {
                let (fast, cert) = k2k_slater_score(&e, CandidateId(c), k).unwrap();
                let (exact, _) = dichotomous_consensus_exact(
                    &e,
                    k,
                    ConsensusObjective::Slater,
                    Some(CandidateId(c)),
                    &budget(),
                )
                .unwrap();
                assert_eq!(fast, exact, "candidate {c}, k = {k}");
                let Certificate::Consensus(order) = cert else {
                    panic!()
                };
                assert_eq!(
                    e.consensus_score(&order, ConsensusObjective::Slater),
                    Ok(fast)
                );
            }
        }
    }

    // The worked 101-voter single-peaked electorate on axis a1 a2 a3 a4 p:
    // 10 x (a1>a2>a3>a4>p), 50 x (a2>a3>a4>p>a1), 10 x (a3>a4>p>a2>a1),
    // 20 x (a4>p>a3>a2>a1), 11 x (p>a4>a3>a2>a1). Ids a1..a4,p = 0..4.
    fn hundred_one_voters() -> Election {
        let mut ballots = Vec::new();
        for _ in 0..10 {
            ballots.push(ranking(&[0, 1, 2, 3, 4]));
        }
        for _ in 0..50 {
            ballots.push(ranking(&[1, 2, 3, 4, 0]));
        }
        for _ in 0..10 {
            ballots.push(ranking(&[2, 3, 4, 1, 0]));
        }
        for _ in 0..20 {
            ballots.push(ranking(&[3, 4, 2, 1, 0]));
        }
        for _ in 0..11 {
            ballots.push(ranking(&[4, 3, 2, 1, 0]));
        }
        Election::new(names(5), ballots, Some(ids(&[0, 1, 2, 3, 4]))).unwrap()
    }

    #[test]
    fn sp_dodgson_on_the_hundred_one_voter_electorate() {
        let e = hundred_one_voters();
        let axis = e.axis().unwrap().to_vec();
        let (score, plan) = sp_dodgson_score(&e, &axis, CandidateId(4), false).unwrap();
        assert_eq!(score, 70);
        assert_eq!(plan.cost, 70);
        let SwapPlanEdits::Lifts(lifts) = plan.edits else {
            panic!()
        };
        assert_eq!(replay_lifts(&e, CandidateId(4), false, &lifts), Ok(70));
        // no swap is wasted: every over-threshold rival ends at exactly H
        let mut edited = Vec::new();
        for (ballot, &l) in e.ballots().iter().zip(&lifts) {
            edited.push(ballot.lift(CandidateId(4), l).unwrap());
        }
        let after = Election::new(e.names().to_vec(), edited, None).unwrap();
        let table_before = e.majority_table();
        let table_after = after.majority_table();
        for c in (0..4).map(CandidateId) {
            if table_before.count(c, CandidateId(4)) > 50 {
                assert_eq!(table_after.count(c, CandidateId(4)), 50);
            }
        }
    }

    #[test]
    fn sp_dodgson_trivial_and_error_cases() {
        // p is everyone's peak
        let e = Election::new(
            names(3),
            vec![ranking(&[2, 1, 0]), ranking(&[2, 1, 0])],
            Some(ids(&[0, 1, 2])),
        )
        .unwrap();
        let axis = e.axis().unwrap().to_vec();
        let (score, _) = sp_dodgson_score(&e, &axis, CandidateId(2), false).unwrap();
        assert_eq!(score, 0);
        // a non-single-peaked vote is rejected
        let bad = Election::new(names(3), vec![ranking(&[0, 2, 1])], None).unwrap();
        assert!(matches!(
            sp_dodgson_score(&bad, &ids(&[0, 1, 2]), CandidateId(0), false),
            Err(FastRuleError::DomainViolation(_))
        ));
        let empty = Election::new(names(3), vec![], None).unwrap();
        assert!(matches!(
            sp_dodgson_score(&empty, &ids(&[0, 1, 2]), CandidateId(0), false),
            Err(FastRuleError::EmptyElection)
        ));
    }

    #[test]
    fn sp_young_against_the_subset_oracle() {
        // a 21-voter replica of the worked electorate (one fifth per block)
        let mut ballots = Vec::new();
        for _ in 0..2 {
            ballots.push(ranking(&[0, 1, 2, 3, 4]));
        }
        for _ in 0..10 {
            ballots.push(ranking(&[1, 2, 3, 4, 0]));
        }
        for _ in 0..2 {
            ballots.push(ranking(&[2, 3, 4, 1, 0]));
        }
        for _ in 0..4 {
            ballots.push(ranking(&[3, 4, 2, 1, 0]));
        }
        for _ in 0..3 {
            ballots.push(ranking(&[4, 3, 2, 1, 0]));
        }
        let e = Election::new(names(5), ballots, Some(ids(&[0, 1, 2, 3, 4]))).unwrap();
        let axis = e.axis().unwrap().to_vec();
        let budget = OracleBudget {
            max_subset_voters: 21,
            ..OracleBudget::default()
        };
        for strong in [false, true] {
            let (fast, cert) = sp_young_score(&e, &axis, CandidateId(4), strong).unwrap();
            let (exact, _) = young_score_exact(&e, CandidateId(4), strong, &budget).unwrap();
            assert_eq!(fast, exact, "strong = {strong}");
            let Certificate::VoterSubset(survivors) = cert else {
                panic!()
            };
            assert_eq!(
                replay_voter_subset(&e, CandidateId(4), strong, &survivors),
                Ok(fast)
            );
        }
        // p is everyone's peak: keep all voters
        let unanimous = Election::new(
            names(3),
            vec![ranking(&[2, 1, 0]); 4],
            Some(ids(&[0, 1, 2])),
        )
        .unwrap();
        let axis = unanimous.axis().unwrap().to_vec();
        assert_eq!(
            sp_young_score(&unanimous, &axis, CandidateId(2), false)
                .unwrap()
                .0,
            4
        );
    }

    #[test]
    fn sc_young_scores() {
        // v1 (p>a>b), v2 (a>p>b), v3 (a>b>p); ids p,a,b = 0,1,2
        let e = election(
            3,
            vec![ranking(&[0, 1, 2]), ranking(&[1, 0, 2]), ranking(&[1, 2, 0])],
        );
        let (young, cert) = sc_young_score(&e, CandidateId(0)).unwrap();
        assert_eq!(young, 2);
        let Certificate::VoterSubset(survivors) = cert else {
            panic!()
        };
        assert_eq!(survivors, vec![0, 1]);
        assert_eq!(
            replay_voter_subset(&e, CandidateId(0), false, &survivors),
            Ok(2)
        );
        let (strong, cert) = sc_strongyoung_score(&e, CandidateId(0)).unwrap();
        assert_eq!(strong, 1);
        let Certificate::VoterSubset(survivors) = cert else {
            panic!()
        };
        assert_eq!(
            replay_voter_subset(&e, CandidateId(0), true, &survivors),
            Ok(1)
        );
        // everyone ranks p first
        let all = election(2, vec![ranking(&[0, 1]); 5]);
        assert_eq!(sc_young_score(&all, CandidateId(0)).unwrap().0, 5);
        assert_eq!(sc_strongyoung_score(&all, CandidateId(0)).unwrap().0, 5);
        // oracle agreement on this instance for every candidate
        for c in 0..3 {
            for strong in [false, true] {
                let fast = if strong {
                    sc_strongyoung_score(&e, CandidateId(c)).unwrap().0
                } else {
                    sc_young_score(&e, CandidateId(c)).unwrap().0
                };
                let (exact, _) =
                    young_score_exact(&e, CandidateId(c), strong, &budget()).unwrap();
                assert_eq!(fast, exact, "candidate {c} strong {strong}");
            }
        }
    }

    #[test]
    fn sc_dodgson_winner_examples() {
        // the four-voter electorate where a beats everyone 4-0
        let e = election(
            4,
            vec![
                ranking(&[0, 1, 2, 3]),
                ranking(&[0, 1, 2, 3]),
                ranking(&[0, 3, 2, 1]),
                ranking(&[0, 3, 2, 1]),
            ],
        );
        let outcome = sc_dodgson_winners(&e).unwrap();
        assert_eq!(outcome.winners, ids(&[0]));
        assert_eq!(outcome.candidate_scores, vec![(CandidateId(0), 0)]);
        let (exact, _) = dodgson_score_exact(&e, CandidateId(0), false, &budget()).unwrap();
        assert_eq!(exact, 0);
        // odd voter count: the median voter's top candidate wins
        let odd = election(
            3,
            vec![ranking(&[0, 1, 2]), ranking(&[1, 0, 2]), ranking(&[1, 2, 0])],
        );
        let outcome = sc_dodgson_winners(&odd).unwrap();
        assert_eq!(outcome.winners, ids(&[1]));
        // non-single-crossing input is rejected
        let bad = Election::new(
            names(4),
            vec![
                ranking(&[0, 1, 2, 3]),
                ranking(&[1, 2, 3, 0]),
                ranking(&[2, 1, 0, 3]),
            ],
            None,
        )
        .unwrap();
        assert!(matches!(
            sc_dodgson_winners(&bad),
            Err(FastRuleError::DomainViolation(_))
        ));
    }

    #[test]
    fn slater_pair_contributions_follow_the_case_table() {
        // weak orders over a, b, c encoded as group lists; rows are the
        // majority relation, columns the consensus order before the a/b
        // swap. Every row has a >_m b, every column b > a.
        let rows: [Vec<Vec<usize>>; 5] = [
            vec![vec![2], vec![0], vec![1]],
            vec![vec![0, 2], vec![1]],
            vec![vec![0], vec![2], vec![1]],
            vec![vec![0], vec![1, 2]],
            vec![vec![0], vec![1], vec![2]],
        ];
        let cols: [Vec<Vec<usize>>; 5] = [
            vec![vec![2], vec![1], vec![0]],
            vec![vec![1, 2], vec![0]],
            vec![vec![1], vec![2], vec![0]],
            vec![vec![1], vec![0, 2]],
            vec![vec![1], vec![0], vec![2]],
        ];
        // per cell: ({a,c}, {b,c}) contributions for the order, then for
        // the swapped order
        let expected: [[(i64, i64, i64, i64); 5]; 5] = [
            [
                (2, 2, 2, 2),
                (2, 1, 1, 2),
                (2, 0, 0, 2),
                (1, 0, 0, 1),
                (0, 0, 0, 0),
            ],
            [
                (1, 2, 1, 2),
                (1, 1, 2, 2),
                (1, 0, 1, 2),
                (2, 0, 1, 1),
                (1, 0, 1, 0),
            ],
            [
                (0, 2, 0, 2),
                (0, 1, 1, 2),
                (0, 0, 2, 2),
                (1, 0, 2, 1),
                (2, 0, 2, 0),
            ],
            [
                (0, 1, 0, 1),
                (0, 2, 1, 1),
                (0, 1, 2, 1),
                (1, 1, 2, 2),
                (2, 1, 2, 1),
            ],
            [
                (0, 0, 0, 0),
                (0, 1, 1, 0),
                (0, 2, 2, 0),
                (1, 2, 2, 1),
                (2, 2, 2, 2),
            ],
        ];
        let (a, b, c) = (CandidateId(0), CandidateId(1), CandidateId(2));
        for (ri, row) in rows.iter().enumerate() {
            // realize the majority relation by one approval ballot per level
            let majority = Ballot::new(row.iter().map(|g| ids(g)).collect()).unwrap();
            let mut approved: Vec<usize> = Vec::new();
            let mut ballots = Vec::new();
            for group in &row[..row.len() - 1] {
                approved.extend_from_slice(group);
                let rest: Vec<usize> =
                    (0..3).filter(|x| !approved.contains(x)).collect();
                ballots.push(approval(&approved, &rest));
            }
            let e = election(3, ballots);
            let table = e.majority_table();
            // sanity: the realized majority relation matches the row
            for x in 0..3 {
                for y in 0..3 {
                    if x != y {
                        assert_eq!(
                            table.beats(CandidateId(x), CandidateId(y)),
                            majority.prefers(CandidateId(x), CandidateId(y))
                        );
                    }
                }
            }
            for (ci, col) in cols.iter().enumerate() {
                let order = Ballot::new(col.iter().map(|g| ids(g)).collect()).unwrap();
                let swapped = order.swap_candidates(a, b);
                let got = (
                    slater_pair_contribution(&table, &order, a, c),
                    slater_pair_contribution(&table, &order, b, c),
                    slater_pair_contribution(&table, &swapped, a, c),
                    slater_pair_contribution(&table, &swapped, b, c),
                );
                assert_eq!(got, expected[ri][ci], "row {ri}, column {ci}");
                // the swap flips {a,b} from 0 to 2 and never loses more
                // overall; the total score rises by an even step
                let before = table
                    .consensus_score(&order, ConsensusObjective::Slater)
                    .unwrap();
                let after = table
                    .consensus_score(&swapped, ConsensusObjective::Slater)
                    .unwrap();
                assert!(after > before, "row {ri}, column {ci}");
                assert_eq!((after - before) % 2, 0);
            }
        }
    }
}
