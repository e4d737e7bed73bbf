//! Exhaustive ground-truth solvers for every score, usable at desk scale.
//!
//! These enumerate voter subsets, edit sequences or consensus orders
//! directly from the definitions and return replayable certificates. They
//! anchor the acceptance tests for the polynomial-time algorithms in
//! [`crate::fast`].

use alloc::vec::Vec;
use core::fmt;

use crate::ballots::{
    Ballot, BallotEdit, CandidateId, Certificate, ConsensusObjective, Election, MoveDirection,
};

/// Limits for the exhaustive searches. Exceeding a budget is a reported
/// error, never silent truncation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OracleBudget {
    /// Largest voter count for subset enumeration.
    pub max_subset_voters: usize,
    /// Largest candidate count for consensus-order enumeration.
    pub max_order_candidates: usize,
    /// Largest explored state count for edit-sequence searches.
    pub max_search_states: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_subset_voters: 18,
            max_order_candidates: 7,
            max_search_states: 5_000_000,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OracleError {
    BudgetExceeded {
        what: &'static str,
        limit: usize,
        required: usize,
    },
    EmptyElection,
    NoCandidates,
    /// The profile mixes total-order and non-total-order ballots; the two
    /// Dodgson edit models cannot be combined.
    MixedBallotKinds,
    /// The profile does not fit the requested edit model.
    ModelMismatch,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::BudgetExceeded {
                what,
                limit,
                required,
            } => write!(f, "budget exceeded: {what} needs {required}, limit {limit}"),
            OracleError::EmptyElection => write!(f, "election has no voters"),
            OracleError::NoCandidates => write!(f, "election has no candidates"),
            OracleError::MixedBallotKinds => {
                write!(f, "profile mixes total-order and dichotomous ballots")
            }
            OracleError::ModelMismatch => {
                write!(f, "profile does not fit the requested edit model")
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// Shape class for Slater consensus orders.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConsensusShape {
    TotalOrder,
    KChotomous(usize),
}

// ---------------------------------------------------------------------------
// Young / strongYoung by subset enumeration
// ---------------------------------------------------------------------------

/// Maximum size of a voter subset for which `p` is a weak Condorcet
/// (`strong = false`) or Condorcet (`strong = true`) winner, with the
/// lexicographically smallest maximum subset as certificate.
///
/// Subsets are enumerated in Gray-code order so each step updates the
/// pairwise counts of `p` by a single ballot. The empty subset is
/// admissible: every candidate is vacuously a weak Condorcet winner of the
/// empty electorate, so the Young score is at least 0. When no subset at
/// all makes `p` a Condorcet winner the strongYoung score is 0 with an
/// empty certificate.
pub fn young_score_exact(
    election: &Election,
    p: CandidateId,
    strong: bool,
    budget: &OracleBudget,
) -> Result<(u64, Certificate), OracleError> {
    let n = election.voter_count();
    if n > budget.max_subset_voters || n >= usize::BITS as usize - 1 {
        return Err(OracleError::BudgetExceeded {
            what: "voter subset enumeration",
            limit: budget.max_subset_voters,
            required: n,
        });
    }
    let m = election.candidate_count();
    // signs[v][a] = +1 if ballot v states a > p, -1 if p > a, 0 on ties
    let signs: Vec<Vec<i8>> = election
        .ballots()
        .iter()
        .map(|ballot| {
            let ranks = ballot.group_ranks(m);
            (0..m)
                .map(|a| {
                    use core::cmp::Ordering::*;
                    match ranks[a].cmp(&ranks[p.index()]) {
                        Less => 1,
                        Greater => -1,
                        Equal => 0,
                    }
                })
                .collect()
        })
        .collect();
    let valid = |deficit: &[i32]| {
        (0..m).filter(|&a| a != p.index()).all(|a| {
            if strong {
                deficit[a] < 0
            } else {
                deficit[a] <= 0
            }
        })
    };

    let mut deficit = alloc::vec![0i32; m];
    let mut best: Option<(u32, usize)> = None; // (popcount, gray mask)
    if valid(&deficit) {
        best = Some((0, 0));
    }
    let mut gray = 0usize;
    for g in 1..(1usize << n) {
        let next = g ^ (g >> 1);
        let flipped = next ^ gray;
        let v = flipped.trailing_zeros() as usize;
        let step: i32 = if next & flipped != 0 { 1 } else { -1 };
        for a in 0..m {
            deficit[a] += step * signs[v][a] as i32;
        }
        gray = next;
        if !valid(&deficit) {
            continue;
        }
        let size = gray.count_ones();
        match best {
            None => best = Some((size, gray)),
            Some((best_size, best_mask)) => {
                if size > best_size {
                    best = Some((size, gray));
                } else if size == best_size && best_mask != gray {
                    // the sorted index list containing the smallest element
                    // of the symmetric difference is lexicographically
                    // smaller
                    let low = (best_mask ^ gray).trailing_zeros();
                    if gray & (1 << low) != 0 {
                        best = Some((size, gray));
                    }
                }
            }
        }
    }
    let (score, mask) = best.unwrap_or((0, 0));
    let voters: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
    Ok((score as u64, Certificate::VoterSubset(voters)))
}

// ---------------------------------------------------------------------------
// Dodgson / weakDodgson
// ---------------------------------------------------------------------------

/// The two unit-edit models for Dodgson-family scores. A two-candidate
/// profile of two-group ballots fits both, and they price it differently
/// (one adjacent swap exchanges two candidates; the group-move model needs
/// an up-move and a down-move), so callers in the dichotomous domain should
/// request `GroupMoves` explicitly.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DodgsonModel {
    /// Adjacent transpositions within total orders.
    AdjacentSwaps,
    /// Moves between the two groups of dichotomous ballots.
    GroupMoves,
}

/// Minimum number of unit ballot edits making `p` a Condorcet
/// (`weak = false`) or weak Condorcet (`weak = true`) winner.
///
/// Total-order profiles use the adjacent-swap model; since only pairs
/// involving `p` matter for `p`'s contests and downward moves of `p` never
/// help, it suffices to enumerate per-ballot upward lift amounts for `p`.
/// Other dichotomous profiles use the group-move model and an exact search
/// over edit plans. Mixed profiles are rejected; to force the group-move
/// model on a profile fitting both, use [`dodgson_score_exact_with`].
pub fn dodgson_score_exact(
    election: &Election,
    p: CandidateId,
    weak: bool,
    budget: &OracleBudget,
) -> Result<(u64, Certificate), OracleError> {
    if election.is_total_order_election() {
        dodgson_score_exact_with(election, p, weak, DodgsonModel::AdjacentSwaps, budget)
    } else if election.is_dichotomous_election() {
        dodgson_score_exact_with(election, p, weak, DodgsonModel::GroupMoves, budget)
    } else if election.voter_count() == 0 {
        Err(OracleError::EmptyElection)
    } else {
        Err(OracleError::MixedBallotKinds)
    }
}

/// As [`dodgson_score_exact`], under an explicitly chosen edit model.
pub fn dodgson_score_exact_with(
    election: &Election,
    p: CandidateId,
    weak: bool,
    model: DodgsonModel,
    budget: &OracleBudget,
) -> Result<(u64, Certificate), OracleError> {
    if election.voter_count() == 0 {
        return Err(OracleError::EmptyElection);
    }
    match model {
        DodgsonModel::AdjacentSwaps => {
            if !election.is_total_order_election() {
                return Err(OracleError::ModelMismatch);
            }
            dodgson_total_order_lifts(election, p, weak, budget)
        }
        DodgsonModel::GroupMoves => {
            if !election.is_dichotomous_election() {
                return Err(OracleError::ModelMismatch);
            }
            dodgson_dichotomous_exact(election, p, weak, budget)
        }
    }
}

fn dodgson_total_order_lifts(
    election: &Election,
    p: CandidateId,
    weak: bool,
    budget: &OracleBudget,
) -> Result<(u64, Certificate), OracleError> {
    let m = election.candidate_count();
    let n = election.voter_count();
    // candidates above p per ballot, nearest first
    let above: Vec<Vec<usize>> = election
        .ballots()
        .iter()
        .map(|b| {
            let ranks = b.group_ranks(m);
            let mut up: Vec<usize> = b.ranked_above(p).iter().map(|c| c.index()).collect();
            up.sort_unstable_by_key(|&a| core::cmp::Reverse(ranks[a]));
            up
        })
        .collect();
    let mut combos = 1usize;
    for up in &above {
        combos = combos.saturating_mul(up.len() + 1);
        if combos > budget.max_search_states {
            return Err(OracleError::BudgetExceeded {
                what: "lift enumeration",
                limit: budget.max_search_states,
                required: combos,
            });
        }
    }
    let table = election.majority_table();
    let mut against_p: Vec<i64> = (0..m)
        .map(|a| table.count(CandidateId(a), p) as i64)
        .collect();
    let wins = |against: &[i64]| {
        (0..m).filter(|&a| a != p.index()).all(|a| {
            if weak {
                2 * against[a] <= n as i64
            } else {
                2 * against[a] < n as i64
            }
        })
    };

    let mut lifts = alloc::vec![0usize; n];
    let mut best: Option<(u64, Vec<usize>)> = None;
    loop {
        if wins(&against_p) {
            let cost: u64 = lifts.iter().map(|&l| l as u64).sum();
            let better = match &best {
                None => true,
                Some((c, v)) => cost < *c || (cost == *c && lifts < *v),
            };
            if better {
                best = Some((cost, lifts.clone()));
            }
        }
        // odometer step, voter 0 least significant
        let mut v = 0;
        loop {
            if v == n {
                let (cost, lifts) = best.expect("lifting p to the top everywhere always wins");
                return Ok((cost, Certificate::Lifts(lifts)));
            }
            if lifts[v] < above[v].len() {
                against_p[above[v][lifts[v]]] -= 1;
                lifts[v] += 1;
                break;
            }
            for &a in &above[v][..lifts[v]] {
                against_p[a] += 1;
            }
            lifts[v] = 0;
            v += 1;
        }
    }
}

/// Approval mask of a dichotomous ballot; a single-group ballot is "all
/// approved".
fn ballot_mask(ballot: &Ballot, m: usize) -> u32 {
    if ballot.group_count() == 1 {
        full_mask(m)
    } else {
        ballot.groups()[0]
            .iter()
            .fold(0u32, |acc, c| acc | (1 << c.index()))
    }
}

fn full_mask(m: usize) -> u32 {
    if m >= 32 {
        u32::MAX
    } else {
        (1u32 << m) - 1
    }
}

/// Legal unit moves from a mask, mirroring `Ballot::apply_dichotomous_move`:
/// a full mask (single group) only allows down-moves, and a mask emptied by
/// a down-move collapses back to the full mask.
fn mask_moves(mask: u32, m: usize) -> Vec<(u32, CandidateId, MoveDirection)> {
    let full = full_mask(m);
    let mut out = Vec::new();
    for c in 0..m {
        let bit = 1u32 << c;
        if mask != full && mask & bit == 0 {
            out.push((mask | bit, CandidateId(c), MoveDirection::Up));
        }
        if mask & bit != 0 {
            let next = mask & !bit;
            let next = if next == 0 { full } else { next };
            if next != mask {
                out.push((next, CandidateId(c), MoveDirection::Down));
            }
        }
    }
    out
}

/// Per-source-mask BFS over the mask graph: distances plus the first
/// discovered incoming move of each mask, for path reconstruction.
struct MaskPaths {
    dist: Vec<u32>,
    parent: Vec<Option<(u32, CandidateId, MoveDirection)>>,
}

fn mask_paths(source: u32, m: usize) -> MaskPaths {
    let size = 1usize << m;
    let mut dist = alloc::vec![u32::MAX; size];
    let mut parent = alloc::vec![None; size];
    let mut queue = alloc::collections::VecDeque::new();
    dist[source as usize] = 0;
    queue.push_back(source);
    while let Some(mask) = queue.pop_front() {
        for (next, c, dir) in mask_moves(mask, m) {
            if dist[next as usize] == u32::MAX {
                dist[next as usize] = dist[mask as usize] + 1;
                parent[next as usize] = Some((mask, c, dir));
                queue.push_back(next);
            }
        }
    }
    MaskPaths { dist, parent }
}

fn mask_path_edits(paths: &MaskPaths, voter: usize, target: u32) -> Vec<BallotEdit> {
    let mut edits = Vec::new();
    let mut at = target;
    while let Some((prev, c, dir)) = paths.parent[at as usize] {
        edits.push(BallotEdit {
            voter,
            candidate: c,
            direction: dir,
        });
        at = prev;
    }
    edits.reverse();
    edits
}

/// Exact dichotomous Dodgson score by dynamic programming over the vector
/// of pairwise deficits of `p`.
///
/// Per ballot, each reachable final mask is priced by its BFS distance in
/// the mask graph; a ballot's effect on `p`'s contests depends only on that
/// final mask, and edit counts add up per ballot, so scanning ballots while
/// tracking the accumulated deficit vector `N(a,p) − N(p,a)` explores every
/// relevant edit plan exactly once. Dominated options (worse deficits at no
/// lower cost) are dropped.
fn dodgson_dichotomous_exact(
    election: &Election,
    p: CandidateId,
    weak: bool,
    budget: &OracleBudget,
) -> Result<(u64, Certificate), OracleError> {
    let m = election.candidate_count();
    let n = election.voter_count();
    let others: Vec<usize> = (0..m).filter(|&a| a != p.index()).collect();
    if others.is_empty() {
        return Ok((0, Certificate::Moves(Vec::new())));
    }
    let radix = 2 * n + 1;
    let mut states = 1usize;
    for _ in &others {
        states = states.saturating_mul(radix);
    }
    let work = states.saturating_mul(n);
    if work > budget.max_search_states || m > 24 {
        return Err(OracleError::BudgetExceeded {
            what: "edit-plan search",
            limit: budget.max_search_states,
            required: work,
        });
    }

    // strides for the mixed-radix deficit vector
    let dims = others.len();
    let mut stride = alloc::vec![0usize; dims];
    let mut acc = 1usize;
    for s in stride.iter_mut() {
        *s = acc;
        acc *= radix;
    }

    // per tracked candidate, a final mask's contribution to p's deficit
    let signature = |mask: u32| -> Vec<i8> {
        let full = full_mask(m);
        let p_app = mask & (1 << p.index()) != 0;
        others
            .iter()
            .map(|&a| {
                if mask == full {
                    0
                } else {
                    let a_app = mask & (1 << a) != 0;
                    match (a_app, p_app) {
                        (true, false) => 1,
                        (false, true) => -1,
                        _ => 0,
                    }
                }
            })
            .collect()
    };

    struct BallotOption {
        cost: u32,
        offset_delta: isize,
        signature: Vec<i8>,
        final_mask: u32,
    }

    let mut per_ballot: Vec<Vec<BallotOption>> = Vec::with_capacity(n);
    let mut ballot_paths: Vec<MaskPaths> = Vec::with_capacity(n);
    for ballot in election.ballots() {
        let source = ballot_mask(ballot, m);
        let paths = mask_paths(source, m);
        let mut options: Vec<BallotOption> = Vec::new();
        for mask in 1..=full_mask(m) {
            let d = paths.dist[mask as usize];
            if d == u32::MAX {
                continue;
            }
            let sig = signature(mask);
            let dominated = options
                .iter()
                .any(|o| o.cost <= d && o.signature.iter().zip(&sig).all(|(x, y)| x <= y));
            if dominated {
                continue;
            }
            options
                .retain(|o| !(d <= o.cost && sig.iter().zip(&o.signature).all(|(x, y)| x <= y)));
            options.push(BallotOption {
                cost: d,
                offset_delta: 0,
                signature: sig,
                final_mask: mask,
            });
        }
        options.sort_by(|a, b| {
            (a.cost, &a.signature, a.final_mask).cmp(&(b.cost, &b.signature, b.final_mask))
        });
        for o in &mut options {
            o.offset_delta = o
                .signature
                .iter()
                .zip(&stride)
                .map(|(&s, &st)| s as isize * st as isize)
                .sum();
        }
        per_ballot.push(options);
        ballot_paths.push(paths);
    }

    const INF: u32 = u32::MAX;
    let start: usize = stride.iter().map(|st| st * n).sum(); // deficit 0 per digit
    let mut dist = alloc::vec![INF; states];
    let mut next_dist = alloc::vec![INF; states];
    let mut choices: Vec<Vec<u8>> = Vec::with_capacity(n);
    dist[start] = 0;
    for options in &per_ballot {
        let mut choice = alloc::vec![u8::MAX; states];
        next_dist.iter_mut().for_each(|d| *d = INF);
        for (state, &d) in dist.iter().enumerate() {
            if d == INF {
                continue;
            }
            for (i, option) in options.iter().enumerate() {
                let next = (state as isize + option.offset_delta) as usize;
                let cost = d + option.cost;
                if cost < next_dist[next] {
                    next_dist[next] = cost;
                    choice[next] = i as u8;
                }
            }
        }
        core::mem::swap(&mut dist, &mut next_dist);
        choices.push(choice);
    }

    // goal: every tracked deficit <= 0 (weak) or < 0 (strict)
    let digit_bound = if weak { n } else { n - 1 };
    let mut best: Option<(u32, usize)> = None;
    for (state, &d) in dist.iter().enumerate() {
        if d == INF {
            continue;
        }
        let mut rem = state;
        let mut ok = true;
        for _ in 0..dims {
            if rem % radix > digit_bound {
                ok = false;
                break;
            }
            rem /= radix;
        }
        if ok && (best.is_none() || (d, state) < best.unwrap()) {
            best = Some((d, state));
        }
    }
    let (score, goal) = best.expect("approving only p always wins");

    // walk the stage choices backwards to recover each ballot's final mask
    let mut state = goal;
    let mut final_masks = alloc::vec![0u32; n];
    for v in (0..n).rev() {
        let i = choices[v][state] as usize;
        let option = &per_ballot[v][i];
        final_masks[v] = option.final_mask;
        state = (state as isize - option.offset_delta) as usize;
    }
    debug_assert_eq!(state, start);
    let mut edits = Vec::new();
    for (v, &mask) in final_masks.iter().enumerate() {
        edits.extend(mask_path_edits(&ballot_paths[v], v, mask));
    }
    debug_assert_eq!(edits.len() as u32, score);
    Ok((score as u64, Certificate::Moves(edits)))
}

/// Independent second strategy for total-order Dodgson: breadth-first
/// search over whole profiles under arbitrary adjacent transpositions.
/// Exponential; for cross-checking the lift oracle at tiny sizes.
pub fn dodgson_swaps_bfs(
    election: &Election,
    p: CandidateId,
    weak: bool,
    max_states: usize,
) -> Result<u64, OracleError> {
    if election.voter_count() == 0 {
        return Err(OracleError::EmptyElection);
    }
    let m = election.candidate_count();
    let start: Vec<Vec<u8>> = election
        .ballots()
        .iter()
        .map(|b| {
            debug_assert!(b.is_total_order());
            b.groups().iter().map(|g| g[0].index() as u8).collect()
        })
        .collect();
    let wins = |profile: &Vec<Vec<u8>>| {
        let n = profile.len() as i64;
        (0..m as u8).filter(|&a| a as usize != p.index()).all(|a| {
            let against: i64 = profile
                .iter()
                .filter(|order| {
                    order.iter().position(|&x| x == a)
                        < order.iter().position(|&x| x == p.index() as u8)
                })
                .count() as i64;
            if weak {
                2 * against <= n
            } else {
                2 * against < n
            }
        })
    };
    let mut seen = alloc::collections::BTreeSet::new();
    let mut queue = alloc::collections::VecDeque::new();
    seen.insert(start.clone());
    queue.push_back((start, 0u64));
    while let Some((profile, depth)) = queue.pop_front() {
        if wins(&profile) {
            return Ok(depth);
        }
        for v in 0..profile.len() {
            for i in 0..m.saturating_sub(1) {
                let mut next = profile.clone();
                next[v].swap(i, i + 1);
                if seen.insert(next.clone()) {
                    if seen.len() > max_states {
                        return Err(OracleError::BudgetExceeded {
                            what: "swap search",
                            limit: max_states,
                            required: seen.len(),
                        });
                    }
                    queue.push_back((next, depth + 1));
                }
            }
        }
    }
    unreachable!("sorting p to the top everywhere always wins")
}

/// Independent second strategy for dichotomous Dodgson: breadth-first
/// search over whole profiles under unit group moves. Exponential; for
/// cross-checking the deficit-vector search at tiny sizes.
pub fn dodgson_dichotomous_bfs(
    election: &Election,
    p: CandidateId,
    weak: bool,
    max_states: usize,
) -> Result<u64, OracleError> {
    if election.voter_count() == 0 {
        return Err(OracleError::EmptyElection);
    }
    let m = election.candidate_count();
    let full = full_mask(m);
    let start: Vec<u32> = election
        .ballots()
        .iter()
        .map(|b| ballot_mask(b, m))
        .collect();
    let wins = |profile: &Vec<u32>| {
        (0..m).filter(|&a| a != p.index()).all(|a| {
            let mut net = 0i64;
            for &mask in profile {
                if mask == full {
                    continue;
                }
                let a_app = mask & (1 << a) != 0;
                let p_app = mask & (1 << p.index()) != 0;
                match (a_app, p_app) {
                    (true, false) => net += 1,
                    (false, true) => net -= 1,
                    _ => {}
                }
            }
            if weak {
                net <= 0
            } else {
                net < 0
            }
        })
    };
    let mut seen = alloc::collections::BTreeSet::new();
    let mut queue = alloc::collections::VecDeque::new();
    seen.insert(start.clone());
    queue.push_back((start, 0u64));
    while let Some((profile, depth)) = queue.pop_front() {
        if wins(&profile) {
            return Ok(depth);
        }
        for v in 0..profile.len() {
            for (next_mask, _, _) in mask_moves(profile[v], m) {
                let mut next = profile.clone();
                next[v] = next_mask;
                if seen.insert(next.clone()) {
                    if seen.len() > max_states {
                        return Err(OracleError::BudgetExceeded {
                            what: "move search",
                            limit: max_states,
                            required: seen.len(),
                        });
                    }
                    queue.push_back((next, depth + 1));
                }
            }
        }
    }
    unreachable!("approving only p everywhere always wins")
}

// ---------------------------------------------------------------------------
// Kemeny / Slater consensus enumeration
// ---------------------------------------------------------------------------

pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn check_order_budget(m: usize, budget: &OracleBudget) -> Result<(), OracleError> {
    if m > budget.max_order_candidates {
        return Err(OracleError::BudgetExceeded {
            what: "consensus-order enumeration",
            limit: budget.max_order_candidates,
            required: m,
        });
    }
    Ok(())
}

/// Optimum of the objective over all total orders, or over all total orders
/// ranking `p` first. `KemenyMin` minimizes, the others maximize. The
/// certificate is the first optimum in lexicographic order.
pub fn kemeny_score_exact(
    election: &Election,
    p: Option<CandidateId>,
    objective: ConsensusObjective,
    budget: &OracleBudget,
) -> Result<(i64, Certificate), OracleError> {
    let m = election.candidate_count();
    if m == 0 {
        return Err(OracleError::NoCandidates);
    }
    check_order_budget(m, budget)?;
    let table = election.majority_table();
    let minimize = objective == ConsensusObjective::KemenyMin;
    let mut rest: Vec<usize> = (0..m).filter(|&c| Some(CandidateId(c)) != p).collect();
    let mut best: Option<(i64, Ballot)> = None;
    loop {
        let mut order: Vec<CandidateId> = Vec::with_capacity(m);
        if let Some(p) = p {
            order.push(p);
        }
        order.extend(rest.iter().map(|&c| CandidateId(c)));
        let ballot = Ballot::ranking(&order).expect("permutation is a valid ranking");
        let score = table
            .consensus_score(&ballot, objective)
            .expect("order ranges over the roster");
        let better = match &best {
            None => true,
            Some((s, _)) => {
                if minimize {
                    score < *s
                } else {
                    score > *s
                }
            }
        };
        if better {
            best = Some((score, ballot));
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
    let (score, ballot) = best.expect("at least one order exists");
    Ok((score, Certificate::Consensus(ballot)))
}

/// Optimum of the objective over all ballots with at most `k` groups, with
/// `p` (when given) constrained to the first group. Used for the
/// dichotomous-consensus and k-chotomous Slater rules; `k >= m` extends
/// total-order enumeration by the coarser orders.
pub fn dichotomous_consensus_exact(
    election: &Election,
    k: usize,
    objective: ConsensusObjective,
    p: Option<CandidateId>,
    budget: &OracleBudget,
) -> Result<(i64, Certificate), OracleError> {
    assert!(k >= 1, "k must be positive");
    let m = election.candidate_count();
    if m == 0 {
        return Err(OracleError::NoCandidates);
    }
    check_order_budget(m, budget)?;
    let k = k.min(m);
    let table = election.majority_table();
    let minimize = objective == ConsensusObjective::KemenyMin;
    // group assignments, candidate 0 most significant; canonical iff the
    // used group indices form a prefix of 0..k
    let mut digits = alloc::vec![0usize; m];
    let mut best: Option<(i64, Ballot)> = None;
    loop {
        let mut used = 0usize;
        for &d in &digits {
            used |= 1 << d;
        }
        let canonical = used & (used + 1) == 0;
        let p_ok = p.is_none_or(|p| digits[p.index()] == 0);
        if canonical && p_ok {
            let mut groups: Vec<Vec<CandidateId>> = alloc::vec![Vec::new(); k];
            for (c, &d) in digits.iter().enumerate() {
                groups[d].push(CandidateId(c));
            }
            groups.retain(|g| !g.is_empty());
            let ballot = Ballot::new(groups).expect("groups cover the roster");
            let score = table
                .consensus_score(&ballot, objective)
                .expect("order ranges over the roster");
            let better = match &best {
                None => true,
                Some((s, _)) => {
                    if minimize {
                        score < *s
                    } else {
                        score > *s
                    }
                }
            };
            if better {
                best = Some((score, ballot));
            }
        }
        // odometer over k^m assignments, last candidate fastest
        let mut i = m;
        loop {
            if i == 0 {
                let (score, ballot) = best.expect("the single-group order always qualifies");
                return Ok((score, Certificate::Consensus(ballot)));
            }
            i -= 1;
            if digits[i] + 1 < k {
                digits[i] += 1;
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Maximum Slater score over the shape class, with `p` (when given) ranked
/// in the top group.
pub fn slater_score_exact(
    election: &Election,
    p: Option<CandidateId>,
    shape: ConsensusShape,
    budget: &OracleBudget,
) -> Result<(i64, Certificate), OracleError> {
    match shape {
        ConsensusShape::TotalOrder => {
            kemeny_score_exact(election, p, ConsensusObjective::Slater, budget)
        }
        ConsensusShape::KChotomous(k) => {
            dichotomous_consensus_exact(election, k, ConsensusObjective::Slater, p, budget)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ballots::{replay_lifts, replay_moves, replay_voter_subset};
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
    fn young_keeps_everyone_when_p_wins() {
        // 3 x ({p} > {a}), 2 x ({a} > {p}); p = 0
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
        let (score, cert) = young_score_exact(&e, CandidateId(0), false, &budget()).unwrap();
        assert_eq!(score, 5);
        let Certificate::VoterSubset(voters) = cert else {
            panic!()
        };
        assert_eq!(
            replay_voter_subset(&e, CandidateId(0), false, &voters),
            Ok(5)
        );
    }

    #[test]
    fn young_of_a_beaten_candidate_is_zero() {
        let e = election(2, vec![ranking(&[0, 1])]); // a > p, p = 1
        let (score, cert) = young_score_exact(&e, CandidateId(1), false, &budget()).unwrap();
        assert_eq!(score, 0);
        assert_eq!(cert, Certificate::VoterSubset(vec![]));
        let (strong, cert) = young_score_exact(&e, CandidateId(1), true, &budget()).unwrap();
        assert_eq!(strong, 0);
        assert_eq!(cert, Certificate::VoterSubset(vec![]));
    }

    #[test]
    fn young_certificates_are_maximal() {
        // keeping any excluded voter must break the winner condition
        let e = election(
            3,
            vec![
                approval(&[1], &[0, 2]),
                approval(&[1, 2], &[0]),
                approval(&[0], &[1, 2]),
                approval(&[0, 2], &[1]),
                ranking(&[1, 2, 0]),
            ],
        );
        for p in 0..3 {
            for strong in [false, true] {
                let (score, cert) =
                    young_score_exact(&e, CandidateId(p), strong, &budget()).unwrap();
                let Certificate::VoterSubset(voters) = cert else {
                    panic!()
                };
                if score == 0 && strong {
                    continue;
                }
                assert_eq!(
                    replay_voter_subset(&e, CandidateId(p), strong, &voters),
                    Ok(score)
                );
                for extra in 0..e.voter_count() {
                    if voters.contains(&extra) {
                        continue;
                    }
                    let mut grown = voters.clone();
                    grown.push(extra);
                    grown.sort_unstable();
                    assert!(
                        replay_voter_subset(&e, CandidateId(p), strong, &grown).is_err(),
                        "certificate not maximal for p={p} strong={strong}"
                    );
                }
            }
        }
    }

    #[test]
    fn young_budget_is_enforced() {
        let e = election(1, (0..19).map(|_| ranking(&[0])).collect());
        assert!(matches!(
            young_score_exact(&e, CandidateId(0), false, &budget()),
            Err(OracleError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn dodgson_single_crossing_example_scores_six() {
        // (a>b>p>c) x2, (a>c>p>b) x2; candidates a,b,p,c = 0,1,2,3
        let e = election(
            4,
            vec![
                ranking(&[0, 1, 2, 3]),
                ranking(&[0, 1, 2, 3]),
                ranking(&[0, 3, 2, 1]),
                ranking(&[0, 3, 2, 1]),
            ],
        );
        let (score, cert) = dodgson_score_exact(&e, CandidateId(2), false, &budget()).unwrap();
        assert_eq!(score, 6);
        let Certificate::Lifts(lifts) = cert else {
            panic!()
        };
        assert_eq!(replay_lifts(&e, CandidateId(2), false, &lifts), Ok(6));
    }

    #[test]
    fn dodgson_already_winner_scores_zero() {
        let e = election(3, vec![ranking(&[0, 1, 2])]);
        for weak in [false, true] {
            let (score, _) = dodgson_score_exact(&e, CandidateId(0), weak, &budget()).unwrap();
            assert_eq!(score, 0);
        }
    }

    #[test]
    fn dodgson_dichotomous_single_ballot() {
        // ({a,b} > {c,d}): score(c) = 3 (lift c, drop a, drop b), weak = 1
        let e = election(4, vec![approval(&[0, 1], &[2, 3])]);
        let (strict, cert) = dodgson_score_exact(&e, CandidateId(2), false, &budget()).unwrap();
        assert_eq!(strict, 3);
        let Certificate::Moves(edits) = cert else {
            panic!()
        };
        assert_eq!(replay_moves(&e, CandidateId(2), false, &edits), Ok(3));
        let (weak, cert) = dodgson_score_exact(&e, CandidateId(2), true, &budget()).unwrap();
        assert_eq!(weak, 1);
        let Certificate::Moves(edits) = cert else {
            panic!()
        };
        assert_eq!(replay_moves(&e, CandidateId(2), true, &edits), Ok(1));
    }

    #[test]
    fn two_candidate_profiles_fit_both_edit_models() {
        // ({a} > {p}) is a total order and a dichotomous ballot; one swap
        // exchanges the pair, while the group-move model needs an up-move
        // and a down-move for the strict win
        let e = election(2, vec![approval(&[0], &[1])]);
        let p = CandidateId(1);
        let (swaps, _) = dodgson_score_exact(&e, p, false, &budget()).unwrap();
        assert_eq!(swaps, 1);
        let (moves, cert) =
            dodgson_score_exact_with(&e, p, false, DodgsonModel::GroupMoves, &budget()).unwrap();
        assert_eq!(moves, 2);
        let Certificate::Moves(edits) = cert else {
            panic!()
        };
        assert_eq!(replay_moves(&e, p, false, &edits), Ok(2));
        // a model that does not fit the profile is rejected
        let tied = election(2, vec![Ballot::new(vec![ids(&[0, 1])]).unwrap()]);
        assert_eq!(
            dodgson_score_exact_with(&tied, p, false, DodgsonModel::AdjacentSwaps, &budget()),
            Err(OracleError::ModelMismatch)
        );
    }

    #[test]
    fn dodgson_rejects_empty_and_mixed_profiles() {
        let empty = election(2, vec![]);
        assert_eq!(
            dodgson_score_exact(&empty, CandidateId(0), false, &budget()),
            Err(OracleError::EmptyElection)
        );
        let mixed = election(3, vec![ranking(&[0, 1, 2]), approval(&[0, 1], &[2])]);
        assert_eq!(
            dodgson_score_exact(&mixed, CandidateId(0), false, &budget()),
            Err(OracleError::MixedBallotKinds)
        );
    }

    #[test]
    fn lift_oracle_agrees_with_swap_bfs_exhaustively() {
        // every total-order profile with m = 3, n = 2
        let orders: Vec<Vec<usize>> = vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ];
        for o1 in &orders {
            for o2 in &orders {
                let e = election(3, vec![ranking(o1), ranking(o2)]);
                for p in 0..3 {
                    for weak in [false, true] {
                        let (fast, _) =
                            dodgson_score_exact(&e, CandidateId(p), weak, &budget()).unwrap();
                        let slow = dodgson_swaps_bfs(&e, CandidateId(p), weak, 5_000_000).unwrap();
                        assert_eq!(fast, slow, "{o1:?} {o2:?} p={p} weak={weak}");
                    }
                }
            }
        }
    }

    #[test]
    fn deficit_search_agrees_with_move_bfs_exhaustively() {
        // every dichotomous profile with m = 3, n = 2 (7 masks per ballot)
        let mut ballots = Vec::new();
        for mask in 1u32..8 {
            let approved: Vec<usize> = (0..3).filter(|&c| mask & (1 << c) != 0).collect();
            let rest: Vec<usize> = (0..3).filter(|&c| mask & (1 << c) == 0).collect();
            ballots.push(approval(&approved, &rest));
        }
        for b1 in &ballots {
            for b2 in &ballots {
                let e = election(3, vec![b1.clone(), b2.clone()]);
                for p in 0..3 {
                    for weak in [false, true] {
                        let (fast, cert) =
                            dodgson_score_exact(&e, CandidateId(p), weak, &budget()).unwrap();
                        let slow =
                            dodgson_dichotomous_bfs(&e, CandidateId(p), weak, 5_000_000).unwrap();
                        assert_eq!(fast, slow, "{b1:?} {b2:?} p={p} weak={weak}");
                        let Certificate::Moves(edits) = cert else {
                            panic!()
                        };
                        assert_eq!(replay_moves(&e, CandidateId(p), weak, &edits), Ok(fast));
                    }
                }
            }
        }
    }

    #[test]
    fn mask_moves_mirror_ballot_moves() {
        let m = 4;
        for mask in 1..=full_mask(m) {
            let approved: Vec<usize> = (0..m).filter(|&c| mask & (1 << c) != 0).collect();
            let rest: Vec<usize> = (0..m).filter(|&c| mask & (1 << c) == 0).collect();
            let ballot = approval(&approved, &rest);
            assert_eq!(ballot_mask(&ballot, m), mask);
            let mut from_masks: Vec<(u32, usize, MoveDirection)> = mask_moves(mask, m)
                .into_iter()
                .map(|(next, c, d)| (next, c.index(), d))
                .collect();
            let mut from_ballots = Vec::new();
            for c in 0..m {
                for dir in [MoveDirection::Up, MoveDirection::Down] {
                    if let Ok(next) = ballot.apply_dichotomous_move(CandidateId(c), dir) {
                        let next_mask = ballot_mask(&next, m);
                        if next_mask != mask {
                            from_ballots.push((next_mask, c, dir));
                        }
                    }
                }
            }
            from_masks.sort_unstable();
            from_ballots.sort_unstable();
            assert_eq!(from_masks, from_ballots, "mask {mask:b}");
        }
    }

    #[test]
    fn kemeny_consensus_and_candidate_scores() {
        // (a>b>c), (b>a>c), (b>c>a)
        let e = election(
            3,
            vec![ranking(&[0, 1, 2]), ranking(&[1, 0, 2]), ranking(&[1, 2, 0])],
        );
        let (score, cert) =
            kemeny_score_exact(&e, None, ConsensusObjective::KemenyMin, &budget()).unwrap();
        assert_eq!(score, 2);
        assert_eq!(cert, Certificate::Consensus(ranking(&[1, 0, 2])));
        let (a_score, _) = kemeny_score_exact(
            &e,
            Some(CandidateId(0)),
            ConsensusObjective::KemenyMin,
            &budget(),
        )
        .unwrap();
        assert_eq!(a_score, 3);
        // unanimous profile: consensus is the common order with score 0
        let unanimous = election(3, vec![ranking(&[2, 0, 1]), ranking(&[2, 0, 1])]);
        let (score, cert) =
            kemeny_score_exact(&unanimous, None, ConsensusObjective::KemenyMin, &budget())
                .unwrap();
        assert_eq!(score, 0);
        assert_eq!(cert, Certificate::Consensus(ranking(&[2, 0, 1])));
        // single dichotomous ballot ({a} > {b}): net-max consensus a > b, value 1
        let d = election(2, vec![approval(&[0], &[1])]);
        let (score, cert) =
            kemeny_score_exact(&d, None, ConsensusObjective::NetMax, &budget()).unwrap();
        assert_eq!(score, 1);
        assert_eq!(cert, Certificate::Consensus(ranking(&[0, 1])));
    }

    #[test]
    fn dichotomous_consensus_examples() {
        // approvals {a,b}, {a}, {a,c}
        let e = election(
            3,
            vec![
                approval(&[0, 1], &[2]),
                approval(&[0], &[1, 2]),
                approval(&[0, 2], &[1]),
            ],
        );
        let (score, cert) =
            dichotomous_consensus_exact(&e, 2, ConsensusObjective::NetMax, None, &budget())
                .unwrap();
        assert_eq!(score, 4);
        assert_eq!(cert, Certificate::Consensus(approval(&[0], &[1, 2])));
        let (b_score, _) = dichotomous_consensus_exact(
            &e,
            2,
            ConsensusObjective::NetMax,
            Some(CandidateId(1)),
            &budget(),
        )
        .unwrap();
        assert_eq!(b_score, 2);
        // k = m extends total-order enumeration; the optima coincide here
        let (k_eq_m, _) =
            dichotomous_consensus_exact(&e, 3, ConsensusObjective::NetMax, None, &budget())
                .unwrap();
        let (total, _) =
            kemeny_score_exact(&e, None, ConsensusObjective::NetMax, &budget()).unwrap();
        assert_eq!(k_eq_m, total);
    }

    #[test]
    fn slater_scores_against_a_linear_majority() {
        // single ballot a > b > c fixes the majority relation
        let e = election(3, vec![ranking(&[0, 1, 2])]);
        let (score, cert) =
            slater_score_exact(&e, None, ConsensusShape::TotalOrder, &budget()).unwrap();
        assert_eq!(score, 6);
        assert_eq!(cert, Certificate::Consensus(ranking(&[0, 1, 2])));
        // order b > a > c scores 4; swapping the inverted pair reaches 6
        assert_eq!(
            e.consensus_score(&ranking(&[1, 0, 2]), ConsensusObjective::Slater),
            Ok(4)
        );
        // candidate score of c: best order ranking c first is c > a > b,
        // which agrees with the majority relation on the pair {a,b} only
        let (c_score, cert) = slater_score_exact(
            &e,
            Some(CandidateId(2)),
            ConsensusShape::TotalOrder,
            &budget(),
        )
        .unwrap();
        assert_eq!(c_score, 2);
        assert_eq!(cert, Certificate::Consensus(ranking(&[2, 0, 1])));
    }

    #[test]
    fn netmax_and_kemeny_min_are_affinely_related_on_total_orders() {
        // on total-order electorates, netmax = n * pairs - 2 * kemeny-min
        let orders: Vec<Vec<usize>> =
            vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1], vec![2, 1, 0]];
        for o1 in &orders {
            for o2 in &orders {
                for o3 in &orders {
                    let e = election(3, vec![ranking(o1), ranking(o2), ranking(o3)]);
                    let mut perm = vec![0, 1, 2];
                    loop {
                        let order = ranking(&perm);
                        let km = e
                            .consensus_score(&order, ConsensusObjective::KemenyMin)
                            .unwrap();
                        let nm = e
                            .consensus_score(&order, ConsensusObjective::NetMax)
                            .unwrap();
                        assert_eq!(nm, 3 * 3 - 2 * km);
                        if !next_permutation(&mut perm) {
                            break;
                        }
                    }
                }
            }
        }
    }
}
