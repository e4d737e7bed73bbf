//! Election data model: candidates, weak-order ballots, pairwise majority
//! tables, ballot edits, consensus objectives and replayable certificates.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Dense candidate index, `0..m-1` within one election.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CandidateId(pub usize);

impl CandidateId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for CandidateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.0)
    }
}

/// A candidate together with its display name.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Candidate {
    pub id: CandidateId,
    pub name: String,
}

/// Errors raised by construction and editing of elections and ballots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ElectionError {
    EmptyGroup,
    DuplicateCandidate(CandidateId),
    UnknownCandidate(CandidateId),
    MissingCandidate(CandidateId),
    InvalidName(String),
    DuplicateName(String),
    InvalidAxis,
    VoterOutOfRange(usize),
    EmptyCandidateSubset,
    NonDichotomousBallot,
    ImpossibleMove,
    InvalidPair,
    MismatchedCandidates,
}

impl fmt::Display for ElectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElectionError::EmptyGroup => write!(f, "ballot group is empty"),
            ElectionError::DuplicateCandidate(c) => {
                write!(f, "candidate {c} appears more than once in a ballot")
            }
            ElectionError::UnknownCandidate(c) => write!(f, "candidate {c} is not in the roster"),
            ElectionError::MissingCandidate(c) => {
                write!(f, "candidate {c} is missing from a ballot")
            }
            ElectionError::InvalidName(n) => write!(f, "invalid candidate name {n:?}"),
            ElectionError::DuplicateName(n) => write!(f, "duplicate candidate name {n:?}"),
            ElectionError::InvalidAxis => write!(f, "axis is not a permutation of the roster"),
            ElectionError::VoterOutOfRange(v) => write!(f, "voter index {v} is out of range"),
            ElectionError::EmptyCandidateSubset => write!(f, "candidate subset is empty"),
            ElectionError::NonDichotomousBallot => {
                write!(f, "ballot has more than two groups")
            }
            ElectionError::ImpossibleMove => write!(f, "candidate is already in the target group"),
            ElectionError::InvalidPair => write!(f, "pair must consist of distinct candidates"),
            ElectionError::MismatchedCandidates => {
                write!(f, "order does not range over the election's candidates")
            }
        }
    }
}

impl core::error::Error for ElectionError {}

/// A ballot: an ordered partition of the candidate set into indifference
/// groups, most preferred group first.
///
/// A ballot with `m` singleton groups is a total order; one with at most two
/// groups is dichotomous (approved > disapproved). A single-group ballot
/// states no strict preference at all; the dichotomous move model treats it
/// as "everyone approved".
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Ballot {
    groups: Vec<Vec<CandidateId>>,
}

impl Ballot {
    /// Builds a ballot from nonempty, pairwise-disjoint groups. Groups are
    /// canonicalized to ascending candidate id.
    pub fn new(groups: Vec<Vec<CandidateId>>) -> Result<Self, ElectionError> {
        if groups.is_empty() {
            return Err(ElectionError::EmptyGroup);
        }
        let mut groups = groups;
        let mut seen: Vec<CandidateId> = Vec::new();
        for group in &mut groups {
            if group.is_empty() {
                return Err(ElectionError::EmptyGroup);
            }
            group.sort_unstable();
            for &c in group.iter() {
                seen.push(c);
            }
        }
        seen.sort_unstable();
        for w in seen.windows(2) {
            if w[0] == w[1] {
                return Err(ElectionError::DuplicateCandidate(w[0]));
            }
        }
        Ok(Ballot { groups })
    }

    /// A total order, most preferred first.
    pub fn ranking(order: &[CandidateId]) -> Result<Self, ElectionError> {
        Ballot::new(order.iter().map(|&c| alloc::vec![c]).collect())
    }

    /// A dichotomous ballot `approved > disapproved`. An empty side is
    /// normalized away, leaving a single all-tied group.
    pub fn dichotomous(
        approved: Vec<CandidateId>,
        disapproved: Vec<CandidateId>,
    ) -> Result<Self, ElectionError> {
        match (approved.is_empty(), disapproved.is_empty()) {
            (true, true) => Err(ElectionError::EmptyGroup),
            (true, false) => Ballot::new(alloc::vec![disapproved]),
            (false, true) => Ballot::new(alloc::vec![approved]),
            (false, false) => Ballot::new(alloc::vec![approved, disapproved]),
        }
    }

    pub fn groups(&self) -> &[Vec<CandidateId>] {
        &self.groups
    }

    pub fn group_count(&self) -> usize {
        self.groups.len()
    }

    pub fn candidate_count(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }

    pub fn is_total_order(&self) -> bool {
        self.groups.iter().all(|g| g.len() == 1)
    }

    pub fn is_dichotomous(&self) -> bool {
        self.groups.len() <= 2
    }

    /// Group index of each candidate; `ranks[c] = i` iff `c` lies in group
    /// `i`. All ids must be below `m`.
    pub fn group_ranks(&self, m: usize) -> Vec<usize> {
        let mut ranks = alloc::vec![usize::MAX; m];
        for (i, group) in self.groups.iter().enumerate() {
            for &c in group {
                ranks[c.index()] = i;
            }
        }
        ranks
    }

    /// Does this ballot state the strict preference `a > b`?
    pub fn prefers(&self, a: CandidateId, b: CandidateId) -> bool {
        let (mut ra, mut rb) = (usize::MAX, usize::MAX);
        for (i, group) in self.groups.iter().enumerate() {
            if group.contains(&a) {
                ra = i;
            }
            if group.contains(&b) {
                rb = i;
            }
        }
        ra < rb
    }

    /// The candidates a total-order ballot ranks strictly above `c`.
    pub fn ranked_above(&self, c: CandidateId) -> Vec<CandidateId> {
        let mut above = Vec::new();
        for group in &self.groups {
            if group.contains(&c) {
                break;
            }
            above.extend_from_slice(group);
        }
        above
    }

    /// Moves one candidate between the two sides of a dichotomous ballot;
    /// one move is one unit of Dodgson cost in the dichotomous model.
    ///
    /// A single-group ballot counts as "all approved": up-moves are
    /// impossible and a down-move splits the group. A side emptied by the
    /// move is dropped, so moving the last approved candidate down collapses
    /// the ballot to a single group again.
    pub fn apply_dichotomous_move(
        &self,
        candidate: CandidateId,
        direction: MoveDirection,
    ) -> Result<Ballot, ElectionError> {
        if self.groups.len() > 2 {
            return Err(ElectionError::NonDichotomousBallot);
        }
        let in_top = self.groups[0].contains(&candidate);
        let in_bottom = self.groups.len() == 2 && self.groups[1].contains(&candidate);
        if !in_top && !in_bottom {
            return Err(ElectionError::UnknownCandidate(candidate));
        }
        let approved_after: Vec<CandidateId>;
        let disapproved_after: Vec<CandidateId>;
        match direction {
            MoveDirection::Up => {
                if !in_bottom {
                    return Err(ElectionError::ImpossibleMove);
                }
                let mut top = self.groups[0].clone();
                top.push(candidate);
                approved_after = top;
                disapproved_after = self.groups[1]
                    .iter()
                    .copied()
                    .filter(|&c| c != candidate)
                    .collect();
            }
            MoveDirection::Down => {
                if !in_top {
                    return Err(ElectionError::ImpossibleMove);
                }
                approved_after = self.groups[0]
                    .iter()
                    .copied()
                    .filter(|&c| c != candidate)
                    .collect();
                let mut bottom = if self.groups.len() == 2 {
                    self.groups[1].clone()
                } else {
                    Vec::new()
                };
                bottom.push(candidate);
                disapproved_after = bottom;
            }
        }
        Ballot::dichotomous(approved_after, disapproved_after)
    }

    /// Exchanges the positions of two candidates, leaving everything else
    /// in place.
    pub fn swap_candidates(&self, a: CandidateId, b: CandidateId) -> Ballot {
        let groups = self
            .groups
            .iter()
            .map(|group| {
                let mut g: Vec<CandidateId> = group
                    .iter()
                    .map(|&c| {
                        if c == a {
                            b
                        } else if c == b {
                            a
                        } else {
                            c
                        }
                    })
                    .collect();
                g.sort_unstable();
                g
            })
            .collect();
        Ballot { groups }
    }

    /// Moves `candidate` up by `amount` adjacent swaps in a total-order
    /// ballot.
    pub fn lift(&self, candidate: CandidateId, amount: usize) -> Result<Ballot, ElectionError> {
        if !self.is_total_order() {
            return Err(ElectionError::NonDichotomousBallot);
        }
        let pos = self
            .groups
            .iter()
            .position(|g| g[0] == candidate)
            .ok_or(ElectionError::UnknownCandidate(candidate))?;
        if amount > pos {
            return Err(ElectionError::ImpossibleMove);
        }
        let mut order: Vec<CandidateId> = self.groups.iter().map(|g| g[0]).collect();
        order.remove(pos);
        order.insert(pos - amount, candidate);
        Ballot::ranking(&order)
    }
}

/// Direction of a dichotomous move.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum MoveDirection {
    Up,
    Down,
}

/// One unit edit of a dichotomous profile.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BallotEdit {
    pub voter: usize,
    pub candidate: CandidateId,
    pub direction: MoveDirection,
}

/// An election: a candidate roster, ballots in voter order, and an optional
/// societal axis. The ballot sequence is the single source of truth for the
/// voter order used by single-crossing arguments.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Election {
    names: Vec<String>,
    ballots: Vec<Ballot>,
    axis: Option<Vec<CandidateId>>,
}

impl Election {
    pub fn new(
        names: Vec<String>,
        ballots: Vec<Ballot>,
        axis: Option<Vec<CandidateId>>,
    ) -> Result<Self, ElectionError> {
        for name in &names {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(ElectionError::InvalidName(name.clone()));
            }
        }
        let mut sorted = names.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(ElectionError::DuplicateName(w[0].clone()));
            }
        }
        let m = names.len();
        for ballot in &ballots {
            let mut seen = alloc::vec![false; m];
            for group in ballot.groups() {
                for &c in group {
                    if c.index() >= m {
                        return Err(ElectionError::UnknownCandidate(c));
                    }
                    seen[c.index()] = true;
                }
            }
            if let Some(missing) = seen.iter().position(|&s| !s) {
                return Err(ElectionError::MissingCandidate(CandidateId(missing)));
            }
        }
        if let Some(axis) = &axis {
            let mut seen = alloc::vec![false; m];
            if axis.len() != m {
                return Err(ElectionError::InvalidAxis);
            }
            for &c in axis {
                if c.index() >= m || seen[c.index()] {
                    return Err(ElectionError::InvalidAxis);
                }
                seen[c.index()] = true;
            }
        }
        Ok(Election {
            names,
            ballots,
            axis,
        })
    }

    pub fn candidate_count(&self) -> usize {
        self.names.len()
    }

    pub fn voter_count(&self) -> usize {
        self.ballots.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name_of(&self, c: CandidateId) -> &str {
        &self.names[c.index()]
    }

    pub fn candidate(&self, c: CandidateId) -> Candidate {
        Candidate {
            id: c,
            name: self.names[c.index()].clone(),
        }
    }

    pub fn candidate_by_name(&self, name: &str) -> Option<CandidateId> {
        self.names.iter().position(|n| n == name).map(CandidateId)
    }

    pub fn candidates(&self) -> impl Iterator<Item = CandidateId> + '_ {
        (0..self.names.len()).map(CandidateId)
    }

    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    pub fn axis(&self) -> Option<&[CandidateId]> {
        self.axis.as_deref()
    }

    pub fn is_total_order_election(&self) -> bool {
        self.ballots.iter().all(Ballot::is_total_order)
    }

    pub fn is_dichotomous_election(&self) -> bool {
        self.ballots.iter().all(Ballot::is_dichotomous)
    }

    /// Pairwise majority counts: `counts[a][b]` = number of ballots whose
    /// group of `a` precedes the group of `b`.
    pub fn majority_table(&self) -> MajorityTable {
        let m = self.candidate_count();
        let mut counts = alloc::vec![0u32; m * m];
        for ballot in &self.ballots {
            let ranks = ballot.group_ranks(m);
            for a in 0..m {
                for b in 0..m {
                    if ranks[a] < ranks[b] {
                        counts[a * m + b] += 1;
                    }
                }
            }
        }
        MajorityTable {
            n: self.ballots.len(),
            m,
            counts,
        }
    }

    /// Sub-election induced by a set of voter indices. Ballot order and the
    /// axis are preserved; indices are deduplicated.
    pub fn restrict_voters(&self, keep: &[usize]) -> Result<Election, ElectionError> {
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut ballots = Vec::with_capacity(keep.len());
        for &v in &keep {
            let ballot = self
                .ballots
                .get(v)
                .ok_or(ElectionError::VoterOutOfRange(v))?;
            ballots.push(ballot.clone());
        }
        Ok(Election {
            names: self.names.clone(),
            ballots,
            axis: self.axis.clone(),
        })
    }

    /// Sub-election induced by a nonempty candidate subset. Ids are
    /// re-indexed densely in ascending old-id order; every ballot's groups
    /// are intersected with the subset and emptied groups are dropped, which
    /// preserves single-peakedness (on the filtered axis), single-crossing
    /// order and k-chotomousness.
    pub fn restrict_candidates(&self, keep: &[CandidateId]) -> Result<Election, ElectionError> {
        if keep.is_empty() {
            return Err(ElectionError::EmptyCandidateSubset);
        }
        let m = self.candidate_count();
        let mut in_subset = alloc::vec![false; m];
        for &c in keep {
            if c.index() >= m {
                return Err(ElectionError::UnknownCandidate(c));
            }
            in_subset[c.index()] = true;
        }
        let mut new_id = alloc::vec![usize::MAX; m];
        let mut names = Vec::new();
        for old in 0..m {
            if in_subset[old] {
                new_id[old] = names.len();
                names.push(self.names[old].clone());
            }
        }
        let map = |old: CandidateId| CandidateId(new_id[old.index()]);
        let mut ballots = Vec::with_capacity(self.ballots.len());
        for ballot in &self.ballots {
            let groups: Vec<Vec<CandidateId>> = ballot
                .groups()
                .iter()
                .filter_map(|group| {
                    let g: Vec<CandidateId> = group
                        .iter()
                        .filter(|c| in_subset[c.index()])
                        .map(|&c| map(c))
                        .collect();
                    if g.is_empty() {
                        None
                    } else {
                        Some(g)
                    }
                })
                .collect();
            ballots.push(Ballot::new(groups)?);
        }
        let axis = self.axis.as_ref().map(|axis| {
            axis.iter()
                .filter(|c| in_subset[c.index()])
                .map(|&c| map(c))
                .collect()
        });
        Ok(Election {
            names,
            ballots,
            axis,
        })
    }

    /// Objective value of a consensus order against this electorate.
    pub fn consensus_score(
        &self,
        order: &Ballot,
        objective: ConsensusObjective,
    ) -> Result<i64, ElectionError> {
        self.majority_table().consensus_score(order, objective)
    }
}

/// The three consensus objectives.
///
/// * `KemenyMin` — sum of Kendall tau distance, `Σ_{a>b} N(b,a)`, minimized;
/// * `NetMax` — `Σ_{a>b} (N(a,b) − N(b,a))`, maximized;
/// * `Slater` — the number of ordered pairs `(a,b)` with `a > b` iff
///   `a >_m b`, maximized. A pair tied in both the order and the majority
///   relation agrees in both directions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConsensusObjective {
    KemenyMin,
    NetMax,
    Slater,
}

/// Pairwise majority counts of an election.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MajorityTable {
    n: usize,
    m: usize,
    counts: Vec<u32>,
}

impl MajorityTable {
    pub fn voter_count(&self) -> usize {
        self.n
    }

    pub fn candidate_count(&self) -> usize {
        self.m
    }

    /// `N(a,b)`: the number of ballots strictly preferring `a` to `b`.
    pub fn count(&self, a: CandidateId, b: CandidateId) -> u32 {
        self.counts[a.index() * self.m + b.index()]
    }

    /// `N(a,b) − N(b,a)`.
    pub fn net_preference(&self, a: CandidateId, b: CandidateId) -> Result<i64, ElectionError> {
        if a == b {
            return Err(ElectionError::InvalidPair);
        }
        Ok(self.count(a, b) as i64 - self.count(b, a) as i64)
    }

    /// Does `a` beat `b` by strict pairwise majority?
    pub fn beats(&self, a: CandidateId, b: CandidateId) -> bool {
        self.count(a, b) > self.count(b, a)
    }

    /// Candidates beating (`weak = false`) or beating-or-tying
    /// (`weak = true`) every other candidate pairwise.
    pub fn condorcet_winners(&self, weak: bool) -> Vec<CandidateId> {
        (0..self.m)
            .map(CandidateId)
            .filter(|&p| {
                (0..self.m).map(CandidateId).all(|a| {
                    if a == p {
                        true
                    } else if weak {
                        self.count(p, a) >= self.count(a, p)
                    } else {
                        self.count(p, a) > self.count(a, p)
                    }
                })
            })
            .collect()
    }

    /// First triple `(a,b,c)` with `a >_m b`, `b >_m c` but not `a >_m c`,
    /// if the strict majority relation is not transitive.
    pub fn transitivity_violation(&self) -> Option<(CandidateId, CandidateId, CandidateId)> {
        let ids = || (0..self.m).map(CandidateId);
        for a in ids() {
            for b in ids() {
                if a == b || !self.beats(a, b) {
                    continue;
                }
                for c in ids() {
                    if c == a || c == b {
                        continue;
                    }
                    if self.beats(b, c) && !self.beats(a, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn consensus_score(
        &self,
        order: &Ballot,
        objective: ConsensusObjective,
    ) -> Result<i64, ElectionError> {
        if order.candidate_count() != self.m {
            return Err(ElectionError::MismatchedCandidates);
        }
        for group in order.groups() {
            for c in group {
                if c.index() >= self.m {
                    return Err(ElectionError::UnknownCandidate(*c));
                }
            }
        }
        let ranks = order.group_ranks(self.m);
        let mut score = 0i64;
        for a in 0..self.m {
            for b in 0..self.m {
                if a == b {
                    continue;
                }
                let above = ranks[a] < ranks[b];
                let (ca, cb) = (CandidateId(a), CandidateId(b));
                match objective {
                    ConsensusObjective::KemenyMin => {
                        if above {
                            score += self.count(cb, ca) as i64;
                        }
                    }
                    ConsensusObjective::NetMax => {
                        if above {
                            score += self.count(ca, cb) as i64 - self.count(cb, ca) as i64;
                        }
                    }
                    ConsensusObjective::Slater => {
                        if above == self.beats(ca, cb) {
                            score += 1;
                        }
                    }
                }
            }
        }
        Ok(score)
    }
}

/// A replayable witness substantiating a reported score.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Certificate {
    None,
    /// Voter indices kept (Young-family scores).
    VoterSubset(Vec<usize>),
    /// Unit edits of a dichotomous profile (Dodgson-family scores).
    Moves(Vec<BallotEdit>),
    /// Per-voter upward move counts of the scored candidate in a
    /// total-order profile (Dodgson-family scores).
    Lifts(Vec<usize>),
    /// A consensus order (Kemeny/Slater-family scores).
    Consensus(Ballot),
}

/// Errors raised when replaying a certificate against an election.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReplayError {
    Election(ElectionError),
    /// The edited or restricted electorate does not make the candidate the
    /// required kind of winner.
    NotWinner,
    WrongShape,
}

impl fmt::Display for ReplayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReplayError::Election(e) => write!(f, "{e}"),
            ReplayError::NotWinner => write!(f, "certificate does not produce the claimed winner"),
            ReplayError::WrongShape => write!(f, "certificate shape does not fit the election"),
        }
    }
}

impl core::error::Error for ReplayError {}

impl From<ElectionError> for ReplayError {
    fn from(e: ElectionError) -> Self {
        ReplayError::Election(e)
    }
}

fn is_winner(election: &Election, p: CandidateId, weak: bool) -> bool {
    election.majority_table().condorcet_winners(weak).contains(&p)
}

/// Replays a voter-subset certificate: the score is the subset size,
/// provided `p` is a weak Condorcet (`strong = false`) or Condorcet
/// (`strong = true`) winner of the restriction.
pub fn replay_voter_subset(
    election: &Election,
    p: CandidateId,
    strong: bool,
    voters: &[usize],
) -> Result<u64, ReplayError> {
    let sub = election.restrict_voters(voters)?;
    if sub.voter_count() != voters.len() {
        return Err(ReplayError::WrongShape);
    }
    if is_winner(&sub, p, !strong) {
        Ok(voters.len() as u64)
    } else {
        Err(ReplayError::NotWinner)
    }
}

/// Replays a dichotomous move-sequence certificate: the score is the number
/// of edits, provided they are all legal and leave `p` a (weak) Condorcet
/// winner.
pub fn replay_moves(
    election: &Election,
    p: CandidateId,
    weak: bool,
    edits: &[BallotEdit],
) -> Result<u64, ReplayError> {
    let mut ballots: Vec<Ballot> = election.ballots().to_vec();
    for edit in edits {
        let ballot = ballots
            .get(edit.voter)
            .ok_or(ElectionError::VoterOutOfRange(edit.voter))?;
        ballots[edit.voter] = ballot.apply_dichotomous_move(edit.candidate, edit.direction)?;
    }
    let edited = Election::new(
        election.names().to_vec(),
        ballots,
        election.axis().map(<[CandidateId]>::to_vec),
    )?;
    if is_winner(&edited, p, weak) {
        Ok(edits.len() as u64)
    } else {
        Err(ReplayError::NotWinner)
    }
}

/// Replays a lift-plan certificate on a total-order profile: the score is
/// the total number of upward adjacent swaps of `p`.
pub fn replay_lifts(
    election: &Election,
    p: CandidateId,
    weak: bool,
    lifts: &[usize],
) -> Result<u64, ReplayError> {
    if lifts.len() != election.voter_count() {
        return Err(ReplayError::WrongShape);
    }
    let mut ballots = Vec::with_capacity(lifts.len());
    for (ballot, &amount) in election.ballots().iter().zip(lifts) {
        ballots.push(ballot.lift(p, amount)?);
    }
    let edited = Election::new(
        election.names().to_vec(),
        ballots,
        election.axis().map(<[CandidateId]>::to_vec),
    )?;
    if is_winner(&edited, p, weak) {
        Ok(lifts.iter().map(|&l| l as u64).sum())
    } else {
        Err(ReplayError::NotWinner)
    }
}
