//! Reduction-instance generation: elections built from graphs whose
//! Young-family scores encode the graph's independence number, plus a
//! verifier that re-checks every claimed identity with the exhaustive
//! oracles or by replaying the construction's witness subsets.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::ballots::{replay_voter_subset, Ballot, CandidateId, Election};
use crate::domains::check_kchotomous;
use crate::oracles::{young_score_exact, OracleBudget, OracleError};

/// An undirected graph without self-loops or parallel edges. Vertices are
/// `0..vertex_count`; edges are stored with the smaller endpoint first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ForgeError {
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    VertexOutOfRange { vertex: usize },
    TooManyVertices { count: usize, limit: usize },
    MissingSecondGraph,
    UnexpectedSecondGraph,
    VertexCountMismatch { g: usize, h: usize },
    NeedsEdge,
    Oracle(OracleError),
}

impl fmt::Display for ForgeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForgeError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            ForgeError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            ForgeError::VertexOutOfRange { vertex } => {
                write!(f, "vertex {vertex} is out of range")
            }
            ForgeError::TooManyVertices { count, limit } => {
                write!(f, "graph has {count} vertices, limit {limit}")
            }
            ForgeError::MissingSecondGraph => write!(f, "this kind needs a second graph"),
            ForgeError::UnexpectedSecondGraph => {
                write!(f, "this kind takes a single graph")
            }
            ForgeError::VertexCountMismatch { g, h } => {
                write!(f, "graphs must have equally many vertices ({g} vs {h})")
            }
            ForgeError::NeedsEdge => write!(f, "both graphs must contain at least one edge"),
            ForgeError::Oracle(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ForgeError {}

impl From<OracleError> for ForgeError {
    fn from(e: OracleError) -> Self {
        ForgeError::Oracle(e)
    }
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, ForgeError> {
        let mut normalized: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == v {
                return Err(ForgeError::SelfLoop { vertex: u });
            }
            let vertex = u.max(v);
            if vertex >= vertex_count {
                return Err(ForgeError::VertexOutOfRange { vertex });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(ForgeError::DuplicateEdge {
                    u: w[0].0,
                    v: w[0].1,
                });
            }
        }
        Ok(Graph {
            vertex_count,
            edges: normalized,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn adjacency_masks(&self) -> Vec<u32> {
        let mut adj = alloc::vec![0u32; self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }
}

const MAX_INDEPENDENCE_VERTICES: usize = 24;

fn mis_size(adj: &[u32], mask: u32, best_so_far: u32) -> u32 {
    if mask == 0 {
        return 0;
    }
    // branch on the vertex of highest remaining degree
    let mut pick = None;
    let mut pick_degree = 0;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let degree = (adj[v] & mask).count_ones();
        if pick.is_none() || degree > pick_degree {
            pick = Some(v);
            pick_degree = degree;
        }
    }
    let v = pick.expect("mask is nonempty");
    if pick_degree == 0 {
        return mask.count_ones();
    }
    let bit = 1u32 << v;
    let include = 1 + mis_size(adj, mask & !adj[v] & !bit, best_so_far.saturating_sub(1));
    let exclude = mis_size(adj, mask & !bit, best_so_far.max(include));
    include.max(exclude)
}

/// Exact independence number with the lexicographically smallest maximum
/// independent set as witness. Exhaustive branch-and-bound; graphs beyond
/// 24 vertices are rejected.
pub fn independence_number(graph: &Graph) -> Result<(usize, Vec<usize>), ForgeError> {
    let n = graph.vertex_count;
    if n > MAX_INDEPENDENCE_VERTICES {
        return Err(ForgeError::TooManyVertices {
            count: n,
            limit: MAX_INDEPENDENCE_VERTICES,
        });
    }
    let adj = graph.adjacency_masks();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let alpha = mis_size(&adj, full, 0);
    let mut witness = Vec::with_capacity(alpha as usize);
    let mut remaining = full;
    let mut need = alpha;
    for v in 0..n {
        if need == 0 {
            break;
        }
        let bit = 1u32 << v;
        if remaining & bit == 0 {
            continue;
        }
        if 1 + mis_size(&adj, remaining & !adj[v] & !bit, 0) == need {
            witness.push(v);
            remaining &= !adj[v] & !bit;
            need -= 1;
        } else {
            remaining &= !bit;
        }
    }
    Ok((alpha as usize, witness))
}

/// The six reduction-instance families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ForgeKind {
    YoungScore,
    StrongYoungScore,
    YoungRanking,
    StrongYoungRanking,
    StrongYoungWinner,
    TrichotomousYoungWinner,
}

impl ForgeKind {
    /// The Young variant the kind's claims quantify over.
    pub fn strong(self) -> bool {
        matches!(
            self,
            ForgeKind::StrongYoungScore
                | ForgeKind::StrongYoungRanking
                | ForgeKind::StrongYoungWinner
        )
    }

    /// The domain (group bound) the forged election lives in.
    pub fn group_bound(self) -> usize {
        match self {
            ForgeKind::TrichotomousYoungWinner => 3,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ForgeKind::YoungScore => "youngscore",
            ForgeKind::StrongYoungScore => "strongyoungscore",
            ForgeKind::YoungRanking => "youngranking",
            ForgeKind::StrongYoungRanking => "strongyoungranking",
            ForgeKind::StrongYoungWinner => "strongyoungwinner",
            ForgeKind::TrichotomousYoungWinner => "trichotomous-youngwinner",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "youngscore" => ForgeKind::YoungScore,
            "strongyoungscore" => ForgeKind::StrongYoungScore,
            "youngranking" => ForgeKind::YoungRanking,
            "strongyoungranking" => ForgeKind::StrongYoungRanking,
            "strongyoungwinner" => ForgeKind::StrongYoungWinner,
            "trichotomous-youngwinner" => ForgeKind::TrichotomousYoungWinner,
            _ => return None,
        })
    }
}

/// A symbolic identity tying scores of the forged election to the
/// independence numbers of the source graphs. Expected values are
/// `alpha_g * α(G) + alpha_h * α(H) + constant`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ForgeClaim {
    Score {
        candidate: CandidateId,
        strong: bool,
        alpha_g: i64,
        alpha_h: i64,
        constant: i64,
    },
    ScoreAtMost {
        candidates: Vec<CandidateId>,
        strong: bool,
        alpha_g: i64,
        alpha_h: i64,
        constant: i64,
    },
    StrongScoreZero { candidates: Vec<CandidateId> },
    /// The candidate is a winner (has maximum score) iff `α(G) >= α(H)`.
    WinnerIffAlphaGe { candidate: CandidateId, strong: bool },
}

/// The voter subset a construction exhibits to realize a claimed score.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WitnessHint {
    pub candidate: CandidateId,
    pub voters: Vec<usize>,
}

/// An election forged from one or two graphs together with its claimed
/// score identities and witness subsets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ForgedInstance {
    pub kind: ForgeKind,
    pub election: Election,
    pub p: CandidateId,
    pub r: Option<CandidateId>,
    pub graph_g: Graph,
    pub graph_h: Option<Graph>,
    pub claims: Vec<ForgeClaim>,
    pub witness_hints: Vec<WitnessHint>,
}

struct EdgeCandidates {
    /// per edge, the ids of the edge candidate and its clones
    ids: Vec<Vec<CandidateId>>,
}

impl EdgeCandidates {
    fn all(&self) -> impl Iterator<Item = CandidateId> + '_ {
        self.ids.iter().flatten().copied()
    }

    fn incident(&self, graph: &Graph, vertex: usize) -> Vec<CandidateId> {
        graph
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| u == vertex || v == vertex)
            .flat_map(|(i, _)| self.ids[i].iter().copied())
            .collect()
    }
}

struct RosterBuilder {
    names: Vec<String>,
}

impl RosterBuilder {
    fn new() -> Self {
        RosterBuilder { names: Vec::new() }
    }

    fn add(&mut self, name: String) -> CandidateId {
        self.names.push(name);
        CandidateId(self.names.len() - 1)
    }

    /// One candidate per edge plus `clones` tied companions each, named
    /// after the edge's endpoints (1-based) with `x` suffixes for clones.
    fn add_edges(&mut self, prefix: &str, graph: &Graph, clones: usize) -> EdgeCandidates {
        let mut ids = Vec::with_capacity(graph.edges().len());
        for &(u, v) in graph.edges() {
            let mut group = Vec::with_capacity(1 + clones);
            for suffix in 0..=clones {
                let name = format!("{prefix}{}.{}{}", u + 1, v + 1, "x".repeat(suffix));
                group.push(self.add(name));
            }
            ids.push(group);
        }
        EdgeCandidates { ids }
    }
}

fn approval_ballot(approved: Vec<CandidateId>, m: usize) -> Ballot {
    let rest: Vec<CandidateId> = (0..m)
        .map(CandidateId)
        .filter(|c| !approved.contains(c))
        .collect();
    Ballot::dichotomous(approved, rest).expect("roster is nonempty")
}

fn single_graph(kind: ForgeKind, g: &Graph) -> Result<ForgedInstance, ForgeError> {
    let strong = kind.strong();
    let mut roster = RosterBuilder::new();
    let edges = roster.add_edges("g", g, 0);
    let p = roster.add("p".into());
    let m = roster.names.len();
    let n_g = g.vertex_count();

    let mut ballots: Vec<Ballot> = (0..n_g)
        .map(|v| approval_ballot(edges.incident(g, v), m))
        .collect();
    ballots.push(approval_ballot(alloc::vec![p], m));
    if strong {
        ballots.push(approval_ballot(alloc::vec![p], m));
    }
    let election = Election::new(roster.names, ballots, None).expect("names are unique");

    let (_, max_set) = independence_number(g)?;
    let mut witness: Vec<usize> = max_set;
    witness.push(n_g);
    if strong {
        witness.push(n_g + 1);
    }
    Ok(ForgedInstance {
        kind,
        election,
        p,
        r: None,
        graph_g: g.clone(),
        graph_h: None,
        claims: alloc::vec![ForgeClaim::Score {
            candidate: p,
            strong,
            alpha_g: 1,
            alpha_h: 0,
            constant: if strong { 2 } else { 1 },
        }],
        witness_hints: alloc::vec![WitnessHint {
            candidate: p,
            voters: witness,
        }],
    })
}

fn graph_pair(kind: ForgeKind, g: &Graph, h: &Graph) -> Result<ForgedInstance, ForgeError> {
    if g.vertex_count() != h.vertex_count() {
        return Err(ForgeError::VertexCountMismatch {
            g: g.vertex_count(),
            h: h.vertex_count(),
        });
    }
    if g.edges().is_empty() || h.edges().is_empty() {
        return Err(ForgeError::NeedsEdge);
    }
    let trichotomous = kind == ForgeKind::TrichotomousYoungWinner;
    let clones = match kind {
        ForgeKind::YoungRanking | ForgeKind::StrongYoungRanking => 0,
        ForgeKind::StrongYoungWinner => 1,
        ForgeKind::TrichotomousYoungWinner => 2,
        _ => unreachable!("single-graph kinds handled separately"),
    };
    let mut roster = RosterBuilder::new();
    let g_edges = roster.add_edges("g", g, clones);
    let h_edges = roster.add_edges("h", h, clones);
    let p = roster.add("p".into());
    let r = roster.add("r".into());
    let m = roster.names.len();
    let n_g = g.vertex_count();
    let n_h = h.vertex_count();

    let mut ballots: Vec<Ballot> = Vec::new();
    // voters corresponding to the vertices of G
    for v in 0..n_g {
        let mut approved = alloc::vec![r];
        approved.extend(h_edges.all());
        approved.extend(g_edges.incident(g, v));
        ballots.push(approval_ballot(approved, m));
    }
    let type_ii = ballots.len();
    let mut approved = alloc::vec![p, r];
    approved.extend(h_edges.all());
    ballots.push(approval_ballot(approved, m));
    // voters corresponding to the vertices of H
    let type_iii_start = ballots.len();
    for v in 0..n_h {
        let mut approved = alloc::vec![p];
        approved.extend(g_edges.all());
        approved.extend(h_edges.incident(h, v));
        ballots.push(approval_ballot(approved, m));
    }
    let type_iv = ballots.len();
    let mut approved = alloc::vec![p, r];
    approved.extend(g_edges.all());
    ballots.push(approval_ballot(approved, m));

    let mut extra: Vec<usize> = Vec::new();
    if kind == ForgeKind::StrongYoungRanking || kind == ForgeKind::StrongYoungWinner {
        let mut approved = alloc::vec![p, r];
        approved.extend(h_edges.all());
        extra.push(ballots.len());
        ballots.push(approval_ballot(approved, m));
        let mut approved = alloc::vec![p, r];
        approved.extend(g_edges.all());
        extra.push(ballots.len());
        ballots.push(approval_ballot(approved, m));
    }
    let type_v_start = ballots.len();
    if trichotomous {
        // per edge candidate e with clones e', e'': six blocks of B votes
        // pinning the Young scores of e, e', e'' below n - 2B
        let b = n_g;
        for triple in g_edges.ids.iter().chain(h_edges.ids.iter()) {
            let (e, e1, e2) = (triple[0], triple[1], triple[2]);
            let rest = |x: CandidateId, y: CandidateId| -> Vec<CandidateId> {
                (0..m)
                    .map(CandidateId)
                    .filter(|&c| c != x && c != y)
                    .collect()
            };
            for (first, second, top) in [
                (e, e1, true),
                (e, e1, false),
                (e1, e2, true),
                (e1, e2, false),
                (e2, e, true),
                (e2, e, false),
            ] {
                let groups = if top {
                    alloc::vec![alloc::vec![first], alloc::vec![second], rest(first, second)]
                } else {
                    alloc::vec![rest(first, second), alloc::vec![first], alloc::vec![second]]
                };
                let ballot = Ballot::new(groups).expect("groups cover the roster");
                for _ in 0..b {
                    ballots.push(ballot.clone());
                }
            }
        }
    }
    let n = ballots.len();
    let election = Election::new(roster.names, ballots, None).expect("names are unique");

    let (_, g_set) = independence_number(g)?;
    let (_, h_set) = independence_number(h)?;
    let strong = kind.strong();

    // witness for p: everything except the Type I voters, plus the Type I
    // voters of a maximum independent set of G; symmetrically for r
    let mut p_witness: Vec<usize> = g_set.clone();
    p_witness.extend(type_ii..=type_iv);
    p_witness.extend(extra.iter().copied());
    p_witness.extend(type_v_start..n);
    p_witness.sort_unstable();
    let mut r_witness: Vec<usize> = (0..=type_ii).collect();
    r_witness.extend(h_set.iter().map(|&v| type_iii_start + v));
    r_witness.push(type_iv);
    r_witness.extend(extra.iter().copied());
    r_witness.extend(type_v_start..n);
    r_witness.sort_unstable();

    let mut claims = Vec::new();
    // weak score: the kept vertex voters must form an independent set
    // (each edge deficit is covered once, by the Type II vote), giving
    // alpha(G) + |V(H)| + 2. The two votes added for the strong kinds both
    // approve p and r, so every p-approving voter is still kept and each
    // edge deficit is covered twice: the strong score is alpha(G) +
    // |V(H)| + 4, and symmetrically for r.
    let (p_const, r_const) = if trichotomous {
        (n as i64 - n_g as i64, n as i64 - n_h as i64)
    } else {
        let shift = if strong { 4 } else { 2 };
        (n_h as i64 + shift, n_g as i64 + shift)
    };
    claims.push(ForgeClaim::Score {
        candidate: p,
        strong,
        alpha_g: 1,
        alpha_h: 0,
        constant: p_const,
    });
    claims.push(ForgeClaim::Score {
        candidate: r,
        strong,
        alpha_g: 0,
        alpha_h: 1,
        constant: r_const,
    });
    match kind {
        ForgeKind::StrongYoungWinner => {
            claims.push(ForgeClaim::StrongScoreZero {
                candidates: g_edges.all().chain(h_edges.all()).collect(),
            });
            claims.push(ForgeClaim::WinnerIffAlphaGe {
                candidate: p,
                strong: true,
            });
        }
        ForgeKind::TrichotomousYoungWinner => {
            claims.push(ForgeClaim::ScoreAtMost {
                candidates: g_edges.all().chain(h_edges.all()).collect(),
                strong: false,
                alpha_g: 0,
                alpha_h: 0,
                constant: n as i64 - 2 * n_g as i64,
            });
            claims.push(ForgeClaim::WinnerIffAlphaGe {
                candidate: p,
                strong: false,
            });
        }
        _ => {}
    }

    Ok(ForgedInstance {
        kind,
        election,
        p,
        r: Some(r),
        graph_g: g.clone(),
        graph_h: Some(h.clone()),
        claims,
        witness_hints: alloc::vec![
            WitnessHint {
                candidate: p,
                voters: p_witness,
            },
            WitnessHint {
                candidate: r,
                voters: r_witness,
            },
        ],
    })
}

/// Builds the reduction instance of the given kind. Ranking and winner
/// kinds require two graphs with equally many vertices and at least one
/// edge each; score kinds take a single graph.
pub fn forge(kind: ForgeKind, g: &Graph, h: Option<&Graph>) -> Result<ForgedInstance, ForgeError> {
    match kind {
        ForgeKind::YoungScore | ForgeKind::StrongYoungScore => match h {
            None => single_graph(kind, g),
            Some(_) => Err(ForgeError::UnexpectedSecondGraph),
        },
        _ => match h {
            Some(h) => graph_pair(kind, g, h),
            None => Err(ForgeError::MissingSecondGraph),
        },
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerifyMode {
    /// Recompute every claimed score with the exhaustive oracles.
    Full,
    /// Replay the witness subsets to certify the claimed scores from
    /// below, and check that the claimed winner relation follows.
    WitnessOnly,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ForgeCheck {
    pub label: String,
    pub passed: bool,
    pub details: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ForgeReport {
    pub checks: Vec<ForgeCheck>,
    pub all_passed: bool,
}

impl ForgeReport {
    fn push(&mut self, label: String, passed: bool, details: String) {
        self.all_passed &= passed;
        self.checks.push(ForgeCheck {
            label,
            passed,
            details,
        });
    }
}

/// Checks a forged instance against its claims.
pub fn verify_forge(
    instance: &ForgedInstance,
    mode: VerifyMode,
    budget: &OracleBudget,
) -> Result<ForgeReport, ForgeError> {
    let mut report = ForgeReport {
        checks: Vec::new(),
        all_passed: true,
    };
    let election = &instance.election;
    let name = |c: CandidateId| election.name_of(c);

    let bound = instance.kind.group_bound();
    let verdict = check_kchotomous(election, bound);
    report.push(
        format!("domain:{}-chotomous", bound),
        verdict.holds,
        match &verdict.violation {
            None => "ok".into(),
            Some(v) => format!("{v}"),
        },
    );

    let alpha_g = independence_number(&instance.graph_g)?.0 as i64;
    let alpha_h = match &instance.graph_h {
        Some(h) => independence_number(h)?.0 as i64,
        None => 0,
    };
    let eval = |cg: i64, ch: i64, k: i64| cg * alpha_g + ch * alpha_h + k;

    let claimed_score = |candidate: CandidateId| -> Option<(i64, bool)> {
        instance.claims.iter().find_map(|claim| match claim {
            ForgeClaim::Score {
                candidate: c,
                strong,
                alpha_g: cg,
                alpha_h: ch,
                constant,
            } if *c == candidate => Some((eval(*cg, *ch, *constant), *strong)),
            _ => None,
        })
    };

    match mode {
        VerifyMode::Full => {
            for claim in &instance.claims {
                match claim {
                    ForgeClaim::Score {
                        candidate,
                        strong,
                        alpha_g: cg,
                        alpha_h: ch,
                        constant,
                    } => {
                        let expected = eval(*cg, *ch, *constant);
                        let (actual, _) =
                            young_score_exact(election, *candidate, *strong, budget)?;
                        report.push(
                            format!("score:{}", name(*candidate)),
                            actual as i64 == expected,
                            format!("expected {expected}, computed {actual}"),
                        );
                    }
                    ForgeClaim::ScoreAtMost {
                        candidates,
                        strong,
                        alpha_g: cg,
                        alpha_h: ch,
                        constant,
                    } => {
                        let bound = eval(*cg, *ch, *constant);
                        let mut worst: Option<(CandidateId, u64)> = None;
                        for &c in candidates {
                            let (actual, _) = young_score_exact(election, c, *strong, budget)?;
                            if worst.is_none() || actual > worst.unwrap().1 {
                                worst = Some((c, actual));
                            }
                        }
                        let passed = worst.is_none_or(|(_, s)| s as i64 <= bound);
                        report.push(
                            "score-bound".into(),
                            passed,
                            match worst {
                                None => "no candidates listed".into(),
                                Some((c, s)) => {
                                    format!("bound {bound}, largest {} at {s}", name(c))
                                }
                            },
                        );
                    }
                    ForgeClaim::StrongScoreZero { candidates } => {
                        let mut bad: Option<(CandidateId, u64)> = None;
                        for &c in candidates {
                            let (actual, _) = young_score_exact(election, c, true, budget)?;
                            if actual != 0 {
                                bad = Some((c, actual));
                                break;
                            }
                        }
                        report.push(
                            "clone-scores-zero".into(),
                            bad.is_none(),
                            match bad {
                                None => format!("{} candidates all at 0", candidates.len()),
                                Some((c, s)) => format!("{} scored {s}", name(c)),
                            },
                        );
                    }
                    ForgeClaim::WinnerIffAlphaGe { candidate, strong } => {
                        let mut best = 0u64;
                        let mut winners: Vec<CandidateId> = Vec::new();
                        for c in election.candidates() {
                            let (score, _) = young_score_exact(election, c, *strong, budget)?;
                            if winners.is_empty() || score > best {
                                best = score;
                                winners.clear();
                            }
                            if score == best {
                                winners.push(c);
                            }
                        }
                        let is_winner = winners.contains(candidate);
                        let expected = alpha_g >= alpha_h;
                        report.push(
                            format!("winner-iff:{}", name(*candidate)),
                            is_winner == expected,
                            format!(
                                "alpha(G) = {alpha_g}, alpha(H) = {alpha_h}, winner = {is_winner}"
                            ),
                        );
                    }
                }
            }
        }
        VerifyMode::WitnessOnly => {
            for hint in &instance.witness_hints {
                let label = format!("witness:{}", name(hint.candidate));
                let Some((expected, strong)) = claimed_score(hint.candidate) else {
                    report.push(label, false, "no matching score claim".into());
                    continue;
                };
                match replay_voter_subset(election, hint.candidate, strong, &hint.voters) {
                    Ok(size) => report.push(
                        label,
                        size as i64 == expected,
                        format!("certified {size}, claimed {expected}"),
                    ),
                    Err(e) => report.push(label, false, format!("replay failed: {e}")),
                }
            }
            for claim in &instance.claims {
                if let ForgeClaim::WinnerIffAlphaGe { candidate, strong } = claim {
                    // the winner relation implied by the claimed formulas:
                    // the rival claim values and the bound on everyone else
                    let Some((own, _)) = claimed_score(*candidate) else {
                        report.push("winner-implication".into(), false, "no claim".into());
                        continue;
                    };
                    let mut rival = 0i64;
                    for other in &instance.claims {
                        match other {
                            ForgeClaim::Score {
                                candidate: c,
                                alpha_g: cg,
                                alpha_h: ch,
                                constant,
                                ..
                            } if c != candidate => {
                                rival = rival.max(eval(*cg, *ch, *constant));
                            }
                            ForgeClaim::ScoreAtMost {
                                alpha_g: cg,
                                alpha_h: ch,
                                constant,
                                ..
                            } => {
                                rival = rival.max(eval(*cg, *ch, *constant));
                            }
                            ForgeClaim::StrongScoreZero { .. } => {}
                            _ => {}
                        }
                    }
                    let implied = own >= rival;
                    let expected = alpha_g >= alpha_h;
                    let _ = strong;
                    report.push(
                        "winner-implication".into(),
                        implied == expected,
                        format!(
                            "claimed score {own} vs best rival {rival}; alpha(G) = {alpha_g}, alpha(H) = {alpha_h}"
                        ),
                    );
                }
            }
        }
    }
    Ok(report)
}
