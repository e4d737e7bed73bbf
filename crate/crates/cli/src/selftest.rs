//! The self-test harness: one function per acceptance criterion, each
//! returning pass/fail lines, plus a determinism check that renders the
//! whole suite twice and compares bytes.

use std::time::{Duration, Instant};

use hardtally_core::ballots::{
    replay_lifts, replay_moves, replay_voter_subset, Ballot, CandidateId, Certificate,
    ConsensusObjective, Election,
};
use hardtally_core::domains::{check_single_crossing, check_single_peaked};
use hardtally_core::fast::{
    self, slater_pair_contribution, FastRuleError, SwapPlanEdits, Threshold,
};
use hardtally_core::forge::{
    forge, verify_forge, ForgeKind, Graph, VerifyMode,
};
use hardtally_core::oracles::{
    dichotomous_consensus_exact, dodgson_score_exact, dodgson_score_exact_with,
    kemeny_score_exact, slater_score_exact, young_score_exact, ConsensusShape, DodgsonModel,
    OracleBudget, OracleError,
};
use rand::Rng;

use crate::generators::{
    random_dichotomous, random_graph, random_graph_with_edge, random_single_crossing,
    random_single_peaked, rng,
};

pub struct CheckLine {
    pub label: String,
    pub passed: bool,
}

pub struct CriterionResult {
    pub id: u32,
    pub title: &'static str,
    pub lines: Vec<CheckLine>,
    pub passed: bool,
}

pub struct SelftestReport {
    pub criteria: Vec<CriterionResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        render_criteria(&mut out, &self.criteria);
        let passed = self.criteria.iter().filter(|c| c.passed).count();
        out.push_str(&format!(
            "overall [{}] {passed}/{} criteria passed\n",
            if self.passed() { "pass" } else { "FAIL" },
            self.criteria.len()
        ));
        out
    }
}

fn render_criteria(out: &mut String, criteria: &[CriterionResult]) {
    for criterion in criteria {
        out.push_str(&format!(
            "criterion {} [{}] {}\n",
            criterion.id,
            if criterion.passed { "pass" } else { "FAIL" },
            criterion.title
        ));
        for line in &criterion.lines {
            out.push_str(&format!(
                "  [{}] {}\n",
                if line.passed { "pass" } else { "FAIL" },
                line.label
            ));
        }
    }
}

fn line(label: impl Into<String>, passed: bool) -> CheckLine {
    CheckLine {
        label: label.into(),
        passed,
    }
}

fn finish(
    id: u32,
    title: &'static str,
    mut lines: Vec<CheckLine>,
    started: Instant,
    limit: Duration,
) -> CriterionResult {
    lines.push(line(
        format!("runtime under {}s", limit.as_secs()),
        started.elapsed() < limit,
    ));
    let passed = lines.iter().all(|l| l.passed);
    CriterionResult {
        id,
        title,
        lines,
        passed,
    }
}

fn names(m: usize) -> Vec<String> {
    (0..m).map(|i| format!("c{i}")).collect()
}

fn ids(list: &[usize]) -> Vec<CandidateId> {
    list.iter().map(|&i| CandidateId(i)).collect()
}

fn ranking(order: &[usize]) -> Ballot {
    Ballot::ranking(&ids(order)).unwrap()
}

/// Runs the whole suite: criteria 1 through 6, then the determinism check
/// (criterion 7) obtained by running them a second time and comparing the
/// rendered bytes.
pub fn run() -> SelftestReport {
    let first = run_once();
    let second = run_once();
    let mut first_render = String::new();
    render_criteria(&mut first_render, &first);
    let mut second_render = String::new();
    render_criteria(&mut second_render, &second);
    let deterministic = first_render == second_render;
    let mut criteria = first;
    criteria.push(CriterionResult {
        id: 7,
        title: "determinism: two full passes render identical reports",
        lines: vec![line("reports are byte-identical", deterministic)],
        passed: deterministic,
    });
    SelftestReport { criteria }
}

fn run_once() -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
    ]
}

// 101 voters on the axis a1 a2 a3 a4 p (ids 0..4): block sizes
// 10/50/10/20/11 with ever-shorter runs of axis candidates above p.
fn hundred_one_voters() -> Election {
    let mut ballots = Vec::new();
    let blocks: [(usize, Vec<usize>); 5] = [
        (10, vec![0, 1, 2, 3, 4]),
        (50, vec![1, 2, 3, 4, 0]),
        (10, vec![2, 3, 4, 1, 0]),
        (20, vec![3, 4, 2, 1, 0]),
        (11, vec![4, 3, 2, 1, 0]),
    ];
    for (count, order) in blocks {
        for _ in 0..count {
            ballots.push(ranking(&order));
        }
    }
    Election::new(names(5), ballots, Some(ids(&[0, 1, 2, 3, 4]))).unwrap()
}

// (a > b > p > c) twice, then (a > c > p > b) twice; ids a,b,p,c = 0..3.
fn wasted_swap_election() -> Election {
    Election::new(
        names(4),
        vec![
            ranking(&[0, 1, 2, 3]),
            ranking(&[0, 1, 2, 3]),
            ranking(&[0, 3, 2, 1]),
            ranking(&[0, 3, 2, 1]),
        ],
        None,
    )
    .unwrap()
}

fn criterion_1() -> CriterionResult {
    let started = Instant::now();
    let mut lines = Vec::new();
    let e = hundred_one_voters();
    let axis = e.axis().unwrap().to_vec();
    let p = CandidateId(4);
    match fast::sp_dodgson_score(&e, &axis, p, false) {
        Ok((score, plan)) => {
            lines.push(line("fast single-peaked Dodgson score is 70", score == 70));
            let SwapPlanEdits::Lifts(lifts) = plan.edits else {
                unreachable!("single-peaked plans are lift plans")
            };
            lines.push(line(
                "swap plan replays to the same score",
                replay_lifts(&e, p, false, &lifts) == Ok(70),
            ));
            let edited: Vec<Ballot> = e
                .ballots()
                .iter()
                .zip(&lifts)
                .map(|(b, &l)| b.lift(p, l).unwrap())
                .collect();
            let after = Election::new(e.names().to_vec(), edited, None)
                .unwrap()
                .majority_table();
            let before = e.majority_table();
            let no_waste = e.candidates().filter(|&c| c != p).all(|c| {
                before.count(c, p) <= 50 || after.count(c, p) == 50
            });
            lines.push(line(
                "no wasted swaps: every over-threshold rival ends at exactly 50",
                no_waste,
            ));
        }
        Err(_) => lines.push(line("fast single-peaked Dodgson score is 70", false)),
    }
    finish(
        1,
        "single-peaked Dodgson on the 101-voter worked electorate",
        lines,
        started,
        Duration::from_secs(1),
    )
}

fn criterion_2() -> CriterionResult {
    let started = Instant::now();
    let mut lines = Vec::new();
    let e = wasted_swap_election();
    let p = CandidateId(2);
    let budget = OracleBudget::default();
    let exact = dodgson_score_exact(&e, p, false, &budget);
    let score = exact.as_ref().map(|(s, _)| *s).unwrap_or(u64::MAX);
    lines.push(line("exact single-crossing Dodgson score is 6", score == 6));
    if let Ok((_, Certificate::Lifts(lifts))) = &exact {
        lines.push(line(
            "lift certificate replays to the same score",
            replay_lifts(&e, p, false, lifts) == Ok(6),
        ));
    } else {
        lines.push(line("lift certificate replays to the same score", false));
    }
    let formula = fast::sp_dodgson_formula_value(
        &e.majority_table(),
        p,
        Threshold::for_winner(e.voter_count(), false),
    );
    lines.push(line("single-peaked formula value is 5", formula == 5));
    lines.push(line(
        "a swap is wasted: the exact score strictly exceeds the formula",
        score > formula,
    ));
    finish(
        2,
        "single-crossing Dodgson wastes a swap on the four-voter electorate",
        lines,
        started,
        Duration::from_secs(1),
    )
}

const SWEEP: usize = 500;

fn criterion_3() -> CriterionResult {
    let started = Instant::now();
    let mut lines = Vec::new();
    let budget = OracleBudget::default();

    // dichotomous electorates
    {
        let mut r = rng(101);
        let mut dodgson_ok = true;
        let mut winners_ok = true;
        let mut mean_ok = true;
        let mut k2k_ok = true;
        for _ in 0..SWEEP {
            let m = r.random_range(2..=5);
            let n = r.random_range(1..=9);
            let e = random_dichotomous(&mut r, m, n);
            let p = CandidateId(r.random_range(0..m));
            for weak in [false, true] {
                let fast_result = fast::dodgson_score_dichotomous(&e, p, weak).unwrap();
                let (exact, _) =
                    dodgson_score_exact_with(&e, p, weak, DodgsonModel::GroupMoves, &budget)
                        .unwrap();
                let SwapPlanEdits::Moves(edits) = &fast_result.1.edits else {
                    unreachable!("dichotomous plans are move plans")
                };
                dodgson_ok &= fast_result.0 == exact
                    && replay_moves(&e, p, weak, edits) == Ok(exact);
            }
            let fast_winners = fast::young_winners_dichotomous(&e).unwrap();
            let mut best = 0;
            let mut arg: Vec<CandidateId> = Vec::new();
            for c in e.candidates() {
                let (s, _) = young_score_exact(&e, c, false, &budget).unwrap();
                if arg.is_empty() || s > best {
                    best = s;
                    arg.clear();
                }
                if s == best {
                    arg.push(c);
                }
            }
            winners_ok &= !fast_winners.is_empty() && fast_winners == arg;

            let outcome = fast::mean_rule(&e).unwrap();
            let (exact_consensus, _) =
                dichotomous_consensus_exact(&e, 2, ConsensusObjective::NetMax, None, &budget)
                    .unwrap();
            mean_ok &= outcome.score == exact_consensus;
            // winners: candidates topping some optimal two-group order
            let table = e.majority_table();
            let full = (1u32 << m) - 1;
            let mut optimal = i64::MIN;
            let mut tops = vec![false; m];
            for pass in 0..2 {
                for mask in 1..=full {
                    let top: Vec<CandidateId> =
                        (0..m).filter(|&c| mask & (1 << c) != 0).map(CandidateId).collect();
                    let rest: Vec<CandidateId> =
                        (0..m).filter(|&c| mask & (1 << c) == 0).map(CandidateId).collect();
                    let ballot = Ballot::dichotomous(top.clone(), rest).unwrap();
                    let score = table
                        .consensus_score(&ballot, ConsensusObjective::NetMax)
                        .unwrap();
                    if pass == 0 {
                        optimal = optimal.max(score);
                    } else if score == optimal {
                        let members: Vec<CandidateId> = if mask == full {
                            (0..m).map(CandidateId).collect()
                        } else {
                            top
                        };
                        for c in members {
                            tops[c.index()] = true;
                        }
                    }
                }
            }
            let exact_winners: Vec<CandidateId> = (0..m)
                .filter(|&c| tops[c])
                .map(CandidateId)
                .collect();
            mean_ok &= outcome.winners == exact_winners;
            for c in e.candidates() {
                let (k22, _) = fast::k22_kemeny_score(&e, c).unwrap();
                let (exact, _) = dichotomous_consensus_exact(
                    &e,
                    2,
                    ConsensusObjective::NetMax,
                    Some(c),
                    &budget,
                )
                .unwrap();
                mean_ok &= k22 == exact;
                for k in [2, 3] {
                    let (fast_slater, _) = fast::k2k_slater_score(&e, c, k).unwrap();
                    let (exact_slater, _) = dichotomous_consensus_exact(
                        &e,
                        k,
                        ConsensusObjective::Slater,
                        Some(c),
                        &budget,
                    )
                    .unwrap();
                    k2k_ok &= fast_slater == exact_slater;
                }
            }
        }
        lines.push(line(
            format!("dichotomous Dodgson fast = exact on {SWEEP} instances (both modes, plans replayed)"),
            dodgson_ok,
        ));
        lines.push(line(
            format!("dichotomous Young winners = argmax of exact Young scores on {SWEEP} instances"),
            winners_ok,
        ));
        lines.push(line(
            format!("mean rule and candidate scores = exact dichotomous consensus on {SWEEP} instances"),
            mean_ok,
        ));
        lines.push(line(
            format!("k-group Slater scores (k = 2, 3) = exact enumeration on {SWEEP} instances"),
            k2k_ok,
        ));
    }

    // score-via-winner reductions on dichotomous electorates up to m = 6
    {
        let mut r = rng(102);
        let mut ok = true;
        for _ in 0..SWEEP {
            let m = r.random_range(2..=6);
            let n = r.random_range(1..=8);
            let e = random_dichotomous(&mut r, m, n);
            let p = CandidateId(r.random_range(0..m));
            let (netmax, _) =
                fast::score_via_winner_reduction(&e, p, ConsensusObjective::NetMax).unwrap();
            let (netmax_exact, _) =
                kemeny_score_exact(&e, Some(p), ConsensusObjective::NetMax, &budget).unwrap();
            let (slater, _) =
                fast::score_via_winner_reduction(&e, p, ConsensusObjective::Slater).unwrap();
            let (slater_exact, _) =
                slater_score_exact(&e, Some(p), ConsensusShape::TotalOrder, &budget).unwrap();
            ok &= netmax == netmax_exact && slater == slater_exact;
        }
        lines.push(line(
            format!("winner-oracle reductions (net-max, Slater) = exact scores on {SWEEP} instances up to 6 candidates"),
            ok,
        ));
    }

    // single-peaked electorates
    {
        let mut r = rng(103);
        let mut ok = true;
        for i in 0..SWEEP {
            let m = r.random_range(2..=5);
            let n = if i % 2 == 0 {
                [1, 3, 5][r.random_range(0..3)]
            } else {
                [2, 4][r.random_range(0..2)]
            };
            let e = random_single_peaked(&mut r, m, n);
            let axis = e.axis().unwrap().to_vec();
            let p = CandidateId(r.random_range(0..m));
            for weak in [false, true] {
                let (fast_score, plan) = fast::sp_dodgson_score(&e, &axis, p, weak).unwrap();
                let (exact, _) = dodgson_score_exact(&e, p, weak, &budget).unwrap();
                let SwapPlanEdits::Lifts(lifts) = &plan.edits else {
                    unreachable!("single-peaked plans are lift plans")
                };
                ok &= fast_score == exact && replay_lifts(&e, p, weak, lifts) == Ok(exact);
            }
        }
        lines.push(line(
            format!("single-peaked Dodgson fast = exact on {SWEEP} instances (odd and even voter counts)"),
            ok,
        ));

        let mut r = rng(104);
        let mut ok = true;
        for _ in 0..SWEEP {
            let m = r.random_range(2..=5);
            let n = r.random_range(1..=14);
            let e = random_single_peaked(&mut r, m, n);
            let axis = e.axis().unwrap().to_vec();
            let p = CandidateId(r.random_range(0..m));
            for strong in [false, true] {
                let (fast_score, cert) = fast::sp_young_score(&e, &axis, p, strong).unwrap();
                let (exact, _) = young_score_exact(&e, p, strong, &budget).unwrap();
                let Certificate::VoterSubset(survivors) = &cert else {
                    unreachable!("Young certificates are voter subsets")
                };
                let replay_ok = if strong && fast_score == 0 {
                    survivors.is_empty()
                } else {
                    replay_voter_subset(&e, p, strong, survivors) == Ok(exact)
                };
                ok &= fast_score == exact && replay_ok;
            }
        }
        lines.push(line(
            format!("single-peaked Young fast = exact on {SWEEP} instances (both modes, survivors replayed)"),
            ok,
        ));
    }

    // single-crossing electorates
    {
        let mut r = rng(105);
        let mut young_ok = true;
        let mut reduction_ok = true;
        for _ in 0..SWEEP {
            let m = r.random_range(2..=4);
            let n = r.random_range(1..=14);
            let e = random_single_crossing(&mut r, m, n);
            let p = CandidateId(r.random_range(0..m));
            let (weak_fast, cert) = fast::sc_young_score(&e, p).unwrap();
            let (weak_exact, _) = young_score_exact(&e, p, false, &budget).unwrap();
            let Certificate::VoterSubset(survivors) = &cert else {
                unreachable!()
            };
            young_ok &= weak_fast == weak_exact
                && (weak_fast == 0 && survivors.is_empty()
                    || replay_voter_subset(&e, p, false, survivors) == Ok(weak_exact));
            let (strong_fast, _) = fast::sc_strongyoung_score(&e, p).unwrap();
            let (strong_exact, _) = young_score_exact(&e, p, true, &budget).unwrap();
            young_ok &= strong_fast == strong_exact;
            let (red, _) =
                fast::score_via_winner_reduction(&e, p, ConsensusObjective::KemenyMin).unwrap();
            let (kemeny_exact, _) =
                kemeny_score_exact(&e, Some(p), ConsensusObjective::KemenyMin, &budget).unwrap();
            reduction_ok &= red == kemeny_exact;
        }
        lines.push(line(
            format!("single-crossing Young and strongYoung fast = exact on {SWEEP} instances"),
            young_ok,
        ));
        lines.push(line(
            format!("winner-oracle reduction (Kemeny) = exact scores on {SWEEP} single-crossing instances"),
            reduction_ok,
        ));

        let mut r = rng(106);
        let mut ok = true;
        for _ in 0..SWEEP {
            let m = r.random_range(2..=4);
            let n = r.random_range(1..=6);
            let e = random_single_crossing(&mut r, m, n);
            let outcome = fast::sc_dodgson_winners(&e).unwrap();
            let mut best = u64::MAX;
            let mut arg: Vec<CandidateId> = Vec::new();
            for c in e.candidates() {
                let (s, _) = dodgson_score_exact(&e, c, false, &budget).unwrap();
                if s < best {
                    best = s;
                    arg.clear();
                }
                if s == best {
                    arg.push(c);
                }
            }
            ok &= outcome.winners == arg;
        }
        lines.push(line(
            format!("single-crossing Dodgson winners = argmin of exact scores on {SWEEP} instances"),
            ok,
        ));
    }

    finish(
        3,
        "oracle-equivalence sweeps over the three restricted domains",
        lines,
        started,
        Duration::from_secs(600),
    )
}

/// All weak orders over `m` candidates, as ballots.
fn all_weak_orders(m: usize) -> Vec<Ballot> {
    let mut out = Vec::new();
    let mut digits = vec![0usize; m];
    loop {
        let mut used = 0usize;
        for &d in &digits {
            used |= 1 << d;
        }
        if used & (used + 1) == 0 {
            let mut groups: Vec<Vec<CandidateId>> = vec![Vec::new(); m];
            for (c, &d) in digits.iter().enumerate() {
                groups[d].push(CandidateId(c));
            }
            groups.retain(|g| !g.is_empty());
            out.push(Ballot::new(groups).unwrap());
        }
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if digits[i] + 1 < m {
                digits[i] += 1;
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Realizes a weak order as the majority relation of a dichotomous
/// electorate: one approval ballot per prefix of its groups.
fn election_with_majority(order: &Ballot, m: usize) -> Election {
    let mut approved: Vec<CandidateId> = Vec::new();
    let mut ballots = Vec::new();
    for group in &order.groups()[..order.group_count() - 1] {
        approved.extend_from_slice(group);
        let rest: Vec<CandidateId> = (0..m)
            .map(CandidateId)
            .filter(|c| !approved.contains(c))
            .collect();
        ballots.push(Ballot::dichotomous(approved.clone(), rest).unwrap());
    }
    Election::new(names(m), ballots, None).unwrap()
}

fn criterion_4() -> CriterionResult {
    let started = Instant::now();
    let mut lines = Vec::new();

    let mut swap_ok = true;
    let mut checked: u64 = 0;
    for m in 2..=4 {
        let orders = all_weak_orders(m);
        for majority in &orders {
            let e = election_with_majority(majority, m);
            let table = e.majority_table();
            for order in &orders {
                for a in (0..m).map(CandidateId) {
                    for b in (0..m).map(CandidateId) {
                        if a == b || !table.beats(a, b) || !order.prefers(b, a) {
                            continue;
                        }
                        let swapped = order.swap_candidates(a, b);
                        let before = table
                            .consensus_score(order, ConsensusObjective::Slater)
                            .unwrap();
                        let after = table
                            .consensus_score(&swapped, ConsensusObjective::Slater)
                            .unwrap();
                        swap_ok &= after > before && (after - before) % 2 == 0;
                        checked += 1;
                    }
                }
            }
        }
    }
    lines.push(line(
        "swapping any inverted strict pair raises the Slater score (all weak orders up to 4 candidates)",
        swap_ok && checked > 0,
    ));

    // the 25-case contribution table over a, b, c (ids 0, 1, 2); each cell
    // holds the {a,c} and {b,c} contributions before and after the a/b swap
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
    let expected: [[(i64, i64, i64, i64); 5]; 5] = [
        [(2, 2, 2, 2), (2, 1, 1, 2), (2, 0, 0, 2), (1, 0, 0, 1), (0, 0, 0, 0)],
        [(1, 2, 1, 2), (1, 1, 2, 2), (1, 0, 1, 2), (2, 0, 1, 1), (1, 0, 1, 0)],
        [(0, 2, 0, 2), (0, 1, 1, 2), (0, 0, 2, 2), (1, 0, 2, 1), (2, 0, 2, 0)],
        [(0, 1, 0, 1), (0, 2, 1, 1), (0, 1, 2, 1), (1, 1, 2, 2), (2, 1, 2, 1)],
        [(0, 0, 0, 0), (0, 1, 1, 0), (0, 2, 2, 0), (1, 2, 2, 1), (2, 2, 2, 2)],
    ];
    let (a, b, c) = (CandidateId(0), CandidateId(1), CandidateId(2));
    let mut table_ok = true;
    for (ri, row) in rows.iter().enumerate() {
        let majority = Ballot::new(row.iter().map(|g| ids(g)).collect()).unwrap();
        let table = election_with_majority(&majority, 3).majority_table();
        for (ci, col) in cols.iter().enumerate() {
            let order = Ballot::new(col.iter().map(|g| ids(g)).collect()).unwrap();
            let swapped = order.swap_candidates(a, b);
            let got = (
                slater_pair_contribution(&table, &order, a, c),
                slater_pair_contribution(&table, &order, b, c),
                slater_pair_contribution(&table, &swapped, a, c),
                slater_pair_contribution(&table, &swapped, b, c),
            );
            table_ok &= got == expected[ri][ci];
        }
    }
    lines.push(line(
        "the 25-case pair-contribution table is reproduced cell by cell",
        table_ok,
    ));

    finish(
        4,
        "the pairwise-swap argument behind k-group Slater scoring",
        lines,
        started,
        Duration::from_secs(60),
    )
}

fn criterion_5() -> CriterionResult {
    let started = Instant::now();
    let mut lines = Vec::new();
    let budget = OracleBudget::default();

    {
        let mut r = rng(107);
        let mut ok = true;
        for _ in 0..200 {
            let v = r.random_range(1..=6);
            let g = random_graph(&mut r, v);
            for kind in [ForgeKind::YoungScore, ForgeKind::StrongYoungScore] {
                let instance = forge(kind, &g, None).unwrap();
                let report = verify_forge(&instance, VerifyMode::Full, &budget).unwrap();
                ok &= report.all_passed;
            }
        }
        lines.push(line(
            "score identities verify in full-oracle mode on 200 random graphs up to 6 vertices",
            ok,
        ));
    }

    {
        let mut r = rng(108);
        let mut full_ok = true;
        let mut witness_ok = true;
        let mut dominance_ok = true;
        for _ in 0..60 {
            let v = r.random_range(2..=4);
            let g = random_graph_with_edge(&mut r, v);
            let h = random_graph_with_edge(&mut r, v);
            for kind in [
                ForgeKind::YoungRanking,
                ForgeKind::StrongYoungRanking,
                ForgeKind::StrongYoungWinner,
            ] {
                let instance = forge(kind, &g, Some(&h)).unwrap();
                let report = verify_forge(&instance, VerifyMode::Full, &budget).unwrap();
                full_ok &= report.all_passed;
                let report =
                    verify_forge(&instance, VerifyMode::WitnessOnly, &budget).unwrap();
                witness_ok &= report.all_passed;
            }
            // maximum certificates for p keep every helper voter
            let instance = forge(ForgeKind::YoungRanking, &g, Some(&h)).unwrap();
            let (_, cert) =
                young_score_exact(&instance.election, instance.p, false, &budget).unwrap();
            let Certificate::VoterSubset(kept) = cert else {
                unreachable!()
            };
            for helper in (v + 1)..=(2 * v + 1) {
                dominance_ok &= kept.contains(&helper);
            }
            let trichotomous =
                forge(ForgeKind::TrichotomousYoungWinner, &g, Some(&h)).unwrap();
            let report =
                verify_forge(&trichotomous, VerifyMode::WitnessOnly, &budget).unwrap();
            witness_ok &= report.all_passed;
        }
        lines.push(line(
            "ranking and winner claims verify on 60 random graph pairs (full where in budget)",
            full_ok,
        ));
        lines.push(line(
            "every witness subset certifies its claimed score (including trichotomous instances)",
            witness_ok,
        ));
        lines.push(line(
            "maximum Young certificates keep all helper voters on ranking instances",
            dominance_ok,
        ));
    }

    {
        let edge = Graph::new(2, vec![(0, 1)]).unwrap();
        let instance = forge(ForgeKind::TrichotomousYoungWinner, &edge, Some(&edge)).unwrap();
        let report = verify_forge(&instance, VerifyMode::WitnessOnly, &budget).unwrap();
        let hint = &instance.witness_hints[0];
        lines.push(line(
            "the 30-voter two-edge instance certifies the claimed 29-voter lower bound",
            instance.election.voter_count() == 30 && hint.voters.len() == 29 && report.all_passed,
        ));
    }

    finish(
        5,
        "forged reduction instances verify their claimed identities",
        lines,
        started,
        Duration::from_secs(600),
    )
}

fn criterion_6() -> CriterionResult {
    let started = Instant::now();
    let mut lines = Vec::new();
    let budget = OracleBudget::default();

    // corrupting a forged instance must be flagged
    {
        let k3 = Graph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let mut instance = forge(ForgeKind::YoungScore, &k3, None).unwrap();
        let keep: Vec<usize> = (0..instance.election.voter_count() - 1).collect();
        instance.election = instance.election.restrict_voters(&keep).unwrap();
        let full = verify_forge(&instance, VerifyMode::Full, &budget).unwrap();
        let witness = verify_forge(&instance, VerifyMode::WitnessOnly, &budget).unwrap();
        lines.push(line(
            "a corrupted forged instance fails verification in both modes",
            !full.all_passed && !witness.all_passed,
        ));
    }

    // the temperature votes: single-peaked on their axis, not single-crossing
    {
        let e = Election::new(
            names(4),
            vec![
                ranking(&[0, 1, 2, 3]),
                ranking(&[1, 2, 3, 0]),
                ranking(&[2, 1, 0, 3]),
            ],
            Some(ids(&[0, 1, 2, 3])),
        )
        .unwrap();
        let axis = e.axis().unwrap().to_vec();
        let peaked = check_single_peaked(&e, &axis).unwrap();
        let crossing = check_single_crossing(&e).unwrap();
        lines.push(line(
            "the temperature votes are single-peaked but not single-crossing",
            peaked.holds && !crossing.holds && crossing.violation.is_some(),
        ));
        let rejected = matches!(
            fast::sc_young_score(&e, CandidateId(0)),
            Err(FastRuleError::DomainViolation(_))
        ) && matches!(
            fast::sc_dodgson_winners(&e),
            Err(FastRuleError::DomainViolation(_))
        );
        lines.push(line(
            "single-crossing algorithms reject the temperature votes with a witness",
            rejected,
        ));
    }

    // a non-single-peaked vote is rejected by the single-peaked algorithms
    {
        let e = Election::new(names(3), vec![ranking(&[0, 2, 1])], None).unwrap();
        let axis = ids(&[0, 1, 2]);
        let rejected = matches!(
            fast::sp_dodgson_score(&e, &axis, CandidateId(0), false),
            Err(FastRuleError::DomainViolation(_))
        ) && matches!(
            fast::sp_young_score(&e, &axis, CandidateId(0), false),
            Err(FastRuleError::DomainViolation(_))
        );
        lines.push(line(
            "single-peaked algorithms reject a non-single-peaked electorate",
            rejected,
        ));
    }

    // mixed ballot kinds are rejected by the edit-distance oracle
    {
        let e = Election::new(
            names(3),
            vec![
                ranking(&[0, 1, 2]),
                Ballot::dichotomous(ids(&[0, 1]), ids(&[2])).unwrap(),
            ],
            None,
        )
        .unwrap();
        lines.push(line(
            "the Dodgson oracle rejects profiles mixing ballot kinds",
            dodgson_score_exact(&e, CandidateId(0), false, &budget)
                == Err(OracleError::MixedBallotKinds),
        ));
    }

    finish(
        6,
        "negative controls: corruption and out-of-domain inputs are flagged",
        lines,
        started,
        Duration::from_secs(60),
    )
}
