//! Command implementations: rule/domain/method dispatch for scores and
//! winners, domain checks, forging and verification.

use hardtally_core::ballots::{CandidateId, Certificate, ConsensusObjective, Election};
use hardtally_core::domains::{
    check_kchotomous, check_single_crossing, check_single_peaked, DomainVerdict,
};
use hardtally_core::fast::{
    self, FastRuleError, MajorityWinnerRule, SwapPlan,
};
use hardtally_core::forge::{forge, verify_forge, ForgeError, ForgeKind, VerifyMode};
use hardtally_core::oracles::{
    dichotomous_consensus_exact, dodgson_score_exact, dodgson_score_exact_with,
    kemeny_score_exact, slater_score_exact, young_score_exact, ConsensusShape, DodgsonModel,
    OracleBudget, OracleError,
};

use crate::claims::{claims_file, instance_from_parts, ClaimsFile};
use crate::formats::{parse_election, parse_graph, serialize_election, ParseError};
use crate::report::{
    certificate_json, certificate_text, violation_text, CheckJson, OutputFormat, ScoreJson,
    WinnerJson,
};

/// Exit codes: 0 success, 1 domain violation, 2 parse/config error,
/// 3 budget exceeded, 4 verification failure.
#[derive(Debug)]
pub enum CommandError {
    Config(String),
    Parse(ParseError),
    Io(String),
    Domain(String),
    Budget(String),
}

impl CommandError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CommandError::Config(_) | CommandError::Parse(_) | CommandError::Io(_) => 2,
            CommandError::Domain(_) => 1,
            CommandError::Budget(_) => 3,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CommandError::Config(m) => format!("error: {m}"),
            CommandError::Parse(e) => format!("error: {e}"),
            CommandError::Io(m) => format!("error: {m}"),
            CommandError::Domain(m) => format!("error: {m}"),
            CommandError::Budget(m) => format!("error: {m}"),
        }
    }
}

impl From<ParseError> for CommandError {
    fn from(e: ParseError) -> Self {
        CommandError::Parse(e)
    }
}

impl From<FastRuleError> for CommandError {
    fn from(e: FastRuleError) -> Self {
        CommandError::Domain(e.to_string())
    }
}

impl From<OracleError> for CommandError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded { .. } => CommandError::Budget(e.to_string()),
            _ => CommandError::Domain(e.to_string()),
        }
    }
}

impl From<ForgeError> for CommandError {
    fn from(e: ForgeError) -> Self {
        match e {
            ForgeError::Oracle(o) => o.into(),
            ForgeError::TooManyVertices { .. } => CommandError::Budget(e.to_string()),
            _ => CommandError::Config(e.to_string()),
        }
    }
}

#[derive(Debug)]
pub struct CommandOutput {
    pub text: String,
    pub exit_code: u8,
}

impl CommandOutput {
    fn ok(text: String) -> Self {
        CommandOutput { text, exit_code: 0 }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rule {
    Young,
    StrongYoung,
    Dodgson,
    WeakDodgson,
    Kemeny,
    Kemeny22,
    Kemeny2m,
    Slater,
    Slater2k,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Young => "young",
            Rule::StrongYoung => "strongyoung",
            Rule::Dodgson => "dodgson",
            Rule::WeakDodgson => "weakdodgson",
            Rule::Kemeny => "kemeny",
            Rule::Kemeny22 => "kemeny22",
            Rule::Kemeny2m => "kemeny2m",
            Rule::Slater => "slater",
            Rule::Slater2k => "slater2k",
        }
    }

    /// Rules defined only over dichotomous electorates.
    fn needs_dichotomous_votes(self) -> bool {
        matches!(self, Rule::Kemeny22 | Rule::Kemeny2m | Rule::Slater2k)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DomainAssertion {
    None,
    Dichotomous,
    SinglePeaked,
    SingleCrossing,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Auto,
    Fast,
    Exact,
}

pub struct RunConfig {
    pub rule: Rule,
    pub domain: DomainAssertion,
    pub method: Method,
    pub k: usize,
    pub budget: OracleBudget,
    pub format: OutputFormat,
}

/// Validates the asserted domain, returning the axis for single-peaked
/// assertions.
fn assert_domain(
    election: &Election,
    domain: DomainAssertion,
) -> Result<Option<Vec<CandidateId>>, CommandError> {
    let fail = |verdict: DomainVerdict, what: &str| -> Result<(), CommandError> {
        match verdict.violation {
            None => Ok(()),
            Some(v) => Err(CommandError::Domain(format!(
                "election is not {what}: {}",
                violation_text(election, &v)
            ))),
        }
    };
    match domain {
        DomainAssertion::None => Ok(None),
        DomainAssertion::Dichotomous => {
            fail(check_kchotomous(election, 2), "dichotomous")?;
            Ok(None)
        }
        DomainAssertion::SinglePeaked => {
            let Some(axis) = election.axis().map(<[CandidateId]>::to_vec) else {
                return Err(CommandError::Config(
                    "single-peaked domain needs an axis: line in the election file".into(),
                ));
            };
            let verdict = check_single_peaked(election, &axis)
                .map_err(|e| CommandError::Domain(e.to_string()))?;
            fail(verdict, "single-peaked")?;
            Ok(Some(axis))
        }
        DomainAssertion::SingleCrossing => {
            let verdict = check_single_crossing(election)
                .map_err(|e| CommandError::Domain(e.to_string()))?;
            fail(verdict, "single-crossing")?;
            Ok(None)
        }
    }
}

fn fast_score_supported(rule: Rule, domain: DomainAssertion) -> bool {
    use DomainAssertion::*;
    use Rule::*;
    matches!(
        (rule, domain),
        (Dodgson | WeakDodgson, Dichotomous)
            | (Kemeny | Kemeny22 | Kemeny2m | Slater | Slater2k, Dichotomous)
            | (Dodgson | WeakDodgson | Young | StrongYoung, SinglePeaked)
            | (Kemeny | Slater, SinglePeaked)
            | (Young | StrongYoung | Kemeny | Slater, SingleCrossing)
    )
}

fn fast_winner_supported(rule: Rule, domain: DomainAssertion) -> bool {
    use DomainAssertion::*;
    use Rule::*;
    matches!(
        (rule, domain),
        (Young | Dodgson | WeakDodgson, Dichotomous)
            | (Kemeny | Kemeny22 | Kemeny2m | Slater | Slater2k, Dichotomous)
            | (Young | StrongYoung | Dodgson | WeakDodgson, SinglePeaked)
            | (Kemeny | Slater, SinglePeaked)
            | (Young | StrongYoung | Dodgson | WeakDodgson, SingleCrossing)
            | (Kemeny | Slater, SingleCrossing)
    )
}

fn resolve_method(
    method: Method,
    rule: Rule,
    domain: DomainAssertion,
    supported: fn(Rule, DomainAssertion) -> bool,
) -> Result<Method, CommandError> {
    match method {
        Method::Exact => Ok(Method::Exact),
        Method::Fast => {
            if supported(rule, domain) {
                Ok(Method::Fast)
            } else {
                Err(CommandError::Config(format!(
                    "no fast algorithm for rule {} under the asserted domain",
                    rule.name()
                )))
            }
        }
        Method::Auto => Ok(if supported(rule, domain) {
            Method::Fast
        } else {
            Method::Exact
        }),
    }
}

fn check_rule_domain(election: &Election, rule: Rule) -> Result<(), CommandError> {
    if rule.needs_dichotomous_votes() {
        if let Some(v) = check_kchotomous(election, 2).violation {
            return Err(CommandError::Domain(format!(
                "rule {} needs dichotomous votes: {}",
                rule.name(),
                violation_text(election, &v)
            )));
        }
    }
    Ok(())
}

fn plan_cert(plan: SwapPlan) -> Certificate {
    plan.into_certificate()
}

fn fast_score(
    election: &Election,
    axis: Option<&[CandidateId]>,
    rule: Rule,
    domain: DomainAssertion,
    p: CandidateId,
    k: usize,
) -> Result<(i64, Certificate), CommandError> {
    use DomainAssertion::*;
    use Rule::*;
    let axis = || axis.expect("single-peaked dispatch always has an axis");
    Ok(match (rule, domain) {
        (Dodgson, Dichotomous) => {
            let (s, plan) = fast::dodgson_score_dichotomous(election, p, false)?;
            (s as i64, plan_cert(plan))
        }
        (WeakDodgson, Dichotomous) => {
            let (s, plan) = fast::dodgson_score_dichotomous(election, p, true)?;
            (s as i64, plan_cert(plan))
        }
        (Kemeny22, Dichotomous) => {
            let (s, consensus) = fast::k22_kemeny_score(election, p)?;
            (s, Certificate::Consensus(consensus))
        }
        (Kemeny2m, Dichotomous) => {
            fast::score_via_winner_reduction(election, p, ConsensusObjective::NetMax)?
        }
        (Kemeny, Dichotomous | SinglePeaked | SingleCrossing) => {
            fast::score_via_winner_reduction(election, p, ConsensusObjective::KemenyMin)?
        }
        (Slater, Dichotomous | SinglePeaked | SingleCrossing) => {
            fast::score_via_winner_reduction(election, p, ConsensusObjective::Slater)?
        }
        (Slater2k, Dichotomous) => fast::k2k_slater_score(election, p, k)?,
        (Dodgson, SinglePeaked) => {
            let (s, plan) = fast::sp_dodgson_score(election, axis(), p, false)?;
            (s as i64, plan_cert(plan))
        }
        (WeakDodgson, SinglePeaked) => {
            let (s, plan) = fast::sp_dodgson_score(election, axis(), p, true)?;
            (s as i64, plan_cert(plan))
        }
        (Young, SinglePeaked) => {
            let (s, cert) = fast::sp_young_score(election, axis(), p, false)?;
            (s as i64, cert)
        }
        (StrongYoung, SinglePeaked) => {
            let (s, cert) = fast::sp_young_score(election, axis(), p, true)?;
            (s as i64, cert)
        }
        (Young, SingleCrossing) => {
            let (s, cert) = fast::sc_young_score(election, p)?;
            (s as i64, cert)
        }
        (StrongYoung, SingleCrossing) => {
            let (s, cert) = fast::sc_strongyoung_score(election, p)?;
            (s as i64, cert)
        }
        _ => unreachable!("dispatch guarded by fast_score_supported"),
    })
}

fn exact_score(
    election: &Election,
    rule: Rule,
    domain: DomainAssertion,
    p: CandidateId,
    k: usize,
    budget: &OracleBudget,
) -> Result<(i64, Certificate), CommandError> {
    // asserting the dichotomous domain selects the group-move edit model
    // even where a two-candidate profile would also fit the swap model
    let dodgson = |weak: bool| -> Result<(u64, Certificate), OracleError> {
        if domain == DomainAssertion::Dichotomous {
            dodgson_score_exact_with(election, p, weak, DodgsonModel::GroupMoves, budget)
        } else {
            dodgson_score_exact(election, p, weak, budget)
        }
    };
    Ok(match rule {
        Rule::Young => {
            let (s, cert) = young_score_exact(election, p, false, budget)?;
            (s as i64, cert)
        }
        Rule::StrongYoung => {
            let (s, cert) = young_score_exact(election, p, true, budget)?;
            (s as i64, cert)
        }
        Rule::Dodgson => {
            let (s, cert) = dodgson(false)?;
            (s as i64, cert)
        }
        Rule::WeakDodgson => {
            let (s, cert) = dodgson(true)?;
            (s as i64, cert)
        }
        Rule::Kemeny => kemeny_score_exact(election, Some(p), ConsensusObjective::KemenyMin, budget)?,
        Rule::Kemeny2m => {
            kemeny_score_exact(election, Some(p), ConsensusObjective::NetMax, budget)?
        }
        Rule::Kemeny22 => {
            dichotomous_consensus_exact(election, 2, ConsensusObjective::NetMax, Some(p), budget)?
        }
        Rule::Slater => slater_score_exact(election, Some(p), ConsensusShape::TotalOrder, budget)?,
        Rule::Slater2k => {
            dichotomous_consensus_exact(election, k, ConsensusObjective::Slater, Some(p), budget)?
        }
    })
}

pub fn run_score(
    config: &RunConfig,
    candidate: &str,
    election_text: &str,
) -> Result<CommandOutput, CommandError> {
    let election = parse_election(election_text)?;
    let Some(p) = election.candidate_by_name(candidate) else {
        return Err(CommandError::Config(format!(
            "candidate {candidate:?} is not in the roster"
        )));
    };
    if config.rule == Rule::Slater2k && config.k < 2 {
        return Err(CommandError::Config("slater2k needs --k of at least 2".into()));
    }
    check_rule_domain(&election, config.rule)?;
    let axis = assert_domain(&election, config.domain)?;
    let method = resolve_method(
        config.method,
        config.rule,
        config.domain,
        fast_score_supported,
    )?;
    let (score, cert) = match method {
        Method::Fast => fast_score(
            &election,
            axis.as_deref(),
            config.rule,
            config.domain,
            p,
            config.k,
        )?,
        _ => exact_score(
            &election,
            config.rule,
            config.domain,
            p,
            config.k,
            &config.budget,
        )?,
    };
    let method_name = if method == Method::Fast { "fast" } else { "exact" };
    let text = match config.format {
        OutputFormat::Text => format!(
            "rule={} candidate={} score={} method={}\ncertificate={}\n",
            config.rule.name(),
            candidate,
            score,
            method_name,
            certificate_text(&election, &cert)
        ),
        OutputFormat::Json => {
            let json = ScoreJson {
                rule: config.rule.name().to_string(),
                candidate: candidate.to_string(),
                score,
                method: method_name.to_string(),
                certificate: certificate_json(&election, &cert),
            };
            format!("{}\n", serde_json::to_string_pretty(&json).expect("serializable"))
        }
    };
    Ok(CommandOutput::ok(text))
}

fn argbest<E>(
    election: &Election,
    minimize: bool,
    mut score_of: impl FnMut(CandidateId) -> Result<i64, E>,
) -> Result<Vec<CandidateId>, E> {
    let mut best: Option<i64> = None;
    let mut winners = Vec::new();
    for c in election.candidates() {
        let s = score_of(c)?;
        let better = match best {
            None => true,
            Some(b) => {
                if minimize {
                    s < b
                } else {
                    s > b
                }
            }
        };
        if better {
            best = Some(s);
            winners.clear();
        }
        if best == Some(s) {
            winners.push(c);
        }
    }
    Ok(winners)
}

fn fast_winners(
    election: &Election,
    axis: Option<&[CandidateId]>,
    rule: Rule,
    domain: DomainAssertion,
    k: usize,
) -> Result<Vec<CandidateId>, CommandError> {
    use DomainAssertion::*;
    use Rule::*;
    let axis_ref = || axis.expect("single-peaked dispatch always has an axis");
    Ok(match (rule, domain) {
        (Young, Dichotomous) => fast::young_winners_dichotomous(election)?,
        (Dodgson, Dichotomous) => argbest(election, true, |c| {
            fast::dodgson_score_dichotomous(election, c, false).map(|(s, _)| s as i64)
        })?,
        (WeakDodgson, Dichotomous) => argbest(election, true, |c| {
            fast::dodgson_score_dichotomous(election, c, true).map(|(s, _)| s as i64)
        })?,
        (Kemeny22, Dichotomous) => fast::mean_rule(election)?.winners,
        (Kemeny2m, Dichotomous) => {
            fast::transitive_majority_winners(election, MajorityWinnerRule::KemenyTwoM)?
        }
        (Kemeny, Dichotomous | SinglePeaked | SingleCrossing) => {
            fast::transitive_majority_winners(election, MajorityWinnerRule::KemenyTotal)?
        }
        (Slater, Dichotomous | SinglePeaked | SingleCrossing) => {
            fast::transitive_majority_winners(election, MajorityWinnerRule::SlaterTotal)?
        }
        (Slater2k, Dichotomous) => argbest(election, false, |c| {
            fast::k2k_slater_score(election, c, k).map(|(s, _)| s)
        })?,
        (Young, SinglePeaked) => argbest(election, false, |c| {
            fast::sp_young_score(election, axis_ref(), c, false).map(|(s, _)| s as i64)
        })?,
        (StrongYoung, SinglePeaked) => argbest(election, false, |c| {
            fast::sp_young_score(election, axis_ref(), c, true).map(|(s, _)| s as i64)
        })?,
        (Dodgson, SinglePeaked) => argbest(election, true, |c| {
            fast::sp_dodgson_score(election, axis_ref(), c, false).map(|(s, _)| s as i64)
        })?,
        (WeakDodgson, SinglePeaked) => argbest(election, true, |c| {
            fast::sp_dodgson_score(election, axis_ref(), c, true).map(|(s, _)| s as i64)
        })?,
        (Young, SingleCrossing) => argbest(election, false, |c| {
            fast::sc_young_score(election, c).map(|(s, _)| s as i64)
        })?,
        (StrongYoung, SingleCrossing) => argbest(election, false, |c| {
            fast::sc_strongyoung_score(election, c).map(|(s, _)| s as i64)
        })?,
        (Dodgson, SingleCrossing) => fast::sc_dodgson_winners(election)?.winners,
        (WeakDodgson, SingleCrossing) => {
            // weak Condorcet winners have weakDodgson score 0 and exist here
            fast::transitive_majority_winners(election, MajorityWinnerRule::KemenyTotal)?
        }
        _ => unreachable!("dispatch guarded by fast_winner_supported"),
    })
}

fn exact_winners(
    election: &Election,
    rule: Rule,
    domain: DomainAssertion,
    k: usize,
    budget: &OracleBudget,
) -> Result<Vec<CandidateId>, CommandError> {
    let minimize = matches!(rule, Rule::Dodgson | Rule::WeakDodgson | Rule::Kemeny);
    argbest(election, minimize, |c| {
        exact_score(election, rule, domain, c, k, budget).map(|(s, _)| s)
    })
}

pub fn run_winner(config: &RunConfig, election_text: &str) -> Result<CommandOutput, CommandError> {
    let election = parse_election(election_text)?;
    if election.candidate_count() == 0 {
        return Err(CommandError::Domain("election has no candidates".into()));
    }
    if config.rule == Rule::Slater2k && config.k < 2 {
        return Err(CommandError::Config("slater2k needs --k of at least 2".into()));
    }
    check_rule_domain(&election, config.rule)?;
    let axis = assert_domain(&election, config.domain)?;
    let method = resolve_method(
        config.method,
        config.rule,
        config.domain,
        fast_winner_supported,
    )?;
    let winners = match method {
        Method::Fast => fast_winners(
            &election,
            axis.as_deref(),
            config.rule,
            config.domain,
            config.k,
        )?,
        _ => exact_winners(&election, config.rule, config.domain, config.k, &config.budget)?,
    };
    let names: Vec<String> = winners
        .iter()
        .map(|&c| election.name_of(c).to_string())
        .collect();
    let method_name = if method == Method::Fast { "fast" } else { "exact" };
    let text = match config.format {
        OutputFormat::Text => format!(
            "rule={} winners={} method={}\n",
            config.rule.name(),
            names.join(" "),
            method_name
        ),
        OutputFormat::Json => {
            let json = WinnerJson {
                rule: config.rule.name().to_string(),
                winners: names,
                method: method_name.to_string(),
            };
            format!("{}\n", serde_json::to_string_pretty(&json).expect("serializable"))
        }
    };
    Ok(CommandOutput::ok(text))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckDomain {
    Dichotomous,
    KChotomous,
    SinglePeaked,
    SingleCrossing,
}

pub fn run_check(
    domain: CheckDomain,
    k: usize,
    format: OutputFormat,
    election_text: &str,
) -> Result<CommandOutput, CommandError> {
    let election = parse_election(election_text)?;
    let (label, verdict) = match domain {
        CheckDomain::Dichotomous => (
            "dichotomous".to_string(),
            check_kchotomous(&election, 2),
        ),
        CheckDomain::KChotomous => {
            if k < 1 {
                return Err(CommandError::Config("--k must be at least 1".into()));
            }
            (format!("{k}-chotomous"), check_kchotomous(&election, k))
        }
        CheckDomain::SinglePeaked => {
            let Some(axis) = election.axis().map(<[CandidateId]>::to_vec) else {
                return Err(CommandError::Config(
                    "single-peaked check needs an axis: line in the election file".into(),
                ));
            };
            (
                "single-peaked".to_string(),
                check_single_peaked(&election, &axis)
                    .map_err(|e| CommandError::Domain(e.to_string()))?,
            )
        }
        CheckDomain::SingleCrossing => (
            "single-crossing".to_string(),
            check_single_crossing(&election).map_err(|e| CommandError::Domain(e.to_string()))?,
        ),
    };
    let violation = verdict
        .violation
        .as_ref()
        .map(|v| violation_text(&election, v));
    let text = match format {
        OutputFormat::Text => match &violation {
            None => format!("domain={label} holds=true\n"),
            Some(v) => format!("domain={label} holds=false\nviolation={v}\n"),
        },
        OutputFormat::Json => {
            let json = CheckJson {
                domain: label,
                holds: verdict.holds,
                violation,
            };
            format!("{}\n", serde_json::to_string_pretty(&json).expect("serializable"))
        }
    };
    Ok(CommandOutput {
        text,
        exit_code: if verdict.holds { 0 } else { 1 },
    })
}

pub fn run_forge(
    kind: &str,
    graph_text: &str,
    graph2_text: Option<&str>,
) -> Result<(String, ClaimsFile, String), CommandError> {
    let Some(kind) = ForgeKind::from_name(kind) else {
        return Err(CommandError::Config(format!(
            "unknown forge kind {kind:?} (expected one of youngscore, strongyoungscore, \
             youngranking, strongyoungranking, strongyoungwinner, trichotomous-youngwinner)"
        )));
    };
    let g = parse_graph(graph_text)?;
    let h = graph2_text.map(parse_graph).transpose()?;
    let instance = forge(kind, &g, h.as_ref())?;
    let elx = serialize_election(&instance.election);
    let claims = claims_file(&instance);
    let summary = format!(
        "kind={} candidates={} voters={} claims={}\n",
        kind.name(),
        instance.election.candidate_count(),
        instance.election.voter_count(),
        claims.claims.len()
    );
    Ok((elx, claims, summary))
}

pub fn run_verify_forge(
    mode: VerifyMode,
    election_text: &str,
    claims_text: &str,
    budget: &OracleBudget,
) -> Result<CommandOutput, CommandError> {
    let election = parse_election(election_text)?;
    let claims: ClaimsFile = serde_json::from_str(claims_text)
        .map_err(|e| CommandError::Config(format!("invalid claims file: {e}")))?;
    let instance = instance_from_parts(election, &claims).map_err(CommandError::Config)?;
    let report = verify_forge(&instance, mode, budget)?;
    let mut text = String::new();
    for check in &report.checks {
        let status = if check.passed { "pass" } else { "FAIL" };
        text.push_str(&format!("check {} [{status}] {}\n", check.label, check.details));
    }
    text.push_str(&format!(
        "verify-forge {}\n",
        if report.all_passed { "passed" } else { "failed" }
    ));
    Ok(CommandOutput {
        text,
        exit_code: if report.all_passed { 0 } else { 4 },
    })
}
