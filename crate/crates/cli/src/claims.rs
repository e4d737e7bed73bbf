//! JSON sidecar carrying a forged instance's graphs, claims and witness
//! hints, so a `.elx` file can be re-verified without regenerating it.

use hardtally_core::ballots::{CandidateId, Election};
use hardtally_core::forge::{ForgeClaim, ForgeKind, ForgedInstance, Graph, WitnessHint};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ClaimsFile {
    pub kind: String,
    pub p: String,
    pub r: Option<String>,
    pub graph_g: GraphJson,
    pub graph_h: Option<GraphJson>,
    pub claims: Vec<ClaimJson>,
    pub witnesses: Vec<WitnessJson>,
}

/// Vertices are counted from 1 in the sidecar, matching `.graph` files.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum ClaimJson {
    Score {
        candidate: String,
        strong: bool,
        alpha_g: i64,
        alpha_h: i64,
        constant: i64,
    },
    ScoreAtMost {
        candidates: Vec<String>,
        strong: bool,
        alpha_g: i64,
        alpha_h: i64,
        constant: i64,
    },
    StrongScoreZero {
        candidates: Vec<String>,
    },
    WinnerIffAlphaGe {
        candidate: String,
        strong: bool,
    },
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct WitnessJson {
    pub candidate: String,
    pub voters: Vec<usize>,
}

fn graph_to_json(graph: &Graph) -> GraphJson {
    GraphJson {
        vertices: graph.vertex_count(),
        edges: graph.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect(),
    }
}

fn graph_from_json(json: &GraphJson) -> Result<Graph, String> {
    for &(u, v) in &json.edges {
        if u == 0 || v == 0 {
            return Err("graph vertices are 1-based".into());
        }
    }
    Graph::new(
        json.vertices,
        json.edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect(),
    )
    .map_err(|e| e.to_string())
}

pub fn claims_file(instance: &ForgedInstance) -> ClaimsFile {
    let name = |c: CandidateId| instance.election.name_of(c).to_string();
    let names = |cs: &[CandidateId]| cs.iter().map(|&c| name(c)).collect::<Vec<_>>();
    ClaimsFile {
        kind: instance.kind.name().to_string(),
        p: name(instance.p),
        r: instance.r.map(name),
        graph_g: graph_to_json(&instance.graph_g),
        graph_h: instance.graph_h.as_ref().map(graph_to_json),
        claims: instance
            .claims
            .iter()
            .map(|claim| match claim {
                ForgeClaim::Score {
                    candidate,
                    strong,
                    alpha_g,
                    alpha_h,
                    constant,
                } => ClaimJson::Score {
                    candidate: name(*candidate),
                    strong: *strong,
                    alpha_g: *alpha_g,
                    alpha_h: *alpha_h,
                    constant: *constant,
                },
                ForgeClaim::ScoreAtMost {
                    candidates,
                    strong,
                    alpha_g,
                    alpha_h,
                    constant,
                } => ClaimJson::ScoreAtMost {
                    candidates: names(candidates),
                    strong: *strong,
                    alpha_g: *alpha_g,
                    alpha_h: *alpha_h,
                    constant: *constant,
                },
                ForgeClaim::StrongScoreZero { candidates } => ClaimJson::StrongScoreZero {
                    candidates: names(candidates),
                },
                ForgeClaim::WinnerIffAlphaGe { candidate, strong } => {
                    ClaimJson::WinnerIffAlphaGe {
                        candidate: name(*candidate),
                        strong: *strong,
                    }
                }
            })
            .collect(),
        witnesses: instance
            .witness_hints
            .iter()
            .map(|hint| WitnessJson {
                candidate: name(hint.candidate),
                voters: hint.voters.clone(),
            })
            .collect(),
    }
}

/// Rebuilds a verifiable instance from a parsed election and its sidecar.
pub fn instance_from_parts(election: Election, file: &ClaimsFile) -> Result<ForgedInstance, String> {
    let kind =
        ForgeKind::from_name(&file.kind).ok_or_else(|| format!("unknown kind {:?}", file.kind))?;
    let resolve = |name: &str| -> Result<CandidateId, String> {
        election
            .candidate_by_name(name)
            .ok_or_else(|| format!("unknown candidate {name:?}"))
    };
    let resolve_all = |names: &[String]| -> Result<Vec<CandidateId>, String> {
        names.iter().map(|n| resolve(n)).collect()
    };
    let p = resolve(&file.p)?;
    let r = file.r.as_deref().map(resolve).transpose()?;
    let graph_g = graph_from_json(&file.graph_g)?;
    let graph_h = file.graph_h.as_ref().map(graph_from_json).transpose()?;
    let mut claims = Vec::with_capacity(file.claims.len());
    for claim in &file.claims {
        claims.push(match claim {
            ClaimJson::Score {
                candidate,
                strong,
                alpha_g,
                alpha_h,
                constant,
            } => ForgeClaim::Score {
                candidate: resolve(candidate)?,
                strong: *strong,
                alpha_g: *alpha_g,
                alpha_h: *alpha_h,
                constant: *constant,
            },
            ClaimJson::ScoreAtMost {
                candidates,
                strong,
                alpha_g,
                alpha_h,
                constant,
            } => ForgeClaim::ScoreAtMost {
                candidates: resolve_all(candidates)?,
                strong: *strong,
                alpha_g: *alpha_g,
                alpha_h: *alpha_h,
                constant: *constant,
            },
            ClaimJson::StrongScoreZero { candidates } => ForgeClaim::StrongScoreZero {
                candidates: resolve_all(candidates)?,
            },
            ClaimJson::WinnerIffAlphaGe { candidate, strong } => ForgeClaim::WinnerIffAlphaGe {
                candidate: resolve(candidate)?,
                strong: *strong,
            },
        });
    }
    let mut witness_hints = Vec::with_capacity(file.witnesses.len());
    for hint in &file.witnesses {
        witness_hints.push(WitnessHint {
            candidate: resolve(&hint.candidate)?,
            voters: hint.voters.clone(),
        });
    }
    Ok(ForgedInstance {
        kind,
        election,
        p,
        r,
        graph_g,
        graph_h,
        claims,
        witness_hints,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use hardtally_core::forge::{forge, verify_forge, VerifyMode};
    use hardtally_core::oracles::OracleBudget;

    #[test]
    fn claims_round_trip_through_json() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let k3 = Graph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let instance = forge(ForgeKind::StrongYoungWinner, &g, Some(&k3)).unwrap();
        let file = claims_file(&instance);
        let json = serde_json::to_string_pretty(&file).unwrap();
        let parsed: ClaimsFile = serde_json::from_str(&json).unwrap();
        let rebuilt = instance_from_parts(instance.election.clone(), &parsed).unwrap();
        assert_eq!(rebuilt, instance);
        let report =
            verify_forge(&rebuilt, VerifyMode::Full, &OracleBudget::default()).unwrap();
        assert!(report.all_passed);
    }
}
