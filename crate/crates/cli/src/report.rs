//! Text and JSON rendering of command results. The JSON mirrors the text
//! fields one-to-one; both are byte-deterministic for identical inputs.

use hardtally_core::ballots::{Ballot, Certificate, Election, MoveDirection};
use hardtally_core::domains::DomainViolation;
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Text,
    Json,
}

pub fn render_order(election: &Election, order: &Ballot) -> String {
    order
        .groups()
        .iter()
        .map(|group| {
            group
                .iter()
                .map(|&c| election.name_of(c))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

#[derive(Serialize, Debug)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertificateJson {
    None,
    VoterSubset { voters: Vec<usize> },
    Moves { moves: Vec<MoveJson> },
    Lifts { lifts: Vec<usize> },
    ConsensusOrder { order: String },
}

#[derive(Serialize, Debug)]
pub struct MoveJson {
    pub voter: usize,
    pub candidate: String,
    pub direction: String,
}

pub fn certificate_json(election: &Election, cert: &Certificate) -> CertificateJson {
    match cert {
        Certificate::None => CertificateJson::None,
        Certificate::VoterSubset(voters) => CertificateJson::VoterSubset {
            voters: voters.clone(),
        },
        Certificate::Moves(moves) => CertificateJson::Moves {
            moves: moves
                .iter()
                .map(|edit| MoveJson {
                    voter: edit.voter,
                    candidate: election.name_of(edit.candidate).to_string(),
                    direction: match edit.direction {
                        MoveDirection::Up => "up".to_string(),
                        MoveDirection::Down => "down".to_string(),
                    },
                })
                .collect(),
        },
        Certificate::Lifts(lifts) => CertificateJson::Lifts {
            lifts: lifts.clone(),
        },
        Certificate::Consensus(order) => CertificateJson::ConsensusOrder {
            order: render_order(election, order),
        },
    }
}

pub fn certificate_text(election: &Election, cert: &Certificate) -> String {
    match cert {
        Certificate::None => "none".to_string(),
        Certificate::VoterSubset(voters) => {
            let mut s = String::from("voters");
            for v in voters {
                s.push_str(&format!(" {v}"));
            }
            s
        }
        Certificate::Moves(moves) => {
            let mut s = String::from("moves");
            for edit in moves {
                let dir = match edit.direction {
                    MoveDirection::Up => "up",
                    MoveDirection::Down => "down",
                };
                s.push_str(&format!(
                    " ({},{},{dir})",
                    edit.voter,
                    election.name_of(edit.candidate)
                ));
            }
            s
        }
        Certificate::Lifts(lifts) => {
            let mut s = String::from("lifts");
            for l in lifts {
                s.push_str(&format!(" {l}"));
            }
            s
        }
        Certificate::Consensus(order) => format!("order {}", render_order(election, order)),
    }
}

pub fn violation_text(election: &Election, violation: &DomainViolation) -> String {
    let name = |c: &hardtally_core::ballots::CandidateId| election.name_of(*c);
    match violation {
        DomainViolation::TooManyGroups { voter, groups } => {
            format!("voter {voter} has {groups} groups")
        }
        DomainViolation::PeakViolation { voter, triple } => format!(
            "voter {voter} violates the peak condition on triple ({}, {}, {})",
            name(&triple.0),
            name(&triple.1),
            name(&triple.2)
        ),
        DomainViolation::CrossingViolation { pair, crossings } => format!(
            "pair ({}, {}) crosses after voters {} and {}",
            name(&pair.0),
            name(&pair.1),
            crossings.0,
            crossings.1
        ),
    }
}

#[derive(Serialize, Debug)]
pub struct ScoreJson {
    pub rule: String,
    pub candidate: String,
    pub score: i64,
    pub method: String,
    pub certificate: CertificateJson,
}

#[derive(Serialize, Debug)]
pub struct WinnerJson {
    pub rule: String,
    pub winners: Vec<String>,
    pub method: String,
}

#[derive(Serialize, Debug)]
pub struct CheckJson {
    pub domain: String,
    pub holds: bool,
    pub violation: Option<String>,
}
