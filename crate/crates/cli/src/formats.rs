//! The `.elx` election format and the `.graph` format.
//!
//! `.elx` grammar: `#` starts a comment to end of line; the first content
//! line must be `candidates: <name>...`; an optional `axis: <name>...` line
//! may appear anywhere after it; each `vote:` line lists the groups of one
//! ballot, most preferred first, separated by ` | `, and `vote[c]:` repeats
//! the ballot `c` times. Names match `[A-Za-z0-9_.-]+`. Serialization is
//! canonical: one `vote:` line per ballot, groups in ballot order,
//! candidates within a group in roster order, single spaces throughout.
//!
//! `.graph` grammar: a `graph: <n>` line followed by `edge: <u> <v>` lines
//! with `1 <= u < v <= n`.

use hardtally_core::ballots::{Ballot, CandidateId, Election};
use hardtally_core::forge::Graph;
use std::fmt;

/// A parse failure with its 1-based location.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        column,
        message: message.into(),
    })
}

fn valid_name(token: &str) -> bool {
    !token.is_empty()
        && token
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '-'))
}

/// A token with its 1-based starting column.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch == ' ' || ch == '\t' {
            if let Some(s) = start.take() {
                tokens.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push((s + 1, &line[s..]));
    }
    tokens
}

const MAX_VOTERS: usize = 1_000_000;

pub fn parse_election(text: &str) -> Result<Election, ParseError> {
    let mut names: Option<Vec<String>> = None;
    let mut axis: Option<Vec<CandidateId>> = None;
    let mut ballots: Vec<Ballot> = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let tokens = tokenize(content);
        if tokens.is_empty() {
            continue;
        }
        let (key_col, key) = tokens[0];
        let rest = &tokens[1..];
        match names.as_ref() {
            None => {
                if key != "candidates:" {
                    return err(line_no, key_col, "expected a candidates: line first");
                }
                if rest.is_empty() {
                    return err(line_no, key_col, "candidates list is empty");
                }
                let mut list = Vec::with_capacity(rest.len());
                for &(col, token) in rest {
                    if !valid_name(token) {
                        return err(line_no, col, format!("invalid candidate name {token:?}"));
                    }
                    if list.iter().any(|n| n == token) {
                        return err(line_no, col, format!("duplicate candidate name {token:?}"));
                    }
                    list.push(token.to_string());
                }
                names = Some(list);
            }
            Some(roster) => {
                let lookup = |col: usize, token: &str| -> Result<CandidateId, ParseError> {
                    match roster.iter().position(|n| n == token) {
                        Some(i) => Ok(CandidateId(i)),
                        None => err(line_no, col, format!("unknown candidate {token:?}")),
                    }
                };
                if key == "candidates:" {
                    return err(line_no, key_col, "duplicate candidates: line");
                } else if key == "axis:" {
                    if axis.is_some() {
                        return err(line_no, key_col, "duplicate axis: line");
                    }
                    let mut list = Vec::with_capacity(rest.len());
                    for &(col, token) in rest {
                        let c = lookup(col, token)?;
                        if list.contains(&c) {
                            return err(line_no, col, format!("duplicate axis entry {token:?}"));
                        }
                        list.push(c);
                    }
                    if list.len() != roster.len() {
                        return err(line_no, key_col, "axis must list every candidate");
                    }
                    axis = Some(list);
                } else if key == "vote:" || (key.starts_with("vote[") && key.ends_with("]:")) {
                    let count = if key == "vote:" {
                        1
                    } else {
                        let digits = &key[5..key.len() - 2];
                        match digits.parse::<usize>() {
                            Ok(c) if c >= 1 => c,
                            _ => {
                                return err(
                                    line_no,
                                    key_col,
                                    format!("invalid vote multiplicity {digits:?}"),
                                )
                            }
                        }
                    };
                    let mut groups: Vec<Vec<CandidateId>> = vec![Vec::new()];
                    let mut seen: Vec<CandidateId> = Vec::new();
                    for &(col, token) in rest {
                        if token == "|" {
                            if groups.last().unwrap().is_empty() {
                                return err(line_no, col, "empty ballot group");
                            }
                            groups.push(Vec::new());
                        } else {
                            if !valid_name(token) {
                                return err(line_no, col, format!("invalid name {token:?}"));
                            }
                            let c = lookup(col, token)?;
                            if seen.contains(&c) {
                                return err(
                                    line_no,
                                    col,
                                    format!("candidate {token:?} listed twice in a ballot"),
                                );
                            }
                            seen.push(c);
                            groups.last_mut().unwrap().push(c);
                        }
                    }
                    if groups.last().unwrap().is_empty() {
                        return err(line_no, key_col, "empty ballot group");
                    }
                    if seen.len() != roster.len() {
                        let missing = (0..roster.len())
                            .map(CandidateId)
                            .find(|c| !seen.contains(c))
                            .expect("some candidate is missing");
                        return err(
                            line_no,
                            key_col,
                            format!("ballot is missing candidate {:?}", roster[missing.index()]),
                        );
                    }
                    if ballots.len() + count > MAX_VOTERS {
                        return err(line_no, key_col, "too many voters");
                    }
                    let ballot = Ballot::new(groups)
                        .expect("groups are nonempty and disjoint by construction");
                    for _ in 0..count {
                        ballots.push(ballot.clone());
                    }
                } else {
                    return err(line_no, key_col, format!("unknown directive {key:?}"));
                }
            }
        }
    }
    let Some(names) = names else {
        return err(1, 1, "missing candidates: line");
    };
    Election::new(names, ballots, axis).map_err(|e| ParseError {
        line: 1,
        column: 1,
        message: e.to_string(),
    })
}

pub fn serialize_election(election: &Election) -> String {
    let mut out = String::new();
    out.push_str("candidates:");
    for name in election.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    if let Some(axis) = election.axis() {
        out.push_str("axis:");
        for &c in axis {
            out.push(' ');
            out.push_str(election.name_of(c));
        }
        out.push('\n');
    }
    for ballot in election.ballots() {
        out.push_str("vote:");
        for (i, group) in ballot.groups().iter().enumerate() {
            if i > 0 {
                out.push_str(" |");
            }
            for &c in group {
                out.push(' ');
                out.push_str(election.name_of(c));
            }
        }
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut vertices: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let tokens = tokenize(content);
        if tokens.is_empty() {
            continue;
        }
        let (key_col, key) = tokens[0];
        match (key, vertices) {
            ("graph:", None) => {
                if tokens.len() != 2 {
                    return err(line_no, key_col, "expected graph: <vertex count>");
                }
                match tokens[1].1.parse::<usize>() {
                    Ok(n) => vertices = Some(n),
                    Err(_) => return err(line_no, tokens[1].0, "invalid vertex count"),
                }
            }
            ("graph:", Some(_)) => return err(line_no, key_col, "duplicate graph: line"),
            ("edge:", Some(n)) => {
                if tokens.len() != 3 {
                    return err(line_no, key_col, "expected edge: <u> <v>");
                }
                let parse_vertex = |(col, token): (usize, &str)| -> Result<usize, ParseError> {
                    match token.parse::<usize>() {
                        Ok(v) if (1..=n).contains(&v) => Ok(v),
                        Ok(v) => err(line_no, col, format!("vertex {v} out of range")),
                        Err(_) => err(line_no, col, "invalid vertex"),
                    }
                };
                let u = parse_vertex(tokens[1])?;
                let v = parse_vertex(tokens[2])?;
                if u == v {
                    return err(line_no, tokens[1].0, "self-loops are not allowed");
                }
                if u > v {
                    return err(line_no, tokens[1].0, "edges must satisfy u < v");
                }
                if edges.contains(&(u - 1, v - 1)) {
                    return err(line_no, tokens[1].0, format!("duplicate edge ({u}, {v})"));
                }
                edges.push((u - 1, v - 1));
            }
            ("edge:", None) => return err(line_no, key_col, "expected a graph: line first"),
            _ => return err(line_no, key_col, format!("unknown directive {key:?}")),
        }
    }
    let Some(n) = vertices else {
        return err(1, 1, "missing graph: line");
    };
    Graph::new(n, edges).map_err(|e| ParseError {
        line: 1,
        column: 1,
        message: e.to_string(),
    })
}

pub fn serialize_graph(graph: &Graph) -> String {
    let mut out = format!("graph: {}\n", graph.vertex_count());
    for &(u, v) in graph.edges() {
        out.push_str(&format!("edge: {} {}\n", u + 1, v + 1));
    }
    out
}
