//! Seeded random instance generators for the self-test sweeps. All
//! generators draw from a caller-provided ChaCha stream, so identical seeds
//! produce identical instances on every platform.

use hardtally_core::ballots::{Ballot, CandidateId, Election};
use hardtally_core::forge::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn names(m: usize) -> Vec<String> {
    (0..m).map(|i| format!("c{i}")).collect()
}

fn shuffled(rng: &mut impl Rng, m: usize) -> Vec<CandidateId> {
    let mut order: Vec<CandidateId> = (0..m).map(CandidateId).collect();
    for i in (1..m).rev() {
        order.swap(i, rng.random_range(0..=i));
    }
    order
}

pub fn random_dichotomous(rng: &mut impl Rng, m: usize, n: usize) -> Election {
    let ballots = (0..n)
        .map(|_| {
            let mut approved = Vec::new();
            let mut rest = Vec::new();
            for c in 0..m {
                if rng.random_bool(0.5) {
                    approved.push(CandidateId(c));
                } else {
                    rest.push(CandidateId(c));
                }
            }
            Ballot::dichotomous(approved, rest).expect("roster is nonempty")
        })
        .collect();
    Election::new(names(m), ballots, None).expect("names are unique")
}

/// A single-peaked electorate over a random axis; each vote walks outward
/// from a random peak. The axis is attached to the election.
pub fn random_single_peaked(rng: &mut impl Rng, m: usize, n: usize) -> Election {
    let axis = shuffled(rng, m);
    let ballots = (0..n)
        .map(|_| {
            let peak = rng.random_range(0..m);
            let (mut lo, mut hi) = (peak, peak);
            let mut order = vec![axis[peak]];
            while order.len() < m {
                if hi == m - 1 || (lo > 0 && rng.random_bool(0.5)) {
                    lo -= 1;
                    order.push(axis[lo]);
                } else {
                    hi += 1;
                    order.push(axis[hi]);
                }
            }
            Ballot::ranking(&order).expect("walk covers the roster")
        })
        .collect();
    Election::new(names(m), ballots, Some(axis)).expect("names are unique")
}

/// A single-crossing electorate in ballot order: each successive voter
/// applies a few more adjacent swaps, never flipping a pair twice.
pub fn random_single_crossing(rng: &mut impl Rng, m: usize, n: usize) -> Election {
    let start = shuffled(rng, m);
    let mut start_rank = vec![0usize; m];
    for (i, c) in start.iter().enumerate() {
        start_rank[c.index()] = i;
    }
    let mut orders = vec![start];
    while orders.len() < n {
        let mut next = orders.last().expect("nonempty").clone();
        for _ in 0..rng.random_range(0..=2) {
            let pos = rng.random_range(0..m - 1);
            let (x, y) = (next[pos], next[pos + 1]);
            if start_rank[x.index()] < start_rank[y.index()] {
                next.swap(pos, pos + 1);
            }
        }
        orders.push(next);
    }
    let ballots = orders
        .into_iter()
        .map(|o| Ballot::ranking(&o).expect("orders cover the roster"))
        .collect();
    Election::new(names(m), ballots, None).expect("names are unique")
}

pub fn random_graph(rng: &mut impl Rng, vertices: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..vertices {
        for v in (u + 1)..vertices {
            if rng.random_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(vertices, edges).expect("generated edges are valid")
}

/// A random graph guaranteed to contain at least one edge.
pub fn random_graph_with_edge(rng: &mut impl Rng, vertices: usize) -> Graph {
    debug_assert!(vertices >= 2);
    loop {
        let g = random_graph(rng, vertices);
        if !g.edges().is_empty() {
            return g;
        }
    }
}
