//! Independent exhaustive solver for arbitrary graphs. Ground truth for
//! differential tests; exponential by design and guarded accordingly.

use thiserror::Error;

use crate::frontier::Frontier;
use crate::perm::Permutation;

/// Default size cap for the subset-enumeration oracle.
pub const DEFAULT_GUARD: usize = 20;

/// Size cap for the 3^n second oracle.
pub const EXHAUSTIVE_GUARD: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance too large for the exhaustive oracle: n = {n} exceeds the guard {limit}")]
    GuardExceeded { n: usize, limit: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: vertex {v} out of range 1..={n}")]
    VertexOutOfRange { line: usize, v: usize, n: usize },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
    #[error("empty input")]
    Empty,
}

/// An arbitrary simple graph with 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl GeneralGraph {
    /// Builds a graph from unordered edges; normalizes, sorts, dedups.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut es: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| {
                assert!(u != v, "self-loop at {u}");
                assert!(u >= 1 && u <= n && v >= 1 && v <= n, "edge ({u},{v}) out of range");
                (u.min(v), u.max(v))
            })
            .collect();
        es.sort_unstable();
        es.dedup();
        GeneralGraph { n, edges: es }
    }

    /// The permutation graph of `p`, by identity labels.
    pub fn from_permutation(p: &Permutation) -> Self {
        let mut edges = Vec::new();
        for i in 1..=p.n() {
            for j in (i + 1)..=p.n() {
                if p.crosses(i, j) {
                    edges.push((i, j));
                }
            }
        }
        GeneralGraph { n: p.n(), edges }
    }

    /// Parses the edge-list format: line 1 `n m`, then `m` lines `u v`.
    pub fn parse(text: &str) -> Result<Self, EdgeListError> {
        let mut lines = text.lines().enumerate();
        let (lineno, header) = lines.next().ok_or(EdgeListError::Empty)?;
        let mut it = header.split_whitespace();
        let parse_num = |tok: Option<&str>, lineno: usize| -> Result<usize, EdgeListError> {
            tok.and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| EdgeListError::Malformed {
                    line: lineno + 1,
                    message: format!("expected integers, got {:?}", tok.unwrap_or("")),
                })
        };
        let n = parse_num(it.next(), lineno)?;
        let m = parse_num(it.next(), lineno)?;
        let mut edges = Vec::with_capacity(m);
        let mut read = 0;
        for (lineno, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let u = parse_num(it.next(), lineno)?;
            let v = parse_num(it.next(), lineno)?;
            for &x in &[u, v] {
                if x < 1 || x > n {
                    return Err(EdgeListError::VertexOutOfRange { line: lineno + 1, v: x, n });
                }
            }
            if u == v {
                return Err(EdgeListError::SelfLoop { line: lineno + 1, v: u });
            }
            edges.push((u, v));
            read += 1;
        }
        if read != m {
            return Err(EdgeListError::Malformed {
                line: 1,
                message: format!("header announced {m} edges, found {read}"),
            });
        }
        Ok(GeneralGraph::new(n, &edges))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Closed-neighborhood bitmasks, bit `k-1` for label `k`. Requires n <= 64.
    fn closed_masks(&self) -> Vec<u64> {
        let mut masks: Vec<u64> = (0..self.n).map(|i| 1u64 << i).collect();
        for &(u, v) in &self.edges {
            masks[u - 1] |= 1 << (v - 1);
            masks[v - 1] |= 1 << (u - 1);
        }
        masks
    }
}

/// Exact feasibility frontier by enumerating black sets: for a black set B,
/// the best white set is everything outside B's closed neighborhood.
pub fn oracle_frontier(g: &GeneralGraph) -> Result<Frontier, OracleError> {
    oracle_frontier_guarded(g, DEFAULT_GUARD)
}

pub fn oracle_frontier_guarded(g: &GeneralGraph, guard: usize) -> Result<Frontier, OracleError> {
    let n = g.n;
    if n > guard || n > 63 {
        return Err(OracleError::GuardExceeded { n, limit: guard.min(63) });
    }
    let masks = g.closed_masks();
    let mut maxw = vec![0usize; n + 1];
    for set in 0u64..(1u64 << n) {
        let b = set.count_ones() as usize;
        let mut dom = set;
        let mut rest = set;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            dom |= masks[i];
            rest &= rest - 1;
        }
        let w = n - dom.count_ones() as usize;
        if w > maxw[b] {
            maxw[b] = w;
        }
    }
    Ok(Frontier::from_maxw(maxw))
}

/// Decision query against the oracle frontier.
pub fn oracle_decide(g: &GeneralGraph, b: usize, w: usize) -> Result<bool, OracleError> {
    let f = oracle_frontier(g)?;
    Ok(f.member(b, w))
}

/// Second oracle: enumerates all 3^n partial colorings and keeps the valid
/// ones. Only for cross-checking `oracle_frontier` at small sizes.
pub fn exhaustive_check(g: &GeneralGraph) -> Result<Frontier, OracleError> {
    let n = g.n;
    if n > EXHAUSTIVE_GUARD {
        return Err(OracleError::GuardExceeded { n, limit: EXHAUSTIVE_GUARD });
    }
    // colors[k]: 0 uncolored, 1 black, 2 white
    let mut colors = vec![0u8; n];
    let mut maxw = vec![0usize; n + 1];
    loop {
        let valid = g.edges.iter().all(|&(u, v)| {
            let (cu, cv) = (colors[u - 1], colors[v - 1]);
            !((cu == 1 && cv == 2) || (cu == 2 && cv == 1))
        });
        if valid {
            let b = colors.iter().filter(|&&c| c == 1).count();
            let w = colors.iter().filter(|&&c| c == 2).count();
            if w > maxw[b] {
                maxw[b] = w;
            }
        }
        // odometer step
        let mut i = 0;
        while i < n && colors[i] == 2 {
            colors[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        colors[i] += 1;
    }
    Ok(Frontier::from_maxw(maxw))
}
