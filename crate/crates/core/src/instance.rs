//! Instance generation and export.
//!
//! The generator is pinned to a splitmix64 sequence driving a
//! descending-index Fisher–Yates shuffle, so any implementation of the same
//! procedure reproduces the golden instances byte for byte.

use crate::perm::{ParseError, Permutation};

/// Parameters of a reproducible random instance.
#[derive(Debug, Clone, Copy)]
pub struct GeneratorConfig {
    pub n: usize,
    pub seed: u64,
}

/// splitmix64 with the published constants.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// A uniformly random permutation, deterministic per `(n, seed)`.
pub fn generate_random(cfg: &GeneratorConfig) -> Result<Permutation, ParseError> {
    if cfg.n == 0 {
        return Err(ParseError::BadCount(0));
    }
    let mut labels: Vec<usize> = (1..=cfg.n).collect();
    let mut rng = SplitMix64::new(cfg.seed);
    for i in (1..cfg.n).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        labels.swap(i, j);
    }
    Permutation::from_bottom(&labels)
}

/// The instance in permutation text format.
pub fn to_permutation_text(p: &Permutation) -> String {
    let labels: Vec<String> = p.bottom_order().iter().map(|k| k.to_string()).collect();
    format!("{}\n{}\n", p.n(), labels.join(" "))
}

/// The permutation graph in edge-list format: `n m`, then sorted edges.
pub fn export_edges(p: &Permutation) -> String {
    let mut edges = Vec::new();
    for i in 1..=p.n() {
        for j in (i + 1)..=p.n() {
            if p.crosses(i, j) {
                edges.push((i, j));
            }
        }
    }
    let mut out = format!("{} {}\n", p.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
