//! Helpers shared by the integration suites.

#![allow(dead_code)]

use bwperm::instance::SplitMix64;
use bwperm::oracle::GeneralGraph;
use bwperm::perm::{Color, Coloring, Permutation, Scanline, Side};
use bwperm::solver::Witness;

/// All permutations of `1..=n` as bottom orders.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (1..=n).collect(), &mut out);
    out
}

/// The induced sub-instance on `labels` (sorted ascending), relabeled by
/// rank. Relative order on both rails is preserved, so the sub-instance's
/// graph is the induced subgraph.
pub fn sub_permutation(p: &Permutation, labels: &[usize]) -> Permutation {
    let rank = |k: usize| labels.iter().position(|&x| x == k).map(|i| i + 1);
    let bottom: Vec<usize> = p
        .bottom_order()
        .iter()
        .filter_map(|&k| rank(k))
        .collect();
    Permutation::from_bottom(&bottom).expect("rank relabeling is a bijection")
}

/// Horizontal mirror of the diagram: reverse the top order and remap labels.
pub fn mirrored(p: &Permutation) -> Permutation {
    let n = p.n();
    let bottom: Vec<usize> = (1..=n)
        .map(|i| n + 1 - p.label_at_bottom(n + 1 - i))
        .collect();
    Permutation::from_bottom(&bottom).expect("mirror is a bijection")
}

/// The induced subgraph on `labels`, relabeled by rank, as a general graph.
pub fn induced_graph(p: &Permutation, labels: &[usize]) -> GeneralGraph {
    let mut edges = Vec::new();
    for (i, &u) in labels.iter().enumerate() {
        for &v in &labels[i + 1..] {
            if p.crosses(u, v) {
                edges.push((i + 1, labels.iter().position(|&x| x == v).unwrap() + 1));
            }
        }
    }
    GeneralGraph::new(labels.len(), &edges)
}

/// Iterates all 3^n partial colorings of `n` vertices.
pub fn all_colorings(n: usize) -> impl Iterator<Item = Coloring> {
    let total = 3usize.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut c = Coloring::uncolored(n);
        for k in 1..=n {
            match code % 3 {
                1 => c.set(k, Color::Black),
                2 => c.set(k, Color::White),
                _ => {}
            }
            code /= 3;
        }
        c
    })
}

/// Is every uncolored vertex flanked by both a black and a white neighbor?
pub fn is_maximal(p: &Permutation, c: &Coloring) -> bool {
    (1..=p.n()).all(|k| {
        if c.color(k) != Color::Uncolored {
            return true;
        }
        let mut has_black = false;
        let mut has_white = false;
        for j in 1..=p.n() {
            if j != k && p.crosses(k, j) {
                match c.color(j) {
                    Color::Black => has_black = true,
                    Color::White => has_white = true,
                    Color::Uncolored => {}
                }
            }
        }
        has_black && has_white
    })
}

/// Greedy maximal extension: repeatedly color (lowest label first) any
/// uncolored vertex lacking a black neighbor white, or lacking a white
/// neighbor black.
pub fn extend_maximal(p: &Permutation, start: &Coloring) -> Coloring {
    let n = p.n();
    let mut c = start.clone();
    loop {
        let mut progressed = false;
        for k in 1..=n {
            if c.color(k) != Color::Uncolored {
                continue;
            }
            let mut has_black = false;
            let mut has_white = false;
            for j in 1..=n {
                if j != k && p.crosses(k, j) {
                    match c.color(j) {
                        Color::Black => has_black = true,
                        Color::White => has_white = true,
                        Color::Uncolored => {}
                    }
                }
            }
            if !has_black {
                c.set(k, Color::White);
                progressed = true;
            } else if !has_white {
                c.set(k, Color::Black);
                progressed = true;
            }
        }
        if !progressed {
            return c;
        }
    }
}

/// Chain construction for a valid coloring: one scanline between
/// each pair of consecutive colored components. Returns `None` if the
/// components are not separable this way.
pub fn separating_chain(p: &Permutation, c: &Coloring) -> Option<Vec<Scanline>> {
    let colored: Vec<usize> = (1..=p.n())
        .filter(|&k| c.color(k) != Color::Uncolored)
        .collect();
    let comps = p.components(&colored);
    let mut chain = Vec::new();
    for pair in comps.windows(2) {
        let a = pair[0].iter().copied().max().unwrap();
        let b = pair[0].iter().map(|&k| p.pos(k)).max().unwrap();
        chain.push(Scanline::new(a, b));
    }
    for w in chain.windows(2) {
        if !w[0].le(&w[1]) {
            return None;
        }
    }
    Some(chain)
}

/// Crossing segments of the chain must be exactly the
/// uncolored vertices.
pub fn chain_crossers_match(p: &Permutation, c: &Coloring, chain: &[Scanline]) -> bool {
    (1..=p.n()).all(|k| {
        let crosses_chain = chain
            .iter()
            .any(|&s| p.segment_side(s, k) == Side::Crossing);
        crosses_chain == (c.color(k) == Color::Uncolored)
    })
}

/// Full witness soundness predicate.
pub fn check_witness(p: &Permutation, b: usize, w: usize, wit: &Witness) {
    let check = p.verify_coloring(&wit.coloring);
    assert!(check.valid, "witness coloring invalid");
    assert_eq!((check.black, check.white), (b, w), "witness counts off");
    assert!(wit.chain.is_valid(), "witness chain unsorted or incompatible");
    for k in 1..=p.n() {
        let crosses_chain = wit
            .chain
            .scanlines
            .iter()
            .any(|&s| p.segment_side(s, k) == Side::Crossing);
        match wit.coloring.color(k) {
            Color::Uncolored => {
                let mut has_black = false;
                let mut has_white = false;
                for j in 1..=p.n() {
                    if j != k && p.crosses(k, j) {
                        match wit.coloring.color(j) {
                            Color::Black => has_black = true,
                            Color::White => has_white = true,
                            Color::Uncolored => {}
                        }
                    }
                }
                if has_black && has_white {
                    assert!(crosses_chain, "bicolored-neighborhood vertex {k} misses the chain");
                }
            }
            _ => assert!(!crosses_chain, "colored vertex {k} crosses the chain"),
        }
    }
    for block in &wit.blocks {
        let pc = bwperm::perm::Piece::new(block.lo, block.hi).unwrap();
        for k in p.inside(pc) {
            let c = wit.coloring.color(k);
            assert!(
                c == block.color || c == Color::Uncolored,
                "vertex {k} contradicts its block color"
            );
        }
    }
}

/// A seeded random simple graph with edge probability 1/2.
pub fn random_graph(n: usize, seed: u64) -> GeneralGraph {
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if rng.next_u64() & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    GeneralGraph::new(n, &edges)
}

/// Minimal XML well-formedness check: balanced tags, quoted attributes.
pub fn xml_well_formed(text: &str) -> bool {
    let mut stack: Vec<String> = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] != b'<' {
            i += 1;
            continue;
        }
        let close = match text[i..].find('>') {
            Some(j) => i + j,
            None => return false,
        };
        let tag = &text[i + 1..close];
        if let Some(name) = tag.strip_prefix('/') {
            if stack.pop().as_deref() != Some(name.trim()) {
                return false;
            }
        } else if !tag.starts_with('?') && !tag.starts_with('!') {
            let name: String = tag
                .chars()
                .take_while(|c| !c.is_whitespace() && *c != '/')
                .collect();
            if name.is_empty() {
                return false;
            }
            if !tag.ends_with('/') {
                stack.push(name);
            }
        }
        i = close + 1;
    }
    stack.is_empty()
}
