//! The scanline dynamic program.
//!
//! Two solve paths compute the same feasibility frontier:
//!
//! * [`PieceSolver`] evaluates per-piece tables by cutting each piece with
//!   every scanline strictly between its borders and combining the halves
//!   with max-plus convolution. Segments crossing the cut stay uncolored.
//!   This is the reference path, kept for differential testing.
//! * [`chain_frontier`] exploits that pairwise compatible scanlines form a
//!   chain: it sweeps single scanlines in componentwise order, extending
//!   each predecessor by one monochromatic block. This is the production
//!   path; witness reconstruction backtracks through its tables.
//!
//! Both paths produce downward-closed sets. The DP itself only visits
//! colorings whose colored components sit between consecutive chain
//! scanlines; closing downward recovers the full feasible set because every
//! valid coloring extends to a maximal one of that shape.

use std::collections::{HashMap, HashSet};

use crate::frontier::Frontier;
use crate::perm::{Color, Coloring, Permutation, Piece, Scanline, ScanlineChain};

/// 2-D prefix counts over the diagram. `left(s)` and `between(lo, hi)` count
/// segments in O(1).
pub(crate) struct RectCount {
    w: usize,
    pre: Vec<usize>,
}

impl RectCount {
    pub(crate) fn new(p: &Permutation) -> Self {
        let n = p.n();
        let w = n + 1;
        // pre[a * w + b] = #{k <= a : pos[k] <= b}
        let mut pre = vec![0usize; w * w];
        for a in 1..=n {
            let pa = p.pos(a);
            for b in 0..=n {
                pre[a * w + b] = pre[(a - 1) * w + b] + usize::from(pa <= b);
            }
        }
        RectCount { w, pre }
    }

    /// Segments entirely left of `s`.
    pub(crate) fn left(&self, s: Scanline) -> usize {
        self.pre[s.a * self.w + s.b]
    }

    /// Segments strictly inside the piece `(lo, hi)`.
    pub(crate) fn between(&self, lo: Scanline, hi: Scanline) -> usize {
        debug_assert!(lo.le(&hi));
        self.pre[hi.a * self.w + hi.b] + self.pre[lo.a * self.w + lo.b]
            - self.pre[lo.a * self.w + hi.b]
            - self.pre[hi.a * self.w + lo.b]
    }
}

/// Memoized per-piece feasibility tables (the reference solve path).
pub struct PieceSolver<'a> {
    p: &'a Permutation,
    rc: RectCount,
    memo: HashMap<(Scanline, Scanline), Frontier>,
    in_progress: HashSet<(Scanline, Scanline)>,
}

impl<'a> PieceSolver<'a> {
    pub fn new(p: &'a Permutation) -> Self {
        PieceSolver {
            p,
            rc: RectCount::new(p),
            memo: HashMap::new(),
            in_progress: HashSet::new(),
        }
    }

    /// The exact feasibility frontier of the subgraph induced by the piece.
    pub fn piece_table(&mut self, pc: Piece) -> Frontier {
        let (lo, hi) = self.tighten(pc.lo(), pc.hi());
        self.solve(lo, hi)
    }

    /// Number of distinct tables computed so far.
    pub fn tables_computed(&self) -> usize {
        self.memo.len()
    }

    /// Pulls the borders inward past segments that are not inside the piece,
    /// so equivalent pieces share one memo key. The inside set is unchanged.
    fn tighten(&self, mut lo: Scanline, mut hi: Scanline) -> (Scanline, Scanline) {
        loop {
            let mut changed = false;
            while lo.a < hi.a {
                let pk = self.p.pos(lo.a + 1);
                if pk > lo.b && pk <= hi.b {
                    break;
                }
                lo.a += 1;
                changed = true;
            }
            while lo.b < hi.b {
                let k = self.p.label_at_bottom(lo.b + 1);
                if k > lo.a && k <= hi.a {
                    break;
                }
                lo.b += 1;
                changed = true;
            }
            while hi.a > lo.a {
                let pk = self.p.pos(hi.a);
                if pk > lo.b && pk <= hi.b {
                    break;
                }
                hi.a -= 1;
                changed = true;
            }
            while hi.b > lo.b {
                let k = self.p.label_at_bottom(hi.b);
                if k > lo.a && k <= hi.a {
                    break;
                }
                hi.b -= 1;
                changed = true;
            }
            if !changed {
                return (lo, hi);
            }
        }
    }

    fn solve(&mut self, lo: Scanline, hi: Scanline) -> Frontier {
        let m = self.rc.between(lo, hi);
        if m == 0 {
            return Frontier::point();
        }
        let key = (lo, hi);
        if let Some(f) = self.memo.get(&key) {
            return f.clone();
        }
        // each table must be built exactly once; a revisit here would mean
        // the cut recursion failed to shrink the piece
        assert!(
            self.in_progress.insert(key),
            "piece ({lo}, {hi}) revisited while its table is under construction"
        );
        // all-black and all-white colorings, closed downward
        let mut maxw = vec![0usize; m + 1];
        maxw[0] = m;
        // cut by every scanline strictly between the borders; segments
        // crossing the cut are excluded from both halves
        for sa in lo.a..=hi.a {
            for sb in lo.b..=hi.b {
                let s = Scanline::new(sa, sb);
                if s == lo || s == hi {
                    continue;
                }
                let (llo, lhi) = self.tighten(lo, s);
                let left = self.solve(llo, lhi);
                let (rlo, rhi) = self.tighten(s, hi);
                let right = self.solve(rlo, rhi);
                let conv = left.convolve(&right);
                for (b, &w) in conv.maxw().iter().enumerate() {
                    if w > maxw[b] {
                        maxw[b] = w;
                    }
                }
            }
        }
        let f = Frontier::from_maxw(maxw);
        self.in_progress.remove(&key);
        self.memo.insert(key, f.clone());
        f
    }
}

/// Per-scanline tables of the chain DP: `tables[a * (n+1) + b]` is the maxw
/// array over the segments entirely left of scanline `(a, b)`.
struct ChainTables {
    w: usize,
    tables: Vec<Vec<usize>>,
}

fn chain_tables(p: &Permutation, rc: &RectCount) -> ChainTables {
    let n = p.n();
    let w = n + 1;
    let mut tables: Vec<Vec<usize>> = vec![Vec::new(); w * w];
    for a in 0..=n {
        for b in 0..=n {
            if a == 0 && b == 0 {
                tables[0] = vec![0];
                continue;
            }
            let s = Scanline::new(a, b);
            let m = rc.left(s);
            // (b', 0) is always feasible: color b' vertices black, rest uncolored
            let mut best = vec![0usize; m + 1];
            for a2 in 0..=a {
                for b2 in 0..=b {
                    if a2 == a && b2 == b {
                        continue;
                    }
                    let fp = &tables[a2 * w + b2];
                    let mp = fp.len() - 1;
                    let c = rc.between(Scanline::new(a2, b2), s);
                    // block colored white
                    for (i, &v) in fp.iter().enumerate() {
                        let v = v + c;
                        if v > best[i] {
                            best[i] = v;
                        }
                    }
                    // block colored black
                    for i in 0..=(mp + c) {
                        let v = fp[i.saturating_sub(c)];
                        if v > best[i] {
                            best[i] = v;
                        }
                    }
                }
            }
            debug_assert!(best.windows(2).all(|x| x[0] >= x[1]));
            tables[a * w + b] = best;
        }
    }
    ChainTables { w, tables }
}

/// The exact feasibility frontier of the whole graph, by the optimized
/// single-scanline chain DP. Equals the extreme piece's table.
pub fn chain_frontier(p: &Permutation) -> Frontier {
    let rc = RectCount::new(p);
    let ct = chain_tables(p, &rc);
    let n = p.n();
    Frontier::from_maxw(ct.tables[n * ct.w + n].clone())
}

/// Can `p` be colored with exactly `b` black and `w` white vertices?
pub fn decide(p: &Permutation, b: usize, w: usize) -> bool {
    chain_frontier(p).member(b, w)
}

/// A monochromatic region between two consecutive chain scanlines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub lo: Scanline,
    pub hi: Scanline,
    pub color: Color,
}

/// A concrete valid coloring plus the scanline chain certifying its
/// structure.
#[derive(Debug, Clone)]
pub struct Witness {
    pub coloring: Coloring,
    pub chain: ScanlineChain,
    pub blocks: Vec<Block>,
}

/// Reconstructs a witness coloring for `(b, w)`, or `None` if infeasible.
///
/// Backtracking re-runs the local predecessor search at each chain scanline
/// instead of storing back-pointers; ties go to the lexicographically
/// smallest predecessor, black block before white. The reconstructed
/// coloring dominates `(b, w)`; surplus vertices are then uncolored, lowest
/// labels first.
pub fn witness(p: &Permutation, b: usize, w: usize) -> Option<Witness> {
    let n = p.n();
    let rc = RectCount::new(p);
    let ct = chain_tables(p, &rc);
    let top = &ct.tables[n * ct.w + n];
    if !(b < top.len() && w <= top[b]) {
        return None;
    }

    let mut cur = Scanline::new(n, n);
    let (mut need_b, mut need_w) = (b, w);
    // (lo, hi, block color, block size), from the right end inward
    let mut steps: Vec<(Scanline, Scanline, Color, usize)> = Vec::new();
    while cur != Scanline::new(0, 0) {
        let mut chosen = None;
        'search: for a2 in 0..=cur.a {
            for b2 in 0..=cur.b {
                let pred = Scanline::new(a2, b2);
                if pred == cur {
                    continue;
                }
                let fp = &ct.tables[a2 * ct.w + b2];
                let mp = fp.len() - 1;
                let c = rc.between(pred, cur);
                let tb = need_b.saturating_sub(c);
                if tb <= mp && fp[tb] >= need_w {
                    chosen = Some((pred, Color::Black, c, tb, need_w));
                    break 'search;
                }
                let tw = need_w.saturating_sub(c);
                if need_b <= mp && fp[need_b] >= tw {
                    chosen = Some((pred, Color::White, c, need_b, tw));
                    break 'search;
                }
            }
        }
        let (pred, color, c, nb, nw) =
            chosen.expect("frontier membership implies a feasible predecessor");
        steps.push((pred, cur, color, c));
        cur = pred;
        need_b = nb;
        need_w = nw;
    }
    steps.reverse();

    let mut coloring = Coloring::uncolored(n);
    let mut chain = Vec::new();
    let mut blocks = Vec::new();
    for (i, &(lo, hi, color, c)) in steps.iter().enumerate() {
        if i > 0 {
            chain.push(lo);
        }
        if c > 0 {
            for k in p.inside(Piece::new(lo, hi).expect("chain steps are ordered")) {
                coloring.set(k, color);
            }
            blocks.push(Block { lo, hi, color });
        }
    }

    // uncolor surplus down to the exact requested counts
    for (color, target) in [(Color::Black, b), (Color::White, w)] {
        let mut have = coloring.count(color);
        for k in 1..=n {
            if have == target {
                break;
            }
            if coloring.color(k) == color {
                coloring.set(k, Color::Uncolored);
                have -= 1;
            }
        }
    }

    let check = p.verify_coloring(&coloring);
    debug_assert!(check.valid && check.black == b && check.white == w);
    Some(Witness {
        coloring,
        chain: ScanlineChain::new(chain),
        blocks,
    })
}
