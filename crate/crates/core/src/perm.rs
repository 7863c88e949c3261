//! Permutation-diagram data model: segments, adjacency, scanlines, pieces,
//! colorings, and the predicates that connect them.
//!
//! A permutation diagram has two horizontal rails. The top rail carries the
//! labels `1..=n` in natural order; the bottom rail carries them in the order
//! given by the instance permutation. Vertex `k` is the straight segment from
//! top position `k` to the bottom position of label `k`, and two vertices are
//! adjacent exactly when their segments cross.

use std::fmt;

use thiserror::Error;

/// Errors from reading a permutation out of text or a raw label sequence.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("token {index} ({token:?}) is not an integer")]
    NotAnInteger { index: usize, token: String },
    #[error("vertex count must be at least 1, got {0}")]
    BadCount(i64),
    #[error("expected {expected} labels after the count, found {found}")]
    WrongTokenCount { expected: usize, found: usize },
    #[error("duplicate label {label} at position {position}")]
    DuplicateLabel { label: usize, position: usize },
    #[error("label {label} at position {position} is out of range 1..={n}")]
    LabelOutOfRange { label: usize, position: usize, n: usize },
    #[error("empty input")]
    Empty,
}

/// A permutation-graph instance: the bottom-rail label order of the diagram.
///
/// `bottom` and `pos` are stored 1-indexed (slot 0 is unused) so positions
/// and labels read exactly as in the diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    n: usize,
    bottom: Vec<usize>,
    pos: Vec<usize>,
}

impl Permutation {
    /// Builds an instance from the bottom-rail order, validating that it is
    /// a bijection on `1..=n`.
    pub fn from_bottom(bottom: &[usize]) -> Result<Self, ParseError> {
        let n = bottom.len();
        if n == 0 {
            return Err(ParseError::BadCount(0));
        }
        let mut b = vec![0usize; n + 1];
        let mut pos = vec![0usize; n + 1];
        for (i, &label) in bottom.iter().enumerate() {
            let position = i + 1;
            if label < 1 || label > n {
                return Err(ParseError::LabelOutOfRange { label, position, n });
            }
            if pos[label] != 0 {
                return Err(ParseError::DuplicateLabel { label, position });
            }
            b[position] = label;
            pos[label] = position;
        }
        Ok(Permutation { n, bottom: b, pos })
    }

    /// Parses the permutation text format: first token `n`, then `n` labels.
    /// Lines starting with `#` are comments.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let tokens: Vec<&str> = text
            .lines()
            .filter(|line| !line.trim_start().starts_with('#'))
            .flat_map(str::split_whitespace)
            .collect();
        if tokens.is_empty() {
            return Err(ParseError::Empty);
        }
        let parse_int = |index: usize, token: &str| -> Result<i64, ParseError> {
            token.parse::<i64>().map_err(|_| ParseError::NotAnInteger {
                index,
                token: token.to_string(),
            })
        };
        let n = parse_int(0, tokens[0])?;
        if n < 1 {
            return Err(ParseError::BadCount(n));
        }
        let n = n as usize;
        if tokens.len() != n + 1 {
            return Err(ParseError::WrongTokenCount {
                expected: n,
                found: tokens.len() - 1,
            });
        }
        let mut bottom = Vec::with_capacity(n);
        for (i, token) in tokens[1..].iter().enumerate() {
            let v = parse_int(i + 1, token)?;
            if v < 1 || v as usize > n {
                return Err(ParseError::LabelOutOfRange {
                    label: v.max(0) as usize,
                    position: i + 1,
                    n,
                });
            }
            bottom.push(v as usize);
        }
        Permutation::from_bottom(&bottom)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The bottom-rail order as a plain slice of labels.
    pub fn bottom_order(&self) -> &[usize] {
        &self.bottom[1..]
    }

    /// Bottom position of label `k`.
    pub fn pos(&self, k: usize) -> usize {
        assert!(k >= 1 && k <= self.n, "label {k} out of range 1..={}", self.n);
        self.pos[k]
    }

    /// Label at bottom position `i`.
    pub fn label_at_bottom(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.n, "position {i} out of range 1..={}", self.n);
        self.bottom[i]
    }

    /// Segments cross iff the pair is inverted: `(i - j)` and
    /// `(pos[i] - pos[j])` have opposite signs.
    pub fn crosses(&self, i: usize, j: usize) -> bool {
        assert_ne!(i, j, "crosses needs two distinct labels");
        let (pi, pj) = (self.pos(i), self.pos(j));
        (i < j) != (pi < pj)
    }

    /// Materializes sorted neighbor sets (index 0 unused).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                if self.crosses(i, j) {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        adj
    }

    /// Which side of scanline `s` segment `k` lies on.
    pub fn segment_side(&self, s: Scanline, k: usize) -> Side {
        let p = self.pos(k);
        if k <= s.a && p <= s.b {
            Side::Left
        } else if k > s.a && p > s.b {
            Side::Right
        } else {
            Side::Crossing
        }
    }

    /// Labels strictly inside a piece: right of `lo` and left of `hi`.
    pub fn inside(&self, pc: Piece) -> Vec<usize> {
        (pc.lo.a + 1..=pc.hi.a)
            .filter(|&k| {
                let p = self.pos(k);
                p > pc.lo.b && p <= pc.hi.b
            })
            .collect()
    }

    /// Checks Definition-1 validity (no black vertex adjacent to a white one)
    /// and reports the color counts, with a violating edge on failure.
    pub fn verify_coloring(&self, c: &Coloring) -> ColoringCheck {
        assert_eq!(c.len(), self.n, "coloring length must equal n");
        let mut violation = None;
        'outer: for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                if self.crosses(i, j) {
                    let (ci, cj) = (c.color(i), c.color(j));
                    if (ci == Color::Black && cj == Color::White)
                        || (ci == Color::White && cj == Color::Black)
                    {
                        violation = Some((i, j));
                        break 'outer;
                    }
                }
            }
        }
        ColoringCheck {
            valid: violation.is_none(),
            black: c.count(Color::Black),
            white: c.count(Color::White),
            violation,
        }
    }

    /// Connected components of the subgraph induced by `active`, each sorted,
    /// ordered by minimum top position.
    pub fn components(&self, active: &[usize]) -> Vec<Vec<usize>> {
        let mut in_active = vec![false; self.n + 1];
        for &k in active {
            assert!(k >= 1 && k <= self.n, "label {k} out of range");
            in_active[k] = true;
        }
        let mut seen = vec![false; self.n + 1];
        let mut comps = Vec::new();
        for start in 1..=self.n {
            if !in_active[start] || seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for u in 1..=self.n {
                    if u != v && in_active[u] && !seen[u] && self.crosses(v, u) {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort_by_key(|c| c[0]);
        comps
    }
}

/// Side of a scanline a segment falls on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Crossing,
}

/// A scanline in gap coordinates: it passes between top positions `a` and
/// `a+1` and between bottom positions `b` and `b+1`. Both coordinates range
/// over `0..=n`, giving one representative per combinatorial class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scanline {
    pub a: usize,
    pub b: usize,
}

impl Scanline {
    pub fn new(a: usize, b: usize) -> Self {
        Scanline { a, b }
    }

    /// Componentwise order: `self` is weakly left of `other`.
    pub fn le(&self, other: &Scanline) -> bool {
        self.a <= other.a && self.b <= other.b
    }

    /// Two scanlines are compatible (non-crossing) iff they are comparable.
    /// Scanlines sharing a gap coordinate count as compatible; they can be
    /// drawn disjoint inside the shared gap.
    pub fn compatible(&self, other: &Scanline) -> bool {
        self.le(other) || other.le(self)
    }
}

impl fmt::Display for Scanline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// An ordered compatible pair of scanlines; the region between them induces
/// a subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Piece {
    lo: Scanline,
    hi: Scanline,
}

impl Piece {
    /// `None` unless `lo ⊑ hi` componentwise.
    pub fn new(lo: Scanline, hi: Scanline) -> Option<Self> {
        if lo.le(&hi) {
            Some(Piece { lo, hi })
        } else {
            None
        }
    }

    /// The piece spanning the whole diagram.
    pub fn extreme(n: usize) -> Self {
        Piece {
            lo: Scanline::new(0, 0),
            hi: Scanline::new(n, n),
        }
    }

    pub fn lo(&self) -> Scanline {
        self.lo
    }

    pub fn hi(&self) -> Scanline {
        self.hi
    }
}

/// Vertex colors of a partial coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Black,
    White,
    Uncolored,
}

/// A partial coloring, indexed by vertex label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Coloring {
            colors: vec![Color::Uncolored; n],
        }
    }

    /// Builds a coloring from explicit black and white label sets.
    pub fn from_sets(n: usize, black: &[usize], white: &[usize]) -> Self {
        let mut c = Coloring::uncolored(n);
        for &k in black {
            c.set(k, Color::Black);
        }
        for &k in white {
            c.set(k, Color::White);
        }
        c
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, k: usize) -> Color {
        self.colors[k - 1]
    }

    pub fn set(&mut self, k: usize, color: Color) {
        self.colors[k - 1] = color;
    }

    pub fn count(&self, color: Color) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }

    /// Labels carrying `color`, ascending.
    pub fn labels(&self, color: Color) -> Vec<usize> {
        (1..=self.len()).filter(|&k| self.color(k) == color).collect()
    }
}

/// Result of a coloring verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringCheck {
    pub valid: bool,
    pub black: usize,
    pub white: usize,
    /// A black–white edge witnessing invalidity, if any.
    pub violation: Option<(usize, usize)>,
}

/// A strictly increasing (componentwise) sequence of pairwise compatible
/// scanlines.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ScanlineChain {
    pub scanlines: Vec<Scanline>,
}

impl ScanlineChain {
    pub fn new(scanlines: Vec<Scanline>) -> Self {
        let chain = ScanlineChain { scanlines };
        debug_assert!(chain.is_valid());
        chain
    }

    /// Sorted ascending, pairwise compatible, strictly increasing.
    pub fn is_valid(&self) -> bool {
        self.scanlines.windows(2).all(|w| w[0].le(&w[1]) && w[0] != w[1])
    }
}
