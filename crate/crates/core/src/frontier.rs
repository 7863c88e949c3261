//! Feasibility frontiers: downward-closed sets of achievable
//! (black-count, white-count) pairs stored as a max-white-per-black array.
//!
//! `maxw[b]` is the largest `w` such that `(b, w)` is feasible. The array may
//! be shorter than `m + 1`; black counts at or beyond its length are
//! infeasible within the scope. Downward closure makes this representation
//! lossless: `(b, w)` is feasible iff `b < maxw.len()` and `w <= maxw[b]`.

/// A downward-closed feasible set over a scope of `m` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frontier {
    m: usize,
    maxw: Vec<usize>,
}

impl Frontier {
    /// The frontier of the empty vertex set: just `(0, 0)`.
    pub fn point() -> Self {
        Frontier { m: 0, maxw: vec![0] }
    }

    /// A frontier whose array covers every black count in its scope
    /// (`m = maxw.len() - 1`).
    pub fn from_maxw(maxw: Vec<usize>) -> Self {
        assert!(!maxw.is_empty());
        Frontier::with_scope(maxw.len() - 1, maxw)
    }

    /// A frontier with an explicit scope; the array may be shorter.
    pub fn with_scope(m: usize, maxw: Vec<usize>) -> Self {
        assert!(!maxw.is_empty() && maxw.len() <= m + 1);
        debug_assert!(maxw.windows(2).all(|w| w[0] >= w[1]), "maxw must be non-increasing");
        debug_assert!(maxw.iter().enumerate().all(|(b, &w)| b + w <= m));
        Frontier { m, maxw }
    }

    pub fn scope(&self) -> usize {
        self.m
    }

    pub fn maxw(&self) -> &[usize] {
        &self.maxw
    }

    /// Is `(b, w)` feasible?
    pub fn member(&self, b: usize, w: usize) -> bool {
        b < self.maxw.len() && w <= self.maxw[b]
    }

    /// Adds a monochromatic block of `db` black or `dw` white vertices and
    /// re-closes downward over the enlarged scope.
    pub fn shift(&self, db: usize, dw: usize) -> Frontier {
        assert!(db == 0 || dw == 0, "a block is a single color");
        let m = self.m + db + dw;
        let maxw = if dw > 0 {
            self.maxw.iter().map(|&w| w + dw).collect()
        } else {
            let mut v = Vec::with_capacity(self.maxw.len() + db);
            v.extend(std::iter::repeat_n(self.maxw[0], db));
            v.extend_from_slice(&self.maxw);
            v
        };
        Frontier { m, maxw }
    }

    /// Union over alternative colorings of the same vertex set.
    pub fn union(&self, other: &Frontier) -> Frontier {
        assert_eq!(self.m, other.m, "frontier union requires equal scopes");
        let (long, short) = if self.maxw.len() >= other.maxw.len() {
            (&self.maxw, &other.maxw)
        } else {
            (&other.maxw, &self.maxw)
        };
        let mut maxw = long.clone();
        for (b, &w) in short.iter().enumerate() {
            maxw[b] = maxw[b].max(w);
        }
        Frontier { m: self.m, maxw }
    }

    /// Max-plus convolution: composes the frontiers of two disjoint parts.
    pub fn convolve(&self, other: &Frontier) -> Frontier {
        let mut maxw = vec![0usize; self.maxw.len() + other.maxw.len() - 1];
        for (i, &wi) in self.maxw.iter().enumerate() {
            for (j, &wj) in other.maxw.iter().enumerate() {
                let v = wi + wj;
                if v > maxw[i + j] {
                    maxw[i + j] = v;
                }
            }
        }
        Frontier {
            m: self.m + other.m,
            maxw,
        }
    }

    /// TSV rendering: header `b<TAB>max_w`, one line per black count in the
    /// array. Infeasible black counts within scope are omitted.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("b\tmax_w\n");
        for (b, &w) in self.maxw.iter().enumerate() {
            out.push_str(&format!("{b}\t{w}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_examples() {
        let p = Frontier::point();
        assert_eq!(p.shift(2, 0), Frontier::with_scope(2, vec![0, 0, 0]));
        let f = Frontier::from_maxw(vec![1, 0]);
        assert_eq!(f.shift(0, 1), Frontier::with_scope(2, vec![2, 1]));
        assert_eq!(f.shift(0, 0), f);
    }

    #[test]
    fn union_examples() {
        let f = Frontier::from_maxw(vec![1, 0]);
        assert_eq!(f.union(&f), f);
        let all_black = Frontier::from_maxw(vec![0, 0, 0]);
        let all_white = Frontier::from_maxw(vec![2, 0, 0]);
        assert_eq!(all_black.union(&all_white).maxw(), &[2, 0, 0]);
        // the all-uncolored option is absorbed when dominated
        let zero = Frontier::from_maxw(vec![0, 0, 0]);
        assert_eq!(all_white.union(&zero), all_white);
    }

    // independent route: enumerate all (b1, b2) splits
    fn convolve_oracle(f: &[usize], g: &[usize]) -> Vec<usize> {
        let mut out = vec![0usize; f.len() + g.len() - 1];
        for b in 0..out.len() {
            let mut best = None;
            for b1 in 0..f.len() {
                if b >= b1 && b - b1 < g.len() {
                    let v = f[b1] + g[b - b1];
                    best = Some(best.map_or(v, |x: usize| x.max(v)));
                }
            }
            out[b] = best.unwrap();
        }
        out
    }

    #[test]
    fn convolve_examples() {
        let single = Frontier::from_maxw(vec![1, 0]);
        assert_eq!(single.convolve(&single).maxw(), &[2, 1, 0]);
        let f = Frontier::from_maxw(vec![2, 1, 0]);
        assert_eq!(f.convolve(&Frontier::point()), f);
        assert_eq!(
            f.convolve(&single).maxw(),
            convolve_oracle(&[2, 1, 0], &[1, 0]).as_slice()
        );
        assert_eq!(f.convolve(&single).maxw(), &[3, 2, 1, 0]);
    }

    #[test]
    fn membership() {
        let f = Frontier::with_scope(3, vec![2, 1]);
        assert!(f.member(0, 2));
        assert!(f.member(1, 1));
        assert!(!f.member(1, 2));
        assert!(!f.member(2, 0)); // beyond the array: infeasible in scope
    }

    #[test]
    fn tsv_shape() {
        let f = Frontier::from_maxw(vec![2, 1, 0]);
        assert_eq!(f.to_tsv(), "b\tmax_w\n0\t2\n1\t1\n2\t0\n");
    }
}
