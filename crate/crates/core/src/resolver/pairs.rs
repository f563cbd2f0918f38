use crate::graph::DistanceMatrix;

/// For every candidate landmark, the bit row of unordered vertex pairs it
/// separates. Pairs `(a, b)` with `a < b` are numbered in row-major order and
/// rows are padded to whole 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairMatrix {
    vertices: usize,
    pairs: usize,
    words: usize,
    rows: Vec<u64>,
}

impl PairMatrix {
    pub fn new(d: &DistanceMatrix) -> Self {
        let n = d.len();
        let pairs = n * n.saturating_sub(1) / 2;
        let words = pairs.div_ceil(64);
        let mut rows = vec![0u64; n * words];
        for v in 0..n {
            let dv = d.row(v);
            let row = &mut rows[v * words..(v + 1) * words];
            let mut p = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if dv[a] != dv[b] {
                        row[p / 64] |= 1 << (p % 64);
                    }
                    p += 1;
                }
            }
        }
        PairMatrix {
            vertices: n,
            pairs,
            words,
            rows,
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn pair_count(&self) -> usize {
        self.pairs
    }

    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn pair_index(&self, a: usize, b: usize) -> usize {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        let n = self.vertices;
        a * n - a * (a + 1) / 2 + (b - a - 1)
    }

    pub fn pair_at(&self, mut p: usize) -> (usize, usize) {
        let n = self.vertices;
        for a in 0..n {
            let len = n - a - 1;
            if p < len {
                return (a, a + 1 + p);
            }
            p -= len;
        }
        panic!("pair index out of range");
    }

    pub fn separates(&self, v: usize, a: usize, b: usize) -> bool {
        let p = self.pair_index(a, b);
        self.row(v)[p / 64] >> (p % 64) & 1 == 1
    }

    pub fn popcount(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// All-ones mask over the valid pairs.
    pub fn full_mask(&self) -> Vec<u64> {
        let mut m = vec![u64::MAX; self.words];
        let tail = self.pairs % 64;
        if tail != 0 {
            m[self.words - 1] = (1u64 << tail) - 1;
        }
        m
    }

    /// Pairs left unseparated by `landmarks`.
    pub fn uncovered(&self, landmarks: &[usize]) -> Vec<u64> {
        let mut m = self.full_mask();
        for &v in landmarks {
            for (w, r) in m.iter_mut().zip(self.row(v)) {
                *w &= !r;
            }
        }
        m
    }

    pub fn covers(&self, landmarks: &[usize]) -> bool {
        self.uncovered(landmarks).iter().all(|&w| w == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{grid, vg1};
    use crate::graph::{all_pairs, Coord};

    #[test]
    fn c4_each_vertex_separates_five_pairs() {
        // Distances from any vertex of C4 are (0, 1, 1, 2): only the two
        // neighbours tie.
        let g = grid(2, 2).unwrap();
        let pm = PairMatrix::new(&all_pairs(&g).unwrap());
        assert_eq!(pm.pair_count(), 6);
        for v in 0..4 {
            assert_eq!(pm.popcount(v), 5);
        }
    }

    #[test]
    fn p2_single_pair() {
        let g = grid(1, 2).unwrap();
        let pm = PairMatrix::new(&all_pairs(&g).unwrap());
        assert_eq!(pm.pair_count(), 1);
        assert_eq!(pm.popcount(0), 1);
        assert_eq!(pm.popcount(1), 1);
    }

    #[test]
    fn pair_index_roundtrip_and_self_separation() {
        let g = vg1(2, 3).unwrap();
        let pm = PairMatrix::new(&all_pairs(&g).unwrap());
        let n = g.vertex_count();
        let mut p = 0;
        for a in 0..n {
            for b in a + 1..n {
                assert_eq!(pm.pair_index(a, b), p);
                assert_eq!(pm.pair_at(p), (a, b));
                assert!(pm.separates(a, a, b) && pm.separates(b, a, b));
                p += 1;
            }
        }
        let all: Vec<usize> = (0..n).collect();
        assert!(pm.covers(&all));
    }

    #[test]
    fn mirror_preserves_popcounts() {
        let (m, n) = (2, 3);
        let g = vg1(m, n).unwrap();
        let pm = PairMatrix::new(&all_pairs(&g).unwrap());
        for v in 0..g.vertex_count() {
            let c = g.coord(v);
            let w = g.index_of(Coord::new(2 * n as i64 - c.x, c.y)).unwrap();
            assert_eq!(pm.popcount(v), pm.popcount(w));
        }
    }
}
