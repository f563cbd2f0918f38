use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::pairs::PairMatrix;
use super::LandmarkSet;
use crate::graph::{DiagGraph, DistanceMatrix};

/// Greedy set cover over separated pairs: repeatedly take the vertex that
/// separates the most still-unseparated pairs, least id on ties.
pub fn greedy_upper_bound(pm: &PairMatrix) -> LandmarkSet {
    let n = pm.vertices();
    let mut uncovered = pm.full_mask();
    let mut chosen = Vec::new();
    let mut used = vec![false; n];
    while uncovered.iter().any(|&w| w != 0) {
        let (best, gain) = (0..n)
            .filter(|&v| !used[v])
            .map(|v| (v, gain(pm.row(v), &uncovered)))
            .fold((usize::MAX, 0), |acc, (v, g)| if g > acc.1 { (v, g) } else { acc });
        debug_assert!(gain > 0, "full vertex set always separates every pair");
        used[best] = true;
        chosen.push(best);
        for (w, r) in uncovered.iter_mut().zip(pm.row(best)) {
            *w &= !r;
        }
    }
    chosen.sort_unstable();
    LandmarkSet::from_ids_unchecked(chosen)
}

fn gain(row: &[u64], uncovered: &[u64]) -> u32 {
    row.iter().zip(uncovered).map(|(r, u)| (r & u).count_ones()).sum()
}

/// Partition of the vertices into twin classes: `u` and `v` are twins when
/// `d(u, w) = d(v, w)` for every `w` other than `u` and `v`.
pub fn twin_classes(d: &DistanceMatrix) -> Vec<Vec<usize>> {
    let n = d.len();
    let twins = |u: usize, v: usize| {
        let (ru, rv) = (d.row(u), d.row(v));
        (0..n).all(|w| w == u || w == v || ru[w] == rv[w])
    };
    let mut class = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        if class[u] != usize::MAX {
            continue;
        }
        class[u] = out.len();
        let mut members = vec![u];
        for v in u + 1..n {
            if class[v] == usize::MAX && twins(u, v) {
                class[v] = out.len();
                members.push(v);
            }
        }
        out.push(members);
    }
    out
}

/// Every resolving set holds all but one vertex of each twin class; a graph
/// that is not a path needs at least two landmarks.
pub fn twin_lower_bound(g: &DiagGraph, d: &DistanceMatrix) -> usize {
    if g.vertex_count() < 2 {
        return 0;
    }
    let twins: usize = twin_classes(d).iter().map(|c| c.len() - 1).sum();
    let floor = if g.is_path() { 1 } else { 2 };
    twins.max(floor)
}

/// Number of distinct shortest `u`–`v` paths.
pub fn count_shortest_paths(g: &DiagGraph, d: &DistanceMatrix, u: usize, v: usize) -> BigUint {
    let target = d.get(u, v);
    let du = d.row(u);
    let dv = d.row(v);
    // Only vertices on some shortest u-v path matter; process them by layer.
    let mut layer: Vec<usize> = (0..g.vertex_count())
        .filter(|&w| du[w] + dv[w] == target)
        .collect();
    layer.sort_by_key(|&w| du[w]);
    let mut count = vec![BigUint::zero(); g.vertex_count()];
    count[u] = BigUint::one();
    for &w in layer.iter().skip(1) {
        let mut c = BigUint::zero();
        for &p in g.neighbors(w) {
            if du[p] + 1 == du[w] && du[p] + dv[p] == target {
                c += &count[p];
            }
        }
        count[w] = c;
    }
    std::mem::take(&mut count[v])
}

/// Pairs that satisfy the necessary conditions for a two-element basis:
/// both ends of degree at most 3, a unique shortest path between them, and
/// every internal vertex of that path of degree at most 5.
pub fn md2_candidates(g: &DiagGraph, d: &DistanceMatrix) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let low: Vec<usize> = (0..n).filter(|&v| g.degree(v) <= 3).collect();
    let mut out = Vec::new();
    for (i, &s) in low.iter().enumerate() {
        for &t in &low[i + 1..] {
            if count_shortest_paths(g, d, s, t) != BigUint::one() {
                continue;
            }
            if unique_path(g, d, s, t)
                .iter()
                .all(|&w| w == s || w == t || g.degree(w) <= 5)
            {
                out.push((s, t));
            }
        }
    }
    out
}

/// Walks back from `t` along the shortest-path DAG; valid when exactly one
/// shortest path exists.
fn unique_path(g: &DiagGraph, d: &DistanceMatrix, s: usize, t: usize) -> Vec<usize> {
    let ds = d.row(s);
    let mut path = vec![t];
    let mut cur = t;
    while cur != s {
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&p| ds[p] + 1 == ds[cur])
            .expect("connected graph has a predecessor on every shortest path");
        path.push(cur);
    }
    path.reverse();
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{grid, vg1, vg2};
    use crate::graph::{all_pairs, Coord};

    #[test]
    fn twin_bounds() {
        let g = grid(2, 2).unwrap();
        let d = all_pairs(&g).unwrap();
        assert_eq!(twin_lower_bound(&g, &d), 2);

        let g = vg2(1, 2).unwrap();
        let d = all_pairs(&g).unwrap();
        assert_eq!(twin_lower_bound(&g, &d), 3);
        assert_eq!(twin_classes(&d).iter().map(Vec::len).max(), Some(4));

        let g = grid(1, 5).unwrap();
        let d = all_pairs(&g).unwrap();
        assert_eq!(twin_lower_bound(&g, &d), 1);
    }

    #[test]
    fn greedy_bounds() {
        let g = grid(2, 2).unwrap();
        let pm = PairMatrix::new(&all_pairs(&g).unwrap());
        assert_eq!(greedy_upper_bound(&pm).len(), 2);

        let g = grid(1, 5).unwrap();
        let pm = PairMatrix::new(&all_pairs(&g).unwrap());
        assert_eq!(greedy_upper_bound(&pm).ids(), &[0]);

        let g = vg1(2, 3).unwrap();
        let pm = PairMatrix::new(&all_pairs(&g).unwrap());
        let l = greedy_upper_bound(&pm);
        assert!(l.len() <= 4 && l.len() >= 3);
        assert!(pm.covers(l.ids()));
    }

    #[test]
    fn shortest_path_counts() {
        let g = grid(2, 2).unwrap();
        let d = all_pairs(&g).unwrap();
        assert_eq!(count_shortest_paths(&g, &d, 0, 3), BigUint::from(2u32));
        for (u, v) in g.edges() {
            assert_eq!(count_shortest_paths(&g, &d, u, v), BigUint::one());
        }
        assert_eq!(count_shortest_paths(&g, &d, 1, 1), BigUint::one());

        // (0,1) -> (4,1) in VG1(1,2): two choices per diamond.
        let g = vg1(1, 2).unwrap();
        let d = all_pairs(&g).unwrap();
        let a = g.index_of(Coord::new(0, 1)).unwrap();
        let b = g.index_of(Coord::new(4, 1)).unwrap();
        assert_eq!(count_shortest_paths(&g, &d, a, b), BigUint::from(4u32));
    }

    #[test]
    fn md2_on_path_and_vg1() {
        let g = grid(1, 3).unwrap();
        let d = all_pairs(&g).unwrap();
        assert_eq!(md2_candidates(&g, &d), vec![(0, 1), (0, 2), (1, 2)]);

        let g = vg1(2, 3).unwrap();
        let d = all_pairs(&g).unwrap();
        let cands = md2_candidates(&g, &d);
        assert!(!cands.is_empty());
        for &(s, t) in &cands {
            assert_eq!((g.degree(s), g.degree(t)), (2, 2));
        }
    }
}
