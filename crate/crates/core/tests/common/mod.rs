#![allow(dead_code)]

use itertools::Itertools;
use rand::Rng;
use villarceau::{Coord, DiagGraph};

/// Floyd–Warshall over the adjacency lists; independent of the BFS code.
pub fn floyd_warshall(g: &DiagGraph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Counts simple paths of exactly `len` edges from `u` to `v` by DFS.
pub fn count_paths_of_length(g: &DiagGraph, u: usize, v: usize, len: usize) -> u64 {
    fn go(g: &DiagGraph, cur: usize, v: usize, left: usize, seen: &mut Vec<bool>) -> u64 {
        if left == 0 {
            return u64::from(cur == v);
        }
        let mut total = 0;
        for &w in g.neighbors(cur) {
            if !seen[w] {
                seen[w] = true;
                total += go(g, w, v, left - 1, seen);
                seen[w] = false;
            }
        }
        total
    }
    let mut seen = vec![false; g.vertex_count()];
    seen[u] = true;
    go(g, u, v, len, &mut seen)
}

pub fn resolves(d: &[Vec<u32>], set: &[usize]) -> bool {
    let codes: Vec<Vec<u32>> = (0..d.len()).map(|v| set.iter().map(|&l| d[v][l]).collect()).collect();
    codes.iter().all_unique()
}

/// Smallest resolving set size by trying every subset in order of size,
/// together with the lexicographically least such subset.
pub fn naive_dimension(d: &[Vec<u32>]) -> (usize, Vec<usize>) {
    let n = d.len();
    if n <= 1 {
        return (0, Vec::new());
    }
    for k in 1..=n {
        if let Some(set) = (0..n).combinations(k).find(|s| resolves(d, s)) {
            return (k, set);
        }
    }
    unreachable!("the full vertex set resolves")
}

/// Random connected graph: random tree plus extra edges. Vertices are
/// labelled (i, 0) so ids equal i.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra: usize) -> DiagGraph {
    let coords: Vec<Coord> = (0..n as i64).map(|i| Coord::new(i, 0)).collect();
    let mut edges = Vec::new();
    for v in 1..n {
        let p = rng.gen_range(0..v);
        edges.push((coords[p], coords[v]));
    }
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        edges.push((coords[a], coords[b]));
    }
    DiagGraph::from_coords(coords.clone(), edges).unwrap()
}
