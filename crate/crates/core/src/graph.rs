//! Immutable diagonal-grid graphs and unweighted shortest-path machinery.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact fraction used for average distances.
pub type Rational = num_rational::BigRational;

/// Hop count between two vertices.
pub type Dist = u16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Coord {
    pub x: i64,
    pub y: i64,
}

impl Coord {
    pub const fn new(x: i64, y: i64) -> Self {
        Coord { x, y }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i64, i64)> for Coord {
    fn from((x, y): (i64, i64)) -> Self {
        Coord { x, y }
    }
}

/// Parses `x,y`, optionally wrapped in parentheses.
impl FromStr for Coord {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = t
            .split_once(',')
            .ok_or_else(|| format!("expected \"x,y\", got {s:?}"))?;
        let x = a.trim().parse().map_err(|_| format!("bad x in {s:?}"))?;
        let y = b.trim().parse().map_err(|_| format!("bad y in {s:?}"))?;
        Ok(Coord { x, y })
    }
}

/// Undirected simple graph whose vertices are named by coordinates.
///
/// Vertex ids follow the lexicographic order of the coordinates, so two
/// graphs built from the same vertex and edge sets are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagGraph {
    coords: Vec<Coord>,
    adjacency: Vec<Vec<usize>>,
    coord_index: HashMap<Coord, usize>,
}

impl DiagGraph {
    /// Builds a graph from a vertex list and coordinate edges. Duplicate
    /// vertices and edges are merged; self-loops are dropped.
    pub fn from_coords<I, E>(vertices: I, edges: E) -> Result<Self>
    where
        I: IntoIterator<Item = Coord>,
        E: IntoIterator<Item = (Coord, Coord)>,
    {
        let set: BTreeSet<Coord> = vertices.into_iter().collect();
        let coords: Vec<Coord> = set.into_iter().collect();
        let coord_index: HashMap<Coord, usize> =
            coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); coords.len()];
        for (a, b) in edges {
            let &u = coord_index.get(&a).ok_or(Error::NotAVertex(a))?;
            let &v = coord_index.get(&b).ok_or(Error::NotAVertex(b))?;
            if u != v {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        Ok(DiagGraph {
            coords,
            adjacency: adj.into_iter().map(|s| s.into_iter().collect()).collect(),
            coord_index,
        })
    }

    /// Builds a graph joining every pair of vertices accepted by `adjacent`.
    pub fn from_rule<I, F>(vertices: I, adjacent: F) -> Self
    where
        I: IntoIterator<Item = Coord>,
        F: Fn(Coord, Coord) -> bool,
    {
        let set: BTreeSet<Coord> = vertices.into_iter().collect();
        let coords: Vec<Coord> = set.into_iter().collect();
        let coord_index: HashMap<Coord, usize> =
            coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        // Neighbours differ by at most one in each coordinate for every rule
        // used here, so only the 3x3 window needs probing.
        let adjacency = coords
            .iter()
            .map(|&c| {
                let mut nbrs: Vec<usize> = (-1..=1)
                    .flat_map(|dx| (-1..=1).map(move |dy| Coord::new(c.x + dx, c.y + dy)))
                    .filter(|&o| o != c && adjacent(c, o))
                    .filter_map(|o| coord_index.get(&o).copied())
                    .collect();
                nbrs.sort_unstable();
                nbrs
            })
            .collect();
        DiagGraph {
            coords,
            adjacency,
            coord_index,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.coords.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    pub fn coord(&self, v: usize) -> Coord {
        self.coords[v]
    }

    pub fn index_of(&self, c: Coord) -> Option<usize> {
        self.coord_index.get(&c).copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges as `(u, v)` id pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// True when the graph is a simple path (including a single vertex).
    pub fn is_path(&self) -> bool {
        let n = self.vertex_count();
        n > 0
            && self.edge_count() + 1 == n
            && self.adjacency.iter().all(|a| a.len() <= 2)
            && self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || bfs_raw(self, 0).iter().all(|&d| d != UNSEEN)
    }
}

const UNSEEN: Dist = Dist::MAX;

fn bfs_raw(g: &DiagGraph, src: usize) -> Vec<Dist> {
    let mut dist = vec![UNSEEN; g.vertex_count()];
    let mut queue = VecDeque::with_capacity(g.vertex_count());
    dist[src] = 0;
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        let du = dist[u] + 1;
        for &v in g.neighbors(u) {
            if dist[v] == UNSEEN {
                dist[v] = du;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Hop counts from `src` to every vertex.
pub fn bfs_distances(g: &DiagGraph, src: usize) -> Result<Vec<Dist>> {
    assert!(src < g.vertex_count(), "source {src} out of range");
    let dist = bfs_raw(g, src);
    match dist.iter().position(|&d| d == UNSEEN) {
        Some(v) => Err(Error::Unreachable(g.coord(v))),
        None => Ok(dist),
    }
}

/// Dense symmetric table of hop counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Dist>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Dist {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Dist] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn max(&self) -> Dist {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Sum of `d(u, v)` over unordered pairs `u < v`.
    pub fn pair_sum(&self) -> u64 {
        (0..self.n)
            .map(|u| self.row(u)[u + 1..].iter().map(|&x| u64::from(x)).sum::<u64>())
            .sum()
    }
}

/// All-pairs shortest paths by one BFS per source. Sources run in parallel;
/// rows are written by source index, so the result does not depend on the
/// thread count.
pub fn all_pairs(g: &DiagGraph) -> Result<DistanceMatrix> {
    let n = g.vertex_count();
    let rows: Vec<Vec<Dist>> = (0..n)
        .into_par_iter()
        .map(|s| bfs_distances(g, s))
        .collect::<Result<_>>()?;
    Ok(DistanceMatrix {
        n,
        d: rows.concat(),
    })
}

/// Vertices at hop distance exactly `r` from `v`, ascending by id.
pub fn sphere(d: &DistanceMatrix, v: usize, r: usize) -> Vec<usize> {
    d.row(v)
        .iter()
        .enumerate()
        .filter(|&(_, &x)| usize::from(x) == r)
        .map(|(w, _)| w)
        .collect()
}

pub fn diameter(d: &DistanceMatrix) -> usize {
    usize::from(d.max())
}

pub fn degree_multiset(g: &DiagGraph) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for v in 0..g.vertex_count() {
        *out.entry(g.degree(v)).or_insert(0) += 1;
    }
    out
}

/// Mean distance over unordered pairs of distinct vertices.
pub fn average_distance(d: &DistanceMatrix) -> Result<Rational> {
    let n = d.len() as u64;
    if n < 2 {
        return Err(Error::UndefinedAverage);
    }
    Ok(Rational::new(
        BigInt::from(d.pair_sum()),
        BigInt::from(n * (n - 1) / 2),
    ))
}
