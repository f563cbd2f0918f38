//! Resolving sets and exact metric dimension.

mod bounds;
mod pairs;
mod search;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Coord, DiagGraph, Dist, DistanceMatrix};

pub use bounds::{count_shortest_paths, greedy_upper_bound, md2_candidates, twin_classes, twin_lower_bound};
pub use pairs::PairMatrix;
pub use search::{exact_dimension, SolveOptions, SolveResult, SolveStatus};

/// Ordered list of distinct landmark vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LandmarkSet(Vec<usize>);

impl LandmarkSet {
    pub fn new(ids: Vec<usize>, g: &DiagGraph) -> Result<Self> {
        let mut seen = vec![false; g.vertex_count()];
        for &v in &ids {
            if v >= g.vertex_count() {
                return Err(Error::LandmarkOutOfRange(v));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::DuplicateLandmark(g.coord(v)));
            }
        }
        Ok(LandmarkSet(ids))
    }

    pub fn from_coords(coords: &[Coord], g: &DiagGraph) -> Result<Self> {
        let ids = coords
            .iter()
            .map(|&c| g.index_of(c).ok_or(Error::NotAVertex(c)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ids, g)
    }

    pub(crate) fn from_ids_unchecked(ids: Vec<usize>) -> Self {
        LandmarkSet(ids)
    }

    pub fn ids(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self, g: &DiagGraph) -> Vec<Coord> {
        self.0.iter().map(|&v| g.coord(v)).collect()
    }
}

/// Distance vectors of every vertex with respect to an ordered landmark list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeTable {
    width: usize,
    entries: Vec<Dist>,
}

impl CodeTable {
    pub fn code(&self, v: usize) -> &[Dist] {
        &self.entries[v * self.width..(v + 1) * self.width]
    }

    pub fn rows(&self) -> usize {
        self.entries.len().checked_div(self.width).unwrap_or(0)
    }
}

/// Code vectors for the landmark ids in order. Duplicated ids are allowed
/// here; they simply repeat a column.
pub fn code_table(d: &DistanceMatrix, landmarks: &[usize]) -> Result<CodeTable> {
    if landmarks.is_empty() {
        return Err(Error::EmptyLandmarks);
    }
    let mut entries = Vec::with_capacity(d.len() * landmarks.len());
    for v in 0..d.len() {
        entries.extend(landmarks.iter().map(|&l| d.get(v, l)));
    }
    Ok(CodeTable {
        width: landmarks.len(),
        entries,
    })
}

/// Outcome of a resolving-set check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    Resolving,
    /// Lexicographically first pair of distinct vertices sharing a code.
    Collision(usize, usize),
}

impl Resolution {
    pub fn is_resolving(self) -> bool {
        matches!(self, Resolution::Resolving)
    }
}

pub fn is_resolving(d: &DistanceMatrix, landmarks: &[usize]) -> Result<Resolution> {
    let table = code_table(d, landmarks)?;
    let mut first: HashMap<&[Dist], usize> = HashMap::with_capacity(d.len());
    let mut best: Option<(usize, usize)> = None;
    for v in 0..d.len() {
        match first.get(table.code(v)) {
            // The first collision met for a given first member is its
            // smallest partner, and first members only shrink the result.
            Some(&u) => {
                if best.is_none_or(|b| (u, v) < b) {
                    best = Some((u, v));
                }
            }
            None => {
                first.insert(table.code(v), v);
            }
        }
    }
    Ok(match best {
        Some((u, v)) => Resolution::Collision(u, v),
        None => Resolution::Resolving,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::vg1;
    use crate::graph::all_pairs;

    fn ids(g: &DiagGraph, cs: &[(i64, i64)]) -> Vec<usize> {
        cs.iter().map(|&c| g.index_of(c.into()).unwrap()).collect()
    }

    #[test]
    fn vg1_1_2_codes() {
        let g = vg1(1, 2).unwrap();
        let d = all_pairs(&g).unwrap();
        let l = ids(&g, &[(1, 0), (3, 0), (3, 2)]);
        let t = code_table(&d, &l).unwrap();
        assert_eq!(t.code(g.index_of(Coord::new(2, 1)).unwrap()), &[1, 1, 1]);
        assert_eq!(t.rows(), 7);
        assert_eq!(is_resolving(&d, &l).unwrap(), Resolution::Resolving);

        let l = ids(&g, &[(1, 0), (3, 0)]);
        let t = code_table(&d, &l).unwrap();
        let a = g.index_of(Coord::new(1, 2)).unwrap();
        let b = g.index_of(Coord::new(3, 2)).unwrap();
        assert_eq!(t.code(a), &[2, 2]);
        assert_eq!(t.code(b), &[2, 2]);
        assert_eq!(is_resolving(&d, &l).unwrap(), Resolution::Collision(a, b));
    }

    #[test]
    fn full_vertex_set_resolves() {
        let g = vg1(2, 3).unwrap();
        let d = all_pairs(&g).unwrap();
        let all: Vec<usize> = (0..g.vertex_count()).collect();
        assert!(is_resolving(&d, &all).unwrap().is_resolving());
    }

    #[test]
    fn empty_landmarks_rejected() {
        let g = vg1(1, 1).unwrap();
        let d = all_pairs(&g).unwrap();
        assert_eq!(is_resolving(&d, &[]), Err(Error::EmptyLandmarks));
    }

    #[test]
    fn landmark_set_validation() {
        let g = vg1(1, 2).unwrap();
        assert!(LandmarkSet::new(vec![0, 1], &g).is_ok());
        assert!(matches!(LandmarkSet::new(vec![0, 0], &g), Err(Error::DuplicateLandmark(_))));
        assert!(LandmarkSet::new(vec![7], &g).is_err());
        assert_eq!(
            LandmarkSet::from_coords(&[Coord::new(0, 0)], &g),
            Err(Error::NotAVertex(Coord::new(0, 0)))
        );
    }
}
