//! Villarceau grids of both types and Cartesian grids.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Coord, DiagGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Vg1,
    Vg2,
    Grid,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Vg1, Family::Vg2, Family::Grid];

    pub fn name(self) -> &'static str {
        match self {
            Family::Vg1 => "vg1",
            Family::Vg2 => "vg2",
            Family::Grid => "grid",
        }
    }

    pub fn is_villarceau(self) -> bool {
        matches!(self, Family::Vg1 | Family::Vg2)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "vg1" => Ok(Family::Vg1),
            "vg2" => Ok(Family::Vg2),
            "grid" => Ok(Family::Grid),
            other => Err(format!("unknown family {other:?} (expected vg1, vg2 or grid)")),
        }
    }
}

/// A validated family/parameter combination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GridSpec {
    pub family: Family,
    pub m: usize,
    pub n: usize,
}

impl GridSpec {
    pub fn new(family: Family, m: usize, n: usize) -> Result<Self> {
        let fail = |constraint| {
            Err(Error::InvalidSpec {
                family: family.name(),
                constraint,
                m,
                n,
            })
        };
        match family {
            Family::Vg1 if m < 1 => fail("m ≥ 1"),
            Family::Vg1 if m > n => fail("m ≤ n"),
            Family::Vg2 if m < 1 => fail("m ≥ 1"),
            Family::Vg2 if m >= n => fail("m < n"),
            Family::Grid if m < 1 || n < 1 => fail("m ≥ 1 and n ≥ 1"),
            _ => Ok(GridSpec { family, m, n }),
        }
    }

    pub fn vg1(m: usize, n: usize) -> Result<Self> {
        Self::new(Family::Vg1, m, n)
    }

    pub fn vg2(m: usize, n: usize) -> Result<Self> {
        Self::new(Family::Vg2, m, n)
    }

    pub fn grid(m: usize, n: usize) -> Result<Self> {
        Self::new(Family::Grid, m, n)
    }

    pub fn build(&self) -> DiagGraph {
        let vertices = vertex_coords(self);
        match self.family {
            Family::Grid => DiagGraph::from_rule(vertices, |a, b| {
                (a.x - b.x).abs() + (a.y - b.y).abs() == 1
            }),
            _ => DiagGraph::from_rule(vertices, |a, b| {
                (a.x - b.x).abs() == 1 && (a.y - b.y).abs() == 1
            }),
        }
    }

    /// Villarceau grid inside the range where the dimension-three theorems apply.
    pub fn in_theorem_range(&self) -> bool {
        match self.family {
            Family::Vg1 => 2 <= self.n && self.n <= 2 * self.m + 1,
            Family::Vg2 => self.n <= 2 * self.m + 1,
            Family::Grid => false,
        }
    }

    pub fn in_conjecture_range(&self) -> bool {
        self.family.is_villarceau() && self.n > 2 * self.m + 1
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.family, self.m, self.n)
    }
}

fn vertex_coords(spec: &GridSpec) -> Vec<Coord> {
    let (m, n) = (spec.m as i64, spec.n as i64);
    let mut out = Vec::new();
    match spec.family {
        Family::Vg1 => {
            for i in 0..=n {
                for j in 0..m {
                    out.push(Coord::new(2 * i, 2 * j + 1));
                }
            }
            for i in 0..n {
                for j in 0..=m {
                    out.push(Coord::new(2 * i + 1, 2 * j));
                }
            }
        }
        Family::Vg2 => {
            for i in 0..=n - 2 {
                for j in 0..m {
                    out.push(Coord::new(2 * i + 1, 2 * j + 1));
                }
            }
            for i in 0..n {
                for j in 0..=m {
                    out.push(Coord::new(2 * i, 2 * j));
                }
            }
        }
        Family::Grid => {
            // m rows, n columns; x runs along n.
            for x in 0..n {
                for y in 0..m {
                    out.push(Coord::new(x, y));
                }
            }
        }
    }
    out
}

pub fn vg1(m: usize, n: usize) -> Result<DiagGraph> {
    Ok(GridSpec::vg1(m, n)?.build())
}

pub fn vg2(m: usize, n: usize) -> Result<DiagGraph> {
    Ok(GridSpec::vg2(m, n)?.build())
}

pub fn grid(m: usize, n: usize) -> Result<DiagGraph> {
    Ok(GridSpec::grid(m, n)?.build())
}

/// Whether `c` is one of the vertices generated for `spec`.
pub fn is_vertex(spec: &GridSpec, c: Coord) -> bool {
    let (m, n) = (spec.m as i64, spec.n as i64);
    let (x, y) = (c.x, c.y);
    if x < 0 || y < 0 {
        return false;
    }
    let even = |v: i64| v % 2 == 0;
    match spec.family {
        // (2i, 2j+1), i ≤ n, j ≤ m-1  |  (2i+1, 2j), i ≤ n-1, j ≤ m
        Family::Vg1 => {
            (even(x) && !even(y) && x <= 2 * n && y < 2 * m)
                || (!even(x) && even(y) && x < 2 * n && y <= 2 * m)
        }
        // (2i+1, 2j+1), i ≤ n-2, j ≤ m-1  |  (2i, 2j), i ≤ n-1, j ≤ m
        Family::Vg2 => {
            (!even(x) && !even(y) && x <= 2 * n - 3 && y < 2 * m)
                || (even(x) && even(y) && x <= 2 * n - 2 && y <= 2 * m)
        }
        Family::Grid => x < n && y < m,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineKind {
    Boundary,
    Acute,
    Obtuse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LineClass {
    pub kind: LineKind,
    pub index: i64,
}

/// Diagonal line membership of one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexLines {
    /// Acute line, keyed by the constant `x - y`.
    pub acute: LineClass,
    /// Obtuse line, keyed by the constant `x + y`.
    pub obtuse: LineClass,
    pub is_boundary: bool,
}

/// Acute/obtuse line of every vertex, indexed by vertex id, plus whether the
/// vertex sits on the outer boundary (extremal x or y).
pub fn classify_lines(g: &DiagGraph, spec: &GridSpec) -> Result<Vec<VertexLines>> {
    if !spec.family.is_villarceau() {
        return Err(Error::NotVillarceau);
    }
    let xs = g.coords().iter().map(|c| c.x);
    let ys = g.coords().iter().map(|c| c.y);
    let (min_x, max_x) = (xs.clone().min().unwrap_or(0), xs.max().unwrap_or(0));
    let (min_y, max_y) = (ys.clone().min().unwrap_or(0), ys.max().unwrap_or(0));
    Ok(g.coords()
        .iter()
        .map(|c| VertexLines {
            acute: LineClass {
                kind: LineKind::Acute,
                index: c.x - c.y,
            },
            obtuse: LineClass {
                kind: LineKind::Obtuse,
                index: c.x + c.y,
            },
            is_boundary: c.x == min_x || c.x == max_x || c.y == min_y || c.y == max_y,
        })
        .collect())
}

/// Number of distinct lines of each diagonal kind.
pub fn line_counts(lines: &[VertexLines]) -> BTreeMap<LineKind, usize> {
    let mut seen: BTreeMap<LineKind, std::collections::BTreeSet<i64>> = BTreeMap::new();
    for l in lines {
        seen.entry(LineKind::Acute).or_default().insert(l.acute.index);
        seen.entry(LineKind::Obtuse).or_default().insert(l.obtuse.index);
    }
    seen.into_iter().map(|(k, s)| (k, s.len())).collect()
}
