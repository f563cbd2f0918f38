//! Closed-form structural predictions for grids and Villarceau grids.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::generators::{Family, GridSpec};
use crate::graph::Rational;

/// What the comparison table predicts for a single instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Prediction {
    pub vertices: usize,
    pub edges: usize,
    pub diameter: usize,
    /// Degrees the table lists for the family.
    pub degree_set: Vec<usize>,
    /// Degree counts derived from the vertex definitions (the table itself
    /// only lists which degrees occur).
    pub degree_multiset: BTreeMap<usize, usize>,
    /// `None` for a single-vertex grid, where the polynomial divides by zero.
    pub avg_distance: Option<Rational>,
    pub dim_claim: DimClaim,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimClaim {
    Exactly(usize),
    MoreThan(usize),
}

impl DimClaim {
    pub fn holds_for(self, lower: usize, upper: usize, exact: bool) -> Option<bool> {
        match self {
            DimClaim::Exactly(k) if exact => Some(lower == k),
            DimClaim::Exactly(k) => (k < lower || k > upper).then_some(false),
            DimClaim::MoreThan(k) if lower > k => Some(true),
            DimClaim::MoreThan(k) if upper <= k => Some(false),
            DimClaim::MoreThan(_) => None,
        }
    }
}

impl std::fmt::Display for DimClaim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DimClaim::Exactly(k) => write!(f, "{k}"),
            DimClaim::MoreThan(k) => write!(f, ">{k}"),
        }
    }
}

fn ratio(num: BigInt, den: BigInt) -> Result<Rational> {
    if num_traits::Zero::is_zero(&den) {
        return Err(Error::UndefinedAverage);
    }
    Ok(Rational::new(num, den))
}

/// Average-distance polynomial of the table, evaluated exactly.
pub fn avg_distance_formula(spec: &GridSpec) -> Result<Rational> {
    let m = BigInt::from(spec.m);
    let n = BigInt::from(spec.n);
    let p = |e: u32, v: &BigInt| v.pow(e);
    match spec.family {
        Family::Grid => {
            let num = p(3, &m) * p(2, &n) - &m * p(2, &n) + p(2, &m) * p(3, &n) - p(2, &m) * &n;
            let den = 3 * (p(2, &m) * p(2, &n) - &m * &n);
            ratio(num, den)
        }
        Family::Vg1 => {
            let num = 10 * p(3, &n) - 10 * &n
                + 40 * p(2, &m) * p(3, &n)
                + 40 * &m * p(3, &n)
                + 60 * p(2, &m) * p(2, &n)
                + 30 * &m * p(2, &n)
                + 30 * p(2, &m) * &n
                + 20 * p(4, &m) * &n
                + 40 * p(3, &m) * &n
                - 20 * &m * &n
                - 4 * p(5, &m)
                + 10 * p(3, &m);
            let den = 15
                * (4 * p(2, &m) * p(2, &n) + 4 * p(2, &m) * &n + 4 * &m * p(2, &n) + p(2, &m) + p(2, &n)
                    - &m
                    - &n);
            ratio(num, den)
        }
        Family::Vg2 => {
            let num = 2
                * (15 * p(2, &m) * &n + 20 * p(3, &m) * &n + 10 * p(4, &m) * &n
                    - 2 * p(5, &m)
                    - 10 * p(4, &m)
                    - 5 * p(3, &m)
                    - 20 * p(3, &m) * p(2, &n)
                    + 5 * p(3, &n)
                    - 20 * p(2, &m) * p(2, &n)
                    + 10 * p(2, &m)
                    - 15 * &m * p(2, &n)
                    + 7 * &m
                    + 20 * p(2, &n) * p(3, &m)
                    + 20 * p(3, &n) * p(2, &m)
                    - 10 * p(2, &n) * p(2, &m)
                    + 20 * &m * p(3, &n)
                    - 10 * &m * &n
                    - 5 * &n);
            let den = 15
                * (4 * p(2, &m) * p(2, &n) - 4 * p(2, &m) * &n + 4 * &m * p(2, &n) - 4 * &m * &n
                    + p(2, &m)
                    + &m
                    + p(2, &n)
                    - &n);
            ratio(num, den)
        }
    }
}

fn nonzero(entries: impl IntoIterator<Item = (usize, usize)>) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for (deg, count) in entries {
        if count > 0 {
            *out.entry(deg).or_insert(0) += count;
        }
    }
    out
}

pub fn table1_predict(spec: &GridSpec) -> Table1Prediction {
    let (m, n) = (spec.m, spec.n);
    match spec.family {
        Family::Grid => Table1Prediction {
            vertices: m * n,
            edges: 2 * m * n - m - n,
            diameter: m + n - 2,
            degree_set: vec![2, 3, 4],
            degree_multiset: if m == 1 || n == 1 {
                let len = m * n;
                if len == 1 {
                    nonzero([(0, 1)])
                } else {
                    nonzero([(1, 2), (2, len - 2)])
                }
            } else {
                nonzero([(2, 4), (3, 2 * (m - 2) + 2 * (n - 2)), (4, (m - 2) * (n - 2))])
            },
            avg_distance: avg_distance_formula(spec).ok(),
            dim_claim: DimClaim::Exactly(2),
        },
        Family::Vg1 => Table1Prediction {
            vertices: 2 * m * n + m + n,
            edges: 4 * m * n,
            diameter: 2 * n,
            degree_set: vec![2, 4],
            degree_multiset: nonzero([(2, 2 * (m + n)), (4, 2 * m * n - m - n)]),
            avg_distance: avg_distance_formula(spec).ok(),
            dim_claim: vg_dim_claim(spec),
        },
        Family::Vg2 => Table1Prediction {
            vertices: 2 * m * n - m + n,
            edges: 4 * m * (n - 1),
            diameter: 2 * n,
            degree_set: vec![1, 2, 4],
            degree_multiset: nonzero([
                (1, 4),
                (2, 2 * (m - 1) + 2 * (n - 2)),
                (4, (n - 2) * (m - 1) + (n - 1) * m),
            ]),
            avg_distance: avg_distance_formula(spec).ok(),
            dim_claim: vg_dim_claim(spec),
        },
    }
}

fn vg_dim_claim(spec: &GridSpec) -> DimClaim {
    if spec.family == Family::Vg1 && spec.m == 1 && spec.n == 1 {
        // VG1(1,1) is the 4-cycle.
        DimClaim::Exactly(2)
    } else if spec.n <= 2 * spec.m + 1 {
        DimClaim::Exactly(3)
    } else {
        DimClaim::MoreThan(3)
    }
}
