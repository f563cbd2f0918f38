//! Explicit landmark sets: the three-landmark bases for the dimension-three
//! range, and the conjectured resolving sets beyond it.

use crate::error::{Error, Result};
use crate::generators::{is_vertex, Family, GridSpec};
use crate::graph::Coord;

/// The three-landmark basis claimed for `spec`.
///
/// The VG2 set `{(0,0), (2n-2,0), (2m,2m)}` is the one the VG2 upper-bound
/// argument starts from; its closing sentence repeats the VG1 coordinates,
/// which are not VG2 vertices.
pub fn paper_basis(spec: &GridSpec) -> Result<Vec<Coord>> {
    let (m, n) = (spec.m as i64, spec.n as i64);
    let set = match spec.family {
        Family::Vg1 if spec.in_theorem_range() && m != n => {
            vec![Coord::new(1, 0), Coord::new(2 * n - 1, 0), Coord::new(2 * m + 1, 2 * m)]
        }
        Family::Vg1 if spec.in_theorem_range() => {
            vec![Coord::new(1, 0), Coord::new(2 * n - 1, 0), Coord::new(2 * m, 2 * m - 1)]
        }
        Family::Vg2 if spec.in_theorem_range() => {
            vec![Coord::new(0, 0), Coord::new(2 * n - 2, 0), Coord::new(2 * m, 2 * m)]
        }
        _ => return Err(Error::BasisNotClaimed(spec.to_string())),
    };
    debug_assert!(set.iter().all(|&c| is_vertex(spec, c)), "{spec}: {set:?}");
    Ok(set)
}

/// `⌈(n-1)/m⌉`, the number of zig-zag landmarks.
pub fn zigzag_len(m: usize, n: usize) -> usize {
    (n - 1).div_ceil(m)
}

/// Landmarks predicted to resolve a Villarceau grid with `n > 2m+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureSet {
    pub landmarks: Vec<Coord>,
    pub predicted_dim: usize,
    /// The closing landmark as given by the formula, when it had to be
    /// replaced because it lies outside the grid.
    pub replaced: Option<Coord>,
}

/// Zig-zag landmarks along the bottom/top boundary plus one closing landmark
/// on the right side.
///
/// For VG1 the closing formula leaves the grid whenever `m` divides `n-1`
/// (its y becomes `2m+1` or `-1`). The zig-zag is then continued by one
/// more step instead, landing on `(2n-1, 0)` or `(2n-1, 2m)`.
pub fn conjecture_set(spec: &GridSpec) -> Result<ConjectureSet> {
    if !spec.in_conjecture_range() {
        return Err(Error::ConjectureNotApplicable(spec.to_string()));
    }
    let (m, n) = (spec.m as i64, spec.n as i64);
    let k = zigzag_len(spec.m, spec.n) as i64;
    let km = k * m;
    // m[1 + (-1)^(t+1)] alternates 0, 2m, 0, ...
    let height = |t: i64| if t % 2 == 0 { 0 } else { 2 * m };
    let (mut landmarks, closing, next_zig): (Vec<Coord>, Coord, Coord) = match spec.family {
        Family::Vg1 => (
            (0..k).map(|t| Coord::new(1 + 2 * m * t, height(t))).collect(),
            if k % 2 == 1 {
                Coord::new(2 * n, 2 * (n + m - km) - 1)
            } else {
                Coord::new(2 * n, 1 + 2 * (km - n))
            },
            Coord::new(1 + 2 * m * k, height(k)),
        ),
        Family::Vg2 => (
            (0..k).map(|t| Coord::new(2 * m * t, height(t))).collect(),
            if k % 2 == 1 {
                Coord::new(2 * n - 2, 2 * (n + m - km - 1))
            } else {
                Coord::new(2 * n - 2, 2 * (km - n + 1))
            },
            Coord::new(2 * m * k, height(k)),
        ),
        Family::Grid => unreachable!("grids are outside the conjecture range"),
    };
    let replaced = if is_vertex(spec, closing) {
        landmarks.push(closing);
        None
    } else {
        landmarks.push(next_zig);
        Some(closing)
    };
    debug_assert!(landmarks.iter().all(|&c| is_vertex(spec, c)), "{spec}: {landmarks:?}");
    Ok(ConjectureSet {
        predicted_dim: k as usize + 1,
        landmarks,
        replaced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(v: &[(i64, i64)]) -> Vec<Coord> {
        v.iter().map(|&c| c.into()).collect()
    }

    #[test]
    fn theorem_bases() {
        assert_eq!(paper_basis(&GridSpec::vg1(1, 2).unwrap()).unwrap(), cs(&[(1, 0), (3, 0), (3, 2)]));
        assert_eq!(paper_basis(&GridSpec::vg1(2, 2).unwrap()).unwrap(), cs(&[(1, 0), (3, 0), (4, 3)]));
        assert_eq!(paper_basis(&GridSpec::vg2(2, 3).unwrap()).unwrap(), cs(&[(0, 0), (4, 0), (4, 4)]));
        assert!(paper_basis(&GridSpec::vg1(1, 4).unwrap()).is_err());
        assert!(paper_basis(&GridSpec::vg1(1, 1).unwrap()).is_err());
        assert!(paper_basis(&GridSpec::grid(3, 3).unwrap()).is_err());
    }

    #[test]
    fn figure_instances() {
        let c = conjecture_set(&GridSpec::vg1(4, 20).unwrap()).unwrap();
        assert_eq!(c.landmarks, cs(&[(1, 0), (9, 8), (17, 0), (25, 8), (33, 0), (40, 7)]));
        assert_eq!((c.predicted_dim, c.replaced), (6, None));

        let c = conjecture_set(&GridSpec::vg2(4, 20).unwrap()).unwrap();
        assert_eq!(c.landmarks, cs(&[(0, 0), (8, 8), (16, 0), (24, 8), (32, 0), (38, 6)]));
        assert_eq!(c.predicted_dim, 6);
    }

    #[test]
    fn off_grid_closing_point_is_replaced() {
        let c = conjecture_set(&GridSpec::vg1(1, 4).unwrap()).unwrap();
        assert_eq!(c.predicted_dim, 4);
        assert_eq!(c.replaced, Some(Coord::new(8, 3)));
        assert_eq!(c.landmarks, cs(&[(1, 0), (3, 2), (5, 0), (7, 2)]));
    }

    #[test]
    fn range_checked() {
        assert!(conjecture_set(&GridSpec::vg1(2, 5).unwrap()).is_err());
        assert!(conjecture_set(&GridSpec::grid(2, 9).unwrap()).is_err());
    }
}
