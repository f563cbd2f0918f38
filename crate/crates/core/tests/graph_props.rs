mod common;

use common::{count_paths_of_length, floyd_warshall};
use proptest::prelude::*;
use villarceau::generators::{grid, vg1, vg2};
use villarceau::graph::{all_pairs, average_distance, bfs_distances, degree_multiset, diameter, sphere};
use villarceau::{Coord, DiagGraph, Family, GridSpec, Rational};

fn id(g: &DiagGraph, x: i64, y: i64) -> usize {
    g.index_of(Coord::new(x, y)).unwrap()
}

fn q(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

#[test]
fn bfs_examples() {
    let g = vg1(1, 1).unwrap();
    let d = bfs_distances(&g, id(&g, 1, 0)).unwrap();
    assert_eq!(d[id(&g, 1, 2)], 2);
    assert_eq!(d[id(&g, 1, 0)], 0);

    let g = vg1(1, 2).unwrap();
    let (a, b) = (id(&g, 0, 1), id(&g, 4, 1));
    let d = bfs_distances(&g, a).unwrap();
    // No walk shorter than four edges exists; one of length four does.
    assert!((1..4).all(|len| count_paths_of_length(&g, a, b, len) == 0));
    assert!(count_paths_of_length(&g, a, b, 4) > 0);
    assert_eq!(d[b], 4);
}

#[test]
fn distance_sums_match_floyd_warshall() {
    let g = vg1(1, 2).unwrap();
    let fw = floyd_warshall(&g);
    let fw_sum: u32 = (0..7).flat_map(|u| (u + 1..7).map(move |v| (u, v))).map(|(u, v)| fw[u][v]).sum();
    assert_eq!(fw_sum, 40);
    let d = all_pairs(&g).unwrap();
    assert_eq!(d.pair_sum(), 40);
    assert_eq!(average_distance(&d).unwrap(), q(40, 21));

    let d = all_pairs(&grid(2, 2).unwrap()).unwrap();
    assert!((0..4).all(|u| (0..4).all(|v| u == v || matches!(d.get(u, v), 1 | 2))));
    assert_eq!(d.pair_sum(), 8);
    assert_eq!(average_distance(&d).unwrap(), q(4, 3));
    assert_eq!(average_distance(&all_pairs(&vg1(1, 1).unwrap()).unwrap()).unwrap(), q(4, 3));
}

#[test]
fn spheres_match_oracle() {
    let g = vg1(2, 3).unwrap();
    let d = all_pairs(&g).unwrap();
    let fw = floyd_warshall(&g);
    let v = id(&g, 1, 0);
    let expect: Vec<usize> = (0..g.vertex_count()).filter(|&w| fw[v][w] == 3).collect();
    assert!(!expect.is_empty());
    assert_eq!(sphere(&d, v, 3), expect);

    for (m, n) in [(4, 5), (1, 1), (2, 3)] {
        let g = vg1(m, n).unwrap();
        let d = all_pairs(&g).unwrap();
        let got: Vec<Coord> = sphere(&d, id(&g, 1, 0), 1).into_iter().map(|w| g.coord(w)).collect();
        assert_eq!(got, vec![Coord::new(0, 1), Coord::new(2, 1)]);
    }
}

#[test]
fn diameters() {
    assert_eq!(diameter(&all_pairs(&vg1(1, 2).unwrap()).unwrap()), 4);
    assert_eq!(diameter(&all_pairs(&vg1(1, 1).unwrap()).unwrap()), 2);
    let g = vg2(1, 3).unwrap();
    let fw = floyd_warshall(&g);
    let fw_max = fw.iter().flatten().copied().max().unwrap();
    assert_eq!(fw_max, 4);
    assert_eq!(diameter(&all_pairs(&g).unwrap()), 4);
    assert_eq!(diameter(&all_pairs(&grid(1, 5).unwrap()).unwrap()), 4);
}

#[test]
fn degree_multisets() {
    assert!(degree_multiset(&vg1(4, 5).unwrap()).keys().all(|k| [2, 4].contains(k)));
    assert!(degree_multiset(&vg2(4, 6).unwrap()).keys().all(|k| [1, 2, 4].contains(k)));
    let star = degree_multiset(&vg2(1, 2).unwrap());
    assert_eq!(star.into_iter().collect::<Vec<_>>(), vec![(1, 4), (4, 1)]);
}

fn all_specs(max: usize) -> Vec<GridSpec> {
    let mut out = Vec::new();
    for f in Family::ALL {
        for m in 1..=max {
            for n in 1..=max {
                if let Ok(s) = GridSpec::new(f, m, n) {
                    out.push(s);
                }
            }
        }
    }
    out
}

#[test]
fn metric_axioms_and_parity() {
    for spec in all_specs(5) {
        let g = spec.build();
        let d = all_pairs(&g).unwrap();
        let n = g.vertex_count();
        assert!(n <= 200);
        for u in 0..n {
            assert_eq!(d.get(u, u), 0);
            for v in 0..n {
                assert_eq!(d.get(u, v), d.get(v, u));
                assert_eq!(d.get(u, v) == 1, g.neighbors(u).contains(&v), "{spec}");
                for w in 0..n {
                    assert!(d.get(u, v) <= d.get(u, w) + d.get(w, v));
                }
                if spec.family.is_villarceau() {
                    let (a, b) = (g.coord(u), g.coord(v));
                    let (dx, dy) = ((a.x - b.x).unsigned_abs(), (a.y - b.y).unsigned_abs());
                    let duv = u64::from(d.get(u, v));
                    assert!(duv >= dx.max(dy));
                    assert_eq!(duv % 2, dx % 2);
                    assert_eq!(duv % 2, dy % 2);
                }
            }
        }
        for r in 0..=diameter(&d) {
            for v in 0..n {
                let expect: Vec<usize> = (0..n).filter(|&w| usize::from(d.get(v, w)) == r).collect();
                assert_eq!(sphere(&d, v, r), expect);
            }
        }
    }
}

#[test]
fn villarceau_edges_are_diagonal() {
    for spec in all_specs(6).into_iter().filter(|s| s.family.is_villarceau()) {
        let g = spec.build();
        let xy_parity = (g.coord(0).x + g.coord(0).y).rem_euclid(2);
        for (u, v) in g.edges() {
            let (a, b) = (g.coord(u), g.coord(v));
            assert_eq!(((a.x - b.x).abs(), (a.y - b.y).abs()), (1, 1));
        }
        assert!(g.coords().iter().all(|c| (c.x + c.y).rem_euclid(2) == xy_parity));
    }
}

#[test]
fn apsp_is_thread_count_independent() {
    let g = vg1(4, 9).unwrap();
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    assert_eq!(one.install(|| all_pairs(&g).unwrap()), four.install(|| all_pairs(&g).unwrap()));
}

proptest! {
    #[test]
    fn generator_counts(m in 1usize..12, n in 1usize..16) {
        if let Ok(s) = GridSpec::vg1(m, n) {
            let g = s.build();
            prop_assert_eq!(g.vertex_count(), 2 * m * n + m + n);
            prop_assert_eq!(g.edge_count(), 4 * m * n);
            prop_assert!(g.is_connected());
            prop_assert!(degree_multiset(&g).keys().all(|k| [2, 4].contains(k)));
            prop_assert_eq!(diameter(&all_pairs(&g).unwrap()), 2 * n);
        }
        if let Ok(s) = GridSpec::vg2(m, n) {
            let g = s.build();
            prop_assert_eq!(g.vertex_count(), 2 * m * n - m + n);
            prop_assert_eq!(g.edge_count(), 4 * m * (n - 1));
            prop_assert!(g.is_connected());
            prop_assert!(degree_multiset(&g).keys().all(|k| [1, 2, 4].contains(k)));
        }
        let g = grid(m, n).unwrap();
        prop_assert_eq!(g.vertex_count(), m * n);
        prop_assert_eq!(g.edge_count(), 2 * m * n - m - n);
        prop_assert!(g.is_connected());
        if m >= 2 && n >= 2 {
            prop_assert!(degree_multiset(&g).keys().all(|k| [2, 3, 4].contains(k)));
        }
    }

    #[test]
    fn generation_is_deterministic(m in 1usize..8, n in 1usize..10, fam in 0usize..3) {
        if let Ok(s) = GridSpec::new(Family::ALL[fam], m, n) {
            prop_assert_eq!(s.build(), s.build());
            let g = s.build();
            prop_assert!(g.coords().windows(2).all(|w| w[0] < w[1]));
        }
    }
}
