//! Exact metric dimension as a minimum cover of separated vertex pairs.
//!
//! For each size `k` from a lower bound upward, landmark combinations are
//! enumerated in ascending id order, so the first cover found at the
//! minimum size is the lexicographically least basis. A node is cut when
//!
//! * some unseparated pair has no separating vertex at or after the next
//!   admissible id,
//! * the best `k - depth` remaining gains cannot add up to the number of
//!   unseparated pairs.
//!
//! The next pick is also capped at the smallest "last separating vertex"
//! over unseparated pairs: beyond it that pair can no longer be covered.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::bounds::{greedy_upper_bound, twin_lower_bound};
use super::pairs::PairMatrix;
use super::LandmarkSet;
use crate::graph::{DiagGraph, DistanceMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Largest basis size to search; defaults to the vertex count.
    pub max_k: Option<usize>,
    pub time_limit: Option<Duration>,
    /// Deterministic cap on search nodes. Setting it makes the search run on
    /// a single thread so the cut-off point is reproducible.
    pub node_limit: Option<u64>,
    /// Split the first landmark choice across the rayon pool.
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_k: None,
            time_limit: Some(Duration::from_secs(60)),
            node_limit: None,
            parallel: true,
        }
    }
}

impl SolveOptions {
    pub fn unlimited() -> Self {
        SolveOptions {
            time_limit: None,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Exact,
    UpperBoundOnly,
    Timeout,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Exact => "exact",
            SolveStatus::UpperBoundOnly => "upper_bound_only",
            SolveStatus::Timeout => "timeout",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Metric dimension when exact, otherwise the best upper bound.
    pub dim: usize,
    /// Largest size proven necessary.
    pub lower_bound: usize,
    pub basis: LandmarkSet,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub status: SolveStatus,
}

impl SolveResult {
    pub fn is_exact(&self) -> bool {
        self.status == SolveStatus::Exact
    }
}

pub fn exact_dimension(g: &DiagGraph, d: &DistanceMatrix, opts: &SolveOptions) -> SolveResult {
    let started = Instant::now();
    let n = g.vertex_count();
    let done = |dim: usize, basis: Vec<usize>, nodes| SolveResult {
        dim,
        lower_bound: dim,
        basis: LandmarkSet::from_ids_unchecked(basis),
        nodes_explored: nodes,
        elapsed: started.elapsed(),
        status: SolveStatus::Exact,
    };
    if n <= 1 {
        return done(0, Vec::new(), 0);
    }
    if g.is_path() {
        // Both ends of a path resolve it; the smaller id is the least basis.
        let end = (0..n).find(|&v| g.degree(v) <= 1).expect("paths have ends");
        return done(1, vec![end], 0);
    }

    let pm = PairMatrix::new(d);
    let problem = Problem::new(&pm);
    let greedy = greedy_upper_bound(&pm);
    let upper = greedy.len();
    let lower = twin_lower_bound(g, d);
    let max_k = opts.max_k.unwrap_or(n);
    let limits = Limits {
        deadline: opts.time_limit.map(|t| started + t),
        node_limit: opts.node_limit,
        timed_out: AtomicBool::new(false),
    };
    let parallel = opts.parallel && opts.node_limit.is_none();

    let mut nodes = 0u64;
    for k in lower..=upper.min(max_k) {
        let outcome = if parallel {
            problem.solve_parallel(k, &limits)
        } else {
            problem.solve_sequential(k, &limits, nodes)
        };
        nodes += outcome.nodes;
        match outcome.flow {
            Flow::Found(basis) => return done(k, basis, nodes),
            Flow::Exhausted => {}
            Flow::Aborted => {
                return SolveResult {
                    dim: upper,
                    lower_bound: k,
                    basis: greedy,
                    nodes_explored: nodes,
                    elapsed: started.elapsed(),
                    status: SolveStatus::Timeout,
                }
            }
        }
    }
    // A cover of size `upper` always exists, so only `max_k` can end here.
    SolveResult {
        dim: upper,
        lower_bound: (max_k + 1).max(lower),
        basis: greedy,
        nodes_explored: nodes,
        elapsed: started.elapsed(),
        status: SolveStatus::UpperBoundOnly,
    }
}

struct Limits {
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    timed_out: AtomicBool,
}

enum Flow {
    Found(Vec<usize>),
    Exhausted,
    Aborted,
}

struct Outcome {
    flow: Flow,
    nodes: u64,
}

struct Problem<'a> {
    pm: &'a PairMatrix,
    n: usize,
    words: usize,
    /// Row `i`: pairs separated by some vertex with id ≥ `i`.
    suffix_union: Vec<u64>,
    /// Row `i`: pairs whose largest separating vertex is `i`.
    by_last: Vec<u64>,
}

impl<'a> Problem<'a> {
    fn new(pm: &'a PairMatrix) -> Self {
        let n = pm.vertices();
        let words = pm.words();
        let mut suffix_union = vec![0u64; (n + 1) * words];
        let mut by_last = vec![0u64; n * words];
        for v in (0..n).rev() {
            for w in 0..words {
                let r = pm.row(v)[w];
                let later = suffix_union[(v + 1) * words + w];
                by_last[v * words + w] = r & !later;
                suffix_union[v * words + w] = r | later;
            }
        }
        Problem {
            pm,
            n,
            words,
            suffix_union,
            by_last,
        }
    }

    fn searcher<'p>(&'p self, k: usize, limits: &'p Limits, cancel: Option<(&'p AtomicUsize, usize)>) -> Searcher<'p, 'a> {
        let mut stack = vec![0u64; (k + 1) * self.words];
        stack[..self.words].copy_from_slice(&self.pm.full_mask());
        Searcher {
            problem: self,
            k,
            stack,
            chosen: Vec::with_capacity(k),
            gains: Vec::with_capacity(self.n),
            nodes: 0,
            node_offset: 0,
            limits,
            cancel,
        }
    }

    fn solve_sequential(&self, k: usize, limits: &Limits, nodes_so_far: u64) -> Outcome {
        let mut s = self.searcher(k, limits, None);
        s.node_offset = nodes_so_far;
        let flow = match s.dfs(0, 0) {
            Step::Found => Flow::Found(s.chosen.clone()),
            Step::NotFound => Flow::Exhausted,
            Step::Aborted => Flow::Aborted,
        };
        Outcome { flow, nodes: s.nodes }
    }

    /// Splits the root on the first landmark. Node counts only include
    /// subtrees up to the winning first choice, which matches the sequential
    /// order exactly.
    fn solve_parallel(&self, k: usize, limits: &Limits) -> Outcome {
        let first_choices = self.searcher(k, limits, None).root_choices();
        let best = AtomicUsize::new(usize::MAX);
        let results: Vec<(usize, Step, Vec<usize>, u64)> = first_choices
            .into_par_iter()
            .map(|i| {
                let mut s = self.searcher(k, limits, Some((&best, i)));
                let step = s.branch(0, i);
                if matches!(step, Step::Found) {
                    best.fetch_min(i, Ordering::SeqCst);
                }
                (i, step, s.chosen, s.nodes)
            })
            .collect();
        let mut nodes = 1;
        for (_, step, chosen, sub) in results {
            nodes += sub;
            match step {
                Step::Found => return Outcome { flow: Flow::Found(chosen), nodes },
                Step::Aborted => return Outcome { flow: Flow::Aborted, nodes },
                Step::NotFound => {}
            }
        }
        Outcome { flow: Flow::Exhausted, nodes }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Found,
    NotFound,
    Aborted,
}

struct Searcher<'p, 'a> {
    problem: &'p Problem<'a>,
    k: usize,
    /// `k + 1` frames of unseparated-pair masks, one per depth.
    stack: Vec<u64>,
    chosen: Vec<usize>,
    gains: Vec<u32>,
    nodes: u64,
    node_offset: u64,
    limits: &'p Limits,
    cancel: Option<(&'p AtomicUsize, usize)>,
}

impl Searcher<'_, '_> {
    fn frame(&self, depth: usize) -> &[u64] {
        let w = self.problem.words;
        &self.stack[depth * w..(depth + 1) * w]
    }

    fn interrupted(&self) -> bool {
        if let Some(limit) = self.limits.node_limit {
            if self.node_offset + self.nodes > limit {
                return true;
            }
        }
        if self.nodes.is_multiple_of(1024) {
            if self.limits.timed_out.load(Ordering::Relaxed) {
                return true;
            }
            if let Some(deadline) = self.limits.deadline {
                if Instant::now() >= deadline {
                    self.limits.timed_out.store(true, Ordering::Relaxed);
                    return true;
                }
            }
        }
        false
    }

    fn cancelled(&self) -> bool {
        self.cancel
            .is_some_and(|(best, mine)| best.load(Ordering::Relaxed) < mine)
    }

    /// First-landmark candidates at the root frame.
    fn root_choices(&mut self) -> Vec<usize> {
        match self.bounds(0, 0) {
            Some(hi) => (0..=hi).filter(|&i| self.gains[i] > 0).collect(),
            None => Vec::new(),
        }
    }

    /// Applies the cuts at `depth` with picks restricted to ids ≥ `start`.
    /// Returns the largest admissible next pick, or `None` to prune. Fills
    /// `self.gains[i - start]` with each candidate's gain.
    fn bounds(&mut self, depth: usize, start: usize) -> Option<usize> {
        let p = self.problem;
        let w = p.words;
        let left = self.k - depth;
        if left == 0 || start >= p.n {
            return None;
        }
        let unc = &self.stack[depth * w..(depth + 1) * w];
        let reach = &p.suffix_union[start * w..(start + 1) * w];
        if unc.iter().zip(reach).any(|(u, r)| u & !r != 0) {
            return None;
        }
        let hi = (start..p.n)
            .find(|&i| {
                let last = &p.by_last[i * w..(i + 1) * w];
                unc.iter().zip(last).any(|(u, l)| u & l != 0)
            })
            .expect("feasible frame has an uncovered pair with a last separator");
        let hi = hi.min(p.n - left);
        if hi < start {
            return None;
        }
        let need: u32 = unc.iter().map(|x| x.count_ones()).sum();
        self.gains.clear();
        self.gains.extend((start..p.n).map(|i| {
            p.pm.row(i)
                .iter()
                .zip(unc)
                .map(|(r, u)| (r & u).count_ones())
                .sum::<u32>()
        }));
        let reachable: u32 = if left == 1 {
            self.gains[..=hi - start].iter().copied().max().unwrap_or(0)
        } else if left >= self.gains.len() {
            self.gains.iter().sum()
        } else {
            let mut top = self.gains.clone();
            top.select_nth_unstable_by(left - 1, |a, b| b.cmp(a));
            top[..left].iter().sum()
        };
        (reachable >= need).then_some(hi)
    }

    fn dfs(&mut self, depth: usize, start: usize) -> Step {
        self.nodes += 1;
        if self.interrupted() || self.cancelled() {
            return Step::Aborted;
        }
        if self.frame(depth).iter().all(|&x| x == 0) {
            return Step::Found;
        }
        let Some(hi) = self.bounds(depth, start) else {
            return Step::NotFound;
        };
        let gains: Vec<u32> = self.gains[..=hi - start].to_vec();
        for (i, &g) in (start..=hi).zip(&gains) {
            if g == 0 {
                continue;
            }
            match self.branch(depth, i) {
                Step::NotFound => {}
                other => return other,
            }
        }
        Step::NotFound
    }

    /// Picks landmark `i` at `depth` and searches below it.
    fn branch(&mut self, depth: usize, i: usize) -> Step {
        let w = self.problem.words;
        let (head, tail) = self.stack.split_at_mut((depth + 1) * w);
        let cur = &head[depth * w..];
        let row = self.problem.pm.row(i);
        for ((dst, c), r) in tail[..w].iter_mut().zip(cur).zip(row) {
            *dst = c & !r;
        }
        self.chosen.push(i);
        let step = self.dfs(depth + 1, i + 1);
        if step != Step::Found {
            self.chosen.pop();
        }
        step
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{grid, vg1, vg2};
    use crate::graph::{all_pairs, Coord};

    fn solve(g: &DiagGraph) -> SolveResult {
        let d = all_pairs(g).unwrap();
        exact_dimension(g, &d, &SolveOptions::unlimited())
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(solve(&vg1(1, 1).unwrap()).dim, 2);
        assert_eq!(solve(&vg1(2, 3).unwrap()).dim, 3);
        assert_eq!(solve(&grid(3, 4).unwrap()).dim, 2);
        assert_eq!(solve(&vg1(1, 4).unwrap()).dim, 4);
        assert_eq!(solve(&vg2(1, 2).unwrap()).dim, 3);
        let r = solve(&grid(1, 5).unwrap());
        assert_eq!((r.dim, r.basis.ids()), (1, &[0][..]));
    }

    #[test]
    fn lex_least_basis_of_c4() {
        let r = solve(&grid(2, 2).unwrap());
        assert!(r.is_exact());
        assert_eq!(r.basis.ids(), &[0, 1]);
    }

    #[test]
    fn parallel_and_sequential_agree() {
        for g in [vg1(2, 4).unwrap(), vg2(2, 5).unwrap(), vg1(3, 3).unwrap()] {
            let d = all_pairs(&g).unwrap();
            let par = exact_dimension(&g, &d, &SolveOptions::unlimited());
            let seq = exact_dimension(
                &g,
                &d,
                &SolveOptions {
                    parallel: false,
                    ..SolveOptions::unlimited()
                },
            );
            assert_eq!(par.dim, seq.dim);
            assert_eq!(par.basis, seq.basis);
            assert_eq!(par.nodes_explored, seq.nodes_explored);
        }
    }

    #[test]
    fn node_limit_reports_timeout() {
        let g = vg1(2, 8).unwrap();
        let d = all_pairs(&g).unwrap();
        let r = exact_dimension(
            &g,
            &d,
            &SolveOptions {
                node_limit: Some(3),
                ..SolveOptions::unlimited()
            },
        );
        assert_eq!(r.status, SolveStatus::Timeout);
        assert!(r.lower_bound <= r.dim);
        let again = exact_dimension(
            &g,
            &d,
            &SolveOptions {
                node_limit: Some(3),
                ..SolveOptions::unlimited()
            },
        );
        assert_eq!(r.nodes_explored, again.nodes_explored);
    }

    #[test]
    fn max_k_gives_upper_bound_only() {
        let g = vg1(2, 3).unwrap();
        let d = all_pairs(&g).unwrap();
        let r = exact_dimension(
            &g,
            &d,
            &SolveOptions {
                max_k: Some(2),
                ..SolveOptions::unlimited()
            },
        );
        assert_eq!(r.status, SolveStatus::UpperBoundOnly);
        assert_eq!(r.lower_bound, 3);
        assert!(r.dim >= 3);
    }

    #[test]
    fn mirror_image_has_same_dimension() {
        let (m, n) = (2i64, 4i64);
        let g = vg1(m as usize, n as usize).unwrap();
        let mirrored = DiagGraph::from_coords(
            g.coords().iter().map(|c| Coord::new(2 * n - c.x, c.y)),
            g.edges().into_iter().map(|(u, v)| {
                let (a, b) = (g.coord(u), g.coord(v));
                (Coord::new(2 * n - a.x, a.y), Coord::new(2 * n - b.x, b.y))
            }),
        )
        .unwrap();
        assert_eq!(mirrored, g);
        assert_eq!(solve(&mirrored).dim, solve(&g).dim);
    }
}
