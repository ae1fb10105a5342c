//! Two vertex-disjoint bridges between two trees.
//!
//! The objective is the constrained diameter of `T'' = T1 + T2 + {p1q1, p2q2}`:
//! the longest shortest path among vertex pairs whose route must use a bridge.
//! Cross-tree pairs always count. A same-tree pair counts only when its route
//! through the bridges is strictly shorter than its tree path.

mod cases;
mod fig3;

use serde::Serialize;

use crate::bridge::infer_backend;
use crate::error::{Error, Result};
use crate::geometry::{euclidean_distance, segments_intersect, DistanceTable, Graph, WeightedTree};
use crate::length::{Backend, Length};

pub use cases::{solve_cases_12, solve_cases_34, CaseFunctions};
pub use fig3::gen_fig3_instance;

/// Largest `n1 * n2` that [`brute_force_twin`] accepts without `force`.
pub const BRUTE_FORCE_LIMIT: usize = 400;

/// A vertex of T1 (`tree == 1`) or T2 (`tree == 2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TreeVertex {
    pub tree: u8,
    pub vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Evaluation {
    pub value: Length,
    pub witness: (TreeVertex, TreeVertex),
    /// 1 or 2: cross pair routed over that bridge; 3: T1 pair; 4: T2 pair.
    pub case: u8,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TwinBridgeSolution {
    /// `(p1, q1)`, with `p1 < p2`.
    pub bridge1: (usize, usize),
    pub bridge2: (usize, usize),
    pub value: Length,
    pub dominant_case: u8,
    pub witness: (TreeVertex, TreeVertex),
    pub intersecting: bool,
}

impl TwinBridgeSolution {
    fn key(&self) -> (usize, usize, usize, usize) {
        (self.bridge1.0, self.bridge1.1, self.bridge2.0, self.bridge2.1)
    }

    /// Smaller value wins; values equal within tolerance fall back to the
    /// lexicographic bridge tuple.
    pub fn better_than(&self, other: &TwinBridgeSolution) -> bool {
        if self.value.approx_eq(&other.value) {
            self.key() < other.key()
        } else {
            self.value < other.value
        }
    }
}

pub(crate) fn keep_best(best: &mut Option<TwinBridgeSolution>, cand: TwinBridgeSolution) {
    if best.as_ref().is_none_or(|b| cand.better_than(b)) {
        *best = Some(cand);
    }
}

/// Tables and bridge lengths shared by every evaluation on one tree pair.
pub struct TwinContext<'a> {
    pub t1: &'a WeightedTree,
    pub t2: &'a WeightedTree,
    pub d1: DistanceTable,
    pub d2: DistanceTable,
    pub backend: Backend,
    lengths: Vec<Length>,
    base: Graph,
}

impl<'a> TwinContext<'a> {
    pub fn new(t1: &'a WeightedTree, t2: &'a WeightedTree) -> Self {
        let backend = infer_backend(&[t1, t2]);
        let (n1, n2) = (t1.len(), t2.len());
        let mut lengths = Vec::with_capacity(n1 * n2);
        for p in t1.points() {
            for q in t2.points() {
                lengths.push(euclidean_distance(p, q, backend));
            }
        }
        let mut base = Graph::new(n1 + n2);
        for e in t1.edges() {
            base.add_edge(e.u, e.v, e.length.clone());
        }
        for e in t2.edges() {
            base.add_edge(n1 + e.u, n1 + e.v, e.length.clone());
        }
        TwinContext { t1, t2, d1: DistanceTable::build(t1), d2: DistanceTable::build(t2), backend, lengths, base }
    }

    /// `|pq|` for `p` in T1 and `q` in T2.
    #[inline]
    pub fn bridge_length(&self, p: usize, q: usize) -> &Length {
        &self.lengths[p * self.t2.len() + q]
    }

    fn vertex(&self, i: usize) -> TreeVertex {
        let n1 = self.t1.len();
        if i < n1 {
            TreeVertex { tree: 1, vertex: i }
        } else {
            TreeVertex { tree: 2, vertex: i - n1 }
        }
    }

    /// Constrained diameter by Dijkstra from every vertex of `T''`.
    ///
    /// The witness is the lexicographically first maximizing pair in the
    /// combined numbering (T1 first, then T2).
    pub fn evaluate(&self, b1: (usize, usize), b2: (usize, usize)) -> Result<Evaluation> {
        let (n1, n2) = (self.t1.len(), self.t2.len());
        for &(p, q) in &[b1, b2] {
            if p >= n1 || q >= n2 {
                return Err(Error::InvalidInput(format!("bridge ({p}, {q}) is out of range")));
            }
        }
        if b1.0 == b2.0 || b1.1 == b2.1 {
            return Err(Error::BridgesNotDisjoint(format!("({}, {}) and ({}, {})", b1.0, b1.1, b2.0, b2.1)));
        }
        let mut g = self.base.clone();
        g.add_edge(b1.0, n1 + b1.1, self.bridge_length(b1.0, b1.1).clone());
        g.add_edge(b2.0, n1 + b2.1, self.bridge_length(b2.0, b2.1).clone());

        let n = n1 + n2;
        let mut best: Option<(Length, usize, usize)> = None;
        for a in 0..n {
            let dist = g.dijkstra(a);
            for (b, d) in dist.iter().enumerate().skip(a + 1) {
                let d = d.clone().expect("bridges connect T''");
                let qualifies = match (a < n1, b < n1) {
                    (true, true) => strictly(&d, self.d1.get(a, b)),
                    (false, false) => strictly(&d, self.d2.get(a - n1, b - n1)),
                    _ => true,
                };
                if qualifies && best.as_ref().is_none_or(|(v, _, _)| d > *v) {
                    best = Some((d, a, b));
                }
            }
        }
        let (value, a, b) = best.expect("cross pairs always qualify");
        let case = if b < n1 {
            3
        } else if a >= n1 {
            4
        } else {
            let y = b - n1;
            let r1 = self.d1.get(a, b1.0) + self.bridge_length(b1.0, b1.1) + self.d2.get(b1.1, y);
            let r2 = self.d1.get(a, b2.0) + self.bridge_length(b2.0, b2.1) + self.d2.get(b2.1, y);
            if r1 <= r2 {
                1
            } else {
                2
            }
        };
        Ok(Evaluation { value, witness: (self.vertex(a), self.vertex(b)), case })
    }

    /// Scores a bridge pair as a solution; the bridges are reordered so `p1 < p2`.
    pub fn solution(&self, b1: (usize, usize), b2: (usize, usize)) -> Result<TwinBridgeSolution> {
        let (b1, b2) = if b2 < b1 { (b2, b1) } else { (b1, b2) };
        let eval = self.evaluate(b1, b2)?;
        let intersecting =
            segments_intersect(self.t1.point(b1.0), self.t2.point(b1.1), self.t1.point(b2.0), self.t2.point(b2.1));
        Ok(TwinBridgeSolution {
            bridge1: b1,
            bridge2: b2,
            value: eval.value,
            dominant_case: eval.case,
            witness: eval.witness,
            intersecting,
        })
    }
}

/// Strict improvement over the tree path; tolerance-aware for doubles.
fn strictly(route: &Length, tree: &Length) -> bool {
    route.definitely_lt(tree)
}

pub fn evaluate_constrained_diameter(
    t1: &WeightedTree,
    t2: &WeightedTree,
    b1: (usize, usize),
    b2: (usize, usize),
) -> Result<Evaluation> {
    TwinContext::new(t1, t2).evaluate(b1, b2)
}

pub(crate) fn check_sizes(t1: &WeightedTree, t2: &WeightedTree) -> Result<()> {
    if t1.len() < 2 || t2.len() < 2 {
        return Err(Error::InvalidInput("twin bridges need at least two vertices per tree".into()));
    }
    Ok(())
}

/// Optimal twin bridges: the better of the Case 1-2 and Case 3-4 searches,
/// both scored by the operational evaluator.
pub fn solve_twin(t1: &WeightedTree, t2: &WeightedTree) -> Result<TwinBridgeSolution> {
    check_sizes(t1, t2)?;
    let ctx = TwinContext::new(t1, t2);
    let mut best = Some(cases::cases_12(&ctx)?);
    keep_best(&mut best, cases::cases_34(&ctx)?);
    Ok(best.unwrap())
}

/// Every vertex-disjoint bridge pair, scored by the evaluator.
///
/// Refuses `n1 * n2 > 400` unless `force` is set.
pub fn brute_force_twin(t1: &WeightedTree, t2: &WeightedTree, force: bool) -> Result<TwinBridgeSolution> {
    brute_force_twin_threads(t1, t2, force, 1)
}

/// [`brute_force_twin`] with the `p1` range split over `threads` workers.
/// Shard results are merged in shard order, so the answer does not depend on
/// scheduling.
pub fn brute_force_twin_threads(
    t1: &WeightedTree,
    t2: &WeightedTree,
    force: bool,
    threads: usize,
) -> Result<TwinBridgeSolution> {
    check_sizes(t1, t2)?;
    if !force && t1.len() * t2.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeGuard(format!("n1 * n2 = {} exceeds {}", t1.len() * t2.len(), BRUTE_FORCE_LIMIT)));
    }
    let ctx = TwinContext::new(t1, t2);
    let threads = threads.clamp(1, t1.len());
    let shard = |k: usize| -> Result<Option<TwinBridgeSolution>> {
        let mut best = None;
        for p1 in (k..t1.len()).step_by(threads) {
            for p2 in p1 + 1..t1.len() {
                for q1 in 0..t2.len() {
                    for q2 in 0..t2.len() {
                        if q1 != q2 {
                            keep_best(&mut best, ctx.solution((p1, q1), (p2, q2))?);
                        }
                    }
                }
            }
        }
        Ok(best)
    };
    let results: Vec<Result<Option<TwinBridgeSolution>>> = if threads == 1 {
        vec![shard(0)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..threads).map(|k| s.spawn(move || shard(k))).collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    let mut best = None;
    for r in results {
        if let Some(cand) = r? {
            keep_best(&mut best, cand);
        }
    }
    Ok(best.expect("at least one bridge pair"))
}
