//! One bridge between two disjoint trees.
//!
//! The objective of a bridge `pq` is the longest route that crosses it,
//! `ecc_T1(p) + |pq| + ecc_T2(q)`.

mod closest;
mod fig2;
mod forest;

use std::collections::HashMap;

use num_rational::BigRational;
use serde::Serialize;

use crate::geometry::{euclidean_distance, DistanceTable, WeightedTree};
use crate::length::{Backend, Length};

pub use closest::{bichromatic_closest_pair, closest_pair_scan, ClosestPair};
pub use fig2::gen_fig2_instance;
pub use forest::{connect_forest, join_trees, ForestBridge, ForestConnection};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BridgeSolution {
    pub p: usize,
    pub q: usize,
    pub bridge_length: Length,
    pub value: Length,
    /// `(x, y)` with `x` farthest from `p` in T1 and `y` farthest from `q` in T2.
    pub witness: (usize, usize),
}

/// Backend for bridge lengths: rational when every tree edge is exact.
pub fn infer_backend(trees: &[&WeightedTree]) -> Backend {
    if trees.iter().all(|t| t.all_lengths_exact()) {
        Backend::Rational
    } else {
        Backend::Double
    }
}

/// Optimal bridge over all `n1 * n2` candidates using full distance tables.
/// Ties go to the lexicographically smallest `(p, q)`.
pub fn solve_exact(t1: &WeightedTree, t2: &WeightedTree) -> BridgeSolution {
    let d1 = DistanceTable::build(t1);
    let d2 = DistanceTable::build(t2);
    solve_with_tables(t1, t2, &d1, &d2)
}

pub fn solve_with_tables(
    t1: &WeightedTree,
    t2: &WeightedTree,
    d1: &DistanceTable,
    d2: &DistanceTable,
) -> BridgeSolution {
    let backend = infer_backend(&[t1, t2]);
    let mut best: Option<BridgeSolution> = None;
    for p in 0..t1.len() {
        for q in 0..t2.len() {
            let len = euclidean_distance(t1.point(p), t2.point(q), backend);
            let value = d1.eccentricity(p) + &len + d2.eccentricity(q);
            if best.as_ref().is_none_or(|b| value < b.value) {
                best =
                    Some(BridgeSolution { p, q, bridge_length: len, value, witness: (d1.farthest(p), d2.farthest(q)) });
            }
        }
    }
    best.expect("trees are non-empty")
}

/// Greedy bridge: the bichromatic closest pair, scored with one traversal per tree.
/// At most twice the optimum.
pub fn approx_greedy(t1: &WeightedTree, t2: &WeightedTree) -> BridgeSolution {
    let (p, q, _) = bichromatic_closest_pair(t1.points(), t2.points()).expect("trees are non-empty");
    score_bridge(t1, t2, p, q)
}

/// Objective of one given bridge, via single-source traversals.
pub fn score_bridge(t1: &WeightedTree, t2: &WeightedTree, p: usize, q: usize) -> BridgeSolution {
    let backend = infer_backend(&[t1, t2]);
    let (x, ex) = farthest(&t1.distances_from(p));
    let (y, ey) = farthest(&t2.distances_from(q));
    let len = euclidean_distance(t1.point(p), t2.point(q), backend);
    let value = &ex + &len + &ey;
    BridgeSolution { p, q, bridge_length: len, value, witness: (x, y) }
}

fn farthest(dist: &[Length]) -> (usize, Length) {
    let mut best = 0;
    for (i, d) in dist.iter().enumerate() {
        if *d > dist[best] {
            best = i;
        }
    }
    (best, dist[best].clone())
}

/// Witness of a positive one-bridge decision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecisionWitness {
    pub p: usize,
    pub q: usize,
    pub x: usize,
    pub y: usize,
}

/// Is there a bridge `pq` with `|pq| = c1` and leaves `x`, `y` with
/// `d_T1(x, p) + |pq| + d_T2(q, y) = c2`?
///
/// Equality is exact when all quantities are exact and within the double
/// tolerance otherwise. The returned witness is the lexicographically smallest
/// `(p, q, x, y)`.
pub fn one_bridge_decide(t1: &WeightedTree, t2: &WeightedTree, c1: &Length, c2: &Length) -> Option<DecisionWitness> {
    if c1.is_negative() || c2.is_negative() {
        return None;
    }
    let backend = infer_backend(&[t1, t2]);
    let bridges = bridges_of_length(t1, t2, c1, backend);
    if bridges.is_empty() {
        return None;
    }
    let d1 = DistanceTable::build(t1);
    let d2 = DistanceTable::build(t2);
    let leaves1 = t1.leaves();
    let leaves2 = t2.leaves();

    // per q: leaf distance -> smallest leaf, for the exact two-sum
    let mut exact_index: HashMap<usize, Option<HashMap<BigRational, usize>>> = HashMap::new();
    for (p, q, len) in bridges {
        let rest = c2 - &len;
        let index = exact_index.entry(q).or_insert_with(|| {
            let mut m = HashMap::new();
            for &y in &leaves2 {
                m.entry(d2.get(q, y).as_exact()?.clone()).or_insert(y);
            }
            Some(m)
        });
        let exact_side = leaves1.iter().all(|&x| d1.get(x, p).is_exact());
        let hit = match (index.as_ref(), rest.as_exact()) {
            (Some(m), Some(r)) if exact_side => leaves1.iter().find_map(|&x| {
                let need = r - d1.get(x, p).as_exact().unwrap();
                m.get(&need).map(|&y| (x, y))
            }),
            _ => approx_two_sum(&d1, &d2, p, q, &leaves1, &leaves2, &rest),
        };
        if let Some((x, y)) = hit {
            return Some(DecisionWitness { p, q, x, y });
        }
    }
    None
}

/// All `(p, q, |pq|)` with `|pq| = c1`, in lexicographic order.
fn bridges_of_length(
    t1: &WeightedTree,
    t2: &WeightedTree,
    c1: &Length,
    backend: Backend,
) -> Vec<(usize, usize, Length)> {
    let mut out = Vec::new();
    for p in 0..t1.len() {
        for q in 0..t2.len() {
            let hit = match (c1, backend) {
                (Length::Exact(c), Backend::Rational) => t1.point(p).squared_distance(t2.point(q)) == c * c,
                _ => euclidean_distance(t1.point(p), t2.point(q), backend).approx_eq(c1),
            };
            if hit {
                out.push((p, q, euclidean_distance(t1.point(p), t2.point(q), backend)));
            }
        }
    }
    out
}

/// Closest-sum scan over sorted leaf distances; the smallest `(x, y)` among
/// pairs within tolerance of `target`.
fn approx_two_sum(
    d1: &DistanceTable,
    d2: &DistanceTable,
    p: usize,
    q: usize,
    leaves1: &[usize],
    leaves2: &[usize],
    target: &Length,
) -> Option<(usize, usize)> {
    let mut a: Vec<(f64, usize)> = leaves1.iter().map(|&x| (d1.get(x, p).to_f64(), x)).collect();
    let mut b: Vec<(f64, usize)> = leaves2.iter().map(|&y| (d2.get(q, y).to_f64(), y)).collect();
    a.sort_by(|u, v| u.0.total_cmp(&v.0).then(u.1.cmp(&v.1)));
    b.sort_by(|u, v| u.0.total_cmp(&v.0).then(u.1.cmp(&v.1)));
    let t = target.to_f64();
    let tol = crate::length::TOLERANCE * t.abs().max(1.0);
    let mut hits = Vec::new();
    // every b within tolerance of t - a lies in a contiguous window
    for &(va, x) in &a {
        let lo = b.partition_point(|&(vb, _)| va + vb < t - tol);
        for &(vb, y) in &b[lo..] {
            if va + vb > t + tol {
                break;
            }
            hits.push((x, y));
        }
    }
    hits.into_iter().min()
}
