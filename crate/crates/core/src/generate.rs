//! Seeded random instances.
//!
//! [`gen_random_tree`] scatters points uniformly (on a fine rational grid) in a
//! box; most edge lengths are then irrational. [`gen_circle_pair`] instead puts
//! every vertex of both trees on one circle at rational points whose pairwise
//! distances are all rational, so tree edges and every candidate bridge stay
//! exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::point::rational;
use crate::geometry::{Point, WeightedTree};
use crate::length::Backend;

const GRID: i64 = 1000;

#[derive(Clone, Debug, PartialEq)]
pub struct BBox {
    pub min: Point,
    pub max: Point,
}

impl Default for BBox {
    fn default() -> Self {
        BBox { min: Point::from_ints(0, 0), max: Point::from_ints(100, 100) }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` points in `bbox` joined by random-parent attachment: vertex `i`
/// attaches to a uniform earlier vertex. Deterministic per seed.
pub fn gen_random_tree(n: usize, seed: u64, bbox: &BBox) -> WeightedTree {
    random_tree_with(n, &mut rng(seed), bbox)
}

pub fn random_tree_with<R: Rng>(n: usize, rng: &mut R, bbox: &BBox) -> WeightedTree {
    assert!(n >= 1, "a tree needs at least one vertex");
    let w = &bbox.max.x - &bbox.min.x;
    let h = &bbox.max.y - &bbox.min.y;
    let points: Vec<Point> = (0..n)
        .map(|_| {
            let fx = rational(rng.gen_range(0..=GRID), GRID);
            let fy = rational(rng.gen_range(0..=GRID), GRID);
            Point::new(&bbox.min.x + &w * fx, &bbox.min.y + &h * fy)
        })
        .collect();
    let pairs = random_parents(n, rng);
    WeightedTree::geometric(points, &pairs, Backend::Rational).expect("attachment yields a tree")
}

fn random_parents<R: Rng>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    (1..n).map(|i| (rng.gen_range(0..i), i)).collect()
}

/// A point on the circle of radius `r` about the origin whose half-angle has
/// rational sine and cosine; chords between such points are rational.
///
/// With `s = sin(th)`, `c = cos(th)` rational, the point is
/// `r (c^2 - s^2, 2 s c)` at angle `2 th`, and the chord to the point for `th'`
/// is `2 r |sin(th - th')|`.
pub fn circle_point(t: &BigRational, r: &BigRational) -> Point {
    let one = BigRational::one();
    let den = &one + t * t;
    let s = (t + t) / &den;
    let c = (&one - t * t) / &den;
    Point::new(r * (&c * &c - &s * &s), r * (&s * &c * BigRational::from_integer(BigInt::from(2))))
}

/// Distinct half-angle parameters `a/b` in `(-1, 1)` with `b <= 12`, sorted.
fn circle_parameters() -> Vec<BigRational> {
    let mut ts: Vec<BigRational> = Vec::new();
    for b in 1..=12i64 {
        for a in -(b - 1)..b {
            let t = rational(a, b);
            if !ts.contains(&t) {
                ts.push(t);
            }
        }
    }
    ts.sort();
    ts
}

/// Two random trees of `n1` and `n2` vertices on a shared rational circle.
/// All tree edges and all cross distances are exact rationals.
pub fn gen_circle_pair(n1: usize, n2: usize, seed: u64) -> (WeightedTree, WeightedTree) {
    let mut rng = rng(seed);
    let mut params = circle_parameters();
    params.shuffle(&mut rng);
    let radius = BigRational::from_integer(BigInt::from(rng.gen_range(5..=50)));
    let mut take = |k: usize, rng: &mut ChaCha8Rng| {
        let pts: Vec<Point> = params.drain(..k).map(|t| circle_point(&t, &radius)).collect();
        let pairs = random_parents(k, rng);
        WeightedTree::geometric(pts, &pairs, Backend::Rational).expect("attachment yields a tree")
    };
    let t1 = take(n1, &mut rng);
    let t2 = take(n2, &mut rng);
    (t1, t2)
}

/// `k` random trees of `1..=max_n` vertices on one rational circle.
pub fn gen_circle_forest(k: usize, max_n: usize, seed: u64) -> Vec<WeightedTree> {
    let mut rng = rng(seed);
    let mut params = circle_parameters();
    params.shuffle(&mut rng);
    let radius = BigRational::from_integer(BigInt::from(rng.gen_range(5..=50)));
    (0..k)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let pts: Vec<Point> = params.drain(..n).map(|t| circle_point(&t, &radius)).collect();
            let pairs = random_parents(n, &mut rng);
            WeightedTree::geometric(pts, &pairs, Backend::Rational).expect("attachment yields a tree")
        })
        .collect()
}
