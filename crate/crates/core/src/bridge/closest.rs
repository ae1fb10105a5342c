use std::cmp::Ordering;

use num_rational::BigRational;

use crate::geometry::Point;

/// Closest cross-set pair: index into `a`, index into `b`, squared distance.
pub type ClosestPair = (usize, usize, BigRational);

#[derive(Clone)]
struct Tagged<'a> {
    p: &'a Point,
    // (color, index within its own set); color 0 = a, 1 = b
    color: u8,
    idx: usize,
}

fn better(cand: &ClosestPair, best: &Option<ClosestPair>) -> bool {
    match best {
        None => true,
        Some(b) => (&cand.2, cand.0, cand.1) < (&b.2, b.0, b.1),
    }
}

fn consider(x: &Tagged, y: &Tagged, best: &mut Option<ClosestPair>) {
    if x.color == y.color {
        return;
    }
    let (pa, pb) = if x.color == 0 { (x, y) } else { (y, x) };
    let cand = (pa.idx, pb.idx, pa.p.squared_distance(pb.p));
    if better(&cand, best) {
        *best = Some(cand);
    }
}

/// Bichromatic closest pair by divide and conquer on the merged point set.
///
/// Distances are compared as exact squared rationals, so ties resolve to the
/// lexicographically smallest `(i, j)`. Returns `None` if either set is empty.
///
/// Same-colored points do not bound each other in the strip, so the strip scan
/// is quadratic in the worst case (e.g. one red point facing a dense blue
/// cluster); typical inputs behave like `O(n log^2 n)`.
pub fn bichromatic_closest_pair(a: &[Point], b: &[Point]) -> Option<ClosestPair> {
    if a.is_empty() || b.is_empty() {
        return None;
    }
    let mut pts: Vec<Tagged> = a
        .iter()
        .enumerate()
        .map(|(idx, p)| Tagged { p, color: 0, idx })
        .chain(b.iter().enumerate().map(|(idx, p)| Tagged { p, color: 1, idx }))
        .collect();
    pts.sort_by(|u, v| u.p.x.cmp(&v.p.x).then_with(|| u.p.y.cmp(&v.p.y)));
    let mut best = None;
    recurse(&pts, &mut best);
    best
}

fn recurse(pts: &[Tagged], best: &mut Option<ClosestPair>) {
    if pts.len() <= 3 {
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                consider(&pts[i], &pts[j], best);
            }
        }
        return;
    }
    let mid = pts.len() / 2;
    recurse(&pts[..mid], best);
    recurse(&pts[mid..], best);

    let mid_x = &pts[mid].p.x;
    let within = |d: &BigRational, best: &Option<ClosestPair>| match best {
        None => true,
        Some(b) => (d * d) <= b.2,
    };
    let mut strip: Vec<&Tagged> = pts.iter().filter(|t| within(&(&t.p.x - mid_x), best)).collect();
    strip.sort_by(|u, v| u.p.y.cmp(&v.p.y));
    for i in 0..strip.len() {
        for j in i + 1..strip.len() {
            if !within(&(&strip[j].p.y - &strip[i].p.y), best) {
                break;
            }
            consider(strip[i], strip[j], best);
        }
    }
}

/// Quadratic reference scan with the same tie-breaking.
pub fn closest_pair_scan(a: &[Point], b: &[Point]) -> Option<ClosestPair> {
    let mut best: Option<ClosestPair> = None;
    for (i, p) in a.iter().enumerate() {
        for (j, q) in b.iter().enumerate() {
            let d = p.squared_distance(q);
            let replace = match &best {
                None => true,
                Some(bst) => d.cmp(&bst.2) == Ordering::Less,
            };
            if replace {
                best = Some((i, j, d));
            }
        }
    }
    best
}
