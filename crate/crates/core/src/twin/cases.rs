use std::collections::BTreeSet;

use crate::error::Result;
use crate::geometry::{DistanceTable, WeightedTree};
use crate::length::Length;
use crate::twin::{check_sizes, keep_best, TwinBridgeSolution, TwinContext};

/// The routing costs of the case analysis over a fixed tree pair.
///
/// `f1` and `f2` are the cross routes through the first and second bridge,
/// `f` their minimum, and `g` the saving of the cycle `p1 q1 .. q2 p2 .. p1`
/// over the T1 path from `p1` to `p2`.
pub struct CaseFunctions<'c, 'a> {
    ctx: &'c TwinContext<'a>,
}

impl<'c, 'a> CaseFunctions<'c, 'a> {
    pub fn new(ctx: &'c TwinContext<'a>) -> Self {
        CaseFunctions { ctx }
    }

    pub fn f1(&self, x: usize, y: usize, p1: usize, q1: usize, _p2: usize, _q2: usize) -> Length {
        self.ctx.d1.get(x, p1) + self.ctx.bridge_length(p1, q1) + self.ctx.d2.get(q1, y)
    }

    pub fn f2(&self, x: usize, y: usize, _p1: usize, _q1: usize, p2: usize, q2: usize) -> Length {
        self.ctx.d1.get(x, p2) + self.ctx.bridge_length(p2, q2) + self.ctx.d2.get(q2, y)
    }

    pub fn f(&self, x: usize, y: usize, p1: usize, q1: usize, p2: usize, q2: usize) -> Length {
        self.f1(x, y, p1, q1, p2, q2).min(self.f2(x, y, p1, q1, p2, q2))
    }

    /// `d_T1(p1, p2) - (|p1q1| + d_T2(q1, q2) + |q2p2|)`.
    pub fn g(&self, p1: usize, q1: usize, p2: usize, q2: usize) -> Length {
        let detour = self.ctx.bridge_length(p1, q1) + self.ctx.d2.get(q1, q2) + self.ctx.bridge_length(p2, q2);
        self.ctx.d1.get(p1, p2) - &detour
    }

    /// The mirror of `g` for T2: `d_T2(q1, q2) - (|q1p1| + d_T1(p1, p2) + |p2q2|)`.
    pub fn g_mirror(&self, p1: usize, q1: usize, p2: usize, q2: usize) -> Length {
        let detour = self.ctx.bridge_length(p1, q1) + self.ctx.d1.get(p1, p2) + self.ctx.bridge_length(p2, q2);
        self.ctx.d2.get(q1, q2) - &detour
    }
}

/// The two components left after deleting one tree edge, with every vertex's
/// eccentricity inside its own component.
struct Split {
    side: Vec<bool>,
    ecc: Vec<Length>,
}

fn splits(t: &WeightedTree, d: &DistanceTable) -> Vec<Split> {
    (0..t.edges().len())
        .map(|e| {
            let side = t.split_sides(e);
            let ecc = (0..t.len())
                .map(|v| (0..t.len()).filter(|&w| side[w] == side[v]).map(|w| d.get(v, w).clone()).max().unwrap())
                .collect();
            Split { side, ecc }
        })
        .collect()
}

/// Optimal single bridge between the `s1` side of T1 and the `s2` side of T2,
/// using eccentricities inside the components. Ties go to the smallest `(p, q)`.
fn sub_bridge(ctx: &TwinContext, a: &Split, s1: bool, b: &Split, s2: bool) -> (usize, usize) {
    let mut best: Option<(Length, usize, usize)> = None;
    for p in (0..ctx.t1.len()).filter(|&p| a.side[p] == s1) {
        for q in (0..ctx.t2.len()).filter(|&q| b.side[q] == s2) {
            let v = &a.ecc[p] + ctx.bridge_length(p, q) + &b.ecc[q];
            if best.as_ref().is_none_or(|(bv, _, _)| v < *bv) {
                best = Some((v, p, q));
            }
        }
    }
    let (_, p, q) = best.expect("both components are non-empty");
    (p, q)
}

/// Cases 1-2: for every edge pair, delete both edges and solve the two
/// optimal-bridge subproblems under both pairings of the components. Each
/// distinct candidate pair is scored by the evaluator.
pub fn solve_cases_12(t1: &WeightedTree, t2: &WeightedTree) -> Result<TwinBridgeSolution> {
    check_sizes(t1, t2)?;
    cases_12(&TwinContext::new(t1, t2))
}

pub(crate) fn cases_12(ctx: &TwinContext) -> Result<TwinBridgeSolution> {
    let sp1 = splits(ctx.t1, &ctx.d1);
    let sp2 = splits(ctx.t2, &ctx.d2);
    let mut candidates = BTreeSet::new();
    for a in &sp1 {
        for b in &sp2 {
            for flip in [false, true] {
                let x = sub_bridge(ctx, a, true, b, !flip);
                let y = sub_bridge(ctx, a, false, b, flip);
                candidates.insert(if x < y { (x, y) } else { (y, x) });
            }
        }
    }
    let mut best = None;
    for (x, y) in candidates {
        keep_best(&mut best, ctx.solution(x, y)?);
    }
    Ok(best.unwrap())
}

/// Cases 3-4: take the diameter path of one tree, pick two vertices on it and
/// two vertices of the other tree maximizing the cycle saving `g`, and score
/// that tuple by the evaluator. The better of the two orientations is returned.
pub fn solve_cases_34(t1: &WeightedTree, t2: &WeightedTree) -> Result<TwinBridgeSolution> {
    check_sizes(t1, t2)?;
    cases_34(&TwinContext::new(t1, t2))
}

pub(crate) fn cases_34(ctx: &TwinContext) -> Result<TwinBridgeSolution> {
    let f = CaseFunctions::new(ctx);
    let mut best = None;

    let (x, z, _) = ctx.d1.diameter();
    let mut on_path = ctx.t1.path(x, z);
    on_path.sort_unstable();
    let all2: Vec<usize> = (0..ctx.t2.len()).collect();
    let (b1, b2) = argmax_g(&on_path, &all2, |p1, q1, p2, q2| f.g(p1, q1, p2, q2));
    keep_best(&mut best, ctx.solution(b1, b2)?);

    let (y, w, _) = ctx.d2.diameter();
    let mut on_path = ctx.t2.path(y, w);
    on_path.sort_unstable();
    let all1: Vec<usize> = (0..ctx.t1.len()).collect();
    let (b1, b2) = argmax_g(&all1, &on_path, |p1, q1, p2, q2| f.g_mirror(p1, q1, p2, q2));
    keep_best(&mut best, ctx.solution(b1, b2)?);

    Ok(best.unwrap())
}

/// First (lexicographic) `((p1, q1), (p2, q2))` with `p1 < p2`, `q1 != q2`
/// maximizing `g`.
fn argmax_g<G>(ps: &[usize], qs: &[usize], g: G) -> ((usize, usize), (usize, usize))
where
    G: Fn(usize, usize, usize, usize) -> Length,
{
    #[allow(clippy::type_complexity)]
    let mut best: Option<(Length, (usize, usize), (usize, usize))> = None;
    for (i, &p1) in ps.iter().enumerate() {
        for &p2 in &ps[i + 1..] {
            for &q1 in qs {
                for &q2 in qs {
                    if q1 == q2 {
                        continue;
                    }
                    let v = g(p1, q1, p2, q2);
                    if best.as_ref().is_none_or(|(bv, _, _)| v > *bv) {
                        best = Some((v, (p1, q1), (p2, q2)));
                    }
                }
            }
        }
    }
    let (_, b1, b2) = best.expect("at least two vertices on each side");
    (b1, b2)
}
