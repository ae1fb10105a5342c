use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::FromPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{euclidean_distance, validate_planar, Graph, PlanarGraph, Point};
use crate::length::{Backend, Length};

/// Largest number of shortcut subsets [`rdbp_brute_force`] enumerates.
pub const SUBSET_LIMIT: u128 = 1_000_000;

/// Largest vertex count [`vertex_cover_brute_force`] accepts.
pub const VC_LIMIT: usize = 20;

/// Reducing distances between pairs: insert `budget` shortcuts so that every
/// pair gets strictly closer.
#[derive(Clone, Debug)]
pub struct RdbpInstance {
    pub graph: PlanarGraph,
    pub pairs: Vec<(usize, usize)>,
    pub budget: usize,
    /// Insertable edges, one per original vertex, in vertex order.
    pub candidates: Vec<(usize, usize, Length)>,
    /// Per original vertex: `(u1, u2, u3)` with `u2` at the original position,
    /// `u3` the gadget's middle vertex and `u1` its tip.
    pub gadgets: Vec<[usize; 3]>,
    pub eps: f64,
}

/// Serializable summary of an [`RdbpInstance`].
#[derive(Clone, Debug, Serialize)]
pub struct RdbpSummary {
    pub vertices: usize,
    pub edges: usize,
    pub pairs: usize,
    pub candidates: usize,
    pub budget: usize,
    pub max_degree: usize,
    pub eps: f64,
}

impl RdbpInstance {
    pub fn summary(&self) -> RdbpSummary {
        RdbpSummary {
            vertices: self.graph.len(),
            edges: self.graph.edges().len(),
            pairs: self.pairs.len(),
            candidates: self.candidates.len(),
            budget: self.budget,
            max_degree: self.graph.max_degree(),
            eps: self.eps,
        }
    }

    /// `G'` plus the chosen candidate shortcuts.
    pub fn with_shortcuts(&self, chosen: &[usize]) -> Result<PlanarGraph> {
        let extra: Vec<_> = chosen.iter().map(|&c| self.candidates[c].clone()).collect();
        self.graph.with_extra_edges(&extra)
    }
}

/// Smallest distance between a vertex and another vertex or a non-incident edge.
fn min_feature_distance(g: &PlanarGraph) -> f64 {
    let pts: Vec<(f64, f64)> = g.points().iter().map(Point::to_f64).collect();
    let mut best = f64::INFINITY;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            best = best.min((pts[i].0 - pts[j].0).hypot(pts[i].1 - pts[j].1));
        }
        for e in g.edges() {
            if e.u != i && e.v != i {
                best = best.min(point_segment_distance(pts[i], pts[e.u], pts[e.v]));
            }
        }
    }
    best
}

fn point_segment_distance(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 { 0.0 } else { (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0) };
    (p.0 - a.0 - t * dx).hypot(p.1 - a.1 - t * dy)
}

/// Rounds to the grid of spacing `10^-digits`.
fn rational_point(x: f64, y: f64, digits: u32) -> Point {
    let scale = 10f64.powi(digits as i32);
    let r = |v: f64| {
        let scaled = BigInt::from_f64((v * scale).round()).expect("finite coordinate");
        BigRational::new(scaled, num_traits::pow(BigInt::from(10), digits as usize))
    };
    Point::new(r(x), r(y))
}

/// Checks the input is a cubic, 2-connected, crossing-free embedding.
pub fn validate_cubic_planar(g: &PlanarGraph) -> Result<()> {
    for (vertex, &degree) in g.degrees().iter().enumerate() {
        if degree != 3 {
            return Err(Error::NotCubic { vertex, degree });
        }
    }
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected("some vertex is an articulation point".into()));
    }
    let crossings = validate_planar(g);
    if !crossings.is_empty() {
        return Err(Error::NonPlanar(crossings.len()));
    }
    Ok(())
}

/// Builds the gadget graph `G'` from a cubic planar 2-connected embedding.
///
/// Each vertex `u` keeps its position as `u2`; a two-edge path `u2 - u3 - u1`
/// of edge length `eps` each way is placed inside the widest angle between
/// the three incident edges, and every original edge is subdivided by two
/// padding vertices. The pair for edge `(u, x)` is `(u1, x1)`. Leaving `u1`
/// costs `eps + |u1 u3|` unless the shortcut `(u1, u2)` of length `eps` is
/// present, so the pair gets closer exactly when a shortcut sits at `u` or
/// `x`, i.e. when the chosen vertices cover the edge.
///
/// Indices: original vertex `u` is `u2 = u`; `u3 = n + 2u`, `u1 = n + 2u + 1`;
/// the padding vertices of edge `e` are `3n + 2e` and `3n + 2e + 1`.
pub fn vc_to_rdbp(g: &PlanarGraph, budget: usize) -> Result<RdbpInstance> {
    validate_cubic_planar(g)?;
    let n = g.len();
    let eps = min_feature_distance(g) / 4.0;
    // six significant digits below eps
    let digits = (6 - eps.log10().floor() as i32).max(0) as u32;

    let mut points: Vec<Point> = g.points().to_vec();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut gadgets = Vec::with_capacity(n);
    let mut gadget_points = Vec::with_capacity(2 * n);
    for u in 0..n {
        let (ux, uy) = g.points()[u].to_f64();
        let mut angles: Vec<f64> = g
            .neighbors(u)
            .iter()
            .map(|&x| {
                let (xx, xy) = g.points()[x].to_f64();
                (xy - uy).atan2(xx - ux)
            })
            .collect();
        angles.sort_by(f64::total_cmp);
        let (mut start, mut width) = (angles[2], angles[0] + std::f64::consts::TAU - angles[2]);
        for w in angles.windows(2) {
            if w[1] - w[0] > width {
                (start, width) = (w[0], w[1] - w[0]);
            }
        }
        let at = |frac: f64| {
            let a = start + width * frac;
            rational_point(ux + eps * a.cos(), uy + eps * a.sin(), digits)
        };
        gadget_points.push(at(1.0 / 3.0));
        gadget_points.push(at(2.0 / 3.0));
        gadgets.push([n + 2 * u + 1, u, n + 2 * u]);
        edges.push((u, n + 2 * u));
        edges.push((n + 2 * u, n + 2 * u + 1));
    }
    points.extend(gadget_points);

    for (i, e) in g.edges().iter().enumerate() {
        let (a, b) = (&g.points()[e.u], &g.points()[e.v]);
        let third = |k: i64| {
            let k = BigRational::from_integer(k.into()) / BigRational::from_integer(3.into());
            Point::new(&a.x + (&b.x - &a.x) * &k, &a.y + (&b.y - &a.y) * &k)
        };
        points.push(third(1));
        points.push(third(2));
        let (p, q) = (3 * n + 2 * i, 3 * n + 2 * i + 1);
        edges.extend([(e.u, p), (p, q), (q, e.v)]);
    }

    let graph = PlanarGraph::geometric(points, &edges, Backend::Rational)?;
    let mut candidates = Vec::with_capacity(n);
    for gadget in &gadgets {
        let [u1, u2, u3] = *gadget;
        let direct = euclidean_distance(&graph.points()[u1], &graph.points()[u2], Backend::Rational);
        let around = &euclidean_distance(&graph.points()[u1], &graph.points()[u3], Backend::Rational)
            + &euclidean_distance(&graph.points()[u3], &graph.points()[u2], Backend::Rational);
        let detour = around.to_f64() - direct.to_f64();
        if detour < eps / 2.0 {
            return Err(Error::InvalidInput(format!("gadget at vertex {u2}: detour {detour} below eps/2")));
        }
        candidates.push((u1, u2, direct));
    }
    let pairs = g.edges().iter().map(|e| (gadgets[e.u][0], gadgets[e.v][0])).collect();
    Ok(RdbpInstance { graph, pairs, budget, candidates, gadgets, eps })
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// Advances a sorted `k`-subset of `0..n` to the next one in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn pair_distances(g: &Graph, pairs: &[(usize, usize)]) -> Vec<Option<Length>> {
    let mut cache: Vec<Option<Vec<Option<Length>>>> = vec![None; g.len()];
    pairs.iter().map(|&(s, t)| cache[s].get_or_insert_with(|| g.dijkstra(s))[t].clone()).collect()
}

fn all_decrease(before: &[Option<Length>], after: &[Option<Length>]) -> bool {
    before.iter().zip(after).all(|(b, a)| match (b, a) {
        (Some(b), Some(a)) => a.definitely_lt(b),
        (None, Some(_)) => true,
        _ => false,
    })
}

/// First (lexicographic) `budget`-subset of candidate indices that strictly
/// shortens every pair, or `None`.
pub fn rdbp_brute_force(inst: &RdbpInstance) -> Result<Option<Vec<usize>>> {
    rdbp_with_budget(inst, inst.budget)
}

fn rdbp_with_budget(inst: &RdbpInstance, k: usize) -> Result<Option<Vec<usize>>> {
    let c = inst.candidates.len();
    if k > c {
        return Ok(None);
    }
    let count = binomial(c, k);
    if count > SUBSET_LIMIT {
        return Err(Error::SizeGuard(format!("{count} shortcut subsets (limit {SUBSET_LIMIT})")));
    }
    let base = inst.graph.to_graph();
    let before = pair_distances(&base, &inst.pairs);
    let mut chosen: Vec<usize> = (0..k).collect();
    loop {
        let mut g = base.clone();
        for &i in &chosen {
            let (u, v, ref w) = inst.candidates[i];
            g.add_edge(u, v, w.clone());
        }
        if all_decrease(&before, &pair_distances(&g, &inst.pairs)) {
            return Ok(Some(chosen));
        }
        if !next_combination(&mut chosen, c) {
            return Ok(None);
        }
    }
}

/// Smallest budget admitting a solution, with its first witness.
pub fn rdbp_min_budget(inst: &RdbpInstance) -> Result<(usize, Vec<usize>)> {
    for k in 0..=inst.candidates.len() {
        if let Some(w) = rdbp_with_budget(inst, k)? {
            return Ok((k, w));
        }
    }
    Err(Error::InvalidInput("no shortcut subset shortens every pair".into()))
}

/// A vertex cover of size at most `k`, scanning sizes upward, so the witness
/// has minimum size.
pub fn vertex_cover_brute_force(g: &PlanarGraph, k: usize) -> Result<Option<Vec<usize>>> {
    let n = g.len();
    if n > VC_LIMIT {
        return Err(Error::SizeGuard(format!("{n} vertices (limit {VC_LIMIT})")));
    }
    for size in 0..=k.min(n) {
        let mut c: Vec<usize> = (0..size).collect();
        loop {
            let mut inside = vec![false; n];
            c.iter().for_each(|&v| inside[v] = true);
            if g.edges().iter().all(|e| inside[e.u] || inside[e.v]) {
                return Ok(Some(c));
            }
            if !next_combination(&mut c, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Minimum vertex cover size.
pub fn min_vertex_cover(g: &PlanarGraph) -> Result<usize> {
    Ok(vertex_cover_brute_force(g, g.len())?.map_or(0, |c| c.len()))
}

/// K4 drawn as a triangle around its center.
pub fn k4_embedding() -> PlanarGraph {
    let pts = [(0, 0), (6, 0), (3, 6), (3, 2)].map(|(x, y)| Point::from_ints(x, y)).to_vec();
    PlanarGraph::geometric(pts, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)], Backend::Rational).expect("valid K4")
}

/// Triangular prism drawn as nested triangles.
pub fn prism_embedding() -> PlanarGraph {
    let pts = [(0, 0), (12, 0), (6, 10), (4, 2), (8, 2), (6, 6)].map(|(x, y)| Point::from_ints(x, y)).to_vec();
    let edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)];
    PlanarGraph::geometric(pts, &edges, Backend::Rational).expect("valid prism")
}
