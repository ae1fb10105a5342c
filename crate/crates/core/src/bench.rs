//! Wall-clock scaling of the solvers on random tree pairs.

use std::time::Instant;

use serde::Serialize;

use crate::bridge::{approx_greedy, solve_exact};
use crate::generate::{gen_random_tree, BBox};
use crate::twin::solve_twin;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    SolveExact,
    ApproxGreedy,
    SolveTwin,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::SolveExact => "solve_exact",
            Algorithm::ApproxGreedy => "approx_greedy",
            Algorithm::SolveTwin => "solve_twin",
        }
    }

    /// Size grid used by `bench` when none is given.
    pub fn default_sizes(self) -> Vec<usize> {
        match self {
            Algorithm::SolveExact | Algorithm::ApproxGreedy => vec![100, 200, 400, 800],
            Algorithm::SolveTwin => vec![10, 20, 30, 40],
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub algorithm: Algorithm,
    pub n: usize,
    pub median_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchTable {
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of log(time) against log(n), per algorithm.
    pub exponents: Vec<(Algorithm, f64)>,
}

/// Slope of the least-squares line through `(ln x, ln y)`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.max(1e-9).ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len().is_multiple_of(2) {
        (v[m - 1] + v[m]) / 2.0
    } else {
        v[m]
    }
}

/// Times `algorithm` on a pair of random `n`-vertex trees for every size and
/// seed; reports the median per size.
pub fn bench(algorithms: &[Algorithm], sizes: Option<&[usize]>, seeds: &[u64]) -> BenchTable {
    let bbox = BBox::default();
    let mut rows = Vec::new();
    let mut exponents = Vec::new();
    for &alg in algorithms {
        let grid = sizes.map_or_else(|| alg.default_sizes(), <[usize]>::to_vec);
        let mut fit = Vec::new();
        for &n in &grid {
            let times = seeds
                .iter()
                .map(|&seed| {
                    let t1 = gen_random_tree(n, 2 * seed, &bbox);
                    let t2 = gen_random_tree(n, 2 * seed + 1, &bbox);
                    let start = Instant::now();
                    match alg {
                        Algorithm::SolveExact => drop(solve_exact(&t1, &t2)),
                        Algorithm::ApproxGreedy => drop(approx_greedy(&t1, &t2)),
                        Algorithm::SolveTwin => drop(solve_twin(&t1, &t2)),
                    }
                    start.elapsed().as_secs_f64() * 1e3
                })
                .collect();
            let median_ms = median(times);
            fit.push((n as f64, median_ms));
            rows.push(BenchRow { algorithm: alg, n, median_ms });
        }
        if fit.len() >= 2 {
            exponents.push((alg, loglog_slope(&fit)));
        }
    }
    BenchTable { rows, exponents }
}
