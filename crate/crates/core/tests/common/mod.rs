//! Oracles shared by the integration and acceptance tests. None of them call
//! the library routine they check.
#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use bridgeworks::geometry::{Graph, PlanarGraph, WeightedTree};
use bridgeworks::reductions::{CovInstance, OneInThreeSat};
use bridgeworks::Length;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

/// `T1 + T2 + pq` as one graph; T2 vertices are offset by `t1.len()`.
pub fn joined_graph(t1: &WeightedTree, t2: &WeightedTree, bridges: &[(usize, usize, Length)]) -> Graph {
    let off = t1.len();
    let mut g = Graph::new(off + t2.len());
    for e in t1.edges() {
        g.add_edge(e.u, e.v, e.length.clone());
    }
    for e in t2.edges() {
        g.add_edge(off + e.u, off + e.v, e.length.clone());
    }
    for (p, q, l) in bridges {
        g.add_edge(*p, off + q, l.clone());
    }
    g
}

pub fn bridge_length(t1: &WeightedTree, t2: &WeightedTree, p: usize, q: usize) -> Length {
    bridgeworks::geometry::euclidean_distance(t1.point(p), t2.point(q), bridgeworks::Backend::Rational)
}

/// Heap Dijkstra on non-negative integer weights.
fn dijkstra_int(adj: &[Vec<(usize, BigInt)>], source: usize) -> Vec<BigInt> {
    let mut dist: Vec<Option<BigInt>> = vec![None; adj.len()];
    let mut heap = BinaryHeap::new();
    dist[source] = Some(BigInt::from(0));
    heap.push(Reverse((BigInt::from(0), source)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if dist[u].as_ref().is_some_and(|cur| d > *cur) {
            continue;
        }
        for (v, w) in &adj[u] {
            let cand = &d + w;
            if dist[*v].as_ref().is_none_or(|cur| cand < *cur) {
                dist[*v] = Some(cand.clone());
                heap.push(Reverse((cand, *v)));
            }
        }
    }
    dist.into_iter().map(|d| d.expect("connected")).collect()
}

/// Longest shortest path between a T1 vertex and a T2 vertex after adding
/// bridge `pq`, by Dijkstra from every vertex of the smaller tree. Exact
/// weights only: they are scaled to integers by the lcm of their denominators.
pub fn bridge_value_by_dijkstra(t1: &WeightedTree, t2: &WeightedTree, p: usize, q: usize) -> Length {
    let n1 = t1.len();
    let bridge = bridge_length(t1, t2, p, q);
    let edges = t1.edges().iter().map(|e| (e.u, e.v, &e.length));
    let edges = edges.chain(t2.edges().iter().map(|e| (n1 + e.u, n1 + e.v, &e.length)));
    let edges: Vec<(usize, usize, &BigRational)> =
        edges.chain([(p, n1 + q, &bridge)]).map(|(u, v, l)| (u, v, l.as_exact().expect("exact instance"))).collect();
    let scale = edges.iter().fold(BigInt::from(1), |acc, (_, _, w)| acc.lcm(w.denom()));
    let mut adj = vec![Vec::new(); n1 + t2.len()];
    for (u, v, w) in edges {
        let w = (w * &scale).to_integer();
        adj[u].push((v, w.clone()));
        adj[v].push((u, w));
    }
    let (sources, targets) = if n1 <= t2.len() { (0..n1, n1..adj.len()) } else { (n1..adj.len(), 0..n1) };
    let mut worst = BigInt::from(0);
    for x in sources {
        let d = dijkstra_int(&adj, x);
        for dy in &d[targets.clone()] {
            if *dy > worst {
                worst = dy.clone();
            }
        }
    }
    Length::Exact(BigRational::new(worst, scale))
}

/// Optimum over all bridges of [`bridge_value_by_dijkstra`].
pub fn optimal_bridge_by_dijkstra(t1: &WeightedTree, t2: &WeightedTree) -> Length {
    let mut best: Option<Length> = None;
    for p in 0..t1.len() {
        for q in 0..t2.len() {
            let v = bridge_value_by_dijkstra(t1, t2, p, q);
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
    }
    best.unwrap()
}

/// Second One-in-Three SAT solver: recursive assignment with clause pruning.
pub fn sat_by_backtracking(phi: &OneInThreeSat) -> bool {
    fn go(phi: &OneInThreeSat, assign: &mut Vec<Option<bool>>, v: usize) -> bool {
        for c in &phi.clauses {
            let (mut t, mut open) = (0, 0);
            for &lit in c {
                match assign[lit.unsigned_abs() as usize] {
                    Some(val) if val == (lit > 0) => t += 1,
                    Some(_) => {}
                    None => open += 1,
                }
            }
            if t > 1 || t + open == 0 {
                return false;
            }
        }
        if v > phi.n {
            return true;
        }
        for val in [false, true] {
            assign[v] = Some(val);
            if go(phi, assign, v + 1) {
                return true;
            }
        }
        assign[v] = None;
        false
    }
    go(phi, &mut vec![None; phi.n + 1], 1)
}

/// Second COV check: digitwise sum of binary vectors is all ones.
pub fn cov_by_rescan(inst: &CovInstance) -> bool {
    inst.a.iter().any(|u| {
        inst.b.iter().any(|v| u.entries().iter().zip(v.entries()).all(|(&x, &y)| x <= 1 && y <= 1 && x + y == 1))
    })
}

/// Second vertex cover solver: bitmask scan, minimum over all covers.
pub fn min_cover_by_bitmask(g: &PlanarGraph) -> usize {
    let n = g.len();
    (0u32..1 << n)
        .filter(|mask| g.edges().iter().all(|e| mask >> e.u & 1 == 1 || mask >> e.v & 1 == 1))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

/// All 3-literal clauses over `n` variables with literals sorted, as multisets.
pub fn all_clauses(n: usize) -> Vec<[i32; 3]> {
    let lits: Vec<i32> = (1..=n as i32).flat_map(|v| [v, -v]).collect();
    let mut out = Vec::new();
    for i in 0..lits.len() {
        for j in i..lits.len() {
            for k in j..lits.len() {
                out.push([lits[i], lits[j], lits[k]]);
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per orbit of `m`-clause formulas over `n` variables
/// under variable renaming and negation, clause order and literal order.
pub fn formulas_up_to_symmetry(n: usize, m: usize) -> Vec<OneInThreeSat> {
    let clauses = all_clauses(n);
    let index: std::collections::HashMap<[i32; 3], usize> = clauses.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    // image of every clause under every symmetry
    let mut maps: Vec<Vec<usize>> = Vec::new();
    for perm in permutations(n) {
        for flips in 0u32..1 << n {
            let map = clauses
                .iter()
                .map(|c| {
                    let mut img = c.map(|lit| {
                        let v = lit.unsigned_abs() as usize - 1;
                        let sign = if flips >> v & 1 == 1 { -lit.signum() } else { lit.signum() };
                        sign * (perm[v] as i32 + 1)
                    });
                    img.sort_by_key(|&l| (l.unsigned_abs(), l < 0));
                    index[&img]
                })
                .collect();
            maps.push(map);
        }
    }
    let mut reps = Vec::new();
    let mut combo: Vec<usize> = vec![0; m];
    // nondecreasing index sequences = clause multisets
    loop {
        let canonical = maps.iter().all(|map| {
            let mut img: Vec<usize> = combo.iter().map(|&c| map[c]).collect();
            img.sort_unstable();
            img >= combo
        });
        if canonical {
            let cl = combo.iter().map(|&c| clauses[c]).collect();
            reps.push(OneInThreeSat::new(n, cl).unwrap());
        }
        let mut pos = m;
        loop {
            if pos == 0 {
                return reps;
            }
            pos -= 1;
            if combo[pos] + 1 < clauses.len() {
                combo[pos] += 1;
                for j in pos + 1..m {
                    combo[j] = combo[pos];
                }
                break;
            }
        }
    }
}

/// Seeded random formula with `m` clauses over `n` variables.
pub fn random_formula(n: usize, m: usize, seed: u64) -> OneInThreeSat {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let clauses = (0..m)
        .map(|_| {
            [0; 3].map(|_| {
                let v = rng.gen_range(1..=n as i32);
                if rng.gen_bool(0.5) {
                    v
                } else {
                    -v
                }
            })
        })
        .collect();
    OneInThreeSat::new(n, clauses).unwrap()
}

/// Depth of the path for a binary or ternary vector, summed independently.
pub fn depth(u: &[u8]) -> BigRational {
    let third = BigRational::new(1.into(), 3.into());
    let mut pow = BigRational::from_integer(1.into());
    let mut sum = BigRational::from_integer(0.into());
    for &e in u {
        match e {
            0 => sum += &pow,
            1 => {}
            _ => sum += BigRational::from_integer(4.into()),
        }
        pow *= &third;
    }
    sum
}

/// Optimal diameter over every way of joining `trees` with `k - 1` bridges,
/// in doubles: every labelled tree on the `k` trees (Prüfer sequences) and
/// every endpoint choice per bridge.
pub fn forest_optimum(trees: &[WeightedTree]) -> f64 {
    let k = trees.len();
    let offsets: Vec<usize> = trees
        .iter()
        .scan(0, |acc, t| {
            let o = *acc;
            *acc += t.len();
            Some(o)
        })
        .collect();
    let total: usize = trees.iter().map(|t| t.len()).sum();
    let coords: Vec<Vec<(f64, f64)>> = trees.iter().map(|t| t.points().iter().map(|p| p.to_f64()).collect()).collect();
    let mut base: Vec<Vec<(usize, f64)>> = vec![Vec::new(); total];
    for (i, t) in trees.iter().enumerate() {
        for e in t.edges() {
            let w = e.length.to_f64();
            base[offsets[i] + e.u].push((offsets[i] + e.v, w));
            base[offsets[i] + e.v].push((offsets[i] + e.u, w));
        }
    }
    let mut best = f64::INFINITY;
    for code in prufer_sequences(k) {
        let links = prufer_decode(&code, k);
        let sizes: Vec<usize> = links.iter().map(|&(a, b)| trees[a].len() * trees[b].len()).collect();
        let mut choice = vec![0usize; links.len()];
        loop {
            let mut adj = base.clone();
            for (l, &(a, b)) in links.iter().enumerate() {
                let (u, v) = (choice[l] / trees[b].len(), choice[l] % trees[b].len());
                let (pu, pv) = (coords[a][u], coords[b][v]);
                let w = (pu.0 - pv.0).hypot(pu.1 - pv.1);
                adj[offsets[a] + u].push((offsets[b] + v, w));
                adj[offsets[b] + v].push((offsets[a] + u, w));
            }
            best = best.min(tree_diameter_f64(&adj));
            let mut pos = links.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                choice[pos] += 1;
                if choice[pos] < sizes[pos] {
                    break;
                }
                choice[pos] = 0;
            }
            if choice.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    best
}

fn prufer_sequences(k: usize) -> Vec<Vec<usize>> {
    let len = k.saturating_sub(2);
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                (0..k).map(move |x| {
                    let mut t = s.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

fn prufer_decode(code: &[usize], k: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1; k];
    code.iter().for_each(|&x| degree[x] += 1);
    let mut edges = Vec::new();
    for &x in code {
        let leaf = (0..k).find(|&i| degree[i] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..k).filter(|&i| degree[i] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn farthest(adj: &[Vec<(usize, f64)>], s: usize) -> (usize, f64) {
    let mut dist = vec![f64::NAN; adj.len()];
    dist[s] = 0.0;
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        for &(v, w) in &adj[u] {
            if dist[v].is_nan() {
                dist[v] = dist[u] + w;
                stack.push(v);
            }
        }
    }
    dist.iter().enumerate().fold((s, 0.0), |acc, (i, &d)| if d > acc.1 { (i, d) } else { acc })
}

/// Double-sweep diameter of a weighted tree.
pub fn tree_diameter_f64(adj: &[Vec<(usize, f64)>]) -> f64 {
    let (a, _) = farthest(adj, 0);
    farthest(adj, a).1
}
