use crate::geometry::tree::WeightedTree;
use crate::length::Length;

/// All-pairs tree distances with per-vertex eccentricities.
#[derive(Clone, Debug)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<Length>,
    ecc: Vec<Length>,
    ecc_witness: Vec<usize>,
    diameter: (usize, usize, Length),
}

impl DistanceTable {
    /// One O(n) traversal per source; O(n^2) overall.
    pub fn build(tree: &WeightedTree) -> Self {
        let n = tree.len();
        let mut dist = Vec::with_capacity(n * n);
        let mut ecc = Vec::with_capacity(n);
        let mut ecc_witness = Vec::with_capacity(n);
        for u in 0..n {
            let row = tree.distances_from(u);
            let mut best = 0;
            for v in 1..n {
                if row[v] > row[best] {
                    best = v;
                }
            }
            ecc.push(row[best].clone());
            ecc_witness.push(best);
            dist.extend(row);
        }

        let leaves = tree.leaves();
        let mut diameter = (0, 0, Length::zero());
        if n >= 2 {
            let mut found = false;
            for (i, &x) in leaves.iter().enumerate() {
                for &z in &leaves[i + 1..] {
                    let d = &dist[x * n + z];
                    if !found || *d > diameter.2 {
                        diameter = (x, z, d.clone());
                        found = true;
                    }
                }
            }
        }
        DistanceTable { n, dist, ecc, ecc_witness, diameter }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> &Length {
        &self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Length] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn eccentricity(&self, u: usize) -> &Length {
        &self.ecc[u]
    }

    pub fn eccentricities(&self) -> &[Length] {
        &self.ecc
    }

    /// Smallest-index vertex realizing the eccentricity of `u`.
    pub fn farthest(&self, u: usize) -> usize {
        self.ecc_witness[u]
    }

    /// Diameter endpoints (leaves, lexicographically smallest pair) and length.
    pub fn diameter(&self) -> (usize, usize, &Length) {
        (self.diameter.0, self.diameter.1, &self.diameter.2)
    }

    /// Minimum-eccentricity vertex, smallest index on ties.
    pub fn center(&self) -> usize {
        let mut best = 0;
        for u in 1..self.n {
            if self.ecc[u] < self.ecc[best] {
                best = u;
            }
        }
        best
    }
}

/// Diameter of `t` as a leaf pair, ties broken lexicographically.
pub fn tree_diameter(t: &WeightedTree) -> (usize, usize, Length) {
    let table = DistanceTable::build(t);
    let (x, z, d) = table.diameter();
    (x, z, d.clone())
}
