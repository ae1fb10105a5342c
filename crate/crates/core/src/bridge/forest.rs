use serde::Serialize;

use crate::bridge::infer_backend;
use crate::error::{Error, Result};
use crate::geometry::{euclidean_distance, DistanceTable, Edge, WeightedTree};
use crate::length::Length;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ForestBridge {
    /// `(tree index, vertex index)` of each endpoint.
    pub from: (usize, usize),
    pub to: (usize, usize),
    pub length: Length,
}

#[derive(Clone, Debug, Serialize)]
pub struct ForestConnection {
    pub hub: usize,
    pub bridges: Vec<ForestBridge>,
    pub diameter: Length,
    /// Vertex `v` of tree `i` is vertex `offsets[i] + v` of `tree`.
    pub offsets: Vec<usize>,
    #[serde(skip)]
    pub tree: WeightedTree,
}

/// Joins `k` trees with `k - 1` bridges, center to center around a hub tree.
///
/// Every tree is tried as the hub and the smallest resulting diameter wins
/// (ties to the smaller hub index).
pub fn connect_forest(trees: &[WeightedTree]) -> Result<ForestConnection> {
    if trees.len() < 2 {
        return Err(Error::InvalidInput("connect_forest needs at least two trees".into()));
    }
    let centers: Vec<usize> = trees.iter().map(|t| DistanceTable::build(t).center()).collect();
    let mut best: Option<ForestConnection> = None;
    for hub in 0..trees.len() {
        let bridges: Vec<(usize, usize, usize, usize)> =
            (0..trees.len()).filter(|&i| i != hub).map(|i| (hub, centers[hub], i, centers[i])).collect();
        let joined = join_trees(trees, &bridges)?;
        if best.as_ref().is_none_or(|b| joined.diameter < b.diameter) {
            best = Some(ForestConnection { hub, ..joined });
        }
    }
    Ok(best.unwrap())
}

/// Merges `trees` with the given `(tree, vertex, tree, vertex)` bridges into one tree.
pub fn join_trees(trees: &[WeightedTree], bridges: &[(usize, usize, usize, usize)]) -> Result<ForestConnection> {
    let refs: Vec<&WeightedTree> = trees.iter().collect();
    let backend = infer_backend(&refs);
    let mut offsets = Vec::with_capacity(trees.len());
    let mut points = Vec::new();
    let mut edges = Vec::new();
    for t in trees {
        let off = points.len();
        offsets.push(off);
        points.extend_from_slice(t.points());
        edges.extend(t.edges().iter().map(|e| Edge { u: e.u + off, v: e.v + off, length: e.length.clone() }));
    }
    let mut out = Vec::with_capacity(bridges.len());
    for &(ti, u, tj, v) in bridges {
        let length = euclidean_distance(trees[ti].point(u), trees[tj].point(v), backend);
        edges.push(Edge { u: offsets[ti] + u, v: offsets[tj] + v, length: length.clone() });
        out.push(ForestBridge { from: (ti, u), to: (tj, v), length });
    }
    let explicit = trees.iter().any(|t| t.explicit_weights());
    let tree = WeightedTree::from_parts(points, edges, explicit)?;
    let diameter = tree.diameter_length();
    Ok(ForestConnection { hub: 0, bridges: out, diameter, offsets, tree })
}
