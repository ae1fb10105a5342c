use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::geometry::point::{euclidean_distance, Point};
use crate::length::{Backend, Length};

#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub length: Length,
}

impl Edge {
    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A geometric tree: points in the plane joined by weighted edges.
///
/// Unless the tree is flagged `explicit_weights`, every edge length equals the
/// Euclidean distance of its endpoints (exactly, or within the double
/// tolerance when the distance is irrational).
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedTree {
    points: Vec<Point>,
    edges: Vec<Edge>,
    labels: Option<Vec<String>>,
    explicit_weights: bool,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl WeightedTree {
    pub fn single(point: Point) -> Self {
        WeightedTree {
            points: vec![point],
            edges: Vec::new(),
            labels: None,
            explicit_weights: false,
            adjacency: vec![Vec::new()],
        }
    }

    /// Builds a tree whose edge lengths are the Euclidean distances of their endpoints.
    pub fn geometric(points: Vec<Point>, pairs: &[(usize, usize)], backend: Backend) -> Result<Self> {
        let n = points.len();
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            check_index(u, n)?;
            check_index(v, n)?;
            edges.push(Edge { u, v, length: euclidean_distance(&points[u], &points[v], backend) });
        }
        Self::assemble(points, edges, false)
    }

    /// Builds a tree with explicit edge weights that override geometry.
    pub fn weighted(points: Vec<Point>, edges: Vec<(usize, usize, Length)>) -> Result<Self> {
        let edges = edges.into_iter().map(|(u, v, length)| Edge { u, v, length }).collect();
        Self::assemble(points, edges, true)
    }

    /// Builds a tree from given lengths, checking them against geometry unless
    /// `explicit_weights` is set.
    pub fn from_parts(points: Vec<Point>, edges: Vec<Edge>, explicit_weights: bool) -> Result<Self> {
        if !explicit_weights {
            for e in &edges {
                check_index(e.u, points.len())?;
                check_index(e.v, points.len())?;
                let geometric = euclidean_distance(&points[e.u], &points[e.v], Backend::Rational);
                if !geometric.approx_eq(&e.length) {
                    return Err(Error::WeightMismatch {
                        u: e.u,
                        v: e.v,
                        weight: e.length.to_string(),
                        geometric: geometric.to_string(),
                    });
                }
            }
        }
        Self::assemble(points, edges, explicit_weights)
    }

    fn assemble(points: Vec<Point>, edges: Vec<Edge>, explicit_weights: bool) -> Result<Self> {
        let n = points.len();
        if n == 0 {
            return Err(Error::NotATree("no vertices".into()));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        for (i, e) in edges.iter().enumerate() {
            check_index(e.u, n)?;
            check_index(e.v, n)?;
            if e.u == e.v {
                return Err(Error::SelfLoop(e.u));
            }
            if e.length.is_negative() {
                return Err(Error::NegativeLength(e.u, e.v));
            }
            if !seen.insert((e.u.min(e.v), e.u.max(e.v))) {
                return Err(Error::DuplicateEdge(e.u, e.v));
            }
            adjacency[e.u].push((e.v, i));
            adjacency[e.v].push((e.u, i));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!("{} vertices need {} edges, found {}", n, n - 1, edges.len())));
        }
        let mut visited = vec![false; n];
        let mut stack = vec![0];
        visited[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &(v, _) in &adjacency[u] {
                if !visited[v] {
                    visited[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        if count != n {
            return Err(Error::NotATree(format!("disconnected: {count} of {n} vertices reachable from vertex 0")));
        }
        Ok(WeightedTree { points, edges, labels: None, explicit_weights, adjacency })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.points.len() {
            return Err(Error::InvalidInput(format!("{} labels for {} vertices", labels.len(), self.points.len())));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[(usize, usize)] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    /// Degree-1 vertices; the lone vertex of a single-vertex tree also counts.
    pub fn is_leaf(&self, u: usize) -> bool {
        self.len() == 1 || self.degree(u) == 1
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.len()).filter(|&u| self.is_leaf(u)).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of vertex `i`, or its index when unlabeled.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|x| x == label),
            None => label.parse().ok().filter(|&i: &usize| i < self.len()),
        }
    }

    pub fn explicit_weights(&self) -> bool {
        self.explicit_weights
    }

    pub fn all_lengths_exact(&self) -> bool {
        self.edges.iter().all(|e| e.length.is_exact())
    }

    /// Same tree with every length converted to `backend`.
    pub fn in_backend(&self, backend: Backend) -> WeightedTree {
        let mut t = self.clone();
        for e in &mut t.edges {
            e.length = e.length.in_backend(backend);
        }
        t
    }

    /// Single-source tree distances in O(n).
    pub fn distances_from(&self, source: usize) -> Vec<Length> {
        let n = self.len();
        let mut dist = vec![Length::zero(); n];
        let mut parent = vec![usize::MAX; n];
        let mut stack = vec![source];
        parent[source] = source;
        while let Some(u) = stack.pop() {
            for &(v, ei) in &self.adjacency[u] {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    dist[v] = &dist[u] + &self.edges[ei].length;
                    stack.push(v);
                }
            }
        }
        dist
    }

    /// Vertices on the unique path from `from` to `to`, both included.
    pub fn path(&self, from: usize, to: usize) -> Vec<usize> {
        let n = self.len();
        let mut parent = vec![usize::MAX; n];
        parent[from] = from;
        let mut stack = vec![from];
        while let Some(u) = stack.pop() {
            if u == to {
                break;
            }
            for &(v, _) in &self.adjacency[u] {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    stack.push(v);
                }
            }
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// Side of each vertex after deleting edge `edge`: `true` for the
    /// component containing the edge's `u` endpoint.
    pub fn split_sides(&self, edge: usize) -> Vec<bool> {
        let e = &self.edges[edge];
        let mut side = vec![false; self.len()];
        side[e.u] = true;
        let mut stack = vec![e.u];
        while let Some(u) = stack.pop() {
            for &(v, ei) in &self.adjacency[u] {
                if ei != edge && !side[v] {
                    side[v] = true;
                    stack.push(v);
                }
            }
        }
        side
    }

    /// Diameter length by two sweeps; O(n), no tie-breaking information.
    pub fn diameter_length(&self) -> Length {
        let d0 = self.distances_from(0);
        let far = argmax(&d0);
        let d1 = self.distances_from(far);
        d1.into_iter().max().unwrap_or_default()
    }
}

fn argmax(values: &[Length]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate() {
        if *v > values[best] {
            best = i;
        }
    }
    best
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i >= n {
        Err(Error::IndexOutOfRange { index: i, n })
    } else {
        Ok(())
    }
}
