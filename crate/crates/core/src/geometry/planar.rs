use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::geometry::graph::Graph;
use crate::geometry::point::{euclidean_distance, segments_intersect, Point};
use crate::geometry::tree::{Edge, WeightedTree};
use crate::length::{Backend, Length};

/// A straight-line graph embedded in the plane.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanarGraph {
    points: Vec<Point>,
    edges: Vec<Edge>,
    labels: Option<Vec<String>>,
}

impl PlanarGraph {
    /// Edge lengths are the Euclidean distances of their endpoints.
    pub fn geometric(points: Vec<Point>, pairs: &[(usize, usize)], backend: Backend) -> Result<Self> {
        let n = points.len();
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::IndexOutOfRange { index: u.max(v), n });
            }
            edges.push(Edge { u, v, length: euclidean_distance(&points[u], &points[v], backend) });
        }
        Self::from_edges(points, edges)
    }

    pub fn from_edges(points: Vec<Point>, edges: Vec<Edge>) -> Result<Self> {
        let n = points.len();
        let mut seen = HashSet::new();
        for e in &edges {
            if e.u >= n || e.v >= n {
                return Err(Error::IndexOutOfRange { index: e.u.max(e.v), n });
            }
            if e.u == e.v {
                return Err(Error::SelfLoop(e.u));
            }
            if e.length.is_negative() {
                return Err(Error::NegativeLength(e.u, e.v));
            }
            if !seen.insert((e.u.min(e.v), e.u.max(e.v))) {
                return Err(Error::DuplicateEdge(e.u, e.v));
            }
        }
        Ok(PlanarGraph { points, edges, labels: None })
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

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.len()];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.iter().any(|e| (e.u == u && e.v == v) || (e.u == v && e.v == u))
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| {
                if e.u == u {
                    Some(e.v)
                } else if e.v == u {
                    Some(e.u)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.len());
        for e in &self.edges {
            g.add_edge(e.u, e.v, e.length.clone());
        }
        g
    }

    /// The same graph with additional straight-line edges.
    pub fn with_extra_edges(&self, extra: &[(usize, usize, Length)]) -> Result<PlanarGraph> {
        let mut edges = self.edges.clone();
        edges.extend(extra.iter().map(|(u, v, l)| Edge { u: *u, v: *v, length: l.clone() }));
        let mut g = PlanarGraph::from_edges(self.points.clone(), edges)?;
        g.labels = self.labels.clone();
        Ok(g)
    }

    /// Connected after deleting `removed` (if any)?
    pub fn is_connected_without(&self, removed: Option<usize>) -> bool {
        let n = self.len();
        let start = match (0..n).find(|&v| Some(v) != removed) {
            Some(s) => s,
            None => return true,
        };
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if Some(v) != removed && !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n - usize::from(removed.is_some())
    }

    /// Connected with no articulation vertex (at least 3 vertices).
    pub fn is_two_connected(&self) -> bool {
        self.len() >= 3
            && self.is_connected_without(None)
            && (0..self.len()).all(|v| self.is_connected_without(Some(v)))
    }
}

impl From<&WeightedTree> for PlanarGraph {
    fn from(t: &WeightedTree) -> Self {
        PlanarGraph { points: t.points().to_vec(), edges: t.edges().to_vec(), labels: t.labels().map(|l| l.to_vec()) }
    }
}

/// Pairs of non-adjacent edges (by edge index, `i < j`) whose closed segments
/// intersect. O(m^2) exact segment tests.
pub fn validate_planar(g: &PlanarGraph) -> Vec<(usize, usize)> {
    let pts = g.points();
    let edges = g.edges();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = (&edges[i], &edges[j]);
            if a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v {
                continue;
            }
            if segments_intersect(&pts[a.u], &pts[a.v], &pts[b.u], &pts[b.v]) {
                out.push((i, j));
            }
        }
    }
    out
}
