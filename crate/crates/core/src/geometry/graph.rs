use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::length::Length;

/// Undirected weighted adjacency lists.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    adj: Vec<Vec<(usize, Length)>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn add_edge(&mut self, u: usize, v: usize, w: Length) {
        self.adj[u].push((v, w.clone()));
        self.adj[v].push((u, w));
    }

    pub fn neighbors(&self, u: usize) -> &[(usize, Length)] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Single-source shortest paths; `None` marks unreachable vertices.
    pub fn dijkstra(&self, source: usize) -> Vec<Option<Length>> {
        let n = self.adj.len();
        let mut dist: Vec<Option<Length>> = vec![None; n];
        let mut done = vec![false; n];
        let mut heap = BinaryHeap::new();
        dist[source] = Some(Length::zero());
        heap.push(Reverse((Length::zero(), source)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if done[u] {
                continue;
            }
            done[u] = true;
            for (v, w) in &self.adj[u] {
                if done[*v] {
                    continue;
                }
                let cand = &d + w;
                let better = match &dist[*v] {
                    Some(cur) => cand < *cur,
                    None => true,
                };
                if better {
                    dist[*v] = Some(cand.clone());
                    heap.push(Reverse((cand, *v)));
                }
            }
        }
        dist
    }

    /// All-pairs shortest paths by one Dijkstra per source.
    pub fn all_pairs(&self) -> Vec<Vec<Option<Length>>> {
        (0..self.len()).map(|s| self.dijkstra(s)).collect()
    }
}
