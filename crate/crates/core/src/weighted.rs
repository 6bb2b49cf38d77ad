use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// An undirected edge `a < b` with a nonnegative integer weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedEdge {
    pub a: usize,
    pub b: usize,
    pub weight: u64,
}

/// Graph over opaque nodes `0..node_count` with weighted edges.
///
/// Edges are kept in insertion order; `edge_set` gives the canonical sorted view.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightedEdgeGraph {
    node_count: usize,
    edges: Vec<WeightedEdge>,
    lookup: BTreeMap<(usize, usize), usize>,
}

impl WeightedEdgeGraph {
    pub fn new(node_count: usize) -> Self {
        Self { node_count, ..Self::default() }
    }

    pub fn add_edge(&mut self, a: usize, b: usize, weight: u64) -> Result<()> {
        if a >= self.node_count || b >= self.node_count {
            return Err(Error::InvalidInput(format!("edge {a}-{b} outside 0..{}", self.node_count)));
        }
        if a == b {
            return Err(Error::InvalidInput(format!("self-loop on node {a}")));
        }
        let key = (a.min(b), a.max(b));
        if self.lookup.contains_key(&key) {
            return Err(Error::InvalidInput(format!("duplicate edge {}-{}", key.0, key.1)));
        }
        self.lookup.insert(key, self.edges.len());
        self.edges.push(WeightedEdge { a: key.0, b: key.1, weight });
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> &[WeightedEdge] {
        &self.edges
    }

    /// Sorted `(a, b, weight)` triples.
    pub fn edge_set(&self) -> Vec<(usize, usize, u64)> {
        self.lookup.iter().map(|(&(a, b), &i)| (a, b, self.edges[i].weight)).collect()
    }

    pub fn weight(&self, a: usize, b: usize) -> Option<u64> {
        self.lookup.get(&(a.min(b), a.max(b))).map(|&i| self.edges[i].weight)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.weight(a, b).is_some()
    }

    pub fn max_weight(&self) -> Option<u64> {
        self.edges.iter().map(|e| e.weight).max()
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.node_count == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.node_count];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        let mut seen = VertexSet::singleton(0);
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.len() == self.node_count
    }
}
