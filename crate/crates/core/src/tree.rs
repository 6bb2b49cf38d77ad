use crate::error::{Error, Result};
use crate::set::VertexSet;

/// An edge of a [`LabeledSetTree`]; `label` is the intersection of its endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub label: VertexSet,
}

impl TreeEdge {
    pub fn other(&self, x: usize) -> usize {
        if self.a == x {
            self.b
        } else {
            self.a
        }
    }
}

/// A tree whose nodes are vertex sets and whose edges carry the intersection
/// of their endpoints. Clique trees, atom trees and join trees all use it.
///
/// The empty tree (no nodes) is allowed so that empty inputs stay total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledSetTree {
    nodes: Vec<VertexSet>,
    edges: Vec<TreeEdge>,
    /// node -> (neighbor, edge index), in edge insertion order
    incidence: Vec<Vec<(usize, usize)>>,
}

impl LabeledSetTree {
    /// Builds the tree on `nodes` with the given node pairs as edges.
    ///
    /// Fails unless the pairs form a spanning tree and the nodes are pairwise
    /// distinct. Labels are computed here.
    pub fn new(nodes: Vec<VertexSet>, pairs: &[(usize, usize)]) -> Result<Self> {
        let p = nodes.len();
        let mut sorted = nodes.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("tree nodes must be pairwise distinct".into()));
        }
        if p > 0 && pairs.len() != p - 1 || p == 0 && !pairs.is_empty() {
            return Err(Error::InvalidInput(format!("a tree on {p} nodes needs {} edges, got {}", p.saturating_sub(1), pairs.len())));
        }
        let mut incidence = vec![Vec::new(); p];
        let mut edges = Vec::with_capacity(pairs.len());
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if a >= p || b >= p || a == b {
                return Err(Error::InvalidInput(format!("bad tree edge {a}-{b}")));
            }
            let (a, b) = (a.min(b), a.max(b));
            edges.push(TreeEdge { a, b, label: nodes[a].intersection(&nodes[b]) });
            incidence[a].push((b, i));
            incidence[b].push((a, i));
        }
        let t = Self { nodes, edges, incidence };
        if p > 0 && t.reachable_from(0).len() != p {
            return Err(Error::InvalidInput("tree edges do not connect all nodes".into()));
        }
        Ok(t)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> &[VertexSet] {
        &self.nodes
    }

    pub fn node(&self, x: usize) -> &VertexSet {
        &self.nodes[x]
    }

    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &TreeEdge {
        &self.edges[e]
    }

    /// `(neighbor, edge index)` pairs of node `x`.
    pub fn incident(&self, x: usize) -> &[(usize, usize)] {
        &self.incidence[x]
    }

    pub fn edge_between(&self, x: usize, y: usize) -> Option<usize> {
        self.incidence[x].iter().find(|&&(z, _)| z == y).map(|&(_, e)| e)
    }

    /// Sorted node pairs `(a, b)`, `a < b`.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.edges.iter().map(|e| (e.a, e.b)).collect();
        v.sort();
        v
    }

    /// Edge indices on the tree path from `x` to `y`, in walking order.
    pub fn path_edges(&self, x: usize, y: usize) -> Vec<usize> {
        let p = self.node_count();
        let mut pred: Vec<Option<(usize, usize)>> = vec![None; p];
        let mut seen = VertexSet::singleton(x);
        let mut stack = vec![x];
        while let Some(u) = stack.pop() {
            if u == y {
                break;
            }
            for &(v, e) in &self.incidence[u] {
                if seen.insert(v) {
                    pred[v] = Some((u, e));
                    stack.push(v);
                }
            }
        }
        let mut path = Vec::new();
        let mut cur = y;
        while cur != x {
            let (u, e) = pred[cur].expect("tree is connected");
            path.push(e);
            cur = u;
        }
        path.reverse();
        path
    }

    /// Vertices (members of nodes) whose containing nodes do not induce a
    /// connected subtree. Empty iff the running-intersection property holds.
    pub fn running_intersection_violations(&self) -> Vec<usize> {
        let bound = self.nodes.iter().map(VertexSet::bound).max().unwrap_or(0);
        let mut containing: Vec<Vec<usize>> = vec![Vec::new(); bound];
        for (x, node) in self.nodes.iter().enumerate() {
            for v in node {
                containing[v].push(x);
            }
        }
        // The nodes containing v induce a subtree iff the tree edges whose
        // label contains v number exactly |nodes containing v| - 1.
        let mut label_count = vec![0usize; bound];
        for e in &self.edges {
            for v in &e.label {
                label_count[v] += 1;
            }
        }
        (0..bound)
            .filter(|&v| !containing[v].is_empty() && label_count[v] + 1 != containing[v].len())
            .collect()
    }

    pub fn has_running_intersection(&self) -> bool {
        self.running_intersection_violations().is_empty()
    }

    fn reachable_from(&self, x: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(x);
        let mut stack = vec![x];
        while let Some(u) = stack.pop() {
            for &(v, _) in &self.incidence[u] {
                if seen.insert(v) {
                    stack.push(v);
                }
            }
        }
        seen
    }
}
