//! Maximum cardinality search, chordality, clique trees and MCS-M minimal
//! triangulation.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph};
use crate::set::VertexSet;
use crate::tree::LabeledSetTree;

/// A vertex ordering. `order()[0]` is eliminated first; search algorithms
/// visit the vertex at position n-1 first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl EliminationOrdering {
    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::InvalidInput("ordering is not a permutation".into()));
            }
            position[v] = i;
        }
        Ok(Self { order, position })
    }

    fn from_visit(mut visit: Vec<usize>) -> Self {
        visit.reverse();
        Self::from_order(visit).expect("search visits every vertex once")
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Vertices in the order a search visited them (reverse elimination order).
    pub fn visit_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.order.iter().rev().copied()
    }
}

/// Maximum cardinality search; ties go to the smallest index.
pub fn mcs(g: &Graph) -> EliminationOrdering {
    EliminationOrdering::from_visit(mcs_visit(g, None))
}

/// Maximum cardinality search forced to visit `start` first.
pub fn mcs_from(g: &Graph, start: usize) -> Result<EliminationOrdering> {
    if start >= g.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{start}")));
    }
    Ok(EliminationOrdering::from_visit(mcs_visit(g, Some(start))))
}

fn mcs_visit(g: &Graph, start: Option<usize>) -> Vec<usize> {
    let n = g.vertex_count();
    let mut label = vec![0usize; n];
    let mut done = vec![false; n];
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n.max(1)];
    buckets[0].extend(0..n);
    let mut top = 0;
    let mut visit = Vec::with_capacity(n);
    for step in 0..n {
        let v = match start {
            Some(s) if step == 0 => s,
            _ => {
                while buckets[top].is_empty() {
                    top -= 1;
                }
                *buckets[top].first().expect("nonempty bucket")
            }
        };
        buckets[label[v]].remove(&v);
        done[v] = true;
        visit.push(v);
        for u in g.neighbors(v) {
            if !done[u] {
                buckets[label[u]].remove(&u);
                label[u] += 1;
                buckets[label[u]].insert(u);
                top = top.max(label[u]);
            }
        }
    }
    visit
}

/// True iff every vertex's later neighbors (in `ordering`) form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, ordering: &EliminationOrdering) -> bool {
    (0..g.vertex_count()).all(|v| {
        let pos = ordering.position(v);
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&u| ordering.position(u) > pos).collect();
        let Some(&parent) = later.iter().min_by_key(|&&u| ordering.position(u)) else {
            return true;
        };
        later.iter().all(|&u| u == parent || g.has_edge(u, parent))
    })
}

pub fn is_chordal(g: &Graph) -> bool {
    is_perfect_elimination_ordering(g, &mcs(g))
}

/// Clique tree of a connected chordal graph.
///
/// During MCS a new clique starts whenever the number of visited neighbors
/// fails to increase; it is attached to the clique that received the most
/// recently visited of those neighbors.
pub fn clique_tree(g: &Graph) -> Result<LabeledSetTree> {
    let n = g.vertex_count();
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    let ordering = mcs(g);
    if !is_perfect_elimination_ordering(g, &ordering) {
        return Err(Error::NotChordal);
    }
    let mut visited_at = vec![usize::MAX; n];
    let mut clique_of = vec![0usize; n];
    let mut cliques: Vec<VertexSet> = Vec::new();
    let mut pairs = Vec::new();
    let mut prev_card: Option<usize> = None;
    for (step, v) in ordering.visit_order().enumerate() {
        let madj: Vec<usize> = g.neighbors(v).iter().filter(|&u| visited_at[u] != usize::MAX).collect();
        let card = madj.len();
        if prev_card.is_none_or(|p| card <= p) {
            let mut k: VertexSet = madj.iter().copied().collect();
            k.insert(v);
            if let Some(&last) = madj.iter().max_by_key(|&&u| visited_at[u]) {
                pairs.push((clique_of[last], cliques.len()));
            }
            cliques.push(k);
        } else {
            cliques.last_mut().expect("first vertex opens a clique").insert(v);
        }
        clique_of[v] = cliques.len() - 1;
        visited_at[v] = step;
        prev_card = Some(card);
    }
    LabeledSetTree::new(cliques, &pairs)
}

/// A minimal triangulation: `fill` edges (u < v, sorted) and the elimination
/// ordering that is perfect for the triangulated graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    pub fill: Vec<(usize, usize)>,
    pub ordering: EliminationOrdering,
}

impl Triangulation {
    /// The graph plus its fill edges.
    pub fn apply(&self, g: &Graph) -> Graph {
        let mut h = g.clone();
        for &(u, v) in &self.fill {
            h.add_edge(u, v).expect("fill edges join distinct vertices");
        }
        h
    }
}

/// MCS-M minimal triangulation; ties go to the smallest index.
///
/// At each step the chosen vertex `v` raises the weight of every unnumbered
/// `u` reachable through unnumbered vertices all lighter than `u`; such a `u`
/// becomes a neighbor of `v` in the triangulation.
pub fn mcs_m(g: &Graph) -> Result<Triangulation> {
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    let n = g.vertex_count();
    let mut weight = vec![0i64; n];
    let mut numbered = vec![false; n];
    let mut order = vec![0usize; n];
    let mut fill = Vec::new();
    let mut cost = vec![i64::MAX; n];
    for i in (0..n).rev() {
        let v = (0..n)
            .filter(|&u| !numbered[u])
            .max_by_key(|&u| (weight[u], Reverse(u)))
            .expect("an unnumbered vertex remains");
        numbered[v] = true;
        order[i] = v;

        // Bottleneck search: cost[u] is the least possible maximum weight of
        // intermediate vertices on a path v .. u through unnumbered vertices.
        cost.iter_mut().for_each(|c| *c = i64::MAX);
        let mut heap = BinaryHeap::new();
        for u in g.neighbors(v) {
            if !numbered[u] {
                cost[u] = -1;
                heap.push(Reverse((-1i64, u)));
            }
        }
        while let Some(Reverse((c, u))) = heap.pop() {
            if c > cost[u] {
                continue;
            }
            let through = c.max(weight[u]);
            for z in g.neighbors(u) {
                if !numbered[z] && through < cost[z] {
                    cost[z] = through;
                    heap.push(Reverse((through, z)));
                }
            }
        }
        let reached: Vec<usize> = (0..n).filter(|&u| !numbered[u] && cost[u] < weight[u]).collect();
        for u in reached {
            weight[u] += 1;
            if !g.has_edge(u, v) {
                fill.push((u.min(v), u.max(v)));
            }
        }
    }
    fill.sort();
    Ok(Triangulation { fill, ordering: EliminationOrdering::from_order(order)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_minimal_separator, maximal_cliques};
    use crate::testutil::{sample_graph, set};

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_index_edges(n, &edges).unwrap()
    }

    #[test]
    fn mcs_orders() {
        let tri = Graph::from_edges(&[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert_eq!(mcs(&tri).order(), &[2, 1, 0]);
        let p3 = Graph::from_edges(&[("a", "b"), ("b", "c")]).unwrap();
        let from_c = mcs_from(&p3, 2).unwrap();
        assert_eq!(from_c.visit_order().collect::<Vec<_>>(), vec![2, 1, 0]);
        let two = Graph::from_index_edges(4, &[(0, 2), (1, 3)]).unwrap();
        assert_eq!(mcs(&two).visit_order().collect::<Vec<_>>(), vec![0, 2, 1, 3]);
        assert!(mcs(&Graph::new()).is_empty());
    }

    #[test]
    fn chordality() {
        assert!(!is_chordal(&cycle(4)));
        assert!(is_chordal(&cycle(3)));
        // 1-2-4-5-6-1 in the fixture: 1-4, 1-5, 2-5, 2-6, 4-6 all absent.
        assert!(!is_chordal(&sample_graph()));
        let tree = Graph::from_index_edges(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        assert!(is_chordal(&tree));
        assert!(is_chordal(&Graph::new()));
    }

    #[test]
    fn clique_trees() {
        let p3 = Graph::from_edges(&[("a", "b"), ("b", "c")]).unwrap();
        let t = clique_tree(&p3).unwrap();
        assert_eq!(t.nodes(), &[set(&p3, &["a", "b"]), set(&p3, &["b", "c"])]);
        assert_eq!(t.edges()[0].label, set(&p3, &["b"]));

        let k4 = Graph::from_index_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let t = clique_tree(&k4).unwrap();
        assert_eq!(t.nodes(), &[VertexSet::full(4)]);
        assert_eq!(t.edge_count(), 0);

        // 2-section of {1,2,3},{2,3,4},{3,4,5}
        let g = Graph::from_edges(&[("1", "2"), ("1", "3"), ("2", "3"), ("2", "4"), ("3", "4"), ("3", "5"), ("4", "5")]).unwrap();
        let t = clique_tree(&g).unwrap();
        let mut nodes = t.nodes().to_vec();
        nodes.sort();
        assert_eq!(nodes, maximal_cliques(&g));
        let mut labels: Vec<String> = t.edges().iter().map(|e| g.format_set(&e.label)).collect();
        labels.sort();
        assert_eq!(labels, ["{2,3}", "{3,4}"]);
        assert!(t.has_running_intersection());
        for e in t.edges() {
            assert!(is_minimal_separator(&g, &e.label));
        }

        assert_eq!(clique_tree(&cycle(4)), Err(Error::NotChordal));
        let two = Graph::from_index_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(clique_tree(&two), Err(Error::NotConnected));
    }

    #[test]
    fn mcs_m_small() {
        let p3 = Graph::from_edges(&[("a", "b"), ("b", "c")]).unwrap();
        assert!(mcs_m(&p3).unwrap().fill.is_empty());

        let c4 = cycle(4);
        let tri = mcs_m(&c4).unwrap();
        // v0 goes first and only reaches its neighbors; v1 then reaches v3
        // through v2 (weight 0 < 1).
        assert_eq!(tri.fill, vec![(1, 3)]);
        let h = tri.apply(&c4);
        assert!(is_chordal(&h));
        assert!(is_perfect_elimination_ordering(&h, &tri.ordering));

        let c5 = cycle(5);
        let tri = mcs_m(&c5).unwrap();
        assert_eq!(tri.fill.len(), 2);
        let h = tri.apply(&c5);
        assert!(is_chordal(&h));
        for skip in 0..tri.fill.len() {
            let mut partial = c5.clone();
            for (i, &(u, v)) in tri.fill.iter().enumerate() {
                if i != skip {
                    partial.add_edge(u, v).unwrap();
                }
            }
            assert!(!is_chordal(&partial));
        }

        let two = Graph::from_index_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(mcs_m(&two), Err(Error::NotConnected));
    }
}
