//! Hypergraphs, join trees, α-acyclicity and union join graphs.
//!
//! Disconnected hypergraphs follow the hypergraph convention: their join
//! trees link the components through edges labeled with the empty set, so
//! the union join graph contains every pair of hyperedges from different
//! components.

use std::collections::HashMap;

use crate::atom_graph::{forest_join, subset_relation, union_max_weight, AtomGraph};
use crate::atoms::weighted_intersection_graph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::tree::LabeledSetTree;
use crate::weighted::WeightedEdgeGraph;

/// Prefix reserved for vertices created by [`clutter_embedding`].
pub const AUX_PREFIX: &str = "@aux:";

/// A simple hypergraph: named vertices and pairwise distinct nonempty
/// hyperedges covering them. Hyperedges are identified by position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    hyperedges: Vec<VertexSet>,
}

impl Hypergraph {
    pub fn new(names: Vec<String>, hyperedges: Vec<VertexSet>) -> Result<Self> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate vertex `{name}`")));
            }
        }
        let n = names.len();
        let mut covered = VertexSet::new();
        for (i, x) in hyperedges.iter().enumerate() {
            if x.is_empty() {
                return Err(Error::InvalidInput(format!("hyperedge #{i} is empty")));
            }
            if x.bound() > n {
                return Err(Error::UnknownVertex(format!("#{}", x.bound() - 1)));
            }
            covered.union_with(x);
        }
        if covered.len() != n {
            return Err(Error::InvalidInput("hyperedges do not cover every vertex".into()));
        }
        let mut sorted: Vec<&VertexSet> = hyperedges.iter().collect();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("duplicate hyperedge".into()));
        }
        Ok(Self { names, index, hyperedges })
    }

    /// Builds a hypergraph from named hyperedges; vertices are indexed by
    /// first appearance.
    pub fn from_named<S: AsRef<str>>(hyperedges: &[Vec<S>]) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut sets = Vec::with_capacity(hyperedges.len());
        for he in hyperedges {
            let mut x = VertexSet::new();
            for v in he {
                let v = v.as_ref();
                let i = *index.entry(v.to_owned()).or_insert_with(|| {
                    names.push(v.to_owned());
                    names.len() - 1
                });
                x.insert(i);
            }
            sets.push(x);
        }
        Self::new(names, sets)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn hyperedge_count(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn hyperedges(&self) -> &[VertexSet] {
        &self.hyperedges
    }

    /// Connected iff its line graph is.
    pub fn is_connected(&self) -> bool {
        line_graph_weighted(self).is_ok_and(|lg| lg.is_connected())
    }

    pub fn format_set(&self, s: &VertexSet) -> String {
        let names: Vec<&str> = s.iter().map(|v| self.name(v)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn set_names(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|v| self.names[v].clone()).collect()
    }
}

/// 2SEC(h): the graph joining every pair of vertices that share a hyperedge.
pub fn two_section(h: &Hypergraph) -> Graph {
    let mut g = Graph::new();
    for name in h.names() {
        g.add_vertex(name);
    }
    for x in h.hyperedges() {
        let members = x.to_vec();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                g.add_edge(u, v).expect("distinct members");
            }
        }
    }
    g
}

/// Line graph of `h` weighted by intersection size.
pub fn line_graph_weighted(h: &Hypergraph) -> Result<WeightedEdgeGraph> {
    weighted_intersection_graph(h.hyperedges())
}

/// True iff no hyperedge contains another.
pub fn is_clutter(h: &Hypergraph) -> bool {
    let xs = h.hyperedges();
    xs.iter()
        .enumerate()
        .all(|(i, x)| xs.iter().enumerate().all(|(j, y)| i == j || !x.is_subset(y)))
}

/// A join tree: a maximum-weight spanning tree of the complete graph on the
/// hyperedges weighted by |X ∩ Y|, checked for running intersection.
pub fn join_tree(h: &Hypergraph) -> Result<LabeledSetTree> {
    let xs = h.hyperedges();
    let p = xs.len();
    let mut pairs: Vec<(usize, usize, usize)> = Vec::with_capacity(p * p.saturating_sub(1) / 2);
    for i in 0..p {
        for j in i + 1..p {
            pairs.push((xs[i].intersection_len(&xs[j]), i, j));
        }
    }
    pairs.sort_by_key(|&(w, i, j)| (std::cmp::Reverse(w), i, j));
    let mut comp: Vec<usize> = (0..p).collect();
    let mut members: Vec<Vec<usize>> = (0..p).map(|i| vec![i]).collect();
    let mut chosen = Vec::with_capacity(p.saturating_sub(1));
    for (_, i, j) in pairs {
        let (ci, cj) = (comp[i], comp[j]);
        if ci == cj {
            continue;
        }
        chosen.push((i, j));
        let (keep, gone) = (ci.min(cj), ci.max(cj));
        let moved = std::mem::take(&mut members[gone]);
        for &z in &moved {
            comp[z] = keep;
        }
        members[keep].extend(moved);
        if chosen.len() + 1 == p {
            break;
        }
    }
    let t = LabeledSetTree::new(xs.to_vec(), &chosen)?;
    if let Some(&v) = t.running_intersection_violations().first() {
        return Err(Error::NotAcyclic { witness: h.name(v).to_owned() });
    }
    Ok(t)
}

pub fn is_alpha_acyclic(h: &Hypergraph) -> bool {
    join_tree(h).is_ok()
}

/// True iff `t` is a join tree of `h`. Fails if the nodes of `t` are not the
/// hyperedges of `h`.
pub fn verify_join_tree(h: &Hypergraph, t: &LabeledSetTree) -> Result<bool> {
    let mut nodes = t.nodes().to_vec();
    let mut xs = h.hyperedges().to_vec();
    nodes.sort();
    xs.sort();
    if nodes != xs {
        return Err(Error::InvalidInput("tree nodes differ from the hyperedges".into()));
    }
    Ok(t.has_running_intersection())
}

/// tuj(t): XY is an edge iff some edge on the tree path from X to Y is
/// labeled exactly X ∩ Y. Quadratic in the node count times path length.
pub fn tuj(t: &LabeledSetTree) -> AtomGraph {
    let p = t.node_count();
    let mut out = AtomGraph::edgeless(t.nodes().to_vec());
    for x in 0..p {
        for y in x + 1..p {
            let s = t.node(x).intersection(t.node(y));
            if t.path_edges(x, y).into_iter().any(|e| t.edge(e).label == s) {
                out.add_edge(x, y);
            }
        }
    }
    out
}

/// UJ-min-weight: one traversal of `t` keeping, for every pair of reached
/// nodes, the minimum weight on their tree path; XY is an edge iff its own
/// weight (0 for non-edges of `lw`) equals that minimum.
pub fn uj_min_weight(t: &LabeledSetTree, lw: &WeightedEdgeGraph) -> Result<AtomGraph> {
    let p = t.node_count();
    if lw.node_count() != p {
        return Err(Error::InvalidInput(format!("line graph has {} nodes, tree has {p}", lw.node_count())));
    }
    let mut w = vec![0u64; p * p];
    for e in lw.edges() {
        let actual = t.node(e.a).intersection_len(t.node(e.b)) as u64;
        if e.weight != actual {
            return Err(Error::InvalidInput(format!("weight {} on {}-{} but the nodes share {actual}", e.weight, e.a, e.b)));
        }
        w[e.a * p + e.b] = e.weight;
        w[e.b * p + e.a] = e.weight;
    }
    let mut out = AtomGraph::edgeless(t.nodes().to_vec());
    for e in t.edges() {
        out.add_edge(e.a, e.b);
    }
    if p == 0 {
        return Ok(out);
    }
    let mut min_weight = vec![0u64; p * p];
    let mut is_reached = vec![false; p];
    let mut reached = vec![0usize];
    is_reached[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &(y, _) in t.incident(x) {
            if is_reached[y] {
                continue;
            }
            let wxy = w[x * p + y];
            min_weight[x * p + y] = wxy;
            min_weight[y * p + x] = wxy;
            for &z in &reached {
                if z == x {
                    continue;
                }
                let mw = wxy.min(min_weight[x * p + z]);
                min_weight[y * p + z] = mw;
                min_weight[z * p + y] = mw;
                if mw == w[y * p + z] {
                    out.add_edge(y, z);
                }
            }
            is_reached[y] = true;
            reached.push(y);
            queue.push_back(y);
        }
    }
    Ok(out)
}

/// Algorithms for [`union_join_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnionJoinAlgorithm {
    ForestJoin,
    MaxWeight,
    MinWeight,
}

/// UJ(h), the union of all join trees of an α-acyclic hypergraph.
pub fn union_join_graph(h: &Hypergraph, algo: UnionJoinAlgorithm) -> Result<AtomGraph> {
    let t = join_tree(h)?;
    match algo {
        UnionJoinAlgorithm::ForestJoin => Ok(forest_join(&t, &subset_relation(&t))),
        UnionJoinAlgorithm::MaxWeight => {
            let xs = h.hyperedges();
            let mut complete = WeightedEdgeGraph::new(xs.len());
            for i in 0..xs.len() {
                for j in i + 1..xs.len() {
                    complete.add_edge(i, j, xs[i].intersection_len(&xs[j]) as u64)?;
                }
            }
            let um = union_max_weight(&complete)?;
            let mut out = AtomGraph::edgeless(xs.to_vec());
            for e in um.edges() {
                out.add_edge(e.a, e.b);
            }
            Ok(out)
        }
        UnionJoinAlgorithm::MinWeight => uj_min_weight(&t, &line_graph_weighted(h)?),
    }
}

/// One-to-one map between the hyperedges of two hypergraphs, by position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperedgeMapping {
    targets: Vec<usize>,
}

impl HyperedgeMapping {
    pub fn identity(p: usize) -> Self {
        Self { targets: (0..p).collect() }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.targets[x]
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    /// f(K): the image of a graph on the source hyperedges.
    pub fn map_graph(&self, k: &AtomGraph, target: &Hypergraph) -> AtomGraph {
        let mut out = AtomGraph::edgeless(target.hyperedges().to_vec());
        for (a, b) in k.edge_pairs() {
            out.add_edge(self.apply(a), self.apply(b));
        }
        out
    }

    /// f(T): the image of a tree on the source hyperedges.
    pub fn map_tree(&self, t: &LabeledSetTree, target: &Hypergraph) -> Result<LabeledSetTree> {
        let pairs: Vec<(usize, usize)> = t.edges().iter().map(|e| (self.apply(e.a), self.apply(e.b))).collect();
        LabeledSetTree::new(target.hyperedges().to_vec(), &pairs)
    }
}

/// Embeds an α-acyclic hypergraph into a connected α-acyclic clutter.
///
/// Every hyperedge strictly contained in another gets its own fresh vertex
/// `@aux:<index>`; if `h` is disconnected every hyperedge also gets the
/// common fresh vertex `@aux:common`. A connected clutter maps to itself.
pub fn clutter_embedding(h: &Hypergraph) -> Result<(Hypergraph, HyperedgeMapping)> {
    join_tree(h)?;
    let xs = h.hyperedges();
    let mut names = h.names().to_vec();
    let mut out: Vec<VertexSet> = xs.to_vec();
    for (i, x) in xs.iter().enumerate() {
        if xs.iter().enumerate().any(|(j, y)| i != j && x.is_subset(y)) {
            out[i].insert(names.len());
            names.push(format!("{AUX_PREFIX}{i}"));
        }
    }
    if !h.is_connected() {
        let common = names.len();
        names.push(format!("{AUX_PREFIX}common"));
        for x in &mut out {
            x.insert(common);
        }
    }
    Ok((Hypergraph::new(names, out)?, HyperedgeMapping::identity(xs.len())))
}
