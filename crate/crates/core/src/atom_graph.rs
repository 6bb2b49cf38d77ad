//! Atom graphs: the union of all atom trees of a graph, and more generally
//! the union of all maximum-weight spanning trees of a weighted graph.
//!
//! Three independent routes are provided:
//! - [`forest_join`] and [`forest_join_delta`] start from one atom (or join)
//!   tree and, for each separator, link the pieces of the subtree of nodes
//!   containing it;
//! - [`ag_max_weight`] runs [`union_max_weight`] on the weighted intersection
//!   graph of the atoms;
//! - [`naive_atom_graph`] tests separation directly in the graph and serves
//!   as the ground truth.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{is_separator_between, Graph};
use crate::set::VertexSet;
use crate::tree::LabeledSetTree;
use crate::weighted::{WeightedEdge, WeightedEdgeGraph};

/// sub(e, e') ⇔ label(e) ⊆ label(e'), over the edges of a [`LabeledSetTree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetRelation {
    size: usize,
    bits: Vec<bool>,
}

impl SubsetRelation {
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn holds(&self, e: usize, f: usize) -> bool {
        self.bits[e * self.size + f]
    }
}

/// Computes the subset relation of `t` directly: for each edge, mark its
/// label and count the marked members of every other label.
pub fn subset_relation(t: &LabeledSetTree) -> SubsetRelation {
    let q = t.edge_count();
    let bound = t.edges().iter().map(|e| e.label.bound()).max().unwrap_or(0);
    let mut mark = vec![usize::MAX; bound];
    let mut bits = vec![false; q * q];
    for (i, e) in t.edges().iter().enumerate() {
        for v in &e.label {
            mark[v] = i;
        }
        let size = e.label.len();
        for (j, f) in t.edges().iter().enumerate() {
            let hit = f.label.iter().filter(|&v| mark[v] == i).count();
            bits[i * q + j] = hit == size;
        }
    }
    SubsetRelation { size: q, bits }
}

/// A graph on a list of vertex sets whose edges carry the intersection of
/// their endpoints. Used for atom graphs and union join graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomGraph {
    nodes: Vec<VertexSet>,
    adj: Vec<bool>,
}

impl AtomGraph {
    pub fn edgeless(nodes: Vec<VertexSet>) -> Self {
        let p = nodes.len();
        Self { nodes, adj: vec![false; p * p] }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[VertexSet] {
        &self.nodes
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a * self.nodes.len() + b]
    }

    /// Adds `ab`; returns `false` if it was already present.
    pub fn add_edge(&mut self, a: usize, b: usize) -> bool {
        let p = self.nodes.len();
        assert!(a != b && a < p && b < p, "bad atom graph edge {a}-{b}");
        let fresh = !self.adj[a * p + b];
        self.adj[a * p + b] = true;
        self.adj[b * p + a] = true;
        fresh
    }

    /// Sorted pairs `(a, b)` with `a < b`.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let p = self.nodes.len();
        (0..p)
            .flat_map(|a| (a + 1..p).map(move |b| (a, b)))
            .filter(|&(a, b)| self.has_edge(a, b))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&x| x).count() / 2
    }

    /// Sorted edges with their separators.
    pub fn edges(&self) -> Vec<(usize, usize, VertexSet)> {
        self.edge_pairs()
            .into_iter()
            .map(|(a, b)| (a, b, self.nodes[a].intersection(&self.nodes[b])))
            .collect()
    }

    pub fn separator(&self, a: usize, b: usize) -> Option<VertexSet> {
        self.has_edge(a, b).then(|| self.nodes[a].intersection(&self.nodes[b]))
    }
}

/// Sub-tests used while walking the tree from the start edge `ab`.
trait SeparatorTest {
    /// sub(ab, xy), where the walk arrives at edge `xy` from node `from`.
    fn contains(&self, ab: usize, from: usize, xy: usize) -> bool;
    /// sub(xy, ab), given that sub(ab, xy) holds.
    fn equals(&self, ab: usize, xy: usize) -> bool;
}

impl SeparatorTest for SubsetRelation {
    fn contains(&self, ab: usize, _from: usize, xy: usize) -> bool {
        self.holds(ab, xy)
    }

    fn equals(&self, ab: usize, xy: usize) -> bool {
        self.holds(xy, ab)
    }
}

/// Precomputed |X ∩ Y|, X \ Y and Y \ X per tree edge. Since the walk only
/// leaves nodes containing S = label(ab), S ⊆ X ∩ Y reduces to
/// (X \ Y) ∩ S = ∅, and equality to |X ∩ Y| = |S|.
struct DeltaTest<'a> {
    tree: &'a LabeledSetTree,
    label_len: Vec<usize>,
    a_minus_b: Vec<VertexSet>,
    b_minus_a: Vec<VertexSet>,
}

impl<'a> DeltaTest<'a> {
    fn new(tree: &'a LabeledSetTree) -> Self {
        let mut label_len = Vec::new();
        let mut a_minus_b = Vec::new();
        let mut b_minus_a = Vec::new();
        for e in tree.edges() {
            let (x, y) = (tree.node(e.a), tree.node(e.b));
            label_len.push(e.label.len());
            a_minus_b.push(x.difference(y));
            b_minus_a.push(y.difference(x));
        }
        Self { tree, label_len, a_minus_b, b_minus_a }
    }
}

impl SeparatorTest for DeltaTest<'_> {
    fn contains(&self, ab: usize, from: usize, xy: usize) -> bool {
        let s = &self.tree.edge(ab).label;
        let left = if self.tree.edge(xy).a == from { &self.a_minus_b[xy] } else { &self.b_minus_a[xy] };
        left.iter().all(|v| !s.contains(v))
    }

    fn equals(&self, ab: usize, xy: usize) -> bool {
        self.label_len[ab] == self.label_len[xy]
    }
}

/// Components of the forest obtained from the subtree of nodes containing
/// S = label(`edge`) by deleting the edges labeled exactly S.
///
/// The walk starts at the lower endpoint of `edge`, crosses only edges whose
/// label contains S, and opens a new component at each edge labeled S.
pub fn components_of_separator(t: &LabeledSetTree, edge: usize, sub: &SubsetRelation) -> Vec<Vec<usize>> {
    components_with(t, edge, sub)
}

fn components_with<S: SeparatorTest>(t: &LabeledSetTree, edge: usize, test: &S) -> Vec<Vec<usize>> {
    let start = t.edge(edge).a;
    let mut comps: Vec<Vec<usize>> = vec![vec![start]];
    let mut comp_of = vec![usize::MAX; t.node_count()];
    let mut pred = vec![usize::MAX; t.node_count()];
    comp_of[start] = 0;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &(y, xy) in t.incident(x) {
            if y == pred[x] || !test.contains(edge, x, xy) {
                continue;
            }
            let i = if test.equals(edge, xy) {
                comps.push(Vec::new());
                comps.len() - 1
            } else {
                comp_of[x]
            };
            comps[i].push(y);
            comp_of[y] = i;
            pred[y] = x;
            queue.push_back(y);
        }
    }
    comps
}

/// Forest Join: the atom graph of a graph from one of its atom trees (or the
/// union join graph of a hypergraph from one of its join trees).
pub fn forest_join(t: &LabeledSetTree, sub: &SubsetRelation) -> AtomGraph {
    forest_join_with(t, sub).0
}

/// Forest Join without a precomputed subset relation.
pub fn forest_join_delta(t: &LabeledSetTree) -> AtomGraph {
    forest_join_with(t, &DeltaTest::new(t)).0
}

/// Forest Join, also returning how many times the component search ran.
pub fn forest_join_counted(t: &LabeledSetTree, sub: &SubsetRelation) -> (AtomGraph, usize) {
    forest_join_with(t, sub)
}

fn forest_join_with<S: SeparatorTest>(t: &LabeledSetTree, test: &S) -> (AtomGraph, usize) {
    let mut out = AtomGraph::edgeless(t.nodes().to_vec());
    let mut calls = 0;
    for (e, edge) in t.edges().iter().enumerate() {
        if out.has_edge(edge.a, edge.b) {
            continue;
        }
        calls += 1;
        let comps = components_with(t, e, test);
        for (i, c) in comps.iter().enumerate() {
            for d in &comps[i + 1..] {
                for &x in c {
                    for &y in d {
                        out.add_edge(x, y);
                    }
                }
            }
        }
    }
    (out, calls)
}

/// Edge set after each weight level of [`union_max_weight_traced`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSnapshot {
    pub weight: u64,
    pub edges: Vec<(usize, usize)>,
}

/// The union of all maximum-weight spanning trees of a connected graph.
pub fn union_max_weight(wg: &WeightedEdgeGraph) -> Result<WeightedEdgeGraph> {
    Ok(union_max_weight_traced(wg)?.0)
}

/// [`union_max_weight`] plus a snapshot of the chosen edges after each
/// nonempty weight level, heaviest first.
///
/// Weight level k adds every weight-k edge whose endpoints lie in different
/// components as they stood when the level began; components are merged only
/// after the whole level has been scanned.
pub fn union_max_weight_traced(wg: &WeightedEdgeGraph) -> Result<(WeightedEdgeGraph, Vec<LevelSnapshot>)> {
    if !wg.is_connected() {
        return Err(Error::NotConnected);
    }
    let p = wg.node_count();
    let mut levels: BTreeMap<u64, Vec<WeightedEdge>> = BTreeMap::new();
    for &e in wg.edges() {
        levels.entry(e.weight).or_default().push(e);
    }
    let mut comp_of: Vec<usize> = (0..p).collect();
    let mut members: Vec<Vec<usize>> = (0..p).map(|x| vec![x]).collect();
    let mut out = WeightedEdgeGraph::new(p);
    let mut trace = Vec::new();
    for (&k, level) in levels.iter().rev() {
        for e in level {
            if comp_of[e.a] != comp_of[e.b] {
                out.add_edge(e.a, e.b, k)?;
            }
        }
        for e in level {
            let (i, j) = (comp_of[e.a], comp_of[e.b]);
            if i != j {
                let (keep, gone) = (i.min(j), i.max(j));
                let moved = std::mem::take(&mut members[gone]);
                for &z in &moved {
                    comp_of[z] = keep;
                }
                members[keep].extend(moved);
            }
        }
        trace.push(LevelSnapshot { weight: k, edges: out.edge_set().into_iter().map(|(a, b, _)| (a, b)).collect() });
    }
    Ok((out, trace))
}

/// AG-max-weight: the atom graph from the weighted intersection graph of the
/// atoms. `atoms[i]` is node `i` of `wig`.
pub fn ag_max_weight(wig: &WeightedEdgeGraph, atoms: &[VertexSet]) -> Result<AtomGraph> {
    if wig.node_count() != atoms.len() {
        return Err(Error::InvalidInput(format!("{} atoms for {} nodes", atoms.len(), wig.node_count())));
    }
    let um = union_max_weight(wig)?;
    let mut out = AtomGraph::edgeless(atoms.to_vec());
    for e in um.edges() {
        out.add_edge(e.a, e.b);
    }
    Ok(out)
}

/// The atom graph by definition: AB is an edge iff A ∩ B ≠ ∅ separates
/// A \ B from B \ A in `g`.
pub fn naive_atom_graph(g: &Graph, atoms: &[VertexSet]) -> Result<AtomGraph> {
    let mut out = AtomGraph::edgeless(atoms.to_vec());
    for (i, a) in atoms.iter().enumerate() {
        for (j, b) in atoms.iter().enumerate().skip(i + 1) {
            let s = a.intersection(b);
            if s.is_empty() {
                continue;
            }
            let (only_a, only_b) = (a.difference(b), b.difference(a));
            if only_a.is_empty() || only_b.is_empty() {
                return Err(Error::InvalidInput("atoms must be pairwise non-inclusive".into()));
            }
            if is_separator_between(g, &s, &only_a, &only_b)? {
                out.add_edge(i, j);
            }
        }
    }
    Ok(out)
}

/// Non-adjacent pairs {x, y} with x ∈ K \ L and y ∈ L \ K for some edge KL
/// of the atom graph of a chordal graph `g`: exactly the 2-pairs of `g`.
pub fn two_pairs_from_atom_graph(g: &Graph, ag: &AtomGraph) -> Vec<(usize, usize)> {
    let mut pairs = std::collections::BTreeSet::new();
    for (k, l) in ag.edge_pairs() {
        let (only_k, only_l) = (ag.nodes[k].difference(&ag.nodes[l]), ag.nodes[l].difference(&ag.nodes[k]));
        for x in &only_k {
            for y in &only_l {
                if !g.has_edge(x, y) {
                    pairs.insert((x.min(y), x.max(y)));
                }
            }
        }
    }
    pairs.into_iter().collect()
}

/// Largest graph [`enumerate_max_weight_spanning_trees`] accepts.
pub const MAX_ENUMERATION_NODES: usize = 12;

/// Every maximum-weight spanning tree of a small connected graph, each as a
/// sorted list of node pairs. Exhaustive branch and bound over the edges in
/// decreasing weight order.
pub fn enumerate_max_weight_spanning_trees(wg: &WeightedEdgeGraph) -> Result<Vec<Vec<(usize, usize)>>> {
    let p = wg.node_count();
    if p > MAX_ENUMERATION_NODES {
        return Err(Error::SizeLimit(format!("{p} nodes exceeds {MAX_ENUMERATION_NODES}")));
    }
    if !wg.is_connected() {
        return Err(Error::NotConnected);
    }
    if p <= 1 {
        return Ok(vec![Vec::new()]);
    }
    let mut edges: Vec<WeightedEdge> = wg.edges().to_vec();
    edges.sort_by_key(|e| (std::cmp::Reverse(e.weight), e.a, e.b));
    let best: u64 = {
        let mut comp: Vec<usize> = (0..p).collect();
        let mut total = 0;
        for e in &edges {
            let (ca, cb) = (comp[e.a], comp[e.b]);
            if ca != cb {
                total += e.weight;
                comp.iter_mut().filter(|c| **c == cb).for_each(|c| *c = ca);
            }
        }
        total
    };
    let mut search = TreeSearch { edges: &edges, need: p - 1, best, chosen: Vec::new(), out: Vec::new() };
    let comp: Vec<usize> = (0..p).collect();
    search.descend(0, 0, &comp);
    let mut out = search.out;
    out.sort();
    Ok(out)
}

struct TreeSearch<'a> {
    edges: &'a [WeightedEdge],
    need: usize,
    best: u64,
    chosen: Vec<(usize, usize)>,
    out: Vec<Vec<(usize, usize)>>,
}

impl TreeSearch<'_> {
    fn descend(&mut self, i: usize, weight: u64, comp: &[usize]) {
        let missing = self.need - self.chosen.len();
        if missing == 0 {
            if weight == self.best {
                let mut t = self.chosen.clone();
                t.sort();
                self.out.push(t);
            }
            return;
        }
        if self.edges.len() - i < missing {
            return;
        }
        // Edges are sorted by decreasing weight, so the next `missing` edges
        // bound what any completion can add.
        let bound: u64 = self.edges[i..i + missing].iter().map(|e| e.weight).sum();
        if weight + bound < self.best {
            return;
        }
        let e = self.edges[i];
        if comp[e.a] != comp[e.b] {
            let (keep, gone) = (comp[e.a], comp[e.b]);
            let merged: Vec<usize> = comp.iter().map(|&c| if c == gone { keep } else { c }).collect();
            self.chosen.push((e.a, e.b));
            self.descend(i + 1, weight + e.weight, &merged);
            self.chosen.pop();
        }
        self.descend(i + 1, weight, comp);
    }
}
