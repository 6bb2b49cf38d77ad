//! Clique minimal separator decomposition: atoms, atom trees and the derived
//! graphs and statistics.

use crate::error::{Error, Result};
use crate::graph::{is_clique, is_connected, Graph};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;
use crate::tree::LabeledSetTree;
use crate::weighted::WeightedEdgeGraph;
use crate::chordal::{clique_tree, mcs_m};

/// Size parameters of a set-labeled tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DecompositionStats {
    /// node count
    pub p: usize,
    /// sum of node sizes
    pub s: usize,
    /// sum over edges XY of |X △ Y|
    pub s_delta: usize,
    /// sum over edges XY of |X ∩ Y|
    pub label_size_sum: usize,
}

impl DecompositionStats {
    /// Bounds every atom tree of a graph with `n` vertices and `m` edges obeys.
    pub fn within_bounds(&self, n: usize, m: usize) -> bool {
        self.p <= n
            && self.s <= n + m
            && self.label_size_sum <= n + m
            && (self.p == 0 || self.p - 1 <= self.s_delta)
    }
}

pub fn stats(t: &LabeledSetTree, g: &Graph) -> DecompositionStats {
    let st = tree_stats(t);
    debug_assert!(st.within_bounds(g.vertex_count(), g.edge_count()), "{st:?}");
    st
}

/// Stats of any set-labeled tree, without reference to a source graph.
pub fn tree_stats(t: &LabeledSetTree) -> DecompositionStats {
    let mut st = DecompositionStats { p: t.node_count(), s: t.nodes().iter().map(VertexSet::len).sum(), ..Default::default() };
    for e in t.edges() {
        let (x, y) = (t.node(e.a), t.node(e.b));
        let common = e.label.len();
        st.label_size_sum += common;
        st.s_delta += x.len() + y.len() - 2 * common;
    }
    st
}

/// An atom tree of a connected graph.
///
/// Built from a clique tree of the MCS-M triangulation by contracting every
/// edge whose label is not a clique of `g`. Atoms come out sorted, edges
/// are sorted by endpoint.
pub fn atom_tree(g: &Graph) -> Result<LabeledSetTree> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidInput("atom tree of the empty graph".into()));
    }
    let tri = mcs_m(g)?;
    let h = tri.apply(g);
    let ct = clique_tree(&h)?;

    let p = ct.node_count();
    let mut class: Vec<usize> = (0..p).collect();
    fn find(class: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while class[r] != r {
            r = class[r];
        }
        let mut c = x;
        while class[c] != r {
            let next = class[c];
            class[c] = r;
            c = next;
        }
        r
    }
    let mut order: Vec<usize> = (0..ct.edge_count()).collect();
    order.sort_by_key(|&e| (ct.edge(e).a, ct.edge(e).b));
    let mut kept = Vec::new();
    for e in order {
        let edge = ct.edge(e);
        if is_clique(g, &edge.label)? {
            kept.push(e);
        } else {
            let (ra, rb) = (find(&mut class, edge.a), find(&mut class, edge.b));
            class[ra.max(rb)] = ra.min(rb);
        }
    }

    let mut merged: Vec<Option<VertexSet>> = vec![None; p];
    for x in 0..p {
        let r = find(&mut class, x);
        merged[r].get_or_insert_with(VertexSet::new).union_with(ct.node(x));
    }
    let mut atoms: Vec<(VertexSet, usize)> = merged
        .into_iter()
        .enumerate()
        .filter_map(|(r, s)| s.map(|s| (s, r)))
        .collect();
    atoms.sort();
    let mut slot = vec![usize::MAX; p];
    for (i, &(_, r)) in atoms.iter().enumerate() {
        slot[r] = i;
    }
    let mut pairs: Vec<(usize, usize)> = kept
        .into_iter()
        .map(|e| {
            let edge = ct.edge(e);
            let (a, b) = (slot[find(&mut class, edge.a)], slot[find(&mut class, edge.b)]);
            (a.min(b), a.max(b))
        })
        .collect();
    pairs.sort();
    LabeledSetTree::new(atoms.into_iter().map(|(s, _)| s).collect(), &pairs)
}

/// The atoms of a connected graph, sorted.
pub fn atoms(g: &Graph) -> Result<Vec<VertexSet>> {
    Ok(atom_tree(g)?.nodes().to_vec())
}

/// G⁺: same vertices, with every pair inside a common atom joined.
pub fn g_plus(g: &Graph) -> Result<Graph> {
    let mut h = g.clone();
    for atom in atoms(g)? {
        let members = atom.to_vec();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                h.add_edge(u, v)?;
            }
        }
    }
    Ok(h)
}

/// Intersection graph of `sets` with weight |X ∩ Y|, by marking each set's
/// members and counting marks in the later sets.
pub fn weighted_intersection_graph(sets: &[VertexSet]) -> Result<WeightedEdgeGraph> {
    let mut sorted: Vec<&VertexSet> = sets.iter().collect();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput("sets must be pairwise distinct".into()));
    }
    let bound = sets.iter().map(VertexSet::bound).max().unwrap_or(0);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); bound];
    for (i, x) in sets.iter().enumerate() {
        for v in x {
            members[v].push(i);
        }
    }
    let p = sets.len();
    let mut wg = WeightedEdgeGraph::new(p);
    let mut count = vec![0u64; p];
    for (i, x) in sets.iter().enumerate() {
        count.iter_mut().for_each(|c| *c = 0);
        for v in x {
            for &j in &members[v] {
                count[j] += 1;
            }
        }
        for (j, &c) in count.iter().enumerate().skip(i + 1) {
            if c > 0 {
                wg.add_edge(i, j, c)?;
            }
        }
    }
    Ok(wg)
}

/// The hypergraph on V(g) whose hyperedges are the atoms of `g`.
pub fn atom_hypergraph(g: &Graph) -> Result<Hypergraph> {
    Hypergraph::new(g.names().to_vec(), atoms(g)?)
}

/// Checks that `t` is an atom tree of `g` in the sense callers rely on:
/// running intersection holds and every label is a clique minimal separator.
pub fn is_valid_atom_tree(g: &Graph, t: &LabeledSetTree) -> bool {
    is_connected(g)
        && t.has_running_intersection()
        && t.edges().iter().all(|e| {
            is_clique(g, &e.label).unwrap_or(false) && crate::graph::is_minimal_separator(g, &e.label)
        })
}
