//! Simple undirected graphs over named vertices, with the connectivity,
//! separator and clique primitives the decomposition is built on.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// A finite simple undirected graph.
///
/// Vertices carry unique external names; every algorithm works on the dense
/// indices `0..n`, assigned in insertion order.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on `n` vertices named `"0"`, .., `"n-1"`, with no edges.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Self::new();
        for v in 0..n {
            g.add_vertex(&v.to_string());
        }
        g
    }

    /// Builds a graph from named edges; vertices are indexed by first appearance.
    pub fn from_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        let mut g = Self::new();
        for (u, v) in edges {
            g.add_named_edge(u.as_ref(), v.as_ref())?;
        }
        Ok(g)
    }

    /// Builds a graph on `n` numerically named vertices from index pairs.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Returns the index of `name`, adding the vertex if it is new.
    pub fn add_vertex(&mut self, name: &str) -> usize {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = self.names.len();
        self.names.push(name.to_owned());
        self.index.insert(name.to_owned(), v);
        self.adj.push(VertexSet::new());
        v
    }

    /// Adds the edge `uv`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop on `{}`", self.names[u])));
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        if fresh {
            self.m += 1;
        }
        Ok(fresh)
    }

    pub fn add_named_edge(&mut self, u: &str, v: &str) -> Result<bool> {
        if u == v {
            return Err(Error::InvalidInput(format!("self-loop on `{u}`")));
        }
        let (u, v) = (self.add_vertex(u), self.add_vertex(v));
        self.add_edge(u, v)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Resolves a list of vertex names into a set.
    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names
            .iter()
            .map(|s| self.index_of(s.as_ref()).ok_or_else(|| Error::UnknownVertex(s.as_ref().to_owned())))
            .collect()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// N(C): vertices outside `c` adjacent to some member of `c`.
    pub fn neighborhood(&self, c: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in c {
            out.union_with(&self.adj[v]);
        }
        out.difference(c)
    }

    /// Subgraph induced by `keep`, with vertices renumbered in increasing
    /// original order. The second value maps new indices to original ones.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let map = keep.to_vec();
        let mut g = Graph::new();
        for &v in &map {
            g.add_vertex(&self.names[v]);
        }
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).expect("distinct in-range vertices");
                }
            }
        }
        (g, map)
    }

    /// Renders a vertex set as `{a,b,c}` using vertex names.
    pub fn format_set(&self, s: &VertexSet) -> String {
        let mut out = String::from("{");
        for (i, v) in s.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", self.names[v]);
        }
        out.push('}');
        out
    }

    pub fn set_names(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|v| self.names[v].clone()).collect()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{v}")))
        }
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.bound() {
            b if b <= self.vertex_count() => Ok(()),
            b => Err(Error::UnknownVertex(format!("#{}", b - 1))),
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().map(|(u, v)| (self.name(u), self.name(v))).collect::<Vec<_>>())
            .finish()
    }
}

/// Connected components of `g`, each ordered before the components whose
/// smallest member is larger.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    components_avoiding(g, &VertexSet::new())
}

/// Connected components of G(V \ removed).
pub fn components_avoiding(g: &Graph, removed: &VertexSet) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let mut seen = removed.clone();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        seen.insert(start);
        stack.push(start);
        let mut comp = VertexSet::new();
        while let Some(x) = stack.pop() {
            comp.insert(x);
            for y in g.neighbors(x) {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// True iff every pair of members of `s` is adjacent.
pub fn is_clique(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_set(s)?;
    Ok(s.iter().all(|v| s.difference(g.neighbors(v)).iter().all(|u| u == v)))
}

/// True iff, in G(V \ s), no vertex of `a_side` shares a component with a
/// vertex of `b_side`.
pub fn is_separator_between(g: &Graph, s: &VertexSet, a_side: &VertexSet, b_side: &VertexSet) -> Result<bool> {
    g.check_set(s)?;
    g.check_set(a_side)?;
    g.check_set(b_side)?;
    if a_side.is_empty() || b_side.is_empty() {
        return Err(Error::InvalidInput("separated sides must be nonempty".into()));
    }
    if !a_side.is_disjoint(s) || !b_side.is_disjoint(s) {
        return Err(Error::InvalidInput("separated sides must avoid the separator".into()));
    }
    if !a_side.is_disjoint(b_side) {
        return Ok(false);
    }
    // Search from a_side; a single hit on b_side decides.
    let mut seen = s.union(a_side);
    let mut stack: Vec<usize> = a_side.to_vec();
    while let Some(x) = stack.pop() {
        for y in g.neighbors(x) {
            if b_side.contains(y) {
                return Ok(false);
            }
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    Ok(true)
}

/// Components C of G(V \ s) with N(C) = s.
pub fn full_components(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    components_avoiding(g, s)
        .into_iter()
        .filter(|c| &g.neighborhood(c) == s)
        .collect()
}

/// True iff G(V \ s) has at least two full components.
pub fn is_minimal_separator(g: &Graph, s: &VertexSet) -> bool {
    if g.check_set(s).is_err() {
        return false;
    }
    full_components(g, s).len() >= 2
}

/// All 2-pairs {x, y}, x < y: non-adjacent pairs for which N(x) ∩ N(y) is a
/// nonempty minimal xy-separator.
pub fn two_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if g.has_edge(x, y) {
                continue;
            }
            let s = g.neighbors(x).intersection(g.neighbors(y));
            if s.is_empty() {
                continue;
            }
            let (a, b) = (VertexSet::singleton(x), VertexSet::singleton(y));
            if !is_separator_between(g, &s, &a, &b).expect("x, y lie outside N(x) ∩ N(y)") {
                continue;
            }
            let full = full_components(g, &s);
            let holds = |v: usize| full.iter().any(|c| c.contains(v));
            if holds(x) && holds(y) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Maximal cliques by Bron–Kerbosch with pivoting, sorted.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    bron_kerbosch(g, VertexSet::new(), g.vertices(), VertexSet::new(), &mut out);
    out.sort();
    out
}

fn bron_kerbosch(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| (p.intersection_len(g.neighbors(u)), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    for v in p.difference(g.neighbors(pivot)).to_vec() {
        let nb = g.neighbors(v);
        let mut next_r = r.clone();
        next_r.insert(v);
        bron_kerbosch(g, next_r, p.intersection(nb), x.intersection(nb), out);
        p.remove(v);
        x.insert(v);
    }
}
