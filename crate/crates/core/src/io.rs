//! Text formats: edge-list and hyperedge-list parsers, and JSON, DOT and
//! plain-text renderings of decompositions.
//!
//! Vertex-name arrays are listed in vertex index order, which is the order
//! of first appearance in the input.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::atom_graph::AtomGraph;
use crate::atoms::{tree_stats, DecompositionStats};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{Hypergraph, AUX_PREFIX};
use crate::set::VertexSet;
use crate::tree::LabeledSetTree;

fn check_name(line: usize, name: &str) -> Result<()> {
    if name.starts_with(AUX_PREFIX) {
        return Err(Error::parse(line, format!("`{name}` uses the reserved prefix {AUX_PREFIX}")));
    }
    Ok(())
}

fn is_comment(line: &str) -> bool {
    line.trim_start().starts_with('#')
}

/// Parses an edge list: one `u v` edge or one lone vertex `v` per line.
/// Blank lines and lines starting with `#` are skipped; repeated edges
/// collapse.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if is_comment(raw) {
            continue;
        }
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [v] => {
                check_name(line, v)?;
                g.add_vertex(v);
            }
            [u, v] => {
                check_name(line, u)?;
                check_name(line, v)?;
                if u == v {
                    return Err(Error::parse(line, format!("self-loop on `{u}`")));
                }
                g.add_named_edge(u, v).map_err(|e| Error::parse(line, e.to_string()))?;
            }
            _ => return Err(Error::parse(line, format!("expected `u v` or `v`, found {} fields", tokens.len()))),
        }
    }
    Ok(g)
}

/// Parses a hyperedge list: one hyperedge per line as whitespace-separated
/// vertex names. Lines starting with `#` are skipped, and blank lines are
/// allowed only before the first and after the last hyperedge.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !is_comment(l)).collect();
    let first = lines.iter().position(|(_, l)| !l.trim().is_empty());
    let last = lines.iter().rposition(|(_, l)| !l.trim().is_empty());
    let body = match (first, last) {
        (Some(a), Some(b)) => &lines[a..=b],
        _ => &[][..],
    };
    let mut names: Vec<String> = Vec::new();
    let mut index = std::collections::HashMap::new();
    let mut hyperedges = Vec::new();
    let mut seen: HashSet<VertexSet> = HashSet::new();
    for &(line, raw) in body {
        let mut x = VertexSet::new();
        for name in raw.split_whitespace() {
            check_name(line, name)?;
            let v = *index.entry(name.to_owned()).or_insert_with(|| {
                names.push(name.to_owned());
                names.len() - 1
            });
            x.insert(v);
        }
        if x.is_empty() {
            return Err(Error::parse(line, "empty line inside the hyperedge list"));
        }
        if !seen.insert(x.clone()) {
            return Err(Error::parse(line, "duplicate hyperedge"));
        }
        hyperedges.push(x);
    }
    Hypergraph::new(names, hyperedges)
}

/// JSON form of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        let edges = g.edges().map(|(u, v)| [g.name(u).to_owned(), g.name(v).to_owned()]).collect();
        Self { vertices: g.names().to_vec(), edges }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let mut g = Graph::new();
        for v in &self.vertices {
            g.add_vertex(v);
        }
        if g.vertex_count() != self.vertices.len() {
            return Err(Error::InvalidInput("duplicate vertex name".into()));
        }
        for [u, v] in &self.edges {
            let (a, b) = (g.index_of(u), g.index_of(v));
            match (a, b) {
                (Some(a), Some(b)) => g.add_edge(a, b)?,
                _ => return Err(Error::UnknownVertex(if a.is_none() { u.clone() } else { v.clone() })),
            };
        }
        Ok(g)
    }
}

/// What a [`Decomposition`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionKind {
    Atoms,
    AtomTree,
    AtomGraph,
    JoinTree,
    UnionJoin,
}

impl DecompositionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Atoms => "atoms",
            Self::AtomTree => "atom-tree",
            Self::AtomGraph => "atom-graph",
            Self::JoinTree => "join-tree",
            Self::UnionJoin => "union-join",
        }
    }

    /// Trees and forests carry size statistics.
    pub fn is_tree(self) -> bool {
        matches!(self, Self::AtomTree | Self::JoinTree)
    }
}

/// A rendering-ready graph on vertex sets: an atom list, an atom forest, an
/// atom graph or a union join graph, possibly spanning several components of
/// the input. Node sets and edge endpoints use global indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub names: Vec<String>,
    pub nodes: Vec<VertexSet>,
    /// component id of each node
    pub component: Vec<usize>,
    /// sorted pairs `(a, b)`, `a < b`
    pub edges: Vec<(usize, usize)>,
}

impl Decomposition {
    pub fn new(kind: DecompositionKind, names: Vec<String>) -> Self {
        Self { kind, names, nodes: Vec::new(), component: Vec::new(), edges: Vec::new() }
    }

    /// Appends one component. `local_to_global` maps the vertex indices
    /// used by `nodes` to indices of `self.names`.
    pub fn push_component(&mut self, nodes: &[VertexSet], pairs: &[(usize, usize)], local_to_global: &[usize]) {
        let offset = self.nodes.len();
        let id = self.component_count();
        for x in nodes {
            self.nodes.push(x.iter().map(|v| local_to_global[v]).collect());
            self.component.push(id);
        }
        self.edges.extend(pairs.iter().map(|&(a, b)| (offset + a.min(b), offset + a.max(b))));
        self.edges.sort();
    }

    pub fn from_tree(kind: DecompositionKind, names: Vec<String>, t: &LabeledSetTree) -> Self {
        let identity: Vec<usize> = (0..names.len()).collect();
        let mut d = Self::new(kind, names);
        d.push_component(t.nodes(), &t.edge_pairs(), &identity);
        d
    }

    pub fn from_atom_graph(kind: DecompositionKind, names: Vec<String>, ag: &AtomGraph) -> Self {
        let identity: Vec<usize> = (0..names.len()).collect();
        let mut d = Self::new(kind, names);
        d.push_component(ag.nodes(), &ag.edge_pairs(), &identity);
        d
    }

    pub fn component_count(&self) -> usize {
        self.component.iter().max().map_or(0, |c| c + 1)
    }

    pub fn separator(&self, a: usize, b: usize) -> VertexSet {
        self.nodes[a].intersection(&self.nodes[b])
    }

    /// Adds an edge between every pair of nodes in different components.
    pub fn join_components(&mut self) {
        let p = self.nodes.len();
        for a in 0..p {
            for b in a + 1..p {
                if self.component[a] != self.component[b] {
                    self.edges.push((a, b));
                }
            }
        }
        self.edges.sort();
        self.edges.dedup();
    }

    /// Tree statistics summed over the components.
    pub fn stats(&self) -> DecompositionStats {
        let mut st = DecompositionStats { p: self.nodes.len(), s: self.nodes.iter().map(VertexSet::len).sum(), ..Default::default() };
        for &(a, b) in &self.edges {
            let common = self.separator(a, b).len();
            st.label_size_sum += common;
            st.s_delta += self.nodes[a].len() + self.nodes[b].len() - 2 * common;
        }
        st
    }

    /// The decomposition as a single tree; fails for forests with more than
    /// one component or for non-tree edge sets.
    pub fn to_tree(&self) -> Result<LabeledSetTree> {
        let t = LabeledSetTree::new(self.nodes.clone(), &self.edges)?;
        debug_assert_eq!(tree_stats(&t), self.stats());
        Ok(t)
    }

    fn set_names(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|v| self.names[v].clone()).collect()
    }

    fn format_set(&self, s: &VertexSet) -> String {
        format!("{{{}}}", self.set_names(s).join(","))
    }

    pub fn to_doc(&self) -> DecompositionDoc {
        let multi = self.component_count() > 1;
        DecompositionDoc {
            kind: self.kind,
            vertices: self.names.clone(),
            nodes: self.nodes.iter().map(|x| self.set_names(x)).collect(),
            components: multi.then(|| self.component.clone()),
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| EdgeDoc { source: a, target: b, separator: self.set_names(&self.separator(a, b)) })
                .collect(),
            stats: self.kind.is_tree().then(|| self.stats().into()),
        }
    }

    pub fn from_doc(doc: &DecompositionDoc) -> Result<Self> {
        let mut index = std::collections::HashMap::new();
        for (i, v) in doc.vertices.iter().enumerate() {
            if index.insert(v.as_str(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate vertex `{v}`")));
            }
        }
        let lookup = |names: &[String]| -> Result<VertexSet> {
            names.iter().map(|n| index.get(n.as_str()).copied().ok_or_else(|| Error::UnknownVertex(n.clone()))).collect()
        };
        let nodes = doc.nodes.iter().map(|n| lookup(n)).collect::<Result<Vec<_>>>()?;
        let component = doc.components.clone().unwrap_or_else(|| vec![0; nodes.len()]);
        if component.len() != nodes.len() {
            return Err(Error::InvalidInput("component list length differs from node count".into()));
        }
        let mut d = Self { kind: doc.kind, names: doc.vertices.clone(), nodes, component, edges: Vec::new() };
        for e in &doc.edges {
            if e.source >= d.nodes.len() || e.target >= d.nodes.len() || e.source == e.target {
                return Err(Error::InvalidInput(format!("bad edge {}-{}", e.source, e.target)));
            }
            if lookup(&e.separator)? != d.separator(e.source, e.target) {
                return Err(Error::InvalidInput(format!("separator of edge {}-{} differs from the node intersection", e.source, e.target)));
            }
            d.edges.push((e.source.min(e.target), e.source.max(e.target)));
        }
        d.edges.sort();
        d.edges.dedup();
        Ok(d)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: DecompositionDoc = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
        Self::from_doc(&doc)
    }

    /// Graphviz rendering; nodes and edges are labeled with their vertex
    /// sets, components become clusters.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph \"{}\" {{", self.kind.as_str()).unwrap();
        let multi = self.component_count() > 1;
        for c in 0..self.component_count().max(1) {
            let indent = if multi { "    " } else { "  " };
            if multi {
                writeln!(out, "  subgraph cluster_{c} {{").unwrap();
                writeln!(out, "    label=\"component {c}\";").unwrap();
            }
            for (i, x) in self.nodes.iter().enumerate().filter(|&(i, _)| self.component[i] == c) {
                writeln!(out, "{indent}n{i} [label=\"{}\"];", dot_escape(&self.format_set(x))).unwrap();
            }
            if multi {
                writeln!(out, "  }}").unwrap();
            }
        }
        for &(a, b) in &self.edges {
            writeln!(out, "  n{a} -- n{b} [label=\"{}\"];", dot_escape(&self.format_set(&self.separator(a, b)))).unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// Line-oriented rendering: `node <i> <set>` lines (with a component id
    /// when there are several components), then `edge <a> <b> <separator>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let multi = self.component_count() > 1;
        writeln!(out, "# {}: {} nodes, {} edges", self.kind.as_str(), self.nodes.len(), self.edges.len()).unwrap();
        for (i, x) in self.nodes.iter().enumerate() {
            write!(out, "node {i} {}", self.format_set(x)).unwrap();
            if multi {
                write!(out, " component {}", self.component[i]).unwrap();
            }
            out.push('\n');
        }
        for &(a, b) in &self.edges {
            writeln!(out, "edge {a} {b} {}", self.format_set(&self.separator(a, b))).unwrap();
        }
        if self.kind.is_tree() {
            let st = self.stats();
            writeln!(out, "# p={} s={} s_delta={} label_size_sum={}", st.p, st.s, st.s_delta, st.label_size_sum).unwrap();
        }
        out
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub source: usize,
    pub target: usize,
    pub separator: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsDoc {
    pub p: usize,
    pub s: usize,
    pub s_delta: usize,
    pub label_size_sum: usize,
}

impl From<DecompositionStats> for StatsDoc {
    fn from(st: DecompositionStats) -> Self {
        Self { p: st.p, s: st.s, s_delta: st.s_delta, label_size_sum: st.label_size_sum }
    }
}

/// JSON form of a [`Decomposition`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDoc {
    pub kind: DecompositionKind,
    pub vertices: Vec<String>,
    pub nodes: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<usize>>,
    pub edges: Vec<EdgeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<StatsDoc>,
}
