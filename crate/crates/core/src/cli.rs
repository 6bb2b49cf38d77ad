//! Command dispatch behind the `sepdec` binary, kept in the library so it can
//! be driven and tested without spawning a process.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;

use crate::atom_graph::{ag_max_weight, forest_join, forest_join_delta, naive_atom_graph, subset_relation, AtomGraph};
use crate::atoms::{atom_tree, is_valid_atom_tree, weighted_intersection_graph};
use crate::chordal::is_chordal;
use crate::error::{Error, ErrorKind};
use crate::graph::{connected_components, Graph};
use crate::hypergraph::{is_alpha_acyclic, is_clutter, join_tree, tuj, union_join_graph, Hypergraph, UnionJoinAlgorithm};
use crate::io::{parse_graph, parse_hypergraph, Decomposition, DecompositionKind};

pub const EXIT_OK: i32 = 0;
/// Unreadable input or an invalid command line.
pub const EXIT_PARSE: i32 = 1;
/// The input is well formed but outside an operation's domain.
pub const EXIT_DOMAIN: i32 = 2;
/// `--verify` found a disagreement with the reference computation.
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// List the atoms
    Atoms,
    /// An atom tree (a forest for disconnected input)
    AtomTree,
    /// The atom graph
    AtomGraph,
    /// The union join graph of a hypergraph
    UnionJoin,
    /// Report chordality, acyclicity and clutter status
    Check,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    ForestJoin,
    ForestJoinDelta,
    MaxWeight,
    MinWeight,
    Naive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    Dot,
    Json,
    #[default]
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputKind {
    Graph,
    Hypergraph,
}

/// One invocation, minus the input file itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub algo: Option<Algo>,
    pub format: Format,
    pub verify: bool,
    pub hypergraph_convention: bool,
    /// Input kind for `check`; other commands imply it.
    pub input: Option<InputKind>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self { command, algo: None, format: Format::Text, verify: false, hypergraph_convention: false, input: None }
    }

    /// Rejects option combinations the command does not support.
    pub fn validate(&self) -> Result<(), String> {
        let allowed: &[Algo] = match self.command {
            Command::AtomGraph => &[Algo::ForestJoin, Algo::ForestJoinDelta, Algo::MaxWeight, Algo::Naive],
            Command::UnionJoin => &[Algo::ForestJoin, Algo::MaxWeight, Algo::MinWeight],
            _ => &[],
        };
        if let Some(algo) = self.algo {
            if !allowed.contains(&algo) {
                let name = algo.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default();
                return Err(format!("--algo {name} is not available for this command"));
            }
        }
        if self.hypergraph_convention && self.command != Command::AtomGraph {
            return Err("--hypergraph-convention only applies to atom-graph".into());
        }
        if self.input.is_some() && self.command != Command::Check {
            return Err("--input only applies to check".into());
        }
        if self.command == Command::Check && self.format == Format::Dot {
            return Err("check has no dot output".into());
        }
        Ok(())
    }

    fn input_kind(&self) -> InputKind {
        match self.command {
            Command::UnionJoin => InputKind::Hypergraph,
            Command::Check => self.input.unwrap_or(InputKind::Graph),
            _ => InputKind::Graph,
        }
    }
}

/// Exit code and captured output of [`run`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(code: i32, message: String) -> Self {
        Self { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e.kind() {
        ErrorKind::Parse | ErrorKind::Input => EXIT_PARSE,
        ErrorKind::Domain => EXIT_DOMAIN,
    }
}

/// Runs `cfg` on the contents of the input file.
///
/// With `verify`, the primary output is produced as usual and the result is
/// recomputed by the reference route; a mismatch only changes the exit code
/// and adds a diff on stderr.
pub fn run(cfg: &RunConfig, input: &str) -> Outcome {
    if let Err(msg) = cfg.validate() {
        return Outcome::failure(EXIT_PARSE, msg);
    }
    let result = match cfg.input_kind() {
        InputKind::Graph => parse_graph(input).and_then(|g| run_graph(cfg, &g)),
        InputKind::Hypergraph => parse_hypergraph(input).and_then(|h| run_hypergraph(cfg, &h)),
    };
    match result {
        Ok((stdout, diff)) if diff.is_empty() => Outcome { code: EXIT_OK, stdout, stderr: String::new() },
        Ok((stdout, diff)) => Outcome { code: EXIT_VERIFY, stdout, stderr: format!("verification failed:\n{diff}") },
        Err(e) => Outcome::failure(exit_code(&e), e.to_string()),
    }
}

type Rendered = (String, String);

fn render(d: &Decomposition, format: Format) -> String {
    match format {
        Format::Dot => d.to_dot(),
        Format::Json => d.to_json() + "\n",
        Format::Text => d.to_text(),
    }
}

fn render_atoms(d: &Decomposition, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for x in &d.nodes {
                let names: Vec<&str> = x.iter().map(|v| d.names[v].as_str()).collect();
                writeln!(out, "{{{}}}", names.join(",")).unwrap();
            }
            out
        }
        _ => render(d, format),
    }
}

fn graph_atom_graph(sub: &Graph, algo: Algo) -> Result<AtomGraph, Error> {
    let t = atom_tree(sub)?;
    Ok(match algo {
        Algo::ForestJoin => forest_join(&t, &subset_relation(&t)),
        Algo::ForestJoinDelta => forest_join_delta(&t),
        Algo::MaxWeight => ag_max_weight(&weighted_intersection_graph(t.nodes())?, t.nodes())?,
        Algo::Naive => naive_atom_graph(sub, t.nodes())?,
        Algo::MinWeight => return Err(Error::InvalidInput("min-weight does not compute atom graphs".into())),
    })
}

/// Per-component atom graphs of `g`, merged into one decomposition. With
/// `hypergraph_convention`, atoms of different components are also joined.
pub fn atom_graph_forest(g: &Graph, algo: Algo, hypergraph_convention: bool) -> Result<Decomposition, Error> {
    let mut d = Decomposition::new(DecompositionKind::AtomGraph, g.names().to_vec());
    for c in connected_components(g) {
        let (sub, map) = g.induced_subgraph(&c);
        let ag = graph_atom_graph(&sub, algo)?;
        d.push_component(ag.nodes(), &ag.edge_pairs(), &map);
    }
    if hypergraph_convention {
        d.join_components();
    }
    Ok(d)
}

/// An atom tree per component (an atom forest), with a description of every
/// component whose tree fails validation.
pub fn atom_forest(g: &Graph, kind: DecompositionKind) -> Result<(Decomposition, Vec<String>), Error> {
    let mut d = Decomposition::new(kind, g.names().to_vec());
    let mut invalid = Vec::new();
    for (i, c) in connected_components(g).into_iter().enumerate() {
        let (sub, map) = g.induced_subgraph(&c);
        let t = atom_tree(&sub)?;
        if !is_valid_atom_tree(&sub, &t) {
            invalid.push(format!("component {i}: atom tree fails running intersection or has a non-separator label"));
        }
        let pairs = if kind == DecompositionKind::Atoms { Vec::new() } else { t.edge_pairs() };
        d.push_component(t.nodes(), &pairs, &map);
    }
    Ok((d, invalid))
}

/// The union join graph of `h` by `algo` (forest-join, max-weight or
/// min-weight).
pub fn union_join_decomposition(h: &Hypergraph, algo: Algo) -> Result<Decomposition, Error> {
    let algo = match algo {
        Algo::ForestJoin => UnionJoinAlgorithm::ForestJoin,
        Algo::MaxWeight => UnionJoinAlgorithm::MaxWeight,
        Algo::MinWeight => UnionJoinAlgorithm::MinWeight,
        other => return Err(Error::InvalidInput(format!("{other:?} does not compute union join graphs"))),
    };
    let uj = union_join_graph(h, algo)?;
    Ok(Decomposition::from_atom_graph(DecompositionKind::UnionJoin, h.names().to_vec(), &uj))
}

/// Edge differences between `got` and the reference `want`, one line each;
/// empty when they agree.
pub fn diff_edges(got: &Decomposition, want: &Decomposition) -> String {
    let mut out = String::new();
    if got.nodes != want.nodes {
        out.push_str("node sets differ\n");
        return out;
    }
    let fmt = |d: &Decomposition, a: usize, b: usize| {
        let names: Vec<&str> = d.separator(a, b).iter().map(|v| d.names[v].as_str()).collect();
        format!("{a} {b} {{{}}}", names.join(","))
    };
    for &(a, b) in &got.edges {
        if !want.edges.contains(&(a, b)) {
            writeln!(out, "+ edge {}", fmt(got, a, b)).unwrap();
        }
    }
    for &(a, b) in &want.edges {
        if !got.edges.contains(&(a, b)) {
            writeln!(out, "- edge {}", fmt(want, a, b)).unwrap();
        }
    }
    out
}

fn run_graph(cfg: &RunConfig, g: &Graph) -> Result<Rendered, Error> {
    match cfg.command {
        Command::Atoms | Command::AtomTree => {
            let kind = if cfg.command == Command::Atoms { DecompositionKind::Atoms } else { DecompositionKind::AtomTree };
            let (d, invalid) = atom_forest(g, kind)?;
            let diff = if cfg.verify { invalid.iter().map(|l| format!("{l}\n")).collect() } else { String::new() };
            let out = if kind == DecompositionKind::Atoms { render_atoms(&d, cfg.format) } else { render(&d, cfg.format) };
            Ok((out, diff))
        }
        Command::AtomGraph => {
            let algo = cfg.algo.unwrap_or(Algo::ForestJoin);
            let d = atom_graph_forest(g, algo, cfg.hypergraph_convention)?;
            let diff = if cfg.verify {
                diff_edges(&d, &atom_graph_forest(g, Algo::Naive, cfg.hypergraph_convention)?)
            } else {
                String::new()
            };
            Ok((render(&d, cfg.format), diff))
        }
        Command::Check => {
            let components = connected_components(g);
            let mut atom_count = 0;
            for c in &components {
                atom_count += atom_tree(&g.induced_subgraph(c).0)?.node_count();
            }
            let report = GraphReport {
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                components: components.len(),
                connected: components.len() <= 1,
                chordal: is_chordal(g),
                atoms: atom_count,
            };
            Ok((report.render(cfg.format), String::new()))
        }
        Command::UnionJoin => unreachable!("union-join reads a hypergraph"),
    }
}

fn run_hypergraph(cfg: &RunConfig, h: &Hypergraph) -> Result<Rendered, Error> {
    match cfg.command {
        Command::UnionJoin => {
            let d = union_join_decomposition(h, cfg.algo.unwrap_or(Algo::ForestJoin))?;
            let diff = if cfg.verify {
                let reference = tuj(&join_tree(h)?);
                diff_edges(&d, &Decomposition::from_atom_graph(DecompositionKind::UnionJoin, h.names().to_vec(), &reference))
            } else {
                String::new()
            };
            Ok((render(&d, cfg.format), diff))
        }
        Command::Check => {
            let report = HypergraphReport {
                vertices: h.vertex_count(),
                hyperedges: h.hyperedge_count(),
                connected: h.is_connected(),
                alpha_acyclic: is_alpha_acyclic(h),
                clutter: is_clutter(h),
            };
            Ok((report.render(cfg.format), String::new()))
        }
        _ => unreachable!("graph commands read a graph"),
    }
}

#[derive(Serialize)]
struct GraphReport {
    vertices: usize,
    edges: usize,
    components: usize,
    connected: bool,
    chordal: bool,
    atoms: usize,
}

#[derive(Serialize)]
struct HypergraphReport {
    vertices: usize,
    hyperedges: usize,
    connected: bool,
    alpha_acyclic: bool,
    clutter: bool,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl GraphReport {
    fn render(&self, format: Format) -> String {
        if format == Format::Json {
            return serde_json::to_string_pretty(self).expect("serializable") + "\n";
        }
        format!(
            "vertices {}\nedges {}\ncomponents {}\nconnected {}\nchordal {}\natoms {}\n",
            self.vertices,
            self.edges,
            self.components,
            yes_no(self.connected),
            yes_no(self.chordal),
            self.atoms
        )
    }
}

impl HypergraphReport {
    fn render(&self, format: Format) -> String {
        if format == Format::Json {
            return serde_json::to_string_pretty(self).expect("serializable") + "\n";
        }
        format!(
            "vertices {}\nhyperedges {}\nconnected {}\nalpha-acyclic {}\nclutter {}\n",
            self.vertices,
            self.hyperedges,
            yes_no(self.connected),
            yes_no(self.alpha_acyclic),
            yes_no(self.clutter)
        )
    }
}
