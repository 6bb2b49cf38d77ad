//! Clique minimal separator decomposition of graphs, atom graphs, and union
//! join graphs of α-acyclic hypergraphs.
//!
//! Graphs are simple and undirected, with named vertices mapped to dense
//! indices. Sets of vertices are [`VertexSet`] bitsets; trees of vertex sets
//! (clique trees, atom trees, join trees) are [`LabeledSetTree`]s.

pub mod atom_graph;
pub mod atoms;
pub mod chordal;
pub mod cli;
pub mod error;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod set;
pub mod tree;
pub mod weighted;

#[cfg(test)]
pub(crate) mod testutil;

pub use atom_graph::{AtomGraph, SubsetRelation};
pub use atoms::{atom_tree, atoms, DecompositionStats};
pub use error::{Error, ErrorKind, Result};
pub use graph::Graph;
pub use hypergraph::{Hypergraph, UnionJoinAlgorithm};
pub use set::VertexSet;
pub use tree::LabeledSetTree;
pub use weighted::WeightedEdgeGraph;
