//! Shared fixtures for unit tests.

use crate::graph::Graph;
use crate::set::VertexSet;
use crate::tree::LabeledSetTree;

/// Six atoms around the cut vertex 1: a hexagon with chords, a K4, two
/// triangles, a pendant edge and a 4-cycle hanging off the edge 10-11.
pub fn sample_graph() -> Graph {
    Graph::from_edges(&[
        ("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6"), ("1", "6"),
        ("1", "7"), ("7", "8"), ("1", "8"), ("1", "9"),
        ("2", "4"), ("2", "7"), ("1", "3"), ("3", "7"), ("3", "5"),
        ("10", "11"), ("11", "12"), ("12", "13"), ("10", "13"), ("1", "10"), ("1", "11"),
    ])
    .unwrap()
}

pub fn set(g: &Graph, names: &[&str]) -> VertexSet {
    g.vertex_set(names).unwrap()
}

/// A..F in sorted order.
pub fn sample_atoms(g: &Graph) -> Vec<VertexSet> {
    let atoms = vec![
        set(g, &["1", "2", "3", "4", "5", "6"]),
        set(g, &["1", "2", "3", "7"]),
        set(g, &["1", "7", "8"]),
        set(g, &["1", "9"]),
        set(g, &["1", "10", "11"]),
        set(g, &["10", "11", "12", "13"]),
    ];
    let mut sorted = atoms.clone();
    sorted.sort();
    assert_eq!(sorted, atoms);
    atoms
}

/// Edges AB, BC, AD, DE, EF, in that order.
pub fn sample_tree(g: &Graph) -> LabeledSetTree {
    LabeledSetTree::new(sample_atoms(g), &[(0, 1), (1, 2), (0, 3), (3, 4), (4, 5)]).unwrap()
}

pub fn sample_atom_graph_pairs() -> Vec<(usize, usize)> {
    vec![(0, 1), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5)]
}
