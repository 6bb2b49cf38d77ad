//! Seeded instance generators and brute-force oracles shared by the
//! integration tests. The oracles work on `u64` bitmasks and use none of the
//! library's algorithms, only its data types.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sepdec::chordal::mcs_m;
use sepdec::graph::is_connected;
use sepdec::{Graph, Hypergraph, LabeledSetTree, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const SAMPLE_EDGES: &[(&str, &str)] = &[
    ("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6"), ("1", "6"),
    ("1", "7"), ("7", "8"), ("1", "8"), ("1", "9"),
    ("2", "4"), ("2", "7"), ("1", "3"), ("3", "7"), ("3", "5"),
    ("10", "11"), ("11", "12"), ("12", "13"), ("10", "13"), ("1", "10"), ("1", "11"),
];

pub fn sample_graph() -> Graph {
    Graph::from_edges(SAMPLE_EDGES).unwrap()
}

pub fn named_set(g: &Graph, names: &[&str]) -> VertexSet {
    g.vertex_set(names).unwrap()
}

/// A, .., F as listed for the fixture.
pub fn sample_atoms(g: &Graph) -> Vec<VertexSet> {
    [
        &["1", "2", "3", "4", "5", "6"][..],
        &["1", "2", "3", "7"],
        &["1", "7", "8"],
        &["1", "9"],
        &["1", "10", "11"],
        &["10", "11", "12", "13"],
    ]
    .iter()
    .map(|names| named_set(g, names))
    .collect()
}

/// G(n, p) conditioned on connectivity (resampled until connected).
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_index_edges(n, &edges).unwrap();
        if is_connected(&g) {
            return g;
        }
    }
}

/// A connected chordal graph: a random connected graph plus its MCS-M fill.
pub fn random_connected_chordal_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let g = random_connected_graph(rng, n, p);
    mcs_m(&g).unwrap().apply(&g)
}

/// An α-acyclic hypergraph built along a random tree: every new hyperedge
/// takes a random part of its parent plus fresh vertices, so the tree is a
/// join tree. With `shrink`, some hyperedges are proper subsets of their
/// parent instead; with `allow_disjoint`, a hyperedge may share nothing with
/// its parent.
pub fn random_acyclic_hypergraph(rng: &mut ChaCha8Rng, p: usize, shrink: bool, allow_disjoint: bool) -> Hypergraph {
    assert!(p >= 1);
    let mut next_vertex = 0usize;
    let mut fresh = |count: usize| -> Vec<usize> {
        let v: Vec<usize> = (next_vertex..next_vertex + count).collect();
        next_vertex += count;
        v
    };
    let mut edges: Vec<Vec<usize>> = vec![fresh(rng.gen_range(1..=3))];
    while edges.len() < p {
        let parent = edges[rng.gen_range(0..edges.len())].clone();
        let mut kept: Vec<usize> = parent.iter().copied().filter(|_| rng.gen_bool(0.6)).collect();
        if kept.is_empty() && !(allow_disjoint && rng.gen_bool(0.3)) {
            kept.push(*parent.choose(rng).unwrap());
        }
        let candidate = if shrink && parent.len() > 1 && rng.gen_bool(0.35) {
            if kept.len() == parent.len() {
                kept.pop();
            }
            if kept.is_empty() {
                continue;
            }
            kept
        } else {
            let mut c = kept;
            c.extend(fresh(rng.gen_range(1..=2)));
            c
        };
        let mut sorted = candidate.clone();
        sorted.sort_unstable();
        if edges.iter().any(|e| {
            let mut s = e.clone();
            s.sort_unstable();
            s == sorted
        }) {
            continue;
        }
        edges.push(candidate);
    }
    let n = edges.iter().flatten().max().unwrap() + 1;
    let names: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
    let sets = edges.into_iter().map(|e| e.into_iter().collect()).collect();
    Hypergraph::new(names, sets).unwrap()
}

pub fn mask_of(s: &VertexSet) -> u64 {
    s.iter().fold(0u64, |m, v| {
        assert!(v < 64, "oracles take at most 64 vertices");
        m | 1 << v
    })
}

pub fn set_of(mask: u64) -> VertexSet {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Adjacency bitmasks of a small graph.
pub struct Masks {
    pub n: usize,
    pub adj: Vec<u64>,
}

impl Masks {
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        assert!(n <= 20, "brute-force oracles are exponential");
        let mut adj = vec![0u64; n];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Self { n, adj }
    }

    pub fn all(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn neighborhood(&self, c: u64) -> u64 {
        let mut out = 0;
        for v in 0..self.n {
            if c >> v & 1 == 1 {
                out |= self.adj[v];
            }
        }
        out & !c
    }

    /// Components of the subgraph induced by `within`.
    pub fn components(&self, within: u64) -> Vec<u64> {
        let mut left = within;
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            loop {
                let grown = (comp | self.neighborhood(comp)) & within;
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    pub fn is_connected(&self, within: u64) -> bool {
        self.components(within).len() <= 1
    }

    pub fn is_clique(&self, s: u64) -> bool {
        (0..self.n).filter(|&v| s >> v & 1 == 1).all(|v| s & !(1 << v) & !self.adj[v] == 0)
    }

    /// Components of G - s whose neighborhood is all of s.
    pub fn full_components(&self, s: u64) -> Vec<u64> {
        self.components(self.all() & !s).into_iter().filter(|&c| self.neighborhood(c) == s).collect()
    }

    pub fn is_minimal_separator(&self, s: u64) -> bool {
        self.full_components(s).len() >= 2
    }
}

/// Atoms as the inclusion-maximal vertex subsets inducing a connected
/// subgraph without a clique separator, by exhaustive search.
pub fn brute_atoms(g: &Graph) -> Vec<VertexSet> {
    let m = Masks::new(g);
    let total = 1usize << m.n;
    let connected: Vec<bool> = (0..total).map(|x| x != 0 && m.is_connected(x as u64)).collect();
    let clique: Vec<bool> = (0..total).map(|s| m.is_clique(s as u64)).collect();
    let mut candidates = Vec::new();
    for x in 1..total {
        if !connected[x] {
            continue;
        }
        // any clique S ⊊ X (possibly empty) leaving X \ S disconnected
        let mut has_separator = false;
        let mut s = x;
        loop {
            s = (s - 1) & x;
            if clique[s] && !connected[x & !s] {
                has_separator = true;
                break;
            }
            if s == 0 {
                break;
            }
        }
        if !has_separator {
            candidates.push(x as u64);
        }
    }
    let mut atoms: Vec<VertexSet> = candidates
        .iter()
        .filter(|&&x| !candidates.iter().any(|&y| y != x && x & y == x))
        .map(|&x| set_of(x))
        .collect();
    atoms.sort();
    atoms
}

/// Every minimal separator, as masks.
pub fn brute_minimal_separators(g: &Graph) -> Vec<u64> {
    let m = Masks::new(g);
    (1..1u64 << m.n).filter(|&s| m.is_minimal_separator(s)).collect()
}

/// Non-adjacent pairs all of whose chordless connecting paths have exactly
/// two edges, by enumerating chordless paths.
pub fn brute_two_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let m = Masks::new(g);
    let mut out = Vec::new();
    for x in 0..m.n {
        for y in x + 1..m.n {
            if m.adj[x] >> y & 1 == 1 {
                continue;
            }
            let mut lengths = Vec::new();
            chordless_paths(&m, y, &mut vec![x], 1 << x, &mut lengths);
            if !lengths.is_empty() && lengths.iter().all(|&l| l == 2) {
                out.push((x, y));
            }
        }
    }
    out
}

fn chordless_paths(m: &Masks, target: usize, path: &mut Vec<usize>, on_path: u64, lengths: &mut Vec<usize>) {
    let last = *path.last().unwrap();
    let earlier = on_path & !(1 << last);
    for v in 0..m.n {
        if m.adj[last] >> v & 1 == 0 || on_path >> v & 1 == 1 || m.adj[v] & earlier != 0 {
            continue;
        }
        if v == target {
            lengths.push(path.len());
            continue;
        }
        path.push(v);
        chordless_paths(m, target, path, on_path | 1 << v, lengths);
        path.pop();
    }
}

/// Running intersection over mask nodes and an edge list.
pub fn mask_running_intersection(nodes: &[u64], edges: &[(usize, usize)]) -> bool {
    let all = nodes.iter().fold(0, |a, &x| a | x);
    (0..64).filter(|&v| all >> v & 1 == 1).all(|v| {
        let containing = nodes.iter().filter(|&&x| x >> v & 1 == 1).count();
        let labeled = edges.iter().filter(|&&(a, b)| (nodes[a] & nodes[b]) >> v & 1 == 1).count();
        labeled + 1 == containing
    })
}

/// Every spanning tree of the complete graph on `nodes` that has the
/// running-intersection property, as sorted edge lists. Trees are grown edge
/// by edge; a partial forest is abandoned once some vertex's containing
/// nodes are split between two forest components that both already hold an
/// edge labeled with it (such a split can never be repaired).
pub fn brute_join_trees(nodes: &[u64]) -> Vec<Vec<(usize, usize)>> {
    let p = nodes.len();
    if p <= 1 {
        return vec![Vec::new()];
    }
    let pairs: Vec<(usize, usize)> = (0..p).flat_map(|a| (a + 1..p).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    let comp: Vec<usize> = (0..p).collect();
    grow(nodes, &pairs, 0, &comp, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn grow(nodes: &[u64], pairs: &[(usize, usize)], i: usize, comp: &[usize], chosen: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
    let p = nodes.len();
    if chosen.len() == p - 1 {
        if mask_running_intersection(nodes, chosen) {
            out.push(chosen.clone());
        }
        return;
    }
    if pairs.len() - i < p - 1 - chosen.len() {
        return;
    }
    let (a, b) = pairs[i];
    if comp[a] != comp[b] {
        // Joining two components whose unions share a vertex v is only
        // admissible if v lies in both endpoints; otherwise v's nodes could
        // never become connected through this edge later.
        let union = |c: usize| (0..p).filter(|&x| comp[x] == c).fold(0u64, |m, x| m | nodes[x]);
        let shared = union(comp[a]) & union(comp[b]);
        if shared & !(nodes[a] & nodes[b]) == 0 {
            let (keep, gone) = (comp[a], comp[b]);
            let merged: Vec<usize> = comp.iter().map(|&c| if c == gone { keep } else { c }).collect();
            chosen.push((a, b));
            grow(nodes, pairs, i + 1, &merged, chosen, out);
            chosen.pop();
        }
    }
    grow(nodes, pairs, i + 1, comp, chosen, out);
}

/// tuj over mask nodes: XY is an edge iff some edge of the tree path from X
/// to Y is labeled X ∩ Y.
pub fn mask_tuj(nodes: &[u64], edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let p = nodes.len();
    let mut adj = vec![Vec::new(); p];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut out = Vec::new();
    for x in 0..p {
        // DFS from x carrying the labels seen on the path
        let mut stack = vec![(x, usize::MAX, Vec::<u64>::new())];
        while let Some((u, from, labels)) = stack.pop() {
            if u > x && labels.contains(&(nodes[x] & nodes[u])) {
                out.push((x, u));
            }
            for &w in &adj[u] {
                if w != from {
                    let mut next = labels.clone();
                    next.push(nodes[u] & nodes[w]);
                    stack.push((w, u, next));
                }
            }
        }
    }
    out.sort();
    out
}

pub fn tree_masks(t: &LabeledSetTree) -> Vec<u64> {
    t.nodes().iter().map(mask_of).collect()
}

/// Atoms by recursive decomposition: find any clique minimal separator of
/// the current piece by exhaustive search, split into the pieces C ∪ N(C)
/// for the components C, and recurse. Non-maximal results are dropped.
pub fn brute_atoms_recursive(g: &Graph) -> Vec<VertexSet> {
    let m = Masks::new(g);
    let mut found = Vec::new();
    if m.n > 0 {
        split_piece(&m, m.all(), &mut found);
    }
    found.sort_unstable();
    found.dedup();
    let mut atoms: Vec<VertexSet> = found
        .iter()
        .filter(|&&x| !found.iter().any(|&y| y != x && x & y == x))
        .map(|&x| set_of(x))
        .collect();
    atoms.sort();
    atoms
}

fn split_piece(m: &Masks, piece: u64, found: &mut Vec<u64>) {
    let sub = Masks { n: m.n, adj: m.adj.iter().enumerate().map(|(v, &a)| if piece >> v & 1 == 1 { a & piece } else { 0 }).collect() };
    let comps_avoiding = |s: u64| sub.components(piece & !s);
    let mut s = piece;
    while s != 0 {
        s = (s - 1) & piece;
        if !sub.is_clique(s) {
            continue;
        }
        let comps = comps_avoiding(s);
        let full = comps.iter().filter(|&&c| sub.neighborhood(c) == s).count();
        if full >= 2 || (s == 0 && comps.len() >= 2) {
            for c in comps {
                split_piece(m, c | sub.neighborhood(c), found);
            }
            return;
        }
    }
    found.push(piece);
}

/// Chordal iff no vertex subset of size ≥ 4 induces a cycle.
pub fn brute_is_chordal(g: &Graph) -> bool {
    let m = Masks::new(g);
    (0..1u64 << m.n).filter(|x| x.count_ones() >= 4).all(|x| {
        let induces_cycle = (0..m.n).filter(|&v| x >> v & 1 == 1).all(|v| (m.adj[v] & x).count_ones() == 2) && m.is_connected(x);
        !induces_cycle
    })
}

pub fn brute_maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let m = Masks::new(g);
    let cliques: Vec<u64> = (1..1u64 << m.n).filter(|&s| m.is_clique(s)).collect();
    let mut out: Vec<VertexSet> = cliques
        .iter()
        .filter(|&&c| (0..m.n).all(|v| c >> v & 1 == 1 || !m.is_clique(c | 1 << v)))
        .map(|&c| set_of(c))
        .collect();
    out.sort();
    out
}

/// Inclusion-minimal ab-separators for some non-adjacent a, b, by testing
/// every vertex subset against every pair.
pub fn brute_inclusion_minimal_separators(g: &Graph) -> Vec<u64> {
    let m = Masks::new(g);
    let separates = |s: u64, a: usize, b: usize| {
        m.components(m.all() & !s).iter().all(|&c| !(c >> a & 1 == 1 && c >> b & 1 == 1))
    };
    let mut out = Vec::new();
    for s in 1..1u64 << m.n {
        let minimal_for_some_pair = (0..m.n).any(|a| {
            (a + 1..m.n).any(|b| {
                s >> a & 1 == 0
                    && s >> b & 1 == 0
                    && separates(s, a, b)
                    && (0..m.n).filter(|&v| s >> v & 1 == 1).all(|v| !separates(s & !(1 << v), a, b))
            })
        });
        if minimal_for_some_pair {
            out.push(s);
        }
    }
    out
}

/// Every spanning tree of a small weighted graph as (total weight, sorted
/// pairs).
pub fn brute_spanning_trees(p: usize, edges: &[(usize, usize, u64)]) -> Vec<(u64, Vec<(usize, usize)>)> {
    let mut out = Vec::new();
    fn rec(p: usize, edges: &[(usize, usize, u64)], i: usize, comp: &[usize], chosen: &mut Vec<usize>, out: &mut Vec<(u64, Vec<(usize, usize)>)>) {
        if chosen.len() + 1 == p.max(1) {
            let mut pairs: Vec<(usize, usize)> = chosen.iter().map(|&e| (edges[e].0, edges[e].1)).collect();
            pairs.sort();
            out.push((chosen.iter().map(|&e| edges[e].2).sum(), pairs));
            return;
        }
        if i == edges.len() {
            return;
        }
        let (a, b, _) = edges[i];
        if comp[a] != comp[b] {
            let (keep, gone) = (comp[a], comp[b]);
            let merged: Vec<usize> = comp.iter().map(|&c| if c == gone { keep } else { c }).collect();
            chosen.push(i);
            rec(p, edges, i + 1, &merged, chosen, out);
            chosen.pop();
        }
        rec(p, edges, i + 1, comp, chosen, out);
    }
    let comp: Vec<usize> = (0..p).collect();
    rec(p, edges, 0, &comp, &mut Vec::new(), &mut out);
    out
}

/// GYO reduction: repeatedly delete vertices lying in a single hyperedge and
/// hyperedges that are empty or contained in another. α-acyclic iff nothing
/// remains.
pub fn gyo_acyclic(h: &Hypergraph) -> bool {
    let mut edges: Vec<u64> = h.hyperedges().iter().map(mask_of).collect();
    loop {
        let mut changed = false;
        // ears: vertices in exactly one hyperedge
        let all = edges.iter().fold(0u64, |a, &e| a | e);
        for v in 0..64 {
            if all >> v & 1 == 1 && edges.iter().filter(|&&e| e >> v & 1 == 1).count() == 1 {
                for e in edges.iter_mut() {
                    *e &= !(1 << v);
                }
                changed = true;
            }
        }
        let before = edges.len();
        let mut kept: Vec<u64> = Vec::new();
        for (i, &e) in edges.iter().enumerate() {
            let covered = e == 0
                || edges.iter().enumerate().any(|(j, &f)| j != i && e & f == e && (e != f || j < i));
            if !covered {
                kept.push(e);
            }
        }
        if kept.len() != before {
            changed = true;
        }
        edges = kept;
        if !changed {
            return edges.is_empty();
        }
    }
}

pub mod strategies {
    use proptest::prelude::*;
    use sepdec::graph::connected_components;
    use sepdec::Graph;

    /// Any graph on 1..=max_n vertices.
    pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                let edges: Vec<(usize, usize)> = pairs.into_iter().zip(bits).filter(|&(_, b)| b).map(|(e, _)| e).collect();
                Graph::from_index_edges(n, &edges).unwrap()
            })
        })
    }

    /// A graph made connected by linking the smallest vertices of
    /// consecutive components.
    pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        graph(max_n).prop_map(|mut g| {
            let firsts: Vec<usize> = connected_components(&g).iter().map(|c| c.first().unwrap()).collect();
            for w in firsts.windows(2) {
                g.add_edge(w[0], w[1]).unwrap();
            }
            g
        })
    }

    pub fn seed() -> impl Strategy<Value = u64> {
        any::<u64>()
    }
}
