mod common;

use common::strategies::{connected_graph, graph};
use proptest::prelude::*;
use sepdec::atom_graph::{forest_join, subset_relation};
use sepdec::atoms::atom_tree;
use sepdec::cli::{run, Algo, Command, Format, RunConfig};
use sepdec::io::{parse_graph, Decomposition, DecompositionKind, GraphDoc};
use sepdec::Graph;

fn edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.vertex_count() {
        if g.degree(v) == 0 {
            out.push_str(&format!("{}\n", g.name(v)));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", g.name(u), g.name(v)));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_json_round_trips(g in graph(12)) {
        let text = serde_json::to_string(&GraphDoc::from_graph(&g)).unwrap();
        let doc: GraphDoc = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(doc.to_graph().unwrap(), g);
    }

    #[test]
    fn edge_lists_round_trip(g in graph(12)) {
        let back = parse_graph(&edge_list(&g)).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        let rename = |h: &Graph| {
            let mut e: Vec<(String, String)> = h.edges().map(|(u, v)| {
                let (a, b) = (h.name(u).to_owned(), h.name(v).to_owned());
                if a < b { (a, b) } else { (b, a) }
            }).collect();
            e.sort();
            e
        };
        prop_assert_eq!(rename(&back), rename(&g));
    }

    #[test]
    fn tree_and_atom_graph_json_round_trip(g in connected_graph(10)) {
        let t = atom_tree(&g).unwrap();
        let d = Decomposition::from_tree(DecompositionKind::AtomTree, g.names().to_vec(), &t);
        prop_assert_eq!(Decomposition::from_json(&d.to_json()).unwrap(), d);
        let ag = forest_join(&t, &subset_relation(&t));
        let d = Decomposition::from_atom_graph(DecompositionKind::AtomGraph, g.names().to_vec(), &ag);
        prop_assert_eq!(Decomposition::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn forest_output_round_trips(g in graph(10)) {
        let mut cfg = RunConfig::new(Command::AtomTree);
        cfg.format = Format::Json;
        let out = run(&cfg, &edge_list(&g));
        prop_assert_eq!(out.code, 0);
        let d = Decomposition::from_json(&out.stdout).unwrap();
        prop_assert_eq!(Decomposition::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn verify_only_changes_the_exit_code(g in graph(10), algo_i in 0usize..4, format_i in 0usize..3) {
        let algo = [Algo::ForestJoin, Algo::ForestJoinDelta, Algo::MaxWeight, Algo::Naive][algo_i];
        let format = [Format::Dot, Format::Json, Format::Text][format_i];
        let mut cfg = RunConfig::new(Command::AtomGraph);
        cfg.algo = Some(algo);
        cfg.format = format;
        let text = edge_list(&g);
        let plain = run(&cfg, &text);
        cfg.verify = true;
        let verified = run(&cfg, &text);
        prop_assert_eq!(&plain.stdout, &verified.stdout);
        prop_assert_eq!(verified.code, 0, "{}", verified.stderr);
    }

    #[test]
    fn dot_is_deterministic(g in graph(10)) {
        let mut cfg = RunConfig::new(Command::AtomGraph);
        cfg.format = Format::Dot;
        let text = edge_list(&g);
        prop_assert_eq!(run(&cfg, &text).stdout, run(&cfg, &text).stdout);
    }
}
