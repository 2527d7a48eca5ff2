use lrc::graph_lrc::{generate_regular_girth, moore_lower_bound, named_graph, SimpleGraph};
use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;
use proptest::prelude::*;

fn to_petgraph(g: &SimpleGraph) -> UnGraph<(), ()> {
    let edges: Vec<(u32, u32)> = g.edges().iter().map(|&(u, w)| (u as u32, w as u32)).collect();
    let mut pg = UnGraph::from_edges(&edges);
    while pg.node_count() < g.vertex_count() {
        pg.add_node(());
    }
    pg
}

#[test]
fn moore_equality_gives_petersen() {
    let petersen = to_petgraph(&named_graph("petersen").unwrap());
    for seed in [1, 42, 99] {
        let out = generate_regular_girth(3, 5, 10, seed).unwrap();
        assert!(out.met);
        assert!(is_isomorphic(&to_petgraph(&out.graph), &petersen), "seed {seed}");
    }
}

#[test]
fn heawood_is_the_girth_six_cage() {
    let out = generate_regular_girth(3, 6, 14, 3).unwrap();
    assert!(out.met);
    assert!(is_isomorphic(&to_petgraph(&out.graph), &to_petgraph(&named_graph("heawood").unwrap())));
}

#[test]
fn k33_matches_complete_bipartite() {
    let mut kb = UnGraph::<(), ()>::new_undirected();
    let nodes: Vec<_> = (0..6).map(|_| kb.add_node(())).collect();
    for a in 0..3 {
        for b in 3..6 {
            kb.add_edge(nodes[a], nodes[b], ());
        }
    }
    assert!(is_isomorphic(&to_petgraph(&named_graph("k33").unwrap()), &kb));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generated_graphs_are_valid(seed in any::<u64>(), half in 3usize..9, target in 3usize..6) {
        let m = 2 * half;
        prop_assume!(moore_lower_bound(3, target as u64) <= m as u64);
        let out = generate_regular_girth(3, target, m, seed).unwrap();
        let g = &out.graph;
        prop_assert_eq!(g.regular_degree(), Some(3));
        prop_assert_eq!(g.edge_count(), 3 * half);
        prop_assert_eq!(out.girth, g.girth());
        prop_assert!(moore_lower_bound(3, out.girth as u64) <= m as u64);
        if out.met {
            prop_assert!(g.is_connected() && out.girth >= target);
        }
    }
}
