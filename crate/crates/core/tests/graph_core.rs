mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use wordrep_core::graph::{
    canonical_form, contains_induced, enumerate_graphs, enumerate_graphs_unguarded, parse_graph6, write_graph6, Graph,
};
use wordrep_core::{Graph6Error, GraphError};

use common::{all_labelled_graphs, brute_isomorphic, permutations, reference_graph6};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        g.add_edge(i, j);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

#[test]
fn graph6_known_strings() {
    assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
    assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
    assert_eq!(parse_graph6("A?").unwrap(), Graph::new(2));
    assert_eq!(write_graph6(&Graph::complete(3)).unwrap(), "Bw");
}

#[test]
fn graph6_matches_reference_on_all_graphs_up_to_five() {
    for n in 0..=5 {
        for g in all_labelled_graphs(n) {
            let text = write_graph6(&g).unwrap();
            assert_eq!(text, reference_graph6(&g));
            assert_eq!(parse_graph6(&text).unwrap(), g);
        }
    }
}

#[test]
fn graph6_errors() {
    assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
    assert!(matches!(parse_graph6("C~~"), Err(Graph6Error::Trailing { offset: 2 })));
    assert!(matches!(parse_graph6("D"), Err(Graph6Error::Truncated { .. })));
}

#[test]
fn enumeration_counts() {
    let counts: Vec<usize> = (0..=7).map(|n| enumerate_graphs(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    assert!(matches!(enumerate_graphs(9), Err(GraphError::EnumerationGuard { n: 9, guard: 8 })));
}

/// Classes counted by taking the least relabelling of every labelled graph.
#[test]
fn enumeration_matches_brute_force_classes() {
    for n in 0..=5 {
        let perms = permutations(n);
        let classes: BTreeSet<Vec<(usize, usize)>> = all_labelled_graphs(n)
            .map(|g| {
                perms
                    .iter()
                    .map(|p| {
                        let mut e: Vec<(usize, usize)> =
                            g.edges().iter().map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
                        e.sort_unstable();
                        e
                    })
                    .min()
                    .unwrap()
            })
            .collect();
        let ours = enumerate_graphs_unguarded(n);
        assert_eq!(ours.len(), classes.len(), "n = {n}");
        for i in 0..ours.len() {
            for j in i + 1..ours.len() {
                assert!(!brute_isomorphic(&ours[i], &ours[j]));
            }
        }
    }
}

#[test]
fn isomorphism_agrees_with_brute_force() {
    let graphs: Vec<Graph> = all_labelled_graphs(4).collect();
    for g in &graphs {
        for h in graphs.iter().step_by(3) {
            assert_eq!(g.is_isomorphic(h), brute_isomorphic(g, h));
        }
    }
}

#[test]
fn induced_search_agrees_with_brute_force() {
    let hosts: Vec<Graph> = enumerate_graphs_unguarded(6);
    let patterns: Vec<Graph> = enumerate_graphs_unguarded(4);
    for h in hosts.iter().step_by(5) {
        for p in &patterns {
            let brute = (0u64..1 << h.n()).filter(|s| s.count_ones() == 4).any(|s| {
                let vs: Vec<usize> = (0..h.n()).filter(|&v| s >> v & 1 == 1).collect();
                brute_isomorphic(&h.induced_subgraph(&vs).unwrap(), p)
            });
            let found = contains_induced(h, p);
            assert_eq!(found.is_some(), brute);
            if let Some(e) = found {
                assert!(e.is_valid(h, p));
            }
        }
    }
}

#[test]
fn edge_errors() {
    assert_eq!(Graph::from_edges(2, &[(0, 2)]), Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 }));
    assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
}

#[test]
fn connectivity() {
    assert!(Graph::path(5).is_connected());
    assert!(!Graph::new(2).is_connected());
    assert!(Graph::new(0).is_connected());
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        let text = write_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn relabelling_preserves_canonical_form((g, p) in arb_graph(9).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), arb_perm(n))
    })) {
        let h = g.permuted(&p);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(g.is_isomorphic(&h));
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(12)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let n = g.n();
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * n.saturating_sub(1) / 2);
    }

    #[test]
    fn every_induced_subgraph_is_found((g, mask) in arb_graph(9).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), 0u64..(1u64 << n).max(1))
    })) {
        let vs: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let sub = g.induced_subgraph(&vs).unwrap();
        let e = contains_induced(&g, &sub).expect("an induced subgraph embeds");
        prop_assert!(e.is_valid(&g, &sub));
    }
}
