mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use wordrep_core::families::{k_triangle, k_triangle_canonical_orientation, named};
use wordrep_core::graph::{enumerate_graphs_unguarded, Graph};
use wordrep_core::orientation::{
    find_transitive_orientation, for_each_semi_transitive_extension, is_semi_transitive, is_word_representable,
};
use wordrep_core::split::{
    check_main_orientation, check_relative_order, classify_all, enumerate_split_graphs, is_split,
    is_split_comparability, reduce, reduce_tracked, split_partition, toggle_ab, VertexKind, ViolationKind,
};
use wordrep_core::{FamilyId, OrientedGraph, SplitError, SplitPartition, VertexSet};

use common::brute_isomorphic;

/// Split by definition: some vertex subset is a clique and its complement
/// is independent.
fn brute_split(g: &Graph) -> bool {
    let all = g.vertex_mask();
    (0..=all).filter(|s| s & !all == 0).any(|s| g.is_clique(s) && g.is_independent(all & !s))
}

fn split_graphs_on_seven() -> &'static [Graph] {
    static GRAPHS: OnceLock<Vec<Graph>> = OnceLock::new();
    GRAPHS.get_or_init(|| enumerate_split_graphs(7))
}

fn split_graphs_up_to(n: usize) -> impl Iterator<Item = Graph> {
    (1..=n).flat_map(enumerate_split_graphs)
}

#[test]
fn recognition_matches_definition() {
    for n in 0..=7 {
        let graphs = enumerate_graphs_unguarded(n);
        let split: Vec<&Graph> = graphs.iter().filter(|g| brute_split(g)).collect();
        for g in &graphs {
            assert_eq!(is_split(g), brute_split(g));
        }
        if n >= 1 {
            let generated = enumerate_split_graphs(n);
            assert_eq!(generated.len(), split.len(), "n = {n}");
            for g in &generated {
                assert!(brute_split(g));
            }
        }
    }
}

#[test]
fn partition_is_a_maximal_clique_with_least_labels() {
    for g in split_graphs_up_to(7) {
        let sp = split_partition(&g).unwrap();
        let clique = sp.clique().mask();
        assert!(g.is_clique(clique));
        assert!(g.is_independent(sp.independent().mask()));
        for v in sp.independent().iter() {
            assert_ne!(clique & !g.neighbors_mask(v), 0, "clique is not maximal");
        }
        let all = g.vertex_mask();
        let best = (0..=all)
            .filter(|&s| s & !all == 0 && g.is_clique(s) && g.is_independent(all & !s))
            .filter(|&s| (0..g.n()).all(|v| s >> v & 1 == 1 || s & !g.neighbors_mask(v) != 0))
            .min_by_key(|&s| VertexSet::from_mask(s).to_vec())
            .unwrap();
        assert_eq!(sp.clique().to_vec(), VertexSet::from_mask(best).to_vec());
        assert_eq!(SplitPartition::new(&g, sp.clique()).unwrap(), sp);
    }
}

#[test]
fn partition_errors() {
    assert!(split_partition(&Graph::cycle(4)).is_none());
    let p3 = Graph::path(3);
    assert_eq!(SplitPartition::new(&p3, VertexSet::from_mask(0b010)), Err(SplitError::NotSplit));
    assert!(SplitPartition::new(&p3, VertexSet::from_mask(0b011)).is_ok());
    assert!(matches!(is_split_comparability(&Graph::cycle(5)), Err(SplitError::NotSplit)));
}

#[test]
fn split_comparability_matches_transitive_search() {
    for g in split_graphs_up_to(7) {
        assert_eq!(is_split_comparability(&g).unwrap(), find_transitive_orientation(&g).is_some(), "{:?}", g.edges());
    }
}

#[test]
fn reduction_preserves_representability() {
    for g in split_graphs_up_to(7) {
        let sp = split_partition(&g).unwrap();
        let (reduced, kept) = reduce_tracked(&sp);
        assert_eq!(reduce(&sp), reduced);
        assert_eq!(is_word_representable(reduced.host()), is_word_representable(&g));
        assert!(brute_isomorphic(reduced.host(), &g.induced_subgraph(&kept).unwrap()));
        let h = reduced.host();
        for v in reduced.independent().iter() {
            assert!(h.degree(v) >= 2);
        }
        for u in 0..h.n() {
            for v in u + 1..h.n() {
                assert_ne!(h.neighbors_mask(u), h.neighbors_mask(v));
            }
        }
    }
}

#[test]
fn structural_test_matches_semi_transitivity_up_to_six() {
    for g in split_graphs_up_to(6) {
        let sp = split_partition(&g).unwrap();
        for code in 0..1u64 << g.edge_count() {
            let og = OrientedGraph::from_code(&g, code);
            assert_eq!(check_main_orientation(&sp, &og), is_semi_transitive(&og), "{og:?}");
        }
    }
}

#[test]
fn toggling_types_a_and_b_is_an_involution() {
    for g in split_graphs_up_to(6) {
        let sp = split_partition(&g).unwrap();
        for_each_semi_transitive_extension(&g, &[], |og| {
            let reports = classify_all(&sp, og).unwrap();
            for r in reports {
                match r.kind {
                    VertexKind::A | VertexKind::B => {
                        let once = toggle_ab(&sp, og, r.vertex).unwrap();
                        assert!(is_semi_transitive(&once));
                        assert_eq!(&toggle_ab(&sp, &once, r.vertex).unwrap(), og);
                    }
                    VertexKind::C => assert_eq!(toggle_ab(&sp, og, r.vertex), Err(SplitError::NotAOrB(r.vertex))),
                    VertexKind::Invalid => panic!("semi-transitive orientation with an invalid vertex"),
                }
            }
            true
        })
        .unwrap();
    }
}

#[test]
fn triangle_family_types() {
    let g = k_triangle(6).unwrap();
    let sp = split_partition(&g).unwrap();
    let og = k_triangle_canonical_orientation(6).unwrap();
    let reports = classify_all(&sp, &og).unwrap();
    let kinds: Vec<VertexKind> = reports.iter().map(|r| r.kind).collect();
    assert_eq!(kinds, [[VertexKind::B; 5].as_slice(), &[VertexKind::C]].concat());
    let last = &reports[5];
    assert_eq!(last.vertex, 11);
    assert_eq!((last.source_group.as_slice(), last.sink_group.as_slice()), (&[0][..], &[5][..]));
    assert_eq!(last.boundary, Some((0, 5)));
    assert!(check_relative_order(&sp, &reports).unwrap().is_empty());
}

/// Every orientation of T3 that types each vertex violates some
/// relative-order restriction, and none is semi-transitive.
#[test]
fn third_obstruction_always_violates_order() {
    let g = named(&FamilyId::T3).unwrap();
    let sp = split_partition(&g).unwrap();
    let mut typed = 0;
    for code in 0..1u64 << g.edge_count() {
        let og = OrientedGraph::from_code(&g, code);
        assert!(!is_semi_transitive(&og));
        let Ok(reports) = classify_all(&sp, &og) else { continue };
        if let Ok(violations) = check_relative_order(&sp, &reports) {
            typed += 1;
            assert!(!violations.is_empty());
            for v in violations {
                assert!(matches!(v.kind, ViolationKind::AbAdjacentToBoundary | ViolationKind::CGroupContainsBoundary));
            }
        }
    }
    assert!(typed > 0);
}

#[test]
fn toggle_rejects_bad_input() {
    let mut g = Graph::complete(3);
    g.add_vertex(&[0, 2]);
    let sp = split_partition(&g).unwrap();
    let cyclic = OrientedGraph::from_arcs(&g, &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 2)]).unwrap();
    assert_eq!(toggle_ab(&sp, &cyclic, 3), Err(SplitError::NotSemiTransitive));
    let other = OrientedGraph::low_to_high(&Graph::complete(4));
    assert_eq!(toggle_ab(&sp, &other, 3), Err(SplitError::HostMismatch));
}

proptest! {
    #[test]
    fn structural_test_matches_on_random_orientations(
        idx in 0usize..164,
        code in any::<u64>(),
    ) {
        let graphs = split_graphs_on_seven();
        let g = &graphs[idx % graphs.len()];
        let sp = split_partition(g).unwrap();
        let og = OrientedGraph::from_code(g, code & ((1u64 << g.edge_count()) - 1));
        prop_assert_eq!(check_main_orientation(&sp, &og), is_semi_transitive(&og));
    }
}
