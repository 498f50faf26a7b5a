use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use wordrep_core::characterization::{
    classify_verified, find_a_ell_generic, find_a_ell_structural, theorem_main1, theorem_main2,
    with_orientation_witness,
};
use wordrep_core::families::{a_graph, named};
use wordrep_core::graph::{enumerate_graphs_unguarded, Graph};
use wordrep_core::orientation::is_word_representable;
use wordrep_core::split::{enumerate_split_graphs, split_partition};
use wordrep_core::{classify, classify_split, FamilyId, Reason, SplitError, Witness};

fn split_graphs_on_eight() -> &'static [Graph] {
    static GRAPHS: OnceLock<Vec<Graph>> = OnceLock::new();
    GRAPHS.get_or_init(|| enumerate_split_graphs(8))
}

fn split_graphs_up_to(n: usize) -> impl Iterator<Item = Graph> {
    (1..=n).flat_map(enumerate_split_graphs)
}

#[test]
fn dispatcher_agrees_with_orientation_search() {
    let mut reasons = BTreeSet::new();
    for g in split_graphs_up_to(8) {
        let v = classify_split(&g).unwrap();
        assert_eq!(v.representable, is_word_representable(&g), "{:?} via {}", g.edges(), v.reason);
        assert!(v.witness_is_valid(&g));
        if v.representable {
            assert!(v.witness.is_none());
        } else if v.reason != Reason::OracleSearch {
            assert!(matches!(v.witness, Some(Witness::Embedding { .. })));
        }
        reasons.insert(v.reason.to_string());
    }
    for r in ["CLIQUE_LE_3", "COMPARABILITY", "THEOREM_MAIN1", "THEOREM_MAIN2"] {
        assert!(reasons.contains(r), "{r} never used");
    }
}

/// Each characterization, applied to every split graph meeting its
/// hypothesis, matches the orientation search.
#[test]
fn characterizations_hold_on_their_own_domains() {
    for g in split_graphs_up_to(8) {
        let sp = split_partition(&g).unwrap();
        let oracle = is_word_representable(&g);
        match theorem_main1(&sp) {
            Ok(v) => {
                assert_eq!(v.representable, oracle, "degree-2 test on {:?}", g.edges());
                assert!(v.witness_is_valid(&g));
            }
            Err(e) => assert!(matches!(e, SplitError::DegreeTooHigh { max: 2, .. })),
        }
        match theorem_main2(&sp) {
            Ok(v) => {
                assert_eq!(v.representable, oracle, "clique-4 test on {:?}", g.edges());
                assert!(v.witness_is_valid(&g));
            }
            Err(e) => assert_eq!(e, SplitError::CliqueSize(sp.m())),
        }
    }
}

#[test]
fn a_ell_searches_agree() {
    for g in split_graphs_up_to(9) {
        let generic = find_a_ell_generic(&g);
        let structural = find_a_ell_structural(&g);
        assert_eq!(generic.as_ref().map(|f| f.0), structural.as_ref().map(|f| f.0), "{:?}", g.edges());
        if let Some((l, e)) = structural {
            assert!(e.is_valid(&g, &a_graph(l).unwrap()));
        }
    }
}

#[test]
fn witness_shapes() {
    let t2 = named(&FamilyId::T2).unwrap();
    let v = classify_split(&t2).unwrap();
    assert!(!v.representable);
    assert_eq!(v.reason, Reason::TheoremMain1);
    assert!(matches!(&v.witness, Some(Witness::Embedding { pattern, .. }) if pattern == "T2"));

    let a5 = a_graph(5).unwrap();
    let v = classify_split(&a5).unwrap();
    assert!(matches!(&v.witness, Some(Witness::Embedding { pattern, .. }) if pattern == "A_GRAPH(5)"));

    let v = with_orientation_witness(classify(&Graph::cycle(6)), &Graph::cycle(6));
    assert_eq!(v.reason, Reason::OracleSearch);
    assert!(matches!(v.witness, Some(Witness::Orientation { .. })));
    assert!(v.witness_is_valid(&Graph::cycle(6)));

    let json = serde_json::to_string(&classify_split(&t2).unwrap()).unwrap();
    assert!(json.contains("\"reason\":\"THEOREM_MAIN1\""));
    assert!(json.contains("\"pattern\":\"T2\""));
}

#[test]
fn non_split_input() {
    assert_eq!(classify_split(&Graph::cycle(4)), Err(SplitError::NotSplit));
    let v = classify(&named(&FamilyId::W5).unwrap());
    assert!(!v.representable);
    assert_eq!(v.reason, Reason::OracleSearch);
}

#[test]
fn verified_classification_over_all_seven_vertex_graphs() {
    for g in enumerate_graphs_unguarded(7) {
        classify_verified(&g).unwrap();
    }
}

proptest! {
    /// Adding a vertex never turns a non-representable split graph into a
    /// representable one, and relabelling never changes the verdict.
    #[test]
    fn verdicts_are_monotone_and_label_free(
        idx in 0usize..557,
        nbrs in any::<u64>(),
        perm_seed in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let graphs = split_graphs_on_eight();
        let g = &graphs[idx % graphs.len()];
        let base = classify_split(g).unwrap();
        let relabelled = g.permuted(&perm_seed);
        prop_assert_eq!(classify_split(&relabelled).unwrap().representable, base.representable);

        let mut bigger = g.clone();
        let sp = split_partition(g).unwrap();
        let chosen: Vec<usize> = sp.clique().iter().filter(|&v| nbrs >> v & 1 == 1).collect();
        bigger.add_vertex(&chosen);
        let grown = classify_split(&bigger).unwrap();
        prop_assert!(grown.witness_is_valid(&bigger));
        if !base.representable {
            prop_assert!(!grown.representable);
        }
    }
}
