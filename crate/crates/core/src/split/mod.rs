//! Split graphs: recognition, the maximal-clique partition, reductions that
//! preserve word-representability, and the structure of semi-transitive
//! orientations relative to the partition.

mod enumerate;
mod types;

use serde::Serialize;

use crate::error::SplitError;
use crate::families;
use crate::graph::{bit, bits, contains_induced, Graph, VertexSet};
use crate::orientation::find_transitive_orientation;

pub use enumerate::enumerate_split_graphs;
pub use types::{
    classify_all,
    check_main_orientation, check_relative_order, classify_vertex, toggle_ab, HamiltonianCliquePath, OrderViolation,
    VertexKind, VertexTypeReport, ViolationKind,
};

/// A split graph together with a partition into a maximal clique and an
/// independent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    clique: VertexSet,
    independent: VertexSet,
    host: Graph,
}

impl SplitPartition {
    /// Check the invariants of a user-supplied partition.
    pub fn new(host: &Graph, clique: VertexSet) -> Result<Self, SplitError> {
        let independent = VertexSet::from_mask(host.vertex_mask() & !clique.mask());
        if !clique.is_valid_for(host) || !host.is_clique(clique.mask()) || !host.is_independent(independent.mask()) {
            return Err(SplitError::NotSplit);
        }
        if independent.iter().any(|i| clique.mask() & !host.neighbors_mask(i) == 0) {
            return Err(SplitError::NotSplit);
        }
        Ok(SplitPartition { clique, independent, host: host.clone() })
    }

    pub fn clique(&self) -> VertexSet {
        self.clique
    }

    pub fn independent(&self) -> VertexSet {
        self.independent
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// Clique size `m`.
    pub fn m(&self) -> usize {
        self.clique.len()
    }

    pub fn summary(&self) -> PartitionSummary {
        PartitionSummary { clique: self.clique.to_vec(), independent: self.independent.to_vec() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionSummary {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

/// The split partition with a maximal clique whose sorted vertex list is
/// lexicographically least, or `None` when `g` is not split.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    if n == 0 {
        return Some(SplitPartition { clique: VertexSet::EMPTY, independent: VertexSet::EMPTY, host: g.clone() });
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = (1..=n).filter(|&i| g.degree(by_degree[i - 1]) + 1 >= i).max().unwrap_or(1);
    let clique = by_degree[..m].iter().fold(0u64, |acc, &v| acc | bit(v));
    let rest = g.vertex_mask() & !clique;
    if !g.is_clique(clique) || !g.is_independent(rest) {
        return None;
    }
    // `clique` is maximum. Every other maximal-clique partition swaps one
    // clique vertex k for an independent vertex i that sees the rest of the
    // clique, provided k has no neighbour in the independent set except i.
    let mut best = clique;
    for i in bits(rest) {
        let missing = clique & !g.neighbors_mask(i);
        if missing.count_ones() != 1 {
            continue;
        }
        let k = missing.trailing_zeros() as usize;
        if g.neighbors_mask(k) & rest & !bit(i) == 0 {
            let swapped = clique & !bit(k) | bit(i);
            if lex_less(swapped, best) {
                best = swapped;
            }
        }
    }
    Some(SplitPartition {
        clique: VertexSet::from_mask(best),
        independent: VertexSet::from_mask(g.vertex_mask() & !best),
        host: g.clone(),
    })
}

/// Lexicographic comparison of the sorted vertex lists of two sets of equal
/// size: the smaller minimum of the symmetric difference wins.
fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a & (diff & diff.wrapping_neg()) != 0
}

/// No induced `C4`, `C5` or `2K2`.
pub fn is_split_by_forbidden_subgraphs(g: &Graph) -> bool {
    let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).expect("valid edges");
    [Graph::cycle(4), Graph::cycle(5), two_k2].iter().all(|f| contains_induced(g, f).is_none())
}

/// Split recognition by both the forbidden-subgraph test and the partition
/// construction. Panics if the two disagree.
pub fn is_split(g: &Graph) -> bool {
    let by_partition = split_partition(g).is_some();
    assert_eq!(
        by_partition,
        is_split_by_forbidden_subgraphs(g),
        "split recognition methods disagree on {g:?}"
    );
    by_partition
}

/// Remove the vertices whose presence cannot change word-representability:
/// independent vertices of degree 0 or 1, and any vertex with the same
/// neighbourhood as a lower-labelled vertex. Repeats until nothing changes;
/// the result is relabelled `0..k`.
pub fn reduce(sp: &SplitPartition) -> SplitPartition {
    reduce_tracked(sp).0
}

/// As [`reduce`], also returning the original label of every kept vertex.
pub fn reduce_tracked(sp: &SplitPartition) -> (SplitPartition, Vec<usize>) {
    let mut current = sp.clone();
    let mut labels: Vec<usize> = (0..sp.host.n()).collect();
    while let Some(v) = removable_vertex(&current) {
        let g = current.host.remove_vertex(v);
        labels.remove(v);
        current = split_partition(&g).expect("induced subgraphs of split graphs are split");
    }
    (current, labels)
}

fn removable_vertex(sp: &SplitPartition) -> Option<usize> {
    let g = &sp.host;
    let low_degree = sp.independent.iter().find(|&v| g.degree(v) <= 1);
    low_degree.or_else(|| (0..g.n()).find(|&v| (0..v).any(|u| g.neighbors_mask(u) == g.neighbors_mask(v))))
}

/// No induced copy of the three forbidden split graphs `B1`, `B2`, `B3`.
pub fn is_split_comparability(g: &Graph) -> Result<bool, SplitError> {
    if split_partition(g).is_none() {
        return Err(SplitError::NotSplit);
    }
    Ok(families::forbidden_split_comparability().iter().all(|b| contains_induced(g, b).is_none()))
}

/// Comparability test by direct transitive-orientation search.
pub fn is_comparability(g: &Graph) -> bool {
    find_transitive_orientation(g).is_some()
}
