//! Typing of independent vertices against the Hamiltonian path of a
//! transitively oriented clique.
//!
//! Under a semi-transitive orientation each independent vertex `x` is one of
//! - A: a source whose neighbours are consecutive on the path,
//! - B: a sink whose neighbours are consecutive on the path,
//! - C: receives arcs from a prefix of the path starting at its source and
//!   sends arcs to a suffix ending at its sink.
//!
//! Such a typing, the transitive clique and the relative-order restrictions
//! around each type-C boundary pair together are equivalent to
//! semi-transitivity.

use serde::{Deserialize, Serialize};

use super::SplitPartition;
use crate::error::SplitError;
use crate::graph::{bit, bits};
use crate::orientation::{is_semi_transitive, OrientedGraph};

/// Clique vertices in the order of the transitive orientation, `order[0]`
/// being the clique's source.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HamiltonianCliquePath {
    order: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl HamiltonianCliquePath {
    pub fn new(sp: &SplitPartition, og: &OrientedGraph) -> Result<Self, SplitError> {
        if og.base() != sp.host() {
            return Err(SplitError::HostMismatch);
        }
        let clique = sp.clique().mask();
        let mut order = sp.clique().to_vec();
        order.sort_by_key(|&v| std::cmp::Reverse((og.out_mask(v) & clique).count_ones()));
        for (i, &u) in order.iter().enumerate() {
            if order[i + 1..].iter().any(|&v| !og.has_arc(u, v)) {
                return Err(SplitError::CliqueNotTransitive);
            }
        }
        let mut position = vec![None; og.n()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = Some(i);
        }
        Ok(HamiltonianCliquePath { order, position })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.position.get(v).copied().flatten()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexKind {
    A,
    B,
    C,
    #[serde(rename = "INVALID")]
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexTypeReport {
    pub vertex: usize,
    pub kind: VertexKind,
    /// Path positions of the neighbours, ascending.
    pub neighbors_on_path: Vec<usize>,
    pub source_group: Vec<usize>,
    pub sink_group: Vec<usize>,
    pub boundary: Option<(usize, usize)>,
}

fn consecutive(positions: &[usize]) -> bool {
    positions.windows(2).all(|w| w[1] == w[0] + 1)
}

/// Type of the independent vertex `x` under `og`. A vertex without
/// neighbours is reported as type A.
pub fn classify_vertex(sp: &SplitPartition, og: &OrientedGraph, x: usize) -> Result<VertexTypeReport, SplitError> {
    let path = HamiltonianCliquePath::new(sp, og)?;
    classify_on_path(sp, og, &path, x)
}

fn classify_on_path(
    sp: &SplitPartition,
    og: &OrientedGraph,
    path: &HamiltonianCliquePath,
    x: usize,
) -> Result<VertexTypeReport, SplitError> {
    if !sp.independent().contains(x) {
        return Err(SplitError::NotIndependent(x));
    }
    let positions = |mask: u64| {
        let mut p: Vec<usize> = bits(mask).filter_map(|v| path.position(v)).collect();
        p.sort_unstable();
        p
    };
    let ins = positions(og.in_mask(x));
    let outs = positions(og.out_mask(x));
    let mut all = positions(sp.host().neighbors_mask(x));
    all.dedup();
    let m = path.order().len();

    let mut report = VertexTypeReport {
        vertex: x,
        kind: VertexKind::Invalid,
        neighbors_on_path: all.clone(),
        source_group: Vec::new(),
        sink_group: Vec::new(),
        boundary: None,
    };
    report.kind = match (ins.is_empty(), outs.is_empty()) {
        (true, _) if consecutive(&outs) => VertexKind::A,
        (false, true) if consecutive(&ins) => VertexKind::B,
        (false, false)
            if ins[0] == 0 && consecutive(&ins) && consecutive(&outs) && outs[outs.len() - 1] == m - 1
                && ins[ins.len() - 1] < outs[0] =>
        {
            report.source_group = ins.iter().map(|&i| path.order()[i]).collect();
            report.sink_group = outs.iter().map(|&i| path.order()[i]).collect();
            report.boundary = Some((path.order()[ins[ins.len() - 1]], path.order()[outs[0]]));
            VertexKind::C
        }
        _ => VertexKind::Invalid,
    };
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ViolationKind {
    /// A type-A or type-B vertex adjacent to both boundary vertices.
    AbAdjacentToBoundary,
    /// A type-C vertex with both boundary vertices in one of its groups.
    CGroupContainsBoundary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderViolation {
    pub y: usize,
    pub x: usize,
    pub boundary: (usize, usize),
    pub kind: ViolationKind,
}

/// Violations of the restrictions around each type-C vertex `x` with
/// boundary pair `(p, q)`: no type-A or type-B vertex may see both `p` and
/// `q`, and no other type-C vertex may hold both in its source group or
/// both in its sink group.
pub fn check_relative_order(
    sp: &SplitPartition,
    reports: &[VertexTypeReport],
) -> Result<Vec<OrderViolation>, SplitError> {
    if let Some(r) = reports.iter().find(|r| r.kind == VertexKind::Invalid) {
        return Err(SplitError::InvalidType(r.vertex));
    }
    let g = sp.host();
    let mut violations = Vec::new();
    for x in reports.iter().filter(|r| r.kind == VertexKind::C) {
        let (p, q) = x.boundary.expect("type C has a boundary");
        let pair = bit(p) | bit(q);
        for y in reports.iter().filter(|r| r.vertex != x.vertex) {
            let kind = match y.kind {
                VertexKind::A | VertexKind::B if g.neighbors_mask(y.vertex) & pair == pair => {
                    ViolationKind::AbAdjacentToBoundary
                }
                VertexKind::C
                    if [&y.source_group, &y.sink_group]
                        .iter()
                        .any(|grp| grp.contains(&p) && grp.contains(&q)) =>
                {
                    ViolationKind::CGroupContainsBoundary
                }
                _ => continue,
            };
            violations.push(OrderViolation { y: y.vertex, x: x.vertex, boundary: (p, q), kind });
        }
    }
    Ok(violations)
}

/// Reports for every independent vertex, ascending.
pub fn classify_all(sp: &SplitPartition, og: &OrientedGraph) -> Result<Vec<VertexTypeReport>, SplitError> {
    let path = HamiltonianCliquePath::new(sp, og)?;
    sp.independent().iter().map(|x| classify_on_path(sp, og, &path, x)).collect()
}

/// Structural test: the clique is transitive, every independent vertex has
/// type A, B or C, and no relative-order restriction is violated.
pub fn check_main_orientation(sp: &SplitPartition, og: &OrientedGraph) -> bool {
    match classify_all(sp, og) {
        Ok(reports) => matches!(check_relative_order(sp, &reports), Ok(v) if v.is_empty()),
        Err(_) => false,
    }
}

/// Reverse every arc at a type-A or type-B vertex, turning a source into a
/// sink or back. Semi-transitivity is preserved.
pub fn toggle_ab(sp: &SplitPartition, og: &OrientedGraph, x: usize) -> Result<OrientedGraph, SplitError> {
    if og.base() != sp.host() {
        return Err(SplitError::HostMismatch);
    }
    if !is_semi_transitive(og) {
        return Err(SplitError::NotSemiTransitive);
    }
    let report = classify_vertex(sp, og, x)?;
    match report.kind {
        VertexKind::A | VertexKind::B => {}
        VertexKind::C => return Err(SplitError::NotAOrB(x)),
        VertexKind::Invalid => return Err(SplitError::InvalidType(x)),
    }
    let mut out: Vec<u64> = (0..og.n()).map(|v| og.out_mask(v)).collect();
    let nbrs = sp.host().neighbors_mask(x);
    for v in bits(nbrs) {
        out[v] ^= bit(x);
    }
    out[x] ^= nbrs;
    let flipped = OrientedGraph::from_out_masks(og.base(), out);
    assert!(is_semi_transitive(&flipped), "flipping a type-{:?} vertex broke semi-transitivity", report.kind);
    Ok(flipped)
}
