//! Orientations of undirected graphs and the semi-transitivity test.
//!
//! An orientation is semi-transitive when it is acyclic and contains no
//! shortcut. A graph is word-representable exactly when it admits such an
//! orientation, which makes [`find_semi_transitive_orientation`] a decision
//! procedure.

mod search;
mod shortcut;

use std::fmt;

use crate::error::{Graph6Error, OrientationError};
use crate::graph::{bit, bits, parse_graph6, write_graph6, Graph};

pub use search::{
    count_semi_transitive_extensions, find_semi_transitive_extension, find_semi_transitive_orientation,
    find_transitive_orientation, for_each_semi_transitive_extension, is_word_representable,
};
pub use shortcut::{find_shortcut, is_acyclic, is_semi_transitive, is_transitive, ShortcutWitness};

/// A graph with every edge given exactly one direction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    base: Graph,
    out: Vec<u64>,
}

impl OrientedGraph {
    /// Orientation with each listed arc `(u, v)` read as `u -> v`. Every edge
    /// of `base` must appear exactly once.
    pub fn from_arcs(base: &Graph, arcs: &[(usize, usize)]) -> Result<Self, OrientationError> {
        let mut out = vec![0u64; base.n()];
        for &(u, v) in arcs {
            if u >= base.n() || v >= base.n() || !base.adj(u, v) {
                return Err(OrientationError::NotAnEdge(u, v));
            }
            if (out[u] & bit(v)) | (out[v] & bit(u)) != 0 {
                return Err(OrientationError::Duplicate(u.min(v), u.max(v)));
            }
            out[u] |= bit(v);
        }
        let og = OrientedGraph { base: base.clone(), out };
        if let Some((u, v)) = og.base.edges().into_iter().find(|&(u, v)| !og.has_arc(u, v) && !og.has_arc(v, u)) {
            return Err(OrientationError::Unoriented(u, v));
        }
        Ok(og)
    }

    /// Orientation from one character per edge in lexicographic edge order,
    /// `'0'` for low to high and `'1'` for high to low.
    pub fn from_bitstring(base: &Graph, bitstring: &str) -> Result<Self, OrientationError> {
        let edges = base.edges();
        let chars: Vec<char> = bitstring.trim().chars().collect();
        if chars.len() != edges.len() {
            return Err(OrientationError::BitLength { expected: edges.len(), found: chars.len() });
        }
        let mut out = vec![0u64; base.n()];
        for (&(u, v), &c) in edges.iter().zip(&chars) {
            match c {
                '0' => out[u] |= bit(v),
                '1' => out[v] |= bit(u),
                other => return Err(OrientationError::BitChar(other)),
            }
        }
        Ok(OrientedGraph { base: base.clone(), out })
    }

    /// Orientation where the `i`-th edge (lexicographic order) points from
    /// high to low when bit `i` of `code` is set.
    pub fn from_code(base: &Graph, code: u64) -> Self {
        let mut out = vec![0u64; base.n()];
        for (i, (u, v)) in base.edges().into_iter().enumerate() {
            if code >> i & 1 == 1 {
                out[v] |= bit(u);
            } else {
                out[u] |= bit(v);
            }
        }
        OrientedGraph { base: base.clone(), out }
    }

    /// Every edge directed from its lower to its higher label.
    pub fn low_to_high(base: &Graph) -> Self {
        Self::from_code(base, 0)
    }

    /// Orientation following a linear order: `u -> v` whenever `u` comes
    /// before `v` in `order`. The result is always acyclic.
    pub fn from_order(base: &Graph, order: &[usize]) -> Self {
        let mut pos = vec![0; base.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut out = vec![0u64; base.n()];
        for (u, v) in base.edges() {
            if pos[u] < pos[v] {
                out[u] |= bit(v);
            } else {
                out[v] |= bit(u);
            }
        }
        OrientedGraph { base: base.clone(), out }
    }

    pub(crate) fn from_out_masks(base: &Graph, out: Vec<u64>) -> Self {
        OrientedGraph { base: base.clone(), out }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.out[u] & bit(v) != 0
    }

    pub fn out_mask(&self, v: usize) -> u64 {
        self.out[v]
    }

    pub fn in_mask(&self, v: usize) -> u64 {
        self.base.neighbors_mask(v) & !self.out[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_mask(v).count_ones() as usize
    }

    /// Arcs in lexicographic order of their tails, then heads.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n()).flat_map(|u| bits(self.out[u]).map(move |v| (u, v))).collect()
    }

    pub fn bitstring(&self) -> String {
        self.base.edges().iter().map(|&(u, v)| if self.has_arc(u, v) { '0' } else { '1' }).collect()
    }

    /// Inverse of [`OrientedGraph::from_code`].
    pub fn code(&self) -> u64 {
        self.base
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| self.has_arc(v, u))
            .fold(0, |c, (i, _)| c | 1 << i)
    }

    pub fn reversed(&self) -> Self {
        let n = self.n();
        OrientedGraph { base: self.base.clone(), out: (0..n).map(|v| self.in_mask(v)).collect() }
    }

    pub fn with_arc_reversed(&self, u: usize, v: usize) -> Result<Self, OrientationError> {
        if !self.has_arc(u, v) {
            return Err(OrientationError::NotAnEdge(u, v));
        }
        let mut og = self.clone();
        og.out[u] &= !bit(v);
        og.out[v] |= bit(u);
        Ok(og)
    }

    /// Restriction to the vertices in `set`, relabelled in ascending order.
    pub fn induced_by_mask(&self, set: u64) -> OrientedGraph {
        let keep: Vec<usize> = bits(set).collect();
        let base = self.base.induced_by_mask(set);
        let out = keep
            .iter()
            .map(|&u| keep.iter().enumerate().filter(|(_, &v)| self.has_arc(u, v)).fold(0, |m, (j, _)| m | bit(j)))
            .collect();
        OrientedGraph { base, out }
    }

    /// Relabel through `relabel[v]` onto a graph with `n` vertices.
    pub fn mapped(&self, relabel: &[usize], n: usize) -> Result<OrientedGraph, OrientationError> {
        let mut base = Graph::new(n);
        let arcs: Vec<(usize, usize)> = self.arcs().into_iter().map(|(u, v)| (relabel[u], relabel[v])).collect();
        for &(u, v) in &arcs {
            base.add_edge(u, v);
        }
        OrientedGraph::from_arcs(&base, &arcs)
    }

    /// Sources: vertices with no incoming arc.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.in_mask(v) == 0).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.out[v] == 0).collect()
    }

    /// `"<graph6> <bitstring>"`, the exact round-trip text form.
    pub fn to_text(&self) -> Result<String, Graph6Error> {
        Ok(format!("{} {}", write_graph6(&self.base)?, self.bitstring()))
    }

    pub fn parse_text(text: &str) -> Result<Self, ParseOrientationError> {
        let mut parts = text.split_whitespace();
        let g6 = parts.next().ok_or(ParseOrientationError::Missing)?;
        let base = parse_graph6(g6)?;
        let bitstring = parts.next().unwrap_or("");
        if parts.next().is_some() {
            return Err(ParseOrientationError::Missing);
        }
        Ok(OrientedGraph::from_bitstring(&base, bitstring)?)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph G {\n");
        for v in 0..self.n() {
            s.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.arcs() {
            s.push_str(&format!("  {u} -> {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrientedGraph(n={}, arcs={:?})", self.n(), self.arcs())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseOrientationError {
    #[error("expected \"<graph6> <bitstring>\"")]
    Missing,
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
}
