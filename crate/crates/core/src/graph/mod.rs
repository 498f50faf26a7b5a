//! Simple undirected graphs on vertices `0..n`, stored as one neighbourhood
//! bitmask per vertex.

mod canon;
mod enumerate;
mod graph6;
mod induced;

use std::fmt;

use crate::error::GraphError;

pub use canon::{canonical_form, CanonicalForm};
pub use enumerate::{enumerate_graphs, enumerate_graphs_unguarded, ENUMERATION_GUARD};
pub use graph6::{parse_graph6, write_graph6};
pub use induced::{contains_induced, Embedding};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterate the set bits of a mask in ascending order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of the vertices of some host graph.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn from_vertices(vertices: &[usize]) -> Result<Self, GraphError> {
        let mut mask = 0;
        for &v in vertices {
            if v >= MAX_VERTICES {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: MAX_VERTICES });
            }
            mask |= bit(v);
        }
        Ok(VertexSet(mask))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_valid_for(self, g: &Graph) -> bool {
        self.0 & !full_mask(g.n()) == 0
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// Undirected simple graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`].
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph on {n} vertices exceeds {MAX_VERTICES}");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Build from neighbourhood masks. Masks are symmetrised and loops dropped.
    pub(crate) fn from_masks(masks: Vec<u64>) -> Self {
        let n = masks.len();
        let mut g = Graph::new(n);
        for (u, &m) in masks.iter().enumerate() {
            for v in bits(m & full_mask(n)) {
                if u != v {
                    g.adj[u] |= bit(v);
                    g.adj[v] |= bit(u);
                }
            }
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            g.adj[u] = full_mask(n) & !bit(u);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Panics on loops or out-of-range vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !bit(v);
            self.adj[v] &= !bit(u);
        }
    }

    #[inline]
    pub fn adj(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn is_clique(&self, set: u64) -> bool {
        bits(set).all(|v| (set & !bit(v)) & !self.adj[v] == 0)
    }

    pub fn is_independent(&self, set: u64) -> bool {
        bits(set).all(|v| set & self.adj[v] == 0)
    }

    /// Whether every vertex reaches every other. The empty graph counts as
    /// connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |m, v| m | self.adj[v]);
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertex_mask()
    }

    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        let adj = (0..self.n).map(|v| !self.adj[v] & full & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in ascending order of
    /// the original labels. Duplicates are ignored.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut set = 0u64;
        for &v in vertices {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            set |= bit(v);
        }
        Ok(self.induced_by_mask(set))
    }

    pub fn induced_by_mask(&self, set: u64) -> Graph {
        let kept: Vec<usize> = bits(set & self.vertex_mask()).collect();
        let mut g = Graph::new(kept.len());
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate().skip(i + 1) {
                if self.adj(u, v) {
                    g.adj[i] |= bit(j);
                    g.adj[j] |= bit(i);
                }
            }
        }
        g
    }

    /// Graph with vertex `v` deleted and the remaining vertices relabelled.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced_by_mask(self.vertex_mask() & !bit(v))
    }

    /// Append a vertex adjacent to `neighbors`; returns its label.
    pub fn add_vertex(&mut self, neighbors: &[usize]) -> usize {
        assert!(self.n < MAX_VERTICES);
        let x = self.n;
        self.n += 1;
        self.adj.push(0);
        for &u in neighbors {
            self.add_edge(x, u);
        }
        x
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return false;
        }
        if self.degree_sequence() != other.degree_sequence() {
            return false;
        }
        canonical_form(self) == canonical_form(other)
    }
}

/// Free-function form of [`Graph::is_isomorphic`].
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.is_isomorphic(h)
}

/// Free-function form of [`Graph::induced_subgraph`].
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<Graph, GraphError> {
    g.induced_subgraph(vertices)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match write_graph6(self) {
            Ok(s) => f.write_str(&s),
            Err(_) => write!(f, "{self:?}"),
        }
    }
}
