use serde::{Deserialize, Serialize};

use super::OrientedGraph;
use crate::error::OrientationError;
use crate::graph::{bit, bits};

/// A topological order, or `None` when the orientation has a directed cycle.
pub(crate) fn topological_order(og: &OrientedGraph) -> Option<Vec<usize>> {
    let n = og.n();
    let mut indeg: Vec<u32> = (0..n).map(|v| og.in_mask(v).count_ones()).collect();
    let mut ready: u64 = (0..n).filter(|&v| indeg[v] == 0).fold(0, |m, v| m | bit(v));
    let mut order = Vec::with_capacity(n);
    while ready != 0 {
        let v = ready.trailing_zeros() as usize;
        ready &= ready - 1;
        order.push(v);
        for w in bits(og.out_mask(v)) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready |= bit(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Strict reachability: `desc[v]` holds every vertex reachable from `v` by a
/// directed path with at least one arc.
pub(crate) fn descendants(og: &OrientedGraph, order: &[usize]) -> Vec<u64> {
    let mut desc = vec![0u64; og.n()];
    for &v in order.iter().rev() {
        desc[v] = bits(og.out_mask(v)).fold(og.out_mask(v), |m, w| m | desc[w]);
    }
    desc
}

pub fn is_acyclic(og: &OrientedGraph) -> bool {
    topological_order(og).is_some()
}

/// Whether `u -> v -> w` always implies `u -> w`.
pub fn is_transitive(og: &OrientedGraph) -> bool {
    (0..og.n()).all(|u| bits(og.out_mask(u)).all(|v| og.out_mask(v) & !og.out_mask(u) == 0))
}

/// A certified shortcut: a directed path from `path[0]` to `path[k]` with
/// `k >= 3`, the arc `path[0] -> path[k]`, and a pair of path vertices
/// `path[i], path[j]` with `i < j` and no arc between them, which makes the
/// induced subdigraph non-transitive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortcutWitness {
    pub path: Vec<usize>,
    pub shortcutting_edge: (usize, usize),
    pub missing_pair: (usize, usize),
}

impl ShortcutWitness {
    /// Re-check every field against `og`, including the induced-subgraph
    /// conditions: acyclic, unique source `path[0]`, unique sink `path[k]`.
    pub fn validate(&self, og: &OrientedGraph) -> bool {
        let p = &self.path;
        if p.len() < 4 || p.iter().any(|&v| v >= og.n()) {
            return false;
        }
        let set = p.iter().fold(0u64, |m, &v| m | bit(v));
        if set.count_ones() as usize != p.len() {
            return false;
        }
        let (first, last) = (p[0], p[p.len() - 1]);
        if self.shortcutting_edge != (first, last) || !og.has_arc(first, last) {
            return false;
        }
        if !p.windows(2).all(|w| og.has_arc(w[0], w[1])) {
            return false;
        }
        let (x, y) = self.missing_pair;
        let pos = |v: usize| p.iter().position(|&w| w == v);
        match (pos(x), pos(y)) {
            (Some(i), Some(j)) if i < j && !og.has_arc(x, y) => {}
            _ => return false,
        }
        let sub = og.induced_by_mask(set);
        if !is_acyclic(&sub) {
            return false;
        }
        let rank = |v: usize| (set & (bit(v) - 1)).count_ones() as usize;
        sub.sources() == vec![rank(first)] && sub.sinks() == vec![rank(last)]
    }
}

/// Locate a shortcut in an acyclic orientation.
///
/// A shortcut exists exactly when some arc `a -> b` spans a directed walk
/// `a ~> u ~> v ~> b` where `u` reaches `v` but `u` and `v` are non-adjacent:
/// the walk's vertices then induce a shortcut, and conversely any
/// non-transitive triple inside a shortcut yields such `u, v`. Candidates are
/// scanned by ascending `a`, `b`, `u`, `v`, and the path segments are
/// shortest paths with lowest-label tie breaking.
pub fn find_shortcut(og: &OrientedGraph) -> Result<Option<ShortcutWitness>, OrientationError> {
    let order = topological_order(og).ok_or(OrientationError::Cyclic)?;
    let desc = descendants(og, &order);
    let base = og.base();
    for a in 0..og.n() {
        for b in bits(og.out_mask(a)) {
            let reaches_b = reaching(&desc, b);
            for u in bits((desc[a] | bit(a)) & reaches_b) {
                let vs = desc[u] & !base.neighbors_mask(u) & reaches_b;
                if let Some(v) = bits(vs).next() {
                    let mut path = shortest_path(og, a, u);
                    path.extend(shortest_path(og, u, v).into_iter().skip(1));
                    path.extend(shortest_path(og, v, b).into_iter().skip(1));
                    return Ok(Some(ShortcutWitness { path, shortcutting_edge: (a, b), missing_pair: (u, v) }));
                }
            }
        }
    }
    Ok(None)
}

/// Vertices from which `b` is reachable, `b` included.
fn reaching(desc: &[u64], b: usize) -> u64 {
    desc.iter().enumerate().filter(|(_, &d)| d & bit(b) != 0).fold(bit(b), |m, (v, _)| m | bit(v))
}

/// Breadth-first shortest directed path, lowest labels first.
fn shortest_path(og: &OrientedGraph, from: usize, to: usize) -> Vec<usize> {
    let n = og.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = bit(from);
    let mut frontier = vec![from];
    while !frontier.is_empty() && seen & bit(to) == 0 {
        let mut next = Vec::new();
        for &x in &frontier {
            for y in bits(og.out_mask(x) & !seen) {
                seen |= bit(y);
                parent[y] = x;
                next.push(y);
            }
        }
        next.sort_unstable();
        frontier = next;
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// Acyclic and shortcut-free.
pub fn is_semi_transitive(og: &OrientedGraph) -> bool {
    matches!(find_shortcut(og), Ok(None))
}
