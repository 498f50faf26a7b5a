//! Backtracking over edge directions.
//!
//! Decided arcs are kept together with their transitive closure in both
//! directions, so adding an arc detects a cycle in constant time. A shortcut
//! whose arcs are all decided survives in every completion, which makes it a
//! sound pruning rule on partial orientations.

use super::OrientedGraph;
use crate::error::OrientationError;
use crate::graph::{bit, bits, Graph};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    SemiTransitive,
    Transitive,
}

struct Search<'a> {
    g: &'a Graph,
    goal: Goal,
    edges: Vec<(usize, usize)>,
    out: Vec<u64>,
    desc: Vec<u64>,
    anc: Vec<u64>,
    trail: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, goal: Goal, edges: Vec<(usize, usize)>) -> Self {
        let n = g.n();
        Search { g, goal, edges, out: vec![0; n], desc: vec![0; n], anc: vec![0; n], trail: Vec::new() }
    }

    fn save(&mut self) {
        self.trail.extend_from_slice(&self.out);
        self.trail.extend_from_slice(&self.desc);
        self.trail.extend_from_slice(&self.anc);
    }

    fn restore(&mut self) {
        let n = self.out.len();
        let base = self.trail.len() - 3 * n;
        self.out.copy_from_slice(&self.trail[base..base + n]);
        self.desc.copy_from_slice(&self.trail[base + n..base + 2 * n]);
        self.anc.copy_from_slice(&self.trail[base + 2 * n..]);
        self.trail.truncate(base);
    }

    /// Add `p -> q`; false when the decided arcs can no longer complete to a
    /// valid orientation.
    fn add(&mut self, p: usize, q: usize) -> bool {
        if self.desc[q] & bit(p) != 0 {
            return false;
        }
        self.out[p] |= bit(q);
        let up = self.anc[p] | bit(p);
        let down = self.desc[q] | bit(q);
        for x in bits(up) {
            self.desc[x] |= down;
        }
        for y in bits(down) {
            self.anc[y] |= up;
        }
        // Any newly created violation passes through p.
        let touched = self.anc[p] | self.desc[p] | bit(p);
        match self.goal {
            Goal::Transitive => bits(touched).all(|u| self.desc[u] & !self.g.neighbors_mask(u) == 0),
            Goal::SemiTransitive => bits(touched).all(|u| !self.closes_shortcut_at(u)),
        }
    }

    /// Whether some decided arc `a -> b` spans `a ~> u ~> v ~> b` with `u`
    /// and `v` non-adjacent.
    fn closes_shortcut_at(&self, u: usize) -> bool {
        let far = self.desc[u] & !self.g.neighbors_mask(u);
        if far == 0 {
            return false;
        }
        let ends = bits(far).fold(0u64, |m, v| m | self.desc[v] | bit(v));
        bits(self.anc[u] | bit(u)).any(|a| self.out[a] & ends != 0)
    }

    /// Depth-first over `edges[i..]`, `u -> v` (with `u < v`) first. The
    /// visitor returns false to stop; the return value reports a stop.
    fn run(&mut self, i: usize, visit: &mut dyn FnMut(&[u64]) -> bool) -> bool {
        if i == self.edges.len() {
            return !visit(&self.out);
        }
        let (u, v) = self.edges[i];
        for (p, q) in [(u, v), (v, u)] {
            self.save();
            let stop = self.add(p, q) && self.run(i + 1, visit);
            self.restore();
            if stop {
                return true;
            }
        }
        false
    }
}

/// Most constrained edges first: descending endpoint-degree sum, then
/// lexicographic.
fn edge_order(g: &Graph) -> Vec<(usize, usize)> {
    let mut edges = g.edges();
    edges.sort_by_key(|&(u, v)| (std::cmp::Reverse(g.degree(u) + g.degree(v)), u, v));
    edges
}

fn first_orientation(g: &Graph, goal: Goal) -> Option<OrientedGraph> {
    let edges = edge_order(g);
    let Some(&(u, v)) = edges.first() else {
        return Some(OrientedGraph::low_to_high(g));
    };
    // Reversing every arc preserves both goals, so the first edge may be
    // fixed to its preferred direction without losing the first solution.
    let mut s = Search::new(g, goal, edges);
    s.add(u, v);
    let mut found = None;
    s.run(1, &mut |out| {
        found = Some(out.to_vec());
        false
    });
    found.map(|out| OrientedGraph::from_out_masks(g, out))
}

/// First semi-transitive orientation in the fixed branching order, or `None`
/// when the graph is not word-representable.
pub fn find_semi_transitive_orientation(g: &Graph) -> Option<OrientedGraph> {
    first_orientation(g, Goal::SemiTransitive)
}

pub fn is_word_representable(g: &Graph) -> bool {
    find_semi_transitive_orientation(g).is_some()
}

/// A transitive orientation, if the graph is a comparability graph.
pub fn find_transitive_orientation(g: &Graph) -> Option<OrientedGraph> {
    first_orientation(g, Goal::Transitive)
}

fn seeded_search<'a>(g: &'a Graph, fixed: &[(usize, usize)]) -> Result<Option<Search<'a>>, OrientationError> {
    let mut pairs = Vec::new();
    for &(u, v) in fixed {
        if u >= g.n() || v >= g.n() || !g.adj(u, v) {
            return Err(OrientationError::NotAnEdge(u, v));
        }
        pairs.push((u.min(v), u.max(v)));
    }
    let mut sorted = pairs.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(OrientationError::Duplicate(w[0].0, w[0].1));
    }
    let free: Vec<(usize, usize)> = edge_order(g).into_iter().filter(|e| !pairs.contains(e)).collect();
    let mut s = Search::new(g, Goal::SemiTransitive, free);
    for &(u, v) in fixed {
        if !s.add(u, v) {
            return Ok(None);
        }
    }
    Ok(Some(s))
}

/// Call `visit` on every semi-transitive orientation of `g` that contains
/// the arcs in `fixed`, in branching order, until it returns false.
pub fn for_each_semi_transitive_extension(
    g: &Graph,
    fixed: &[(usize, usize)],
    mut visit: impl FnMut(&OrientedGraph) -> bool,
) -> Result<(), OrientationError> {
    if let Some(mut s) = seeded_search(g, fixed)? {
        s.run(0, &mut |out| visit(&OrientedGraph::from_out_masks(g, out.to_vec())));
    }
    Ok(())
}

/// First semi-transitive orientation containing the arcs in `fixed`.
pub fn find_semi_transitive_extension(
    g: &Graph,
    fixed: &[(usize, usize)],
) -> Result<Option<OrientedGraph>, OrientationError> {
    let mut found = None;
    for_each_semi_transitive_extension(g, fixed, |og| {
        found = Some(og.clone());
        false
    })?;
    Ok(found)
}

/// Number of semi-transitive orientations of `g` containing every arc of
/// `fixed`.
pub fn count_semi_transitive_extensions(g: &Graph, fixed: &[(usize, usize)]) -> Result<u64, OrientationError> {
    let mut count = 0u64;
    if let Some(mut s) = seeded_search(g, fixed)? {
        s.run(0, &mut |_| {
            count += 1;
            true
        });
    }
    Ok(count)
}
