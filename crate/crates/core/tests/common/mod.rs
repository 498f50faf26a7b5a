//! Reference implementations written directly from the definitions, with
//! no shared code paths with the library beyond the `Graph` container.
#![allow(dead_code)]

use wordrep_core::graph::Graph;
use wordrep_core::orientation::OrientedGraph;

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for i in 0..=k {
                let mut q = p.clone();
                q.insert(i, k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    permutations(g.n()).iter().any(|p| g.edges().iter().all(|&(u, v)| h.adj(p[u], p[v])))
}

/// graph6 encoding from an explicit bit vector.
pub fn reference_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.adj(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc * 2 + b as u8);
        s.push((v + 63) as char);
    }
    s
}

/// Whether the letters `x`, `y` alternate, by deleting every other letter.
pub fn naive_alternate(w: &[usize], x: usize, y: usize) -> bool {
    let sub: Vec<usize> = w.iter().copied().filter(|&c| c == x || c == y).collect();
    sub.windows(2).all(|p| p[0] != p[1])
}

/// Every orientation of `g` as an arc list, with edges in lexicographic
/// order and bit `i` choosing the direction of edge `i`.
pub fn orientation_from_bits(g: &Graph, code: u64) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| if code >> i & 1 == 0 { (u, v) } else { (v, u) })
        .collect()
}

fn arc(arcs: &[(usize, usize)], u: usize, v: usize) -> bool {
    arcs.contains(&(u, v))
}

/// Acyclicity by repeatedly deleting sinks.
pub fn naive_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut alive: Vec<bool> = vec![true; n];
    loop {
        let sink = (0..n).find(|&v| alive[v] && !arcs.iter().any(|&(a, b)| a == v && alive[b]));
        match sink {
            Some(v) => alive[v] = false,
            None => return alive.iter().all(|a| !a),
        }
    }
}

/// The shortcut definition taken literally: some vertex subset of size at
/// least 4 induces an acyclic digraph with a unique source and a unique sink,
/// a Hamiltonian path between them, the arc from source to sink, and a
/// violation of transitivity.
pub fn literal_has_shortcut(n: usize, arcs: &[(usize, usize)]) -> bool {
    for set in 0u64..1 << n {
        if set.count_ones() < 4 {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| set >> v & 1 == 1).collect();
        let sub: Vec<(usize, usize)> = arcs
            .iter()
            .copied()
            .filter(|&(a, b)| set >> a & 1 == 1 && set >> b & 1 == 1)
            .collect();
        let sources: Vec<usize> = vs.iter().copied().filter(|&v| !sub.iter().any(|&(_, b)| b == v)).collect();
        let sinks: Vec<usize> = vs.iter().copied().filter(|&v| !sub.iter().any(|&(a, _)| a == v)).collect();
        if sources.len() != 1 || sinks.len() != 1 {
            continue;
        }
        let (s, t) = (sources[0], sinks[0]);
        if !arc(&sub, s, t) {
            continue;
        }
        let transitive = sub.iter().all(|&(a, b)| sub.iter().all(|&(c, d)| c != b || arc(&sub, a, d)));
        if transitive {
            continue;
        }
        let hamiltonian = permutations(vs.len()).iter().any(|p| {
            let path: Vec<usize> = p.iter().map(|&i| vs[i]).collect();
            path[0] == s && path[path.len() - 1] == t && path.windows(2).all(|w| arc(&sub, w[0], w[1]))
        });
        if hamiltonian && naive_acyclic(n, &sub) {
            return true;
        }
    }
    false
}

pub fn literal_semi_transitive(n: usize, arcs: &[(usize, usize)]) -> bool {
    naive_acyclic(n, arcs) && !literal_has_shortcut(n, arcs)
}

/// Word-representability by trying all `2^|E|` orientations with the
/// literal definition. Only for tiny graphs.
pub fn literal_representable(g: &Graph) -> bool {
    (0..1u64 << g.edge_count()).any(|c| literal_semi_transitive(g.n(), &orientation_from_bits(g, c)))
}

pub fn arcs_of(og: &OrientedGraph) -> Vec<(usize, usize)> {
    og.arcs()
}

/// Every labelled graph on `n` vertices.
pub fn all_labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}
