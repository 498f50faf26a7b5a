use serde::{Deserialize, Serialize};

use super::{bit, bits, Graph};

/// Injective map from pattern vertices to host vertices that preserves both
/// adjacency and non-adjacency.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    /// `map()[i]` is the host vertex of pattern vertex `i`.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self) -> Vec<usize> {
        let mut v = self.map.clone();
        v.sort_unstable();
        v
    }

    pub fn image_mask(&self) -> u64 {
        self.map.iter().fold(0, |m, &v| m | bit(v))
    }

    /// Re-check injectivity and induced-subgraph semantics.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.n() || self.map.iter().any(|&v| v >= host.n()) {
            return false;
        }
        if self.image_mask().count_ones() as usize != self.map.len() {
            return false;
        }
        (0..pattern.n()).all(|a| {
            (a + 1..pattern.n()).all(|b| pattern.adj(a, b) == host.adj(self.map[a], self.map[b]))
        })
    }

    /// Compose with a relabelling of the host: vertex `v` becomes `relabel[v]`.
    pub fn relabeled(&self, relabel: &[usize]) -> Embedding {
        Embedding { map: self.map.iter().map(|&v| relabel[v]).collect() }
    }
}

/// First induced embedding of `pattern` into `host` in lexicographic order of
/// the map (pattern vertices assigned in label order, host candidates tried in
/// ascending order).
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let k = pattern.n();
    if k > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let mut map = Vec::with_capacity(k);
    if extend(host, pattern, 0, &mut map) {
        Some(Embedding { map })
    } else {
        None
    }
}

fn extend(host: &Graph, pattern: &Graph, used: u64, map: &mut Vec<usize>) -> bool {
    let a = map.len();
    if a == pattern.n() {
        return true;
    }
    // Candidates must match adjacency to every already-placed pattern vertex.
    let mut cand = host.vertex_mask() & !used;
    for (b, &hb) in map.iter().enumerate() {
        if pattern.adj(a, b) {
            cand &= host.neighbors_mask(hb);
        } else {
            cand &= !host.neighbors_mask(hb);
        }
    }
    let need = pattern.degree(a);
    for v in bits(cand) {
        if host.degree(v) < need {
            continue;
        }
        map.push(v);
        if extend(host, pattern, used | bit(v), map) {
            return true;
        }
        map.pop();
    }
    false
}
