//! Canonical labelling by colour refinement plus individualisation.
//!
//! Every leaf of the individualisation tree yields a labelling; the canonical
//! form is the lexicographically least relabelled adjacency among them. Cells
//! made of mutual twins are branched on only once, since permuting twins is an
//! automorphism.

use super::{bit, Graph};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_masks(self.rows.clone())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// The canonical form and a permutation `perm` with `g.permuted(&perm)`
/// equal to the canonical graph.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    let mut colors = vec![0u32; n];
    refine(g, &mut colors);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(g, colors, &mut best);
    let (rows, perm) = best.unwrap_or_default();
    (CanonicalForm { n, rows }, perm)
}

/// Refine to the coarsest equitable partition finer than `colors`.
/// Colours are dense ranks `0..k`.
fn refine(g: &Graph, colors: &mut [u32]) {
    let n = colors.len();
    let mut classes = count_classes(colors);
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort_unstable();
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                rank += 1;
            }
            colors[sigs[i].2] = rank;
        }
        let now = if n == 0 { 0 } else { rank as usize + 1 };
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c: Vec<u32> = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn search(g: &Graph, colors: Vec<u32>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let n = colors.len();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    let target = match (0..n).find(|&c| sizes[c] > 1) {
        None => {
            let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
            let mut rows = vec![0u64; n];
            for u in 0..n {
                for w in g.neighbors(u) {
                    rows[perm[u]] |= bit(perm[w]);
                }
            }
            if best.as_ref().is_none_or(|(b, _)| rows < *b) {
                *best = Some((rows, perm));
            }
            return;
        }
        Some(c) => c as u32,
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    let all_twins = cell.iter().all(|&u| {
        cell.iter().all(|&v| {
            u == v || g.neighbors_mask(u) & !bit(v) == g.neighbors_mask(v) & !bit(u)
        })
    });
    let branches = if all_twins { &cell[..1] } else { &cell[..] };
    for &v in branches {
        let mut next: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| if c > target || (c == target && w != v) { c + 1 } else { c })
            .collect();
        refine(g, &mut next);
        search(g, next, best);
    }
}
