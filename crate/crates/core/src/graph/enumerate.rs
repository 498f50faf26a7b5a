use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{canonical_form, CanonicalForm, Graph};
use crate::error::GraphError;

/// Largest `n` accepted by [`enumerate_graphs`] without an override.
pub const ENUMERATION_GUARD: usize = 8;

/// One representative per isomorphism class of graphs on `n` vertices, each
/// in canonical labelling, ordered by canonical form.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > ENUMERATION_GUARD {
        return Err(GraphError::EnumerationGuard { n, guard: ENUMERATION_GUARD });
    }
    Ok(enumerate_graphs_unguarded(n))
}

/// As [`enumerate_graphs`] with no size guard. Cost grows super-exponentially;
/// `n = 9` takes minutes.
pub fn enumerate_graphs_unguarded(n: usize) -> Vec<Graph> {
    let mut level: Vec<CanonicalForm> = vec![canonical_form(&Graph::new(0))];
    for k in 1..=n {
        level = extend(&level, k);
    }
    level.iter().map(CanonicalForm::to_graph).collect()
}

/// Add a vertex with every possible neighbourhood to each class on `k - 1`
/// vertices and keep one canonical representative per class.
fn extend(parents: &[CanonicalForm], k: usize) -> Vec<CanonicalForm> {
    let subsets = 1u64 << (k - 1);
    let found: BTreeSet<CanonicalForm> = parents
        .par_iter()
        .map(|p| {
            let base = p.to_graph();
            let mut local = BTreeSet::new();
            for nb in 0..subsets {
                let mut g = base.clone();
                let nbrs: Vec<usize> = super::bits(nb).collect();
                g.add_vertex(&nbrs);
                local.insert(canonical_form(&g));
            }
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    found.into_iter().collect()
}
