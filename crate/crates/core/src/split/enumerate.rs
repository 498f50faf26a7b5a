use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::graph::{bits, canonical_form, full_mask, CanonicalForm, Graph};

/// One representative per isomorphism class of split graphs on `n`
/// vertices, in canonical labelling and canonical-form order.
///
/// Built directly from a clique `K_m` and a multiset of `n - m` proper
/// subsets of it as independent neighbourhoods, so it reaches sizes where
/// filtering the full enumeration would be too slow.
pub fn enumerate_split_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::new(0)];
    }
    let found: BTreeSet<CanonicalForm> = (1..=n)
        .into_par_iter()
        .map(|m| {
            let mut local = BTreeSet::new();
            let choices: Vec<u64> = (0..full_mask(m)).collect();
            let mut picked = Vec::with_capacity(n - m);
            multisets(&choices, n - m, 0, &mut picked, &mut |nbhds| {
                let mut g = Graph::complete(m);
                for &s in nbhds {
                    let nbrs: Vec<usize> = bits(s).collect();
                    g.add_vertex(&nbrs);
                }
                local.insert(canonical_form(&g));
            });
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    found.iter().map(CanonicalForm::to_graph).collect()
}

fn multisets(choices: &[u64], k: usize, from: usize, picked: &mut Vec<u64>, f: &mut dyn FnMut(&[u64])) {
    if picked.len() == k {
        f(picked);
        return;
    }
    for i in from..choices.len() {
        picked.push(choices[i]);
        multisets(choices, k, i, picked, f);
        picked.pop();
    }
}
