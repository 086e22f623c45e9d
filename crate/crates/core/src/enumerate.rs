//! One representative per isomorphism class of simple graphs on `n` vertices.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canon::{canonicalize, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_N: usize = 7;

/// Labeled simple graph number `mask` on `n` vertices: bit `k` of the mask
/// switches on the `k`-th pair in column order `{0,1}, {0,2}, {1,2}, {0,3}, ...`.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for w in 1..n {
        for u in 0..w {
            if mask >> k & 1 == 1 {
                g.add_edge(u, w).expect("pair in range");
            }
            k += 1;
        }
    }
    g
}

/// Canonical forms of all simple graphs on `n` vertices, sorted.
///
/// Every one of the `2^(n choose 2)` labeled graphs is canonicalized and the
/// results deduplicated. The mask range is split across threads; the output
/// order does not depend on the split.
pub fn simple_graph_classes(n: usize) -> Result<Vec<CanonicalForm>> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::Capacity {
            what: "enumeration vertex count",
            limit: MAX_ENUMERATION_N,
            got: n,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let total: u64 = 1 << pairs;
    let set: BTreeSet<CanonicalForm> = (0..total)
        .into_par_iter()
        .fold(BTreeSet::new, |mut acc, mask| {
            acc.insert(canonicalize(&labeled_graph(n, mask)).expect("n within bound"));
            acc
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(set.into_iter().collect())
}

/// One graph per isomorphism class (in canonical labeling), ordered by
/// canonical form. Disconnected graphs are included.
pub fn all_simple_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(simple_graph_classes(n)?
        .iter()
        .map(CanonicalForm::to_graph)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = (0..=5)
            .map(|n| all_simple_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
    }

    #[test]
    fn three_vertex_classes_by_hand() {
        let edge_counts: Vec<usize> = all_simple_graphs(3)
            .unwrap()
            .iter()
            .map(Graph::edge_count)
            .collect();
        let mut sorted = edge_counts.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2, 3]);
    }

    #[test]
    fn rejects_large_n() {
        assert!(matches!(
            all_simple_graphs(8),
            Err(Error::Capacity { limit: 7, got: 8, .. })
        ));
    }

    #[test]
    fn labeled_graph_bit_order() {
        let g = labeled_graph(4, 0b100101);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && g.has_edge(2, 3));
        assert_eq!(g.edge_count(), 3);
    }
}
