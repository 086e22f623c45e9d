mod common;

use std::collections::HashSet;

use matchdeck::canon::{canonicalize, canonicalize_exhaustive};
use matchdeck::enumerate::{all_simple_graphs, labeled_graph, simple_graph_classes};
use matchdeck::{graph6, Graph};
use proptest::prelude::*;

use common::*;

fn arb_simple(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), any::<u64>().prop_map(move |m| if pairs == 64 { m } else { m & ((1u64 << pairs) - 1) }))
            .prop_map(|(n, mask)| labeled_graph(n, mask))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn deletion_order_commutes(g in arb_simple(7), a in 0usize..7, b in 0usize..7) {
        prop_assume!(g.n() >= 2 && a < g.n() && b < g.n() && a != b);
        // delete a then b (b shifts down if a < b), versus b then a
        let ab = g.delete_vertex(a).unwrap().delete_vertex(if a < b { b - 1 } else { b }).unwrap();
        let ba = g.delete_vertex(b).unwrap().delete_vertex(if b < a { a - 1 } else { a }).unwrap();
        prop_assert_eq!(canonicalize(&ab).unwrap(), canonicalize(&ba).unwrap());
    }

    #[test]
    fn complement_is_an_involution(g in arb_simple(8)) {
        let c = g.complement().unwrap();
        prop_assert_eq!(c.edge_count(), g.n() * g.n().saturating_sub(1) / 2 - g.edge_count());
        prop_assert_eq!(c.complement().unwrap(), g);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(g in arb_simple(7), seed in any::<u64>()) {
        let want = canonicalize(&g).unwrap();
        let mut r = rng(seed);
        for _ in 0..50 {
            let h = g.relabel(&random_perm(&mut r, g.n())).unwrap();
            prop_assert_eq!(&canonicalize(&h).unwrap(), &want);
        }
        prop_assert_eq!(canonicalize(&want.to_graph()).unwrap(), want);
    }

    #[test]
    fn graph6_round_trip(g in arb_simple(9)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g).unwrap()).unwrap(), g);
    }
}

#[test]
fn complement_commutes_with_deletion_on_all_small_graphs() {
    for n in 1..=6 {
        for g in all_simple_graphs(n).unwrap() {
            for v in 0..n {
                let lhs = g.delete_vertex(v).unwrap().complement().unwrap();
                let rhs = g.complement().unwrap().delete_vertex(v).unwrap();
                assert_eq!(canonicalize(&lhs).unwrap(), canonicalize(&rhs).unwrap());
            }
        }
    }
}

#[test]
fn class_counts_match_brute_force_dedup() {
    // independent dedup: keep a labeled graph unless brute force finds an
    // isomorphic representative already kept
    for n in 0usize..=4 {
        let mut reps: Vec<Graph> = Vec::new();
        for mask in 0..1u64 << (n * n.saturating_sub(1) / 2) {
            let g = labeled_graph(n, mask);
            if !reps.iter().any(|r| brute_isomorphic(r, &g)) {
                reps.push(g);
            }
        }
        assert_eq!(reps.len(), all_simple_graphs(n).unwrap().len(), "n = {n}");
    }
    assert_eq!(all_simple_graphs(4).unwrap().len(), 11);
}

#[test]
fn six_vertex_classes_are_distinct_and_complete() {
    let classes = simple_graph_classes(6).unwrap();
    assert_eq!(classes.len(), 156);
    let reps: Vec<Graph> = classes.iter().map(|c| c.to_graph()).collect();

    // sampled pairwise check: distinct canonical forms are never isomorphic
    let mut r = rng(6);
    use rand::Rng;
    for _ in 0..400 {
        let (i, j) = (r.gen_range(0..156), r.gen_range(0..156));
        if i != j && reps[i].edge_count() == reps[j].edge_count() {
            assert!(!brute_isomorphic(&reps[i], &reps[j]));
        }
    }
    // and every labeled graph is isomorphic to its class representative
    let set: HashSet<_> = classes.iter().cloned().collect();
    for _ in 0..200 {
        let g = labeled_graph(6, r.gen_range(0..1 << 15));
        let cf = canonicalize(&g).unwrap();
        assert!(set.contains(&cf));
        assert!(brute_isomorphic(&g, &cf.to_graph()));
    }
}

#[test]
fn pruned_canonicalization_equals_exhaustive_on_multigraphs() {
    let mut r = rng(17);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut r, 0..=7);
        let g = random_multi(&mut r, n, 3);
        assert_eq!(canonicalize(&g).unwrap(), canonicalize_exhaustive(&g), "{g}");
    }
}

#[test]
fn relabeled_cycle_deletion_gives_path() {
    let c3 = Graph::cycle(3).unwrap();
    let g = c3.disjoint_union(&c3);
    let want = canonicalize(&c3.disjoint_union(&Graph::path(2))).unwrap();
    for v in 0..6 {
        assert_eq!(canonicalize(&g.delete_vertex(v).unwrap()).unwrap(), want);
    }
}
