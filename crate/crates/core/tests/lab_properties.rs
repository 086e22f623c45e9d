use matchdeck::lab::{
    check_family_member, check_pair, minimality_report, pair_records, search_counterexamples,
    verify_family_member, verify_proof_identity,
};
use matchdeck::Graph;
use num_bigint::BigInt;

#[test]
fn complemented_family_members() {
    for k in 3..=5 {
        let r = check_family_member(k, true).unwrap();
        assert!(r.passed(), "k = {k}: {:?}", r.first_failure());
        assert!(r.clauses.iter().any(|c| c.name.contains("complement commutes")));
    }
}

#[test]
fn plain_family_members_and_np() {
    for k in 3..=7 {
        let r = check_family_member(k, false).unwrap();
        assert!(r.passed(), "k = {k}: {:?}", r.first_failure());
        assert_eq!(r.cycle_np, BigInt::from(2));
        assert_eq!(r.union_np, BigInt::from(if k % 2 == 1 { 0 } else { 4 }));
        assert!(r.pair.graph_a.is_connected() && !r.pair.graph_b.is_connected());
    }
}

#[test]
fn proof_identities() {
    for k in 2..=12 {
        let id = verify_proof_identity(k).unwrap();
        assert_eq!(id.path, id.cycle_plus_path);
    }
}

#[test]
fn six_vertex_census() {
    let pairs = search_counterexamples(6).unwrap();
    assert_eq!(pairs.len(), 4);
    for p in &pairs {
        check_pair(p).unwrap();
    }
    let rep = minimality_report(&pairs);
    assert_eq!(rep.minimal.len(), 1);
    let min = &pairs[rep.minimal[0]];
    assert_eq!(min.graph_a.edge_count(), 6);
    // the minimal pair is C_6 against C_3 + C_3
    let c3 = Graph::cycle(3).unwrap();
    let members = [&min.graph_a, &min.graph_b];
    assert!(members.iter().any(|g| matchdeck::are_isomorphic(g, &Graph::cycle(6).unwrap()).unwrap()));
    assert!(members.iter().any(|g| matchdeck::are_isomorphic(g, &c3.disjoint_union(&c3)).unwrap()));

    let records = pair_records(&pairs).unwrap();
    assert_eq!(records.len(), 4);
    assert!(records.iter().all(|r| r.edges_a == r.edges_b));
}

#[test]
fn family_pairs_satisfy_pair_checks() {
    for (k, comp) in [(3, false), (4, false), (3, true), (5, true)] {
        check_pair(&verify_family_member(k, comp).unwrap()).unwrap();
    }
}
