//! Pairs of non-isomorphic graphs that share a polynomial deck but not a
//! matching polynomial: the `C_2k` / `C_k + C_k` family, the recurrence
//! identities behind it, and an exhaustive search on small vertex counts.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::are_isomorphic;
use crate::enumerate::{all_simple_graphs, MAX_ENUMERATION_N};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::graph6;
use crate::matching::{matching_polynomial, matching_polynomial_oracle, perfect_count, ORACLE_MAX_N};
use crate::poly::Poly;
use crate::reconstruct::{build_deck, recover_coefficients, PolynomialDeck};

#[derive(Debug, Clone)]
pub struct CounterexamplePair {
    pub graph_a: Graph,
    pub graph_b: Graph,
    /// Cards sorted by their text form.
    pub shared_deck: PolynomialDeck,
    pub poly_a: Poly,
    pub poly_b: Poly,
}

impl CounterexamplePair {
    /// True when the two polynomials agree everywhere except on the
    /// perfect-matching coefficient `m_{0,n/2}`.
    pub fn differs_only_in_perfect_matchings(&self) -> bool {
        let n = self.graph_a.n();
        n % 2 == 0
            && self.poly_a.without_x_free_terms() == self.poly_b.without_x_free_terms()
            && perfect_count(&self.poly_a, n) != perfect_count(&self.poly_b, n)
    }
}

fn sorted_deck(deck: &PolynomialDeck) -> PolynomialDeck {
    let mut cards = deck.cards().to_vec();
    cards.sort_by_cached_key(Poly::to_string);
    PolynomialDeck::new(deck.n(), cards).expect("reordering keeps a valid deck")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct FamilyReport {
    pub k: usize,
    pub complemented: bool,
    pub pair: CounterexamplePair,
    /// Perfect matchings of `C_2k` and of `C_k + C_k` (before any complement).
    pub cycle_np: BigInt,
    pub union_np: BigInt,
    pub clauses: Vec<Clause>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Clause> {
        self.clauses.iter().find(|c| !c.passed)
    }
}

struct Clauses(Vec<Clause>);

impl Clauses {
    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(Clause {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

fn all_cards_isomorphic_to(g: &Graph, expected: &Graph) -> Result<bool> {
    for v in 0..g.n() {
        if !are_isomorphic(&g.delete_vertex(v)?, expected)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs every check on the pair `(C_2k, C_k + C_k)`, or on their complements.
///
/// `k >= 3`, or `k = 2` without complement (the multigraph pair
/// `C_4`, `C_2 + C_2`). A failed check is recorded in the report, not
/// returned as an error.
pub fn check_family_member(k: usize, complemented: bool) -> Result<FamilyReport> {
    if k < 2 || (k == 2 && complemented) {
        return Err(Error::domain(format!(
            "family member needs k >= 3 (or k = 2 uncomplemented), got k = {k}{}",
            if complemented { " with complement" } else { "" }
        )));
    }
    let cycle = Graph::cycle(2 * k)?;
    let ck = Graph::cycle(k)?;
    let union = ck.disjoint_union(&ck);
    let cycle_card = Graph::path(2 * k - 1);
    let union_card = ck.disjoint_union(&Graph::path(k - 1));

    let (graph_a, graph_b, card_a, card_b) = if complemented {
        (
            cycle.complement()?,
            union.complement()?,
            cycle_card.complement()?,
            union_card.complement()?,
        )
    } else {
        (cycle.clone(), union.clone(), cycle_card, union_card)
    };

    let mut c = Clauses(Vec::new());
    let iso = are_isomorphic(&graph_a, &graph_b)?;
    c.check(
        "non-isomorphic",
        !iso,
        format!(
            "C_{} is connected: {}, C_{k} + C_{k} is connected: {}",
            2 * k,
            cycle.is_connected(),
            union.is_connected()
        ),
    );

    let deck_a = build_deck(&graph_a)?;
    let deck_b = build_deck(&graph_b)?;
    let same = deck_a.same_multiset(&deck_b);
    c.check("decks equal", same, format!("card {}", deck_a.cards()[0]));

    let poly_a = matching_polynomial(&graph_a);
    let poly_b = matching_polynomial(&graph_b);
    c.check(
        "polynomials differ",
        poly_a != poly_b,
        format!("{poly_a}  vs  {poly_b}"),
    );

    let cycle_np = perfect_count(&matching_polynomial(&cycle), cycle.n());
    let union_np = perfect_count(&matching_polynomial(&union), union.n());
    c.check(
        format!("np(C_{}) = 2", 2 * k),
        cycle_np == BigInt::from(2),
        format!("np = {cycle_np}"),
    );
    let want_union = if k % 2 == 1 { 0 } else { 4 };
    c.check(
        format!("np(C_{k} + C_{k}) = {want_union}"),
        union_np == BigInt::from(want_union),
        format!("np = {union_np}"),
    );

    let prefix = if complemented { "complement of " } else { "" };
    c.check(
        format!("every card of A is {prefix}P_{}", 2 * k - 1),
        all_cards_isomorphic_to(&graph_a, &card_a)?,
        "",
    );
    c.check(
        format!("every card of B is {prefix}C_{k} + P_{}", k - 1),
        all_cards_isomorphic_to(&graph_b, &card_b)?,
        "",
    );

    if complemented {
        let mut commutes = true;
        for (base, comp) in [(&cycle, &graph_a), (&union, &graph_b)] {
            for v in 0..base.n() {
                let lhs = base.delete_vertex(v)?.complement()?;
                let rhs = comp.delete_vertex(v)?;
                commutes &= lhs == rhs && are_isomorphic(&lhs, &rhs)?;
            }
        }
        c.check("complement commutes with vertex deletion", commutes, "");
    }

    Ok(FamilyReport {
        k,
        complemented,
        pair: CounterexamplePair {
            graph_a,
            graph_b,
            shared_deck: sorted_deck(&deck_a),
            poly_a,
            poly_b,
        },
        cycle_np,
        union_np,
        clauses: c.0,
    })
}

/// Like [`check_family_member`], but a failed check is an error naming it.
pub fn verify_family_member(k: usize, complemented: bool) -> Result<CounterexamplePair> {
    let report = check_family_member(k, complemented)?;
    match report.first_failure() {
        Some(cl) => Err(Error::Verification {
            clause: cl.name.clone(),
            detail: cl.detail.clone(),
        }),
        None => Ok(report.pair),
    }
}

/// Both sides of the two recurrence expansions used for the family.
#[derive(Debug, Clone)]
pub struct ProofIdentity {
    pub k: usize,
    /// `M(P_{2k-1})`
    pub path: Poly,
    /// `M(C_k + P_{k-1})`
    pub cycle_plus_path: Poly,
    /// `M(P_{k-1} + P_k) + y M(P_{k-2} + P_{k-1})`, from separately computed
    /// path factors.
    pub expansion: Poly,
}

fn fail(clause: &str, detail: String) -> Error {
    Error::Verification {
        clause: clause.to_string(),
        detail,
    }
}

/// Checks, for `k >= 2`,
///
/// ```text
/// M(P_{2k-1})    = M(P_{k-1} + P_k) + y M(P_{k-2} + P_{k-1})
/// M(C_k + P_{k-1}) = M(P_k + P_{k-1}) + y M(P_{k-2} + P_{k-1})
/// ```
///
/// and hence `M(P_{2k-1}) = M(C_k + P_{k-1})`. The left sides come from the
/// recurrence engine on the whole graph (and from the oracle when small
/// enough); the right side is assembled from single-path polynomials. The
/// edge deletions behind each expansion are checked structurally too.
pub fn verify_proof_identity(k: usize) -> Result<ProofIdentity> {
    if k < 2 {
        return Err(Error::domain(format!("proof identity needs k >= 2, got {k}")));
    }
    let long_path = Graph::path(2 * k - 1);
    let ck = Graph::cycle(k)?;
    let cycle_plus_path = ck.disjoint_union(&Graph::path(k - 1));

    // the expanded edges: {k-2, k-1} of the long path, {0, k-1} of the cycle
    let e_path = Edge::new(k - 2, k - 1);
    if long_path.delete_edge(e_path)? != Graph::path(k - 1).disjoint_union(&Graph::path(k))
        || long_path.delete_both_endpoints(e_path)?
            != Graph::path(k - 2).disjoint_union(&Graph::path(k - 1))
    {
        return Err(fail("path edge expansion", format!("edge {e_path} of P_{}", 2 * k - 1)));
    }
    let e_cycle = Edge::new(0, k - 1);
    if ck.delete_edge(e_cycle)? != Graph::path(k) || ck.delete_both_endpoints(e_cycle)? != Graph::path(k - 2) {
        return Err(fail("cycle edge expansion", format!("edge {e_cycle} of C_{k}")));
    }

    let path_poly = |m: usize| matching_polynomial(&Graph::path(m));
    let shared = (&path_poly(k - 2) * &path_poly(k - 1)).mul_monomial(0, 1);
    let expansion = &(&path_poly(k - 1) * &path_poly(k)) + &shared;

    let lhs_path = matching_polynomial(&long_path);
    let lhs_cycle = matching_polynomial(&cycle_plus_path);
    if lhs_path != expansion {
        return Err(fail(
            "M(P_{2k-1}) expansion",
            format!("{lhs_path}  vs  {expansion}"),
        ));
    }
    if lhs_cycle != expansion {
        return Err(fail(
            "M(C_k + P_{k-1}) expansion",
            format!("{lhs_cycle}  vs  {expansion}"),
        ));
    }
    for (name, g, p) in [
        ("oracle M(P_{2k-1})", &long_path, &lhs_path),
        ("oracle M(C_k + P_{k-1})", &cycle_plus_path, &lhs_cycle),
    ] {
        if g.n() <= ORACLE_MAX_N && matching_polynomial_oracle(g)? != *p {
            return Err(fail(name, format!("recurrence gave {p}")));
        }
    }
    Ok(ProofIdentity {
        k,
        path: lhs_path,
        cycle_plus_path: lhs_cycle,
        expansion,
    })
}

struct Candidate {
    graph: Graph,
    poly: Poly,
    deck: PolynomialDeck,
    deck_key: Vec<String>,
}

/// All unordered pairs of non-isomorphic simple graphs on `n` vertices with
/// equal polynomial decks and different matching polynomials.
///
/// Pairs come out ordered by the canonical forms of their members, `graph_a`
/// being the smaller one; each graph is in canonical labeling.
pub fn search_counterexamples(n: usize) -> Result<Vec<CounterexamplePair>> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::Capacity {
            what: "counterexample search vertex count",
            limit: MAX_ENUMERATION_N,
            got: n,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let classes = all_simple_graphs(n)?;
    let candidates: Vec<Candidate> = classes
        .into_par_iter()
        .map(|graph| {
            let deck = build_deck(&graph).expect("n >= 1");
            Candidate {
                poly: matching_polynomial(&graph),
                deck_key: deck.multiset_key(),
                deck,
                graph,
            }
        })
        .collect();

    let mut groups: BTreeMap<&[String], Vec<usize>> = BTreeMap::new();
    for (idx, c) in candidates.iter().enumerate() {
        groups.entry(&c.deck_key).or_default().push(idx);
    }
    let mut index_pairs = Vec::new();
    for members in groups.values() {
        for (x, &a) in members.iter().enumerate() {
            for &b in &members[x + 1..] {
                if candidates[a].poly != candidates[b].poly {
                    index_pairs.push((a, b));
                }
            }
        }
    }
    index_pairs.sort_unstable();
    Ok(index_pairs
        .into_iter()
        .map(|(a, b)| CounterexamplePair {
            graph_a: candidates[a].graph.clone(),
            graph_b: candidates[b].graph.clone(),
            shared_deck: sorted_deck(&candidates[a].deck),
            poly_a: candidates[a].poly.clone(),
            poly_b: candidates[b].poly.clone(),
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairSummary {
    pub index: usize,
    pub n: usize,
    pub edges_a: usize,
    pub edges_b: usize,
    pub connected_a: bool,
    pub connected_b: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub pairs: Vec<PairSummary>,
    /// Indices of the pairs minimizing `(n, edge count of the denser member)`.
    pub minimal: Vec<usize>,
    pub tie: bool,
}

pub fn minimality_report(pairs: &[CounterexamplePair]) -> MinimalityReport {
    let summaries: Vec<PairSummary> = pairs
        .iter()
        .enumerate()
        .map(|(index, p)| PairSummary {
            index,
            n: p.graph_a.n(),
            edges_a: p.graph_a.edge_count(),
            edges_b: p.graph_b.edge_count(),
            connected_a: p.graph_a.is_connected(),
            connected_b: p.graph_b.is_connected(),
        })
        .collect();
    let key = |s: &PairSummary| (s.n, s.edges_a.max(s.edges_b));
    let best = summaries.iter().map(key).min();
    let minimal: Vec<usize> = summaries
        .iter()
        .filter(|s| Some(key(s)) == best)
        .map(|s| s.index)
        .collect();
    MinimalityReport {
        tie: minimal.len() > 1,
        minimal,
        pairs: summaries,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PairRecord {
    pub graph6_a: String,
    pub graph6_b: String,
    pub n: usize,
    pub edges_a: usize,
    pub edges_b: usize,
    pub connected_a: bool,
    pub connected_b: bool,
    pub poly_a: Poly,
    pub poly_b: Poly,
    pub np_a: String,
    pub np_b: String,
    pub deck: PolynomialDeck,
}

/// JSON-ready records of a search result, one per pair, same order.
pub fn pair_records(pairs: &[CounterexamplePair]) -> Result<Vec<PairRecord>> {
    pairs
        .iter()
        .map(|p| {
            let n = p.graph_a.n();
            Ok(PairRecord {
                graph6_a: graph6::encode(&p.graph_a)?,
                graph6_b: graph6::encode(&p.graph_b)?,
                n,
                edges_a: p.graph_a.edge_count(),
                edges_b: p.graph_b.edge_count(),
                connected_a: p.graph_a.is_connected(),
                connected_b: p.graph_b.is_connected(),
                poly_a: p.poly_a.clone(),
                poly_b: p.poly_b.clone(),
                np_a: perfect_count(&p.poly_a, n).to_string(),
                np_b: perfect_count(&p.poly_b, n).to_string(),
                deck: p.shared_deck.clone(),
            })
        })
        .collect()
}

/// Checks the structural facts every reported pair must satisfy: distinct
/// isomorphism classes, equal decks, equal recovered known parts, equal edge
/// counts, and polynomials differing only in the perfect-matching term.
pub fn check_pair(p: &CounterexamplePair) -> Result<()> {
    let err = |clause: &str| Error::Verification {
        clause: clause.to_string(),
        detail: format!("{}  vs  {}", p.graph_a, p.graph_b),
    };
    if are_isomorphic(&p.graph_a, &p.graph_b)? {
        return Err(err("non-isomorphic"));
    }
    let deck_a = build_deck(&p.graph_a)?;
    let deck_b = build_deck(&p.graph_b)?;
    if !deck_a.same_multiset(&deck_b) || !deck_a.same_multiset(&p.shared_deck) {
        return Err(err("decks equal"));
    }
    if recover_coefficients(&deck_a)?.known_part != recover_coefficients(&deck_b)?.known_part {
        return Err(err("known parts equal"));
    }
    if p.poly_a == p.poly_b || !p.differs_only_in_perfect_matchings() {
        return Err(err("differ only in perfect matchings"));
    }
    if p.graph_a.edge_count() != p.graph_b.edge_count() {
        return Err(err("equal edge counts"));
    }
    Ok(())
}
