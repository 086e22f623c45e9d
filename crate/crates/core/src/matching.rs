//! Bivariate matching polynomial `M(G, x, y) = sum over matchings A of
//! x^(uncovered vertices) y^|A|`.
//!
//! Two independent routes are provided: [`matching_polynomial_oracle`]
//! enumerates matchings directly, [`MatchingEngine`] uses the edge recurrence
//! `M(G) = M(G - e) + y M(G - u - w)` with component factorization and a memo
//! table keyed by canonical form. Parallel edges are distinct edges, so each
//! copy contributes its own matchings.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;

use crate::canon::{canonicalize_with_bound, CanonicalForm, DEFAULT_CANON_BOUND};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::poly::Poly;

pub const ORACLE_MAX_N: usize = 16;
pub const DEFAULT_MEMO_CAP: usize = 1 << 20;
pub const MEMO_CAP_ENV: &str = "MATCHDECK_MEMO_CAP";

/// Enumerates every matching of `g` (each parallel copy of an edge counted
/// separately).
pub fn matching_polynomial_oracle(g: &Graph) -> Result<Poly> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(Error::Capacity {
            what: "oracle vertex count",
            limit: ORACLE_MAX_N,
            got: n,
        });
    }
    let edges = g.edge_list();
    let mut by_size = vec![0u128; n / 2 + 1];
    enumerate_matchings(&edges, 0, 0, 0, &mut by_size);
    Ok(Poly::from_terms(
        by_size
            .into_iter()
            .enumerate()
            .map(|(j, c)| ((n - 2 * j) as u32, j as u32, BigInt::from(c))),
    ))
}

fn enumerate_matchings(edges: &[Edge], next: usize, covered: u32, size: usize, by_size: &mut [u128]) {
    by_size[size] += 1;
    for k in next..edges.len() {
        let mask = 1u32 << edges[k].lo() | 1u32 << edges[k].hi();
        if covered & mask == 0 {
            enumerate_matchings(edges, k + 1, covered | mask, size + 1, by_size);
        }
    }
}

/// Which edge the recurrence expands. The polynomial does not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgePolicy {
    /// Lowest-index vertex of maximum degree, joined to its lowest-index
    /// neighbour.
    #[default]
    MaxDegree,
    /// Lexicographically first edge.
    FirstEdge,
    /// Lexicographically last edge.
    LastEdge,
}

impl EdgePolicy {
    pub fn select(self, g: &Graph) -> Option<Edge> {
        match self {
            EdgePolicy::MaxDegree => {
                let deg = g.degrees();
                let top = *deg.iter().max()?;
                if top == 0 {
                    return None;
                }
                let v = deg.iter().position(|&d| d == top)?;
                let w = *g.neighbors(v).first()?;
                Some(Edge::new(v, w))
            }
            EdgePolicy::FirstEdge => g.edges().next().map(|(e, _)| e),
            EdgePolicy::LastEdge => g.edges().last().map(|(e, _)| e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum MemoKey {
    Canonical(CanonicalForm),
    // components too large to canonicalize are cached by their labeling
    Labeled(Graph),
}

/// Recurrence-based evaluator with an isomorphism-keyed memo table.
///
/// The table stops growing at `cap` entries; lookups keep working and
/// further results are simply recomputed.
#[derive(Debug)]
pub struct MatchingEngine {
    memo: HashMap<MemoKey, Poly>,
    cap: usize,
    policy: EdgePolicy,
    canon_bound: usize,
}

impl Default for MatchingEngine {
    fn default() -> Self {
        MatchingEngine::new()
    }
}

impl MatchingEngine {
    pub fn new() -> Self {
        MatchingEngine::with_cap(DEFAULT_MEMO_CAP)
    }

    pub fn with_cap(cap: usize) -> Self {
        MatchingEngine {
            memo: HashMap::new(),
            cap,
            policy: EdgePolicy::default(),
            canon_bound: DEFAULT_CANON_BOUND,
        }
    }

    /// Cap from `MATCHDECK_MEMO_CAP`, or the default if unset.
    pub fn from_env() -> Result<Self> {
        Ok(MatchingEngine::with_cap(memo_cap_from_env()?))
    }

    pub fn with_policy(mut self, policy: EdgePolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn polynomial(&mut self, g: &Graph) -> Poly {
        let comps = g.components();
        if comps.len() == 1 {
            return self.connected(&comps[0]);
        }
        comps.iter().map(|c| self.connected(c)).product()
    }

    fn connected(&mut self, g: &Graph) -> Poly {
        let Some(e) = self.policy.select(g) else {
            return Poly::x_pow(g.n() as u32);
        };
        let key = match canonicalize_with_bound(g, self.canon_bound) {
            Ok(cf) => MemoKey::Canonical(cf),
            Err(_) => MemoKey::Labeled(g.clone()),
        };
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let without = g.delete_edge(e).expect("selected edge is present");
        let rest = g.delete_both_endpoints(e).expect("selected edge is present");
        let p = self.polynomial(&without) + self.polynomial(&rest).mul_monomial(0, 1);
        if self.memo.len() < self.cap {
            self.memo.insert(key, p.clone());
        }
        p
    }
}

pub fn memo_cap_from_env() -> Result<usize> {
    match std::env::var(MEMO_CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::domain(format!("{MEMO_CAP_ENV} must be a non-negative integer, got `{v}`"))
        }),
        Err(_) => Ok(DEFAULT_MEMO_CAP),
    }
}

thread_local! {
    // an unparsable MATCHDECK_MEMO_CAP falls back to the default here; the
    // CLI rejects it up front
    static ENGINE: RefCell<MatchingEngine> =
        RefCell::new(MatchingEngine::with_cap(memo_cap_from_env().unwrap_or(DEFAULT_MEMO_CAP)));
}

/// `M(G, x, y)` through this thread's shared engine.
pub fn matching_polynomial(g: &Graph) -> Poly {
    ENGINE.with(|e| e.borrow_mut().polynomial(g))
}

/// Replaces this thread's shared engine with an empty one of the given cap.
pub fn set_thread_memo_cap(cap: usize) {
    ENGINE.with(|e| *e.borrow_mut() = MatchingEngine::with_cap(cap));
}

/// Perfect matchings: `m_{0, n/2}` for even `n`, otherwise zero.
pub fn perfect_count(poly: &Poly, n: usize) -> BigInt {
    if n % 2 == 0 {
        poly.coefficient(0, (n / 2) as u32)
    } else {
        BigInt::default()
    }
}

/// Near-perfect matchings: `m_{1, (n-1)/2}` for odd `n`, otherwise zero.
pub fn near_perfect_count(poly: &Poly, n: usize) -> BigInt {
    if n % 2 == 1 {
        poly.coefficient(1, ((n - 1) / 2) as u32)
    } else {
        BigInt::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingStats {
    pub polynomial: Poly,
    pub num_perfect: BigInt,
    pub num_near_perfect: BigInt,
    pub total_matchings: BigInt,
}

impl MatchingStats {
    pub fn from_polynomial(n: usize, polynomial: Poly) -> Self {
        let one = BigInt::from(1);
        MatchingStats {
            num_perfect: perfect_count(&polynomial, n),
            num_near_perfect: near_perfect_count(&polynomial, n),
            total_matchings: polynomial.evaluate(&one, &one),
            polynomial,
        }
    }
}

pub fn stats(g: &Graph) -> MatchingStats {
    MatchingStats::from_polynomial(g.n(), matching_polynomial(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn oracle_basics() {
        assert_eq!(matching_polynomial_oracle(&Graph::empty(4)).unwrap(), Poly::x_pow(4));
        assert_eq!(matching_polynomial_oracle(&Graph::path(2)).unwrap(), p("x^2 + y"));
        assert_eq!(
            matching_polynomial_oracle(&Graph::cycle(2).unwrap()).unwrap(),
            p("x^2 + 2*y")
        );
        assert!(matching_polynomial_oracle(&Graph::empty(17)).is_err());
    }

    #[test]
    fn recurrence_small_cases() {
        assert_eq!(matching_polynomial(&Graph::path(3)), p("x^3 + 2*x*y"));
        assert_eq!(matching_polynomial(&Graph::path(5)), p("x^5 + 4*x^3*y + 3*x*y^2"));
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(
            matching_polynomial(&c3.disjoint_union(&Graph::path(2))),
            p("x^5 + 4*x^3*y + 3*x*y^2")
        );
        assert_eq!(matching_polynomial(&Graph::empty(0)), Poly::one());
    }

    #[test]
    fn path_recurrence_by_hand() {
        // P3 on edge {0,1}: M(K1 + K2) + y M(K1)
        let left = matching_polynomial(&Graph::empty(1).disjoint_union(&Graph::path(2)));
        let right = matching_polynomial(&Graph::empty(1)).mul_monomial(0, 1);
        assert_eq!(left + right, p("x^3 + 2*x*y"));
    }

    #[test]
    fn stats_values() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(stats(&c6).num_perfect, 2.into());
        let c3 = Graph::cycle(3).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(stats(&c3.disjoint_union(&c3)).num_perfect, 0.into());
        assert_eq!(stats(&c4.disjoint_union(&c4)).num_perfect, 4.into());
        let p3 = stats(&Graph::path(3));
        assert_eq!(p3.num_near_perfect, 2.into());
        assert_eq!(p3.num_perfect, 0.into());
        assert_eq!(stats(&Graph::path(4)).total_matchings, 5.into());
    }

    #[test]
    fn policies() {
        assert_eq!(EdgePolicy::MaxDegree.select(&Graph::path(3)), Some(Edge::new(0, 1)));
        let single = Graph::from_edges(4, &[(2, 3)]).unwrap();
        for pol in [EdgePolicy::MaxDegree, EdgePolicy::FirstEdge, EdgePolicy::LastEdge] {
            assert_eq!(pol.select(&single), Some(Edge::new(2, 3)));
            assert_eq!(pol.select(&Graph::empty(3)), None);
        }
        let star = Graph::star(3);
        assert_eq!(EdgePolicy::MaxDegree.select(&star), Some(Edge::new(0, 1)));
        let g = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 3), (3, 0)]).unwrap();
        assert_eq!(EdgePolicy::MaxDegree.select(&g), Some(Edge::new(3, 0)));
    }

    #[test]
    fn memo_cap_zero_still_correct() {
        let mut engine = MatchingEngine::with_cap(0);
        let g = Graph::complete(7);
        assert_eq!(engine.polynomial(&g), matching_polynomial_oracle(&g).unwrap());
        assert_eq!(engine.memo_len(), 0);
    }

    #[test]
    fn large_components_fall_back_to_labeled_keys() {
        let mut engine = MatchingEngine::new();
        let c14 = Graph::cycle(14).unwrap();
        assert_eq!(engine.polynomial(&c14), matching_polynomial_oracle(&c14).unwrap());
    }
}
