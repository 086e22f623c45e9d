//! Canonical forms for small multigraphs.
//!
//! The canonical form of a graph is the minimum, over all relabelings, of the
//! key `(degree of label 0, ..., degree of label n-1, code)` where `code`
//! lists the edge multiplicities of the relabeled graph column by column:
//! `m(0,1), m(0,2), m(1,2), m(0,3), ...`. Because the degree vector comes
//! first, every minimizing relabeling lists vertices by non-decreasing degree,
//! so the search only needs to try orderings inside each degree class. A
//! branch-and-bound on the code prefix cuts the rest.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Largest vertex count `canonicalize` accepts.
pub const DEFAULT_CANON_BOUND: usize = 10;

/// An isomorphism-class representative of a multigraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    degrees: Vec<u32>,
    code: Vec<u32>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge multiset of the canonical labeling, lexicographically sorted,
    /// parallel edges repeated.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        let mut k = 0;
        for w in 1..self.n {
            for u in 0..w {
                for _ in 0..self.code[k] {
                    out.push(Edge::new(u, w));
                }
                k += 1;
            }
        }
        out.sort();
        out
    }

    /// The graph in canonical labeling.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        let mut k = 0;
        for w in 1..self.n {
            for u in 0..w {
                g.add_edge_with_multiplicity(u, w, self.code[k])
                    .expect("canonical code is well formed");
                k += 1;
            }
        }
        g
    }
}

/// Canonical form with the default size bound.
pub fn canonicalize(g: &Graph) -> Result<CanonicalForm> {
    canonicalize_with_bound(g, DEFAULT_CANON_BOUND)
}

pub fn canonicalize_with_bound(g: &Graph, bound: usize) -> Result<CanonicalForm> {
    let n = g.n();
    if n > bound {
        return Err(Error::Capacity {
            what: "canonicalization vertex count",
            limit: bound,
            got: n,
        });
    }
    let adj = Matrix::of(g);
    let deg: Vec<u32> = g.degrees().into_iter().map(|d| d as u32).collect();
    let mut sorted_deg = deg.clone();
    sorted_deg.sort_unstable();

    let mut search = Search {
        adj: &adj,
        deg: &deg,
        sorted_deg: &sorted_deg,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        code: vec![0; n * n.saturating_sub(1) / 2],
        best: None,
    };
    search.run(0, Ordering::Equal);
    let code = search.best.expect("at least one ordering exists");
    Ok(CanonicalForm {
        n,
        degrees: sorted_deg,
        code,
    })
}

/// Reference implementation: minimum of the same key over all `n!`
/// orderings, without pruning. Only meant for checking `canonicalize`.
pub fn canonicalize_exhaustive(g: &Graph) -> CanonicalForm {
    let n = g.n();
    let adj = Matrix::of(g);
    let deg: Vec<u32> = g.degrees().into_iter().map(|d| d as u32).collect();
    let mut order: Vec<usize> = (0..n).collect();
    let mut best: Option<(Vec<u32>, Vec<u32>)> = None;
    loop {
        let degrees: Vec<u32> = order.iter().map(|&v| deg[v]).collect();
        let mut code = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for w in 1..n {
            for u in 0..w {
                code.push(adj.get(order[u], order[w]));
            }
        }
        let key = (degrees, code);
        if best.as_ref().map_or(true, |b| key < *b) {
            best = Some(key);
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    let (degrees, code) = best.unwrap_or_default();
    CanonicalForm { n, degrees, code }
}

/// Isomorphism class of one connected component. Components above the
/// canonicalization bound are only recognized when they are paths or cycles.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum ComponentKey {
    Small(CanonicalForm),
    Path(usize),
    Cycle(usize),
}

fn component_key(c: &Graph) -> Result<ComponentKey> {
    if let Ok(cf) = canonicalize(c) {
        return Ok(ComponentKey::Small(cf));
    }
    let deg = c.degrees();
    let n = c.n();
    if c.is_simple() && deg.iter().all(|&d| d <= 2) {
        if c.edge_count() + 1 == n {
            return Ok(ComponentKey::Path(n));
        }
        if c.edge_count() == n {
            return Ok(ComponentKey::Cycle(n));
        }
    }
    Err(Error::Capacity {
        what: "isomorphism test component size (non path/cycle)",
        limit: DEFAULT_CANON_BOUND,
        got: n,
    })
}

/// Multigraph isomorphism. Graphs within the canonicalization bound are
/// compared by canonical form; larger ones component by component, where a
/// large component must be a path or a cycle.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    if a.n() <= DEFAULT_CANON_BOUND {
        return Ok(canonicalize(a)? == canonicalize(b)?);
    }
    let keys = |g: &Graph| -> Result<Vec<ComponentKey>> {
        let mut ks = g.components().iter().map(component_key).collect::<Result<Vec<_>>>()?;
        ks.sort();
        Ok(ks)
    };
    Ok(keys(a)? == keys(b)?)
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

struct Matrix {
    n: usize,
    cells: Vec<u32>,
}

impl Matrix {
    fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut cells = vec![0; n * n];
        for (e, m) in g.edges() {
            let (u, w) = e.endpoints();
            cells[u * n + w] = m;
            cells[w * n + u] = m;
        }
        Matrix { n, cells }
    }

    #[inline]
    fn get(&self, u: usize, w: usize) -> u32 {
        self.cells[u * self.n + w]
    }
}

struct Search<'a> {
    adj: &'a Matrix,
    deg: &'a [u32],
    sorted_deg: &'a [u32],
    order: Vec<usize>,
    used: Vec<bool>,
    code: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl Search<'_> {
    /// `state` compares the code written so far against the same prefix of
    /// `best`.
    fn run(&mut self, pos: usize, state: Ordering) {
        let n = self.deg.len();
        if pos == n {
            if self.best.is_none() || state == Ordering::Less {
                self.best = Some(self.code.clone());
            }
            return;
        }
        let base = pos * pos.saturating_sub(1) / 2;
        for c in 0..n {
            if self.used[c] || self.deg[c] != self.sorted_deg[pos] {
                continue;
            }
            for (i, &u) in self.order.iter().enumerate() {
                self.code[base + i] = self.adj.get(u, c);
            }
            let next = match (&self.best, state) {
                (Some(best), Ordering::Equal) => {
                    self.code[base..base + pos].cmp(&best[base..base + pos])
                }
                _ => state,
            };
            if next == Ordering::Greater {
                continue;
            }
            self.used[c] = true;
            self.order.push(c);
            self.run(pos + 1, next);
            self.order.pop();
            self.used[c] = false;
            // a new best may have been installed below; the rest of this
            // level must now be compared against it
            if next == Ordering::Less {
                return self.run_rest(pos, c + 1);
            }
        }
    }

    /// Continues the candidate loop at `pos` from candidate `from` after the
    /// best code changed underneath a strictly-better branch.
    fn run_rest(&mut self, pos: usize, from: usize) {
        let n = self.deg.len();
        let base = pos * pos.saturating_sub(1) / 2;
        for c in from..n {
            if self.used[c] || self.deg[c] != self.sorted_deg[pos] {
                continue;
            }
            for (i, &u) in self.order.iter().enumerate() {
                self.code[base + i] = self.adj.get(u, c);
            }
            let best = self.best.as_ref().expect("best set by earlier branch");
            let next = self.code[base..base + pos].cmp(&best[base..base + pos]);
            if next == Ordering::Greater {
                continue;
            }
            self.used[c] = true;
            self.order.push(c);
            self.run(pos + 1, next);
            self.order.pop();
            self.used[c] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_relabelings_agree() {
        let c6 = Graph::cycle(6).unwrap();
        let want = canonicalize(&c6).unwrap();
        let g = c6.relabel(&[3, 5, 0, 1, 4, 2]).unwrap();
        assert_eq!(canonicalize(&g).unwrap(), want);
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = canonicalize(&Graph::path(4)).unwrap();
        let star = canonicalize(&Graph::star(3)).unwrap();
        assert_ne!(p4, star);
    }

    #[test]
    fn bound_is_enforced() {
        let err = canonicalize(&Graph::empty(11)).unwrap_err();
        assert!(matches!(err, Error::Capacity { limit: 10, got: 11, .. }));
        assert!(canonicalize_with_bound(&Graph::empty(11), 12).is_ok());
    }

    #[test]
    fn idempotent() {
        let g = Graph::from_edges(6, &[(0, 4), (4, 2), (2, 5), (1, 3), (3, 3 + 1)]).unwrap();
        let cf = canonicalize(&g).unwrap();
        assert_eq!(canonicalize(&cf.to_graph()).unwrap(), cf);
    }

    #[test]
    fn multigraph_multiplicities_matter() {
        let c2 = canonicalize(&Graph::cycle(2).unwrap()).unwrap();
        let k2 = canonicalize(&Graph::path(2)).unwrap();
        assert_ne!(c2, k2);
        assert_eq!(c2.edges(), vec![Edge::new(0, 1), Edge::new(0, 1)]);
    }

    #[test]
    fn pruned_matches_exhaustive_on_all_small_labeled_graphs() {
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> =
                (1..n).flat_map(|w| (0..w).map(move |u| (u, w))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(canonicalize(&g).unwrap(), canonicalize_exhaustive(&g), "{g}");
            }
        }
    }

    #[test]
    fn large_isomorphism_by_components() {
        let c10 = Graph::cycle(10).unwrap();
        let a = c10.disjoint_union(&Graph::path(11));
        let b = Graph::path(11).disjoint_union(&c10).relabel(&(0..21).rev().collect::<Vec<_>>()).unwrap();
        assert!(are_isomorphic(&a, &b).unwrap());
        let c20 = Graph::cycle(20).unwrap();
        assert!(!are_isomorphic(&c20, &c10.disjoint_union(&c10)).unwrap());
        assert!(are_isomorphic(&Graph::complete(11), &Graph::complete(11)).is_err());
    }

    #[test]
    fn empty_graph() {
        let cf = canonicalize(&Graph::empty(0)).unwrap();
        assert_eq!(cf.n(), 0);
        assert!(cf.edges().is_empty());
    }
}
