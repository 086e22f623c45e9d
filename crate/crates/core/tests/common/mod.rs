#![allow(dead_code)]

use matchdeck::Graph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_simple(rng: &mut StdRng, n: usize, density: f64) -> Graph {
    let mut g = Graph::empty(n);
    for w in 1..n {
        for u in 0..w {
            if rng.gen_bool(density) {
                g.add_edge(u, w).unwrap();
            }
        }
    }
    g
}

/// Random multigraph, each pair absent or present with multiplicity 1..=max_mult.
pub fn random_multi(rng: &mut StdRng, n: usize, max_mult: u32) -> Graph {
    let mut g = Graph::empty(n);
    for w in 1..n {
        for u in 0..w {
            if rng.gen_bool(0.4) {
                g.add_edge_with_multiplicity(u, w, rng.gen_range(1..=max_mult)).unwrap();
            }
        }
    }
    g
}

/// Random labeled forest: random attachment tree, then each edge kept with
/// probability `keep`, then a random relabeling.
pub fn random_forest(rng: &mut StdRng, n: usize, keep: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(keep) {
            edges.push((rng.gen_range(0..v), v));
        }
    }
    let g = Graph::from_edges(n, &edges).unwrap();
    g.relabel(&random_perm(rng, n)).unwrap()
}

pub fn random_perm(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Brute-force isomorphism: try every bijection.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    let mut perm: Vec<usize> = (0..n).collect();
    fn go(a: &Graph, b: &Graph, perm: &mut Vec<usize>, k: usize) -> bool {
        if k == perm.len() {
            return a.relabel(perm).unwrap() == *b;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            if go(a, b, perm, k + 1) {
                return true;
            }
            perm.swap(k, i);
        }
        false
    }
    go(a, b, &mut perm, 0)
}
