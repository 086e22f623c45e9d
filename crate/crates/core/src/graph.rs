//! Loop-free undirected multigraphs on the vertex set `0..n`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(u: usize, w: usize) -> Self {
        if u <= w {
            Edge(u, w)
        } else {
            Edge(w, u)
        }
    }

    pub fn lo(&self) -> usize {
        self.0
    }

    pub fn hi(&self) -> usize {
        self.1
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn is_incident(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }
}

impl From<(usize, usize)> for Edge {
    fn from((u, w): (usize, usize)) -> Self {
        Edge::new(u, w)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.0, self.1)
    }
}

/// A loop-free multigraph. Parallel edges are kept as a multiplicity per
/// vertex pair; stored multiplicities are always at least one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    edges: BTreeMap<Edge, u32>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeMap::new(),
        }
    }

    /// Builds a graph from an edge list; repeated pairs become parallel edges.
    pub fn from_edges<E: Into<Edge> + Copy>(n: usize, edges: &[E]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &e in edges {
            let e: Edge = e.into();
            g.add_edge(e.0, e.1)?;
        }
        Ok(g)
    }

    /// Adds one copy of the edge `{u, w}`.
    pub fn add_edge(&mut self, u: usize, w: usize) -> Result<()> {
        self.add_edge_with_multiplicity(u, w, 1)
    }

    pub fn add_edge_with_multiplicity(&mut self, u: usize, w: usize, mult: u32) -> Result<()> {
        if u >= self.n || w >= self.n {
            return Err(Error::domain(format!(
                "edge {{{u}, {w}}} has an endpoint outside 0..{}",
                self.n
            )));
        }
        if u == w {
            return Err(Error::domain(format!("loop at vertex {u} is not allowed")));
        }
        if mult > 0 {
            *self.edges.entry(Edge::new(u, w)).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.values().map(|&m| m as usize).sum()
    }

    /// Distinct vertex pairs with their multiplicities, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, u32)> + '_ {
        self.edges.iter().map(|(&e, &m)| (e, m))
    }

    /// Every edge copy, parallel edges repeated.
    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges
            .iter()
            .flat_map(|(&e, &m)| std::iter::repeat(e).take(m as usize))
            .collect()
    }

    pub fn multiplicity(&self, u: usize, w: usize) -> u32 {
        self.edges.get(&Edge::new(u, w)).copied().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        self.multiplicity(u, w) > 0
    }

    pub fn is_simple(&self) -> bool {
        self.edges.values().all(|&m| m == 1)
    }

    /// Degree counted with multiplicity.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|(e, _)| e.is_incident(v))
            .map(|(_, &m)| m as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for (e, &m) in &self.edges {
            deg[e.0] += m as usize;
            deg[e.1] += m as usize;
        }
        deg
    }

    /// Distinct neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .keys()
            .filter(|e| e.is_incident(v))
            .map(|e| if e.0 == v { e.1 } else { e.0 })
            .collect();
        out.sort_unstable();
        out
    }

    /// True if some vertex has degree exactly one.
    pub fn has_pendant_vertex(&self) -> bool {
        self.degrees().into_iter().any(|d| d == 1)
    }

    pub fn is_forest(&self) -> bool {
        if !self.is_simple() {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        self.edges.keys().all(|e| uf.union(e.0, e.1))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::domain(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.n
            )))
        } else {
            Ok(())
        }
    }

    fn check_edge(&self, e: Edge) -> Result<()> {
        if self.has_edge(e.0, e.1) {
            Ok(())
        } else {
            Err(Error::domain(format!("edge {e} is not present")))
        }
    }

    /// Removes the vertices in `gone` with their incident edges; the
    /// survivors are relabeled to `0..` keeping their relative order.
    fn delete_vertices(&self, gone: &[usize]) -> Graph {
        let mut map = vec![usize::MAX; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !gone.contains(&v) {
                *slot = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|(e, _)| map[e.0] != usize::MAX && map[e.1] != usize::MAX)
            .map(|(e, &m)| (Edge::new(map[e.0], map[e.1]), m))
            .collect();
        Graph { n: next, edges }
    }

    /// `G - v`. Remaining vertices are relabeled to `0..n-1` in order.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.delete_vertices(&[v]))
    }

    /// `G - e`: lowers the multiplicity of `e` by one.
    pub fn delete_edge(&self, e: impl Into<Edge>) -> Result<Graph> {
        let e = e.into();
        self.check_edge(e)?;
        let mut out = self.clone();
        match out.edges.get_mut(&e) {
            Some(m) if *m > 1 => *m -= 1,
            _ => {
                out.edges.remove(&e);
            }
        }
        Ok(out)
    }

    /// `G - u - w` for an edge `e = {u, w}` of the graph.
    pub fn delete_both_endpoints(&self, e: impl Into<Edge>) -> Result<Graph> {
        let e = e.into();
        self.check_edge(e)?;
        Ok(self.delete_vertices(&[e.0, e.1]))
    }

    /// Complement of a simple graph.
    pub fn complement(&self) -> Result<Graph> {
        if !self.is_simple() {
            return Err(Error::domain(
                "complement is undefined for graphs with parallel edges",
            ));
        }
        let mut edges = BTreeMap::new();
        for w in 1..self.n {
            for u in 0..w {
                if !self.has_edge(u, w) {
                    edges.insert(Edge(u, w), 1);
                }
            }
        }
        Ok(Graph { n: self.n, edges })
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|(e, &m)| (Edge(e.0 + shift, e.1 + shift), m)),
        );
        Graph {
            n: self.n + other.n,
            edges,
        }
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::domain("relabeling is not a permutation of the vertex set"));
        }
        let edges = self
            .edges
            .iter()
            .map(|(e, &m)| (Edge::new(perm[e.0], perm[e.1]), m))
            .collect();
        Ok(Graph { n: self.n, edges })
    }

    /// Connected components, each relabeled to `0..` preserving vertex order.
    /// Components are returned in order of their smallest original vertex.
    pub fn components(&self) -> Vec<Graph> {
        let mut uf = UnionFind::new(self.n);
        for e in self.edges.keys() {
            uf.union(e.0, e.1);
        }
        let mut comp_of_root: BTreeMap<usize, usize> = BTreeMap::new();
        let mut local = vec![0; self.n];
        let mut sizes: Vec<usize> = Vec::new();
        let mut comp = vec![0; self.n];
        for v in 0..self.n {
            let r = uf.find(v);
            let c = *comp_of_root.entry(r).or_insert_with(|| {
                sizes.push(0);
                sizes.len() - 1
            });
            comp[v] = c;
            local[v] = sizes[c];
            sizes[c] += 1;
        }
        let mut out: Vec<Graph> = sizes.iter().map(|&s| Graph::empty(s)).collect();
        for (e, &m) in &self.edges {
            let c = comp[e.0];
            out[c].edges.insert(Edge(local[e.0], local[e.1]), m);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `P_n`: the path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.edges.insert(Edge(v - 1, v), 1);
        }
        g
    }

    /// `C_n` for `n >= 2`. `C_2` is two vertices joined by two parallel edges.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::domain(format!("cycle needs at least 2 vertices, got {n}")));
        }
        let mut g = Graph::path(n);
        *g.edges.entry(Edge(0, n - 1)).or_insert(0) += 1;
        Ok(g)
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for w in 1..n {
            for u in 0..w {
                g.edges.insert(Edge(u, w), 1);
            }
        }
        g
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.edges.insert(Edge(0, v), 1);
        }
        g
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (i, e) in self.edge_list().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.0, e.1)?;
        }
        write!(f, "]")
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
