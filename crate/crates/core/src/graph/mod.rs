//! Dense simple graphs on at most 64 vertices.
//!
//! Every vertex owns one `u64` row; bit `v` of row `u` is set iff `uv` is an
//! edge. Patterns, hosts and colour classes all share this type.

mod canon;
mod chromatic;
mod embed;
mod enumerate;
mod graph6;

pub use canon::{canonical_form, canonical_labelling, CanonicalLabelling};
pub(crate) use canon::canonical_labelling_relations;
pub use chromatic::{chromatic_number, chromatic_number_with_budget};
pub use embed::{find_embedding, find_embedding_within, verify_embedding, Embedding};
pub(crate) use embed::{EdgeAnchoredMatcher, LexMatcher};
pub use enumerate::{enumerate_graphs, GraphFilter};
pub use graph6::{parse_graph6, write_graph6};

use std::fmt;

use crate::error::GraphError;

/// Hard cap on the vertex count of the dense engine.
pub const MAX_VERTICES: usize = 64;

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn vertex_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// A simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// Panics if `n > 64`; use [`Graph::try_empty`] for a fallible variant.
    pub fn empty(n: usize) -> Self {
        Self::try_empty(n).expect("vertex count above 64")
    }

    pub fn try_empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Self {
            n,
            adj: vec![0; n],
        })
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        let full = vertex_mask(n);
        for v in 0..n {
            g.adj[v] = full & !(1u64 << v);
        }
        g
    }

    /// Path on `v` vertices (`v - 1` edges).
    pub fn path(v: usize) -> Self {
        let mut g = Self::empty(v);
        for i in 1..v {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Cycle on `v ≥ 3` vertices.
    pub fn cycle(v: usize) -> Self {
        assert!(v >= 3, "a cycle needs at least 3 vertices");
        let mut g = Self::path(v);
        g.add_edge(v - 1, 0);
        g
    }

    /// Star `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Self {
        let mut g = Self::empty(k + 1);
        for leaf in 1..=k {
            g.add_edge(0, leaf);
        }
        g
    }

    /// Complete bipartite graph `K_{a,b}`: class A is `0..a`, class B is `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Complete `k`-partite graph with classes of size `t`; class `i` is `i*t..(i+1)*t`.
    pub fn complete_multipartite(k: usize, t: usize) -> Self {
        let mut g = Self::empty(k * t);
        for u in 0..k * t {
            for v in u + 1..k * t {
                if u / t != v / t {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::try_empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let full = vertex_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(GraphError::VertexOutOfRange { vertex: 63 - row.leading_zeros() as usize, n });
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::SelfLoop(u));
            }
            for v in Bits(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(Self { n, adj: rows })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "invalid edge ({u},{v})");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in colexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 0..self.n {
            for u in Bits(self.adj[v] & vertex_mask(v)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Returns the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn complement(&self) -> Self {
        let full = vertex_mask(self.n);
        let adj = (0..self.n).map(|v| full & !self.adj[v] & !(1u64 << v)).collect();
        Self { n: self.n, adj }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let mut g = Self::try_empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Appends `k` isolated vertices.
    pub fn with_isolated(&self, k: usize) -> Result<Self, GraphError> {
        self.disjoint_union(&Graph::try_empty(k)?)
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Connected components as vertex masks, ordered by their least vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// True iff the graph has at most one component (so `n = 0` counts as connected).
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|&r| r == 0)
    }

    /// Size of a largest clique, by simple branch and bound.
    pub fn clique_number(&self) -> usize {
        fn grow(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
            if cand == 0 {
                *best = (*best).max(size);
                return;
            }
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let mut rest = cand;
            while rest != 0 {
                if size + rest.count_ones() as usize <= *best {
                    return;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grow(adj, rest & adj[v], size + 1, best);
            }
            *best = (*best).max(size);
        }
        let mut best = 0;
        grow(&self.adj, vertex_mask(self.n), 0, &mut best);
        best
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}
