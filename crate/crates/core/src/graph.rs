//! Undirected simple graphs stored as bitset adjacency rows.

use std::fmt;

use crate::bits;
use crate::error::{Error, Result};

/// Hard cap on the number of vertices.
pub const MAX_VERTICES: usize = 512;

/// An undirected simple graph on vertices `0..n`.
///
/// Row `v` is an `n`-bit set holding the neighbours of `v`. Every mutating
/// method keeps the rows symmetric and loop-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::param(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        let words = bits::words_for(n);
        Ok(Graph {
            n,
            words,
            rows: vec![0; n * words],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = bits::full(n);
        for v in 0..n {
            let row = g.row_mut(v);
            row.copy_from_slice(&all);
            bits::clear(row, v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::param(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::param(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Path on `n` vertices `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::param("a cycle needs at least 3 vertices"));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(self.row(u), v)
    }

    /// Adds `uv`. Panics on a loop or an out-of-range vertex.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loop at vertex {u}");
        assert!(u < self.n && v < self.n, "vertex out of range");
        bits::set(self.row_mut(u), v);
        bits::set(self.row_mut(v), u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        bits::clear(self.row_mut(u), v);
        bits::clear(self.row_mut(v), u);
    }

    /// Removes every edge at `v`, leaving it isolated.
    pub fn isolate(&mut self, v: usize) {
        let nbrs: Vec<usize> = self.neighbors(v).collect();
        for u in nbrs {
            bits::clear(self.row_mut(u), v);
        }
        self.row_mut(v).fill(0);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        bits::count(&self.rows) / 2
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn neighbors(&self, v: usize) -> bits::Ones<'_> {
        bits::ones(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Non-edges `(u, v)` with `u < v` in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        let all = bits::full(self.n);
        for v in 0..self.n {
            let row = g.row_mut(v);
            for (w, a) in row.iter_mut().zip(&all) {
                *w = !*w & a;
            }
            bits::clear(row, v);
        }
        g
    }

    /// Relabels the graph: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Graph::empty(self.n).expect("same size as self");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Checks the symmetry and loop invariants. Used by tests and debug
    /// assertions.
    pub fn is_well_formed(&self) -> bool {
        let tail = bits::full(self.n);
        (0..self.n).all(|u| {
            let row = self.row(u);
            !bits::test(row, u)
                && row.iter().zip(&tail).all(|(w, t)| w & !t == 0)
                && self.neighbors(u).all(|v| self.has_edge(v, u))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
