//! Split graphs and joins.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Parameters of the split graph `S(n, q)`: a clique on `q` vertices joined
/// to an independent set on `n - q` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitParams {
    pub n: usize,
    pub q: usize,
}

impl SplitParams {
    pub fn new(n: usize, q: usize) -> Result<Self> {
        if q > n {
            return Err(Error::param(format!("clique part q={q} larger than n={n}")));
        }
        if n > MAX_VERTICES {
            return Err(Error::param(format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
        }
        Ok(SplitParams { n, q })
    }

    /// The split graph whose clique number is `s - 1`, i.e. `S(n, s - 2)`.
    pub fn extremal(n: usize, s: usize) -> Result<Self> {
        if s < 2 {
            return Err(Error::param("s must be at least 2"));
        }
        SplitParams::new(n, s - 2)
    }

    /// `C(q, 2) + q (n - q)`.
    pub fn edge_count(&self) -> usize {
        self.q * self.q.saturating_sub(1) / 2 + self.q * (self.n - self.q)
    }
}

/// Builds `S(n, q)`. Vertices `0..q` form the clique part.
pub fn make_split(p: SplitParams) -> Result<Graph> {
    let p = SplitParams::new(p.n, p.q)?;
    let mut g = Graph::empty(p.n)?;
    for u in 0..p.q {
        for v in u + 1..p.n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Disjoint union of `g` and `h` plus every edge between them. The vertices
/// of `h` are shifted by `g.n()`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let (a, b) = (g.n(), h.n());
    if a + b > MAX_VERTICES {
        return Err(Error::param(format!(
            "join of {a} and {b} vertices exceeds the limit of {MAX_VERTICES}"
        )));
    }
    let mut out = Graph::empty(a + b)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(a + u, a + v);
    }
    for u in 0..a {
        for v in 0..b {
            out.add_edge(u, a + v);
        }
    }
    Ok(out)
}
