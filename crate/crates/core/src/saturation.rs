//! K_s-freeness and K_s-saturation.

use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Outcome of [`check_saturation`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub s: usize,
    pub n: usize,
    pub is_free: bool,
    /// Non-edges `uv`, in lexicographic order, whose addition creates no `K_s`.
    pub missing_edge_failures: Vec<(usize, usize)>,
    pub is_saturated: bool,
    /// Saturated only because there is no missing edge and `n < s`.
    pub vacuous: bool,
    /// `s = 2`, where only edgeless graphs qualify.
    pub degenerate: bool,
}

/// Whether `cand` contains a clique of order `size`.
fn has_clique_in(g: &Graph, cand: &[u64], size: usize) -> bool {
    if size == 0 {
        return true;
    }
    let avail = bits::count(cand);
    if avail < size {
        return false;
    }
    if size == 1 {
        return true;
    }
    let mut next = vec![0u64; cand.len()];
    for v in bits::ones(cand) {
        bits::and_into(&mut next, cand, g.row(v));
        bits::clear_through(&mut next, v);
        if size == 2 {
            if !bits::is_empty(&next) {
                return true;
            }
        } else if has_clique_in(g, &next, size - 1) {
            return true;
        }
    }
    false
}

/// Whether some `s` vertices of `g` induce `K_s`.
pub fn contains_clique(g: &Graph, s: usize) -> Result<bool> {
    if s == 0 {
        return Err(Error::param("clique order must be at least 1"));
    }
    Ok(has_clique_in(g, &bits::full(g.n()), s))
}

/// Whether adding the missing edge `uv` creates a `K_s`, i.e. whether the
/// common neighbourhood of `u` and `v` contains `K_{s-2}`.
pub fn creates_clique_on_addition(g: &Graph, u: usize, v: usize, s: usize) -> Result<bool> {
    if u >= g.n() || v >= g.n() {
        return Err(Error::param(format!("vertex out of range for n={}", g.n())));
    }
    if u == v {
        return Err(Error::param("u and v must differ"));
    }
    if g.has_edge(u, v) {
        return Err(Error::param(format!("{u}{v} is already an edge")));
    }
    if s < 2 {
        return Err(Error::param("s must be at least 2"));
    }
    let mut common = vec![0u64; g.words()];
    bits::and_into(&mut common, g.row(u), g.row(v));
    Ok(has_clique_in(g, &common, s - 2))
}

pub fn check_saturation(g: &Graph, s: usize) -> Result<SaturationReport> {
    if s < 2 {
        return Err(Error::param("s must be at least 2"));
    }
    let is_free = !contains_clique(g, s)?;
    let mut failures = Vec::new();
    for (u, v) in g.non_edges() {
        if !creates_clique_on_addition(g, u, v, s)? {
            failures.push((u, v));
        }
    }
    let is_saturated = is_free && failures.is_empty();
    Ok(SaturationReport {
        s,
        n: g.n(),
        is_free,
        vacuous: is_saturated && g.n() < s,
        degenerate: s == 2,
        missing_edge_failures: failures,
        is_saturated,
    })
}

pub fn is_saturated(g: &Graph, s: usize) -> Result<bool> {
    if s < 2 {
        return Err(Error::param("s must be at least 2"));
    }
    if contains_clique(g, s)? {
        return Ok(false);
    }
    for (u, v) in g.non_edges() {
        if !creates_clique_on_addition(g, u, v, s)? {
            return Ok(false);
        }
    }
    Ok(true)
}
