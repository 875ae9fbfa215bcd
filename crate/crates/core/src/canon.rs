//! Canonical labelling by partition refinement and exhaustive individualisation.
//!
//! The canonical form of `G` is the relabelling whose column-major adjacency
//! upper triangle is lexicographically smallest among all leaves of the
//! search tree. The tree is built from label-independent choices only (equitable
//! refinement, first smallest non-singleton cell), so the set of leaf graphs is
//! an isomorphism invariant and so is its minimum.
//!
//! A target cell whose members are pairwise twins is individualised on one
//! vertex only: swapping twins is an automorphism that fixes the current
//! partition, so every choice produces the same leaf graphs.

use std::cmp::Ordering;
use std::fmt;

use crate::bits;
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6;

/// Label-independent encoding of an isomorphism class: the graph6 bytes of
/// the canonical relabelling (vertex count, then the upper triangle).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCertificate(Vec<u8>);

impl CanonicalCertificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonical representative.
    pub fn to_graph(&self) -> Graph {
        graph6::from_graph6(&self.0).expect("certificates hold valid graph6")
    }

    /// Certificate of the graph encoded by `bytes`, whatever its labelling.
    pub fn from_graph6(bytes: &[u8]) -> Result<Self> {
        let g = graph6::from_graph6(bytes)?;
        Ok(canonical_certificate(&g))
    }
}

impl fmt::Display for CanonicalCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cert({})", self.as_str())
    }
}

type Cells = Vec<Vec<usize>>;

struct Search<'g> {
    g: &'g Graph,
    best_key: Option<Vec<u64>>,
    best_order: Vec<usize>,
}

/// Returns the canonical relabelling of `g` and the permutation used:
/// vertex `v` of `g` becomes vertex `perm[v]` of the canonical graph.
pub fn canonical_form(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (g.clone(), Vec::new());
    }
    let mut search = Search {
        g,
        best_key: None,
        best_order: Vec::new(),
    };
    search.descend(vec![(0..n).collect()]);
    let mut perm = vec![0; n];
    for (pos, &v) in search.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    (g.permuted(&perm), perm)
}

pub fn canonical_certificate(g: &Graph) -> CanonicalCertificate {
    let (c, _) = canonical_form(g);
    CanonicalCertificate(graph6::to_graph6(&c))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_certificate(g) == canonical_certificate(h)
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Cells) {
        refine(self.g, &mut cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(_, c)| c.len())
            .map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let cell = &cells[t];
        let choices: Vec<usize> = if is_twin_class(self.g, cell) {
            vec![cell[0]]
        } else {
            cell.clone()
        };
        for v in choices {
            let mut next = cells.clone();
            let rest: Vec<usize> = next[t].iter().copied().filter(|&x| x != v).collect();
            next[t] = vec![v];
            next.insert(t + 1, rest);
            self.descend(next);
        }
    }

    fn leaf(&mut self, cells: &Cells) {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let key = triangle_key(self.g, &order);
        let better = match &self.best_key {
            None => true,
            Some(best) => key.cmp(best) == Ordering::Less,
        };
        if better {
            self.best_key = Some(key);
            self.best_order = order;
        }
    }
}

/// Column-major upper triangle of the graph relabelled so that `order[i]`
/// becomes vertex `i`, packed MSB-first so `Vec` ordering is bit ordering.
fn triangle_key(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let nbits = n * (n - 1) / 2;
    let mut key = vec![0u64; nbits.div_ceil(64).max(1)];
    let mut k = 0;
    for j in 1..n {
        let row = g.row(order[j]);
        for &oi in &order[..j] {
            if bits::test(row, oi) {
                key[k >> 6] |= 1 << (63 - (k & 63));
            }
            k += 1;
        }
    }
    key
}

/// `N(x) - y == N(y) - x`.
fn twins(g: &Graph, x: usize, y: usize) -> bool {
    let (rx, ry) = (g.row(x), g.row(y));
    rx.iter().zip(ry).enumerate().all(|(w, (&a, &b))| {
        let mut mask = u64::MAX;
        if x >> 6 == w {
            mask &= !(1 << (x & 63));
        }
        if y >> 6 == w {
            mask &= !(1 << (y & 63));
        }
        a & mask == b & mask
    })
}

/// Twinhood with one fixed member implies pairwise twinhood in a simple graph.
fn is_twin_class(g: &Graph, cell: &[usize]) -> bool {
    cell[1..].iter().all(|&x| twins(g, cell[0], x))
}

/// Refines `cells` to the coarsest equitable partition finer than it.
/// Split fragments are ordered by neighbour count, which keeps the result
/// independent of vertex labels.
fn refine(g: &Graph, cells: &mut Cells) {
    let words = g.words();
    let mut splitter = vec![0u64; words];
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            splitter.fill(0);
            for &v in &cells[w] {
                bits::set(&mut splitter, v);
            }
            let mut x = 0;
            while x < cells.len() {
                if cells[x].len() == 1 {
                    x += 1;
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cells[x]
                    .iter()
                    .map(|&v| (bits::intersection_count(g.row(v), &splitter), v))
                    .collect();
                let first = keyed[0].0;
                if keyed.iter().all(|&(c, _)| c == first) {
                    x += 1;
                    continue;
                }
                keyed.sort_unstable();
                let mut parts: Cells = Vec::new();
                let mut prev = None;
                for (c, v) in keyed {
                    if prev != Some(c) {
                        parts.push(Vec::new());
                        prev = Some(c);
                    }
                    parts.last_mut().unwrap().push(v);
                }
                let added = parts.len();
                cells.splice(x..=x, parts);
                if w > x {
                    w += added - 1;
                }
                x += added;
                changed = true;
            }
            w += 1;
        }
        if !changed {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{make_split, SplitParams};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(rng);
        p
    }

    #[test]
    fn relabelled_cycle_has_same_certificate() {
        let c5 = Graph::cycle(5).unwrap();
        // 2-4-1-3-0
        let other = Graph::from_edges(5, &[(2, 4), (4, 1), (1, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_certificate(&c5), canonical_certificate(&other));
        assert!(are_isomorphic(&c5, &other));
    }

    #[test]
    fn path_and_triangle_differ() {
        let p3 = Graph::path(3).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert_ne!(canonical_certificate(&p3), canonical_certificate(&k3));
        assert!(!are_isomorphic(&p3, &k3));
    }

    #[test]
    fn certificate_decodes_to_isomorphic_graph() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(0..10);
            let g = random_graph(&mut rng, n, 0.4);
            let cert = canonical_certificate(&g);
            let (c, perm) = canonical_form(&g);
            assert_eq!(cert.to_graph(), c);
            assert_eq!(g.permuted(&perm), c);
        }
    }

    #[test]
    fn hundred_relabellings_of_random_nine_vertex_graph() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let g = random_graph(&mut rng, 9, 0.5);
        let cert = canonical_certificate(&g);
        for _ in 0..100 {
            let p = random_perm(&mut rng, 9);
            assert_eq!(canonical_certificate(&g.permuted(&p)), cert);
        }
    }

    #[test]
    fn regular_graphs_that_refinement_cannot_split() {
        // Two non-isomorphic 3-regular graphs on 6 vertices: K_{3,3} and the prism.
        let k33 = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(!are_isomorphic(&k33, &prism));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let p = random_perm(&mut rng, 6);
            assert!(are_isomorphic(&prism, &prism.permuted(&p)));
            assert!(are_isomorphic(&k33, &k33.permuted(&p)));
        }
    }

    #[test]
    fn large_symmetric_graphs_finish() {
        let g = make_split(SplitParams::new(512, 3).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = random_perm(&mut rng, 512);
        assert!(are_isomorphic(&g, &g.permuted(&p)));
        let e = Graph::empty(300).unwrap();
        assert_eq!(canonical_certificate(&e).to_graph(), e);
    }

    #[test]
    fn twin_detection() {
        let g = make_split(SplitParams::new(6, 2).unwrap()).unwrap();
        assert!(twins(&g, 0, 1));
        assert!(twins(&g, 3, 5));
        assert!(!twins(&g, 0, 3));
    }
}
