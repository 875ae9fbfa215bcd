//! Exact copy counts of matchings, cliques and independent sets.
//!
//! Copies are unlabelled: a `k`-matching is a set of `k` pairwise disjoint
//! edges, a clique or independent set is a vertex subset.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits;
use crate::count::{add, mul, Count};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MotifKind {
    Matching,
    Clique,
    Indepset,
}

/// Which pattern to count: `matching(k)`, `clique(r)` or `indepset(l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MotifSpec {
    pub kind: MotifKind,
    pub size: usize,
}

impl MotifSpec {
    pub fn new(kind: MotifKind, size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::param("motif size must be at least 1"));
        }
        Ok(MotifSpec { kind, size })
    }

    pub fn matching(k: usize) -> Self {
        MotifSpec::new(MotifKind::Matching, k).expect("k >= 1")
    }

    pub fn clique(r: usize) -> Self {
        MotifSpec::new(MotifKind::Clique, r).expect("r >= 1")
    }

    pub fn indepset(l: usize) -> Self {
        MotifSpec::new(MotifKind::Indepset, l).expect("l >= 1")
    }

    pub fn count(&self, g: &Graph) -> Result<Count> {
        match self.kind {
            MotifKind::Matching => count_matchings(g, self.size),
            MotifKind::Clique => count_cliques(g, self.size),
            MotifKind::Indepset => count_indep_sets(g, self.size),
        }
    }
}

impl fmt::Display for MotifSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            MotifKind::Matching => "matching",
            MotifKind::Clique => "clique",
            MotifKind::Indepset => "indepset",
        };
        write!(f, "{kind}:{}", self.size)
    }
}

impl FromStr for MotifSpec {
    type Err = Error;

    /// Parses `matching:K`, `clique:R` or `indepset:L`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, size) = s
            .split_once(':')
            .ok_or_else(|| Error::param(format!("motif {s:?} is not of the form kind:size")))?;
        let kind = match kind {
            "matching" => MotifKind::Matching,
            "clique" => MotifKind::Clique,
            "indepset" => MotifKind::Indepset,
            other => return Err(Error::param(format!("unknown motif kind {other:?}"))),
        };
        let size = size
            .parse()
            .map_err(|_| Error::param(format!("motif size {size:?} is not a nonnegative integer")))?;
        MotifSpec::new(kind, size)
    }
}

/// How the matching counter picks its pivot edge.
#[derive(Debug, Clone, Copy)]
pub enum Pivot {
    /// Exhaust the edges of a maximum-degree vertex, lowest neighbour first.
    MaxDegree,
    /// A uniformly random edge at each step, from a seeded generator.
    Random(u64),
}

/// Vertex covers up to this size are finished by subset dynamic programming.
const COVER_DP_MAX: usize = 14;

/// Number of `k`-matchings in `g`.
pub fn count_matchings(g: &Graph, k: usize) -> Result<Count> {
    count_matchings_with(g, k, Pivot::MaxDegree)
}

/// Number of `k`-matchings using the given pivot rule.
///
/// Branches on `N_k(G) = N_k(G - e) + N_{k-1}(G - u - v)` for a pivot edge
/// `e = uv`. Each node first tries the exits `k <= 1`, too few vertices, and
/// a greedy vertex cover smaller than `k`. Once the cover is small the rest
/// is counted exactly by a subset DP over the cover.
pub fn count_matchings_with(g: &Graph, k: usize, pivot: Pivot) -> Result<Count> {
    let mut rng = match pivot {
        Pivot::MaxDegree => None,
        Pivot::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    matchings_rec(g.clone(), k, &mut rng).map(Count)
}

fn matchings_rec(mut g: Graph, k: usize, rng: &mut Option<ChaCha8Rng>) -> Result<u128> {
    let mut total = 0u128;
    loop {
        if k == 0 {
            return add(total, 1);
        }
        let m = g.edge_count();
        if m == 0 {
            return Ok(total);
        }
        if k == 1 {
            return add(total, m as u128);
        }
        let active = (0..g.n()).filter(|&v| g.degree(v) > 0).count();
        if 2 * k > active {
            return Ok(total);
        }
        let cover = greedy_cover(&g, COVER_DP_MAX.max(k) + 1);
        if k > cover.len() {
            return Ok(total);
        }
        if cover.len() <= COVER_DP_MAX {
            return add(total, cover_dp(&g, &cover, k)?);
        }

        match rng {
            None => {
                let v = (0..g.n()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
                let nbrs: Vec<usize> = g.neighbors(v).collect();
                for u in nbrs {
                    let mut inc = g.clone();
                    inc.isolate(u);
                    inc.isolate(v);
                    total = add(total, matchings_rec(inc, k - 1, rng)?)?;
                    g.remove_edge(u, v);
                }
            }
            Some(r) => {
                let idx = r.gen_range(0..m);
                let (u, v) = g.edges().nth(idx).unwrap();
                let mut inc = g.clone();
                inc.isolate(u);
                inc.isolate(v);
                total = add(total, matchings_rec(inc, k - 1, rng)?)?;
                g.remove_edge(u, v);
            }
        }
    }
}

/// Greedy max-degree vertex cover; stops once it exceeds `limit` vertices.
fn greedy_cover(g: &Graph, limit: usize) -> Vec<usize> {
    let mut deg = g.degrees();
    let mut taken = vec![false; g.n()];
    let mut cover = Vec::new();
    loop {
        let best = (0..g.n())
            .filter(|&v| !taken[v] && deg[v] > 0)
            .max_by_key(|&v| (deg[v], std::cmp::Reverse(v)));
        let Some(v) = best else {
            return cover;
        };
        taken[v] = true;
        deg[v] = 0;
        for u in g.neighbors(v) {
            if !taken[u] {
                deg[u] -= 1;
            }
        }
        cover.push(v);
        if cover.len() > limit {
            return cover;
        }
    }
}

/// Counts `k`-matchings of a graph whose edges all touch `cover`.
///
/// Vertices outside the cover are pairwise non-adjacent, so a matching is a
/// set of cross edges saturating some `U` of the cover plus a matching of
/// `cover - U` using only cover-internal edges.
fn cover_dp(g: &Graph, cover: &[usize], k: usize) -> Result<u128> {
    let c = cover.len();
    let full = (1usize << c) - 1;
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in cover.iter().enumerate() {
        pos[v] = i;
    }
    let cover_mask = |v: usize| -> usize {
        g.neighbors(v)
            .filter(|&u| pos[u] != usize::MAX)
            .fold(0usize, |m, u| m | 1 << pos[u])
    };

    // cross[U] = ways to match outside vertices injectively onto exactly U.
    let mut cross = vec![0u128; 1 << c];
    cross[0] = 1;
    for r in 0..g.n() {
        if pos[r] != usize::MAX || g.degree(r) == 0 {
            continue;
        }
        let nr = cover_mask(r);
        for set in (1..=full).rev() {
            if set.count_ones() as usize > k || set & nr == 0 {
                continue;
            }
            let mut extra = 0u128;
            let mut opts = set & nr;
            while opts != 0 {
                let x = opts & opts.wrapping_neg();
                extra = add(extra, cross[set ^ x])?;
                opts ^= x;
            }
            cross[set] = add(cross[set], extra)?;
        }
    }

    // inner[S][j] = j-matchings using cover-internal edges inside S.
    let internal: Vec<usize> = cover.iter().map(|&v| cover_mask(v)).collect();
    let width = k + 1;
    let mut inner = vec![0u128; (1 << c) * width];
    inner[0] = 1;
    for set in 1..=full {
        let v = set.trailing_zeros() as usize;
        let rest = set & !(1 << v);
        for j in 0..width {
            inner[set * width + j] = inner[rest * width + j];
        }
        let mut opts = rest & internal[v];
        while opts != 0 {
            let x = opts & opts.wrapping_neg();
            let sub = rest ^ x;
            for j in 1..width {
                let val = add(inner[set * width + j], inner[sub * width + j - 1])?;
                inner[set * width + j] = val;
            }
            opts ^= x;
        }
    }

    let mut total = 0u128;
    for (set, &ways) in cross.iter().enumerate() {
        let used = set.count_ones() as usize;
        if ways == 0 || used > k {
            continue;
        }
        let rest = full ^ set;
        total = add(total, mul(ways, inner[rest * width + (k - used)])?)?;
    }
    Ok(total)
}

/// `(m^2 + m - sum d(v)^2) / 2`, the number of 2-matchings read off the
/// degree sequence.
pub fn count_m2_via_degrees(g: &Graph) -> Count {
    let m = g.edge_count() as u128;
    let sq: u128 = (0..g.n()).map(|v| (g.degree(v) as u128).pow(2)).sum();
    Count((m * m + m - sq) / 2)
}

/// Number of `r`-vertex cliques.
pub fn count_cliques(g: &Graph, r: usize) -> Result<Count> {
    if r == 0 {
        return Err(Error::param("clique order must be at least 1"));
    }
    let all = bits::full(g.n());
    subsets_rec(g, &all, r, false).map(Count)
}

/// Number of `l`-vertex independent sets.
pub fn count_indep_sets(g: &Graph, l: usize) -> Result<Count> {
    if l == 0 {
        return Err(Error::param("independent set size must be at least 1"));
    }
    let all = bits::full(g.n());
    subsets_rec(g, &all, l, true).map(Count)
}

/// Counts `size`-subsets of `cand` that are cliques (or independent sets
/// when `independent`). Each subset is generated once, in increasing order.
fn subsets_rec(g: &Graph, cand: &[u64], size: usize, independent: bool) -> Result<u128> {
    let avail = bits::count(cand);
    if size == 1 || avail < size {
        return Ok(if avail >= size { avail as u128 } else { 0 });
    }
    // Homogeneous candidate sets are counted in closed form.
    let want = if independent { 0 } else { avail - 1 };
    if bits::ones(cand).all(|v| bits::intersection_count(g.row(v), cand) == want) {
        return crate::count::binomial(avail as u128, size as u128);
    }
    let mut total = 0u128;
    let mut next = vec![0u64; cand.len()];
    for v in bits::ones(cand) {
        let row = g.row(v);
        for ((o, &c), &r) in next.iter_mut().zip(cand).zip(row) {
            *o = if independent { c & !r } else { c & r };
        }
        bits::clear_through(&mut next, v);
        let avail = bits::count(&next);
        if avail < size - 1 {
            continue;
        }
        let sub = if size == 2 {
            avail as u128
        } else {
            subsets_rec(g, &next, size - 1, independent)?
        };
        total = add(total, sub)?;
    }
    Ok(total)
}

/// Size of a maximum matching (Edmonds' blossom algorithm).
pub fn matching_number(g: &Graph) -> usize {
    Blossom::new(g).run()
}

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: std::collections::VecDeque<usize>,
}

const NONE: usize = usize::MAX;

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: Default::default(),
        }
    }

    fn run(mut self) -> usize {
        let n = self.g.n();
        // Greedy start.
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(u) = self.g.neighbors(v).find(|&u| self.mate[u] == NONE) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            let mut v = self.find_path(root);
            while v != NONE {
                let pv = self.parent[v];
                let ppv = self.mate[pv];
                self.mate[v] = pv;
                self.mate[pv] = v;
                v = ppv;
            }
        }
        self.mate.iter().filter(|&&m| m != NONE).count() / 2
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> usize {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            let nbrs: Vec<usize> = self.g.neighbors(v).collect();
            for to in nbrs {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        NONE
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{make_split, SplitParams};

    fn split(n: usize, q: usize) -> Graph {
        make_split(SplitParams::new(n, q).unwrap()).unwrap()
    }

    /// Naive oracle: all k-subsets of the edge list, keep the disjoint ones.
    fn brute_matchings(g: &Graph, k: usize) -> u128 {
        let edges: Vec<_> = g.edges().collect();
        fn rec(edges: &[(usize, usize)], start: usize, k: usize, used: u64) -> u128 {
            if k == 0 {
                return 1;
            }
            let mut t = 0;
            for i in start..edges.len() {
                let (u, v) = edges[i];
                let m = 1u64 << u | 1u64 << v;
                if used & m == 0 {
                    t += rec(edges, i + 1, k - 1, used | m);
                }
            }
            t
        }
        rec(&edges, 0, k, 0)
    }

    fn brute_matching_number(g: &Graph) -> usize {
        (0..=g.n() / 2).rev().find(|&k| brute_matchings(g, k) > 0).unwrap()
    }

    #[test]
    fn small_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(brute_matchings(&k4, 2), 3);
        assert_eq!(count_matchings(&k4, 2).unwrap(), Count(3));
        assert_eq!(count_matchings(&k4, 0).unwrap(), Count(1));
        assert_eq!(count_matchings(&Graph::empty(0).unwrap(), 0).unwrap(), Count(1));
        assert_eq!(brute_matchings(&split(6, 2), 2), 12);
        assert_eq!(count_matchings(&split(6, 2), 2).unwrap(), Count(12));
        for n in 2..30 {
            assert_eq!(count_matchings(&split(n, 1), 2).unwrap(), Count(0));
        }
    }

    #[test]
    fn degree_identity_examples() {
        assert_eq!(count_m2_via_degrees(&Graph::complete(4).unwrap()), Count(3));
        assert_eq!(count_m2_via_degrees(&split(5, 1)), Count(0));
        assert_eq!(count_m2_via_degrees(&Graph::empty(7).unwrap()), Count(0));
    }

    #[test]
    fn large_cover_path_matches_brute_force() {
        // Cycles and paths on 40 vertices have covers far above the DP limit.
        for g in [Graph::cycle(40).unwrap(), Graph::path(33).unwrap()] {
            for k in 0..=3 {
                let fast = count_matchings(&g, k).unwrap().get();
                let seeded = count_matchings_with(&g, k, Pivot::Random(9)).unwrap().get();
                assert_eq!(fast, seeded);
                // Closed forms: C_n has n/(n-k) C(n-k,k), P_n has C(n-k,k).
                let n = g.n() as u128;
                let k = k as u128;
                let expect = if g.edge_count() == g.n() {
                    if k == 0 { 1 } else { n * crate::count::binomial(n - k, k).unwrap() / (n - k) }
                } else {
                    crate::count::binomial(n - k, k).unwrap()
                };
                assert_eq!(fast, expect);
            }
        }
    }

    #[test]
    fn cliques_and_independent_sets() {
        assert_eq!(count_cliques(&Graph::complete(5).unwrap(), 3).unwrap(), Count(10));
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(count_cliques(&c5, 3).unwrap(), Count(0));
        assert_eq!(count_cliques(&c5, 2).unwrap(), Count(5));
        assert_eq!(count_cliques(&c5, 1).unwrap(), Count(5));
        assert_eq!(count_indep_sets(&c5, 2).unwrap(), Count(5));
        assert_eq!(count_indep_sets(&Graph::empty(10).unwrap(), 4).unwrap(), Count(210));
        assert!(count_cliques(&c5, 0).is_err());
        assert!(count_indep_sets(&c5, 0).is_err());
    }

    #[test]
    fn split_clique_and_indep_counts() {
        for s in 3..8usize {
            for n in s..20usize {
                let g = split(n, s - 2);
                for r in 1..s {
                    let expect = crate::count::binomial((s - 2) as u128, r as u128).unwrap()
                        + (n - s + 2) as u128 * crate::count::binomial((s - 2) as u128, r as u128 - 1).unwrap();
                    assert_eq!(count_cliques(&g, r).unwrap().get(), expect, "n={n} s={s} r={r}");
                }
                for l in 2..5 {
                    let expect = crate::count::binomial((n - s + 2) as u128, l as u128).unwrap();
                    assert_eq!(count_indep_sets(&g, l).unwrap().get(), expect);
                }
            }
        }
    }

    #[test]
    fn matching_number_examples() {
        assert_eq!(matching_number(&Graph::complete(4).unwrap()), 2);
        assert_eq!(matching_number(&split(9, 1)), 1);
        assert_eq!(matching_number(&Graph::empty(3).unwrap()), 0);
        assert_eq!(matching_number(&Graph::cycle(7).unwrap()), 3);
        for s in 3..9 {
            for n in 2 * (s - 2)..2 * (s - 2) + 6 {
                assert_eq!(matching_number(&split(n.max(s), s - 2)), s - 2);
            }
        }
        // Petersen graph has a perfect matching.
        let mut pet = Vec::new();
        for i in 0..5 {
            pet.push((i, (i + 1) % 5));
            pet.push((i, i + 5));
            pet.push((i + 5, (i + 2) % 5 + 5));
        }
        assert_eq!(matching_number(&Graph::from_edges(10, &pet).unwrap()), 5);
    }

    #[test]
    fn matching_number_against_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(0..11);
            let mut g = Graph::empty(n).unwrap();
            let p = rng.gen_range(0.05..0.6);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
            let nu = matching_number(&g);
            assert_eq!(nu, brute_matching_number(&g), "{g:?}");
            assert!(count_matchings(&g, nu).unwrap().get() > 0);
            assert_eq!(count_matchings(&g, nu + 1).unwrap().get(), 0);
        }
    }

    #[test]
    fn motif_parsing() {
        assert_eq!("matching:3".parse::<MotifSpec>().unwrap(), MotifSpec::matching(3));
        assert_eq!("indepset:2".parse::<MotifSpec>().unwrap().to_string(), "indepset:2");
        assert!("clique:0".parse::<MotifSpec>().is_err());
        assert!("star:3".parse::<MotifSpec>().is_err());
        assert!("clique".parse::<MotifSpec>().is_err());
    }

    #[test]
    fn overflow_is_an_error() {
        // C(512, 40) independent sets in the empty graph exceeds 128 bits.
        let e = Graph::empty(512).unwrap();
        assert!(matches!(count_indep_sets(&e, 40), Err(Error::Overflow(_))));
        let k = Graph::complete(512).unwrap();
        assert!(matches!(count_cliques(&k, 2), Ok(Count(130816))));
    }
}
