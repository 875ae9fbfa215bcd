//! Exhaustive enumeration of K_s-saturated graphs and extremal motif counts.
//!
//! The exhaustive scan walks the upper-triangle bitmask space column by
//! column (vertex `j` picks its neighbours among `0..j`). A column that would
//! close a `K_s` prunes the whole subtree, which is sound because
//! `K_s`-freeness is inherited by induced subgraphs. Complete labelled graphs
//! then pass the min-degree and edge-count filters, the saturation test, and
//! are deduplicated by canonical certificate.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};

use crate::canon::{canonical_certificate, CanonicalCertificate};
use crate::construct::{make_split, SplitParams};
use crate::count::Count;
use crate::counting::{count_matchings, MotifSpec};
use crate::error::{Error, Result};
use crate::formulas::{matchings_in_split_exact, sat_edges_formula};
use crate::graph::Graph;
use crate::saturation::creates_clique_on_addition;

/// Largest `n` the exhaustive scan accepts.
pub const EXHAUSTIVE_MAX_N: usize = 8;

#[derive(Debug, Clone)]
pub struct SearchBudget {
    pub max_n: usize,
    pub parallel_shards: usize,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_n: EXHAUSTIVE_MAX_N,
            parallel_shards: std::thread::available_parallelism().map_or(1, |p| p.get()),
            time_limit: None,
        }
    }
}

impl SearchBudget {
    pub fn with_shards(shards: usize) -> Self {
        SearchBudget {
            parallel_shards: shards,
            ..Default::default()
        }
    }

    fn admit(&self, n: usize) -> Result<()> {
        if self.max_n > EXHAUSTIVE_MAX_N {
            return Err(Error::Budget(format!(
                "exhaustive cap {} exceeds the hard limit {EXHAUSTIVE_MAX_N}",
                self.max_n
            )));
        }
        if n > self.max_n {
            return Err(Error::Budget(format!("n={n} exceeds the exhaustive cap {}", self.max_n)));
        }
        if self.parallel_shards == 0 {
            return Err(Error::param("shard count must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Min,
    Max,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Mode::Min),
            "max" => Ok(Mode::Max),
            _ => Err(Error::param(format!("mode must be min or max, got {s:?}"))),
        }
    }
}

/// Optimum of a motif count over all saturated iso-classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalResult {
    pub n: usize,
    pub s: usize,
    pub motif: MotifSpec,
    pub mode: Mode,
    pub optimum: Count,
    /// Every class attaining the optimum, in certificate order.
    pub extremal_graphs: Vec<CanonicalCertificate>,
    pub unique: bool,
    pub saturated_class_count: usize,
    /// Count value to number of classes attaining it.
    pub histogram: BTreeMap<Count, usize>,
}

impl ExtremalResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialisable")
    }
}

struct Histogram<'a>(&'a BTreeMap<Count, usize>);

impl Serialize for Histogram<'_> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(&k.to_string(), v)?;
        }
        map.end()
    }
}

impl Serialize for ExtremalResult {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("ExtremalResult", 9)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("s", &self.s)?;
        st.serialize_field("motif", &self.motif)?;
        st.serialize_field("mode", &self.mode)?;
        st.serialize_field("optimum", &self.optimum.to_string())?;
        let extremal: Vec<&str> = self.extremal_graphs.iter().map(|c| c.as_str()).collect();
        st.serialize_field("extremal", &extremal)?;
        st.serialize_field("unique", &self.unique)?;
        st.serialize_field("classes", &self.saturated_class_count)?;
        st.serialize_field("histogram", &Histogram(&self.histogram))?;
        st.end()
    }
}

/// Certificates of all `K_s`-saturated classes on `n` vertices, sorted.
pub fn enumerate_saturated_certificates(
    n: usize,
    s: usize,
    budget: &SearchBudget,
) -> Result<Vec<CanonicalCertificate>> {
    if n == 0 {
        return Err(Error::param("n must be at least 1"));
    }
    if s < 3 {
        return Err(Error::param("s must be at least 3"));
    }
    budget.admit(n)?;
    let shards = budget.parallel_shards;
    let deadline = budget.time_limit.map(|t| Instant::now() + t);
    let expired = AtomicBool::new(false);

    let parts: Vec<HashSet<CanonicalCertificate>> = (0..shards)
        .into_par_iter()
        .map(|shard| {
            let mut scan = Scan::new(n, s, shard, shards, deadline, &expired);
            scan.run();
            scan.found
        })
        .collect();
    if expired.load(Ordering::Relaxed) {
        return Err(Error::Budget(format!(
            "time limit of {:?} exceeded while enumerating n={n}, s={s}",
            budget.time_limit.unwrap_or_default()
        )));
    }
    let merged: BTreeSet<CanonicalCertificate> = parts.into_iter().flatten().collect();
    Ok(merged.into_iter().collect())
}

/// One canonical representative per `K_s`-saturated class on `n` vertices,
/// in certificate order.
pub fn enumerate_saturated(n: usize, s: usize, budget: &SearchBudget) -> Result<Vec<Graph>> {
    Ok(enumerate_saturated_certificates(n, s, budget)?
        .iter()
        .map(CanonicalCertificate::to_graph)
        .collect())
}

/// Scans all saturated classes and reports the optimum of `motif`.
pub fn extremal_count(
    n: usize,
    s: usize,
    motif: MotifSpec,
    mode: Mode,
    budget: &SearchBudget,
) -> Result<ExtremalResult> {
    let classes = enumerate_saturated_certificates(n, s, budget)?;
    extremal_over(n, s, &classes, motif, mode)
}

/// Like [`extremal_count`] over an already enumerated class list.
pub fn extremal_over(
    n: usize,
    s: usize,
    classes: &[CanonicalCertificate],
    motif: MotifSpec,
    mode: Mode,
) -> Result<ExtremalResult> {
    let counts: Vec<Count> = classes
        .par_iter()
        .map(|c| motif.count(&c.to_graph()))
        .collect::<Result<_>>()?;
    let mut histogram = BTreeMap::new();
    for &c in &counts {
        *histogram.entry(c).or_insert(0) += 1;
    }
    let optimum = match mode {
        Mode::Min => histogram.keys().next().copied(),
        Mode::Max => histogram.keys().next_back().copied(),
    }
    .ok_or_else(|| Error::param(format!("no K_{s}-saturated graphs on {n} vertices")))?;
    let extremal_graphs: Vec<CanonicalCertificate> = classes
        .iter()
        .zip(&counts)
        .filter(|(_, &c)| c == optimum)
        .map(|(cert, _)| cert.clone())
        .collect();
    Ok(ExtremalResult {
        n,
        s,
        motif,
        mode,
        optimum,
        unique: extremal_graphs.len() == 1,
        extremal_graphs,
        saturated_class_count: classes.len(),
        histogram,
    })
}

/// Bitmask DFS over labelled graphs on at most 16 vertices.
struct Scan<'a> {
    n: usize,
    s: usize,
    adj: [u16; 16],
    shard: usize,
    shards: usize,
    /// Columns `1..=prefix_cols` select the shard.
    prefix_cols: usize,
    min_edges: usize,
    min_degree: usize,
    deadline: Option<Instant>,
    expired: &'a AtomicBool,
    ticks: u32,
    found: HashSet<CanonicalCertificate>,
}

impl<'a> Scan<'a> {
    fn new(
        n: usize,
        s: usize,
        shard: usize,
        shards: usize,
        deadline: Option<Instant>,
        expired: &'a AtomicBool,
    ) -> Self {
        let (min_edges, min_degree) = if n >= s {
            (sat_edges_formula(n, s).map_or(0, |c| c.get() as usize), s - 2)
        } else {
            (0, 0)
        };
        Scan {
            n,
            s,
            adj: [0; 16],
            shard,
            shards,
            prefix_cols: n.saturating_sub(1).min(4),
            min_edges,
            min_degree,
            deadline,
            expired,
            ticks: 0,
            found: HashSet::new(),
        }
    }

    fn run(&mut self) {
        self.column(1, 0, 0);
    }

    fn out_of_time(&mut self) -> bool {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks & 0x3ff == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    self.expired.store(true, Ordering::Relaxed);
                }
            }
        }
        self.expired.load(Ordering::Relaxed)
    }

    /// Chooses the neighbours of vertex `j` among `0..j`. `prefix` packs the
    /// columns chosen so far while they still determine the shard.
    fn column(&mut self, j: usize, edges: usize, prefix: usize) {
        if j == self.prefix_cols + 1 && prefix % self.shards != self.shard {
            return;
        }
        if j == self.n {
            self.leaf(edges);
            return;
        }
        if self.out_of_time() {
            return;
        }
        for col in 0u16..1 << j {
            if has_clique(&self.adj, col, self.s - 1) {
                continue;
            }
            self.adj[j] = col;
            for i in ones(col) {
                self.adj[i] |= 1 << j;
            }
            let prefix = if j <= self.prefix_cols { prefix << j | col as usize } else { prefix };
            self.column(j + 1, edges + col.count_ones() as usize, prefix);
            for i in ones(col) {
                self.adj[i] &= !(1 << j);
            }
            self.adj[j] = 0;
        }
    }

    fn leaf(&mut self, edges: usize) {
        if edges < self.min_edges {
            return;
        }
        let n = self.n;
        let adj = &self.adj[..n];
        if adj.iter().any(|r| (r.count_ones() as usize) < self.min_degree) {
            return;
        }
        for u in 0..n {
            for v in u + 1..n {
                if adj[u] >> v & 1 == 0 && !has_clique(adj, adj[u] & adj[v], self.s - 2) {
                    return;
                }
            }
        }
        let mut g = Graph::empty(n).expect("n <= 16");
        for u in 0..n {
            for v in ones(adj[u] >> (u + 1)) {
                g.add_edge(u, u + 1 + v);
            }
        }
        self.found.insert(canonical_certificate(&g));
    }
}

#[inline]
fn ones(mut x: u16) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (x != 0).then(|| {
            let t = x.trailing_zeros() as usize;
            x &= x - 1;
            t
        })
    })
}

/// Whether `cand` contains a clique of order `size` in the small graph `adj`.
fn has_clique(adj: &[u16], cand: u16, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < size {
        return false;
    }
    if size == 1 {
        return true;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let next = rest & adj[v];
        if size == 2 {
            if next != 0 {
                return true;
            }
        } else if has_clique(adj, next, size - 1) {
            return true;
        }
    }
    false
}

/// A random maximal `K_s`-free graph: non-edges are visited in a
/// seed-determined order and each is added unless it would close a `K_s`.
pub fn random_saturated(n: usize, s: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::param("n must be at least 1"));
    }
    if s < 3 {
        return Err(Error::param("s must be at least 3"));
    }
    let mut g = Graph::empty(n)?;
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pairs.shuffle(&mut rng);
    for (u, v) in pairs {
        if !creates_clique_on_addition(&g, u, v, s)? {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// One row of [`probe_conjecture`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeRow {
    pub n: usize,
    pub samples: usize,
    #[serde(serialize_with = "as_decimal")]
    pub sampled_min: Count,
    #[serde(serialize_with = "as_decimal")]
    pub sampled_max: Count,
    /// `N(M_k, S(n, s-2))` from the counter.
    #[serde(serialize_with = "as_decimal")]
    pub split_value: Count,
    pub min_edges_sampled: usize,
    /// Every sample met the saturation-number edge bound.
    pub edge_bound_ok: bool,
    /// The sampled minimum is not below the split-graph value.
    pub min_at_least_split: bool,
}

fn as_decimal<S: Serializer>(c: &Count, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&c.to_string())
}

/// Samples random saturated graphs for each `n` and compares the smallest
/// `k`-matching count seen with that of `S(n, s-2)`.
pub fn probe_conjecture(
    n_range: RangeInclusive<usize>,
    s: usize,
    k: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<ProbeRow>> {
    if k < 2 || s < 3 {
        return Err(Error::param("probing needs k >= 2 and s >= 3"));
    }
    if samples == 0 {
        return Err(Error::param("at least one sample is required"));
    }
    if *n_range.start() < s {
        return Err(Error::param(format!("n range must start at n >= s = {s}")));
    }
    let mut rows = Vec::new();
    for n in n_range {
        let split = make_split(SplitParams::extremal(n, s)?)?;
        let split_value = count_matchings(&split, k)?;
        debug_assert_eq!(Ok(split_value), matchings_in_split_exact(n, s, k));
        let bound = sat_edges_formula(n, s)?.get() as usize;
        let mut seeds = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let sample_seeds: Vec<u64> = (0..samples).map(|_| seeds.gen()).collect();
        let stats: Vec<(Count, usize)> = sample_seeds
            .par_iter()
            .map(|&sd| {
                let g = random_saturated(n, s, sd)?;
                Ok((count_matchings(&g, k)?, g.edge_count()))
            })
            .collect::<Result<_>>()?;
        let sampled_min = stats.iter().map(|x| x.0).min().expect("samples > 0");
        let sampled_max = stats.iter().map(|x| x.0).max().expect("samples > 0");
        let min_edges_sampled = stats.iter().map(|x| x.1).min().expect("samples > 0");
        rows.push(ProbeRow {
            n,
            samples,
            sampled_min,
            sampled_max,
            split_value,
            min_edges_sampled,
            edge_bound_ok: min_edges_sampled >= bound,
            min_at_least_split: sampled_min >= split_value,
        });
    }
    Ok(rows)
}

/// graph6 strings of a certificate list, for reports.
pub fn certificates_graph6(certs: &[CanonicalCertificate]) -> Vec<String> {
    certs.iter().map(|c| c.as_str().to_owned()).collect()
}

/// Certificate of `S(n, s-2)`.
pub fn split_certificate(n: usize, s: usize) -> Result<CanonicalCertificate> {
    Ok(canonical_certificate(&make_split(SplitParams::extremal(n, s)?)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::saturation::check_saturation;

    /// Independent route: every labelled graph, the general saturation
    /// checker, then certificates.
    fn brute_classes(n: usize, s: usize) -> Vec<CanonicalCertificate> {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut set = BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if check_saturation(&g, s).unwrap().is_saturated {
                set.insert(canonical_certificate(&g));
            }
        }
        set.into_iter().collect()
    }

    #[test]
    fn kernel_matches_brute_force_up_to_six_vertices() {
        for n in 1..=6 {
            for s in 3..=6 {
                for shards in [1, 3] {
                    let got = enumerate_saturated_certificates(n, s, &SearchBudget::with_shards(shards)).unwrap();
                    assert_eq!(got, brute_classes(n, s), "n={n} s={s} shards={shards}");
                }
            }
        }
    }

    #[test]
    fn four_vertex_triangle_saturated_classes() {
        let got = enumerate_saturated(4, 3, &SearchBudget::with_shards(1)).unwrap();
        // Star K_{1,3} and the 4-cycle.
        assert_eq!(got.len(), 2);
        let star = make_split(SplitParams::new(4, 1).unwrap()).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        let certs: Vec<_> = got.iter().map(canonical_certificate).collect();
        assert!(certs.contains(&canonical_certificate(&star)));
        assert!(certs.contains(&canonical_certificate(&c4)));
    }

    #[test]
    fn below_s_only_the_complete_graph() {
        for s in 3..7 {
            let got = enumerate_saturated(s - 1, s, &SearchBudget::with_shards(2)).unwrap();
            assert_eq!(got, vec![Graph::complete(s - 1).unwrap()]);
        }
    }

    #[test]
    fn budget_errors() {
        assert!(matches!(
            enumerate_saturated(9, 3, &SearchBudget::default()),
            Err(Error::Budget(_))
        ));
        let tight = SearchBudget { max_n: 5, ..Default::default() };
        assert!(matches!(enumerate_saturated(6, 3, &tight), Err(Error::Budget(_))));
        let loose = SearchBudget { max_n: 9, ..Default::default() };
        assert!(matches!(enumerate_saturated(4, 3, &loose), Err(Error::Budget(_))));
        assert!(enumerate_saturated(4, 2, &SearchBudget::default()).is_err());
        assert!(enumerate_saturated(4, 3, &SearchBudget::with_shards(0)).is_err());
    }

    #[test]
    fn zero_time_limit_is_a_budget_error() {
        let b = SearchBudget {
            time_limit: Some(Duration::ZERO),
            parallel_shards: 1,
            ..Default::default()
        };
        // Tick granularity means tiny scans may still finish; n=8 does not.
        assert!(matches!(enumerate_saturated(8, 4, &b), Err(Error::Budget(_))));
    }

    #[test]
    fn extremal_small_cases() {
        let b = SearchBudget::with_shards(4);
        let r = extremal_count(6, 3, MotifSpec::matching(2), Mode::Min, &b).unwrap();
        assert_eq!(r.optimum, Count(0));
        assert!(r.unique);
        assert_eq!(r.extremal_graphs[0], split_certificate(6, 3).unwrap());

        // 1 * (7 - 3 + 2) + C(1, 2): the star.
        let r = extremal_count(7, 3, MotifSpec::clique(2), Mode::Min, &b).unwrap();
        assert_eq!(r.optimum, Count(6));
        assert_eq!(r.extremal_graphs, vec![split_certificate(7, 3).unwrap()]);

        let r = extremal_count(6, 4, MotifSpec::matching(3), Mode::Min, &b).unwrap();
        assert_eq!(r.optimum, Count(0));
        assert!(r.extremal_graphs.contains(&split_certificate(6, 4).unwrap()));

        let total: usize = r.histogram.values().sum();
        assert_eq!(total, r.saturated_class_count);
    }

    #[test]
    fn max_mode_reads_the_top_of_the_histogram() {
        let b = SearchBudget::with_shards(2);
        let r = extremal_count(6, 3, MotifSpec::clique(2), Mode::Max, &b).unwrap();
        assert_eq!(Some(&r.optimum), r.histogram.keys().next_back());
        // K_{3,3} is the densest triangle-free graph on 6 vertices.
        assert_eq!(r.optimum, Count(9));
    }

    #[test]
    fn json_shape() {
        let r = extremal_count(4, 3, MotifSpec::clique(2), Mode::Min, &SearchBudget::with_shards(1)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["n"], 4);
        assert_eq!(v["s"], 3);
        assert_eq!(v["motif"]["kind"], "clique");
        assert_eq!(v["motif"]["size"], 2);
        assert_eq!(v["mode"], "min");
        assert_eq!(v["optimum"], "3");
        assert_eq!(v["extremal"][0], r.extremal_graphs[0].as_str());
        assert_eq!(v["unique"], true);
        assert_eq!(v["classes"], 2);
        assert_eq!(v["histogram"]["3"], 1);
        assert_eq!(v["histogram"]["4"], 1);
    }

    #[test]
    fn random_saturated_is_saturated_and_deterministic() {
        for (n, s) in [(1, 3), (2, 3), (10, 3), (25, 4), (40, 5), (12, 7)] {
            for seed in 0..5 {
                let g = random_saturated(n, s, seed).unwrap();
                assert!(check_saturation(&g, s).unwrap().is_saturated);
                assert_eq!(g, random_saturated(n, s, seed).unwrap());
            }
        }
        assert!(random_saturated(0, 3, 0).is_err());
        assert!(random_saturated(5, 2, 0).is_err());
    }

    #[test]
    fn probe_rows() {
        let rows = probe_conjecture(8..=10, 4, 3, 5, 1).unwrap();
        assert_eq!(rows.len(), 3);
        for r in &rows {
            assert_eq!(r.split_value, Count(0));
            assert!(r.edge_bound_ok);
            assert!(r.min_at_least_split);
        }
        assert!(probe_conjecture(2..=5, 4, 2, 5, 1).is_err());
        assert!(probe_conjecture(5..=6, 4, 1, 5, 1).is_err());
    }
}
