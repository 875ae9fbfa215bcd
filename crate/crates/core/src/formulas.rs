//! Closed forms for saturation numbers and split-graph counts.
//!
//! Every value here has an enumerative counterpart in [`crate::counting`];
//! the tests cross-check the two.

use std::fmt;

use crate::count::{add, binomial, falling, gcd, mul, Count};
use crate::error::{Error, Result};

fn u(x: usize) -> u128 {
    x as u128
}

/// `(s-2)(n-s+2) + C(s-2, 2)`, the minimum edge count of a `K_s`-saturated
/// graph on `n >= s` vertices.
pub fn sat_edges_formula(n: usize, s: usize) -> Result<Count> {
    if s < 2 || n < s {
        return Err(Error::domain(format!("need n >= s >= 2, got n={n}, s={s}")));
    }
    let q = u(s - 2);
    let v = add(mul(q, u(n - s + 2))?, binomial(q, 2)?)?;
    Ok(Count(v))
}

/// `(n-s+2) C(s-2, r-1) + C(s-2, r)`, the number of `K_r` in `S(n, s-2)`.
pub fn sat_cliques_formula(n: usize, r: usize, s: usize) -> Result<Count> {
    if !(s > r && r >= 2 && n >= s) {
        return Err(Error::domain(format!("need s > r >= 2 and n >= s, got n={n}, r={r}, s={s}")));
    }
    let q = u(s - 2);
    let v = add(mul(u(n - s + 2), binomial(q, u(r - 1))?)?, binomial(q, u(r))?)?;
    Ok(Count(v))
}

/// Number of perfect matchings of `K_{2j}`: `(2j)! / (j! 2^j)`.
fn double_factorial_odd(j: u128) -> Result<u128> {
    let mut acc = 1u128;
    let mut f = 1u128;
    while f < 2 * j {
        acc = mul(acc, f)?;
        f += 2;
    }
    Ok(acc)
}

/// Exact number of `k`-matchings in `S(n, s-2)`.
///
/// Writing `q = s - 2`, a matching with `j` edges inside the clique part and
/// `k - j` edges across is chosen as: the `j` clique edges
/// (`C(q, 2j) (2j-1)!!` ways), the `k - j` independent endpoints
/// (`C(n-q, k-j)`), and an injective assignment of those to the unused
/// clique vertices (`(q-2j)_{k-j}`).
pub fn matchings_in_split_exact(n: usize, s: usize, k: usize) -> Result<Count> {
    if !(s >= 3 && n >= s) {
        return Err(Error::domain(format!("need n >= s >= 3, got n={n}, s={s}")));
    }
    let q = u(s - 2);
    let rest = u(n - (s - 2));
    let k = u(k);
    let mut total = 0u128;
    let mut j = 0u128;
    while j <= k && 2 * j <= q {
        let inside = mul(binomial(q, 2 * j)?, double_factorial_odd(j)?)?;
        let cross = mul(falling(q - 2 * j, k - j)?, binomial(rest, k - j)?)?;
        total = add(total, mul(inside, cross)?)?;
        j += 1;
    }
    Ok(Count(total))
}

/// `C(n-s+2, k) (s-2)_k`: matchings of `S(n, s-2)` that use no clique-internal
/// edge. Dominant term of [`matchings_in_split_exact`].
pub fn matchings_in_split_leading(n: usize, s: usize, k: usize) -> Result<Count> {
    if !(k >= 2 && s >= 2 && k <= s - 2 && n >= s) {
        return Err(Error::domain(format!("need 2 <= k <= s-2 and n >= s, got n={n}, s={s}, k={k}")));
    }
    let v = mul(binomial(u(n - s + 2), u(k))?, falling(u(s - 2), u(k))?)?;
    Ok(Count(v))
}

/// The quadratic `(m^2 + (7 - 2n - 2s) m + n(n-1)(s-2)) / 2` evaluated for any
/// `m`. `m(m+7)` and `n(n-1)` are even, so the division is exact.
pub fn m2_profile_value(n: usize, s: usize, m: usize) -> i128 {
    let (n, s, m) = (n as i128, s as i128, m as i128);
    (m * m + (7 - 2 * n - 2 * s) * m + n * (n - 1) * (s - 2)) / 2
}

/// Degree profile with `a` vertices of degree `s-2` and `b` of degree `n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub a: usize,
    pub b: usize,
}

/// Solves `2m = a(s-2) + b(n-1)`, `n = a + b` for nonnegative integers.
pub fn solve_degree_profile(n: usize, s: usize, m: usize) -> Result<DegreeProfile> {
    if s < 2 || n < s {
        return Err(Error::domain(format!("need n >= s >= 2, got n={n}, s={s}")));
    }
    let (ni, si, mi) = (n as i128, s as i128, m as i128);
    let den = ni - si + 1;
    let a_num = ni * ni - ni - 2 * mi;
    let b_num = 2 * mi + 2 * ni - ni * si;
    if a_num % den != 0 || b_num % den != 0 || a_num < 0 || b_num < 0 {
        return Err(Error::domain(format!(
            "degree profile for n={n}, s={s}, m={m} has a = {a_num}/{den}, b = {b_num}/{den}; \
             both must be nonnegative integers"
        )));
    }
    Ok(DegreeProfile {
        a: (a_num / den) as usize,
        b: (b_num / den) as usize,
    })
}

/// Number of 2-matchings in an `n`-vertex graph with `m` edges whose degrees
/// all lie in `{s-2, n-1}`. Rejects `m` for which no such profile exists.
pub fn m2_profile_formula(n: usize, s: usize, m: usize) -> Result<Count> {
    solve_degree_profile(n, s, m)?;
    let v = m2_profile_value(n, s, m);
    if v < 0 {
        return Err(Error::domain(format!("profile value {v} is negative for n={n}, s={s}, m={m}")));
    }
    Ok(Count(v as u128))
}

/// A rational lower bound `numer / denom` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalBound {
    pub numer: u128,
    pub denom: u128,
}

impl RationalBound {
    fn new(numer: u128, denom: u128) -> Self {
        let g = gcd(numer, denom).max(1);
        RationalBound {
            numer: numer / g,
            denom: denom / g,
        }
    }

    pub fn ceil(&self) -> Count {
        Count(self.numer.div_ceil(self.denom))
    }

    /// `count >= numer / denom`, compared exactly.
    pub fn is_met_by(&self, count: Count) -> bool {
        match count.0.checked_mul(self.denom) {
            Some(lhs) => lhs >= self.numer,
            None => true,
        }
    }
}

impl fmt::Display for RationalBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

/// `C(tau, l) (n / tau)^l` as an exact rational.
///
/// This is the number of independent `l`-sets in `tau` disjoint cliques of
/// order `n / tau`, and the leading term of the minimum over graphs with
/// about `n^2 / (2 tau)` edges. It is not an exact finite-`n` bound at
/// `C(n, 2) / tau` edges: for `l = 2` every such graph has
/// `n (n - 1) (tau - 1) / (2 tau)` independent pairs, below the value here.
pub fn indep_lower_bound(n: usize, tau: usize, l: usize) -> Result<RationalBound> {
    if tau == 0 || l == 0 {
        return Err(Error::domain("tau and l must be positive"));
    }
    if l > tau + 1 {
        return Err(Error::domain(format!("need l <= tau + 1, got l={l}, tau={tau}")));
    }
    let l32 = u32::try_from(l).map_err(|_| Error::Overflow("exponent"))?;
    let numer = mul(binomial(u(tau), u(l))?, u(n).checked_pow(l32).ok_or(Error::Overflow("power"))?)?;
    let denom = u(tau).checked_pow(l32).ok_or(Error::Overflow("power"))?;
    Ok(RationalBound::new(numer, denom))
}

/// The edge count `C(n, 2) / tau` required by [`indep_lower_bound`], if it
/// is an integer.
pub fn indep_bound_edge_count(n: usize, tau: usize) -> Option<usize> {
    let pairs = n * n.saturating_sub(1) / 2;
    (tau > 0 && pairs.is_multiple_of(tau)).then(|| pairs / tau)
}
