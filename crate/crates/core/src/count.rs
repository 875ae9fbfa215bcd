use std::fmt;
use std::iter::Sum;

use crate::error::{Error, Result};

/// An exact nonnegative count. Arithmetic is checked and reports
/// [`Error::Overflow`] instead of wrapping.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Count(pub u128);

impl Count {
    pub const ZERO: Count = Count(0);
    pub const ONE: Count = Count(1);

    pub fn get(self) -> u128 {
        self.0
    }

    pub fn checked_add(self, rhs: Count) -> Result<Count> {
        self.0.checked_add(rhs.0).map(Count).ok_or(Error::Overflow("addition"))
    }

    pub fn checked_mul(self, rhs: Count) -> Result<Count> {
        self.0.checked_mul(rhs.0).map(Count).ok_or(Error::Overflow("multiplication"))
    }
}

impl From<u128> for Count {
    fn from(v: u128) -> Self {
        Count(v)
    }
}

impl From<usize> for Count {
    fn from(v: usize) -> Self {
        Count(v as u128)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Saturating sum, for display-only aggregates.
impl Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Self {
        Count(iter.fold(0u128, |a, c| a.saturating_add(c.0)))
    }
}

#[inline]
pub(crate) fn add(a: u128, b: u128) -> Result<u128> {
    a.checked_add(b).ok_or(Error::Overflow("addition"))
}

#[inline]
pub(crate) fn mul(a: u128, b: u128) -> Result<u128> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplication"))
}

/// Binomial coefficient with overflow detection.
pub fn binomial(n: u128, k: u128) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step; divide by the
        // gcd first so the intermediate product overflows as late as possible.
        let num = n - i;
        let den = i + 1;
        let g = gcd(acc, den);
        let (a, d) = (acc / g, den / g);
        let num = num / d;
        acc = mul(a, num)?;
    }
    Ok(acc)
}

/// Falling factorial `(x)_k = x (x-1) ... (x-k+1)`, with `(x)_0 = 1` and
/// `(x)_k = 0` for `k > x`.
pub fn falling(x: u128, k: u128) -> Result<u128> {
    if k > x {
        return Ok(0);
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = mul(acc, x - i)?;
    }
    Ok(acc)
}

pub(crate) fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
