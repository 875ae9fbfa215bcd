//! Word-slice bitset helpers shared by the graph kernels.

#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn test(set: &[u64], i: usize) -> bool {
    set[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
pub fn set(set: &mut [u64], i: usize) {
    set[i >> 6] |= 1 << (i & 63);
}

#[inline]
pub fn clear(set: &mut [u64], i: usize) {
    set[i >> 6] &= !(1 << (i & 63));
}

#[inline]
pub fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub fn is_empty(set: &[u64]) -> bool {
    set.iter().all(|&w| w == 0)
}

#[inline]
pub fn intersection_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// Writes `a & b` into `out`.
#[inline]
pub fn and_into(out: &mut [u64], a: &[u64], b: &[u64]) {
    for ((o, x), y) in out.iter_mut().zip(a).zip(b) {
        *o = x & y;
    }
}

/// Bitset with bits `0..n` set.
pub fn full(n: usize) -> Vec<u64> {
    let mut v = vec![u64::MAX; words_for(n)];
    if !n.is_multiple_of(64) {
        if let Some(last) = v.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    v
}

/// Clears every bit at index `<= i`.
#[inline]
pub fn clear_through(set: &mut [u64], i: usize) {
    let w = i >> 6;
    for x in &mut set[..w] {
        *x = 0;
    }
    let b = i & 63;
    set[w] &= if b == 63 { 0 } else { u64::MAX << (b + 1) };
}

pub fn first(set: &[u64]) -> Option<usize> {
    set.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Iterates the indices of set bits in increasing order.
pub fn ones(set: &[u64]) -> Ones<'_> {
    Ones {
        words: set,
        idx: 0,
        cur: set.first().copied().unwrap_or(0),
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + t);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_ones() {
        for n in [0, 1, 5, 63, 64, 65, 130] {
            let f = full(n);
            assert_eq!(count(&f), n);
            assert_eq!(ones(&f).collect::<Vec<_>>(), (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn clear_through_boundaries() {
        let mut s = full(130);
        clear_through(&mut s, 63);
        assert_eq!(first(&s), Some(64));
        clear_through(&mut s, 64);
        assert_eq!(first(&s), Some(65));
        clear_through(&mut s, 129);
        assert!(is_empty(&s));
    }
}
