//! Binomial coefficients, lexicographic k-subset enumeration, and primes.

use num_bigint::BigUint;
use num_traits::One;

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` when it fits in a `u64`.
pub fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc.checked_mul(n as u128 - i)? / (i + 1);
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Lexicographic iterator over the k-subsets of `0..n`.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: u32,
    current: Vec<u32>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations { n: n as u32, current: (0..k as u32).collect(), done: k > n }
    }

    /// Starts the enumeration at the subset of lexicographic rank `rank`.
    pub fn starting_at(n: usize, k: usize, rank: u64) -> Self {
        match unrank(n, k, rank) {
            Some(current) => Combinations { n: n as u32, current, done: false },
            None => Combinations { n: n as u32, current: Vec::new(), done: true },
        }
    }

    fn advance(&mut self) {
        let k = self.current.len();
        let n = self.n;
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.current[i] < n - (k - i) as u32 {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for Combinations {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.advance();
        Some(out)
    }
}

/// The k-subset of `0..n` with lexicographic rank `rank`, if it exists.
pub fn unrank(n: usize, k: usize, mut rank: u64) -> Option<Vec<u32>> {
    if k > n || rank >= binomial_u64(n as u64, k as u64)? {
        return None;
    }
    let mut out = Vec::with_capacity(k);
    let mut next = 0u64;
    for i in 0..k {
        let mut c = next;
        loop {
            let block = binomial_u64(n as u64 - c - 1, (k - i - 1) as u64)?;
            if rank < block {
                break;
            }
            rank -= block;
            c += 1;
        }
        out.push(c as u32);
        next = c + 1;
    }
    Some(out)
}

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest prime strictly below `bound`.
pub fn largest_prime_below(bound: u64) -> Option<u64> {
    (2..bound).rev().find(|&q| is_prime(q))
}
