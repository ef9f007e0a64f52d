//! Small exact integer helpers shared by the bound modules.

use rug::ops::Pow;
use rug::{Integer, Rational};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, k)` with `q = p^k`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        // no factor up to √q: q is prime
        return Some((q, 1));
    }
    let (mut rest, mut k) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Möbius function μ(n).
pub fn mobius(n: u32) -> i32 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2u32;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn pow(q: u64, n: u32) -> Integer {
    Integer::from(q).pow(n)
}

/// `⌊2 q^{n/2}⌋`, computed as the integer square root of `4 q^n`.
pub fn floor_two_sqrt_pow(q: u64, n: u32) -> Integer {
    (pow(q, n) * 4u32).sqrt()
}

/// `1 / (n q^n)` as an exact rational.
pub fn inv_n_qn(q: u64, n: u32) -> Rational {
    Rational::from((Integer::from(1), pow(q, n) * n))
}

pub fn binomial(n: i64, k: u32) -> Integer {
    Integer::from(n).binomial(k)
}
