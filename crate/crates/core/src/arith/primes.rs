use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::PosInt;
use crate::error::{Error, Result};

/// Strong-pseudoprime rounds used above 64 bits unless configured otherwise.
pub const DEFAULT_PRIMALITY_ROUNDS: u32 = 64;

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// A prime power `p^k` with `k ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimePower {
    pub p: PosInt,
    pub k: u32,
}

impl PrimePower {
    pub fn value(&self) -> PosInt {
        num_traits::pow(self.p.clone(), self.k as usize)
    }

    pub fn is_even(&self) -> bool {
        self.p == PosInt::from(2u32)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.k)
        }
    }
}

/// Primes up to and including `limit`, ascending.
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &SMALL_PRIMES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

pub fn is_prime(n: &PosInt) -> bool {
    is_prime_with_rounds(n, DEFAULT_PRIMALITY_ROUNDS)
}

/// Primality test: exact for 64-bit values, otherwise a strong-pseudoprime
/// test to the first `rounds` prime bases.
pub fn is_prime_with_rounds(n: &PosInt, rounds: u32) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for p in sieve_primes(1000) {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    let bases = first_primes(rounds.max(1) as usize);
    'bases: for a in bases {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn first_primes(count: usize) -> Vec<u64> {
    let mut limit = 64u64;
    loop {
        let ps = sieve_primes(limit);
        if ps.len() >= count {
            return ps.into_iter().take(count).collect();
        }
        limit *= 2;
    }
}

/// `⌊a^(1/n)⌋`.
pub fn integer_nth_root(a: &PosInt, n: u32) -> PosInt {
    assert!(n >= 1, "root degree must be positive");
    a.nth_root(n)
}

pub fn prime_power_decompose(q: &PosInt) -> Option<PrimePower> {
    prime_power_decompose_with_rounds(q, DEFAULT_PRIMALITY_ROUNDS)
}

/// Writes `q = p^k` with `p` prime, or returns `None` if `q` is not a prime
/// power.
pub fn prime_power_decompose_with_rounds(q: &PosInt, rounds: u32) -> Option<PrimePower> {
    if q <= &PosInt::one() {
        return None;
    }
    if is_prime_with_rounds(q, rounds) {
        return Some(PrimePower { p: q.clone(), k: 1 });
    }
    let bits = q.bits();
    for e in sieve_primes(bits) {
        let e32 = e as u32;
        let root = q.nth_root(e32);
        if num_traits::pow(root.clone(), e as usize) == *q {
            return prime_power_decompose_with_rounds(&root, rounds).map(|pp| PrimePower {
                p: pp.p,
                k: pp.k * e32,
            });
        }
    }
    None
}

fn pollard_brent(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        while g == 1 {
            x = f(x);
            y = f(f(y));
            g = x.abs_diff(y).gcd(&n);
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

/// Prime factorisation of a machine word, ascending primes with exponents.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    if n < 2 {
        return out;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let mut k = 0;
        while n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
    }
    let mut stack = vec![n];
    let mut big = Vec::new();
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            big.push(m);
            continue;
        }
        let d = pollard_brent(m);
        stack.push(d);
        stack.push(m / d);
    }
    big.sort_unstable();
    for p in big {
        match out.last_mut() {
            Some((q, k)) if *q == p => *k += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Multiplicative order of `a` modulo the word-sized prime `r`.
pub fn mult_order(a: &PosInt, r: u64) -> Result<u64> {
    if !is_prime_u64(r) {
        return Err(Error::Precondition(format!("modulus {r} is not prime")));
    }
    let a_mod = (a % r).to_u64().expect("residue fits in u64");
    if a_mod == 0 {
        return Err(Error::NotUnit {
            value: a.to_string(),
            modulus: r,
        });
    }
    let mut order = r - 1;
    for (f, _) in factor_u64(r - 1) {
        while order.is_multiple_of(f) && pow_mod(a_mod, order / f, r) == 1 {
            order /= f;
        }
    }
    Ok(order)
}
