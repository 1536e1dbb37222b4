use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{factor_u64, PosInt};

fn mobius(n: u64) -> i32 {
    let f = factor_u64(n);
    if f.iter().any(|&(_, k)| k > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Φ_i(a)` evaluated through `a^i - 1 = ∏_{d | i} Φ_d(a)`, i.e. the Möbius
/// product of `a^d - 1` over divisors `d` of `i`.
pub fn cyclotomic_eval(i: u32, a: &BigInt) -> BigInt {
    assert!(i >= 1, "cyclotomic index must be positive");
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for d in (1..=i).filter(|d| i.is_multiple_of(*d)) {
        let term = num_traits::pow(a.clone(), d as usize) - 1;
        match mobius((i / d) as u64) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    quot
}

fn is_power_of_two(w: &BigInt) -> bool {
    w.sign() == Sign::Plus && w.magnitude().count_ones() == 1
}

// v = 2^l - 1 with l ≥ 2
fn is_mersenne_like(v: &BigInt) -> bool {
    let w = v + 1;
    w > BigInt::from(2) && is_power_of_two(&w)
}

/// True exactly when `a^i - 1` has no primitive prime divisor.
pub fn zsigmondy_exception(a: &BigInt, i: u32) -> bool {
    let two = BigInt::from(2);
    match i {
        1 => *a == two,
        2 => {
            if a.is_positive() {
                is_mersenne_like(a)
            } else {
                // a = -(2^l + 1), l ≥ 1
                is_power_of_two(&(-a - 1))
            }
        }
        3 => *a == -two,
        6 => *a == two,
        _ => false,
    }
}

fn strip_prime(mut v: BigInt, r: u64) -> BigInt {
    let r = BigInt::from(r);
    while !v.is_zero() && (&v % &r).is_zero() {
        v /= &r;
    }
    v
}

fn odd_part(v: BigInt) -> BigInt {
    strip_prime(v, 2)
}

fn positive_primitive(b: &BigInt, i: u32) -> BigInt {
    match i {
        1 => b - 1,
        2 => odd_part(b + 1),
        _ => {
            let phi = cyclotomic_eval(i, b);
            let r = factor_u64(i as u64).last().expect("i ≥ 3").0;
            strip_prime(phi, r)
        }
    }
}

/// `Φ*_i(a)`, the greatest divisor of `a^i - 1` built from primes that divide
/// no `a^j - 1` with `j < i`. The prime 2 is only ever counted at `i = 1`.
pub fn greatest_primitive_divisor(a: &BigInt, i: u32) -> PosInt {
    assert!(i >= 1, "index must be positive");
    assert!(a.abs() > BigInt::one(), "|a| must exceed 1");
    let v = if a.is_positive() {
        positive_primitive(a, i)
    } else {
        let b = -a;
        match i {
            1 => &b + 1,
            2 => odd_part(&b - 1),
            _ if i % 2 == 1 => positive_primitive(&b, 2 * i),
            _ if i % 4 == 2 => positive_primitive(&b, i / 2),
            _ => positive_primitive(&b, i),
        }
    };
    v.abs().to_biguint().expect("absolute value is nonnegative")
}
