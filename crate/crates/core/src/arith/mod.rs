//! Exact arithmetic on arbitrary-precision integers.
//!
//! Nothing here factors pipeline inputs. Factoring is only applied to
//! word-sized auxiliary quantities (indices, `r - 1` for a word-sized prime
//! `r`, degrees).

mod cyclotomic;
mod poly;
mod primes;

pub use cyclotomic::{cyclotomic_eval, greatest_primitive_divisor, zsigmondy_exception};
pub use poly::{solve_poly_prime_power, IntPoly, DEFAULT_ROOT_WINDOW};
pub use primes::{
    factor_u64, integer_nth_root, is_prime, is_prime_u64, is_prime_with_rounds, mult_order,
    prime_power_decompose, prime_power_decompose_with_rounds, sieve_primes, PrimePower,
    DEFAULT_PRIMALITY_ROUNDS,
};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Arbitrary-precision nonnegative integer, the scalar type of the crate.
pub type PosInt = BigUint;

pub fn gcd(a: &PosInt, b: &PosInt) -> PosInt {
    a.gcd(b)
}

pub fn lcm(a: &PosInt, b: &PosInt) -> PosInt {
    if a.is_zero() || b.is_zero() {
        return PosInt::zero();
    }
    a / a.gcd(b) * b
}

pub fn lcm_all<'a, I: IntoIterator<Item = &'a PosInt>>(values: I) -> PosInt {
    values.into_iter().fold(PosInt::one(), |acc, v| lcm(&acc, v))
}

/// Divides out of `r` every prime that also divides `n`, returning
/// `(n-part, n'-part)` of `r`. No factoring is involved.
fn split_off(r: &PosInt, n: &PosInt) -> (PosInt, PosInt) {
    let mut rest = r.clone();
    let mut part = PosInt::one();
    let mut g = rest.gcd(n);
    while !g.is_one() && !rest.is_zero() {
        rest /= &g;
        part *= &g;
        g = rest.gcd(&g);
    }
    (part, rest)
}

/// The `ν`-part of `r`: the largest divisor of `r` whose primes all divide
/// some element of `nu`. Returns 1 when `nu` is empty.
pub fn nu_part(r: &PosInt, nu: &[PosInt]) -> PosInt {
    let mut rest = r.clone();
    let mut part = PosInt::one();
    for n in nu {
        let (p, q) = split_off(&rest, n);
        part *= p;
        rest = q;
    }
    part
}

/// The `ν'`-part of `r`, i.e. `r / nu_part(r, nu)`.
pub fn nu_coprime_part(r: &PosInt, nu: &[PosInt]) -> PosInt {
    let mut rest = r.clone();
    for n in nu {
        rest = split_off(&rest, n).1;
    }
    rest
}

/// Exponent of the prime `p` in `n` together with the cofactor.
pub fn p_adic_split(n: &PosInt, p: &PosInt) -> (u32, PosInt) {
    let mut rest = n.clone();
    let mut k = 0;
    if p <= &PosInt::one() || rest.is_zero() {
        return (0, rest);
    }
    loop {
        let (quot, rem) = rest.div_rem(p);
        if !rem.is_zero() {
            break;
        }
        rest = quot;
        k += 1;
    }
    (k, rest)
}

/// 2-adic valuation of a nonzero integer.
pub fn two_adic(n: &PosInt) -> u64 {
    n.trailing_zeros().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> PosInt {
        PosInt::from(n)
    }

    #[test]
    fn gcd_lcm_examples() {
        assert_eq!(gcd(&big(63), &big(511)), big(7));
        assert_eq!(gcd(&big(10), &big(26)), big(2));
        assert_eq!(gcd(&big(97), &big(97)), big(97));
        assert_eq!(lcm(&big(4), &big(6)), big(12));
        assert_eq!(lcm(&big(4), &big(6)) * gcd(&big(4), &big(6)), big(24));
    }

    #[test]
    fn nu_parts() {
        assert_eq!(nu_part(&big(360), &[big(6)]), big(72));
        assert_eq!(nu_coprime_part(&big(35), &[big(5)]), big(7));
        assert_eq!(nu_part(&big(1001), &[big(1001)]), big(1001));
        assert_eq!(nu_part(&big(1001), &[]), big(1));
        assert_eq!(nu_coprime_part(&big(1001), &[]), big(1001));
        assert_eq!(nu_part(&big(2 * 27 * 25 * 7), &[big(6), big(35)]), big(2 * 27 * 25 * 7));
        assert_eq!(nu_part(&big(2 * 27 * 25 * 7), &[big(9), big(4)]), big(54));
    }

    #[test]
    fn p_adic() {
        assert_eq!(p_adic_split(&big(96), &big(2)), (5, big(3)));
        assert_eq!(p_adic_split(&big(7), &big(3)), (0, big(7)));
        assert_eq!(two_adic(&big(40)), 3);
    }
}
