use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::MinSpec;
use crate::arith::{is_prime_u64, sieve_primes, PosInt};
use crate::graph::{Graph, LabeledGraph};

/// Membership in `ω(A_n)` with the primes up to `n` precomputed.
#[derive(Debug, Clone)]
pub(crate) struct AltMembership {
    n: u64,
    primes: Vec<u64>,
}

impl AltMembership {
    pub(crate) fn new(n: u64) -> Self {
        AltMembership {
            n,
            primes: sieve_primes(n),
        }
    }

    /// The prime-power parts `(p, p^k)` of `a`, or `None` when `a` has a
    /// prime factor above `n`.
    pub(crate) fn parts(&self, a: &PosInt) -> Option<Vec<(u64, u64)>> {
        if a.is_zero() {
            return None;
        }
        if let Some(mut rest) = a.to_u64() {
            let mut out = Vec::new();
            for &p in &self.primes {
                if rest == 1 {
                    break;
                }
                let mut pk = 1;
                while rest % p == 0 {
                    rest /= p;
                    pk *= p;
                }
                if pk > 1 {
                    out.push((p, pk));
                }
            }
            return (rest == 1).then_some(out);
        }
        let mut rest = a.clone();
        let mut out = Vec::new();
        for &p in &self.primes {
            if rest.is_one() {
                break;
            }
            let mut pk: u64 = 1;
            loop {
                let (q, r) = rest.div_rem(&PosInt::from(p));
                if !r.is_zero() {
                    break;
                }
                rest = q;
                pk = pk.saturating_mul(p);
            }
            if pk > 1 {
                out.push((p, pk));
            }
        }
        rest.is_one().then_some(out)
    }

    /// Smallest degree of a permutation of order `a` in an alternating
    /// group, or `None` when `a` has a prime factor above `n`.
    pub(crate) fn cost(&self, a: &PosInt) -> Option<u64> {
        self.parts(a).map(|pps| alt_cost_u64(&pps))
    }

    /// Degree needed for `a·r` given the parts of `a`.
    pub(crate) fn cost_times_prime(pps: &[(u64, u64)], r: u64) -> u64 {
        let base = alt_cost_u64(pps);
        match pps.iter().find(|&&(p, _)| p == r) {
            Some(&(_, pk)) => base - pk + pk.saturating_mul(r),
            None if r == 2 => base + 4,
            None => base + r,
        }
    }

    pub(crate) fn contains(&self, a: &PosInt) -> bool {
        self.cost(a).is_some_and(|c| c <= self.n)
    }
}

/// `a ∈ ω(A_n)`: the prime-power parts of `a` must fit into `n` points, with
/// two extra points when `a` is even to make the permutation even.
pub fn alt_contains(a: &PosInt, n: u64) -> bool {
    AltMembership::new(n).contains(a)
}

pub(crate) fn alt_cost_u64(pps: &[(u64, u64)]) -> u64 {
    let sum: u64 = pps.iter().fold(0u64, |s, &(_, v)| s.saturating_add(v));
    if pps.iter().any(|&(p, _)| p == 2) {
        sum.saturating_add(2)
    } else {
        sum
    }
}

/// Searches for distinct prime powers of total cost exactly `target`,
/// trying at most `width` of the largest admissible primes at each step.
fn exact_cost(
    target: u64,
    primes: &[u64],
    width: usize,
    chosen: &mut Vec<(u64, u64)>,
) -> bool {
    if target == 0 {
        return true;
    }
    let mut tried = 0;
    for (i, &p) in primes.iter().enumerate().rev() {
        if p > target {
            continue;
        }
        if tried == width {
            break;
        }
        tried += 1;
        let extra = if p == 2 { 2 } else { 0 };
        let mut powers = Vec::new();
        let mut v = p;
        while v + extra <= target {
            powers.push(v);
            v = match v.checked_mul(p) {
                Some(x) => x,
                None => break,
            };
        }
        for &v in powers.iter().rev() {
            chosen.push((p, v));
            if exact_cost(target - v - extra, &primes[..i], width, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// An element of `ω(A_{n+1}) ∖ ω(A_n)`.
///
/// The result is always checked against [`alt_contains`] before it is
/// returned.
pub fn alt_distinguisher(n: u64) -> PosInt {
    assert!(n >= 2, "degree must be at least 2");
    let base = [3u64, 2, 5, 4, 7];
    let m = AltMembership::new(n + 1);
    let below = AltMembership::new(n);
    let verified = |a: PosInt| (m.contains(&a) && !below.contains(&a)).then_some(a);
    if n <= 6 {
        if let Some(a) = verified(PosInt::from(base[(n - 2) as usize])) {
            return a;
        }
    }
    if is_prime_u64(n + 1) {
        if let Some(a) = verified(PosInt::from(n + 1)) {
            return a;
        }
    }
    let primes = sieve_primes(n + 1);
    for width in [3, usize::MAX] {
        let mut chosen = Vec::new();
        if exact_cost(n + 1, &primes, width, &mut chosen) {
            debug_assert_eq!(alt_cost_u64(&chosen), n + 1);
            let a: PosInt = chosen.iter().map(|&(_, v)| PosInt::from(v)).product();
            if let Some(a) = verified(a) {
                return a;
            }
        }
    }
    unreachable!("every degree above 1 admits an element of exact cost n + 1")
}

/// Prime graph of `A_n`: primes up to `n`, adjacent when their product lies
/// in `ω(A_n)`.
pub fn alt_prime_graph(n: u64) -> LabeledGraph<u64> {
    let m = AltMembership::new(n);
    let labels = m.primes.clone();
    let mut graph = Graph::new(labels.len());
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            if m.contains(&PosInt::from(labels[i] * labels[j])) {
                graph.add_edge(i, j);
            }
        }
    }
    LabeledGraph { labels, graph }
}

fn saturated(
    n: u64,
    primes: &[u64],
    idx: usize,
    used: u64,
    even: bool,
    acc: &mut Vec<u64>,
    out: &mut Vec<PosInt>,
) {
    if idx == primes.len() {
        // keep only choices where no further prime could still be added
        let fits = |p: u64| used + p + if p == 2 && !even { 2 } else { 0 } <= n;
        let open = primes
            .iter()
            .any(|&p| fits(p) && !acc.iter().any(|&v| v % p == 0));
        if !open {
            out.push(acc.iter().map(|&v| PosInt::from(v)).product());
        }
        return;
    }
    let p = primes[idx];
    saturated(n, primes, idx + 1, used, even, acc, out);
    let extra = if p == 2 { 2 } else { 0 };
    let mut v = p;
    while used + v + extra <= n {
        acc.push(v);
        saturated(n, primes, idx + 1, used + v + extra, even || p == 2, acc, out);
        acc.pop();
        v *= p;
    }
}

/// `μ(A_n)` from the prime-power support description. Practical for small
/// degrees only; the number of supports grows quickly.
pub fn alt_mu(n: u64) -> MinSpec {
    if n < 3 {
        return MinSpec::new([PosInt::one()]);
    }
    let primes = sieve_primes(n);
    let mut out = Vec::new();
    saturated(n, &primes, 0, 0, false, &mut Vec::new(), &mut out);
    MinSpec::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn b(x: u64) -> PosInt {
        PosInt::from(x)
    }

    #[test]
    fn membership_examples() {
        assert!(alt_contains(&b(105), 15));
        assert!(!alt_contains(&b(105), 14));
        assert!(alt_contains(&b(1), 1));
        assert!(alt_contains(&b(4), 6));
        assert!(!alt_contains(&b(4), 5));
        assert!(!alt_contains(&b(6), 5));
        assert!(alt_contains(&b(6), 7));
        assert!(!alt_contains(&b(11), 10));
    }

    #[test]
    fn distinguisher_examples() {
        assert_eq!(alt_distinguisher(2), b(3));
        assert_eq!(alt_distinguisher(6), b(7));
        assert_eq!(alt_distinguisher(12), b(13));
        for n in 2..=300 {
            let a = alt_distinguisher(n);
            assert!(alt_contains(&a, n + 1) && !alt_contains(&a, n), "n = {n}");
        }
    }

    #[test]
    fn prime_graph_examples() {
        let g7 = alt_prime_graph(7);
        assert!(g7.adjacent_labels(&2, &3));
        assert!(!alt_prime_graph(6).adjacent_labels(&2, &3));
        assert!(!alt_prime_graph(5).adjacent_labels(&3, &5));
        assert_eq!(alt_prime_graph(5).labels, vec![2, 3, 5]);
    }

    #[test]
    fn small_mu() {
        let vals = |m: MinSpec| -> Vec<u64> { m.iter().map(|x| x.to_u64().unwrap()).collect() };
        assert_eq!(vals(alt_mu(5)), vec![2, 3, 5]);
        assert_eq!(vals(alt_mu(6)), vec![3, 4, 5]);
        assert_eq!(vals(alt_mu(7)), vec![4, 5, 6, 7]);
    }
}
