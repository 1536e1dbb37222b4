use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{Recognizer, Trail};
use crate::arith::{sieve_primes, PosInt};
use crate::atomic::{ceil_ln_term, prime_graph_restricted};
use crate::spectra::{alt_distinguisher, alt_mu, alt_prime_graph, omega_contains, alt_cost_u64, AltMembership, GroupName, MinSpec};

const STAGE: &str = "alternating";

/// Smallest admissible prime bound.
const MIN_PRIME_BOUND: u64 = 810;

fn tau_part_is_whole(a: &PosInt, tau: &[u64]) -> bool {
    if let Some(mut rest) = a.to_u64() {
        for &p in tau {
            while rest % p == 0 {
                rest /= p;
            }
            if rest == 1 {
                return true;
            }
        }
        return rest == 1;
    }
    let mut rest = a.clone();
    for &p in tau {
        let p = PosInt::from(p);
        loop {
            let (q, r) = rest.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            rest = q;
        }
        if rest.is_one() {
            return true;
        }
    }
    rest.is_one()
}

impl Recognizer {
    pub fn recognize_alternating(&self, mu: &MinSpec, trail: &mut Trail) -> Option<GroupName> {
        let max = mu.max()?;
        let bound = ceil_ln_term(max).max(MIN_PRIME_BOUND);
        // longest prefix of the primes up to the bound that all occur in M
        let mut tau = Vec::new();
        for p in sieve_primes(bound) {
            if !omega_contains(mu, &PosInt::from(p)) {
                break;
            }
            tau.push(p);
        }
        let Some(&t) = tau.last() else {
            trail.note(STAGE, "rejected: 2 divides no element");
            return None;
        };
        if t < 5 {
            trail.note(STAGE, format!("rejected: prime prefix ends at {t} < 5"));
            return None;
        }
        if let Some(a) = mu.iter().find(|a| !tau_part_is_whole(a, &tau)) {
            trail.note(STAGE, format!("rejected: {a} has a prime outside the prefix up to {t}"));
            return None;
        }
        // ω(A_n) grows with n, so the largest degree whose distinguisher
        // occurs is the only candidate
        let n = (t + 1..2 * t)
            .rev()
            .find(|&d| omega_contains(mu, &alt_distinguisher(d - 1)))
            .unwrap_or(t);
        trail.note(STAGE, format!("prime prefix up to {t} (bound {bound}), candidate degree {n}"));
        if prime_graph_restricted(mu, &tau) != alt_prime_graph(n) {
            trail.note(STAGE, format!("rejected: prime graph differs from that of A{n}"));
            return None;
        }
        if tau == [2, 3, 5, 7] && (7..=10).contains(&n) {
            if *mu != alt_mu(n) {
                trail.note(STAGE, format!("rejected: pi = {{2,3,5,7}} and mu differs from mu(A{n})"));
                return None;
            }
            trail.note(STAGE, format!("pi = {{2,3,5,7}}: mu equals mu(A{n})"));
        }
        let member = AltMembership::new(n);
        let primes = sieve_primes(n);
        for a in mu.iter() {
            let Some(pps) = member.parts(a).filter(|pps| alt_cost_u64(pps) <= n) else {
                trail.note(STAGE, format!("rejected: {a} is not an element order of A{n}"));
                return None;
            };
            // elements of μ(A_n) admit no prime multiple inside ω(A_n)
            if primes.iter().any(|&r| AltMembership::cost_times_prime(&pps, r) <= n) {
                trail.note(STAGE, format!("rejected: {a} is not maximal in the spectrum of A{n}"));
                return None;
            }
        }
        trail.note(STAGE, format!("confirmed A{n}"));
        Some(GroupName::Alternating { n: n as u32 })
    }
}
