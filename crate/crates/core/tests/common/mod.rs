#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectre_core::oracle::{lcm_form_oracle, TupleForm};
use spectre_core::spectra::{classical_lcm_form_check, LcmCase, Parity};
use spectre_core::{PosInt, PrimePower};

pub const LCM_LIMIT: u128 = 1_000_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn factor_small(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Values worth testing for an lcm form: every `p^m · d` up to `limit`
/// with `d` dividing the lcm of all admissible terms, plus random values.
pub fn lcm_candidates(p: u64, q: u64, n: u64, form: TupleForm, limit: u128, extra: usize, seed: u64) -> Vec<u128> {
    let weight = if matches!(form, TupleForm::Quadratic) { 2 } else { 1 };
    let mut primes: std::collections::BTreeMap<u128, u32> = Default::default();
    for x in 1..=n / weight {
        let qx = (q as u128).pow(x as u32);
        for t in [qx - 1, qx + 1] {
            for (r, e) in factor_small(t) {
                let slot = primes.entry(r).or_default();
                *slot = (*slot).max(e);
            }
        }
    }
    primes.remove(&(p as u128));
    let mut divisors: BTreeSet<u128> = BTreeSet::from([1]);
    for (&r, &e) in &primes {
        let mut next = BTreeSet::new();
        for &d in &divisors {
            let mut v = d;
            next.insert(v);
            for _ in 0..e {
                v *= r;
                if v > limit {
                    break;
                }
                next.insert(v);
            }
        }
        divisors = next;
    }
    let mut out = BTreeSet::new();
    for &d in &divisors {
        let mut v = d;
        while v <= limit {
            out.insert(v);
            v *= p as u128;
        }
    }
    let mut r = rng(seed);
    for _ in 0..extra {
        out.insert(r.gen_range(1..=limit));
    }
    out.into_iter().collect()
}

/// Compares the lcm-form checker with the tuple oracle for q ∈ {2, 3, 4, 5},
/// n ≤ 8, every case and parity. Returns the count and the mismatches.
pub fn lcm_mismatches(extra: usize) -> (usize, Vec<String>) {
    let mut bad = Vec::new();
    let mut total = 0;
    for (p, k) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1)] {
        let q = p.pow(k);
        let pq = PrimePower { p: PosInt::from(p), k };
        for n in 1..=8u64 {
            for form in [TupleForm::Linear { epsilon: 1 }, TupleForm::Linear { epsilon: -1 }, TupleForm::Quadratic] {
                let table = lcm_form_oracle(p, q, n, form, LCM_LIMIT);
                for a in lcm_candidates(p, q, n, form, LCM_LIMIT, extra, n * 31 + q) {
                    let av = PosInt::from(a);
                    let got = match form {
                        TupleForm::Linear { epsilon } => vec![(
                            classical_lcm_form_check(&av, &pq, n, LcmCase::Linear { epsilon }),
                            table.contains_key(&a),
                        )],
                        TupleForm::Quadratic => {
                            let bits = table.get(&a).copied().unwrap_or(0);
                            vec![
                                (classical_lcm_form_check(&av, &pq, n, LcmCase::Quadratic { parity: None }), bits != 0),
                                (classical_lcm_form_check(&av, &pq, n, LcmCase::Quadratic { parity: Some(Parity::Even) }), bits & 1 != 0),
                                (classical_lcm_form_check(&av, &pq, n, LcmCase::Quadratic { parity: Some(Parity::Odd) }), bits & 2 != 0),
                            ]
                        }
                    };
                    for (i, (c, o)) in got.into_iter().enumerate() {
                        total += 1;
                        if c != o {
                            bad.push(format!("q={q} n={n} {form:?} variant {i} A={a}: checker {c} oracle {o}"));
                        }
                    }
                }
            }
        }
    }
    (total, bad)
}
