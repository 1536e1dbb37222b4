//! Atomic divisors of a set of integers and the graph on them.
//!
//! For `S ⊆ M` let `v(S)` be the largest integer dividing every element of
//! `S` and coprime to every element of `M ∖ S`. The atomic divisors `V(M)`
//! are the values `v(S) > 1`. They are pairwise coprime and every prime
//! dividing an element of `M` divides exactly one of them.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{gcd, nu_coprime_part, nu_part, PosInt};
use crate::error::{Error, Result};
use crate::graph::{Graph, LabeledGraph};
use crate::spectra::{omega_contains, MinSpec};

/// Largest input accepted by [`atomic_divisors_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Atom {
    pub value: PosInt,
    /// Indices (into the source list) of the elements this atom divides.
    pub support: Vec<usize>,
}

/// `V(M)`, sorted ascending by value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AtomSet {
    pub atoms: Vec<Atom>,
}

impl AtomSet {
    fn from_values(mut values: Vec<PosInt>, source: &[PosInt]) -> Self {
        values.sort();
        values.dedup();
        let atoms = values
            .into_iter()
            .map(|value| {
                let support = source
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.is_multiple_of(&value))
                    .map(|(i, _)| i)
                    .collect();
                Atom { value, support }
            })
            .collect();
        AtomSet { atoms }
    }

    pub fn values(&self) -> Vec<PosInt> {
        self.atoms.iter().map(|a| a.value.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Index of the atom sharing a prime with `d`, if any.
    pub fn atom_of(&self, d: &PosInt) -> Option<usize> {
        self.atoms.iter().position(|a| !gcd(&a.value, d).is_one())
    }
}

/// One step of the fold: `V(V ∪ {a}) = {(v,a), (v)_{a'} : v ∈ V} ∪ {(a)_{V'}}`
/// with units dropped.
fn absorb(current: &[PosInt], a: &PosInt) -> Vec<PosInt> {
    let mut next = Vec::with_capacity(current.len() + 2);
    for v in current {
        let g = gcd(v, a);
        let rest = nu_coprime_part(v, std::slice::from_ref(a));
        if !g.is_one() {
            next.push(g);
        }
        if !rest.is_one() {
            next.push(rest);
        }
    }
    let fresh = nu_coprime_part(a, current);
    if !fresh.is_one() {
        next.push(fresh);
    }
    next
}

/// Builds `V(elements)` one element at a time, in the given order. Fails
/// with [`Error::TooMany`] as soon as more than `cap` atoms are present.
pub fn atomic_divisors_incremental_ordered(elements: &[PosInt], cap: usize) -> Result<AtomSet> {
    let mut current: Vec<PosInt> = Vec::new();
    for (stage, a) in elements.iter().enumerate() {
        if a.is_zero() {
            return Err(Error::Precondition("zero is not a valid element".into()));
        }
        current = absorb(&current, a);
        if current.len() > cap {
            return Err(Error::TooMany { cap, stage });
        }
    }
    Ok(AtomSet::from_values(current, elements))
}

pub fn atomic_divisors_incremental(mu: &MinSpec, cap: usize) -> Result<AtomSet> {
    atomic_divisors_incremental_ordered(mu.elements(), cap)
}

/// Sizes `|V(S_1)|, |V(S_2)|, …` along the fold, for diagnostics.
pub fn incremental_sizes(elements: &[PosInt]) -> Vec<usize> {
    let mut current: Vec<PosInt> = Vec::new();
    elements
        .iter()
        .map(|a| {
            current = absorb(&current, a);
            current.len()
        })
        .collect()
}

/// `V(M)` straight from the definition, over all nonempty subsets.
pub fn atomic_divisors_bruteforce(elements: &[PosInt]) -> Result<AtomSet> {
    let m = elements.len();
    if m > BRUTEFORCE_LIMIT {
        return Err(Error::SizeGuard(format!(
            "subset enumeration needs at most {BRUTEFORCE_LIMIT} elements, got {m}"
        )));
    }
    let mut values = Vec::new();
    for mask in 1u32..(1 << m) {
        let mut g = PosInt::zero();
        let mut outside = Vec::new();
        for (i, a) in elements.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g = g.gcd(a);
            } else {
                outside.push(a.clone());
            }
        }
        // strip every prime of the complement
        for b in &outside {
            let mut h = g.gcd(b);
            while !h.is_one() {
                g /= &h;
                h = g.gcd(&h);
            }
        }
        if g > PosInt::one() {
            values.push(g);
        }
    }
    Ok(AtomSet::from_values(values, elements))
}

/// `AD(M)`: atoms adjacent when their product divides an element of `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdGraph {
    pub atoms: AtomSet,
    pub graph: LabeledGraph<PosInt>,
}

impl AdGraph {
    pub fn order(&self) -> usize {
        self.atoms.len()
    }

    pub fn to_dot(&self, name: &str) -> String {
        self.graph.to_dot(name)
    }
}

pub fn build_ad_graph(mu: &MinSpec, cap: usize) -> Result<AdGraph> {
    let atoms = atomic_divisors_incremental(mu, cap)?;
    Ok(ad_graph_on(mu, atoms))
}

pub(crate) fn ad_graph_on(mu: &MinSpec, atoms: AtomSet) -> AdGraph {
    let labels = atoms.values();
    let mut graph = Graph::new(labels.len());
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            // both must share an element of M before the product can divide one
            let shared = atoms.atoms[i]
                .support
                .iter()
                .any(|k| atoms.atoms[j].support.binary_search(k).is_ok());
            if shared && omega_contains(mu, &(&labels[i] * &labels[j])) {
                graph.add_edge(i, j);
            }
        }
    }
    AdGraph {
        atoms,
        graph: LabeledGraph { labels, graph },
    }
}

/// Prime graph of `ω(M)` on the given primes; primes dividing no element
/// of `M` are dropped.
pub fn prime_graph_restricted(mu: &MinSpec, primes: &[u64]) -> LabeledGraph<u64> {
    let mut labels: Vec<u64> = primes
        .iter()
        .copied()
        .filter(|&p| omega_contains(mu, &PosInt::from(p)))
        .collect();
    labels.sort_unstable();
    labels.dedup();
    let mut graph = Graph::new(labels.len());
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            let pr = PosInt::from(labels[i]) * labels[j];
            if omega_contains(mu, &pr) {
                graph.add_edge(i, j);
            }
        }
    }
    LabeledGraph { labels, graph }
}

/// The `ν`-part of `a` where `ν` is the atom list; used by callers that
/// need to check that an element is supported on known atoms.
pub fn atom_part(a: &PosInt, atoms: &AtomSet) -> PosInt {
    nu_part(a, &atoms.values())
}

// Fixed-point logarithms for exact ceilings of the size cap.

fn atanh_inv_fixed(num: &BigInt, den: &BigInt, bits: u32) -> BigInt {
    // atanh(num/den) scaled by 2^bits, series sum z^(2k+1)/(2k+1)
    let one = BigInt::one() << bits;
    let z = (&one * num) / den;
    let z2 = (&z * &z) >> bits;
    let mut term = z.clone();
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !term.is_zero() {
        sum += &term / BigInt::from(2 * k + 1);
        term = (&term * &z2) >> bits;
        k += 1;
    }
    sum
}

/// `ln(x) · 2^bits`, accurate to within a few hundred units in the last
/// place.
fn ln_fixed(x: &BigUint, bits: u32) -> BigInt {
    let e = x.bits() - 1;
    let ln2 = atanh_inv_fixed(&BigInt::one(), &BigInt::from(3), bits) * 2;
    // y = x / 2^e in [1, 2), ln y = 2 atanh((y - 1) / (y + 1))
    let y_num = BigInt::from(x.clone());
    let y_den = BigInt::one() << e;
    let ln_y = atanh_inv_fixed(&(&y_num - &y_den), &(&y_num + &y_den), bits) * 2;
    ln2 * BigInt::from(e) + ln_y
}

/// Ceiling of a fixed-point value known to within `err` units.
fn exact_ceil(v: &BigInt, err: &BigInt, bits: u32) -> Option<BigInt> {
    let ceil = |x: BigInt| -> BigInt {
        let (q, r) = x.div_mod_floor(&(BigInt::one() << bits));
        if r.is_positive() {
            q + 1
        } else {
            q
        }
    };
    let lo = ceil(v - err);
    let hi = ceil(v + err);
    (lo == hi).then_some(lo)
}

/// `⌈(ln 2m / 0.99)²⌉`.
pub(crate) fn ceil_ln_term(m: &BigUint) -> u64 {
    let two_m = m * 2u32;
    let mut bits = 128;
    loop {
        let l = ln_fixed(&two_m, bits);
        // (l / 0.99)^2 = l^2 · 10000 / 9801
        let v = ((&l * &l) >> bits) * 10_000 / 9_801;
        let err = BigInt::from(1u64 << 20) * BigInt::from(two_m.bits() + 1).pow(2);
        if let Some(c) = exact_ceil(&v, &err, bits) {
            return c.to_u64().unwrap_or(u64::MAX);
        }
        bits *= 2;
    }
}

fn ceil_log_term(m: &BigUint) -> u64 {
    let e = m.bits() - 1;
    if m.count_ones() == 1 {
        return 2 * (e + 3);
    }
    let mut bits = 128;
    loop {
        let l = ln_fixed(m, bits);
        let ln2 = ln_fixed(&BigUint::from(2u32), bits);
        let v = ((l + ln2.clone() * 3) << bits) / ln2 * 2;
        let err = BigInt::from(1u64 << 20) * BigInt::from(m.bits() + 1);
        if let Some(c) = exact_ceil(&v, &err, bits) {
            return c.to_u64().unwrap_or(u64::MAX);
        }
        bits *= 2;
    }
}

/// `⌈max(140, (ln 2M / 0.99)², 2(log₂ M + 3))⌉`.
pub fn size_cap_c(m_max: &PosInt) -> u64 {
    if m_max.is_zero() {
        return 140;
    }
    140.max(ceil_ln_term(m_max)).max(ceil_log_term(m_max))
}

/// `⌈2(log₂ M + 3)⌉`, the bound for classical groups alone.
pub fn size_cap_classical(m_max: &PosInt) -> u64 {
    if m_max.is_zero() {
        return 6;
    }
    ceil_log_term(m_max)
}
