//! Brute-force reference computations.
//!
//! Everything here works straight from definitions by enumeration and
//! shares no arithmetic with the code it is used to check, apart from the
//! big-integer type itself. All of it is exponential and guarded by size
//! limits.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::arith::PosInt;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::MinSpec;

pub use crate::atomic::atomic_divisors_bruteforce as atoms_oracle;

/// Largest degree accepted by the partition oracles.
pub const PARTITION_LIMIT: u64 = 60;
/// Largest field order accepted by the matrix oracle.
pub const PSL2_LIMIT: u64 = 32;
/// Largest graph accepted by the exhaustive graph oracles.
pub const GRAPH_LIMIT: usize = 12;

/// Partitions of `n` in reverse lexicographic order, parts descending.
#[derive(Debug, Clone)]
pub struct PartitionIterator {
    n: u64,
    current: Option<Vec<u64>>,
    done: bool,
}

impl PartitionIterator {
    pub fn new(n: u64) -> Self {
        PartitionIterator {
            n,
            current: None,
            done: false,
        }
    }
}

impl Iterator for PartitionIterator {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let Some(mut p) = self.current.take() else {
            let first = if self.n == 0 { Vec::new() } else { vec![self.n] };
            self.current = Some(first.clone());
            return Some(first);
        };
        // drop trailing ones, decrement the last part above one, refill
        let mut ones = 0;
        while p.last() == Some(&1) {
            p.pop();
            ones += 1;
        }
        let Some(k) = p.pop() else {
            self.done = true;
            return None;
        };
        let k = k - 1;
        let mut rest = ones + 1;
        p.push(k);
        while rest > 0 {
            let part = rest.min(k);
            p.push(part);
            rest -= part;
        }
        self.current = Some(p.clone());
        Some(p)
    }
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}

/// Keeps the divisibility-maximal values.
fn antichain(values: BTreeSet<u64>) -> MinSpec {
    let v: Vec<u64> = values.into_iter().collect();
    let keep: Vec<PosInt> = v
        .iter()
        .filter(|&&a| !v.iter().any(|&b| b != a && b % a == 0))
        .map(|&a| PosInt::from(a))
        .collect();
    MinSpec::new(keep)
}

fn partition_orders(n: u64, even_only: bool) -> Result<MinSpec> {
    if n > PARTITION_LIMIT {
        return Err(Error::SizeGuard(format!(
            "partition oracle limited to degree {PARTITION_LIMIT}, got {n}"
        )));
    }
    let mut orders = BTreeSet::new();
    for p in PartitionIterator::new(n) {
        let moved: u64 = p.iter().map(|&k| k - 1).sum();
        if even_only && moved % 2 == 1 {
            continue;
        }
        orders.insert(p.iter().fold(1, |acc, &k| lcm_u64(acc, k)));
    }
    Ok(antichain(orders))
}

/// `μ(A_n)` by enumerating cycle types.
pub fn alt_mu_oracle(n: u64) -> Result<MinSpec> {
    partition_orders(n, true)
}

/// `μ(S_n)` by enumerating cycle types.
pub fn sym_mu_oracle(n: u64) -> Result<MinSpec> {
    partition_orders(n, false)
}

/// A finite field `GF(p^k)` with elements encoded as base-`p` digit
/// vectors packed into an integer.
struct SmallField {
    q: usize,
    mul: Vec<u32>,
    add: Vec<u32>,
    neg: Vec<u32>,
}

/// Monic irreducible polynomials, coefficients low to high without the
/// leading one.
fn modulus(p: u64, k: u32) -> Option<Vec<u64>> {
    Some(match (p, k) {
        (_, 1) => vec![0],
        (2, 2) => vec![1, 1],
        (2, 3) => vec![1, 1, 0],
        (2, 4) => vec![1, 1, 0, 0],
        (2, 5) => vec![1, 0, 1, 0, 0],
        (3, 2) => vec![1, 0],
        (3, 3) => vec![1, 2, 0],
        (5, 2) => vec![2, 0],
        _ => return None,
    })
}

impl SmallField {
    fn new(q: u64) -> Option<Self> {
        let (p, k) = (2..=q).find(|p| q.is_multiple_of(*p)).map(|p| {
            let mut k = 0;
            let mut r = q;
            while r.is_multiple_of(p) {
                r /= p;
                k += 1;
            }
            (p, if r == 1 { k } else { 0 })
        })?;
        if k == 0 {
            return None;
        }
        let f = modulus(p, k)?;
        let k = k as usize;
        let q = q as usize;
        let digits = |mut x: usize| -> Vec<u64> {
            (0..k)
                .map(|_| {
                    let d = (x as u64) % p;
                    x /= p as usize;
                    d
                })
                .collect()
        };
        let pack = |d: &[u64]| -> u32 { d.iter().rev().fold(0u64, |acc, &x| acc * p + x) as u32 };
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        let mut neg = vec![0; q];
        for a in 0..q {
            let da = digits(a);
            neg[a] = pack(&da.iter().map(|&x| (p - x) % p).collect::<Vec<_>>());
            for b in 0..q {
                let db = digits(b);
                let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = pack(&s);
                // schoolbook product, then reduce by x^k = -f
                let mut prod = vec![0u64; 2 * k];
                for i in 0..k {
                    for j in 0..k {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                for deg in (k..2 * k).rev() {
                    let c = prod[deg];
                    if c != 0 {
                        prod[deg] = 0;
                        for (i, &fi) in f.iter().enumerate() {
                            prod[deg - k + i] = (prod[deg - k + i] + (p - fi) * c) % p;
                        }
                    }
                }
                mul[a * q + b] = pack(&prod[..k]);
            }
        }
        Some(SmallField {
            q,
            mul,
            add,
            neg,
        })
    }

    fn m(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.q + b as usize]
    }

    fn a(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.q + b as usize]
    }

    fn sub(&self, a: u32, b: u32) -> u32 {
        self.a(a, self.neg[b as usize])
    }
}

type Mat = [u32; 4];

fn mat_mul(f: &SmallField, x: &Mat, y: &Mat) -> Mat {
    [
        f.a(f.m(x[0], y[0]), f.m(x[1], y[2])),
        f.a(f.m(x[0], y[1]), f.m(x[1], y[3])),
        f.a(f.m(x[2], y[0]), f.m(x[3], y[2])),
        f.a(f.m(x[2], y[1]), f.m(x[3], y[3])),
    ]
}

/// `μ(PSL_2(q))` by enumerating `SL_2(q)` and computing orders modulo `±1`.
pub fn psl2_mu_oracle(q: u64) -> Result<MinSpec> {
    if q > PSL2_LIMIT {
        return Err(Error::SizeGuard(format!(
            "matrix oracle limited to q <= {PSL2_LIMIT}, got {q}"
        )));
    }
    let f = SmallField::new(q).ok_or_else(|| {
        Error::Precondition(format!("{q} is not a prime power with a known field"))
    })?;
    let qq = f.q as u32;
    let one = 1u32;
    let minus = f.neg[1];
    let mut orders = BTreeSet::new();
    for a in 0..qq {
        for b in 0..qq {
            for c in 0..qq {
                for d in 0..qq {
                    if f.sub(f.m(a, d), f.m(b, c)) != one {
                        continue;
                    }
                    let x = [a, b, c, d];
                    let mut y = x;
                    let mut e = 1u64;
                    while !(y[1] == 0 && y[2] == 0 && y[0] == y[3] && (y[0] == one || y[0] == minus))
                    {
                        y = mat_mul(&f, &y, &x);
                        e += 1;
                    }
                    orders.insert(e);
                }
            }
        }
    }
    Ok(antichain(orders))
}

/// The part of `a^i - 1` built from primes dividing no `a^j - 1` with
/// `j < i`, found by stripping common factors with repeated gcds.
pub fn primitive_divisor_oracle(a: i64, i: u32) -> Result<PosInt> {
    if a.abs() <= 1 || i == 0 {
        return Err(Error::Precondition("need |a| > 1 and i >= 1".into()));
    }
    let base = BigInt::from(a);
    let val = |e: u32| -> PosInt {
        let v: BigInt = num_traits::pow(base.clone(), e as usize) - 1;
        v.abs().to_biguint().unwrap()
    };
    let mut rest = val(i);
    for j in 1..i {
        let other = val(j);
        let mut g = rest.gcd(&other);
        while !g.is_one() {
            rest /= &g;
            g = rest.gcd(&g);
        }
    }
    Ok(rest)
}

fn guard(g: &Graph) -> Result<()> {
    if g.order() > GRAPH_LIMIT {
        return Err(Error::SizeGuard(format!(
            "exhaustive graph search limited to {GRAPH_LIMIT} vertices, got {}",
            g.order()
        )));
    }
    Ok(())
}

fn independent_mask(g: &Graph, mask: u32) -> bool {
    let n = g.order();
    (0..n).all(|a| mask >> a & 1 == 0 || (a + 1..n).all(|b| mask >> b & 1 == 0 || !g.adjacent(a, b)))
}

fn clique_mask(g: &Graph, mask: u32) -> bool {
    let n = g.order();
    (0..n).all(|a| mask >> a & 1 == 0 || (a + 1..n).all(|b| mask >> b & 1 == 0 || g.adjacent(a, b)))
}

/// Whether some subset is a clique with an independent complement.
pub fn split_oracle(g: &Graph) -> Result<bool> {
    guard(g)?;
    let n = g.order();
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    Ok((0..=full).any(|k| clique_mask(g, k) && independent_mask(g, full & !k)))
}

/// Size of a maximum independent set.
pub fn coclique_oracle(g: &Graph) -> Result<usize> {
    guard(g)?;
    let n = g.order();
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    Ok((0..=full)
        .filter(|&m| independent_mask(g, m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// Which lcm form the tuple oracle enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TupleForm {
    /// Terms `|(εq)^x - 1|`, exponent sum plus `⌊p^{m-1}⌋` at most `n`.
    Linear { epsilon: i8 },
    /// Terms `q^x ± 1`, twice the exponent sum plus `⌊p^{m-1}⌋` at most `n`.
    Quadratic,
}

/// Every value `A ≤ limit` of the lcm form, mapped to the set of parities
/// of the number of `+1` terms over all presentations (bit 0 even, bit 1
/// odd; the linear form always reports even).
pub fn lcm_form_oracle(p: u64, q: u64, n: u64, form: TupleForm, limit: u128) -> BTreeMap<u128, u8> {
    let term = |x: u64, plus: bool| -> u128 {
        let qx = (q as u128).pow(x as u32);
        match form {
            TupleForm::Linear { epsilon } => {
                if epsilon < 0 && x % 2 == 1 {
                    qx + 1
                } else {
                    qx - 1
                }
            }
            TupleForm::Quadratic => {
                if plus {
                    qx + 1
                } else {
                    qx - 1
                }
            }
        }
    };
    let weight = match form {
        TupleForm::Linear { .. } => 1,
        TupleForm::Quadratic => 2,
    };
    let signs: &[bool] = match form {
        TupleForm::Linear { .. } => &[false],
        TupleForm::Quadratic => &[false, true],
    };
    // terms as (x, plus), enumerated as multisets in a fixed order
    let mut kinds = Vec::new();
    for x in 1..=n {
        for &s in signs {
            kinds.push((x, s));
        }
    }
    let mut lcms: BTreeMap<(u128, u64), u8> = BTreeMap::new();
    #[allow(clippy::too_many_arguments)]
    fn walk(
        kinds: &[(u64, bool)],
        start: usize,
        budget: u64,
        weight: u64,
        value: u128,
        plus: u32,
        term: &dyn Fn(u64, bool) -> u128,
        cap: u128,
        out: &mut BTreeMap<(u128, u64), u8>,
        used: u64,
    ) {
        *out.entry((value, used)).or_default() |= 1 << (plus % 2);
        for i in start..kinds.len() {
            let (x, s) = kinds[i];
            if weight * x > budget {
                continue;
            }
            let t = term(x, s);
            let g = value.gcd(&t);
            let next = value / g * t;
            if next > cap {
                // values only grow along a branch; a too-large lcm is useless
                // unless a later duplicate only flips parity, which needs the
                // same value
                continue;
            }
            walk(kinds, i, budget - weight * x, weight, next, plus + s as u32, term, cap, out, used + weight * x);
        }
    }
    walk(&kinds, 0, n, weight, 1, 0, &term, limit, &mut lcms, 0);
    let mut out: BTreeMap<u128, u8> = BTreeMap::new();
    for ((value, used), par) in lcms {
        // p-part: m = 0 costs nothing, m >= 1 costs p^{m-1}
        *out.entry(value).or_default() |= par;
        let mut pm: u128 = 1;
        let mut cost: u64 = 1;
        loop {
            pm *= p as u128;
            if used + cost > n || value * pm > limit {
                break;
            }
            *out.entry(value * pm).or_default() |= par;
            cost = match cost.checked_mul(p) {
                Some(c) => c,
                None => break,
            };
        }
    }
    out.retain(|&v, _| v <= limit);
    out
}
