use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::Family;
use crate::arith::{
    gcd, lcm, lcm_all, p_adic_split, solve_poly_prime_power, two_adic, IntPoly, PosInt, PrimePower,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn of(k: usize) -> Parity {
        if k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Which lcm form is being tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LcmCase {
    /// `p^m · [(εq)^{n_1} - 1, …]` with `⌊p^{m-1}⌋ + Σ n_i ≤ n`.
    Linear { epsilon: i8 },
    /// `p^m · [q^{n_1} - 1, …, q^{n_k} + 1]` with `⌊p^{m-1}⌋ + 2 Σ n_i ≤ n`,
    /// optionally with a prescribed parity of the number of `+1` terms.
    Quadratic { parity: Option<Parity> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Term {
    value: PosInt,
    x: u64,
    plus: bool,
}

/// Splits off the `p`-part and returns the `p'`-part with the exponent budget
/// left after paying `⌊p^{m-1}⌋`.
fn strip_p(a: &PosInt, p: &PosInt, n: u64) -> Option<(PosInt, u64)> {
    let (m, rest) = p_adic_split(a, p);
    let cost = if m == 0 {
        0
    } else {
        num_traits::pow(p.clone(), (m - 1) as usize).to_u64()?
    };
    (cost <= n).then(|| (rest, n - cost))
}

/// Divisibility-maximal terms; among equal values the smallest exponent wins.
fn maximal_terms(mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort_by(|a, b| b.value.cmp(&a.value).then(a.x.cmp(&b.x)));
    let mut out: Vec<Term> = Vec::new();
    for t in terms {
        if !out.iter().any(|k| k.value.is_multiple_of(&t.value)) {
            out.push(t);
        }
    }
    out
}

fn push_if_divides(terms: &mut Vec<Term>, target: &PosInt, value: PosInt, x: u64, plus: bool) {
    if value > PosInt::one()
        && target.is_multiple_of(&value)
        && !terms.iter().any(|t| t.value == value)
    {
        terms.push(Term { value, x, plus });
    }
}

fn linear_case(a: &PosInt, q: &PosInt, budget: u64, epsilon: i8) -> bool {
    let mut terms = Vec::new();
    let mut qx = PosInt::one();
    for x in 1..=budget {
        qx *= q;
        if &qx - 1u32 > *a {
            break;
        }
        let value = if epsilon < 0 && x % 2 == 1 {
            &qx + 1u32
        } else {
            &qx - 1u32
        };
        push_if_divides(&mut terms, a, value, x, false);
    }
    if lcm_all(terms.iter().map(|t| &t.value)) != *a {
        return false;
    }
    maximal_terms(terms).iter().map(|t| t.x).sum::<u64>() <= budget
}

/// Candidate representations `(exponent sum, number of plus terms, terms)`
/// of `a` with the least exponent sum for each admissible choice of the
/// single even-exponent `-1` term.
fn quadratic_reps(a: &PosInt, q: &PosInt, half: u64) -> Vec<(u64, usize, Vec<Term>)> {
    let alpha = if q.is_even() {
        0
    } else {
        let qq = q * q - 1u32;
        let top = two_adic(&qq);
        let have = two_adic(a);
        (have + 1).saturating_sub(top)
    };
    let reduced = a >> alpha;
    let mut s = Vec::new();
    let mut qx = PosInt::one();
    for x in 1..=half {
        qx *= q;
        if &qx - 1u32 > *a {
            break;
        }
        if x % 2 == 1 {
            push_if_divides(&mut s, &reduced, &qx - 1u32, x, false);
        }
        push_if_divides(&mut s, &reduced, &qx + 1u32, x, true);
    }
    let summarize = |terms: Vec<Term>| -> Option<(u64, usize, Vec<Term>)> {
        (lcm_all(terms.iter().map(|t| &t.value)) == *a).then(|| {
            let sum = terms.iter().map(|t| t.x).sum();
            let plus = terms.iter().filter(|t| t.plus).count();
            (sum, plus, terms)
        })
    };
    if alpha == 0 {
        return summarize(maximal_terms(s)).into_iter().collect();
    }
    let step = 1u64 << alpha;
    let mut reps = Vec::new();
    let mut y = 1;
    while step * y <= half {
        let x = step * y;
        let big = num_traits::pow(q.clone(), x as usize) - 1u32;
        if a.is_multiple_of(&big) {
            let mut terms = s.clone();
            terms.push(Term {
                value: big,
                x,
                plus: false,
            });
            reps.extend(summarize(maximal_terms(terms)));
        }
        y += 2;
    }
    reps
}

fn quadratic_case(a: &PosInt, q: &PosInt, budget: u64, parity: Option<Parity>) -> bool {
    let half = budget / 2;
    let reps = quadratic_reps(a, q, half);
    let Some(best) = reps.iter().map(|r| r.0).min() else {
        return false;
    };
    if best > half {
        return false;
    }
    let Some(want) = parity else { return true };
    // least plus term dividing a, duplicates being allowed
    let mut least_plus = None;
    let mut qy = PosInt::one();
    for y in 1..=half {
        qy *= q;
        if &qy + 1u32 > *a {
            break;
        }
        if a.is_multiple_of(&(&qy + 1u32)) {
            least_plus = Some(y);
            break;
        }
    }
    for (sum, plus, terms) in &reps {
        if *sum > half {
            continue;
        }
        if Parity::of(*plus) == want {
            return true;
        }
        let mergeable = terms.iter().any(|t| {
            t.plus
                && terms.iter().any(|u| !u.plus && u.x == t.x)
                && a.is_multiple_of(&(num_traits::pow(q.clone(), 2 * t.x as usize) - 1u32))
        });
        if mergeable {
            return true;
        }
        if least_plus.is_some_and(|y| sum + y <= half) {
            return true;
        }
    }
    false
}

/// Tests whether `a` has one of the two lcm forms over the field of order
/// `q` within the exponent bound `n`.
pub fn classical_lcm_form_check(a: &PosInt, q: &PrimePower, n: u64, case: LcmCase) -> bool {
    if a.is_zero() {
        return false;
    }
    let qv = q.value();
    let Some((rest, budget)) = strip_p(a, &q.p, n) else {
        return false;
    };
    match case {
        LcmCase::Linear { epsilon } => linear_case(&rest, &qv, budget, epsilon),
        LcmCase::Quadratic { parity } => quadratic_case(&rest, &qv, budget, parity),
    }
}

fn pw(q: &PosInt, e: u32) -> PosInt {
    num_traits::pow(q.clone(), e as usize)
}

fn small(v: u64) -> PosInt {
    PosInt::from(v)
}

/// The elements of `μ(G)` having a prime divisor non-adjacent to the
/// characteristic in the prime graph.
/// Returned ascending.
pub fn zeta_set(family: Family, n: u32, q: &PrimePower) -> Result<Vec<PosInt>> {
    if n < 2 {
        return Err(Error::TableDomain(format!(
            "{} with rank parameter {n}",
            family.token()
        )));
    }
    let qv = q.value();
    let one = PosInt::one();
    let two = small(2);
    let four = small(4);
    let nn = small(n as u64);
    let qn = pw(&qv, n);
    let qn1 = pw(&qv, n - 1);
    let d2m = gcd(&two, &(&qv - 1u32));
    let d2p = gcd(&two, &(&qv + 1u32));
    let out: Vec<PosInt> = match family {
        Family::L => {
            let d = gcd(&nn, &(&qv - 1u32));
            vec![
                (&qn - 1u32) / ((&qv - 1u32) * &d),
                (&qn1 - 1u32) / &d,
            ]
        }
        Family::U => {
            let d = gcd(&nn, &(&qv + 1u32));
            let first = if n.is_multiple_of(2) { &qn - 1u32 } else { &qn + 1u32 };
            let second = if n.is_multiple_of(2) { &qn1 + 1u32 } else { &qn1 - 1u32 };
            vec![first / ((&qv + 1u32) * &d), second / &d]
        }
        Family::S | Family::OOdd => {
            if n.is_multiple_of(2) {
                vec![(&qn + 1u32) / &d2m]
            } else {
                vec![(&qn - 1u32) / &d2m, (&qn + 1u32) / &d2m]
            }
        }
        Family::OPlus => {
            if n.is_multiple_of(2) {
                vec![(&qn1 - 1u32) / &d2m, (&qn1 + 1u32) / &d2m]
            } else {
                let d = gcd(&four, &(&qn - 1u32));
                vec![
                    (&qn1 + 1u32) * (&qv + 1u32) / &d,
                    (&qn - 1u32) / &d,
                ]
            }
        }
        Family::OMinus => {
            if n.is_multiple_of(2) {
                vec![
                    (&qn + 1u32) / &d2p,
                    lcm(&(&qn1 + 1u32), &(&qv - 1u32)),
                    lcm(&(&qn1 - 1u32), &(&qv + 1u32)),
                ]
            } else {
                let d = gcd(&four, &(&qn + 1u32));
                vec![(&qn + 1u32) / &d, (&qn1 + 1u32) * (&qv - 1u32) / &d]
            }
        }
    };
    let mut out: Vec<PosInt> = out.into_iter().filter(|x| *x > one).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// One element of the zeta table as `f(q) / d` where `d` is one of
/// `denominators`, depending on `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaFormula {
    pub poly: IntPoly,
    pub denominators: Vec<u64>,
}

fn divisors(n: u32) -> Vec<u64> {
    (1..=n as u64).filter(|d| (n as u64).is_multiple_of(*d)).collect()
}

/// `(x^n - s) / (x - t)` for the exact quotients used by the table.
fn quotient(n: usize, s: i64, t: i64) -> IntPoly {
    // synthetic division of x^n - s by x - t
    let mut out = vec![num_bigint::BigInt::zero(); n];
    let mut carry = num_bigint::BigInt::one();
    for i in (0..n).rev() {
        out[i] = carry.clone();
        carry *= t;
    }
    debug_assert_eq!(carry, num_bigint::BigInt::from(s));
    IntPoly::new(out)
}

/// The formulas behind [`zeta_set`] for one family and rank parameter.
pub fn zeta_formulas(family: Family, n: u32) -> Result<Vec<ZetaFormula>> {
    if n < 2 {
        return Err(Error::TableDomain(format!(
            "{} with rank parameter {n}",
            family.token()
        )));
    }
    let k = n as usize;
    let f = |poly: IntPoly, denominators: Vec<u64>| ZetaFormula { poly, denominators };
    let bin = IntPoly::binomial;
    let halves = vec![1, 2];
    let quarters = vec![1, 2, 4];
    Ok(match family {
        Family::L => vec![
            f(quotient(k, 1, 1), divisors(n)),
            f(bin(k - 1, -1), divisors(n)),
        ],
        Family::U if n.is_multiple_of(2) => vec![
            f(quotient(k, 1, -1), divisors(n)),
            f(bin(k - 1, 1), divisors(n)),
        ],
        Family::U => vec![
            f(quotient(k, -1, -1), divisors(n)),
            f(bin(k - 1, -1), divisors(n)),
        ],
        Family::S | Family::OOdd if n.is_multiple_of(2) => vec![f(bin(k, 1), halves)],
        Family::S | Family::OOdd => vec![f(bin(k, -1), halves.clone()), f(bin(k, 1), halves)],
        Family::OPlus if n.is_multiple_of(2) => vec![f(bin(k - 1, -1), halves.clone()), f(bin(k - 1, 1), halves)],
        Family::OPlus => vec![
            f(bin(k - 1, 1).mul(&bin(1, 1)), quarters.clone()),
            f(bin(k, -1), quarters),
        ],
        Family::OMinus if n.is_multiple_of(2) => vec![
            f(bin(k, 1), halves.clone()),
            f(bin(k - 1, 1).mul(&bin(1, -1)), halves.clone()),
            f(bin(k - 1, -1).mul(&bin(1, 1)), halves),
        ],
        Family::OMinus => vec![
            f(bin(k, 1), quarters.clone()),
            f(bin(k - 1, 1).mul(&bin(1, -1)), quarters),
        ],
    })
}

/// All field orders `q` with `value ∈ ζ` for the given family and rank
/// parameter, ascending.
pub fn invert_zeta_element(family: Family, n: u32, value: &PosInt, window: u32) -> Result<Vec<PrimePower>> {
    let one = PosInt::one();
    let mut out: Vec<PrimePower> = Vec::new();
    for formula in zeta_formulas(family, n)? {
        for &d in &formula.denominators {
            for q in solve_poly_prime_power(&formula.poly, &one, &PosInt::from(d), value, window) {
                if !out.contains(&q) && zeta_set(family, n, &q)?.contains(value) {
                    out.push(q);
                }
            }
        }
    }
    out.sort_by_key(|q| q.value());
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecDistKind {
    /// Lies in `ω(S_{2n}(q)) ∖ ω(O_{2n+1}(q))`; odd `q` only.
    SymplecticVsOddOrthogonal,
    /// Lies in `ω(O^+_{2n+2}(q))` but not in `ω(S_{2n}(q)) ∪ ω(O_{2n+1}(q))`;
    /// `n > 5` only.
    PlusVsRest,
}

pub fn spec_dist_element(kind: SpecDistKind, n: u32, q: &PrimePower) -> Result<PosInt> {
    let qv = q.value();
    match kind {
        SpecDistKind::SymplecticVsOddOrthogonal => {
            if q.is_even() {
                return Err(Error::Precondition(
                    "symplectic/orthogonal separation needs odd characteristic".into(),
                ));
            }
            if n < 1 {
                return Err(Error::Precondition("rank must be positive".into()));
            }
            Ok(&q.p * (pw(&qv, n - 1) + 1u32))
        }
        SpecDistKind::PlusVsRest => {
            if n <= 5 {
                return Err(Error::Precondition(format!(
                    "plus-type separation needs n > 5, got {n}"
                )));
            }
            let v = pw(&qv, n + 1) - 1u32;
            let d = gcd(&small(4), &v);
            Ok(v / d)
        }
    }
}
