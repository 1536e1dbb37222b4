use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::tables::Largest;
use super::{isospectral_twin, Recognizer, Trail};
use crate::arith::{gcd, greatest_primitive_divisor, solve_poly_prime_power, IntPoly, PosInt, PrimePower};
use crate::atomic::{build_ad_graph, size_cap_c, AdGraph};
use crate::error::Error;
use crate::spectra::{
    classical_lcm_form_check, omega_contains, spec_dist_element, zeta_set, Family, GroupName, LcmCase, MinSpec,
    SpecDistKind,
};
use crate::splitgraph::{coclique_size, max_coclique_split, ranks_from_coclique, split_partition, theta_star_4};

const STAGE: &str = "large";

/// Smallest coclique size the type identification handles.
pub const MIN_COCLIQUE: u32 = 5;

/// Result of the large-rank branch with the values computed on the way.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LargeRankVerdict {
    /// Empty on rejection; otherwise the group, followed by its isospectral
    /// twin when there is one.
    pub groups: Vec<GroupName>,
    pub atoms: Option<usize>,
    pub t: Option<u32>,
    pub theta: Option<usize>,
    pub p: Option<PosInt>,
    pub zeta: Vec<PosInt>,
}

fn join(xs: &[PosInt]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn pow(q: &PosInt, e: u32) -> PosInt {
    num_traits::pow(q.clone(), e as usize)
}

/// Largest `e` up to `2(log_p s + 2) + 2` with a primitive prime divisor of
/// `p^e - 1` dividing `s`.
fn max_primitive_order(p: &PosInt, s: &PosInt) -> Option<u32> {
    let mut log = 0u32;
    let mut acc = p.clone();
    while &acc <= s {
        acc *= p;
        log += 1;
    }
    let base = BigInt::from(p.clone());
    (1..=2 * (log + 2) + 2)
        .rev()
        .find(|&e| gcd(s, &greatest_primitive_divisor(&base, e)) > PosInt::one())
}

fn solve_with_halves(f: &IntPoly, b: &PosInt, window: u32) -> Vec<PrimePower> {
    let one = PosInt::one();
    let two = PosInt::from(2u32);
    let mut out = solve_poly_prime_power(f, &one, &one, b, window);
    out.extend(solve_poly_prime_power(f, &one, &two, b, window));
    out
}

impl Recognizer {
    pub fn classify_large_rank(&self, mu: &MinSpec, trail: &mut Trail) -> LargeRankVerdict {
        let mut v = LargeRankVerdict::default();
        let Some(b) = mu.max() else {
            trail.note(STAGE, "rejected: empty input");
            return v;
        };
        let cap = self.config.cap_override.unwrap_or_else(|| size_cap_c(b));
        let adg = match build_ad_graph(mu, usize::try_from(cap).unwrap_or(usize::MAX)) {
            Ok(g) => g,
            Err(Error::TooMany { cap, stage }) => {
                trail.note(STAGE, format!("stage 1 rejected: more than {cap} atomic divisors after element {stage}"));
                return v;
            }
            Err(e) => {
                trail.note(STAGE, format!("stage 1 rejected: {e}"));
                return v;
            }
        };
        v.atoms = Some(adg.order());
        trail.note(STAGE, format!("stage 1: {} atomic divisors (cap {cap})", adg.order()));
        let Ok(part) = split_partition(&adg.graph.graph) else {
            trail.note(STAGE, "stage 2 rejected: AD-graph is not split");
            return v;
        };
        let t = max_coclique_split(&adg.graph.graph, &part).len() as u32;
        v.t = Some(t);
        trail.note(STAGE, format!("stage 3: split with clique {}, t = {t}", part.clique.len()));
        if t < MIN_COCLIQUE {
            trail.note(STAGE, format!("stage 3 rejected: t = {t} < {MIN_COCLIQUE}"));
            return v;
        }
        let (theta, _) = theta_star_4(mu, &adg);
        v.theta = Some(theta);
        let primes = if theta >= 3 {
            trail.note(STAGE, format!("stage 4: theta*(4) = {theta}, characteristic 2"));
            vec![PosInt::from(2u32)]
        } else {
            trail.note(STAGE, format!("stage 4: theta*(4) = {theta}, odd characteristic"));
            self.odd_characteristics(mu, b, trail)
        };
        if primes.is_empty() {
            trail.note(STAGE, "stage 4 rejected: no characteristic candidate");
            return v;
        }
        for p in primes {
            let Some(zeta) = zeta_elements(mu, &adg, &p, trail) else { continue };
            trail.note(STAGE, format!("stage 5: p = {p}, zeta = {{{}}}", join(&zeta)));
            let found = self.identify_traced(&p, t, &zeta, trail);
            if found.is_empty() {
                trail.note(STAGE, format!("stage 6: no group with p = {p}, t = {t} and this zeta"));
                continue;
            }
            let chosen = disambiguate(mu, found, trail);
            let groups = match chosen.as_slice() {
                [g] => vec![g.clone()],
                [g, h] if isospectral_twin(g).as_ref() == Some(h) => chosen.clone(),
                _ => {
                    let names: Vec<String> = chosen.iter().map(|g| g.to_string()).collect();
                    trail.note(STAGE, format!("stage 7: unresolved candidates {}", names.join(", ")));
                    continue;
                }
            };
            if self.final_check(mu, &groups[0], trail) {
                v.p = Some(p);
                v.zeta = zeta;
                v.groups = groups;
                return v;
            }
        }
        trail.note(STAGE, "rejected: no characteristic survived");
        v
    }

    /// Characteristics of the odd-field candidates from the largest-element
    /// table that pass the second-largest-element filter, ascending.
    fn odd_characteristics(&self, mu: &MinSpec, b: &PosInt, trail: &mut Trail) -> Vec<PosInt> {
        let mut ps: Vec<PosInt> = Vec::new();
        for c in self.m1.candidates(b, None, self.config.root_window) {
            if c.q.is_even() {
                continue;
            }
            let m2 = self.m1.values(Largest::Second, &c);
            let consistent = m2.is_empty()
                || m2
                    .iter()
                    .any(|x| omega_contains(mu, x) && !mu.iter().any(|a| a > x && a < b));
            let name = GroupName::classical(c.family, c.rank, c.q.clone());
            if !consistent {
                trail.note(STAGE, format!("stage 4: {name} dropped, second largest order {} inconsistent", join(&m2)));
                continue;
            }
            trail.note(STAGE, format!("stage 4: largest order fits {name}"));
            if !ps.contains(&c.q.p) {
                ps.push(c.q.p.clone());
            }
        }
        ps.sort();
        ps
    }

    /// Groups with characteristic `p`, coclique size `t` and `ζ(G) = S`.
    pub fn identify_type_and_field(&self, p: &PosInt, t: u32, s: &[PosInt]) -> Vec<GroupName> {
        self.identify_traced(p, t, s, &mut Trail::default())
    }

    fn identify_traced(&self, p: &PosInt, t: u32, s: &[PosInt], trail: &mut Trail) -> Vec<GroupName> {
        let mut s: Vec<PosInt> = s.to_vec();
        s.sort();
        s.dedup();
        if t < MIN_COCLIQUE || s.is_empty() || s.len() > 3 || s.iter().any(|x| x.is_multiple_of(p)) {
            return Vec::new();
        }
        let shaped = self.by_zeta_shape(p, t, &s, trail);
        let direct = direct_search(p, t, &s);
        if shaped != direct {
            trail.note(
                STAGE,
                format!("stage 6: shape route found {}, forward search found {}", shaped.len(), direct.len()),
            );
        }
        let mut all: BTreeSet<GroupName> = BTreeSet::new();
        all.extend(shaped.into_iter().filter(|g| forward_matches(g, p, t, &s)));
        all.extend(direct);
        let out: Vec<GroupName> = all.into_iter().collect();
        if !out.is_empty() {
            let names: Vec<String> = out.iter().map(|g| g.to_string()).collect();
            trail.note(STAGE, format!("stage 6: t = {t}, |zeta| = {} gives {}", s.len(), names.join(", ")));
        }
        out
    }

    /// Candidates by the number of elements of `S`.
    fn by_zeta_shape(&self, p: &PosInt, t: u32, s: &[PosInt], trail: &mut Trail) -> BTreeSet<GroupName> {
        let w = self.config.root_window;
        let mut out = BTreeSet::new();
        let mut push = |family: Family, n: u32, q: PrimePower| {
            if &q.p == p {
                out.insert(GroupName::classical(family, n, q));
            }
        };
        match s.len() {
            1 => {
                for family in [Family::S, Family::OOdd] {
                    for n in ranks_from_coclique(t, family).into_iter().filter(|n| n % 2 == 0) {
                        let f = IntPoly::binomial(n as usize, 1);
                        for q in solve_with_halves(&f, &s[0], w) {
                            push(family, n, q);
                        }
                    }
                }
            }
            3 => {
                for n in ranks_from_coclique(t, Family::OMinus).into_iter().filter(|n| n % 2 == 0) {
                    let f = IntPoly::binomial(n as usize - 1, -1).mul(&IntPoly::binomial(1, 1));
                    for q in solve_with_halves(&f, &s[2], w) {
                        push(Family::OMinus, n, q);
                    }
                }
            }
            _ => {
                let (Some(e1), Some(e2)) = (max_primitive_order(p, &s[0]), max_primitive_order(p, &s[1])) else {
                    return out;
                };
                let (lo, hi) = (e1.min(e2) as u64, e1.max(e2) as u64);
                let g = lo.gcd(&hi).max(1);
                trail.note(STAGE, format!("stage 6: primitive orders {lo}, {hi}"));
                for row in &self.ratio.rows {
                    for n in ranks_from_coclique(t, row.family) {
                        let Some((r1, r2)) = row.orders(n).filter(|_| row.applies(n)) else { continue };
                        if row.ratio.at(n as u64) != Some((lo / g, hi / g)) {
                            continue;
                        }
                        let (rl, rh) = (r1.min(r2), r1.max(r2));
                        if lo % rl != 0 || lo / rl * rh != hi {
                            continue;
                        }
                        let k = (lo / rl) as u32;
                        push(row.family, n, PrimePower { p: p.clone(), k });
                    }
                }
            }
        }
        out
    }

    fn final_check(&self, mu: &MinSpec, g: &GroupName, trail: &mut Trail) -> bool {
        let GroupName::Classical { family, n, q } = g else {
            return false;
        };
        if *family == Family::S {
            let qv = q.value();
            let qn = pow(&qv, *n);
            let d = if q.is_even() { PosInt::one() } else { PosInt::from(2u32) };
            let tori = [(&qn + 1u32) / &d, (&qn - 1u32) / &d];
            let whole = [&qn + 1u32, &qn - 1u32];
            let quad = LcmCase::Quadratic { parity: None };
            let n = *n as u64;
            let bad = mu.iter().find(|a| {
                let ok = classical_lcm_form_check(a, q, 2 * n - 1, quad)
                    || (!a.is_multiple_of(&q.p)
                        && classical_lcm_form_check(a, q, 2 * n, quad)
                        && (q.is_even() || !whole.contains(a)))
                    || tori.contains(a);
                !ok
            });
            if let Some(a) = bad {
                trail.note(STAGE, format!("stage 8 rejected: {a} is not an element order of {g}"));
                return false;
            }
            trail.note(STAGE, format!("stage 8: every element has an admissible form for {g}"));
        } else {
            trail.note(STAGE, format!("stage 8: no element-order profile for {}, form check skipped", family.token()));
        }
        if let Some(fx) = self.fixture_for(g) {
            if let Some(a) = mu.iter().find(|a| !omega_contains(fx, a)) {
                trail.note(STAGE, format!("stage 8 rejected: {a} is not in the stored spectrum of {g}"));
                return false;
            }
            trail.note(STAGE, format!("stage 8: contained in the stored spectrum of {g}"));
        }
        true
    }
}

/// Elements of `μ` having an atom that is neither the atom of `p` nor
/// adjacent to it. `None` when `p` divides no element or a selected
/// element is divisible by `p`.
fn zeta_elements(mu: &MinSpec, adg: &AdGraph, p: &PosInt, trail: &mut Trail) -> Option<Vec<PosInt>> {
    let Some(pa) = adg.atoms.atom_of(p) else {
        trail.note(STAGE, format!("stage 5: {p} divides no element"));
        return None;
    };
    let g = &adg.graph.graph;
    let far: Vec<usize> = (0..adg.order()).filter(|&j| j != pa && !g.adjacent(j, pa)).collect();
    let mut out = Vec::new();
    for (i, a) in mu.iter().enumerate() {
        if far.iter().any(|&j| adg.atoms.atoms[j].support.binary_search(&i).is_ok()) {
            if a.is_multiple_of(p) {
                trail.note(STAGE, format!("stage 5: p = {p} divides the zeta element {a}"));
                return None;
            }
            out.push(a.clone());
        }
    }
    Some(out)
}

fn forward_matches(g: &GroupName, p: &PosInt, t: u32, s: &[PosInt]) -> bool {
    let GroupName::Classical { family, n, q } = g else {
        return false;
    };
    &q.p == p && coclique_size(*family, *n) == t && zeta_set(*family, *n, q).is_ok_and(|z| z == s)
}

/// Every family, every rank allowed by `t`, and every power of `p` whose
/// table values are in range of `max S`.
fn direct_search(p: &PosInt, t: u32, s: &[PosInt]) -> BTreeSet<GroupName> {
    let mut out = BTreeSet::new();
    let top = s.last().unwrap();
    for family in Family::ALL {
        for n in ranks_from_coclique(t, family).into_iter().filter(|&n| n >= 2) {
            // every ζ element is at least q^{n-1} / (2n)
            let limit = top * (2 * n);
            let mut k = 1;
            while pow(p, k * (n - 1)) <= limit {
                let g = GroupName::classical(family, n, PrimePower { p: p.clone(), k });
                if forward_matches(&g, p, t, s) {
                    out.insert(g);
                }
                k += 1;
            }
        }
    }
    out
}

/// Separates `S_{2n}(q)`, `O_{2n+1}(q)` and `O^+_{2n+2}(q)` by their
/// distinguishing element orders.
fn disambiguate(mu: &MinSpec, groups: Vec<GroupName>, trail: &mut Trail) -> Vec<GroupName> {
    let mut gs = groups;
    let has = |gs: &[GroupName], f: Family, n: u32, q: &PrimePower| gs.contains(&GroupName::classical(f, n, q.clone()));
    let plus: Vec<(u32, PrimePower)> = gs
        .iter()
        .filter_map(|g| match g {
            GroupName::Classical {
                family: Family::OPlus,
                n,
                q,
            } => Some((*n, q.clone())),
            _ => None,
        })
        .collect();
    for (m, q) in plus {
        let n = m - 1;
        if n <= 5 || !(has(&gs, Family::S, n, &q) || has(&gs, Family::OOdd, n, &q)) {
            continue;
        }
        let Ok(x) = spec_dist_element(SpecDistKind::PlusVsRest, n, &q) else { continue };
        let plus_name = GroupName::classical(Family::OPlus, m, q.clone());
        if omega_contains(mu, &x) {
            trail.note(STAGE, format!("stage 7: {x} in omega(M), keeping {plus_name}"));
            gs.retain(|g| {
                g == &plus_name
                    || !matches!(g, GroupName::Classical { family: Family::S | Family::OOdd, n: k, q: r } if *k == n && r == &q)
            });
        } else {
            trail.note(STAGE, format!("stage 7: {x} not in omega(M), dropping {plus_name}"));
            gs.retain(|g| g != &plus_name);
        }
    }
    let pairs: Vec<(u32, PrimePower)> = gs
        .iter()
        .filter_map(|g| match g {
            GroupName::Classical { family: Family::S, n, q } if has(&gs, Family::OOdd, *n, q) => {
                Some((*n, q.clone()))
            }
            _ => None,
        })
        .collect();
    for (n, q) in pairs {
        let sym = GroupName::classical(Family::S, n, q.clone());
        let odd = GroupName::classical(Family::OOdd, n, q.clone());
        if q.is_even() {
            trail.note(STAGE, format!("stage 7: {sym} and {odd} are isomorphic in characteristic 2"));
            gs.retain(|g| g != &odd);
            continue;
        }
        let Ok(x) = spec_dist_element(SpecDistKind::SymplecticVsOddOrthogonal, n, &q) else { continue };
        if omega_contains(mu, &x) {
            trail.note(STAGE, format!("stage 7: {x} in omega(M), {sym} rather than {odd}"));
            gs.retain(|g| g != &odd);
        } else {
            trail.note(STAGE, format!("stage 7: {x} not in omega(M), {odd} rather than {sym}"));
            gs.retain(|g| g != &sym);
        }
    }
    gs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::RecognizeConfig;

    fn rec() -> Recognizer {
        Recognizer::from_config(RecognizeConfig::default()).unwrap()
    }

    fn pp(p: u32, k: u32) -> PrimePower {
        PrimePower {
            p: PosInt::from(p),
            k,
        }
    }

    #[test]
    fn identify_single_zeta() {
        let r = rec();
        let p = PosInt::from(3u32);
        let s = [(PosInt::from(3u32).pow(12) + 1u32) / 2u32];
        let got = r.identify_type_and_field(&p, 10, &s);
        assert_eq!(
            got,
            vec![
                GroupName::classical(Family::S, 12, pp(3, 1)),
                GroupName::classical(Family::OOdd, 12, pp(3, 1)),
            ]
        );
        // 41 = (3^4 + 1) / 2 sits at rank 4, outside t = 10
        assert!(r.identify_type_and_field(&p, 10, &[PosInt::from(41u32)]).is_empty());
        let four: Vec<PosInt> = [5u32, 7, 11, 13].map(PosInt::from).to_vec();
        assert!(r.identify_type_and_field(&p, 10, &four).is_empty());
    }

    #[test]
    fn identify_pairs_by_ratio() {
        let r = rec();
        for (family, n, q) in [
            (Family::L, 13, pp(3, 1)),
            (Family::U, 14, pp(2, 1)),
            (Family::U, 15, pp(5, 1)),
            (Family::OMinus, 13, pp(3, 2)),
            (Family::OPlus, 15, pp(7, 1)),
            (Family::S, 13, pp(3, 1)),
        ] {
            let z = zeta_set(family, n, &q).unwrap();
            let t = coclique_size(family, n);
            let got = r.identify_type_and_field(&q.p, t, &z);
            let g = GroupName::classical(family, n, q.clone());
            assert!(got.contains(&g), "{g}: {got:?}");
            let mut trail = Trail::default();
            let shaped = r.by_zeta_shape(&q.p, t, &z, &mut trail);
            assert!(shaped.contains(&g), "ratio route missed {g}");
        }
    }

    #[test]
    fn identify_three_zeta() {
        let r = rec();
        let q = pp(3, 1);
        let z = zeta_set(Family::OMinus, 14, &q).unwrap();
        assert_eq!(z.len(), 3);
        let got = r.identify_type_and_field(&q.p, coclique_size(Family::OMinus, 14), &z);
        assert_eq!(got, vec![GroupName::classical(Family::OMinus, 14, q)]);
    }

    #[test]
    fn primitive_orders() {
        let p = PosInt::from(3u32);
        let s = (PosInt::from(3u32).pow(13) + 1u32) / 2u32;
        assert_eq!(max_primitive_order(&p, &s), Some(26));
        let s = (PosInt::from(3u32).pow(13) - 1u32) / 2u32;
        assert_eq!(max_primitive_order(&p, &s), Some(13));
    }
}
