//! Minimal spectra and membership tests for spectra of simple groups.

mod alternating;
mod classical;
mod name;
mod registry;

pub use alternating::{alt_contains, alt_distinguisher, alt_mu, alt_prime_graph};
pub(crate) use alternating::{alt_cost_u64, AltMembership};
pub use classical::{
    classical_lcm_form_check, invert_zeta_element, spec_dist_element, zeta_formulas, zeta_set, LcmCase, Parity,
    SpecDistKind, ZetaFormula,
};
pub use name::{Family, GroupName, GroupRecord};
pub use registry::{
    FixtureGenerator, GeneratorRegistry, Psl2Generator, SpectrumGenerator, DEFAULT_SIZE_FACTOR,
};

use std::fmt;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::PosInt;

/// A set of positive integers none of which divides another, kept ascending.
#[derive(Debug, Clone, Default)]
pub struct MinSpec {
    elements: Vec<PosInt>,
    /// The elements again as words when they all fit, for fast divisibility.
    words: Option<Vec<u64>>,
}

impl MinSpec {
    /// The divisibility-maximal elements of `values` (zeros are ignored).
    pub fn new<I: IntoIterator<Item = PosInt>>(values: I) -> Self {
        let mut v: Vec<PosInt> = values.into_iter().filter(|x| !x.is_zero()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.dedup();
        // same scan on machine words when everything fits, without allocating
        let words: Option<Vec<u64>> = v.iter().map(|x| x.to_u64()).collect();
        if let Some(words) = words {
            let mut kept: Vec<u64> = Vec::with_capacity(words.len());
            for x in words {
                if !kept.iter().any(|y| y % x == 0) {
                    kept.push(x);
                }
            }
            kept.reverse();
            return MinSpec {
                elements: kept.iter().map(|&x| PosInt::from(x)).collect(),
                words: Some(kept),
            };
        }
        let mut kept: Vec<PosInt> = Vec::with_capacity(v.len());
        for x in v {
            if !kept.iter().any(|y| y.is_multiple_of(&x)) {
                kept.push(x);
            }
        }
        kept.reverse();
        MinSpec {
            elements: kept,
            words: None,
        }
    }

    pub fn elements(&self) -> &[PosInt] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PosInt> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max(&self) -> Option<&PosInt> {
        self.elements.last()
    }

    /// `d ∈ ω`, i.e. `d` divides some element.
    pub fn contains_divisor(&self, d: &PosInt) -> bool {
        if d.is_zero() {
            return false;
        }
        match &self.words {
            // a divisor of a word-sized element is word-sized
            Some(words) => d.to_u64().is_some_and(|d| words.iter().any(|a| a % d == 0)),
            None => self.elements.iter().any(|a| a.is_multiple_of(d)),
        }
    }

    pub fn into_vec(self) -> Vec<PosInt> {
        self.elements
    }
}

impl PartialEq for MinSpec {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for MinSpec {}

impl std::hash::Hash for MinSpec {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.elements.hash(h);
    }
}

impl fmt::Display for MinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl Serialize for MinSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        crate::data::decimal::vec::serialize(&self.elements, s)
    }
}

impl<'de> Deserialize<'de> for MinSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        crate::data::decimal::vec::deserialize(d).map(MinSpec::new)
    }
}

impl FromIterator<PosInt> for MinSpec {
    fn from_iter<I: IntoIterator<Item = PosInt>>(iter: I) -> Self {
        MinSpec::new(iter)
    }
}

pub fn minimal_spectrum(m: &[PosInt]) -> MinSpec {
    MinSpec::new(m.iter().cloned())
}

pub fn omega_contains(mu: &MinSpec, d: &PosInt) -> bool {
    mu.contains_divisor(d)
}

#[cfg(test)]
pub(crate) fn mu_of(xs: &[u64]) -> MinSpec {
    MinSpec::new(xs.iter().map(|&x| PosInt::from(x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(m: &MinSpec) -> Vec<u64> {
        m.iter().map(|x| u64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn minimal_examples() {
        assert_eq!(vals(&mu_of(&[4, 2, 6])), vec![4, 6]);
        assert_eq!(vals(&mu_of(&[2])), vec![2]);
        assert_eq!(vals(&mu_of(&[6, 10, 15, 30])), vec![30]);
        assert!(mu_of(&[]).is_empty());
        assert_eq!(vals(&mu_of(&[5, 5, 1])), vec![5]);
    }

    #[test]
    fn omega_examples() {
        let m = mu_of(&[4, 6]);
        assert!(omega_contains(&m, &PosInt::from(3u32)));
        assert!(!omega_contains(&m, &PosInt::from(12u32)));
        assert!(omega_contains(&mu_of(&[30]), &PosInt::from(10u32)));
        assert!(omega_contains(&m, &PosInt::from(1u32)));
    }

    #[test]
    fn json_is_decimal_strings() {
        let m = mu_of(&[4, 6]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"["4","6"]"#);
        let back: MinSpec = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }
}
