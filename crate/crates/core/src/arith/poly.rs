use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{integer_nth_root, prime_power_decompose, PosInt, PrimePower};

/// Half-width of the search window around the approximate root.
pub const DEFAULT_ROOT_WINDOW: u32 = 4;

/// Integer polynomial, coefficients lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IntPoly { coeffs: c }
    }

    /// `x^k + s` for a small constant `s`.
    pub fn binomial(k: usize, s: i64) -> Self {
        let mut p = Self::monomial(k);
        p.coeffs[0] += s;
        Self::new(p.coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

/// All prime powers `q` with `(c_num / c_den) · f(q) = b`.
///
/// Candidates are taken from a window of half-width `window` around
/// `⌊(b·c_den / (c_num·lc))^(1/deg f)⌋` and confirmed by exact evaluation.
pub fn solve_poly_prime_power(
    f: &IntPoly,
    c_num: &PosInt,
    c_den: &PosInt,
    b: &PosInt,
    window: u32,
) -> Vec<PrimePower> {
    let deg = f.degree();
    let lc = f.leading();
    if deg == 0 || lc.sign() != Sign::Plus || c_num.is_zero() || c_den.is_zero() {
        return Vec::new();
    }
    let (target, rem) = (b * c_den).div_rem(c_num);
    if !rem.is_zero() {
        return Vec::new();
    }
    let target = BigInt::from(target);
    let approx = (&target / &lc).to_biguint().unwrap_or_default();
    let guess = integer_nth_root(&approx, deg as u32);
    let w = PosInt::from(window);
    let lo = if guess > &w + 2u32 { &guess - &w } else { PosInt::from(2u32) };
    let hi = &guess + &w;
    let mut out = Vec::new();
    let mut q = lo;
    while q <= hi {
        let qi = BigInt::from(q.clone());
        if f.eval(&qi) == target {
            if let Some(pp) = prime_power_decompose(&q) {
                out.push(pp);
            }
        }
        q += 1u32;
    }
    out
}

impl IntPoly {
    /// Evaluates at a small nonnegative integer, for diagnostics.
    pub fn eval_u64(&self, x: u64) -> Option<i128> {
        self.eval(&BigInt::from(x)).to_i128()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().abs().is_one() && self.leading().is_positive()
    }
}
