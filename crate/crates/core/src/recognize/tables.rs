//! Tables used by the classical branches: the largest-element table and
//! the order-ratio table.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{solve_poly_prime_power, IntPoly, PosInt, PrimePower};
use crate::data::{M1File, M1Row};
use crate::error::{Error, Result};
use crate::spectra::{Family, Parity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldCond {
    Any,
    Prime,
    Extension,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharCond {
    Any,
    Odd,
    Even,
}

/// `m(q) = (c_num / c_den) · f(q)` for one family and Lie rank, valid for
/// the field orders admitted by `field` and `characteristic`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M1Entry {
    pub family: Family,
    pub rank: u32,
    pub c_num: PosInt,
    pub c_den: PosInt,
    pub poly: IntPoly,
    pub field: FieldCond,
    pub characteristic: CharCond,
    /// Inclusive bounds on the characteristic.
    pub p_min: Option<u64>,
    pub p_max: Option<u64>,
}

impl M1Entry {
    fn from_row(row: &M1Row, which: &str) -> Result<Self> {
        let bad = |m: String| Error::Data {
            path: format!("m1_table.json:{which}"),
            message: m,
        };
        let family = Family::from_str(&row.family).map_err(|e| bad(e.to_string()))?;
        let coeffs = row
            .poly
            .iter()
            .map(|c| BigInt::from_str(c.trim()).map_err(|e| bad(format!("coefficient {c:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let poly = IntPoly::new(coeffs);
        if poly.degree() == 0 || !poly.is_monic() {
            return Err(bad(format!("{} rank {}: polynomial must be monic of positive degree", row.family, row.rank)));
        }
        if row.c_num.is_zero() || row.c_den.is_zero() {
            return Err(bad("zero coefficient".into()));
        }
        let field = match row.field.as_str() {
            "any" => FieldCond::Any,
            "prime" => FieldCond::Prime,
            "extension" => FieldCond::Extension,
            other => return Err(bad(format!("unknown field condition {other:?}"))),
        };
        let characteristic = match row.parity.as_str() {
            "any" => CharCond::Any,
            "odd" => CharCond::Odd,
            "even" => CharCond::Even,
            other => return Err(bad(format!("unknown parity condition {other:?}"))),
        };
        let entry = M1Entry {
            family,
            rank: row.rank,
            c_num: row.c_num.clone(),
            c_den: row.c_den.clone(),
            poly,
            field,
            characteristic,
            p_min: row.p_min,
            p_max: row.p_max,
        };
        entry.validate().map_err(bad)?;
        Ok(entry)
    }

    pub fn admits(&self, q: &PrimePower) -> bool {
        let field = match self.field {
            FieldCond::Any => true,
            FieldCond::Prime => q.k == 1,
            FieldCond::Extension => q.k > 1,
        };
        let ch = match self.characteristic {
            CharCond::Any => true,
            CharCond::Odd => !q.is_even(),
            CharCond::Even => q.is_even(),
        };
        let p = u64::try_from(&q.p).unwrap_or(u64::MAX);
        let range = self.p_min.is_none_or(|lo| p >= lo) && self.p_max.is_none_or(|hi| p <= hi);
        field && ch && range
    }

    /// `c · f(q)` when it is a positive integer.
    pub fn eval(&self, q: &PrimePower) -> Option<PosInt> {
        let v = self.poly.eval(&BigInt::from(q.value())) * BigInt::from(self.c_num.clone());
        let (quot, rem) = v.div_rem(&BigInt::from(self.c_den.clone()));
        if !rem.is_zero() {
            return None;
        }
        quot.to_biguint().filter(|x| !x.is_zero())
    }

    /// Prime powers admitted by the row with `c · f(q) = b`.
    pub fn solve(&self, b: &PosInt, window: u32) -> Vec<PrimePower> {
        solve_poly_prime_power(&self.poly, &self.c_num, &self.c_den, b, window)
            .into_iter()
            .filter(|q| self.admits(q))
            .collect()
    }

    /// Integrality on a few admitted field orders.
    fn validate(&self) -> std::result::Result<(), String> {
        let samples: &[(u32, u32)] = &[(3, 1), (5, 1), (7, 1), (2, 1), (3, 2), (5, 2), (2, 2), (3, 3)];
        let mut tried = 0;
        for &(p, k) in samples {
            let q = PrimePower { p: PosInt::from(p), k };
            if !self.admits(&q) {
                continue;
            }
            tried += 1;
            if self.eval(&q).is_none() {
                return Err(format!(
                    "{} rank {}: c·f({}) is not a positive integer",
                    self.family.token(),
                    self.rank,
                    q.value()
                ));
            }
        }
        if tried == 0 {
            return Err(format!("{} rank {}: row admits no sample field", self.family.token(), self.rank));
        }
        Ok(())
    }
}

/// Which of the three largest element orders a sub-table describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Largest {
    First,
    Second,
    Third,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct M1Table {
    pub m1: Vec<M1Entry>,
    pub m2: Vec<M1Entry>,
    pub m3: Vec<M1Entry>,
}

/// A group the largest-element equation admits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct M1Candidate {
    pub family: Family,
    pub rank: u32,
    pub q: PrimePower,
}

impl M1Table {
    pub fn from_file(f: &M1File) -> Result<Self> {
        let conv = |rows: &[M1Row], which: &str| -> Result<Vec<M1Entry>> {
            rows.iter().map(|r| M1Entry::from_row(r, which)).collect()
        };
        Ok(M1Table {
            m1: conv(&f.m1, "m1")?,
            m2: conv(&f.m2, "m2")?,
            m3: conv(&f.m3, "m3")?,
        })
    }

    pub fn rows(&self, which: Largest) -> &[M1Entry] {
        match which {
            Largest::First => &self.m1,
            Largest::Second => &self.m2,
            Largest::Third => &self.m3,
        }
    }

    /// Groups with largest element order `b`, optionally at one Lie rank.
    pub fn candidates(&self, b: &PosInt, rank: Option<u32>, window: u32) -> Vec<M1Candidate> {
        let mut out: Vec<M1Candidate> = self
            .m1
            .iter()
            .filter(|e| rank.is_none_or(|k| e.rank == k))
            .flat_map(|e| {
                e.solve(b, window).into_iter().map(move |q| M1Candidate {
                    family: e.family,
                    rank: e.rank,
                    q,
                })
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Values of the `which` sub-table for a candidate; empty when the
    /// table has no matching row.
    pub fn values(&self, which: Largest, c: &M1Candidate) -> Vec<PosInt> {
        let mut v: Vec<PosInt> = self
            .rows(which)
            .iter()
            .filter(|e| e.family == c.family && e.rank == c.rank && e.admits(&c.q))
            .filter_map(|e| e.eval(&c.q))
            .collect();
        v.sort();
        v.dedup();
        v
    }
}

/// Ratio shapes of the order table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RatioFn {
    Half,
    /// `(x-1)/x`
    PredOverX,
    /// `x/(2x-2)`
    XOverTwicePred,
    /// `(x-1)/(2x)`
    PredOverTwiceX,
}

impl RatioFn {
    /// Value at `x` as a reduced fraction.
    pub fn at(self, x: u64) -> Option<(u64, u64)> {
        let (a, b) = match self {
            RatioFn::Half => (1, 2),
            RatioFn::PredOverX => (x.checked_sub(1)?, x),
            RatioFn::XOverTwicePred => (x, (2 * x).checked_sub(2)?),
            RatioFn::PredOverTwiceX => (x.checked_sub(1)?, 2 * x),
        };
        if b == 0 {
            return None;
        }
        let g = a.gcd(&b).max(1);
        Some((a / g, b / g))
    }
}

/// One row: the largest multiplicative orders `m_1 < m_2` attached to the
/// two elements of `ζ(G)`, as affine functions `a·n + b` of the rank
/// parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioRow {
    pub family: Family,
    /// Parity of `n` the row applies to; `None` for every `n`.
    pub n_parity: Option<Parity>,
    pub m1: (u64, i64),
    pub m2: (u64, i64),
    pub ratio: RatioFn,
}

impl RatioRow {
    pub fn applies(&self, n: u32) -> bool {
        match self.n_parity {
            None => true,
            Some(Parity::Even) => n.is_multiple_of(2),
            Some(Parity::Odd) => n % 2 == 1,
        }
    }

    pub fn orders(&self, n: u32) -> Option<(u64, u64)> {
        let f = |(a, b): (u64, i64)| u64::try_from(a as i64 * n as i64 + b).ok().filter(|&v| v > 0);
        Some((f(self.m1)?, f(self.m2)?))
    }
}

/// A coincidence `f_1(n) = f_2(m)` between different ratio shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioException {
    pub f1: RatioFn,
    pub f2: RatioFn,
    pub n: u64,
    /// `None` for every `m`.
    pub m: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioTable {
    pub rows: Vec<RatioRow>,
    pub exceptions: Vec<RatioException>,
}

impl Default for RatioTable {
    fn default() -> Self {
        use Family::*;
        use RatioFn::*;
        let row = |family, n_parity, m1, m2, ratio| RatioRow {
            family,
            n_parity,
            m1,
            m2,
            ratio,
        };
        RatioTable {
            rows: vec![
                row(L, None, (1, -1), (1, 0), PredOverX),
                row(U, Some(Parity::Even), (1, 0), (2, -2), XOverTwicePred),
                row(U, Some(Parity::Odd), (1, -1), (2, 0), PredOverTwiceX),
                row(S, Some(Parity::Odd), (1, 0), (2, 0), Half),
                row(OOdd, Some(Parity::Odd), (1, 0), (2, 0), Half),
                row(OPlus, Some(Parity::Even), (1, -1), (2, -2), Half),
                row(OPlus, Some(Parity::Odd), (1, 0), (2, -2), XOverTwicePred),
                row(OMinus, Some(Parity::Odd), (2, -2), (2, 0), PredOverX),
            ],
            exceptions: vec![
                RatioException {
                    f1: PredOverX,
                    f2: Half,
                    n: 2,
                    m: None,
                },
                RatioException {
                    f1: PredOverX,
                    f2: XOverTwicePred,
                    n: 3,
                    m: Some(4),
                },
                // (n - 2)(m - 2) = 2 also has the solution (4, 3)
                RatioException {
                    f1: PredOverX,
                    f2: XOverTwicePred,
                    n: 4,
                    m: Some(3),
                },
                RatioException {
                    f1: PredOverX,
                    f2: PredOverTwiceX,
                    n: 1,
                    m: Some(1),
                },
            ],
        }
    }
}

impl RatioTable {
    /// Whether `f1(n) = f2(m)` is explained by the table: same shape and
    /// argument, both halves, or a listed exception (in either order).
    pub fn explains(&self, f1: RatioFn, n: u64, f2: RatioFn, m: u64) -> bool {
        if (f1 == f2 && n == m) || (f1 == RatioFn::Half && f2 == RatioFn::Half) {
            return true;
        }
        self.exceptions.iter().any(|e| {
            let fits = |a: RatioFn, x: u64, b: RatioFn, y: u64| {
                e.f1 == a && e.f2 == b && e.n == x && e.m.is_none_or(|m| m == y)
            };
            fits(f1, n, f2, m) || fits(f2, m, f1, n)
        })
    }

    pub fn rows_for(&self, family: Family, n: u32) -> impl Iterator<Item = &RatioRow> {
        self.rows
            .iter()
            .filter(move |r| r.family == family && r.applies(n))
    }
}
