use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{prime_power_decompose, PosInt, PrimePower};
use crate::error::{Error, Result};

/// Classical families. For `L` and `U` the rank parameter is the dimension;
/// for the others it is the Lie rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    L,
    U,
    S,
    #[serde(rename = "O_odd")]
    OOdd,
    #[serde(rename = "O_plus")]
    OPlus,
    #[serde(rename = "O_minus")]
    OMinus,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::L,
        Family::U,
        Family::S,
        Family::OOdd,
        Family::OPlus,
        Family::OMinus,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Family::L => "L",
            Family::U => "U",
            Family::S => "S",
            Family::OOdd => "O_odd",
            Family::OPlus => "O_plus",
            Family::OMinus => "O_minus",
        }
    }

    /// Lie rank of the group with rank parameter `n`.
    pub fn lie_rank(self, n: u32) -> u32 {
        match self {
            Family::L => n.saturating_sub(1),
            Family::U => n / 2,
            _ => n,
        }
    }

    /// Rank parameters `n` whose Lie rank is `k`.
    pub fn params_for_lie_rank(self, k: u32) -> Vec<u32> {
        match self {
            Family::L => vec![k + 1],
            Family::U => vec![2 * k, 2 * k + 1],
            _ => vec![k],
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.token() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown family token {s:?}")))
    }
}

/// Name of a finite simple group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupName {
    Alternating { n: u32 },
    Classical { family: Family, n: u32, q: PrimePower },
    Sporadic { name: String },
    LieSmall { lie_type: String, rank: u32, q: PrimePower },
}

impl GroupName {
    pub fn classical(family: Family, n: u32, q: PrimePower) -> Self {
        GroupName::Classical { family, n, q }
    }

    pub fn lie_rank(&self) -> Option<u32> {
        match self {
            GroupName::Classical { family, n, .. } => Some(family.lie_rank(*n)),
            GroupName::LieSmall { rank, .. } => Some(*rank),
            _ => None,
        }
    }

    pub fn field(&self) -> Option<&PrimePower> {
        match self {
            GroupName::Classical { q, .. } | GroupName::LieSmall { q, .. } => Some(q),
            _ => None,
        }
    }

    pub fn record(&self) -> GroupRecord {
        let (family, n, q) = match self {
            GroupName::Alternating { n } => ("A".to_string(), Some(n.to_string()), None),
            GroupName::Classical { family, n, q } => (
                family.token().to_string(),
                Some(n.to_string()),
                Some(q.value().to_string()),
            ),
            GroupName::Sporadic { .. } => ("sporadic".to_string(), None, None),
            GroupName::LieSmall { lie_type, rank, q } => (
                lie_type.clone(),
                Some(rank.to_string()),
                Some(q.value().to_string()),
            ),
        };
        GroupRecord {
            family,
            n,
            q,
            name: self.to_string(),
        }
    }

    pub fn from_record(r: &GroupRecord) -> Result<Self> {
        let bad = |m: &str| Error::Precondition(format!("group record {:?}: {m}", r.name));
        let n = || -> Result<u32> {
            r.n.as_deref()
                .ok_or_else(|| bad("missing n"))?
                .parse()
                .map_err(|_| bad("n is not an integer"))
        };
        let q = || -> Result<PrimePower> {
            let s = r.q.as_deref().ok_or_else(|| bad("missing q"))?;
            let v = PosInt::from_str(s).map_err(|_| bad("q is not an integer"))?;
            prime_power_decompose(&v).ok_or_else(|| bad("q is not a prime power"))
        };
        Ok(match r.family.as_str() {
            "A" => GroupName::Alternating { n: n()? },
            "sporadic" => GroupName::Sporadic {
                name: r.name.clone(),
            },
            tok => match Family::from_str(tok) {
                Ok(family) => GroupName::Classical {
                    family,
                    n: n()?,
                    q: q()?,
                },
                Err(_) => GroupName::LieSmall {
                    lie_type: tok.to_string(),
                    rank: n()?,
                    q: q()?,
                },
            },
        })
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Alternating { n } => write!(f, "A{n}"),
            GroupName::Classical { family, n, q } => {
                let q = q.value();
                match family {
                    Family::L => write!(f, "L{n}({q})"),
                    Family::U => write!(f, "U{n}({q})"),
                    Family::S => write!(f, "S{}({q})", 2 * n),
                    Family::OOdd => write!(f, "O{}({q})", 2 * n + 1),
                    Family::OPlus => write!(f, "O+{}({q})", 2 * n),
                    Family::OMinus => write!(f, "O-{}({q})", 2 * n),
                }
            }
            GroupName::Sporadic { name } => f.write_str(name),
            GroupName::LieSmall { lie_type, rank, q } => {
                write!(f, "{lie_type}{rank}({})", q.value())
            }
        }
    }
}

/// JSON form of a [`GroupName`]; every number is a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub family: String,
    pub n: Option<String>,
    pub q: Option<String>,
    pub name: String,
}

impl Serialize for GroupName {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.record().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupName {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = GroupRecord::deserialize(d)?;
        GroupName::from_record(&r).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(p: u32, k: u32) -> PrimePower {
        PrimePower {
            p: PosInt::from(p),
            k,
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(GroupName::Alternating { n: 15 }.to_string(), "A15");
        assert_eq!(GroupName::classical(Family::L, 2, pp(7, 1)).to_string(), "L2(7)");
        assert_eq!(GroupName::classical(Family::S, 12, pp(3, 1)).to_string(), "S24(3)");
        assert_eq!(GroupName::classical(Family::OOdd, 12, pp(3, 1)).to_string(), "O25(3)");
        assert_eq!(GroupName::classical(Family::OPlus, 4, pp(2, 1)).to_string(), "O+8(2)");
        assert_eq!(GroupName::classical(Family::OMinus, 5, pp(3, 2)).to_string(), "O-10(9)");
        let g2 = GroupName::LieSmall {
            lie_type: "G".into(),
            rank: 2,
            q: pp(3, 1),
        };
        assert_eq!(g2.to_string(), "G2(3)");
    }

    #[test]
    fn lie_ranks() {
        assert_eq!(GroupName::classical(Family::L, 2, pp(7, 1)).lie_rank(), Some(1));
        assert_eq!(GroupName::classical(Family::U, 5, pp(2, 1)).lie_rank(), Some(2));
        assert_eq!(GroupName::classical(Family::S, 12, pp(3, 1)).lie_rank(), Some(12));
        assert_eq!(Family::U.params_for_lie_rank(2), vec![4, 5]);
    }

    #[test]
    fn json_round_trip() {
        let names = [
            GroupName::Alternating { n: 15 },
            GroupName::classical(Family::OMinus, 13, pp(2, 3)),
            GroupName::Sporadic { name: "M11".into() },
            GroupName::LieSmall {
                lie_type: "G".into(),
                rank: 2,
                q: pp(5, 1),
            },
        ];
        for g in names {
            let s = serde_json::to_string(&g).unwrap();
            let back: GroupName = serde_json::from_str(&s).unwrap();
            assert_eq!(back, g, "{s}");
        }
        let s = serde_json::to_string(&GroupName::classical(Family::L, 2, pp(7, 1))).unwrap();
        assert_eq!(s, r#"{"family":"L","n":"2","q":"7","name":"L2(7)"}"#);
    }
}
