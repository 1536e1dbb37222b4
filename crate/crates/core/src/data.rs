//! Data files shipped with the crate and the decimal-string serde helpers
//! used by every JSON surface.
//!
//! Built-in copies of the data files are embedded at compile time. A data
//! directory (from `--data-dir` or `SPECTRE_DATA_DIR`) overrides them file by
//! file.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::arith::PosInt;
use crate::error::{Error, Result};

/// Environment variable consulted when no data directory is given explicitly.
pub const DATA_DIR_ENV: &str = "SPECTRE_DATA_DIR";

const BUILTIN_M1: &str = include_str!("../data/m1_table.json");
const BUILTIN_SPORADIC: &str = include_str!("../data/sporadic_spectra.json");
const BUILTIN_CLASSICAL: &[(&str, &str)] = &[
    ("S24_2.json", include_str!("../data/classical_mu/S24_2.json")),
    ("S24_3.json", include_str!("../data/classical_mu/S24_3.json")),
    ("S24_5.json", include_str!("../data/classical_mu/S24_5.json")),
    ("S26_2.json", include_str!("../data/classical_mu/S26_2.json")),
    ("S26_3.json", include_str!("../data/classical_mu/S26_3.json")),
    ("S6_2.json", include_str!("../data/classical_mu/S6_2.json")),
];

/// Serde adapters that write big integers as decimal strings.
pub mod decimal {
    use super::PosInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &PosInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<PosInt, D::Error> {
        let s = String::deserialize(d)?;
        PosInt::from_str(s.trim()).map_err(D::Error::custom)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[PosInt], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for x in v {
                seq.serialize_element(&x.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<PosInt>, D::Error> {
            let raw = Vec::<String>::deserialize(d)?;
            raw.iter()
                .map(|s| PosInt::from_str(s.trim()).map_err(D::Error::custom))
                .collect()
        }
    }
}

/// One row of the largest-element table: `m(q) = (c_num / c_den) · f(q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct M1Row {
    pub family: String,
    /// Lie rank.
    pub rank: u32,
    #[serde(with = "decimal")]
    pub c_num: PosInt,
    #[serde(with = "decimal")]
    pub c_den: PosInt,
    /// Coefficients, lowest degree first, as decimal strings (may be negative).
    pub poly: Vec<String>,
    /// `prime`, `extension` or `any`: which field orders the row applies to.
    #[serde(default = "any_field")]
    pub field: String,
    /// `odd`, `even` or `any`: parity of `q` the row applies to.
    #[serde(default = "any_field")]
    pub parity: String,
    /// Smallest characteristic the row applies to.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_min: Option<u64>,
    /// Largest characteristic the row applies to.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_max: Option<u64>,
}

fn any_field() -> String {
    "any".to_string()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct M1File {
    #[serde(default)]
    pub m1: Vec<M1Row>,
    #[serde(default)]
    pub m2: Vec<M1Row>,
    #[serde(default)]
    pub m3: Vec<M1Row>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SporadicEntry {
    pub name: String,
    #[serde(with = "decimal::vec")]
    pub mu: Vec<PosInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalFixture {
    pub family: String,
    pub n: u32,
    pub q: u64,
    #[serde(with = "decimal::vec")]
    pub mu: Vec<PosInt>,
}

/// Everything the recognizer reads from data files.
#[derive(Debug, Clone, Default)]
pub struct DataSet {
    pub m1: M1File,
    pub sporadic: Vec<SporadicEntry>,
    /// Keyed by file name so that overrides replace built-ins.
    pub classical: BTreeMap<String, ClassicalFixture>,
}

fn parse<T: for<'de> Deserialize<'de>>(path: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Data {
        path: path.to_string(),
        message: e.to_string(),
    })
}

impl DataSet {
    pub fn builtin() -> Result<Self> {
        let mut classical = BTreeMap::new();
        for (name, text) in BUILTIN_CLASSICAL {
            classical.insert(name.to_string(), parse(name, text)?);
        }
        Ok(DataSet {
            m1: parse("m1_table.json", BUILTIN_M1)?,
            sporadic: parse("sporadic_spectra.json", BUILTIN_SPORADIC)?,
            classical,
        })
    }

    /// Built-in data overlaid with whatever files exist in `dir`.
    pub fn load(dir: Option<&Path>) -> Result<Self> {
        let mut data = Self::builtin()?;
        let Some(dir) = dir else { return Ok(data) };
        let read = |p: PathBuf| -> Result<Option<(String, String)>> {
            if p.is_file() {
                Ok(Some((p.display().to_string(), std::fs::read_to_string(&p)?)))
            } else {
                Ok(None)
            }
        };
        if let Some((path, text)) = read(dir.join("m1_table.json"))? {
            data.m1 = parse(&path, &text)?;
        }
        if let Some((path, text)) = read(dir.join("sporadic_spectra.json"))? {
            data.sporadic = parse(&path, &text)?;
        }
        let cdir = dir.join("classical_mu");
        if cdir.is_dir() {
            let mut entries: Vec<_> = std::fs::read_dir(&cdir)?
                .filter_map(|e| e.ok())
                .map(|e| e.path())
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect();
            entries.sort();
            for p in entries {
                let name = p.file_name().unwrap().to_string_lossy().to_string();
                let text = std::fs::read_to_string(&p)?;
                data.classical.insert(name, parse(&p.display().to_string(), &text)?);
            }
        }
        Ok(data)
    }

    /// Uses `dir` if given, else the environment variable, else built-ins.
    pub fn resolve(dir: Option<&Path>) -> Result<Self> {
        match dir {
            Some(d) => Self::load(Some(d)),
            None => match std::env::var_os(DATA_DIR_ENV) {
                Some(v) if !v.is_empty() => Self::load(Some(Path::new(&v))),
                _ => Self::builtin(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses() {
        let d = DataSet::builtin().unwrap();
        assert!(!d.m1.m1.is_empty());
        assert!(d.sporadic.iter().any(|s| s.name == "M11"));
        assert!(d.classical.contains_key("S24_3.json"));
    }

    #[test]
    fn overlay_replaces_files() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(
            dir.path().join("sporadic_spectra.json"),
            r#"[{"name":"X","mu":["2","3"]}]"#,
        )
        .unwrap();
        let d = DataSet::load(Some(dir.path())).unwrap();
        assert_eq!(d.sporadic.len(), 1);
        assert_eq!(d.sporadic[0].mu, vec![PosInt::from(2u32), PosInt::from(3u32)]);
        std::fs::write(dir.path().join("m1_table.json"), "{").unwrap();
        assert!(matches!(DataSet::load(Some(dir.path())), Err(Error::Data { .. })));
    }
}
