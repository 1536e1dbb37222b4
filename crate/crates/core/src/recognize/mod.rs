//! Recognition of a finite simple group from a set of element orders.
//!
//! The branches run in a fixed order (sporadic, alternating, bounded Lie
//! rank, large-rank classical) and the first one that confirms a group
//! wins. Every decision is logged in the outcome's trail.

mod alternating;
mod bounded;
mod large;
pub mod tables;

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::arith::{PosInt, DEFAULT_PRIMALITY_ROUNDS};
use crate::data::DataSet;
use crate::error::{Error, Result};
use crate::spectra::{minimal_spectrum, Family, FixtureGenerator, GeneratorRegistry, GroupName, MinSpec};
use tables::{M1Table, RatioTable};

pub use large::LargeRankVerdict;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognizeConfig {
    /// Replaces the atom cap `C(M)` of the large-rank branch.
    pub cap_override: Option<u64>,
    pub primality_rounds: u32,
    /// Worker threads for candidate evaluation; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Largest Lie rank handled by the bounded-rank branch.
    pub max_bounded_rank: u32,
    /// Half-width of the integer window scanned around polynomial roots.
    pub root_window: u32,
    /// Data directory; falls back to `SPECTRE_DATA_DIR`, then the built-in
    /// tables.
    pub data_dir: Option<PathBuf>,
}

impl Default for RecognizeConfig {
    fn default() -> Self {
        RecognizeConfig {
            cap_override: None,
            primality_rounds: DEFAULT_PRIMALITY_ROUNDS,
            threads: None,
            max_bounded_rank: 12,
            root_window: crate::arith::DEFAULT_ROOT_WINDOW,
            data_dir: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrailEntry {
    pub stage: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognitionOutcome {
    pub result: Option<GroupName>,
    pub twin: Option<GroupName>,
    pub trail: Vec<TrailEntry>,
}

impl RecognitionOutcome {
    pub fn is_empty(&self) -> bool {
        self.result.is_none()
    }
}

/// Ordered log of decisions.
#[derive(Debug, Default, Clone)]
pub struct Trail {
    entries: Vec<TrailEntry>,
}

impl Trail {
    pub fn note(&mut self, stage: &str, message: impl Into<String>) {
        self.entries.push(TrailEntry {
            stage: stage.to_string(),
            message: message.into(),
        });
    }

    pub fn entries(&self) -> &[TrailEntry] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<TrailEntry> {
        self.entries
    }
}

/// The other member of an isospectral pair: `S_6(2)` and `O^+_8(2)`, or
/// `O_7(3)` and `O^+_8(3)`.
pub fn isospectral_twin(g: &GroupName) -> Option<GroupName> {
    let GroupName::Classical { family, n, q } = g else {
        return None;
    };
    if q.k != 1 {
        return None;
    }
    let p = u64::try_from(&q.p).ok()?;
    let other = match (family, n, p) {
        (Family::S, 3, 2) => (Family::OPlus, 4),
        (Family::OPlus, 4, 2) => (Family::S, 3),
        (Family::OOdd, 3, 3) => (Family::OPlus, 4),
        (Family::OPlus, 4, 3) => (Family::OOdd, 3),
        _ => return None,
    };
    Some(GroupName::classical(other.0, other.1, q.clone()))
}

/// Loaded tables plus the spectrum generators.
pub struct Recognizer {
    pub config: RecognizeConfig,
    pub m1: M1Table,
    pub ratio: RatioTable,
    pub registry: GeneratorRegistry,
    sporadic: Vec<(String, MinSpec)>,
    fixtures: Vec<(GroupName, MinSpec)>,
}

impl std::fmt::Debug for Recognizer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Recognizer")
            .field("config", &self.config)
            .field("registry", &self.registry)
            .field("sporadic", &self.sporadic.len())
            .field("fixtures", &self.fixtures.len())
            .finish()
    }
}

impl Recognizer {
    pub fn new(data: &DataSet, config: RecognizeConfig) -> Result<Self> {
        let m1 = M1Table::from_file(&data.m1)?;
        let fixtures = FixtureGenerator::from_fixtures(data.classical.values())?;
        let fixture_list = fixtures.entries().to_vec();
        let sporadic = data
            .sporadic
            .iter()
            .map(|e| (e.name.clone(), MinSpec::new(e.mu.iter().cloned())))
            .collect();
        Ok(Recognizer {
            config,
            m1,
            ratio: RatioTable::default(),
            registry: GeneratorRegistry::with_defaults(fixtures),
            sporadic,
            fixtures: fixture_list,
        })
    }

    /// Built-in tables, or the configured data directory.
    pub fn from_config(config: RecognizeConfig) -> Result<Self> {
        let data = DataSet::resolve(config.data_dir.as_deref())?;
        Recognizer::new(&data, config)
    }

    pub fn fixtures(&self) -> &[(GroupName, MinSpec)] {
        &self.fixtures
    }

    pub(crate) fn fixture_for(&self, g: &GroupName) -> Option<&MinSpec> {
        self.fixtures.iter().find(|(h, _)| h == g).map(|(_, m)| m)
    }

    pub fn recognize(&self, m: &[PosInt]) -> Result<RecognitionOutcome> {
        if m.is_empty() {
            return Err(Error::Precondition("input set is empty".into()));
        }
        if m.iter().any(|x| x == &PosInt::from(0u32)) {
            return Err(Error::Precondition("input contains 0".into()));
        }
        let run = || self.run(m);
        match self.config.threads {
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n.max(1))
                    .build()
                    .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
                Ok(pool.install(run))
            }
            None => Ok(run()),
        }
    }

    fn run(&self, m: &[PosInt]) -> RecognitionOutcome {
        let mut trail = Trail::default();
        let mu = minimal_spectrum(m);
        trail.note("input", format!("|M| = {}, |mu| = {}, max = {}", m.len(), mu.len(), mu.max().unwrap()));
        let found = self
            .sporadic_scan(&mu, &mut trail)
            .or_else(|| self.recognize_alternating(&mu, &mut trail))
            .or_else(|| {
                (1..=self.config.max_bounded_rank).find_map(|k| self.recognize_bounded_rank(&mu, k, &mut trail))
            })
            .map(|g| vec![g])
            .or_else(|| {
                let v = self.classify_large_rank(&mu, &mut trail);
                (!v.groups.is_empty()).then_some(v.groups)
            });
        match found {
            Some(groups) => {
                let result = groups[0].clone();
                let twin = groups.get(1).cloned().or_else(|| isospectral_twin(&result));
                if let Some(t) = &twin {
                    trail.note("verdict", format!("{result} is isospectral with {t}"));
                }
                trail.note("verdict", format!("recognized {result}"));
                RecognitionOutcome {
                    result: Some(result),
                    twin,
                    trail: trail.into_entries(),
                }
            }
            None => {
                trail.note("verdict", "empty: no branch confirmed a group");
                RecognitionOutcome {
                    result: None,
                    twin: None,
                    trail: trail.into_entries(),
                }
            }
        }
    }

    fn sporadic_scan(&self, mu: &MinSpec, trail: &mut Trail) -> Option<GroupName> {
        let hit = self.sporadic.iter().find(|(_, s)| s == mu);
        match hit {
            Some((name, _)) => {
                trail.note("sporadic", format!("mu equals the stored spectrum of {name}"));
                Some(GroupName::Sporadic { name: name.clone() })
            }
            None => {
                trail.note("sporadic", format!("no match among {} stored groups", self.sporadic.len()));
                None
            }
        }
    }
}

/// `recognize(M)` with the configured tables.
pub fn recognize(m: &[PosInt], config: &RecognizeConfig) -> Result<RecognitionOutcome> {
    Recognizer::from_config(config.clone())?.recognize(m)
}
