use std::str::FromStr;

use num_integer::Integer;

use super::{Family, GroupName, MinSpec};
use crate::arith::{prime_power_decompose, PosInt, PrimePower};
use crate::data::ClassicalFixture;
use crate::error::{Error, Result};

/// Size bound per unit of Lie rank used when a generator declares none.
pub const DEFAULT_SIZE_FACTOR: usize = 60;

/// Produces a set `ν(G)` with `μ(G) ⊆ ν(G) ⊆ ω(G)` for the groups it knows.
pub trait SpectrumGenerator: Send + Sync {
    fn name(&self) -> &str;

    /// Groups of Lie rank `lie_rank` over the field of order `q` that this
    /// generator covers.
    fn groups(&self, lie_rank: u32, q: &PrimePower) -> Vec<GroupName>;

    fn generate(&self, group: &GroupName) -> Option<Vec<PosInt>>;

    /// Upper bound on `|μ(G)|` at this Lie rank, if known.
    fn size_bound(&self, _lie_rank: u32) -> Option<usize> {
        None
    }
}

/// `PSL_2(q)`: `ν = {p, (q-1)/d, (q+1)/d}` with `d = (2, q-1)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Psl2Generator;

impl SpectrumGenerator for Psl2Generator {
    fn name(&self) -> &str {
        "psl2"
    }

    fn groups(&self, lie_rank: u32, q: &PrimePower) -> Vec<GroupName> {
        if lie_rank == 1 && q.value() >= PosInt::from(4u32) {
            vec![GroupName::classical(Family::L, 2, q.clone())]
        } else {
            Vec::new()
        }
    }

    fn generate(&self, group: &GroupName) -> Option<Vec<PosInt>> {
        match group {
            GroupName::Classical {
                family: Family::L,
                n: 2,
                q,
            } => {
                let qv = q.value();
                let d = if qv.is_odd() { 2u32 } else { 1 };
                Some(vec![q.p.clone(), (&qv - 1u32) / d, (&qv + 1u32) / d])
            }
            _ => None,
        }
    }

    fn size_bound(&self, lie_rank: u32) -> Option<usize> {
        (lie_rank == 1).then_some(3)
    }
}

/// Serves minimal spectra read from fixture files.
#[derive(Debug, Clone, Default)]
pub struct FixtureGenerator {
    entries: Vec<(GroupName, MinSpec)>,
}

impl FixtureGenerator {
    pub fn new(entries: Vec<(GroupName, MinSpec)>) -> Self {
        FixtureGenerator { entries }
    }

    pub fn from_fixtures<'a, I: IntoIterator<Item = &'a ClassicalFixture>>(
        fixtures: I,
    ) -> Result<Self> {
        let mut entries = Vec::new();
        for f in fixtures {
            let family = Family::from_str(&f.family)?;
            let q = prime_power_decompose(&PosInt::from(f.q)).ok_or_else(|| Error::Data {
                path: format!("{}{}({})", f.family, f.n, f.q),
                message: "q is not a prime power".into(),
            })?;
            let name = GroupName::classical(family, f.n, q);
            entries.push((name, MinSpec::new(f.mu.iter().cloned())));
        }
        Ok(FixtureGenerator { entries })
    }

    pub fn entries(&self) -> &[(GroupName, MinSpec)] {
        &self.entries
    }
}

impl SpectrumGenerator for FixtureGenerator {
    fn name(&self) -> &str {
        "fixtures"
    }

    fn groups(&self, lie_rank: u32, q: &PrimePower) -> Vec<GroupName> {
        self.entries
            .iter()
            .filter(|(g, _)| g.lie_rank() == Some(lie_rank) && g.field() == Some(q))
            .map(|(g, _)| g.clone())
            .collect()
    }

    fn generate(&self, group: &GroupName) -> Option<Vec<PosInt>> {
        self.entries
            .iter()
            .find(|(g, _)| g == group)
            .map(|(_, m)| m.elements().to_vec())
    }

    fn size_bound(&self, lie_rank: u32) -> Option<usize> {
        self.entries
            .iter()
            .filter(|(g, _)| g.lie_rank() == Some(lie_rank))
            .map(|(_, m)| m.len())
            .max()
    }
}

/// Generators consulted in registration order.
#[derive(Default)]
pub struct GeneratorRegistry {
    generators: Vec<Box<dyn SpectrumGenerator>>,
}

impl GeneratorRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// The analytic `PSL_2` generator plus the given fixtures.
    pub fn with_defaults(fixtures: FixtureGenerator) -> Self {
        let mut r = Self::new();
        r.register_generator(Box::new(Psl2Generator));
        r.register_generator(Box::new(fixtures));
        r
    }

    pub fn register_generator(&mut self, g: Box<dyn SpectrumGenerator>) {
        self.generators.push(g);
    }

    pub fn generate_nu(&self, group: &GroupName) -> Result<Vec<PosInt>> {
        self.generators
            .iter()
            .find_map(|g| g.generate(group))
            .ok_or_else(|| Error::NoGenerator(group.to_string()))
    }

    pub fn generate_mu(&self, group: &GroupName) -> Result<MinSpec> {
        self.generate_nu(group).map(MinSpec::new)
    }

    pub fn groups(&self, lie_rank: u32, q: &PrimePower) -> Vec<GroupName> {
        let mut out: Vec<GroupName> = Vec::new();
        for g in &self.generators {
            for name in g.groups(lie_rank, q) {
                if !out.contains(&name) {
                    out.push(name);
                }
            }
        }
        out
    }

    /// `f(k)`: the largest declared bound, or the default when a generator
    /// declares none.
    pub fn size_bound(&self, lie_rank: u32) -> usize {
        let default = DEFAULT_SIZE_FACTOR * lie_rank.max(1) as usize;
        self.generators
            .iter()
            .map(|g| g.size_bound(lie_rank).unwrap_or(default))
            .max()
            .unwrap_or(default)
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

impl std::fmt::Debug for GeneratorRegistry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list()
            .entries(self.generators.iter().map(|g| g.name()))
            .finish()
    }
}
