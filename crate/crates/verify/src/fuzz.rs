//! Seeded counterexample search for the open-question probes over the
//! random algebra generators.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use liealg_catalog::random::{random_metabelian_split, random_nilpotent, random_supersolvable};
use liealg_catalog::CatalogError;
use liealg_core::{LieAlgebra, PrimeField};

use crate::context::Ctx;
use crate::{mix_seed, run_property, PropertyId, Status};

/// The open questions that can be fuzzed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FuzzQuestion {
    #[serde(rename = "OQ1")]
    OQ1,
    #[serde(rename = "OQ2i")]
    OQ2i,
    #[serde(rename = "OQ2ii")]
    OQ2ii,
}

impl FuzzQuestion {
    pub const ALL: [FuzzQuestion; 3] = [FuzzQuestion::OQ1, FuzzQuestion::OQ2i, FuzzQuestion::OQ2ii];

    pub fn property(self) -> PropertyId {
        match self {
            FuzzQuestion::OQ1 => PropertyId::OQ1,
            FuzzQuestion::OQ2i => PropertyId::OQ2i,
            FuzzQuestion::OQ2ii => PropertyId::OQ2ii,
        }
    }
}

impl std::fmt::Display for FuzzQuestion {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        out.write_str(self.property().token())
    }
}

impl std::str::FromStr for FuzzQuestion {
    type Err = crate::ParsePropertyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FuzzQuestion::ALL
            .into_iter()
            .find(|q| q.property().token().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| crate::ParsePropertyError(s.to_string()))
    }
}

/// A seeded random algebra family to draw trials from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum GeneratorSpec {
    Nilpotent { dim: usize, p: u64 },
    Supersolvable { dim: usize, p: u64 },
    MetabelianSplit { dim: usize, split: usize, p: u64 },
}

impl GeneratorSpec {
    pub fn build(&self, seed: u64) -> Result<LieAlgebra<PrimeField>, CatalogError> {
        match *self {
            GeneratorSpec::Nilpotent { dim, p } => random_nilpotent(dim, p, seed),
            GeneratorSpec::Supersolvable { dim, p } => {
                random_supersolvable(dim, p, seed).map(|(l, _)| l)
            }
            GeneratorSpec::MetabelianSplit { dim, split, p } => {
                random_metabelian_split(dim, split, p, seed)
            }
        }
    }
}

impl std::fmt::Display for GeneratorSpec {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            GeneratorSpec::Nilpotent { dim, p } => write!(out, "nilpotent(dim={dim},p={p})"),
            GeneratorSpec::Supersolvable { dim, p } => {
                write!(out, "supersolvable(dim={dim},p={p})")
            }
            GeneratorSpec::MetabelianSplit { dim, split, p } => {
                write!(out, "metabelian-split(dim={dim},split={split},p={p})")
            }
        }
    }
}

/// The default sweep for a question: the algebra classes its hypotheses
/// can hit. OQ1 excludes characteristic two by its own statement; the
/// OQ2 probes include it, since that is where the reference algebra
/// already shows unusual behaviour.
pub fn default_generators(question: FuzzQuestion) -> Vec<GeneratorSpec> {
    let mut out = Vec::new();
    match question {
        FuzzQuestion::OQ1 => {
            for &p in &[3u64, 5, 7] {
                for dim in 4..=7 {
                    out.push(GeneratorSpec::Supersolvable { dim, p });
                }
            }
        }
        FuzzQuestion::OQ2i | FuzzQuestion::OQ2ii => {
            for &p in &[2u64, 3, 5] {
                for dim in 4..=7 {
                    out.push(GeneratorSpec::Supersolvable { dim, p });
                    out.push(GeneratorSpec::Nilpotent { dim, p });
                }
            }
        }
    }
    out
}

/// A trial that answered the question negatively: the algebra, its seed,
/// and the probe's evidence, including a reproducible document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzHit {
    pub trial: u64,
    pub seed: u64,
    pub generator: String,
    pub algebra: String,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FuzzOutcome {
    pub question: FuzzQuestion,
    pub trials: u64,
    pub base_seed: u64,
    /// How the trials resolved, keyed by status name. Trials whose
    /// generator could not produce an algebra count as generator-failed.
    pub statuses: BTreeMap<String, u64>,
    pub counterexample: Option<FuzzHit>,
}

/// Run up to `trials` seeded trials round-robin over the generators,
/// stopping at the first probe-fail. Fully deterministic in
/// (`generators`, `question`, `trials`, `base_seed`).
pub fn counterexample_search(
    generators: &[GeneratorSpec],
    question: FuzzQuestion,
    trials: u64,
    base_seed: u64,
    budget: u64,
    samples: usize,
) -> FuzzOutcome {
    let mut statuses: BTreeMap<String, u64> = BTreeMap::new();
    if generators.is_empty() {
        return FuzzOutcome {
            question,
            trials: 0,
            base_seed,
            statuses,
            counterexample: None,
        };
    }
    for t in 0..trials {
        let spec = &generators[(t % generators.len() as u64) as usize];
        let seed = mix_seed(base_seed, t, 0x66757a7a);
        let Ok(l) = spec.build(seed) else {
            *statuses.entry("generator-failed".into()).or_default() += 1;
            continue;
        };
        let ctx = Ctx::new(&l, budget);
        let result = run_property(&ctx, question.property(), mix_seed(seed, 1, 2), samples);
        *statuses.entry(result.status.to_string()).or_default() += 1;
        if result.status == Status::ProbeFail {
            return FuzzOutcome {
                question,
                trials: t + 1,
                base_seed,
                statuses,
                counterexample: Some(FuzzHit {
                    trial: t,
                    seed,
                    generator: spec.to_string(),
                    algebra: result.algebra,
                    details: result.details,
                }),
            };
        }
    }
    FuzzOutcome {
        question,
        trials,
        base_seed,
        statuses,
        counterexample: None,
    }
}
