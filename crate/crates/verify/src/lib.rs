//! Mechanical checks of the documented structural properties of the
//! alpha/beta invariants against concrete algebras.
//!
//! Each property P2.1 through T4.1 is a proved statement about solvable,
//! supersolvable, nilpotent or metabelian Lie algebras; E4.1 pins down the
//! characteristic-two reference algebra; OQ1, OQ2i and OQ2ii are open
//! questions probed for counterexamples rather than verified. A checker
//! first decides whether its hypotheses hold for the given algebra
//! (reporting `inapplicable` otherwise) and then tests the conclusion with
//! independently computed exact invariants, returning evidence lines with
//! every verdict. Failures embed a reproducible JSON document of the
//! algebra.

mod boundary;
mod context;
mod maxab;
mod nilpotent;
mod probes;
mod structural;

pub mod fuzz;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use liealg_core::{AnyAlgebra, Field, DEFAULT_BUDGET};

use context::Ctx;

/// Identifiers of the checkable properties. The tokens (P2.1, T4.1, ...)
/// are the stable names used in reports, on the command line and in JSON.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PropertyId {
    #[serde(rename = "P2.1")]
    P2_1,
    #[serde(rename = "L2.3")]
    L2_3,
    #[serde(rename = "T2.4")]
    T2_4,
    #[serde(rename = "L2.5")]
    L2_5,
    #[serde(rename = "C2.7")]
    C2_7,
    #[serde(rename = "C2.8")]
    C2_8,
    #[serde(rename = "P3.1")]
    P3_1,
    #[serde(rename = "C3.2")]
    C3_2,
    #[serde(rename = "P3.4")]
    P3_4,
    #[serde(rename = "T3.5")]
    T3_5,
    #[serde(rename = "C3.6")]
    C3_6,
    #[serde(rename = "T4.1")]
    T4_1,
    #[serde(rename = "E4.1")]
    E4_1,
    #[serde(rename = "OQ1")]
    OQ1,
    #[serde(rename = "OQ2i")]
    OQ2i,
    #[serde(rename = "OQ2ii")]
    OQ2ii,
}

impl PropertyId {
    pub const ALL: [PropertyId; 16] = [
        PropertyId::P2_1,
        PropertyId::L2_3,
        PropertyId::T2_4,
        PropertyId::L2_5,
        PropertyId::C2_7,
        PropertyId::C2_8,
        PropertyId::P3_1,
        PropertyId::C3_2,
        PropertyId::P3_4,
        PropertyId::T3_5,
        PropertyId::C3_6,
        PropertyId::T4_1,
        PropertyId::E4_1,
        PropertyId::OQ1,
        PropertyId::OQ2i,
        PropertyId::OQ2ii,
    ];

    pub fn token(self) -> &'static str {
        match self {
            PropertyId::P2_1 => "P2.1",
            PropertyId::L2_3 => "L2.3",
            PropertyId::T2_4 => "T2.4",
            PropertyId::L2_5 => "L2.5",
            PropertyId::C2_7 => "C2.7",
            PropertyId::C2_8 => "C2.8",
            PropertyId::P3_1 => "P3.1",
            PropertyId::C3_2 => "C3.2",
            PropertyId::P3_4 => "P3.4",
            PropertyId::T3_5 => "T3.5",
            PropertyId::C3_6 => "C3.6",
            PropertyId::T4_1 => "T4.1",
            PropertyId::E4_1 => "E4.1",
            PropertyId::OQ1 => "OQ1",
            PropertyId::OQ2i => "OQ2i",
            PropertyId::OQ2ii => "OQ2ii",
        }
    }

    /// Probes report evidence about open questions; their failures are
    /// counterexample candidates, not toolkit defects.
    pub fn is_probe(self) -> bool {
        matches!(self, PropertyId::OQ1 | PropertyId::OQ2i | PropertyId::OQ2ii)
    }
}

impl std::fmt::Display for PropertyId {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        out.write_str(self.token())
    }
}

#[derive(Debug, thiserror::Error)]
#[error("unknown property id: {0}")]
pub struct ParsePropertyError(pub String);

impl std::str::FromStr for PropertyId {
    type Err = ParsePropertyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PropertyId::ALL
            .into_iter()
            .find(|p| p.token().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| ParsePropertyError(s.to_string()))
    }
}

/// Verdict of one property on one algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
    ProbePass,
    ProbeFail,
}

impl std::fmt::Display for Status {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inapplicable => "inapplicable",
            Status::ProbePass => "probe-pass",
            Status::ProbeFail => "probe-fail",
        };
        out.write_str(text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub property: PropertyId,
    pub algebra: String,
    pub status: Status,
    pub details: Vec<String>,
}

/// Knobs for a verification run. `budget` caps each bounded enumeration
/// individually; `samples` sizes the random sampling in the existential
/// hypothesis of P3.1.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub budget: u64,
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            budget: DEFAULT_BUDGET,
            samples: 50,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub results: Vec<PropertyResult>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusCounts {
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
    pub probe_pass: usize,
    pub probe_fail: usize,
}

impl SuiteReport {
    pub fn counts(&self) -> StatusCounts {
        let mut c = StatusCounts::default();
        for r in &self.results {
            match r.status {
                Status::Pass => c.pass += 1,
                Status::Fail => c.fail += 1,
                Status::Inapplicable => c.inapplicable += 1,
                Status::ProbePass => c.probe_pass += 1,
                Status::ProbeFail => c.probe_fail += 1,
            }
        }
        c
    }
}

/// Evaluate every requested property on every algebra. Results come back
/// in input order (algebras outermost), and are byte-identical for any
/// thread count: the pairs are distributed over the rayon pool, but every
/// checker draws from a per-pair seed mixed from the suite seed and the
/// pair's input position, and every bounded computation gets its own
/// budget meter.
pub fn run_suite(
    algebras: &[AnyAlgebra],
    props: &[PropertyId],
    config: &SuiteConfig,
) -> SuiteReport {
    enum AnyCtx<'a> {
        Q(Ctx<'a, liealg_core::Rationals>),
        Fp(Ctx<'a, liealg_core::PrimeField>),
    }
    let contexts: Vec<AnyCtx> = algebras
        .iter()
        .map(|a| match a {
            AnyAlgebra::Q(l) => AnyCtx::Q(Ctx::new(l, config.budget)),
            AnyAlgebra::Fp(l) => AnyCtx::Fp(Ctx::new(l, config.budget)),
        })
        .collect();
    let pairs: Vec<(usize, usize)> = (0..algebras.len())
        .flat_map(|a| (0..props.len()).map(move |p| (a, p)))
        .collect();
    let results: Vec<PropertyResult> = pairs
        .par_iter()
        .map(|&(ai, pi)| {
            let seed = mix_seed(config.seed, ai as u64, pi as u64);
            match &contexts[ai] {
                AnyCtx::Q(ctx) => run_property(ctx, props[pi], seed, config.samples),
                AnyCtx::Fp(ctx) => run_property(ctx, props[pi], seed, config.samples),
            }
        })
        .collect();
    SuiteReport {
        seed: config.seed,
        results,
    }
}

pub(crate) type Check = (Status, Vec<String>);

pub(crate) fn pass(details: Vec<String>) -> Check {
    (Status::Pass, details)
}

pub(crate) fn fail(details: Vec<String>) -> Check {
    (Status::Fail, details)
}

pub(crate) fn inapplicable(msg: impl Into<String>) -> Check {
    (Status::Inapplicable, vec![msg.into()])
}

pub(crate) fn run_property<F: Field>(
    ctx: &Ctx<'_, F>,
    prop: PropertyId,
    seed: u64,
    samples: usize,
) -> PropertyResult {
    let (status, mut details) = match prop {
        PropertyId::P2_1 => structural::metabelian_centralizer_bound(ctx),
        PropertyId::L2_3 => structural::nilradical_centralizer_containment(ctx),
        PropertyId::T2_4 => structural::abelian_nilradical_exactness(ctx),
        PropertyId::L2_5 => structural::maximal_abelian_ideal_self_centralizing(ctx),
        PropertyId::C2_7 => structural::supersolvable_dimension_cap(ctx),
        PropertyId::C2_8 => structural::supersolvable_beta_floor(ctx),
        PropertyId::P3_1 => boundary::extension_dichotomy(ctx, seed, samples),
        PropertyId::C3_2 => boundary::codim_one_ideal_equalizer(ctx),
        PropertyId::P3_4 => boundary::abelian_maximal_subalgebra_criterion(ctx),
        PropertyId::T3_5 => boundary::near_full_alpha_classification(ctx),
        PropertyId::C3_6 => boundary::supersolvable_near_full_agreement(ctx),
        PropertyId::T4_1 => nilpotent::nilpotent_codim_three_agreement(ctx),
        PropertyId::E4_1 => nilpotent::char_two_reference_algebra(ctx),
        PropertyId::OQ1 => probes::supersolvable_codim_three_probe(ctx),
        PropertyId::OQ2i => probes::ideal_center_floor_probe(ctx),
        PropertyId::OQ2ii => probes::ideal_derived_cap_probe(ctx),
    };
    if matches!(status, Status::Fail | Status::ProbeFail) {
        details.push(format!("reproduce: {}", ctx.document_json()));
    }
    PropertyResult {
        property: prop,
        algebra: ctx.l.name().to_string(),
        status,
        details,
    }
}

/// Stable seed mixer (splitmix64 steps), so per-pair randomness depends
/// only on the suite seed and the pair's input position.
pub(crate) fn mix_seed(base: u64, a: u64, b: u64) -> u64 {
    fn step(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9E3779B97F4A7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }
    step(step(step(base) ^ a) ^ b)
}
