//! Verification suites and their reports.
//!
//! A suite is a list of independent checks. Checks run in parallel; the
//! report orders records by check id, so output is a function of the
//! configuration alone.

mod report;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::coeff::modp::is_prime;
use crate::daha::{selection, Convention, DahaError, OracleConfig, Verdict};

pub use report::{CheckRecord, Report, Summary, WitnessRecord, SCHEMA_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    DahaRelations,
    PresentationIso,
    Theta4,
    PowerSumCentral,
    PwComparison,
    HallTransport,
    Hecke,
    ThetaSeries,
    /// Deliberately false identities; every check is expected to fail.
    NegativeControl,
    All,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::DahaRelations,
        Suite::PresentationIso,
        Suite::Theta4,
        Suite::PowerSumCentral,
        Suite::PwComparison,
        Suite::HallTransport,
        Suite::Hecke,
        Suite::ThetaSeries,
        Suite::NegativeControl,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::DahaRelations => "daha-relations",
            Suite::PresentationIso => "presentation-iso",
            Suite::Theta4 => "theta4",
            Suite::PowerSumCentral => "power-sum-central",
            Suite::PwComparison => "pw-comparison",
            Suite::HallTransport => "hall-transport",
            Suite::Hecke => "hecke",
            Suite::ThetaSeries => "theta-series",
            Suite::NegativeControl => "negative-control",
            Suite::All => "all",
        }
    }

    /// Suites a run of `self` expands to. `all` leaves out the negative
    /// control.
    pub fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::ALL[..8].to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(VerifyError::Config(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub n: usize,
    pub m_max: u32,
    pub box_radius: u32,
    pub prime: u64,
    pub modular_trials: u32,
    pub seed: u64,
    pub format: Format,
    /// Adds per-check wall time; the report is then no longer reproducible.
    pub timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            suite: Suite::All,
            n: 2,
            m_max: 2,
            box_radius: 2,
            prime: 2_147_483_647,
            modular_trials: 3,
            seed: 0,
            format: Format::Json,
            timings: false,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.n < 2 {
            return Err(VerifyError::Config(format!("n = {} must be at least 2", self.n)));
        }
        if self.box_radius < 1 {
            return Err(VerifyError::Config("box radius must be at least 1".into()));
        }
        if self.m_max < 1 {
            return Err(VerifyError::Config("m_max must be at least 1".into()));
        }
        if self.prime <= 1 << 20 || !is_prime(self.prime) {
            return Err(VerifyError::Config(format!("{} is not a prime above 2^20", self.prime)));
        }
        Ok(())
    }

    pub fn oracle(&self) -> OracleConfig {
        OracleConfig {
            box_radius: self.box_radius,
            trials: self.modular_trials,
            prime: self.prime,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Daha(#[from] DahaError),
}

/// Outcome of one check before rendering.
pub(crate) enum Outcome {
    Oracle(Verdict),
    Exact(bool),
}

pub(crate) type Runner = Box<dyn Fn(&Context) -> Result<Outcome, String> + Send + Sync>;

pub(crate) struct Context {
    pub conv: Convention,
    pub oracle: OracleConfig,
}

pub(crate) struct Check {
    pub id: String,
    pub statement: String,
    pub params: BTreeMap<String, Value>,
    pub run: Runner,
}

/// Runs the configured suite.
pub fn run(cfg: &VerifyConfig) -> Result<Report, VerifyError> {
    cfg.validate()?;
    let sel = selection()?;
    let ctx = Context { conv: sel.convention, oracle: cfg.oracle() };
    let checks: Vec<Check> = cfg.suite.members().into_iter().flat_map(|s| suites::build(s, cfg)).collect();
    let mut records: Vec<CheckRecord> = checks
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let out = (c.run)(&ctx);
            let ms = start.elapsed().as_secs_f64() * 1e3;
            CheckRecord::new(c, out, cfg.timings.then_some(ms))
        })
        .collect();
    records.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(Report::new(cfg, sel.convention, sel.variants.clone(), records))
}

