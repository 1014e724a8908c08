use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

use crate::daha::{Convention, Tier, VariantReport, Verdict};

use super::{Check, Outcome, VerifyConfig};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessRecord {
    pub monomial: Vec<i32>,
    pub image: String,
    pub tier: Tier,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    /// The identity under test, as an equation.
    pub statement: String,
    pub params: BTreeMap<String, Value>,
    /// `equal_on_box`, `distinct`, `exact_match`, `mismatch` or `error`.
    pub verdict: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl CheckRecord {
    pub(crate) fn new(c: &Check, out: Result<Outcome, String>, ms: Option<f64>) -> Self {
        let (verdict, passed, witness, error) = match out {
            Ok(Outcome::Oracle(Verdict::EqualOnBox)) => ("equal_on_box", true, None, None),
            Ok(Outcome::Oracle(Verdict::Distinct(w))) => (
                "distinct",
                false,
                Some(WitnessRecord { monomial: w.monomial, image: w.image.to_string(), tier: w.tier }),
                None,
            ),
            Ok(Outcome::Exact(true)) => ("exact_match", true, None, None),
            Ok(Outcome::Exact(false)) => ("mismatch", false, None, None),
            Err(e) => ("error", false, None, Some(e)),
        };
        Self {
            id: c.id.clone(),
            statement: c.statement.clone(),
            params: c.params.clone(),
            verdict: verdict.into(),
            passed,
            witness,
            error,
            wall_time_ms: ms,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub config: VerifyConfig,
    /// Representation convention chosen by the gate.
    pub convention: Convention,
    pub convention_search: Vec<VariantReport>,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub(crate) fn new(
        cfg: &VerifyConfig,
        convention: Convention,
        convention_search: Vec<VariantReport>,
        checks: Vec<CheckRecord>,
    ) -> Self {
        let passed = checks.iter().filter(|c| c.passed).count();
        let summary = Summary { total: checks.len(), passed, failed: checks.len() - passed };
        Self { schema_version: SCHEMA_VERSION, config: cfg.clone(), convention, convention_search, checks, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(
            out,
            "suite {}  n={} m_max={} box={} prime={} trials={} seed={}",
            c.suite, c.n, c.m_max, c.box_radius, c.prime, c.modular_trials, c.seed
        );
        let _ = writeln!(out, "convention: {}", self.convention);
        for r in &self.checks {
            let tag = if r.passed { "PASS" } else { "FAIL" };
            let _ = write!(out, "{tag} {} [{}] {}", r.id, r.verdict, r.statement);
            if let Some(ms) = r.wall_time_ms {
                let _ = write!(out, " ({ms:.1} ms)");
            }
            out.push('\n');
            if let Some(w) = &r.witness {
                let _ = writeln!(out, "    witness X^{:?} ↦ {}", w.monomial, w.image);
            }
            if let Some(e) = &r.error {
                let _ = writeln!(out, "    error: {e}");
            }
        }
        let s = &self.summary;
        let _ = writeln!(out, "{} checks, {} passed, {} failed", s.total, s.passed, s.failed);
        out
    }
}
