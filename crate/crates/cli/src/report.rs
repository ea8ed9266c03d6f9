//! Machine-readable run reports. The layout is described by
//! `docs/report.schema.json`.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use skewalg::sampling::SampledCheck;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
    /// Polynomials, witnesses and other evidence, rendered as strings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<BTreeMap<String, String>>,
}

impl Check {
    pub fn new(name: &str, status: Status, details: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            status,
            details: details.into(),
            certificate: None,
        }
    }

    pub fn pass(name: &str, details: impl Into<String>) -> Self {
        Check::new(name, Status::Pass, details)
    }

    pub fn fail(name: &str, details: impl Into<String>) -> Self {
        Check::new(name, Status::Fail, details)
    }

    /// Pass when `ok`, otherwise fail, with the same details.
    pub fn verdict(name: &str, ok: bool, details: impl Into<String>) -> Self {
        Check::new(name, if ok { Status::Pass } else { Status::Fail }, details)
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.certificate
            .get_or_insert_with(BTreeMap::new)
            .insert(key.to_string(), value.to_string());
        self
    }

    /// Summary of a sampled run; failures carry the seed, index and inputs
    /// needed to rebuild the sample.
    pub fn from_sampled(s: &SampledCheck) -> Self {
        let summary = format!("{} of {} passed, {} skipped", s.passed, s.attempts, s.skipped);
        if s.ok() {
            return Check::pass(&s.name, summary);
        }
        let details = match s.failures.first() {
            Some(f) => format!(
                "{summary}; first failure: {} (reproduce with seed {} index {} inputs [{}])",
                f.reason,
                f.seed,
                f.index,
                f.inputs.join("; ")
            ),
            None => format!(
                "{summary}; skip ratio {:.3} above the allowed {:.3}",
                s.skip_ratio(),
                s.max_skip_ratio
            ),
        };
        Check::fail(&s.name, details).with("failures", s.failures.len())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub seed: u64,
    /// Wall-clock seconds per check group, plus `total`.
    pub timings: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Self {
        Report {
            command: command.to_string(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            seed,
            timings: BTreeMap::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    /// Runs one group of checks, timing it. An error becomes a failed check
    /// named after the group.
    pub fn run<F>(&mut self, group: &str, body: F)
    where
        F: FnOnce() -> skewalg::Result<Vec<Check>>,
    {
        let start = Instant::now();
        match body() {
            Ok(checks) => self.checks.extend(checks),
            Err(e) => self.checks.push(Check::fail(group, e.to_string())),
        }
        self.timings.insert(group.to_string(), start.elapsed().as_secs_f64());
    }

    /// Sorts checks by name and records the total time.
    pub fn finish(&mut self, started: Instant) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self.timings.insert("total".into(), started.elapsed().as_secs_f64());
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.name.as_str())
            .collect()
    }

    pub fn success(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", c.status, c.name, c.details)?;
            for (k, v) in c.certificate.iter().flatten() {
                writeln!(f, "    {k}: {v}")?;
            }
        }
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        write!(
            f,
            "{}: {} passed, {} failed, {} skipped",
            self.command,
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skip)
        )
    }
}
