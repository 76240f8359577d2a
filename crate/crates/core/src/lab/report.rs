use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use super::corpus::SuiteConfig;
use crate::error::Result;

pub const SCHEMA_VERSION: &str = "1";

/// One checked claim.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub id: String,
    /// Short name of the statement the case instantiates.
    pub anchor: String,
    pub claim: String,
    /// First 16 hex digits of the SHA-256 of the input text.
    pub input_hash: String,
    pub computed: Value,
    pub expected: Value,
    pub pass: bool,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: String,
    pub suite: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<SuiteConfig>,
    pub cases: Vec<CaseRecord>,
    pub passed: usize,
    pub failed: usize,
}

impl SuiteReport {
    pub fn new(suite: &str, cases: Vec<CaseRecord>) -> Self {
        let passed = cases.iter().filter(|c| c.pass).count();
        SuiteReport {
            schema: SCHEMA_VERSION.to_string(),
            suite: suite.to_string(),
            seed: None,
            config: None,
            failed: cases.len() - passed,
            passed,
            cases,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| !c.pass)
    }

    /// The same report with every timing set to zero.
    pub fn without_timings(&self) -> SuiteReport {
        let mut r = self.clone();
        for c in &mut r.cases {
            c.wall_ms = 0.0;
        }
        r
    }

    pub fn to_json_pretty(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

pub fn input_hash(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// What a case closure returns: computed value, expected value, verdict.
pub(crate) type Outcome = Result<(Value, Value, bool)>;

pub(crate) struct CaseSpec<'a> {
    pub id: String,
    pub anchor: &'a str,
    pub claim: String,
    pub input: String,
}

/// Runs and times one case; an error becomes a failed record.
pub(crate) fn run_case(spec: CaseSpec<'_>, f: impl FnOnce() -> Outcome) -> CaseRecord {
    let start = Instant::now();
    let outcome = f();
    let wall_ms = start.elapsed().as_secs_f64() * 1000.0;
    let (computed, expected, pass) = match outcome {
        Ok(t) => t,
        Err(e) => (serde_json::json!({ "error": e.to_string() }), Value::Null, false),
    };
    CaseRecord {
        id: spec.id,
        anchor: spec.anchor.to_string(),
        claim: spec.claim,
        input_hash: input_hash(&spec.input),
        computed,
        expected,
        pass,
        wall_ms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_is_stable() {
        assert_eq!(input_hash("abc"), "ba7816bf8f01cfea");
    }

    #[test]
    fn errors_fail_the_case() {
        let spec = CaseSpec {
            id: "x".into(),
            anchor: "a",
            claim: "c".into(),
            input: String::new(),
        };
        let r = run_case(spec, || Err(crate::Error::ZeroIdeal));
        assert!(!r.pass);
        assert!(r.computed["error"].as_str().unwrap().contains("zero ideal"));
        let report = SuiteReport::new("s", vec![r]);
        assert_eq!((report.passed, report.failed), (0, 1));
    }
}
