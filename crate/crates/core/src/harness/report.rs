use serde::{Deserialize, Serialize};

use super::config::SweepConfig;
use crate::betti::{BettiTable, ConjectureReport};
use crate::error::Result;
use crate::syzygy::{APatternCheck, ColonComparison, ConclusionCheck, KernelSweepPoint};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A stated closed form disagrees with the computed value in a way that
    /// is accounted for; does not affect the exit code.
    Deviation,
    /// Reported only (exploratory runs).
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub status: Status,
    pub value: String,
    pub expected: String,
    pub millis: u64,
}

impl CheckRecord {
    pub fn compare(
        check: &str,
        value: impl ToString,
        expected: impl ToString,
        millis: u64,
    ) -> Self {
        let (value, expected) = (value.to_string(), expected.to_string());
        let status = if value == expected {
            Status::Pass
        } else {
            Status::Fail
        };
        CheckRecord {
            check: check.to_string(),
            status,
            value,
            expected,
            millis,
        }
    }

    pub fn flag(check: &str, ok: bool, millis: u64) -> Self {
        Self::compare(check, ok, true, millis)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialBetti {
    pub computed: BettiTable,
    pub formula: BettiTable,
}

#[derive(Clone, Debug, Serialize)]
pub struct SyzygyDetails {
    pub scale_constants: Vec<String>,
    pub colon: Vec<ColonComparison>,
    pub a_pattern: APatternCheck,
    pub phi_kernel: Vec<KernelSweepPoint>,
    pub conclusion: ConclusionCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InverseSystemRow {
    pub ideal: String,
    /// `HF(R/I, j)` for `j = 0, 1, ...`.
    pub direct: Vec<u64>,
    pub fatpoints: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceRow {
    pub config: String,
    pub divisor: Vec<i64>,
    pub effective: bool,
    pub h0: u64,
    pub fatpoint_dimension: u64,
    pub proposition: i64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PointDetails {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert_values: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomial_betti: Option<MonomialBetti>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<ConjectureReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub syzygies: Option<SyzygyDetails>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub inverse_system: Vec<InverseSystemRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub surface: Vec<SurfaceRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointReport {
    pub n: usize,
    pub l: u32,
    pub k: u32,
    pub exploratory: bool,
    pub records: Vec<CheckRecord>,
    pub details: PointDetails,
}

impl PointReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub config: SweepConfig,
    pub passed: bool,
    pub points: Vec<PointReport>,
}

impl VerificationReport {
    pub fn new(config: SweepConfig, points: Vec<PointReport>) -> Self {
        let passed = points
            .iter()
            .all(|p| p.exploratory || p.failures().next().is_none());
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            config,
            passed,
            points,
        }
    }

    /// `0` when every asserted check passed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    /// `(l, k, check)` of every failing asserted record.
    pub fn failures(&self) -> Vec<(u32, u32, &CheckRecord)> {
        self.points
            .iter()
            .filter(|p| !p.exploratory)
            .flat_map(|p| p.failures().map(move |r| (p.l, p.k, r)))
            .collect()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// One line per record: `l,k,check,status,value,expected,millis`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| crate::error::Error::Malformed(e.to_string());
        w.write_record(["l", "k", "check", "status", "value", "expected", "millis"])
            .map_err(io)?;
        for p in &self.points {
            for r in &p.records {
                let status = serde_json::to_value(r.status)?;
                w.write_record([
                    p.l.to_string(),
                    p.k.to_string(),
                    r.check.clone(),
                    status.as_str().unwrap_or_default().to_string(),
                    r.value.clone(),
                    r.expected.clone(),
                    r.millis.to_string(),
                ])
                .map_err(io)?;
            }
        }
        let bytes = w
            .into_inner()
            .map_err(|e| crate::error::Error::Malformed(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}
