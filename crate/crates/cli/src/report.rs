//! Report files: JSON for everything, CSV for the flat tables.

use std::path::Path;

use hochlie::verify::{AlgebraSummary, CheckRecord, SuiteReport};
use hochlie::{HH1Presentation, LieAlgebra};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const REPORT_SCHEMA: &str = "hochlie-report/1";

/// Lie structure constants `[b_i, b_j] = Σ c b_k` for `i < j`, as `[i, j, k, c]`.
fn structure_constants(l: &LieAlgebra) -> Vec<[u64; 4]> {
    l.structure_constants().into_iter().map(|(i, j, k, c)| [i as u64, j as u64, k as u64, c as u64]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub algebra: String,
    pub der: usize,
    pub ider: usize,
    pub hh1: usize,
    pub center_dim: usize,
    pub lie_structure_constants: Vec<[u64; 4]>,
}

impl PresentationReport {
    pub fn new(algebra: &str, h: &HH1Presentation) -> Self {
        PresentationReport {
            algebra: algebra.to_string(),
            der: h.der.dim(),
            ider: h.ider.dim(),
            hh1: h.dim(),
            center_dim: h.center.algebra.dim(),
            lie_structure_constants: structure_constants(&h.lie),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieReport {
    pub algebra: String,
    pub dim: usize,
    pub simple: Option<bool>,
    pub verdict: String,
    pub certificate: String,
    pub structure_constants: Vec<[u64; 4]>,
}

impl LieReport {
    pub fn new(algebra: &str, l: &LieAlgebra, verdict: &hochlie::SimplicityVerdict) -> Self {
        LieReport {
            algebra: algebra.to_string(),
            dim: l.dim(),
            simple: verdict.is_simple(),
            verdict: verdict.label().to_string(),
            certificate: hochlie::verify::describe_verdict(verdict),
            structure_constants: structure_constants(l),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFileV1 {
    pub schema: String,
    pub tool_version: String,
    pub command: String,
    pub rng_seed: u64,
    pub records: Vec<CheckRecord>,
    pub summaries: Vec<AlgebraSummary>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub presentations: Vec<PresentationReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lie: Vec<LieReport>,
}

impl ReportFileV1 {
    pub fn new(command: &str, rng_seed: u64) -> Self {
        ReportFileV1 {
            schema: REPORT_SCHEMA.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            rng_seed,
            records: Vec::new(),
            summaries: Vec::new(),
            presentations: Vec::new(),
            lie: Vec::new(),
        }
    }

    pub fn from_suite(rng_seed: u64, r: SuiteReport) -> Self {
        let mut out = Self::new("verify", rng_seed);
        out.records = r.records;
        out.summaries = r.summaries;
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    /// The check records when there are any, otherwise one row per summary.
    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| CliError::Io(format!("csv: {e}"));
        if !self.records.is_empty() {
            w.write_record(["suite", "algebra", "claim", "expected", "computed", "status", "timing_ms", "certificate"])
                .map_err(err)?;
            for r in &self.records {
                let status = serde_json::to_value(r.status).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
                w.write_record([
                    r.suite.as_str(),
                    &r.algebra,
                    &r.claim,
                    &r.expected,
                    &r.computed,
                    &status,
                    &r.timing_ms.map(|t| t.to_string()).unwrap_or_default(),
                    r.certificate.as_deref().unwrap_or(""),
                ])
                .map_err(err)?;
            }
        } else {
            w.write_record(SUMMARY_COLUMNS).map_err(err)?;
            for s in &self.summaries {
                w.write_record(summary_row(s)).map_err(err)?;
            }
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| CliError::Io(format!("csv: {e}")))
    }

    pub fn write(&self, path: Option<&Path>, csv: bool) -> Result<(), CliError> {
        let text = if csv { self.to_csv()? } else { self.to_json() };
        match path {
            Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

const SUMMARY_COLUMNS: [&str; 18] = [
    "algebra",
    "field_char",
    "dim",
    "center_dim",
    "radical_dim",
    "radical_layers",
    "socle_dim",
    "blocks",
    "local",
    "symmetric",
    "uniserial",
    "der",
    "der1",
    "ider",
    "hh1",
    "lie_verdict",
    "lie_certificate",
    "error",
];

fn summary_row(s: &AlgebraSummary) -> Vec<String> {
    let opt = |x: Option<String>| x.unwrap_or_default();
    let a = s.assoc.as_ref();
    let h = s.hh1.as_ref();
    vec![
        s.algebra.clone(),
        s.field_char.to_string(),
        opt(a.map(|a| a.dim.to_string())),
        opt(a.map(|a| a.center_dim.to_string())),
        opt(a.map(|a| a.radical_dim.to_string())),
        opt(a.map(|a| a.radical_layers.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))),
        opt(a.map(|a| a.socle_dim.to_string())),
        opt(a.and_then(|a| a.blocks.map(|b| b.to_string()))),
        opt(a.map(|a| a.local.to_string())),
        opt(a.map(|a| a.symmetric.is_symmetric().to_string())),
        opt(a.map(|a| a.uniserial.to_string())),
        opt(h.map(|h| h.der.to_string())),
        opt(h.map(|h| h.der1.to_string())),
        opt(h.map(|h| h.ider.to_string())),
        opt(h.map(|h| h.hh1.to_string())),
        opt(h.map(|h| h.lie_verdict.clone())),
        opt(h.map(|h| h.lie_certificate.clone())),
        s.error.clone().unwrap_or_default(),
    ]
}
