//! Machine-readable run reports.
//!
//! A report carries the command echo, its parameters, the emitted records
//! and the named checks. Timing is optional and off by default so that two
//! runs with the same inputs produce identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Error;
use crate::lincode::{Limits, WeightDistribution};
use crate::puncture::{PunctureSummary, PunctureWitness};
use crate::qcode::{Check, CheckStatus, Param, QuantumCodeRecord};

/// Process exit status for a finished run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Usage,
    Capped,
    Mismatch,
    ProvenAbsent,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Usage => 2,
            Outcome::Capped => 3,
            Outcome::Mismatch => 4,
            Outcome::ProvenAbsent => 5,
        }
    }

    pub fn from_error(e: &Error) -> Outcome {
        match e {
            Error::CapExceeded { .. } | Error::NotFound { proven: false, .. } | Error::LengthCapExceeded { .. } => {
                Outcome::Capped
            }
            Error::NotFound { proven: true, .. } => Outcome::ProvenAbsent,
            Error::WitnessSearchFailed(_) | Error::NotSelfOrthogonal | Error::InexactParameters => Outcome::Mismatch,
            _ => Outcome::Usage,
        }
    }
}

/// A classical code with its closed-form and computed parameters.
#[derive(Debug, Clone, Serialize)]
pub struct ClassicalRecord {
    pub label: String,
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub d: Option<Param>,
    pub k_formula: Option<u64>,
    pub d_formula: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight_distribution: Option<WeightDistribution>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<Vec<Vec<u8>>>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Record {
    Classical(ClassicalRecord),
    Quantum(QuantumCodeRecord),
    Puncture(PunctureSummary),
    Witness(PunctureWitness),
    Matrix(MatrixDump),
}

/// A matrix as canonical element indices, one row per entry.
#[derive(Debug, Clone, Serialize)]
pub struct MatrixDump {
    pub label: String,
    pub q: u32,
    pub rows: Vec<Vec<u8>>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct CapStatus {
    pub cap: u64,
    pub strict: bool,
    /// Some quantity was only bounded because the cap was reached.
    pub capped: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub records: Vec<Record>,
    pub checks: Vec<Check>,
    pub cap: CapStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
    #[serde(skip)]
    failure: Option<Outcome>,
}

impl RunReport {
    pub fn new(command: impl Into<String>, limits: &Limits) -> Self {
        RunReport {
            command: command.into(),
            params: BTreeMap::new(),
            records: Vec::new(),
            checks: Vec::new(),
            cap: CapStatus {
                cap: limits.cap,
                strict: limits.strict,
                capped: false,
            },
            error: None,
            timing_ms: None,
            failure: None,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.params.insert(
            key.to_string(),
            serde_json::to_value(value).expect("plain values serialize"),
        );
        self
    }

    /// Adds a quantum record, hoisting its checks into the report.
    pub fn push_quantum(&mut self, rec: QuantumCodeRecord) {
        let tag = rec.params();
        for c in &rec.checks {
            self.checks.push(Check {
                name: format!("{tag} {}", c.name),
                ..c.clone()
            });
        }
        if !rec.k.exact || !rec.d.exact {
            self.cap.capped = true;
        }
        self.records.push(Record::Quantum(rec));
    }

    pub fn push_puncture(&mut self, summary: PunctureSummary) {
        self.checks.extend(summary.checks.iter().cloned());
        self.records.push(Record::Puncture(summary));
    }

    pub fn fail_with(&mut self, e: &Error) {
        self.error = Some(e.to_string());
        let o = Outcome::from_error(e);
        if o == Outcome::Capped {
            self.cap.capped = true;
        }
        self.failure = Some(o);
    }

    pub fn outcome(&self) -> Outcome {
        if let Some(o) = self.failure {
            return o;
        }
        if self.checks.iter().any(|c| c.status == CheckStatus::Fail) {
            Outcome::Mismatch
        } else if self.cap.capped || self.checks.iter().any(|c| c.status == CheckStatus::Inconclusive) {
            Outcome::Capped
        } else {
            Outcome::Pass
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.command);
        for r in &self.records {
            match r {
                Record::Classical(c) => {
                    let d = c.d.map_or("?".to_string(), |d| d.to_string());
                    let _ = writeln!(s, "{}: [{},{},{}]_{}", c.label, c.n, c.k, d, c.q);
                    if let Some(wd) = &c.weight_distribution {
                        let tag = if wd.exact { "" } else { " (partial)" };
                        let _ = writeln!(s, "  weights{tag}:");
                        for (w, &a) in wd.counts.iter().enumerate().filter(|(_, &a)| a > 0) {
                            let _ = writeln!(s, "    {w}: {a}");
                        }
                    }
                    if let Some(g) = &c.generator {
                        let _ = writeln!(s, "  generator:");
                        for row in g {
                            let line: Vec<String> = row.iter().map(u8::to_string).collect();
                            let _ = writeln!(s, "    {}", line.join(" "));
                        }
                    }
                }
                Record::Quantum(q) => {
                    let pure = match q.pure {
                        Some(true) => "pure",
                        Some(false) => "impure",
                        None => "purity unknown",
                    };
                    let slack = q.singleton_slack.map_or("-".into(), |x| x.to_string());
                    let mds = if q.mds { ", MDS" } else { "" };
                    let _ = writeln!(s, "{} {pure}, singleton slack {slack}{mds}", q.params());
                    if let Some(b) = q.bounds {
                        let _ = writeln!(s, "  guaranteed: k >= {}, d >= {}", b.k_at_least, b.d_at_least);
                    }
                }
                Record::Puncture(p) => {
                    let _ = writeln!(s, "puncture code: [{},{}]_{}", p.pcode.n, p.pcode.k, p.pcode.q);
                    for sc in &p.known_subcodes {
                        let _ = writeln!(s, "  contains {} [{},{}]", sc.label, sc.code.n, sc.code.k);
                    }
                }
                Record::Matrix(m) => {
                    let _ = writeln!(s, "{} over GF({}):", m.label, m.q);
                    for row in &m.rows {
                        let line: Vec<String> = row.iter().map(u8::to_string).collect();
                        let _ = writeln!(s, "    {}", line.join(" "));
                    }
                }
                Record::Witness(w) => {
                    let x: Vec<String> = w.x.iter().map(u8::to_string).collect();
                    let _ = writeln!(s, "witness of weight {}: {}", w.r, x.join(" "));
                }
            }
        }
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Inconclusive => "capped",
            };
            let _ = writeln!(
                s,
                "  [{status}] {}: expected {}, got {}",
                c.name, c.expected, c.observed
            );
        }
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error: {e}");
        }
        if let Some(t) = self.timing_ms {
            let _ = writeln!(s, "time: {t} ms");
        }
        s
    }

    /// One row per quantum record.
    pub fn to_csv(&self) -> String {
        let mut s =
            String::from("source,construction,q,n,k,k_exact,d,d_exact,pure,singleton_slack,mds,params,status\n");
        for r in &self.records {
            let Record::Quantum(q) = r else { continue };
            let params: Vec<String> = q.provenance.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let status = if q.any_check_failed() {
                "fail"
            } else if q.all_checks_pass() {
                "pass"
            } else {
                "capped"
            };
            let construction = serde_json::to_value(q.construction).expect("enum serializes");
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{},{},{},{},{},{},{}",
                q.provenance.source,
                construction.as_str().unwrap_or_default(),
                q.q,
                q.n,
                q.k.value,
                q.k.exact,
                q.d.value,
                q.d.exact,
                q.pure.map_or("".into(), |p| p.to_string()),
                q.singleton_slack.map_or("".into(), |x| x.to_string()),
                q.mds,
                params.join(" "),
                status
            );
        }
        s
    }
}
