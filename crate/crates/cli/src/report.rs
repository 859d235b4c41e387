//! Verification reports and their text, CSV and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Item {
    pub desc: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: usize,
    pub max_degree: usize,
    pub field: String,
    /// False for prime fields, where a rank can drop.
    pub exact: bool,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: Params,
    pub items: Vec<Item>,
    pub pass: bool,
    pub version: String,
}

impl VerificationReport {
    pub fn new(check: &str, params: Params) -> Self {
        VerificationReport {
            check: check.to_string(),
            params,
            items: Vec::new(),
            pass: true,
            version: VERSION.to_string(),
        }
    }

    /// Records an item that passes when the two renderings agree.
    pub fn compare(
        &mut self,
        desc: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        self.pass &= pass;
        self.items.push(Item {
            desc: desc.into(),
            expected,
            actual,
            pass,
        });
    }

    pub fn failed_items(&self) -> impl Iterator<Item = &Item> {
        self.items.iter().filter(|i| !i.pass)
    }
}

/// All reports of one run. `timings` is kept apart from the compared payload.
#[derive(Clone, Debug, Serialize)]
pub struct ReportSet {
    pub version: String,
    pub pass: bool,
    pub reports: Vec<VerificationReport>,
    pub timings: BTreeMap<String, f64>,
}

impl ReportSet {
    pub fn new(reports: Vec<VerificationReport>, timings: BTreeMap<String, f64>) -> Self {
        ReportSet {
            version: VERSION.to_string(),
            pass: reports.iter().all(|r| r.pass),
            reports,
            timings,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,desc,expected,actual,pass\n");
        for r in &self.reports {
            for i in &r.items {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    csv_field(&r.check),
                    csv_field(&i.desc),
                    csv_field(&i.expected),
                    csv_field(&i.actual),
                    i.pass
                );
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let p = &r.params;
            let _ = writeln!(
                out,
                "{} (n={}, max degree {}, field {}{}): {}",
                r.check,
                p.n,
                p.max_degree,
                p.field,
                if p.exact { "" } else { ", probabilistic" },
                if r.pass { "PASS" } else { "FAIL" }
            );
            for i in &r.items {
                if i.pass {
                    let _ = writeln!(out, "  ok    {}: {}", i.desc, i.actual);
                } else {
                    let _ = writeln!(
                        out,
                        "  FAIL  {}: expected {}, got {}",
                        i.desc, i.expected, i.actual
                    );
                }
            }
        }
        let _ = writeln!(out, "overall: {}", if self.pass { "PASS" } else { "FAIL" });
        out
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
