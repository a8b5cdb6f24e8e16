//! Verification reports and their text, CSV and JSON renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub use crate::gradings::Identity as Check;

/// A printed value that disagrees with recomputation. Reported, never failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag {
    pub name: String,
    pub printed: String,
    pub recomputed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub scope: String,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<Flag>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(suite: &str, scope: impl Into<String>, checks: Vec<Check>, flags: Vec<Flag>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        VerificationReport { suite: suite.into(), scope: scope.into(), checks, flags, pass }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn render_reports(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => {
            if reports.len() == 1 {
                serde_json::to_string(&reports[0]).expect("serializable")
            } else {
                serde_json::to_string(reports).expect("serializable")
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["suite", "name", "expected", "actual", "pass"]).expect("in-memory write");
            for r in reports {
                for c in &r.checks {
                    let pass = if c.pass { "true" } else { "false" };
                    w.write_record([r.suite.as_str(), &c.name, &c.expected, &c.actual, pass])
                        .expect("in-memory write");
                }
                for f in &r.flags {
                    let name = format!("erratum: {}", f.name);
                    w.write_record([r.suite.as_str(), &name, &f.printed, &f.recomputed, "flagged"])
                        .expect("in-memory write");
                }
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let status = if r.pass { "PASS" } else { "FAIL" };
                let failed = r.failures().count();
                let _ = writeln!(
                    out,
                    "== {} [{}] {} checks, {} failed. scope: {}",
                    r.suite,
                    status,
                    r.checks.len(),
                    failed,
                    r.scope
                );
                for c in &r.checks {
                    let mark = if c.pass { "ok  " } else { "FAIL" };
                    let _ = writeln!(out, "  {mark} {}: expected {}, got {}", c.name, c.expected, c.actual);
                }
                for f in &r.flags {
                    let _ = writeln!(out, "  FLAG {}: printed {}, recomputed {}", f.name, f.printed, f.recomputed);
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        VerificationReport::new(
            "demo",
            "rank <= 2",
            vec![
                Check::eq("a, b", 1, 1),
                Check::eq("quote \"x\"", 2, 3),
            ],
            vec![Flag { name: "cell".into(), printed: "7/6".into(), recomputed: "6/7".into() }],
        )
    }

    #[test]
    fn overall_pass_is_conjunction() {
        let r = sample();
        assert!(!r.pass);
        assert_eq!(r.failures().count(), 1);
        let ok = VerificationReport::new("x", "", vec![Check::eq("a", 1, 1)], vec![]);
        assert!(ok.pass);
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let s = render_reports(std::slice::from_ref(&r), Format::Json);
        let back: VerificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_quotes_fields() {
        let s = render_reports(&[sample()], Format::Csv);
        let mut rd = csv::Reader::from_reader(s.as_bytes());
        let rows: Vec<csv::StringRecord> = rd.records().map(|r| r.unwrap()).collect();
        assert_eq!(rows.len(), 3);
        assert_eq!(&rows[0][1], "a, b");
        assert_eq!(&rows[1][1], "quote \"x\"");
        assert_eq!(&rows[2][4], "flagged");
    }

    #[test]
    fn text_lists_every_check() {
        let s = render_reports(&[sample()], Format::Text);
        assert!(s.contains("[FAIL]"));
        assert!(s.contains("FLAG cell: printed 7/6, recomputed 6/7"));
    }
}
