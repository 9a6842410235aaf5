//! JSON and CSV serializations of a suite run.

use std::collections::BTreeSet;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::verify::{EvaluationFailure, SuiteOutcome, SuiteSummary, VerificationReport};

pub const SCHEMA_VERSION: &str = "1";

/// Top-level JSON document. Floats go through serde_json, which writes the
/// shortest representation that parses back to the same bits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub generated_at: String,
    pub suite: SuiteSummary,
    pub reports: Vec<VerificationReport>,
    pub failures: Vec<EvaluationFailure>,
}

impl ReportDocument {
    pub fn new(outcome: &SuiteOutcome, generated_at: String) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            generated_at,
            suite: outcome.summary.clone(),
            reports: outcome.reports.clone(),
            failures: outcome.failures.clone(),
        }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// Current UTC time, RFC 3339.
pub fn timestamp() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

/// Shortest round-trip form in scientific notation.
pub fn fmt_float(v: f64) -> String {
    format!("{v:e}")
}

/// One row per report × candidate.
///
/// Columns: `case_id,candidate,<params>,lhs,lhs_err,rhs,rhs_err,residual,verdict`
/// where `<params>` is the sorted union of parameter names; cells of
/// parameters a case does not have are empty.
pub fn write_csv<W: Write>(reports: &[VerificationReport], out: W) -> csv::Result<()> {
    let names: BTreeSet<&str> = reports.iter().flat_map(|r| r.point.keys().map(String::as_str)).collect();
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["case_id", "candidate"];
    header.extend(names.iter().copied());
    header.extend(["lhs", "lhs_err", "rhs", "rhs_err", "residual", "verdict"]);
    w.write_record(&header)?;
    for r in reports {
        for c in &r.candidates {
            let mut row = vec![r.case_id.clone(), c.label.label().to_string()];
            for n in &names {
                row.push(r.point.get(*n).map(|v| fmt_float(*v)).unwrap_or_default());
            }
            row.extend([
                fmt_float(r.lhs_value),
                fmt_float(r.lhs_err),
                fmt_float(c.rhs_value),
                fmt_float(c.rhs_err),
                fmt_float(c.residual),
                r.verdict.to_string(),
            ]);
            w.write_record(&row)?;
        }
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::Candidate;
    use crate::verify::{summarize, CandidateResult, Point, Verdict};

    fn sample() -> SuiteOutcome {
        let mut point = Point::new();
        point.insert("c".into(), 0.1);
        let reports = vec![VerificationReport {
            case_id: "thm1.2-sin".into(),
            point,
            lhs_value: 0.1 + 0.2,
            lhs_err: 1e-300,
            candidates: vec![
                CandidateResult { label: Candidate::Printed, rhs_value: 1.0 / 3.0, rhs_err: 0.0, residual: 0.0333, pass: false },
                CandidateResult { label: Candidate::Derived, rhs_value: 0.3, rhs_err: 5e-324, residual: 5.5e-17, pass: true },
            ],
            verdict: Verdict::MatchDerivedOnly,
            tol: 1e-7,
            gating: true,
        }];
        let summary = summarize(1, &reports, &[]);
        SuiteOutcome { reports, failures: vec![], summary }
    }

    #[test]
    fn json_round_trips_bit_for_bit() {
        let doc = ReportDocument::new(&sample(), "2026-01-01T00:00:00Z".into());
        let back = ReportDocument::from_json(&doc.to_json().unwrap()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.reports[0].lhs_value.to_bits(), (0.1f64 + 0.2).to_bits());
        assert!(doc.to_json().unwrap().contains("\"MATCH_DERIVED_ONLY\""));
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write_csv(&sample().reports, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "case_id,candidate,c,lhs,lhs_err,rhs,rhs_err,residual,verdict");
        assert_eq!(lines.len(), 3);
        assert!(lines[2].starts_with("thm1.2-sin,derived,1e-1,"));
        let lhs: f64 = lines[1].split(',').nth(3).unwrap().parse().unwrap();
        assert_eq!(lhs, 0.1 + 0.2);
    }
}
