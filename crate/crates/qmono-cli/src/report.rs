//! Verification reports.
//!
//! A report is an ordered list of named checks with pass/fail status.
//! Stdout is byte-deterministic for fixed flags and seed; wall-clock
//! time goes to stderr only.

use std::time::Duration;

/// One named check.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

/// Result of one verification suite.
#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl Report {
    pub fn new(suite: &str) -> Report {
        Report {
            suite: suite.to_string(),
            checks: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    /// Record a check outcome.
    pub fn check(&mut self, name: &str, pass: bool) {
        self.checks.push(Check { name: name.to_string(), pass });
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }
}

/// Render reports as plain text (the md format), one line per check.
pub fn render_text(reports: &[Report]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!("suite {}\n", r.suite));
        for c in &r.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("  [{}] {}\n", status, c.name));
        }
        out.push_str(&format!(
            "  {} passed, {} failed\n",
            r.passed(),
            r.failed()
        ));
    }
    let total_pass: usize = reports.iter().map(Report::passed).sum();
    let total_fail: usize = reports.iter().map(Report::failed).sum();
    out.push_str(&format!(
        "total: {} passed, {} failed\n",
        total_pass, total_fail
    ));
    out
}

/// Render reports as CSV rows suite,check,status.
pub fn render_csv(reports: &[Report]) -> String {
    let mut out = String::from("suite,check,status\n");
    for r in reports {
        for c in &r.checks {
            out.push_str(&format!(
                "{},{},{}\n",
                r.suite,
                c.name,
                if c.pass { "pass" } else { "fail" }
            ));
        }
    }
    out
}

/// Render reports as a JSON document.
pub fn render_json(reports: &[Report]) -> String {
    let suites: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            serde_json::json!({
                "suite": r.suite,
                "checks": r.checks.iter().map(|c| {
                    serde_json::json!({
                        "name": c.name,
                        "status": if c.pass { "pass" } else { "fail" },
                    })
                }).collect::<Vec<_>>(),
                "passed": r.passed(),
                "failed": r.failed(),
            })
        })
        .collect();
    let doc = serde_json::json!({
        "suites": suites,
        "all_pass": reports.iter().all(Report::all_pass),
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    text
}

// ---- tests ----
