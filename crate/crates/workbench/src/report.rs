//! Verification reports: one entry per check, exact expected and computed
//! values as strings, pass iff they are equal. The checks section carries
//! no timestamps, so reports are byte-deterministic for a fixed
//! configuration; wall time lives next to it.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    /// Self-describing statement of what the check pins down.
    pub statement: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Check {
    pub fn compare(
        id: impl Into<String>,
        statement: impl Into<String>,
        expected: impl ToString,
        computed: impl ToString,
    ) -> Check {
        let expected = expected.to_string();
        let computed = computed.to_string();
        Check {
            id: id.into(),
            statement: statement.into(),
            pass: expected == computed,
            expected,
            computed,
        }
    }

    pub fn boolean(id: impl Into<String>, statement: impl Into<String>, pass: bool) -> Check {
        Check {
            id: id.into(),
            statement: statement.into(),
            expected: "true".into(),
            computed: pass.to_string(),
            pass,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
    pub wall_ms: u128,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, checks: Vec<Check>, wall_ms: u128) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        let failed = checks.len() - passed;
        VerificationReport {
            suite: suite.into(),
            checks,
            passed,
            failed,
            wall_ms,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "[{}] {} — {} (expected {}, computed {})\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                c.statement,
                c.expected,
                c.computed
            ));
        }
        out.push_str(&format!(
            "suite {}: {} passed, {} failed ({} ms)\n",
            self.suite, self.passed, self.failed, self.wall_ms
        ));
        out
    }

    /// CSV with every field quoted, so exact rationals survive spreadsheet
    /// import as text.
    pub fn to_csv(&self) -> String {
        fn quote(s: &str) -> String {
            format!("\"{}\"", s.replace('"', "\"\""))
        }
        let mut out = String::from("id,statement,expected,computed,pass\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                quote(&c.id),
                quote(&c.statement),
                quote(&c.expected),
                quote(&c.computed),
                quote(if c.pass { "true" } else { "false" })
            ));
        }
        out
    }
}
